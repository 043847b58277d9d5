//! Moving an end clique to another cut vertex, guided by the Perron vector.

use blockspec::families::path_graph;
use blockspec::graph::{block_decomposition, to_edge_list};
use blockspec::spectral::{spectral_radius, DEFAULT_TOL};
use blockspec::transforms::move_clique;
use blockspec::MatrixKind;

fn main() -> blockspec::Result<()> {
    let g = path_graph(6)?;
    let kind = MatrixKind::ComplementAdjacency;
    let before = spectral_radius(&g, kind, DEFAULT_TOL)?;
    let bd = block_decomposition(&g)?;
    let x = &before.vector;
    println!("λ1(A(P6^c)) = {:.10}", before.value);

    for (clique, v) in bd.end_blocks() {
        for &w in &bd.cut_vertices {
            if w == v || clique.contains(&w) || x[v] < x[w] {
                continue;
            }
            let moved = move_clique(&g, clique, v, w)?;
            let after = spectral_radius(&moved, kind, DEFAULT_TOL)?;
            println!(
                "move {clique:?} from {v} to {w}: x(v) = {:.4} >= x(w) = {:.4}, λ1 {:.10} -> {:.10}",
                x[v], x[w], before.value, after.value
            );
            print!("{}", to_edge_list(&moved));
        }
    }
    Ok(())
}
