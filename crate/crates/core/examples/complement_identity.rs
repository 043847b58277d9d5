//! `D(G^c) = J - I + A(G)` once the diameter of `G` exceeds 3.

use blockspec::families::path_graph;
use blockspec::graph::diameter;
use blockspec::spectral::{complement_identity_matrix, distance_matrix};
use blockspec::verify::check_complement_identity;

fn main() -> blockspec::Result<()> {
    for n in [4, 5, 6] {
        let p = path_graph(n)?;
        let d = distance_matrix(&p.complement())?;
        let j = complement_identity_matrix(&p);
        let differing = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| d[(u, v)] != j[(u, v)])
            .count();
        println!(
            "P{n}: diameter {:?}, {differing} entries differ",
            diameter(&p)
        );
    }

    let report = check_complement_identity(6)?;
    println!(
        "all connected graphs up to 6 vertices: {} checked, {} excluded, {} violations",
        report.checked,
        report.excluded,
        report.violations.len()
    );
    for note in &report.notes {
        println!("  {note}");
    }
    Ok(())
}
