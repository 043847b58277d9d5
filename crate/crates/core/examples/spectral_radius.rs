//! Spectral radii of the four matrices the crate knows about.

use blockspec::families::{complete_graph, path_graph};
use blockspec::spectral::{format_significant, spectral_radius, DEFAULT_TOL};
use blockspec::MatrixKind;

fn main() -> blockspec::Result<()> {
    let k5 = complete_graph(5)?;
    let p3 = path_graph(3)?;
    let p6 = path_graph(6)?;

    let show = |name: &str, g, kind: MatrixKind| -> blockspec::Result<()> {
        let pair = spectral_radius(g, kind, DEFAULT_TOL)?;
        println!(
            "{name:>3} {kind:<10} λ1 = {}  (residual {:.1e})",
            format_significant(pair.value, 12),
            pair.residual
        );
        Ok(())
    };
    show("K5", &k5, MatrixKind::Adjacency)?;
    show("K5", &k5, MatrixKind::Distance)?;
    show("P3", &p3, MatrixKind::Distance)?;
    show("P6", &p6, MatrixKind::ComplementAdjacency)?;
    show("P6", &p6, MatrixKind::ComplementDistance)?;

    // the complement of P3 is disconnected
    println!(
        "P3 cdistance: {}",
        spectral_radius(&p3, MatrixKind::ComplementDistance, DEFAULT_TOL).unwrap_err()
    );

    let pair = spectral_radius(&p6, MatrixKind::ComplementAdjacency, DEFAULT_TOL)?;
    let v: Vec<String> = pair.vector.iter().map(|x| format!("{x:.4}")).collect();
    println!("Perron vector of A(P6^c): [{}]", v.join(", "));
    Ok(())
}
