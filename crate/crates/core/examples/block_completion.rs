//! Completing every block to a clique and comparing complement spectra.

use blockspec::graph::{block_decomposition, Graph};
use blockspec::transforms::complete_blocks;
use blockspec::verify::{check_block_completion, Spectrum};

fn main() -> blockspec::Result<()> {
    // C4 - C4 sharing vertex 3, with a tail so that two cut vertices share no block
    let b = Graph::from_edge_list(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 3),
            (5, 7),
        ],
    )?;
    let c = complete_blocks(&b)?;
    println!("blocks {:?}", block_decomposition(&b)?.blocks);
    println!("completion adds {} edges", c.edge_count() - b.edge_count());
    for spectrum in [Spectrum::Adjacency, Spectrum::Distance] {
        println!(
            "{spectrum:>9}: B^c {:.10}  C_B^c {:.10}",
            spectrum.radius(&b)?,
            spectrum.radius(&c)?
        );
    }

    for spectrum in [Spectrum::Adjacency, Spectrum::Distance] {
        let r = check_block_completion(spectrum, 7)?;
        println!(
            "{}: {} instances, {} ties, passed {}",
            r.theorem,
            r.checked,
            r.ties,
            r.passed()
        );
    }
    Ok(())
}
