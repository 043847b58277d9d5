use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::report::{classify, InstanceRecord, ReportBuilder, Status, TheoremReport};
use super::{ensure_order, Spectrum, EPSILON, MAX_CLIQUE_TREE_ORDER};
use crate::error::{Error, Result};
use crate::families::random_clique_tree;
use crate::graph::{
    are_isomorphic, block_decomposition, diameter, has_nonadjacent_cut_vertices, to_edge_list,
    Graph,
};
use crate::spectral::{spectral_radius, DEFAULT_TOL};
use crate::transforms::move_clique;

/// Draws `trials` random clique trees with two nonadjacent cut vertices,
/// orders uniform in `5..=n_max`. Returns the accepted graphs and the number
/// of rejected draws.
pub fn sample_move_instances(
    trials: usize,
    seed: u64,
    n_max: usize,
) -> Result<(Vec<Graph>, usize)> {
    if n_max < 5 {
        return Err(Error::Infeasible(format!(
            "clique trees with two nonadjacent cut vertices need n >= 5, got {n_max}"
        )));
    }
    ensure_order(n_max, MAX_CLIQUE_TREE_ORDER, "clique tree")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut accepted = Vec::with_capacity(trials);
    let mut rejected = 0;
    while accepted.len() < trials {
        if rejected > 100 * trials.max(1) {
            return Err(Error::Infeasible("too many samples rejected".into()));
        }
        let n = rng.random_range(5..=n_max);
        let s = rng.random_range(3..n);
        let g = random_clique_tree(n, s, rng.next_u64())?;
        if has_nonadjacent_cut_vertices(&g) {
            accepted.push(g);
        } else {
            rejected += 1;
        }
    }
    Ok((accepted, rejected))
}

/// Moves every end clique of each sampled clique tree to every cut vertex
/// allowed by the Perron-entry condition and checks that the spectral radius
/// of the complement matrix does not decrease.
///
/// Adjacency: moves with `x(v) >= x(w)`. Distance: moves with
/// `x(w) >= x(v)`; moves whose result has diameter below 3 are skipped,
/// since the distance matrix of the complement is then undefined or outside
/// the identity's range. A tie with `w != v` is accepted only if the moved
/// graph is isomorphic to the original.
pub fn check_clique_moves(
    spectrum: Spectrum,
    trials: usize,
    seed: u64,
    n_max: usize,
) -> Result<TheoremReport> {
    let (graphs, rejected) = sample_move_instances(trials, seed, n_max)?;
    let per_graph: Vec<(Vec<InstanceRecord>, usize)> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| moves_of(spectrum, i, g))
        .collect::<Result<_>>()?;
    let skipped: usize = per_graph.iter().map(|(_, k)| k).sum();
    let records: Vec<InstanceRecord> = per_graph.into_iter().flat_map(|(r, _)| r).collect();
    let id = match spectrum {
        Spectrum::Adjacency => "L2.1",
        Spectrum::Distance => "L4.2",
    };
    let mut b = ReportBuilder::new(id, EPSILON)
        .param("trials", trials)
        .param("n_max", n_max)
        .param("matrix", spectrum.to_string());
    b.checked = graphs.len();
    b.excluded = rejected;
    b.policy = "every end clique K with end cut vertex v, every cut vertex w (w = v or w outside K) meeting the Perron-entry condition".into();
    b.notes.push(format!("{} moves compared", records.len()));
    if skipped > 0 {
        b.notes.push(format!(
            "{skipped} moves skipped: moved graph has diameter < 3"
        ));
    }
    Ok(b.finish(records))
}

fn moves_of(spectrum: Spectrum, index: usize, g: &Graph) -> Result<(Vec<InstanceRecord>, usize)> {
    let pair = spectral_radius(g, spectrum.matrix_kind(), DEFAULT_TOL)?;
    let x = &pair.vector;
    let bd = block_decomposition(g)?;
    let graph = to_edge_list(g);
    let mut records = Vec::new();
    let mut skipped = 0;
    for (block, v) in bd.end_blocks() {
        for &w in &bd.cut_vertices {
            if w != v && block.contains(&w) {
                continue;
            }
            let admissible = match spectrum {
                Spectrum::Adjacency => x[v] >= x[w],
                Spectrum::Distance => x[w] >= x[v],
            };
            if !admissible {
                continue;
            }
            let moved = move_clique(g, block, v, w)?;
            if spectrum == Spectrum::Distance && diameter(&moved).is_none_or(|d| d < 3) {
                skipped += 1;
                continue;
            }
            let after = spectrum.radius(&moved)?;
            let status = classify(pair.value, after, EPSILON, || {
                w == v || are_isomorphic(&moved, g)
            });
            let detail = format!(
                "K={block:?} v={v} w={w} x(v)={:.6} x(w)={:.6}{}",
                x[v],
                x[w],
                if status == Status::Tie && w != v {
                    " moved graph isomorphic to original"
                } else {
                    ""
                }
            );
            records.push(InstanceRecord {
                instance: index,
                comparison: if w == v {
                    "identity".into()
                } else {
                    "move".into()
                },
                graph: graph.clone(),
                lhs: pair.value,
                rhs: after,
                status,
                detail,
            });
        }
    }
    Ok((records, skipped))
}
