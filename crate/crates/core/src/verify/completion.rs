use rayon::prelude::*;

use super::report::{classify, InstanceRecord, ReportBuilder, TheoremReport};
use super::{ensure_order, Spectrum, EPSILON, MAX_CONNECTED_ORDER};
use crate::error::Result;
use crate::families::enumerate_connected_graphs;
use crate::graph::{are_isomorphic, has_cut_vertices_in_distinct_blocks, to_edge_list, Graph};
use crate::transforms::complete_blocks;

/// Compares every admissible connected graph `B` of order at most `n_max`
/// with its block completion `C_B`. For adjacency the claim is
/// `λ(A(C_B^c)) <= λ(A(B^c))`, for distance `λ(D(B^c)) <= λ(D(C_B^c))`;
/// a tie is accepted only when `B ≅ C_B`.
pub fn check_block_completion(spectrum: Spectrum, n_max: usize) -> Result<TheoremReport> {
    ensure_order(n_max, MAX_CONNECTED_ORDER, "connected graph")?;
    let all: Vec<Graph> = (1..=n_max).flat_map(enumerate_connected_graphs).collect();
    let total = all.len();
    let graphs: Vec<Graph> = all
        .into_iter()
        .filter(has_cut_vertices_in_distinct_blocks)
        .collect();
    let records = graphs
        .par_iter()
        .enumerate()
        .map(|(i, b)| {
            let c = complete_blocks(b)?;
            let rb = spectrum.radius(b)?;
            let rc = spectrum.radius(&c)?;
            let (lhs, rhs) = match spectrum {
                Spectrum::Adjacency => (rc, rb),
                Spectrum::Distance => (rb, rc),
            };
            Ok(InstanceRecord {
                instance: i,
                comparison: "completion".into(),
                graph: to_edge_list(b),
                lhs,
                rhs,
                status: classify(lhs, rhs, EPSILON, || are_isomorphic(b, &c)),
                detail: format!(
                    "{} edges added by completion",
                    c.edge_count() - b.edge_count()
                ),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut builder = ReportBuilder::new(
        match spectrum {
            Spectrum::Adjacency => "L3.2",
            Spectrum::Distance => "L5.1",
        },
        EPSILON,
    )
    .param("family", "block_graph")
    .param("matrix", spectrum.to_string())
    .param("n_max", n_max);
    builder.checked = graphs.len();
    builder.excluded = total - graphs.len();
    builder.policy = "comparator = the graph with every block completed to a clique".into();
    Ok(builder.finish(records))
}
