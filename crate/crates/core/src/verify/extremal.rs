use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::report::{classify, InstanceRecord, ReportBuilder, TheoremReport};
use super::{ensure_order, Spectrum, EPSILON, MAX_CLIQUE_TREE_ORDER, MAX_CONNECTED_ORDER};
use crate::error::{Error, Result};
use crate::families::{
    broom, clique_path, enumerate_clique_trees, enumerate_connected_graphs, enumerate_trees,
    path_graph, path_orderings, star_shapes,
};
use crate::graph::{
    are_isomorphic, block_decomposition, diameter, has_cut_vertices_in_distinct_blocks,
    has_nonadjacent_cut_vertices, to_edge_list, Graph,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalFamily {
    /// Clique trees with two nonadjacent cut vertices.
    CliqueTree,
    /// Connected graphs with two cut vertices in no common block.
    BlockGraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// `λ(instance) <= max over clique stars with the same block sizes`
    StarUpper,
    /// `min over clique paths with the same block sizes <= λ(instance)`
    PathLower,
}

/// What a tie with the comparator is allowed to mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqualityCase {
    /// No characterisation is claimed; ties are only counted.
    None,
    /// A tie requires the instance to be isomorphic to an extremal comparator.
    IsomorphicToComparator,
}

impl ExtremalFamily {
    fn label(self) -> &'static str {
        match self {
            ExtremalFamily::CliqueTree => "clique_tree",
            ExtremalFamily::BlockGraph => "block_graph",
        }
    }

    fn admits(self, g: &Graph) -> bool {
        match self {
            ExtremalFamily::CliqueTree => has_nonadjacent_cut_vertices(g),
            ExtremalFamily::BlockGraph => has_cut_vertices_in_distinct_blocks(g),
        }
    }

    fn graphs(self, n_max: usize, s: Option<usize>) -> Result<Vec<Graph>> {
        Ok(match self {
            ExtremalFamily::CliqueTree => {
                ensure_order(n_max, MAX_CLIQUE_TREE_ORDER, "clique tree")?;
                (1..=n_max)
                    .flat_map(|n| match s {
                        Some(s) => enumerate_clique_trees(n, s),
                        None => (1..n.max(2))
                            .flat_map(|s| enumerate_clique_trees(n, s))
                            .collect(),
                    })
                    .collect()
            }
            ExtremalFamily::BlockGraph => {
                ensure_order(n_max, MAX_CONNECTED_ORDER, "connected graph")?;
                (1..=n_max)
                    .flat_map(enumerate_connected_graphs)
                    .filter(|g| {
                        s.is_none() || block_decomposition(g).is_ok_and(|bd| Some(bd.s()) == s)
                    })
                    .collect()
            }
        })
    }
}

impl Bound {
    fn label(self) -> &'static str {
        match self {
            Bound::StarUpper => "star_upper",
            Bound::PathLower => "path_lower",
        }
    }
}

fn theorem_id(family: ExtremalFamily, spectrum: Spectrum, bound: Bound) -> &'static str {
    use {Bound::*, ExtremalFamily::*, Spectrum::*};
    match (family, spectrum, bound) {
        (CliqueTree, Adjacency, StarUpper) => "T2.2",
        (CliqueTree, Adjacency, PathLower) => "T2.4",
        (CliqueTree, Distance, PathLower) => "T4.4",
        (CliqueTree, Distance, StarUpper) => "T4.5",
        (BlockGraph, Adjacency, PathLower) => "T3.3",
        (BlockGraph, Distance, StarUpper) => "T5.2",
        (BlockGraph, Adjacency, StarUpper) => "block-star-adjacency",
        (BlockGraph, Distance, PathLower) => "block-path-distance",
    }
}

/// Equality characterisation claimed by each statement. The clique-tree star
/// bounds come without one.
pub fn equality_case(family: ExtremalFamily, bound: Bound) -> EqualityCase {
    match (family, bound) {
        (ExtremalFamily::CliqueTree, Bound::StarUpper) => EqualityCase::None,
        _ => EqualityCase::IsomorphicToComparator,
    }
}

/// Comparator graphs built from one block-size multiset, with the extremal
/// value over all orderings.
struct Comparators {
    graphs: Vec<(Graph, f64)>,
    extremum: f64,
}

fn comparators(sizes: &[usize], spectrum: Spectrum, bound: Bound) -> Result<Comparators> {
    let graphs = match bound {
        Bound::PathLower => path_orderings(sizes)
            .iter()
            .map(|o| clique_path(o))
            .collect::<Result<Vec<_>>>()?,
        Bound::StarUpper => star_shapes(sizes)
            .iter()
            .map(|sh| sh.build())
            .collect::<Result<Vec<_>>>()?,
    };
    if graphs.is_empty() {
        return Err(Error::Infeasible(format!(
            "no comparator for block sizes {sizes:?}"
        )));
    }
    let graphs = graphs
        .into_iter()
        .map(|g| spectrum.radius(&g).map(|r| (g, r)))
        .collect::<Result<Vec<_>>>()?;
    let values = graphs.iter().map(|(_, r)| *r);
    let extremum = match bound {
        Bound::PathLower => values.fold(f64::INFINITY, f64::min),
        Bound::StarUpper => values.fold(f64::NEG_INFINITY, f64::max),
    };
    Ok(Comparators { graphs, extremum })
}

/// Checks an extremal bound over every admissible instance of order at most
/// `n_max` (and `s` blocks, if given). Each instance is compared with the
/// extremal comparator over all orderings of its own block-size multiset:
/// the smallest clique path for lower bounds, the largest clique star for
/// upper bounds.
pub fn check_extremal(
    family: ExtremalFamily,
    spectrum: Spectrum,
    bound: Bound,
    n_max: usize,
    s: Option<usize>,
) -> Result<TheoremReport> {
    let all = family.graphs(n_max, s)?;
    let total = all.len();
    let instances: Vec<(Graph, Vec<usize>)> = all
        .into_iter()
        .filter(|g| family.admits(g))
        .map(|g| {
            let sizes = block_decomposition(&g)?.size_multiset();
            Ok((g, sizes))
        })
        .collect::<Result<_>>()?;

    let multisets: Vec<Vec<usize>> = instances
        .iter()
        .map(|(_, m)| m.clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let cache: BTreeMap<Vec<usize>, Comparators> = multisets
        .par_iter()
        .map(|m| comparators(m, spectrum, bound).map(|c| (m.clone(), c)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .collect();

    let equality = equality_case(family, bound);
    let records = instances
        .par_iter()
        .enumerate()
        .map(|(i, (g, sizes))| {
            let value = spectrum.radius(g)?;
            let cmp = &cache[sizes];
            let (lhs, rhs) = match bound {
                Bound::PathLower => (cmp.extremum, value),
                Bound::StarUpper => (value, cmp.extremum),
            };
            let tie_ok = || match equality {
                EqualityCase::None => true,
                EqualityCase::IsomorphicToComparator => cmp
                    .graphs
                    .iter()
                    .any(|(c, r)| (r - cmp.extremum).abs() <= EPSILON && are_isomorphic(g, c)),
            };
            Ok(InstanceRecord {
                instance: i,
                comparison: bound.label().into(),
                graph: to_edge_list(g),
                lhs,
                rhs,
                status: classify(lhs, rhs, EPSILON, tie_ok),
                detail: format!("block sizes {sizes:?}"),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let id = theorem_id(family, spectrum, bound);
    let mut b = ReportBuilder::new(id, EPSILON)
        .param("family", family.label())
        .param("matrix", spectrum.to_string())
        .param("bound", bound.label())
        .param("n_max", n_max)
        .param("s", s.map_or_else(|| "all".into(), serde_json::Value::from));
    b.checked = instances.len();
    b.excluded = total - instances.len();
    b.policy = match bound {
        Bound::PathLower => "comparator = min over distinct clique-path orderings of the block-size multiset (reversals identified)",
        Bound::StarUpper => "comparator = max over distinct clique-star assignments (end cliques, bridge, last) of the block-size multiset",
    }
    .into();
    b.notes.push(format!(
        "{} comparator multisets; {} instances excluded by the cut-vertex hypothesis",
        cache.len(),
        b.excluded
    ));
    match equality {
        EqualityCase::None => b
            .notes
            .push("no equality characterisation claimed; ties are recorded only".into()),
        EqualityCase::IsomorphicToComparator => b
            .notes
            .push("ties must be isomorphic to an extremal comparator".into()),
    }
    if id == "T3.3" {
        b.notes.push(
            "the equality condition is stated with a complement on the comparator; ties are tested as B isomorphic to the clique path"
                .into(),
        );
    }
    Ok(b.finish(records))
}

/// Checks the tree chain `λ(P_n^c) <= λ(T^c) <= λ(T(n-3,1)^c)` over every
/// tree of order `n` with diameter above 3. Each bound gets its own record
/// and its own equality case.
pub fn check_tree_chain(spectrum: Spectrum, n: usize) -> Result<TheoremReport> {
    ensure_order(n, MAX_CLIQUE_TREE_ORDER, "tree")?;
    if n < 5 {
        return Err(Error::Infeasible(format!(
            "no tree of order {n} has diameter above 3"
        )));
    }
    let path = path_graph(n)?;
    let broom = broom(n)?;
    let lower = spectrum.radius(&path)?;
    let upper = spectrum.radius(&broom)?;
    let trees = enumerate_trees(n);
    let total = trees.len();
    let trees: Vec<Graph> = trees
        .into_iter()
        .filter(|t| diameter(t).is_some_and(|d| d > 3))
        .collect();
    let records: Vec<[InstanceRecord; 2]> = trees
        .par_iter()
        .enumerate()
        .map(|(i, t)| {
            let value = spectrum.radius(t)?;
            let graph = to_edge_list(t);
            Ok([
                InstanceRecord {
                    instance: i,
                    comparison: "path_lower".into(),
                    graph: graph.clone(),
                    lhs: lower,
                    rhs: value,
                    status: classify(lower, value, EPSILON, || are_isomorphic(t, &path)),
                    detail: "equality only for the path".into(),
                },
                InstanceRecord {
                    instance: i,
                    comparison: "broom_upper".into(),
                    graph,
                    lhs: value,
                    rhs: upper,
                    status: classify(value, upper, EPSILON, || are_isomorphic(t, &broom)),
                    detail: "equality only for the broom".into(),
                },
            ])
        })
        .collect::<Result<_>>()?;
    let id = match spectrum {
        Spectrum::Adjacency => "T2.5",
        Spectrum::Distance => "T4.6",
    };
    let mut b = ReportBuilder::new(id, EPSILON)
        .param("family", "tree")
        .param("matrix", spectrum.to_string())
        .param("n", n);
    b.checked = trees.len();
    b.excluded = total - trees.len();
    b.policy =
        "lower comparator P_n, upper comparator T(n-3,1); each equality case checked separately"
            .into();
    b.notes.push(format!(
        "λ(P_n^c) = {lower:.12}, λ(T(n-3,1)^c) = {upper:.12}"
    ));
    Ok(b.finish(records.into_iter().flatten().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Status;

    #[test]
    fn comparator_ties_with_itself() {
        let p = clique_path(&[2, 3, 2]).unwrap();
        let c = comparators(&[2, 2, 3], Spectrum::Adjacency, Bound::PathLower).unwrap();
        let r = Spectrum::Adjacency.radius(&p).unwrap();
        assert!(c.extremum <= r + EPSILON);
        assert_eq!(c.graphs.len(), 2);
    }

    #[test]
    fn clique_tree_bounds_small() {
        for (spectrum, bound) in [
            (Spectrum::Adjacency, Bound::PathLower),
            (Spectrum::Adjacency, Bound::StarUpper),
            (Spectrum::Distance, Bound::PathLower),
            (Spectrum::Distance, Bound::StarUpper),
        ] {
            let r = check_extremal(ExtremalFamily::CliqueTree, spectrum, bound, 6, None).unwrap();
            assert!(r.passed(), "{spectrum} {bound:?}: {:?}", r.violations);
            assert!(r.checked > 0);
            // clique stars have adjacent cut vertices, so only paths recur as instances
            assert_eq!(r.ties > 0, bound == Bound::PathLower);
        }
    }

    #[test]
    fn tree_chain_counts() {
        // 11 trees on 7 vertices: the star and two double stars have d <= 3
        let r = check_tree_chain(Spectrum::Adjacency, 7).unwrap();
        assert_eq!((r.checked, r.excluded), (8, 3));
        assert!(r.passed(), "{:?}", r.violations);
        let path_tie = r
            .records
            .iter()
            .filter(|x| x.comparison == "path_lower" && x.status == Status::Tie)
            .count();
        assert_eq!(path_tie, 1);
        assert!(check_tree_chain(Spectrum::Adjacency, 4).is_err());
    }
}
