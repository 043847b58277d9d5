//! Named graph families, clique-tree specifications and generators.
//!
//! Vertex labels are fixed: cliques are laid out left to right and, inside a
//! clique, the vertex shared with an earlier clique comes first.

mod clique_tree;
mod enumerate;

use std::str::FromStr;

pub use clique_tree::{random_clique_tree, random_clique_tree_spec, CliqueTreeSpec};
pub use enumerate::{
    enumerate_clique_trees, enumerate_connected_graphs, enumerate_trees, IsoClasses,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn require_vertices(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyGraph)
    } else {
        Ok(())
    }
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path_graph(n: usize) -> Result<Graph> {
    require_vertices(n)?;
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.set_edge(v - 1, v, true);
    }
    Ok(g)
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    require_vertices(n)?;
    Ok(Graph::empty(n).complement())
}

/// Star `K_{1,n-1}` centred at vertex 0.
pub fn star_graph(n: usize) -> Result<Graph> {
    require_vertices(n)?;
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.set_edge(0, v, true);
    }
    Ok(g)
}

/// `T(n-3, 1)`: the path `0 - 1 - 2` with `n - 3` pendant vertices hung on
/// vertex 0, so vertex 0 has degree `n - 2`.
pub fn broom(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::InvalidFamily(format!("broom needs n >= 4, got {n}")));
    }
    let mut g = path_graph(3)?.attach_clique(0, 2);
    for _ in 4..n {
        g = g.attach_clique(0, 2);
    }
    Ok(g)
}

fn check_sizes(sizes: &[usize]) -> Result<()> {
    match sizes.iter().find(|&&k| k < 2) {
        Some(&k) => Err(Error::CliqueTooSmall(k)),
        None => Ok(()),
    }
}

/// Clique path: cliques of the given orders in a chain, consecutive cliques
/// sharing one vertex. The shared vertex is the last vertex of the earlier
/// clique.
pub fn clique_path(sizes: &[usize]) -> Result<Graph> {
    if sizes.is_empty() {
        return Err(Error::InvalidFamily(
            "clique path needs at least one clique".into(),
        ));
    }
    check_sizes(sizes)?;
    let mut g = complete_graph(sizes[0])?;
    for &k in &sizes[1..] {
        let last = g.n() - 1;
        g = g.attach_clique(last, k);
    }
    Ok(g)
}

/// Clique star `𝕊(s-2, 1)`: a bridge clique of order `bridge` on vertices
/// `0..bridge` holds the two cut vertices `w = 0` and `w' = 1`; the cliques
/// in `end_sizes` hang on `w` in order, then one clique of order `last` hangs
/// on `w'`. The result has diameter 3.
pub fn clique_star(end_sizes: &[usize], bridge: usize, last: usize) -> Result<Graph> {
    if end_sizes.is_empty() {
        return Err(Error::InvalidFamily(
            "clique star needs at least one end clique at w".into(),
        ));
    }
    check_sizes(end_sizes)?;
    check_sizes(&[bridge, last])?;
    let mut g = complete_graph(bridge)?;
    for &k in end_sizes {
        g = g.attach_clique(0, k);
    }
    Ok(g.attach_clique(1, last))
}

/// One placement of a clique-size multiset into the clique-star shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarShape {
    pub end_sizes: Vec<usize>,
    pub bridge: usize,
    pub last: usize,
}

impl StarShape {
    pub fn build(&self) -> Result<Graph> {
        clique_star(&self.end_sizes, self.bridge, self.last)
    }
}

/// Distinct orderings of `sizes` for a clique path, one per reversal pair.
pub fn path_orderings(sizes: &[usize]) -> Vec<Vec<usize>> {
    distinct_permutations(sizes)
        .into_iter()
        .filter(|p| {
            let rev: Vec<usize> = p.iter().rev().copied().collect();
            *p <= rev
        })
        .collect()
}

/// Distinct assignments of `sizes` to (end cliques, bridge, last). Needs at
/// least three sizes.
pub fn star_shapes(sizes: &[usize]) -> Vec<StarShape> {
    if sizes.len() < 3 {
        return Vec::new();
    }
    let mut shapes: Vec<StarShape> = distinct_permutations(sizes)
        .into_iter()
        .map(|p| {
            let mut end_sizes = p[2..].to_vec();
            end_sizes.sort_unstable();
            StarShape {
                end_sizes,
                bridge: p[0],
                last: p[1],
            }
        })
        .collect();
    shapes.sort();
    shapes.dedup();
    shapes
}

/// Distinct permutations of a multiset in lexicographic order.
fn distinct_permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = items.to_vec();
    current.sort_unstable();
    let mut out = vec![current.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (1..current.len())
            .rev()
            .find(|&i| current[i - 1] < current[i])
        else {
            return out;
        };
        let j = (i..current.len())
            .rev()
            .find(|&j| current[j] > current[i - 1])
            .expect("pivot has a larger successor");
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

/// Family constructor addressed by name, as accepted on the command line:
/// `path:n`, `complete:n`, `star:n`, `broom:n`, `cliquepath:n1,n2,...` and
/// `cliquestar:e1,e2,...;bridge;last`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Complete(usize),
    Star(usize),
    Broom(usize),
    CliquePath(Vec<usize>),
    CliqueStar(StarShape),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Path(n) => path_graph(*n),
            FamilySpec::Complete(n) => complete_graph(*n),
            FamilySpec::Star(n) => star_graph(*n),
            FamilySpec::Broom(n) => broom(*n),
            FamilySpec::CliquePath(sizes) => clique_path(sizes),
            FamilySpec::CliqueStar(shape) => shape.build(),
        }
    }
}

fn parse_count(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::InvalidFamily(format!("`{s}` is not a nonnegative integer")))
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(parse_count).collect()
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidFamily(format!("`{s}` is missing `name:` prefix")))?;
        match name {
            "path" => Ok(FamilySpec::Path(parse_count(args)?)),
            "complete" => Ok(FamilySpec::Complete(parse_count(args)?)),
            "star" => Ok(FamilySpec::Star(parse_count(args)?)),
            "broom" => Ok(FamilySpec::Broom(parse_count(args)?)),
            "cliquepath" => Ok(FamilySpec::CliquePath(parse_list(args)?)),
            "cliquestar" => {
                let parts: Vec<&str> = args.split(';').collect();
                let [ends, bridge, last] = parts.as_slice() else {
                    return Err(Error::InvalidFamily(
                        "cliquestar expects `e1,e2,...;bridge;last`".into(),
                    ));
                };
                Ok(FamilySpec::CliqueStar(StarShape {
                    end_sizes: parse_list(ends)?,
                    bridge: parse_count(bridge)?,
                    last: parse_count(last)?,
                }))
            }
            other => Err(Error::InvalidFamily(format!("unknown family `{other}`"))),
        }
    }
}
