//! Exhaustive generators returning one representative per isomorphism
//! class, in a deterministic order.
//!
//! Every generator grows graphs from smaller ones and filters the candidates
//! through [`IsoClasses`], which buckets by a refinement invariant and runs
//! pairwise isomorphism tests inside a bucket.

use std::collections::HashMap;

use crate::graph::{are_isomorphic, invariant_hash, Graph};

/// Set of pairwise non-isomorphic graphs in insertion order.
#[derive(Debug, Default, Clone)]
pub struct IsoClasses {
    buckets: HashMap<u64, Vec<usize>>,
    graphs: Vec<Graph>,
}

impl IsoClasses {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts `g` unless an isomorphic graph is present; returns whether it
    /// was new.
    pub fn insert(&mut self, g: Graph) -> bool {
        let key = invariant_hash(&g);
        let bucket = self.buckets.entry(key).or_default();
        if bucket.iter().any(|&i| are_isomorphic(&self.graphs[i], &g)) {
            return false;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
        true
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.buckets
            .get(&invariant_hash(g))
            .is_some_and(|b| b.iter().any(|&i| are_isomorphic(&self.graphs[i], g)))
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn into_vec(self) -> Vec<Graph> {
        self.graphs
    }
}

/// Unlabelled trees on `n` vertices, grown by hanging a leaf on every vertex
/// of every tree on `n - 1` vertices.
pub fn enumerate_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::empty(1)];
    for _ in 1..n {
        let mut next = IsoClasses::new();
        for t in &level {
            for v in 0..t.n() {
                next.insert(t.attach_clique(v, 2));
            }
        }
        level = next.into_vec();
    }
    level
}

/// Unlabelled clique trees on `n` vertices with exactly `s` blocks.
///
/// A clique tree with `s >= 2` blocks has an end clique; removing it leaves a
/// clique tree with `s - 1` blocks. So every class is reached by gluing a
/// clique of some order `k >= 2` onto some vertex of a smaller clique tree.
/// `K_1` counts as the single clique tree with one block on one vertex.
pub fn enumerate_clique_trees(n: usize, s: usize) -> Vec<Graph> {
    let mut memo = HashMap::new();
    clique_trees(n, s, &mut memo)
}

fn clique_trees(n: usize, s: usize, memo: &mut HashMap<(usize, usize), Vec<Graph>>) -> Vec<Graph> {
    if let Some(v) = memo.get(&(n, s)) {
        return v.clone();
    }
    let out = match (n, s) {
        (0, _) | (_, 0) => Vec::new(),
        (1, 1) => vec![Graph::empty(1)],
        (1, _) => Vec::new(),
        (_, 1) => vec![Graph::empty(n).complement()],
        _ => {
            let mut classes = IsoClasses::new();
            // k = order of the new end clique, base has n - k + 1 >= s vertices
            for k in 2..=n + 2 - s {
                let base_n = n + 1 - k;
                for base in clique_trees(base_n, s - 1, memo) {
                    if base_n == 1 {
                        continue;
                    }
                    for v in 0..base_n {
                        classes.insert(base.attach_clique(v, k));
                    }
                }
            }
            classes.into_vec()
        }
    };
    memo.insert((n, s), out.clone());
    out
}

/// Unlabelled connected graphs on `n` vertices.
///
/// Every connected graph on `n >= 2` vertices has a vertex whose removal
/// leaves it connected, so adding one vertex with every nonempty
/// neighbourhood to each connected graph on `n - 1` vertices reaches all
/// classes. Practical up to `n = 8`.
pub fn enumerate_connected_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::empty(1)];
    for m in 1..n {
        let mut next = IsoClasses::new();
        for g in &level {
            for mask in 1u32..(1 << m) {
                let neighbours = (0..m).filter(|&v| mask >> v & 1 == 1).map(|v| (v, m));
                let mut h = Graph::empty(m + 1);
                for (u, v) in g.edges() {
                    h.set_edge(u, v, true);
                }
                next.insert(h.with_edges_added(neighbours));
            }
        }
        level = next.into_vec();
    }
    level
}
