//! Simple undirected graphs on vertices `0..n`, stored as dense adjacency
//! bit rows.

mod blocks;
mod distance;
mod io;
mod iso;

use std::fmt;

use crate::error::{Error, Result};

pub use blocks::{
    block_decomposition, has_cut_vertices_in_distinct_blocks, has_nonadjacent_cut_vertices,
    is_clique_tree, BlockDecomposition,
};
pub use distance::{bfs_distances, diameter, DistanceMatrix};
pub use io::{parse_edge_list, to_edge_list};
pub use iso::are_isomorphic;
pub(crate) use iso::invariant_hash;

/// Simple undirected graph with a symmetric, loop-free adjacency relation.
///
/// Values are immutable once built; every operation returns a fresh graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics when `n == 0`; use [`Graph::from_edge_list`] for checked input.
    pub fn empty(n: usize) -> Self {
        assert!(n > 0, "graph needs at least one vertex");
        let words = n.div_ceil(64);
        Self {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Builds a graph from an explicit edge list, rejecting out-of-range
    /// endpoints, self-loops and repeated edges.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u != v);
        for (a, b) in [(u, v), (v, u)] {
            let word = &mut self.rows[a * self.words + b / 64];
            if present {
                *word |= 1 << (b % 64);
            } else {
                *word &= !(1 << (b % 64));
            }
        }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + bit)
            })
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        degrees
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// Graph on the same vertices whose edges are exactly the non-edges of
    /// `self`.
    pub fn complement(&self) -> Graph {
        let mut out = self.clone();
        let tail = self.n % 64;
        for v in 0..self.n {
            let row = &mut out.rows[v * self.words..(v + 1) * self.words];
            for word in row.iter_mut() {
                *word = !*word;
            }
            if tail != 0 {
                row[self.words - 1] &= (1u64 << tail) - 1;
            }
            row[v / 64] &= !(1 << (v % 64));
        }
        out
    }

    /// True iff a BFS from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n
    }

    /// True iff the vertices in `set` are pairwise adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Graph with `k - 1` new vertices `n..n+k-1` that form a clique of
    /// order `k` together with `v`.
    pub fn attach_clique(&self, v: usize, k: usize) -> Graph {
        assert!(k >= 2 && v < self.n);
        let n = self.n + k - 1;
        let mut out = Graph::empty(n);
        for (a, b) in self.edges() {
            out.set_edge(a, b, true);
        }
        let members: Vec<usize> = std::iter::once(v).chain(self.n..n).collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                out.set_edge(a, b, true);
            }
        }
        out
    }

    /// Same graph with the given edges added (existing edges are ignored).
    pub(crate) fn with_edges_added(
        &self,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Graph {
        let mut out = self.clone();
        for (u, v) in edges {
            if u != v {
                out.set_edge(u, v, true);
            }
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_edge_list(self))
    }
}
