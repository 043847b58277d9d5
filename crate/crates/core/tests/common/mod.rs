//! Oracles that share as little code with the library as possible.
#![allow(dead_code)]

use std::collections::BTreeSet;

use blockspec::families::enumerate_connected_graphs;
use blockspec::Graph;

/// Edges of the tree with Prüfer sequence `seq` on `seq.len() + 2` vertices.
pub fn prufer_decode(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len() + 2;
    let mut degree = vec![1; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn ahu(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| ahu(adj, u, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// AHU canonical form of a tree, rooted at its centre (or the smaller of the
/// two rootings at a bicentre).
pub fn tree_canon(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in &adj[v] {
                deg[u] -= 1;
                if deg[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| ahu(&adj, c, usize::MAX))
        .min()
        .unwrap()
}

/// Number of non-isomorphic trees of order `n` via all Prüfer sequences.
pub fn prufer_tree_count(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let len = n - 2;
    let mut seen = BTreeSet::new();
    let mut seq = vec![0; len];
    loop {
        seen.insert(tree_canon(n, &prufer_decode(&seq)));
        let mut i = 0;
        while i < len && seq[i] == n - 1 {
            seq[i] = 0;
            i += 1;
        }
        if i == len {
            break;
        }
        seq[i] += 1;
    }
    seen.len()
}

fn induced(g: &Graph, set: &[usize]) -> (usize, Vec<usize>) {
    let deg: Vec<usize> = set
        .iter()
        .map(|&u| set.iter().filter(|&&v| g.has_edge(u, v)).count())
        .collect();
    (deg.iter().sum::<usize>() / 2, deg)
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

fn connected_within(g: &Graph, set: &[usize]) -> bool {
    let mut seen = vec![set[0]];
    let mut i = 0;
    while i < seen.len() {
        let u = seen[i];
        for &v in set {
            if g.has_edge(u, v) && !seen.contains(&v) {
                seen.push(v);
            }
        }
        i += 1;
    }
    seen.len() == set.len()
}

/// Block graphs are exactly the connected chordal diamond-free graphs.
pub fn is_block_graph_brute(g: &Graph) -> bool {
    subsets(g.n()).all(|set| {
        let k = set.len();
        if k < 4 {
            return true;
        }
        let (m, deg) = induced(g, &set);
        let hole = deg.iter().all(|&d| d == 2) && connected_within(g, &set);
        let diamond = k == 4 && m == 5;
        !hole && !diamond
    })
}

/// Maximal cliques of a block graph are its blocks (an isolated vertex
/// counts as one).
pub fn maximal_clique_count(g: &Graph) -> usize {
    let cliques: Vec<Vec<usize>> = subsets(g.n())
        .filter(|s| !s.is_empty() && induced(g, s).0 == s.len() * (s.len() - 1) / 2)
        .collect();
    cliques
        .iter()
        .filter(|c| {
            !cliques
                .iter()
                .any(|d| d.len() > c.len() && c.iter().all(|v| d.contains(v)))
        })
        .count()
}

/// Clique trees of order `n` with `s` blocks, by filtering all connected graphs.
pub fn brute_clique_tree_count(n: usize, s: usize) -> usize {
    enumerate_connected_graphs(n)
        .iter()
        .filter(|g| is_block_graph_brute(g) && maximal_clique_count(g) == s)
        .count()
}
