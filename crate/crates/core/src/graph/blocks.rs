use super::Graph;
use crate::error::{Error, Result};

/// Blocks (maximal 2-connected pieces or bridges) and cut vertices of a
/// connected graph.
///
/// Each block is a sorted vertex list and the block list itself is sorted, so
/// two decompositions of the same labelled graph compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

impl BlockDecomposition {
    /// Number of blocks.
    pub fn s(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Block sizes in nondecreasing order.
    pub fn size_multiset(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    /// Cut vertices lying in `block`.
    pub fn cut_vertices_of(&self, block: &[usize]) -> Vec<usize> {
        block
            .iter()
            .copied()
            .filter(|&v| self.is_cut_vertex(v))
            .collect()
    }

    /// Blocks holding exactly one cut vertex, paired with that vertex.
    pub fn end_blocks(&self) -> Vec<(&[usize], usize)> {
        self.blocks
            .iter()
            .filter_map(|b| match self.cut_vertices_of(b).as_slice() {
                [v] => Some((b.as_slice(), *v)),
                _ => None,
            })
            .collect()
    }

    /// True iff some block contains both `u` and `v`.
    pub fn share_block(&self, u: usize, v: usize) -> bool {
        self.blocks
            .iter()
            .any(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok())
    }
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
    is_cut: Vec<bool>,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        let mut children = 0;
        let neighbors: Vec<usize> = self.g.neighbors(u).collect();
        for v in neighbors {
            if self.disc[v] == 0 {
                children += 1;
                self.edge_stack.push((u, v));
                self.visit(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent.is_some() {
                        self.is_cut[u] = true;
                    }
                    let mut block = Vec::new();
                    while let Some((a, b)) = self.edge_stack.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    self.blocks.push(block);
                }
            } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                self.edge_stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
        if parent.is_none() && children >= 2 {
            self.is_cut[u] = true;
        }
    }
}

/// DFS lowpoint decomposition into blocks and cut vertices.
///
/// A single vertex is one block of size 1.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![vec![0]],
            cut_vertices: Vec::new(),
        });
    }
    let mut t = Tarjan {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        is_cut: vec![false; n],
    };
    t.visit(0, None);
    let mut blocks = t.blocks;
    blocks.sort();
    let cut_vertices = (0..n).filter(|&v| t.is_cut[v]).collect();
    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
    })
}

/// True iff `g` is connected and every block induces a complete subgraph.
pub fn is_clique_tree(g: &Graph) -> bool {
    match block_decomposition(g) {
        Ok(bd) => bd.blocks.iter().all(|b| g.is_clique(b)),
        Err(_) => false,
    }
}

/// Standing hypothesis for clique trees: some two cut vertices are not
/// adjacent. False for disconnected graphs.
pub fn has_nonadjacent_cut_vertices(g: &Graph) -> bool {
    let Ok(bd) = block_decomposition(g) else {
        return false;
    };
    let cuts = &bd.cut_vertices;
    cuts.iter()
        .enumerate()
        .any(|(i, &u)| cuts[i + 1..].iter().any(|&v| !g.has_edge(u, v)))
}

/// Standing hypothesis for block graphs: some two cut vertices do not belong
/// to a common block. False for disconnected graphs.
pub fn has_cut_vertices_in_distinct_blocks(g: &Graph) -> bool {
    let Ok(bd) = block_decomposition(g) else {
        return false;
    };
    let cuts = &bd.cut_vertices;
    cuts.iter()
        .enumerate()
        .any(|(i, &u)| cuts[i + 1..].iter().any(|&v| !bd.share_block(u, v)))
}
