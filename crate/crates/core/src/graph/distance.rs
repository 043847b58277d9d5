use std::collections::VecDeque;

use super::Graph;

/// All-pairs shortest-path distances. Unreachable pairs are `None`, never a
/// sentinel integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance between `u` and `v`, or `None` if they lie in different
    /// components.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.d[u * self.n + v]
    }

    pub fn is_finite(&self) -> bool {
        self.d.iter().all(Option::is_some)
    }

    /// Largest entry, or `None` if any pair is unreachable.
    pub fn max_finite(&self) -> Option<u32> {
        self.d.iter().try_fold(0, |acc, &x| x.map(|x| acc.max(x)))
    }
}

/// Exact shortest-path distances by one BFS per source vertex.
pub fn bfs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![None; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for source in 0..n {
        let row = &mut d[source * n..(source + 1) * n];
        row[source] = Some(0);
        queue.clear();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = row[u].expect("queued vertices have a distance");
            for v in g.neighbors(u) {
                if row[v].is_none() {
                    row[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}

/// Largest distance between two vertices; `None` means infinite
/// (disconnected graph).
pub fn diameter(g: &Graph) -> Option<u32> {
    bfs_distances(g).max_finite()
}
