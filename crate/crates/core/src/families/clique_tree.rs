use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Abstract clique tree: clique orders plus, for every clique after the
/// first, the earlier clique it is glued to and the shared vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueTreeSpec {
    pub sizes: Vec<usize>,
    /// `attachments[i - 1] = (j, v)` glues clique `i` onto vertex `v` of
    /// clique `j < i`. Vertex labels are the ones [`realize`](Self::realize)
    /// assigns.
    pub attachments: Vec<(usize, usize)>,
}

impl CliqueTreeSpec {
    pub fn single(size: usize) -> Self {
        Self {
            sizes: vec![size],
            attachments: Vec::new(),
        }
    }

    /// Number of cliques.
    pub fn s(&self) -> usize {
        self.sizes.len()
    }

    pub fn n(&self) -> usize {
        self.sizes.iter().sum::<usize>() + 1 - self.sizes.len()
    }

    /// Vertex sets of each clique: clique 0 is `0..n_1`; clique `i` lists its
    /// shared vertex first, then fresh labels.
    pub fn clique_vertices(&self) -> Result<Vec<Vec<usize>>> {
        if self.sizes.is_empty() {
            return Err(Error::InvalidFamily("clique tree needs a clique".into()));
        }
        if let Some(&k) = self.sizes.iter().find(|&&k| k < 2) {
            return Err(Error::CliqueTooSmall(k));
        }
        if self.attachments.len() != self.sizes.len() - 1 {
            return Err(Error::BadAttachment(format!(
                "{} cliques need {} attachments, got {}",
                self.sizes.len(),
                self.sizes.len() - 1,
                self.attachments.len()
            )));
        }
        let mut cliques: Vec<Vec<usize>> = vec![(0..self.sizes[0]).collect()];
        let mut next = self.sizes[0];
        for (i, (&k, &(j, v))) in self.sizes[1..].iter().zip(&self.attachments).enumerate() {
            let i = i + 1;
            if j >= i {
                return Err(Error::BadAttachment(format!(
                    "clique {i} attaches to clique {j}, which is not earlier"
                )));
            }
            if !cliques[j].contains(&v) {
                return Err(Error::BadAttachment(format!(
                    "vertex {v} is not in clique {j}"
                )));
            }
            let members = std::iter::once(v).chain(next..next + k - 1).collect();
            next += k - 1;
            cliques.push(members);
        }
        Ok(cliques)
    }

    pub fn realize(&self) -> Result<Graph> {
        let cliques = self.clique_vertices()?;
        let mut g = Graph::empty(self.n());
        for members in &cliques {
            for (a, &u) in members.iter().enumerate() {
                for &v in &members[a + 1..] {
                    g.set_edge(u, v, true);
                }
            }
        }
        Ok(g)
    }
}

/// Random spec with `s` cliques on `n` vertices: clique orders come from a
/// uniform composition of `n - 1` into `s` positive parts, and each clique
/// is glued to a uniformly chosen vertex of a uniformly chosen earlier
/// clique. Deterministic per seed.
pub fn random_clique_tree_spec(n: usize, s: usize, seed: u64) -> Result<CliqueTreeSpec> {
    if s == 0 || n < s + 1 {
        return Err(Error::Infeasible(format!(
            "no clique tree with {s} cliques on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // cut points in 1..n-1 split n-1 into s parts
    let mut cuts: Vec<usize> = sample(&mut rng, n - 2, s - 1)
        .into_iter()
        .map(|c| c + 1)
        .collect();
    cuts.sort_unstable();
    let mut sizes = Vec::with_capacity(s);
    let mut prev = 0;
    for c in cuts.into_iter().chain(std::iter::once(n - 1)) {
        sizes.push(c - prev + 1);
        prev = c;
    }
    let mut spec = CliqueTreeSpec {
        sizes: sizes[..1].to_vec(),
        attachments: Vec::new(),
    };
    let mut cliques: Vec<Vec<usize>> = vec![(0..sizes[0]).collect()];
    let mut next = sizes[0];
    for &k in &sizes[1..] {
        let j = rng.random_range(0..cliques.len());
        let v = cliques[j][rng.random_range(0..cliques[j].len())];
        spec.sizes.push(k);
        spec.attachments.push((j, v));
        cliques.push(std::iter::once(v).chain(next..next + k - 1).collect());
        next += k - 1;
    }
    Ok(spec)
}

pub fn random_clique_tree(n: usize, s: usize, seed: u64) -> Result<Graph> {
    random_clique_tree_spec(n, s, seed)?.realize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_graph, path_graph, star_graph};
    use crate::graph::{block_decomposition, is_clique_tree};
    use proptest::prelude::*;

    #[test]
    fn realizes_basic_shapes() {
        assert_eq!(
            CliqueTreeSpec::single(4).realize().unwrap(),
            complete_graph(4).unwrap()
        );
        let path = CliqueTreeSpec {
            sizes: vec![2, 2, 2],
            attachments: vec![(0, 1), (1, 2)],
        };
        assert_eq!(path.realize().unwrap(), path_graph(4).unwrap());
        let star = CliqueTreeSpec {
            sizes: vec![2, 2, 2],
            attachments: vec![(0, 0), (0, 0)],
        };
        assert_eq!(star.realize().unwrap(), star_graph(4).unwrap());
    }

    #[test]
    fn rejects_malformed_specs() {
        let bad_vertex = CliqueTreeSpec {
            sizes: vec![3, 2],
            attachments: vec![(0, 5)],
        };
        assert!(matches!(bad_vertex.realize(), Err(Error::BadAttachment(_))));
        let forward = CliqueTreeSpec {
            sizes: vec![3, 2],
            attachments: vec![(1, 0)],
        };
        assert!(matches!(forward.realize(), Err(Error::BadAttachment(_))));
        let missing = CliqueTreeSpec {
            sizes: vec![3, 2],
            attachments: vec![],
        };
        assert!(matches!(missing.realize(), Err(Error::BadAttachment(_))));
        assert_eq!(
            CliqueTreeSpec::single(1).realize(),
            Err(Error::CliqueTooSmall(1))
        );
    }

    #[test]
    fn random_edge_cases() {
        assert_eq!(
            random_clique_tree(5, 1, 7).unwrap(),
            complete_graph(5).unwrap()
        );
        let t = random_clique_tree(9, 8, 3).unwrap();
        assert_eq!(t.edge_count(), 8);
        assert!(t.is_connected());
        assert_eq!(random_clique_tree(9, 4, 11), random_clique_tree(9, 4, 11));
        assert!(random_clique_tree(4, 4, 0).is_err());
        assert!(random_clique_tree(4, 0, 0).is_err());
    }

    proptest! {
        #[test]
        fn random_specs_are_clique_trees(n in 2usize..14, s_frac in 0.0f64..1.0, seed in any::<u64>()) {
            let s = 1 + ((n - 2) as f64 * s_frac) as usize;
            let spec = random_clique_tree_spec(n, s, seed).unwrap();
            prop_assert_eq!(spec.n(), n);
            let g = spec.realize().unwrap();
            prop_assert!(is_clique_tree(&g));
            let bd = block_decomposition(&g).unwrap();
            prop_assert_eq!(bd.s(), s);
            let mut sizes = spec.sizes.clone();
            sizes.sort_unstable();
            prop_assert_eq!(bd.size_multiset(), sizes);
        }
    }
}
