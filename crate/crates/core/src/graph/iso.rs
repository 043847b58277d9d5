use std::hash::{DefaultHasher, Hash, Hasher};

use super::Graph;

fn mix<T: Hash>(x: &T) -> u64 {
    let mut h = DefaultHasher::new();
    x.hash(&mut h);
    h.finish()
}

/// Colour refinement (1-dimensional Weisfeiler-Leman) seeded by degree.
///
/// Colours are hashes, so refinements of two different graphs are directly
/// comparable: isomorphic graphs receive equal colour multisets and every
/// isomorphism maps a vertex to one of the same colour.
fn refine(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut colors: Vec<u64> = (0..n).map(|v| mix(&g.degree(v))).collect();
    let mut classes = count_classes(&colors);
    let mut scratch = Vec::new();
    for round in 0..n {
        let next: Vec<u64> = (0..n)
            .map(|v| {
                scratch.clear();
                scratch.extend(g.neighbors(v).map(|u| colors[u]));
                scratch.sort_unstable();
                mix(&(colors[v], &scratch))
            })
            .collect();
        let next_classes = count_classes(&next);
        colors = next;
        if next_classes == classes {
            colors.iter_mut().for_each(|c| *c = mix(&(*c, round)));
            break;
        }
        classes = next_classes;
    }
    colors
}

fn count_classes(colors: &[u64]) -> usize {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len()
}

fn color_histogram(colors: &[u64]) -> Vec<u64> {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    sorted
}

/// Isomorphism invariant used to bucket graphs before pairwise tests.
pub(crate) fn invariant_hash(g: &Graph) -> u64 {
    mix(&(g.n(), g.edge_count(), color_histogram(&refine(g))))
}

/// True iff an adjacency-preserving bijection between `g` and `h` exists.
///
/// Colour refinement prunes the candidates; a backtracking search over
/// vertices in BFS order settles the rest. Intended for small graphs.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    let cg = refine(g);
    let ch = refine(h);
    if color_histogram(&cg) != color_histogram(&ch) {
        return false;
    }
    let order = search_order(g, &cg);
    let mut map = vec![usize::MAX; g.n()];
    let mut used = vec![false; h.n()];
    extend(g, h, &cg, &ch, &order, 0, &mut map, &mut used)
}

/// Vertices of `g` in BFS order per component, each component started from
/// a vertex of the rarest colour.
fn search_order(g: &Graph, colors: &[u64]) -> Vec<usize> {
    let n = g.n();
    let freq = |c: u64| colors.iter().filter(|&&x| x == c).count();
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (freq(colors[v]), v));
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let u = order[head];
            head += 1;
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    cg: &[u64],
    ch: &[u64],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for cand in 0..h.n() {
        if used[cand] || ch[cand] != cg[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(v, u) == h.has_edge(cand, map[u]));
        if !consistent {
            continue;
        }
        map[v] = cand;
        used[cand] = true;
        if extend(g, h, cg, ch, order, depth + 1, map, used) {
            return true;
        }
        used[cand] = false;
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges).unwrap()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn brute_force_isomorphic(a: &Graph, b: &Graph) -> bool {
        a.n() == b.n()
            && permutations(a.n()).into_iter().any(|p| {
                a.edges().len() == b.edges().len()
                    && a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v]))
            })
    }

    #[test]
    fn p4_is_isomorphic_to_its_complement() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(brute_force_isomorphic(&p4, &p4.complement()));
        assert!(are_isomorphic(&p4, &p4.complement()));
    }

    #[test]
    fn star_and_path_differ() {
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(!are_isomorphic(&star, &p4));
        assert!(are_isomorphic(&star, &star));
    }

    #[test]
    fn regular_graphs_need_backtracking() {
        // C6 vs two triangles: same degree sequence, refinement cannot split.
        let c6 = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]);
        let two_k3 = g(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert!(!are_isomorphic(&c6, &two_k3));
        let relabelled = g(6, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 5), (5, 0)]);
        assert!(are_isomorphic(&c6, &relabelled));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1usize..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edge_list(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn agrees_with_permutation_search(a in arb_graph(6), b in arb_graph(6)) {
            prop_assert_eq!(are_isomorphic(&a, &b), brute_force_isomorphic(&a, &b));
        }

        #[test]
        fn relabelling_preserves_isomorphism(a in arb_graph(7), seed in any::<u64>()) {
            let n = a.n();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let edges: Vec<_> = a.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
            let b = Graph::from_edge_list(n, &edges).unwrap();
            prop_assert!(are_isomorphic(&a, &b));
            prop_assert_eq!(invariant_hash(&a), invariant_hash(&b));
        }
    }
}
