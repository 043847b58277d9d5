//! Counting non-isomorphic trees, clique trees and connected graphs.

use blockspec::families::{enumerate_clique_trees, enumerate_connected_graphs, enumerate_trees};

fn main() {
    println!(" n  trees  connected  clique trees by s");
    for n in 1..=7 {
        let by_s: Vec<usize> = (1..n.max(2))
            .map(|s| enumerate_clique_trees(n, s).len())
            .collect();
        println!(
            "{n:>2} {:>6} {:>10}  {by_s:?}",
            enumerate_trees(n).len(),
            enumerate_connected_graphs(n).len()
        );
    }
}
