//! Clique paths, clique stars, brooms and random clique trees.

use blockspec::families::{
    broom, clique_path, clique_star, path_orderings, random_clique_tree, star_shapes,
};
use blockspec::graph::{block_decomposition, diameter, is_clique_tree};

fn main() -> blockspec::Result<()> {
    let p = clique_path(&[3, 2, 4])?;
    let bd = block_decomposition(&p)?;
    println!(
        "clique path 3,2,4: n = {}, blocks {:?}, cut vertices {:?}",
        p.n(),
        bd.blocks,
        bd.cut_vertices
    );

    // two end cliques K2, K3 at w, bridge K3, one K2 at w'
    let s = clique_star(&[2, 3], 3, 2)?;
    println!("clique star: n = {}, diameter {:?}", s.n(), diameter(&s));

    let b = broom(7)?;
    println!("broom T(4,1): degrees {:?}", b.degree_sequence());

    let sizes = [2, 2, 3, 4];
    println!(
        "{} clique-path orderings, {} clique-star shapes of {sizes:?}",
        path_orderings(&sizes).len(),
        star_shapes(&sizes).len()
    );

    for seed in 0..3 {
        let g = random_clique_tree(9, 4, seed)?;
        let bd = block_decomposition(&g)?;
        println!(
            "seed {seed}: sizes {:?}, clique tree: {}",
            bd.size_multiset(),
            is_clique_tree(&g)
        );
    }
    Ok(())
}
