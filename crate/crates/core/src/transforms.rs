//! Graph surgeries: moving an end clique between cut vertices, completing
//! blocks to cliques, and deleting edges inside one block.

use crate::error::{Error, Result};
use crate::graph::{block_decomposition, is_clique_tree, Graph};

/// Moves the end clique `clique` from its end cut vertex `from` to the cut
/// vertex `to`: every edge `from–u`, `u ∈ clique ∖ {from}`, is replaced by
/// `to–u`. Moving to `to == from` returns the graph unchanged.
pub fn move_clique(g: &Graph, clique: &[usize], from: usize, to: usize) -> Result<Graph> {
    if !is_clique_tree(g) {
        return Err(Error::NotCliqueTree);
    }
    let bd = block_decomposition(g)?;
    let mut block = clique.to_vec();
    block.sort_unstable();
    if !bd.blocks.contains(&block) {
        return Err(Error::InvalidMove(format!("{clique:?} is not a block")));
    }
    match bd.cut_vertices_of(&block).as_slice() {
        [v] if *v == from => {}
        [_] => {
            return Err(Error::InvalidMove(format!(
                "{from} is not the end cut vertex of {clique:?}"
            )))
        }
        _ => {
            return Err(Error::InvalidMove(format!(
                "{clique:?} is not an end clique"
            )))
        }
    }
    if to >= g.n() || !bd.is_cut_vertex(to) {
        return Err(Error::InvalidMove(format!("{to} is not a cut vertex")));
    }
    if to == from {
        return Ok(g.clone());
    }
    if block.contains(&to) {
        return Err(Error::InvalidMove(format!(
            "{to} lies inside the moved clique"
        )));
    }
    let mut out = g.clone();
    for &u in block.iter().filter(|&&u| u != from) {
        out.set_edge(from, u, false);
        out.set_edge(to, u, true);
    }
    Ok(out)
}

/// Adds every missing edge inside each block, turning a connected graph
/// into the clique tree with the same blocks and cut vertices.
pub fn complete_blocks(g: &Graph) -> Result<Graph> {
    let bd = block_decomposition(g)?;
    let pairs = bd.blocks.iter().flat_map(|b| {
        b.iter()
            .enumerate()
            .flat_map(move |(i, &u)| b[i + 1..].iter().map(move |&v| (u, v)))
    });
    Ok(g.with_edges_added(pairs))
}

/// Deletes a nonempty set of edges that all lie in one block, provided the
/// result stays connected.
pub fn delete_block_edges(g: &Graph, edges: &[(usize, usize)]) -> Result<Graph> {
    if edges.is_empty() {
        return Err(Error::InvalidDeletion("no edges given".into()));
    }
    let bd = block_decomposition(g)?;
    for &(u, v) in edges {
        if u >= g.n() || v >= g.n() || u == v || !g.has_edge(u, v) {
            return Err(Error::InvalidDeletion(format!("({u}, {v}) is not an edge")));
        }
    }
    let same_block = bd.blocks.iter().any(|b| {
        edges
            .iter()
            .all(|(u, v)| b.binary_search(u).is_ok() && b.binary_search(v).is_ok())
    });
    if !same_block {
        return Err(Error::InvalidDeletion("edges span several blocks".into()));
    }
    let mut out = g.clone();
    for &(u, v) in edges {
        out.set_edge(u, v, false);
    }
    if !out.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(out)
}
