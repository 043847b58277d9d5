//! Adjacency and distance matrices of graphs and their complements, and the
//! dominant eigenpairs of those matrices.

mod eigen;
mod matrix;

use std::fmt;
use std::str::FromStr;

pub use eigen::{
    dominant_eigenpair, jacobi_eigen, power_iteration, rayleigh_quotient, EigenPair,
    SymmetricEigen, MAX_JACOBI_SWEEPS,
};
pub use matrix::SymMatrix;

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, diameter, Graph};

/// Residual tolerance for eigenpairs.
pub const DEFAULT_TOL: f64 = 1e-10;

pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.n());
    for (u, v) in g.edges() {
        m.set(u, v, 1.0);
    }
    m
}

/// Distance matrix of a connected graph.
pub fn distance_matrix(g: &Graph) -> Result<SymMatrix> {
    let d = bfs_distances(g);
    if !d.is_finite() {
        return Err(Error::Disconnected);
    }
    Ok(SymMatrix::from_fn(g.n(), |u, v| {
        f64::from(d.get(u, v).expect("connected"))
    }))
}

/// `J_n − I_n + A(g)`: all-ones off the diagonal, 2 on the edges of `g`.
pub fn complement_identity_matrix(g: &Graph) -> SymMatrix {
    SymMatrix::from_fn(g.n(), |u, v| match (u == v, g.has_edge(u, v)) {
        (true, _) => 0.0,
        (false, true) => 2.0,
        (false, false) => 1.0,
    })
}

/// Exact `D(g^c)` by BFS on the complement.
///
/// Requires `diameter(g) >= 3`, which keeps the complement connected. For
/// diameter above 3 the result equals [`complement_identity_matrix`]; at
/// diameter 3 it dominates it entrywise.
pub fn complement_distance_matrix(g: &Graph) -> Result<SymMatrix> {
    match diameter(g) {
        Some(d) if d < 3 => return Err(Error::DiameterTooSmall(d.to_string())),
        None => return Err(Error::Disconnected),
        Some(_) => {}
    }
    distance_matrix(&g.complement())
}

/// Which matrix of a graph to take the spectral radius of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Adjacency,
    Distance,
    ComplementAdjacency,
    ComplementDistance,
}

impl MatrixKind {
    pub fn matrix(self, g: &Graph) -> Result<SymMatrix> {
        match self {
            MatrixKind::Adjacency => Ok(adjacency_matrix(g)),
            MatrixKind::Distance => distance_matrix(g),
            MatrixKind::ComplementAdjacency => Ok(adjacency_matrix(&g.complement())),
            MatrixKind::ComplementDistance => complement_distance_matrix(g),
        }
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adjacency" => Ok(MatrixKind::Adjacency),
            "distance" => Ok(MatrixKind::Distance),
            "cadjacency" => Ok(MatrixKind::ComplementAdjacency),
            "cdistance" => Ok(MatrixKind::ComplementDistance),
            other => Err(Error::InvalidFamily(format!(
                "unknown matrix kind `{other}`"
            ))),
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Distance => "distance",
            MatrixKind::ComplementAdjacency => "cadjacency",
            MatrixKind::ComplementDistance => "cdistance",
        })
    }
}

/// Dominant eigenpair of the requested matrix of `g`.
pub fn spectral_radius(g: &Graph, kind: MatrixKind, tol: f64) -> Result<EigenPair> {
    dominant_eigenpair(&kind.matrix(g)?, tol)
}

/// Formats `x` with `digits` significant digits, in positional notation
/// unless the magnitude is extreme. `format_significant(4.0, 12)` is
/// `"4.00000000000"`.
pub fn format_significant(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .unwrap_or(0);
    if x == 0.0 || (-5..digits as i32).contains(&exp) {
        let precision = (digits as i32 - 1 - if x == 0.0 { 0 } else { exp }).max(0) as usize;
        format!("{x:.precision$}")
    } else {
        sci
    }
}
