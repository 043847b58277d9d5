//! Spectral radius and distance spectral radius of complements of clique
//! trees and block graphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: dense simple graphs, complements, BFS distances, block
//!   decomposition, isomorphism and the edge-list text format.
//! - [`spectral`]: adjacency and distance matrices, the dominant eigenpair
//!   solver (shifted power iteration with a cyclic Jacobi fallback) and the
//!   complement distance identity `D(G^c) = J - I + A(G)`.
//! - [`families`]: clique paths, clique stars, brooms, clique-tree specs and
//!   exhaustive / random generators.
//! - [`transforms`]: moving an end clique, completing blocks to cliques and
//!   deleting block edges.
//! - [`verify`]: checks every extremal inequality over enumerated or sampled
//!   instances and produces [`verify::TheoremReport`]s.
//!
//! The `blockspec` binary is a thin command-line front end over these modules.

#![forbid(unsafe_code)]

pub mod error;
pub mod families;
pub mod graph;
pub mod spectral;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{BlockDecomposition, DistanceMatrix, Graph};
pub use spectral::{EigenPair, MatrixKind, SymMatrix};
pub use verify::TheoremReport;
