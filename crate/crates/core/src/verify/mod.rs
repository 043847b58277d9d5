//! Empirical verification of the extremal statements about complements of
//! clique trees and block graphs.
//!
//! Each check enumerates (or samples) the instances a statement quantifies
//! over, filters them by the statement's standing hypothesis, and compares
//! spectral radii at tolerance [`EPSILON`]. Violations are reported with
//! their witness graphs; nothing is asserted here.

mod classes;
mod completion;
mod extremal;
mod identity;
mod moves;
mod report;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

pub use classes::{check_diameter_classes, ClassFamily, Dominance};
pub use completion::check_block_completion;
pub use extremal::{check_extremal, check_tree_chain, Bound, EqualityCase, ExtremalFamily};
pub use identity::{check_complement_identity, check_complement_identity_on};
pub use moves::{check_clique_moves, sample_move_instances};
pub use report::{classify, InstanceRecord, Status, TheoremReport, Violation};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{spectral_radius, MatrixKind, DEFAULT_TOL};

/// Comparison margin between spectral radii.
pub const EPSILON: f64 = 1e-8;

/// Largest order accepted for checks that enumerate every connected graph.
pub const MAX_CONNECTED_ORDER: usize = 8;
/// Largest order accepted for clique-tree and tree enumeration.
pub const MAX_CLIQUE_TREE_ORDER: usize = 12;

/// Which complement matrix a statement is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spectrum {
    /// `λ₁(A(G^c))`
    Adjacency,
    /// `λ₁(D(G^c))`
    Distance,
}

impl Spectrum {
    pub fn matrix_kind(self) -> MatrixKind {
        match self {
            Spectrum::Adjacency => MatrixKind::ComplementAdjacency,
            Spectrum::Distance => MatrixKind::ComplementDistance,
        }
    }

    /// Spectral radius of the complement matrix of `g`.
    pub fn radius(self, g: &Graph) -> Result<f64> {
        Ok(spectral_radius(g, self.matrix_kind(), DEFAULT_TOL)?.value)
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Spectrum::Adjacency => "adjacency",
            Spectrum::Distance => "distance",
        })
    }
}

/// Stable identifiers of the checked statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    L2_1,
    T2_2,
    L2_3,
    T2_4,
    T2_5,
    L3_1,
    L3_2,
    T3_3,
    L4_1,
    L4_2,
    L4_3,
    T4_4,
    T4_5,
    T4_6,
    L5_1,
    T5_2,
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::L2_1,
        TheoremId::T2_2,
        TheoremId::L2_3,
        TheoremId::T2_4,
        TheoremId::T2_5,
        TheoremId::L3_1,
        TheoremId::L3_2,
        TheoremId::T3_3,
        TheoremId::L4_1,
        TheoremId::L4_2,
        TheoremId::L4_3,
        TheoremId::T4_4,
        TheoremId::T4_5,
        TheoremId::T4_6,
        TheoremId::L5_1,
        TheoremId::T5_2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::L2_1 => "L2.1",
            TheoremId::T2_2 => "T2.2",
            TheoremId::L2_3 => "L2.3",
            TheoremId::T2_4 => "T2.4",
            TheoremId::T2_5 => "T2.5",
            TheoremId::L3_1 => "L3.1",
            TheoremId::L3_2 => "L3.2",
            TheoremId::T3_3 => "T3.3",
            TheoremId::L4_1 => "L4.1",
            TheoremId::L4_2 => "L4.2",
            TheoremId::L4_3 => "L4.3",
            TheoremId::T4_4 => "T4.4",
            TheoremId::T4_5 => "T4.5",
            TheoremId::T4_6 => "T4.6",
            TheoremId::L5_1 => "L5.1",
            TheoremId::T5_2 => "T5.2",
        }
    }

    /// Short description of the checked statement.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::L2_1 => "moving an end clique to a cut vertex of no larger Perron entry does not decrease λ1(A(C^c))",
            TheoremId::T2_2 => "λ1(A(C^c)) <= λ1(A(S^c)) for clique trees with two nonadjacent cut vertices",
            TheoremId::L2_3 => "clique trees: max λ1(A(C^c)) over diameter d >= max over diameter d+1",
            TheoremId::T2_4 => "λ1(A(C^c)) >= λ1(A(P^c)), equality iff C ≅ P",
            TheoremId::T2_5 => "trees with d > 3: λ1(A(P_n^c)) <= λ1(A(T^c)) <= λ1(A(T(n-3,1)^c))",
            TheoremId::L3_1 => "block graphs: max λ1(A(B^c)) over diameter d+1 >= max over diameter d",
            TheoremId::L3_2 => "λ1(A(B^c)) >= λ1(A(C_B^c)), equality iff B ≅ C_B",
            TheoremId::T3_3 => "block graphs: λ1(A(B^c)) >= λ1(A(P^c)), equality iff B ≅ P",
            TheoremId::L4_1 => "D(G^c) = J - I + A(G) for d(G) > 3 and D(G^c) >= J - I + A(G) for d(G) = 3",
            TheoremId::L4_2 => "moving an end clique to a cut vertex of no smaller Perron entry does not decrease λ1(D(C^c))",
            TheoremId::L4_3 => "clique trees: max λ1(D(C^c)) over diameter d >= max over diameter d+1",
            TheoremId::T4_4 => "λ1(D(C^c)) >= λ1(D(P^c)), equality iff C ≅ P",
            TheoremId::T4_5 => "λ1(D(C^c)) <= λ1(D(S^c)) for clique trees with two nonadjacent cut vertices",
            TheoremId::T4_6 => "trees with d > 3: λ1(D(P_n^c)) <= λ1(D(T^c)) <= λ1(D(T(n-3,1)^c))",
            TheoremId::L5_1 => "λ1(D(B^c)) <= λ1(D(C_B^c)), equality iff B ≅ C_B",
            TheoremId::T5_2 => "block graphs: λ1(D(B^c)) <= λ1(D(S^c)), equality iff B ≅ S",
        }
    }

    /// Default order parameter `n` used when none is given.
    pub fn default_n(self) -> usize {
        match self {
            TheoremId::L2_1 | TheoremId::L4_2 => 10,
            TheoremId::T2_5 | TheoremId::T4_6 => 8,
            _ => 7,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "L4.4" {
            return Ok(TheoremId::T4_4);
        }
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// Parameters of a verification run; `None` picks the per-theorem default.
///
/// `n` is an exact order for the tree chains and diameter-class checks, an
/// upper bound on the order for the exhaustive checks over all clique trees
/// or block graphs, and the largest sampled order for the clique-move
/// checks.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerifyOptions {
    pub n: Option<usize>,
    pub s: Option<usize>,
    pub d: Option<usize>,
    pub trials: Option<usize>,
    pub seed: u64,
}

/// Runs the check behind `id` and stamps the elapsed time.
pub fn run(id: TheoremId, opts: &VerifyOptions) -> Result<TheoremReport> {
    let start = Instant::now();
    let n = opts.n.unwrap_or_else(|| id.default_n());
    let trials = opts.trials.unwrap_or(1000);
    use ExtremalFamily::{BlockGraph, CliqueTree};
    let mut report = match id {
        TheoremId::L4_1 => check_complement_identity(n)?,
        TheoremId::L2_1 => check_clique_moves(Spectrum::Adjacency, trials, opts.seed, n)?,
        TheoremId::L4_2 => check_clique_moves(Spectrum::Distance, trials, opts.seed, n)?,
        TheoremId::L2_3 => check_diameter_classes(
            ClassFamily::CliqueTree,
            Spectrum::Adjacency,
            n,
            opts.d,
            opts.s,
        )?,
        TheoremId::L4_3 => check_diameter_classes(
            ClassFamily::CliqueTree,
            Spectrum::Distance,
            n,
            opts.d,
            opts.s,
        )?,
        TheoremId::L3_1 => check_diameter_classes(
            ClassFamily::BlockGraph,
            Spectrum::Adjacency,
            n,
            opts.d,
            opts.s,
        )?,
        TheoremId::T2_2 => {
            check_extremal(CliqueTree, Spectrum::Adjacency, Bound::StarUpper, n, opts.s)?
        }
        TheoremId::T2_4 => {
            check_extremal(CliqueTree, Spectrum::Adjacency, Bound::PathLower, n, opts.s)?
        }
        TheoremId::T4_4 => {
            check_extremal(CliqueTree, Spectrum::Distance, Bound::PathLower, n, opts.s)?
        }
        TheoremId::T4_5 => {
            check_extremal(CliqueTree, Spectrum::Distance, Bound::StarUpper, n, opts.s)?
        }
        TheoremId::T3_3 => {
            check_extremal(BlockGraph, Spectrum::Adjacency, Bound::PathLower, n, opts.s)?
        }
        TheoremId::T5_2 => {
            check_extremal(BlockGraph, Spectrum::Distance, Bound::StarUpper, n, opts.s)?
        }
        TheoremId::T2_5 => check_tree_chain(Spectrum::Adjacency, n)?,
        TheoremId::T4_6 => check_tree_chain(Spectrum::Distance, n)?,
        TheoremId::L3_2 => check_block_completion(Spectrum::Adjacency, n)?,
        TheoremId::L5_1 => check_block_completion(Spectrum::Distance, n)?,
    };
    report.theorem = id.as_str().to_string();
    if matches!(id, TheoremId::L2_1 | TheoremId::L4_2) {
        report.params.insert("seed".into(), opts.seed.into());
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

pub(crate) fn ensure_order(n: usize, max: usize, what: &str) -> Result<()> {
    if n > max {
        Err(Error::Infeasible(format!(
            "{what} enumeration is limited to n <= {max}, got {n}"
        )))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!("L4.4".parse::<TheoremId>().unwrap(), TheoremId::T4_4);
        assert_eq!(
            "X9.9".parse::<TheoremId>(),
            Err(Error::UnknownTheorem("X9.9".into()))
        );
    }
}
