//! Dominant eigenpairs of dense symmetric matrices.
//!
//! Entrywise nonnegative matrices go through shifted power iteration on
//! `M + cI`, `c` the largest absolute row sum, started from the normalised
//! all-ones vector. If that does not converge within `100 n` steps, or the
//! matrix has a negative entry, a cyclic Jacobi eigensolve (at most 30
//! sweeps) takes over. Exhausting both is an error.

use super::SymMatrix;
use crate::error::{Error, Result};

/// Dominant eigenvalue with a unit eigenvector and its residual
/// `‖Mx − λx‖₂`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
    pub residual: f64,
}

/// Full spectrum from the Jacobi solver, eigenvalues in nonincreasing order
/// with matching unit eigenvectors.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

pub const MAX_JACOBI_SWEEPS: usize = 30;

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|a| a * a).sum::<f64>().sqrt()
}

fn residual(m: &SymMatrix, value: f64, x: &[f64]) -> f64 {
    let y = m.mul_vec(x);
    norm(
        &y.iter()
            .zip(x)
            .map(|(a, b)| a - value * b)
            .collect::<Vec<_>>(),
    )
}

/// `x^T M x / x^T x`.
pub fn rayleigh_quotient(m: &SymMatrix, x: &[f64]) -> Result<f64> {
    if x.len() != m.n() {
        return Err(Error::DimensionMismatch {
            expected: m.n(),
            got: x.len(),
        });
    }
    let xx: f64 = x.iter().map(|a| a * a).sum();
    if xx == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(m.quadratic_form(x) / xx)
}

/// Shifted power iteration. Returns `None` when `max_iter` steps pass
/// without both the residual and the change in Rayleigh quotient dropping
/// below `tol`.
pub fn power_iteration(m: &SymMatrix, tol: f64, max_iter: usize) -> Option<EigenPair> {
    let n = m.n();
    let mut shift = m.max_abs_row_sum();
    if shift == 0.0 {
        shift = 1.0;
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut previous = f64::INFINITY;
    for _ in 0..max_iter {
        let y = m.mul_vec(&x);
        let rq: f64 = y.iter().zip(&x).map(|(a, b)| a * b).sum();
        let res = norm(
            &y.iter()
                .zip(&x)
                .map(|(a, b)| a - rq * b)
                .collect::<Vec<_>>(),
        );
        if res < tol && (rq - previous).abs() < tol {
            return Some(EigenPair {
                value: rq,
                vector: x,
                residual: res,
            });
        }
        previous = rq;
        let mut z: Vec<f64> = y.iter().zip(&x).map(|(a, b)| a + shift * b).collect();
        let len = norm(&z);
        if len == 0.0 || !len.is_finite() {
            return None;
        }
        z.iter_mut().for_each(|a| *a /= len);
        x = z;
    }
    None
}

/// Cyclic Jacobi rotations until the off-diagonal mass is negligible.
pub fn jacobi_eigen(m: &SymMatrix) -> Result<SymmetricEigen> {
    let n = m.n();
    let mut a = m.as_slice().to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let threshold = n as f64 * f64::EPSILON * m.frobenius_norm();
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };
    let mut converged = off(&a) <= threshold;
    let mut sweeps = 0;
    while !converged && sweeps < MAX_JACOBI_SWEEPS {
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        converged = off(&a) <= threshold;
    }
    if !converged {
        return Err(Error::NoConvergence(format!(
            "Jacobi off-diagonal norm {:e} after {MAX_JACOBI_SWEEPS} sweeps",
            off(&a)
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = order
        .iter()
        .map(|&i| (0..n).map(|k| v[k * n + i]).collect())
        .collect();
    Ok(SymmetricEigen { values, vectors })
}

/// Largest eigenvalue of `m` with a unit eigenvector whose residual is at
/// most `tol`. For nonnegative irreducible `m` the vector is the positive
/// Perron vector.
pub fn dominant_eigenpair(m: &SymMatrix, tol: f64) -> Result<EigenPair> {
    dominant_eigenpair_capped(m, tol, 100 * m.n())
}

fn dominant_eigenpair_capped(m: &SymMatrix, tol: f64, power_cap: usize) -> Result<EigenPair> {
    let n = m.n();
    if n == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: 0,
        });
    }
    for i in 0..n {
        for j in i + 1..n {
            if m[(i, j)] != m[(j, i)] {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }
    if m.is_nonnegative() {
        if let Some(pair) = power_iteration(m, tol, power_cap) {
            return Ok(pair);
        }
    }
    let eig = jacobi_eigen(m)?;
    let value = eig.values[0];
    let mut vector = eig.vectors[0].clone();
    let len = norm(&vector);
    vector.iter_mut().for_each(|a| *a /= len);
    if vector.iter().sum::<f64>() < 0.0 {
        vector.iter_mut().for_each(|a| *a = -*a);
    }
    let res = residual(m, value, &vector);
    if res > tol {
        return Err(Error::NoConvergence(format!(
            "power iteration hit its cap and Jacobi residual {res:e} exceeds {tol:e}"
        )));
    }
    Ok(EigenPair {
        value,
        vector,
        residual: res,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-10;

    fn adjacency(n: usize, edges: &[(usize, usize)]) -> SymMatrix {
        let mut m = SymMatrix::zeros(n);
        for &(u, v) in edges {
            m.set(u, v, 1.0);
        }
        m
    }

    #[test]
    fn complete_graph_is_regular() {
        let m = SymMatrix::from_fn(5, |i, j| if i == j { 0.0 } else { 1.0 });
        let pair = dominant_eigenpair(&m, TOL).unwrap();
        assert!((pair.value - 4.0).abs() < 1e-12);
        for x in &pair.vector {
            assert!((x - 1.0 / 5f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn path_p3() {
        let m = adjacency(3, &[(0, 1), (1, 2)]);
        let pair = dominant_eigenpair(&m, TOL).unwrap();
        // λ(λ² − 2) = 0
        assert!((pair.value - 2f64.sqrt()).abs() < 1e-10);
        assert!(pair.residual <= TOL);
        let rq = rayleigh_quotient(&m, &pair.vector).unwrap();
        assert!((rq - 2f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn distance_matrix_of_p3() {
        let m = SymMatrix::from_rows(&[
            vec![0.0, 1.0, 2.0],
            vec![1.0, 0.0, 1.0],
            vec![2.0, 1.0, 0.0],
        ])
        .unwrap();
        let pair = dominant_eigenpair(&m, TOL).unwrap();
        let l = pair.value;
        // root of λ³ − 6λ − 4
        assert!((l * l * l - 6.0 * l - 4.0).abs() < 1e-9);
        assert!((l - (1.0 + 3f64.sqrt())).abs() < 1e-10);
    }

    #[test]
    fn star_center_to_leaf_ratio() {
        let m = adjacency(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let pair = dominant_eigenpair(&m, TOL).unwrap();
        assert!((pair.value - 2.0).abs() < 1e-10);
        // λ x_leaf = x_center
        assert!((pair.vector[0] / pair.vector[1] - 2.0).abs() < 1e-9);
    }

    #[test]
    fn rayleigh_quotient_basics() {
        let k2 = adjacency(2, &[(0, 1)]);
        assert_eq!(rayleigh_quotient(&k2, &[1.0, 1.0]).unwrap(), 1.0);
        let m = SymMatrix::from_fn(3, |i, j| (i + 2 * j) as f64);
        assert_eq!(rayleigh_quotient(&m, &[1.0, 0.0, 0.0]).unwrap(), m[(0, 0)]);
        assert_eq!(rayleigh_quotient(&m, &[0.0; 3]), Err(Error::ZeroVector));
    }

    #[test]
    fn single_vertex_and_zero_matrix() {
        let pair = dominant_eigenpair(&SymMatrix::zeros(1), TOL).unwrap();
        assert_eq!(pair.value, 0.0);
        assert_eq!(pair.vector, vec![1.0]);
        let pair = dominant_eigenpair(&SymMatrix::zeros(4), TOL).unwrap();
        assert_eq!(pair.value, 0.0);
    }

    #[test]
    fn negative_entries_use_jacobi() {
        // top eigenvector (1, −1)/√2 is orthogonal to the all-ones start
        let m = SymMatrix::from_rows(&[vec![0.0, -1.0], vec![-1.0, 0.0]]).unwrap();
        let pair = dominant_eigenpair(&m, TOL).unwrap();
        assert!((pair.value - 1.0).abs() < 1e-12);
        assert!((pair.vector[0] + pair.vector[1]).abs() < 1e-12);
    }

    #[test]
    fn slow_power_iteration_falls_back() {
        let n = 50;
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        let m = adjacency(n, &edges);
        assert!(power_iteration(&m, TOL, 5).is_none());
        let pair = dominant_eigenpair_capped(&m, TOL, 5).unwrap();
        let expected = 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos();
        assert!((pair.value - expected).abs() < 1e-10);
        assert!(pair.vector.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn jacobi_sorts_spectrum() {
        let m = adjacency(4, &[(0, 1), (1, 2), (2, 3)]);
        let eig = jacobi_eigen(&m).unwrap();
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        let expected = [golden, golden - 1.0, 1.0 - golden, -golden];
        for (a, b) in eig.values.iter().zip(expected) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }
}
