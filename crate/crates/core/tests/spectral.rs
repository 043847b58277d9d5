use blockspec::families::{clique_path, path_graph, random_clique_tree};
use blockspec::spectral::{
    complement_identity_matrix, dominant_eigenpair, jacobi_eigen, power_iteration,
    rayleigh_quotient, spectral_radius, DEFAULT_TOL,
};
use blockspec::{Graph, MatrixKind, SymMatrix};
use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_connected(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

fn nalgebra_max(m: &SymMatrix) -> f64 {
    let n = m.n();
    let dm = DMatrix::from_fn(n, n, |i, j| m[(i, j)]);
    dm.symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max)
}

#[test]
fn agrees_with_nalgebra_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..500 {
        let n = rng.random_range(2..=12);
        let g = random_connected(n, 0.35, &mut rng);
        for kind in [MatrixKind::Adjacency, MatrixKind::Distance] {
            let m = kind.matrix(&g).unwrap();
            let ours = spectral_radius(&g, kind, DEFAULT_TOL).unwrap();
            let oracle = nalgebra_max(&m);
            assert!(
                (ours.value - oracle).abs() < 1e-8,
                "trial {trial} {kind}: {} vs {oracle}",
                ours.value
            );
            let jac = jacobi_eigen(&m).unwrap();
            assert!((jac.values[0] - oracle).abs() < 1e-8);
        }
    }
}

#[test]
fn complement_matrices_agree_with_nalgebra() {
    for seed in 0..50 {
        let g = random_clique_tree(9, 4, seed).unwrap();
        for kind in [
            MatrixKind::ComplementAdjacency,
            MatrixKind::ComplementDistance,
        ] {
            let Ok(m) = kind.matrix(&g) else { continue };
            let ours = spectral_radius(&g, kind, DEFAULT_TOL).unwrap();
            assert!((ours.value - nalgebra_max(&m)).abs() < 1e-8);
        }
    }
}

#[test]
fn perron_vectors_are_positive_unit_eigenvectors() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let n = rng.random_range(2..=10);
        let g = random_connected(n, 0.4, &mut rng);
        let m = MatrixKind::Distance.matrix(&g).unwrap();
        let p = dominant_eigenpair(&m, DEFAULT_TOL).unwrap();
        let norm: f64 = p.vector.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!((norm - 1.0).abs() < 1e-9);
        assert!(p.vector.iter().all(|&x| x > 0.0));
        let mx = m.mul_vec(&p.vector);
        for (y, x) in mx.iter().zip(&p.vector) {
            assert!((y - p.value * x).abs() < 1e-8);
        }
    }
}

#[test]
fn distance_complement_matches_identity_on_long_paths() {
    for n in 5..=20 {
        let g = path_graph(n).unwrap();
        let d = MatrixKind::ComplementDistance.matrix(&g).unwrap();
        assert_eq!(d, complement_identity_matrix(&g));
    }
    let g = clique_path(&[3, 2, 2, 4]).unwrap();
    assert_eq!(
        MatrixKind::ComplementDistance.matrix(&g).unwrap(),
        complement_identity_matrix(&g)
    );
}

#[test]
fn power_iteration_agrees_with_jacobi() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.random_range(2..=12);
        let g = random_connected(n, 0.5, &mut rng);
        let m = MatrixKind::Adjacency.matrix(&g).unwrap();
        let jac = jacobi_eigen(&m).unwrap().values[0];
        // non-bipartite connected graphs converge without the shift, the shift handles the rest
        if let Some(p) = power_iteration(&m, DEFAULT_TOL, 100_000) {
            assert!((p.value - jac).abs() < 1e-8);
        }
        assert!((dominant_eigenpair(&m, DEFAULT_TOL).unwrap().value - jac).abs() < 1e-8);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rayleigh_quotients_are_bounded_by_lambda1(seed in any::<u64>(), n in 2usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(n, 0.4, &mut rng);
        let m = MatrixKind::Distance.matrix(&g).unwrap();
        let lambda = dominant_eigenpair(&m, DEFAULT_TOL).unwrap().value;
        for _ in 0..16 {
            let x: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
            if x.iter().all(|v| v.abs() < 1e-12) {
                continue;
            }
            prop_assert!(rayleigh_quotient(&m, &x).unwrap() <= lambda + 1e-9);
        }
    }
}
