//! Values frozen from independent computations (dense symmetric eigensolvers,
//! computer-algebra characteristic polynomials, inclusion-exclusion counts).

use nalgebra::DMatrix;
use qbound::extremal::{bound_qstar, build_extremal, build_star, phi_coeffs, q1, quotient_b1, ExtremalParams};
use qbound::spectral::{char_poly, jacobi_eigen, signless_laplacian, spectral_radius, PolyCoeffs, DEFAULT_TOL};
use qbound::verify::{enumerate_bipartite, random_connected};
use qbound::BipartiteGraph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn nalgebra_q(g: &BipartiteGraph) -> f64 {
    let q = signless_laplacian(g);
    let t = q.order();
    let mut m = DMatrix::<f64>::zeros(t, t);
    for i in 0..t {
        for j in 0..t {
            m[(i, j)] = q.get(i, j);
        }
    }
    m.symmetric_eigen().eigenvalues.max()
}

#[test]
fn qstar_frozen_values() {
    let cases = [
        (3, 3, 7, 9.096924095597053),
        (3, 4, 9, 12.075598655400857),
        (4, 3, 10, 12.07559865540086),
        (5, 5, 21, 25.038316703805673),
    ];
    for (k, m, n, want) in cases {
        let got = bound_qstar(k, m, n).unwrap();
        assert!((got - want).abs() < 1e-9, "q_*({k},{m},{n}) = {got}, want {want}");
        let g = build_star(k, m, n).unwrap();
        assert!((nalgebra_q(&g) - want).abs() < 1e-9);
    }
}

type QuotientCase = ((i64, i64, i64, i64), [[i64; 4]; 4], [i128; 5], f64);

#[test]
fn quotient_and_polynomial_frozen_values() {
    let cases: [QuotientCase; 3] = [
        (
            (3, 3, 7, 2),
            [[4, 0, 4, 0], [0, 7, 4, 3], [2, 1, 3, 0], [0, 1, 0, 1]],
            [1, -15, 60, -40, 0],
            8.482612919322584,
        ),
        (
            (4, 4, 13, 3),
            [[9, 0, 9, 0], [0, 13, 9, 4], [3, 1, 4, 0], [0, 1, 0, 1]],
            [1, -27, 191, -153, 0],
            14.768745575031696,
        ),
        (
            (5, 5, 21, 4),
            [[16, 0, 16, 0], [0, 21, 16, 5], [4, 1, 5, 0], [0, 1, 0, 1]],
            [1, -43, 478, -416, 0],
            23.02283257027451,
        ),
    ];
    for ((k, m, n, s), rows, desc, q) in cases {
        let p = ExtremalParams::new(k, m, n, s).unwrap();
        let b1 = quotient_b1(&p).unwrap();
        let want_rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        assert_eq!(b1.integer_rows().unwrap(), want_rows);
        let want = PolyCoeffs::from_descending(&desc);
        assert_eq!(char_poly(&b1).unwrap(), want);
        assert_eq!(phi_coeffs(&p), want);
        assert!((q1(&p).unwrap() - q).abs() < 1e-9);
        assert!((nalgebra_q(&build_extremal(&p).unwrap()) - q).abs() < 1e-9);
    }
}

#[test]
fn connected_counts_match_inclusion_exclusion() {
    for (m, n, want) in [(2, 2, 5), (1, 3, 1), (2, 3, 19)] {
        assert_eq!(enumerate_bipartite(m, n, true).unwrap().count(), want);
    }
}

#[test]
fn complete_bipartite_closed_form() {
    for m in 1..=8 {
        for n in 1..=8 {
            let g = BipartiteGraph::complete_bipartite(m, n).unwrap();
            let q = spectral_radius(&signless_laplacian(&g), DEFAULT_TOL).unwrap().value;
            assert!((q - (m + n) as f64).abs() < 1e-9);
        }
    }
}

#[test]
fn power_iteration_and_jacobi_match_nalgebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let g = random_connected(&mut rng, 9, 11);
        let want = nalgebra_q(&g);
        let est = spectral_radius(&signless_laplacian(&g), DEFAULT_TOL).unwrap();
        assert!((est.value - want).abs() < 1e-8, "{} vs {want}", est.value);
        let eig = jacobi_eigen(&signless_laplacian(&g));
        let top = eig.values.iter().cloned().fold(f64::MIN, f64::max);
        assert!((top - want).abs() < 1e-9);
    }
}
