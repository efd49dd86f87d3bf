//! The family `K_{s,(k−1)s} ∇ K_{m−s,n−(k−1)s}` and the auxiliary quantities used to
//! compare its members with `G_* = K_{1,k−1} ∇ K_{m−1,n−k+1}`.
//!
//! All polynomial data is exact (`i128`). Only the roots are floating point.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::spectral::{largest_real_root, PolyCoeffs, QuotientMatrix};

/// Relative widening applied to both ends of a root bracket.
const BRACKET_EPS: f64 = 1e-12;

/// `(k, m, n, s)` with `k ≥ 3`, `m ≥ 3`, `n ≥ (k−1)m + 1`, `1 ≤ s ≤ m − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ExtremalParams {
    pub k: i64,
    pub m: i64,
    pub n: i64,
    pub s: i64,
}

impl ExtremalParams {
    pub fn new(k: i64, m: i64, n: i64, s: i64) -> Result<Self> {
        let p = ExtremalParams { k, m, n, s };
        p.validate()?;
        Ok(p)
    }

    /// Same ranges except that `n = (k−1)m` is admitted. Used to probe the
    /// boundary of the hypothesis; graphs and polynomials still make sense there.
    pub fn new_unchecked_n(k: i64, m: i64, n: i64, s: i64) -> Result<Self> {
        let p = ExtremalParams { k, m, n, s };
        if n < (k - 1) * m {
            return Err(Error::input(format!("need n ≥ (k−1)m = {}, got n = {n}", (k - 1) * m)));
        }
        p.validate_ks()?;
        Ok(p)
    }

    fn validate_ks(&self) -> Result<()> {
        let ExtremalParams { k, m, s, .. } = *self;
        if k < 3 {
            return Err(Error::input(format!("need k ≥ 3, got {k}")));
        }
        if m < 3 {
            return Err(Error::input(format!("need m ≥ 3, got {m}")));
        }
        if s < 1 || s > m - 1 {
            return Err(Error::input(format!("need 1 ≤ s ≤ m − 1 = {}, got s = {s}", m - 1)));
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.validate_ks()?;
        let ExtremalParams { k, m, n, .. } = *self;
        if n < (k - 1) * m + 1 {
            return Err(Error::input(format!(
                "need n ≥ (k−1)m + 1 = {}, got n = {n}",
                (k - 1) * m + 1
            )));
        }
        Ok(())
    }

    /// `|N(S)| = (k−1)s`.
    pub fn r(&self) -> i64 {
        (self.k - 1) * self.s
    }

    /// The same `(k, m, n)` with `s = 1`, i.e. the parameters of `G_*`.
    pub fn star(&self) -> ExtremalParams {
        ExtremalParams { s: 1, ..*self }
    }

    /// Interval that must contain the largest quotient root: `(m + (k−1)s, m + n)`.
    pub fn root_bracket(&self) -> (f64, f64) {
        let lo = (self.m + self.r()) as f64;
        let hi = (self.m + self.n) as f64;
        (lo * (1.0 - BRACKET_EPS), hi * (1.0 + BRACKET_EPS))
    }
}

/// `K_{s,r} ∇ K_{m−s,n−r}` for arbitrary `1 ≤ s < m`, `1 ≤ r < n`.
pub fn join_complete(s: usize, r: usize, m: usize, n: usize) -> Result<BipartiteGraph> {
    if s == 0 || s >= m || r == 0 || r >= n {
        return Err(Error::input(format!(
            "need 1 ≤ s < m and 1 ≤ r < n (s = {s}, r = {r}, m = {m}, n = {n})"
        )));
    }
    let left = BipartiteGraph::complete_bipartite(s, r)?;
    let right = BipartiteGraph::complete_bipartite(m - s, n - r)?;
    Ok(BipartiteGraph::join(&left, &right))
}

pub fn build_extremal(p: &ExtremalParams) -> Result<BipartiteGraph> {
    p.validate_ks()?;
    join_complete(p.s as usize, p.r() as usize, p.m as usize, p.n as usize)
}

/// `G_* = K_{1,k−1} ∇ K_{m−1,n−k+1}`.
pub fn build_star(k: i64, m: i64, n: i64) -> Result<BipartiteGraph> {
    build_extremal(&ExtremalParams::new(k, m, n, 1)?)
}

/// The partition `S | A−S | N(S) | B−N(S)` of an extremal graph, in combined vertex numbering.
pub fn extremal_partition(p: &ExtremalParams) -> Vec<Vec<usize>> {
    let (m, n, s, r) = (p.m as usize, p.n as usize, p.s as usize, p.r() as usize);
    vec![
        (0..s).collect(),
        (s..m).collect(),
        (m..m + r).collect(),
        (m + r..m + n).collect(),
    ]
}

/// Closed-form quotient matrix of `Q(G_1)` under [`extremal_partition`].
pub fn quotient_b1(p: &ExtremalParams) -> Result<QuotientMatrix> {
    p.validate_ks()?;
    let ExtremalParams { m, n, s, .. } = *p;
    let r = p.r();
    QuotientMatrix::from_integer_rows(
        &[
            vec![r, 0, r, 0],
            vec![0, n, r, n - r],
            vec![s, m - s, m, 0],
            vec![0, m - s, 0, m - s],
        ],
        vec![s as usize, (m - s) as usize, r as usize, (n - r) as usize],
        true,
    )
}

/// Coefficients of `φ_{B₁}(x)` from its expanded closed form.
pub fn phi_coeffs(p: &ExtremalParams) -> PolyCoeffs {
    let (k, m, n, s) = (p.k as i128, p.m as i128, p.n as i128, p.s as i128);
    let c3 = -(2 * m + n + k * s - 2 * s);
    let c2 = m * m + m * n + 2 * k * m * s + k * n * s - 3 * m * s - n * s - 2 * k * s * s + 2 * s * s;
    let c1 = k * m * s * s - m * s * s + k * n * s * s - n * s * s - k * m * m * s + m * m * s
        - k * m * n * s
        + m * n * s;
    PolyCoeffs::new(vec![0, c1, c2, c3, 1])
}

/// Coefficients of `φ_{B_*}(x)` from its own closed form (independent of `s`).
pub fn phi_star_coeffs(k: i64, m: i64, n: i64) -> PolyCoeffs {
    let (k, m, n) = (k as i128, m as i128, n as i128);
    let c3 = -(2 * m + n + k - 2);
    let c2 = m * m + m * n + 2 * k * m + k * n - 3 * m - n - 2 * k + 2;
    let c1 = k * m - m + k * n - n - k * m * m + m * m - k * m * n + m * n;
    PolyCoeffs::new(vec![0, c1, c2, c3, 1])
}

/// `ψ` as an integer quadratic, ascending coefficients.
pub fn psi_coeffs(p: &ExtremalParams) -> PolyCoeffs {
    let (k, m, n, s) = (p.k as i128, p.m as i128, p.n as i128, p.s as i128);
    let c2 = k - 2;
    let c1 = -(2 * k * m + k * n - 3 * m - n - 2 * k * s - 2 * k + 2 * s + 2);
    let c0 = -k * m * s - k * m + m * s + m - k * n * s - k * n + n * s + n + k * m * m - m * m
        + k * m * n
        - m * n;
    PolyCoeffs::new(vec![c0, c1, c2])
}

pub fn psi_eval(x: f64, p: &ExtremalParams) -> f64 {
    psi_coeffs(p).eval(x)
}

pub fn psi_eval_exact(x: i128, p: &ExtremalParams) -> i128 {
    psi_coeffs(p).eval_exact(x)
}

/// `h(s) = k(k−1)s² − (kn − 2k + 2)s + m − n`.
pub fn h_eval(s: i64, k: i64, m: i64, n: i64) -> i128 {
    let (s, k, m, n) = (s as i128, k as i128, m as i128, n as i128);
    k * (k - 1) * s * s - (k * n - 2 * k + 2) * s + m - n
}

/// `f(n) = −n² + (km − 2m)n + km² − m²`. Unrelated to the degree demand `f`.
pub fn f_eval(n: i64, k: i64, m: i64) -> i128 {
    let (n, k, m) = (n as i128, k as i128, m as i128);
    -n * n + (k * m - 2 * m) * n + k * m * m - m * m
}

/// Largest root `q₁` of `φ_{B₁}`, bracketed by `(m + (k−1)s, m + n)`.
pub fn q1(p: &ExtremalParams) -> Result<f64> {
    largest_real_root(&phi_coeffs(p), p.root_bracket())
}

/// The spectral threshold `q_* = q(K_{1,k−1} ∇ K_{m−1,n−k+1})`.
pub fn bound_qstar(k: i64, m: i64, n: i64) -> Result<f64> {
    star_root(&ExtremalParams::new(k, m, n, 1)?)
}

/// Largest root of `φ_{B_*}` for the `(k, m, n)` of `p`, without re-checking `n`.
pub fn star_root(p: &ExtremalParams) -> Result<f64> {
    largest_real_root(&phi_star_coeffs(p.k, p.m, p.n), p.star().root_bracket())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{char_poly, quotient_matrix, signless_laplacian, spectral_radius};

    fn p(k: i64, m: i64, n: i64, s: i64) -> ExtremalParams {
        ExtremalParams::new(k, m, n, s).unwrap()
    }

    #[test]
    fn param_validation() {
        assert!(ExtremalParams::new(2, 3, 7, 1).is_err());
        assert!(ExtremalParams::new(3, 2, 7, 1).is_err());
        assert!(ExtremalParams::new(3, 3, 6, 1).is_err());
        assert!(ExtremalParams::new(3, 3, 7, 0).is_err());
        assert!(ExtremalParams::new(3, 3, 7, 3).is_err());
        assert!(ExtremalParams::new_unchecked_n(3, 3, 6, 1).is_ok());
        assert!(ExtremalParams::new_unchecked_n(3, 3, 5, 1).is_err());
        assert!(build_extremal(&ExtremalParams { k: 3, m: 3, n: 7, s: 5 }).is_err());
    }

    #[test]
    fn star_graph_shape() {
        let g = build_extremal(&p(3, 3, 7, 1)).unwrap();
        assert_eq!(g.edge_count(), 16);
        let a: Vec<_> = (0..3).map(|a| g.degree_a(a)).collect();
        assert_eq!(a, vec![2, 7, 7]);
        let b: Vec<_> = (0..7).map(|b| g.degree_b(b)).collect();
        assert_eq!(b, vec![3, 3, 2, 2, 2, 2, 2]);
        assert!(g.is_connected());
    }

    #[test]
    fn edge_counts() {
        assert_eq!(build_extremal(&p(3, 3, 7, 2)).unwrap().edge_count(), 15);
        for k in 3..=5 {
            for m in 3..=5 {
                for n in (k - 1) * m + 1..=(k - 1) * m + 3 {
                    for s in 1..m {
                        let g = build_extremal(&p(k, m, n, s)).unwrap();
                        let expect = (k - 1) * s * s + (m - s) * n;
                        assert_eq!(g.edge_count() as i64, expect);
                    }
                }
            }
        }
    }

    #[test]
    fn printed_quotients() {
        let b = quotient_b1(&p(3, 3, 7, 1)).unwrap();
        assert_eq!(
            b.integer_rows().unwrap(),
            vec![vec![2, 0, 2, 0], vec![0, 7, 2, 5], vec![1, 2, 3, 0], vec![0, 2, 0, 2]]
        );
        let b = quotient_b1(&p(3, 3, 7, 2)).unwrap();
        assert_eq!(
            b.integer_rows().unwrap(),
            vec![vec![4, 0, 4, 0], vec![0, 7, 4, 3], vec![2, 1, 3, 0], vec![0, 1, 0, 1]]
        );
        assert_eq!(b.block_sizes(), &[2, 1, 4, 3]);
    }

    #[test]
    fn closed_form_quotient_matches_graph() {
        for params in [p(3, 3, 7, 1), p(3, 3, 7, 2), p(4, 5, 17, 3), p(5, 4, 20, 2)] {
            let g = build_extremal(&params).unwrap();
            let qm = quotient_matrix(&g, &extremal_partition(&params)).unwrap();
            assert!(qm.is_equitable());
            assert_eq!(qm, quotient_b1(&params).unwrap());
        }
    }

    #[test]
    fn phi_at_smallest_point() {
        assert_eq!(
            phi_coeffs(&p(3, 3, 7, 1)),
            PolyCoeffs::from_descending(&[1, -14, 49, -40, 0])
        );
        assert_eq!(phi_star_coeffs(3, 3, 7), phi_coeffs(&p(3, 3, 7, 1)));
        let b = quotient_b1(&p(3, 3, 7, 2)).unwrap();
        assert_eq!(char_poly(&b).unwrap(), phi_coeffs(&p(3, 3, 7, 2)));
        assert_eq!(phi_coeffs(&p(4, 4, 15, 3)).coeffs[0], 0);
    }

    #[test]
    fn psi_identity_at_random_points() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let params = p(4, 5, 18, 3);
        let star = phi_star_coeffs(params.k, params.m, params.n);
        let phi = phi_coeffs(&params);
        for _ in 0..20 {
            let x: f64 = rng.gen_range(-5.0..40.0);
            let lhs = star.eval(x) - phi.eval(x);
            let rhs = x * (params.s - 1) as f64 * psi_eval(x, &params);
            assert!((lhs - rhs).abs() <= 1e-9 * lhs.abs().max(1.0), "{lhs} vs {rhs}");
        }
    }

    #[test]
    fn h_and_f_values() {
        assert_eq!(h_eval(2, 3, 3, 7), -14);
        assert_eq!(f_eval(6, 3, 3), 0);
        for k in 3..=8 {
            for m in 3..=8 {
                assert_eq!(f_eval((k - 1) * m, k, m), 0);
                assert!(f_eval((k - 1) * m + 1, k, m) < 0);
            }
        }
    }

    #[test]
    fn psi_at_lower_end_is_scaled_h() {
        let params = p(5, 5, 23, 3);
        let x = (params.m + params.r()) as i128;
        assert_eq!(
            psi_eval_exact(x, &params),
            (params.k as i128 - 1) * h_eval(params.s, params.k, params.m, params.n)
        );
    }

    #[test]
    fn qstar_smallest_point() {
        let q = bound_qstar(3, 3, 7).unwrap();
        assert!(q > 9.0 && q < 9.2);
        assert!(q < 10.0 && q > 5.0);
        let g = build_star(3, 3, 7).unwrap();
        let est = spectral_radius(&signless_laplacian(&g), 1e-12).unwrap();
        assert!((est.value - q).abs() < 1e-8);
    }

    #[test]
    fn join_complete_rejects_degenerate() {
        assert!(join_complete(0, 1, 3, 7).is_err());
        assert!(join_complete(1, 7, 3, 7).is_err());
        assert!(join_complete(2, 3, 3, 7).is_ok());
    }
}
