//! Signless Laplacian spectra.
//!
//! Dense matrices only: everything here targets graphs with at most a few
//! thousand vertices, and the quotient matrices of the extremal family are 4×4.

use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// Largest order accepted by [`spectral_radius`].
pub const DENSE_CAP: usize = 4096;
/// Largest order for which the rotation-based fallback is attempted.
pub const JACOBI_CAP: usize = 512;
/// Largest order accepted by [`char_poly`].
pub const CHAR_POLY_CAP: usize = 8;
pub const DEFAULT_TOL: f64 = 1e-10;

/// Dense symmetric matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Builds from a full row-major buffer. Fails if the buffer is not square or not symmetric.
    pub fn from_rows(order: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != order * order {
            return Err(Error::input(format!(
                "expected {} entries for order {order}, got {}",
                order * order,
                data.len()
            )));
        }
        for i in 0..order {
            for j in 0..i {
                if data[i * order + j] != data[j * order + i] {
                    return Err(Error::input(format!("matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(SymMatrix { order, data })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.order).map(|i| self.row(i).iter().sum()).collect()
    }

    fn mul_vec_into(&self, x: &[f64], y: &mut [f64]) {
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = self.row(i).iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }

    /// `‖Mx − λx‖₂`.
    pub fn residual(&self, x: &[f64], lambda: f64) -> f64 {
        let mut y = vec![0.0; self.order];
        self.mul_vec_into(x, &mut y);
        y.iter()
            .zip(x)
            .map(|(yi, xi)| (yi - lambda * xi).powi(2))
            .sum::<f64>()
            .sqrt()
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|v| format_entry(*v)).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|j| format!("{:>width$}", cells[i * self.order + j]))
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

fn format_entry(v: f64) -> String {
    if v.fract() == 0.0 && v.abs() < 1e15 {
        format!("{}", v as i64)
    } else {
        format!("{v:.12}")
    }
}

/// `Q(G) = D(G) + A(G)` of order `m + n`, A-vertices first.
pub fn signless_laplacian(g: &BipartiteGraph) -> SymMatrix {
    let (m, t) = (g.m(), g.order());
    let mut data = vec![0.0; t * t];
    for (i, d) in g.degrees().into_iter().enumerate() {
        data[i * t + i] = d as f64;
    }
    for (a, b) in g.edges() {
        data[a * t + m + b] = 1.0;
        data[(m + b) * t + a] = 1.0;
    }
    SymMatrix { order: t, data }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    PowerIteration,
    Jacobi,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralEstimate {
    #[serde(serialize_with = "crate::report::ser_sig")]
    pub value: f64,
    /// `‖Mx − λx‖₂` for the returned unit vector `x`.
    #[serde(serialize_with = "crate::report::ser_sig")]
    pub residual: f64,
    pub iterations: usize,
    pub method: Method,
}

/// Largest eigenvalue of a symmetric nonnegative matrix.
///
/// Power iteration from the all-ones vector with a Rayleigh-quotient readout,
/// capped at `100·t` steps. If that stalls and `t ≤ JACOBI_CAP`, the full
/// spectrum is computed by cyclic Jacobi rotations instead.
pub fn spectral_radius(mtx: &SymMatrix, tol: f64) -> Result<SpectralEstimate> {
    let t = mtx.order();
    if t == 0 {
        return Err(Error::input("empty matrix"));
    }
    if t > DENSE_CAP {
        return Err(Error::Capacity(format!(
            "dense spectral routines support order ≤ {DENSE_CAP}, got {t}"
        )));
    }
    if mtx.data.iter().any(|&v| v < 0.0) {
        return Err(Error::input("matrix has negative entries"));
    }

    let cap = 100 * t;
    let mut x = vec![1.0 / (t as f64).sqrt(); t];
    let mut y = vec![0.0; t];
    let mut best = 0.0;
    let mut best_residual = f64::INFINITY;
    for iter in 1..=cap {
        mtx.mul_vec_into(&x, &mut y);
        let lambda: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let residual = x
            .iter()
            .zip(&y)
            .map(|(xi, yi)| (yi - lambda * xi).powi(2))
            .sum::<f64>()
            .sqrt();
        best = lambda;
        best_residual = residual;
        if residual <= tol {
            return Ok(SpectralEstimate {
                value: lambda,
                residual,
                iterations: iter,
                method: Method::PowerIteration,
            });
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            // x lies in the kernel; the matrix is nilpotent on it, so the radius is 0.
            return Ok(SpectralEstimate {
                value: 0.0,
                residual: 0.0,
                iterations: iter,
                method: Method::PowerIteration,
            });
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }

    if t <= JACOBI_CAP {
        let eig = jacobi_eigen(mtx);
        let (idx, &value) = eig
            .values
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .expect("nonempty spectrum");
        let vector = eig.vector(idx);
        let residual = mtx.residual(&vector, value);
        if residual <= tol {
            return Ok(SpectralEstimate {
                value,
                residual,
                iterations: cap + eig.sweeps,
                method: Method::Jacobi,
            });
        }
        best = value;
        best_residual = residual;
    }
    Err(Error::Numerical {
        msg: format!("no convergence to residual {tol:e} (last residual {best_residual:e})"),
        best,
    })
}

/// Eigen-decomposition from [`jacobi_eigen`]. Column `i` of `vectors` pairs with `values[i]`.
#[derive(Clone, Debug)]
pub struct Eigen {
    pub values: Vec<f64>,
    vectors: Vec<f64>,
    order: usize,
    pub sweeps: usize,
}

impl Eigen {
    pub fn vector(&self, i: usize) -> Vec<f64> {
        (0..self.order).map(|r| self.vectors[r * self.order + i]).collect()
    }
}

/// Cyclic Jacobi eigenvalue algorithm for a dense symmetric matrix.
pub fn jacobi_eigen(mtx: &SymMatrix) -> Eigen {
    let t = mtx.order();
    let mut a = mtx.data.clone();
    let mut v = vec![0.0; t * t];
    for i in 0..t {
        v[i * t + i] = 1.0;
    }
    let scale: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt().max(f64::MIN_POSITIVE);
    let mut sweeps = 0;
    while sweeps < 100 {
        let off: f64 = (0..t)
            .flat_map(|i| (0..t).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * t + j].powi(2))
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * scale {
            break;
        }
        sweeps += 1;
        for p in 0..t {
            for q in p + 1..t {
                let apq = a[p * t + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * t + p];
                let aqq = a[q * t + q];
                let theta = (aqq - app) / (2.0 * apq);
                let tan = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let tan = if theta == 0.0 { 1.0 } else { tan };
                let c = 1.0 / (tan * tan + 1.0).sqrt();
                let s = tan * c;
                for k in 0..t {
                    let akp = a[k * t + p];
                    let akq = a[k * t + q];
                    a[k * t + p] = c * akp - s * akq;
                    a[k * t + q] = s * akp + c * akq;
                }
                for k in 0..t {
                    let apk = a[p * t + k];
                    let aqk = a[q * t + k];
                    a[p * t + k] = c * apk - s * aqk;
                    a[q * t + k] = s * apk + c * aqk;
                }
                for k in 0..t {
                    let vkp = v[k * t + p];
                    let vkq = v[k * t + q];
                    v[k * t + p] = c * vkp - s * vkq;
                    v[k * t + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    Eigen {
        values: (0..t).map(|i| a[i * t + i]).collect(),
        vectors: v,
        order: t,
        sweeps,
    }
}

/// Matrix of average block row sums of `Q(G)` for a vertex partition.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientMatrix {
    order: usize,
    entries: Vec<Ratio<i64>>,
    block_sizes: Vec<usize>,
    equitable: bool,
}

impl QuotientMatrix {
    /// Builds a quotient matrix directly from integer entries. Used for the
    /// closed-form matrices of the extremal family.
    pub fn from_integer_rows(rows: &[Vec<i64>], block_sizes: Vec<usize>, equitable: bool) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) || block_sizes.len() != order {
            return Err(Error::input("quotient matrix must be square with one block size per row"));
        }
        Ok(QuotientMatrix {
            order,
            entries: rows.iter().flatten().map(|&v| Ratio::from_integer(v)).collect(),
            block_sizes,
            equitable,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, i: usize, j: usize) -> Ratio<i64> {
        self.entries[i * self.order + j]
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    /// True iff every block of `Q(G)` had constant row sums.
    pub fn is_equitable(&self) -> bool {
        self.equitable
    }

    /// Entries as integers, if they all are.
    pub fn integer_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.order)
            .map(|i| {
                (0..self.order)
                    .map(|j| {
                        let e = self.entry(i, j);
                        e.is_integer().then(|| e.to_integer())
                    })
                    .collect()
            })
            .collect()
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.order)
            .map(|i| {
                (0..self.order)
                    .map(|j| {
                        let e = self.entry(i, j);
                        *e.numer() as f64 / *e.denom() as f64
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for QuotientMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|j| format!("{:>width$}", cells[i * self.order + j]))
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Quotient of `Q(G)` under `partition`, whose parts list vertex indices in
/// the combined numbering (A-vertices `0..m`, B-vertex `b` at `m + b`).
pub fn quotient_matrix(g: &BipartiteGraph, partition: &[Vec<usize>]) -> Result<QuotientMatrix> {
    let t = g.order();
    let mut part_of = vec![usize::MAX; t];
    for (p, part) in partition.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::input(format!("part {p} is empty")));
        }
        for &v in part {
            if v >= t {
                return Err(Error::input(format!("vertex {v} out of range (order {t})")));
            }
            if part_of[v] != usize::MAX {
                return Err(Error::input(format!("vertex {v} appears in more than one part")));
            }
            part_of[v] = p;
        }
    }
    if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
        return Err(Error::input(format!("vertex {v} is not covered by the partition")));
    }

    let p = partition.len();
    let q = signless_laplacian(g);
    let mut sums = vec![0i64; p * p];
    let mut equitable = true;
    for (bi, part) in partition.iter().enumerate() {
        let mut first: Option<Vec<i64>> = None;
        for &v in part {
            let mut row = vec![0i64; p];
            for (u, &x) in q.row(v).iter().enumerate() {
                row[part_of[u]] += x as i64;
            }
            for (bj, &r) in row.iter().enumerate() {
                sums[bi * p + bj] += r;
            }
            match &first {
                None => first = Some(row),
                Some(f) if *f != row => equitable = false,
                _ => {}
            }
        }
    }
    let entries = sums
        .iter()
        .enumerate()
        .map(|(idx, &s)| Ratio::new(s, partition[idx / p].len() as i64))
        .collect();
    Ok(QuotientMatrix {
        order: p,
        entries,
        block_sizes: partition.iter().map(Vec::len).collect(),
        equitable,
    })
}

/// Integer polynomial, coefficients in ascending order of degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyCoeffs {
    pub coeffs: Vec<i128>,
}

impl PolyCoeffs {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        PolyCoeffs { coeffs }
    }

    /// From coefficients listed highest degree first.
    pub fn from_descending(desc: &[i128]) -> Self {
        PolyCoeffs::new(desc.iter().rev().copied().collect())
    }

    pub fn descending(&self) -> Vec<i128> {
        self.coeffs.iter().rev().copied().collect()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
    }

    pub fn eval_exact(&self, x: i128) -> i128 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn sub(&self, other: &PolyCoeffs) -> PolyCoeffs {
        let len = self.coeffs.len().max(other.coeffs.len());
        PolyCoeffs::new(
            (0..len)
                .map(|i| {
                    self.coeffs.get(i).copied().unwrap_or(0) - other.coeffs.get(i).copied().unwrap_or(0)
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &PolyCoeffs) -> PolyCoeffs {
        let mut out = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyCoeffs::new(out)
    }
}

impl fmt::Display for PolyCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (d, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            let body = match (d, mag) {
                (0, _) => format!("{mag}"),
                (1, 1) => "x".to_string(),
                (1, _) => format!("{mag}x"),
                (_, 1) => format!("x^{d}"),
                _ => format!("{mag}x^{d}"),
            };
            let sign = if c < 0 { "-" } else { "+" };
            if terms.is_empty() {
                terms.push(if c < 0 { format!("-{body}") } else { body });
            } else {
                terms.push(format!("{sign} {body}"));
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" "))
        }
    }
}

/// Exact characteristic polynomial `det(xI − M)` of a quotient matrix with
/// integer entries.
pub fn char_poly(qm: &QuotientMatrix) -> Result<PolyCoeffs> {
    if qm.order() > CHAR_POLY_CAP {
        return Err(Error::Capacity(format!(
            "characteristic polynomials supported up to order {CHAR_POLY_CAP}"
        )));
    }
    let rows = qm
        .integer_rows()
        .ok_or_else(|| Error::input("characteristic polynomial needs integer entries"))?;
    let rows: Vec<Vec<i128>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(i128::from).collect())
        .collect();
    char_poly_int(&rows)
}

/// Faddeev–LeVerrier recursion over `i128`. Every division is exact for an
/// integer matrix; a nonzero remainder is reported as an internal error.
pub fn char_poly_int(rows: &[Vec<i128>]) -> Result<PolyCoeffs> {
    let t = rows.len();
    let mut coeffs = vec![0i128; t + 1];
    coeffs[t] = 1;
    // aux = M_k in the recursion M_k = A·M_{k−1} + c_{t−k+1}·I
    let mut aux = vec![vec![0i128; t]; t];
    for k in 1..=t {
        let mut next = vec![vec![0i128; t]; t];
        for i in 0..t {
            for j in 0..t {
                let mut acc = 0i128;
                for l in 0..t {
                    acc = acc
                        .checked_add(rows[i][l].checked_mul(aux[l][j]).ok_or_else(overflow)?)
                        .ok_or_else(overflow)?;
                }
                next[i][j] = acc;
            }
            next[i][i] += coeffs[t - k + 1];
        }
        aux = next;
        // c_{t−k} = −tr(A·M_k) / k
        let mut trace = 0i128;
        for i in 0..t {
            for l in 0..t {
                trace = trace
                    .checked_add(rows[i][l].checked_mul(aux[l][i]).ok_or_else(overflow)?)
                    .ok_or_else(overflow)?;
            }
        }
        if trace % k as i128 != 0 {
            return Err(Error::internal("non-integral Faddeev–LeVerrier step"));
        }
        coeffs[t - k] = -trace / k as i128;
    }
    Ok(PolyCoeffs::new(coeffs))
}

fn overflow() -> Error {
    Error::Capacity("characteristic polynomial overflows 128-bit integers".into())
}

const ROOT_SCAN_STEPS: usize = 1024;

/// Largest real root of `p` inside `(lo, hi)`.
///
/// The bracket is scanned downward from `hi` for the first sign change, which
/// is then refined by bisection interleaved with secant steps until the
/// bracket is narrower than `1e-13·max(1, |x|)`.
pub fn largest_real_root(p: &PolyCoeffs, bracket: (f64, f64)) -> Result<f64> {
    let (lo, hi) = bracket;
    if lo.partial_cmp(&hi) != Some(std::cmp::Ordering::Less) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::input(format!("invalid bracket ({lo}, {hi})")));
    }
    let f_hi = p.eval(hi);
    if f_hi == 0.0 {
        return Ok(hi);
    }
    let step = (hi - lo) / ROOT_SCAN_STEPS as f64;
    let mut upper = (hi, f_hi);
    let mut found = None;
    for i in 1..=ROOT_SCAN_STEPS {
        let x = if i == ROOT_SCAN_STEPS { lo } else { hi - step * i as f64 };
        let fx = p.eval(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() != upper.1.signum() {
            found = Some(((x, fx), upper));
            break;
        }
        upper = (x, fx);
    }
    let Some(((mut a, mut fa), (mut b, mut fb))) = found else {
        return Err(Error::Numerical {
            msg: format!("no sign change of {p} in ({lo}, {hi})"),
            best: f64::NAN,
        });
    };

    let mut use_secant = true;
    for _ in 0..400 {
        if (b - a) <= 1e-13 * a.abs().max(1.0) {
            break;
        }
        let mid = 0.5 * (a + b);
        let secant = a - fa * (b - a) / (fb - fa);
        // Secant only when it lands well inside the bracket; alternate with bisection.
        let x = if use_secant && secant > a && secant < b { secant } else { mid };
        use_secant = !use_secant;
        let fx = p.eval(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
    }
    Ok(0.5 * (a + b))
}

/// Number of distinct real roots of `p` strictly greater than `r`, by Sturm's theorem
/// in exact rational arithmetic.
pub fn count_roots_above(p: &PolyCoeffs, r: &BigRational) -> usize {
    let poly: Vec<BigRational> = p
        .coeffs
        .iter()
        .map(|&c| BigRational::from_integer(BigInt::from(c)))
        .collect();
    let seq = sturm_sequence(poly);
    let at_r = sign_changes(seq.iter().map(|q| eval_rational(q, r)));
    // Sign at +∞ is the sign of the leading coefficient.
    let at_inf = sign_changes(seq.iter().map(|q| q.last().cloned().unwrap_or_else(BigRational::zero)));
    at_r.saturating_sub(at_inf)
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn derivative(p: &[BigRational]) -> Vec<BigRational> {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect()
}

fn poly_rem(num: &[BigRational], den: &[BigRational]) -> Vec<BigRational> {
    let mut r = num.to_vec();
    let dl = den.len() - 1;
    let lead = den[dl].clone();
    while r.len() > dl && !(r.len() == 1 && r[0].is_zero()) {
        let shift = r.len() - 1 - dl;
        let factor = r.last().unwrap() / &lead;
        for (i, d) in den.iter().enumerate() {
            r[shift + i] -= &factor * d;
        }
        r.pop();
        r = trim(r);
        if r.len() - 1 < dl {
            break;
        }
    }
    trim(r)
}

fn sturm_sequence(p: Vec<BigRational>) -> Vec<Vec<BigRational>> {
    let p = trim(p);
    let mut seq = vec![p.clone(), trim(derivative(&p))];
    loop {
        let n = seq.len();
        if seq[n - 1].len() == 1 && seq[n - 1][0].is_zero() {
            seq.pop();
            break;
        }
        if seq[n - 1].len() == 1 {
            break;
        }
        let rem = poly_rem(&seq[n - 2], &seq[n - 1]);
        if rem.len() == 1 && rem[0].is_zero() {
            break;
        }
        seq.push(rem.into_iter().map(|c| -c).collect());
    }
    seq
}

fn eval_rational(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn sign_changes(values: impl Iterator<Item = BigRational>) -> usize {
    let mut last: Option<bool> = None;
    let mut changes = 0;
    for v in values {
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if let Some(prev) = last {
            if prev != pos {
                changes += 1;
            }
        }
        last = Some(pos);
    }
    changes
}

/// Smallest dyadic rational `k / 2^bits` that is at least `x`.
pub fn dyadic_ceil(x: f64, bits: u32) -> BigRational {
    let scaled = (x * (1u64 << bits) as f64).ceil();
    BigRational::new(
        BigInt::from(scaled as i128),
        BigInt::from(1u128 << bits),
    )
}
