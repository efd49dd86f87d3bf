//! Exhaustive and parameter-sweep verification of the spectral threshold.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::{
    build_extremal, build_star, f_eval, h_eval, join_complete, phi_coeffs, phi_star_coeffs,
    psi_coeffs, q1, quotient_b1, star_root, extremal_partition, ExtremalParams,
};
use crate::graph::{part_preserving_isomorphic, BipartiteGraph};
use crate::report::{fmt_sig, ser_sig};
use crate::spectral::{
    char_poly, char_poly_int, count_roots_above, quotient_matrix, signless_laplacian,
    spectral_radius, PolyCoeffs, SymMatrix, DEFAULT_TOL,
};
use crate::trees::{construct_tree, verify_certificate, DegreeDemand, FeasibilityResult};

/// Largest `m·n` accepted by [`enumerate_bipartite`].
pub const ENUMERATION_CAP: usize = 24;
pub const DEFAULT_BOUND_TOL: f64 = 1e-7;
/// Agreement required between quotient roots and full eigensolves.
pub const ROOT_AGREEMENT: f64 = 1e-8;
/// Slack allowed when comparing spectral radii of a subgraph and its host.
pub const MONOTONE_SLACK: f64 = 1e-9;

fn check_enum_cap(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::input("both sides must be nonempty"));
    }
    if m * n > ENUMERATION_CAP {
        return Err(Error::Capacity(format!(
            "enumeration covers 2^(m·n) graphs; m·n = {} exceeds {ENUMERATION_CAP}",
            m * n
        )));
    }
    Ok(())
}

/// Connectivity straight from an edge bitmask (bit `a·n + b`).
pub fn mask_connected(m: usize, n: usize, mask: u64) -> bool {
    let row = (1u64 << n) - 1;
    let adj: Vec<u64> = (0..m).map(|a| (mask >> (a * n)) & row).collect();
    let mut seen_a: u64 = 1;
    let mut seen_b: u64 = 0;
    loop {
        let mut next_b = seen_b;
        for (a, &nb) in adj.iter().enumerate() {
            if seen_a >> a & 1 == 1 {
                next_b |= nb;
            }
        }
        let mut next_a = seen_a;
        for (a, &nb) in adj.iter().enumerate() {
            if nb & next_b != 0 {
                next_a |= 1 << a;
            }
        }
        if next_a == seen_a && next_b == seen_b {
            break;
        }
        seen_a = next_a;
        seen_b = next_b;
    }
    seen_a == (1u64 << m) - 1 && seen_b == row
}

/// Every labeled bipartite graph on sides of size `m` and `n`, in edge-bitmask order.
pub fn enumerate_bipartite(
    m: usize,
    n: usize,
    connected_only: bool,
) -> Result<impl Iterator<Item = BipartiteGraph>> {
    check_enum_cap(m, n)?;
    Ok((0u64..1 << (m * n))
        .filter(move |&mask| !connected_only || mask_connected(m, n, mask))
        .map(move |mask| BipartiteGraph::from_edge_mask(m, n, mask)))
}

/// Runs `op` on a pool of `jobs` threads, or on the global pool when `None`.
pub fn with_jobs<T: Send>(jobs: Option<usize>, op: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(op()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::internal(format!("thread pool: {e}")))?;
            Ok(pool.install(op))
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Params {
    pub k: usize,
    pub m: usize,
    pub n: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Counterexample {
    pub edges: Vec<(usize, usize)>,
    #[serde(serialize_with = "ser_sig")]
    pub q: f64,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct TheoremReport {
    pub schema: &'static str,
    pub params: Params,
    #[serde(serialize_with = "ser_sig")]
    pub qstar: f64,
    pub graphs_total: u64,
    pub graphs_connected: u64,
    pub graphs_above_bound: u64,
    pub counterexamples: Vec<Counterexample>,
    pub extremal_found: bool,
    /// Feasible near-bound graphs whose certificate was replayed.
    #[serde(skip)]
    pub certificates_verified: u64,
    /// Enumerated graphs isomorphic to `G_*`.
    #[serde(skip)]
    pub extremal_copies: u64,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.extremal_found
    }

    pub fn summary(&self) -> String {
        let Params { k, m, n } = self.params;
        let mut s = String::new();
        let _ = writeln!(s, "threshold check k = {k}, m = {m}, n = {n}");
        let _ = writeln!(s, "  q_*                 {}", fmt_sig(self.qstar));
        let _ = writeln!(s, "  graphs enumerated   {}", self.graphs_total);
        let _ = writeln!(s, "  connected           {}", self.graphs_connected);
        let _ = writeln!(s, "  q(G) >= q_* - tol   {}", self.graphs_above_bound);
        let _ = writeln!(s, "  certificates        {}", self.certificates_verified);
        let _ = writeln!(s, "  copies of G_*       {}", self.extremal_copies);
        let _ = writeln!(s, "  counterexamples     {}", self.counterexamples.len());
        let _ = writeln!(s, "  extremal found      {}", self.extremal_found);
        let _ = writeln!(s, "  result              {}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }
}

#[derive(Default)]
struct Partial {
    total: u64,
    connected: u64,
    above: u64,
    certified: u64,
    extremal_copies: u64,
    extremal_tight: bool,
    counterexamples: Vec<Counterexample>,
}

/// Enumerates every labeled connected bipartite graph on `(m, n)` and checks
/// that each one with `q(G) ≥ q_* − tol` either has a qualifying spanning
/// tree or is a copy of `G_*`.
pub fn theorem_check(k: usize, m: usize, n: usize, tol: f64) -> Result<TheoremReport> {
    theorem_check_with_jobs(k, m, n, tol, None)
}

pub fn theorem_check_with_jobs(
    k: usize,
    m: usize,
    n: usize,
    tol: f64,
    jobs: Option<usize>,
) -> Result<TheoremReport> {
    let p = ExtremalParams::new(k as i64, m as i64, n as i64, 1)?;
    check_enum_cap(m, n)?;
    let qstar = star_root(&p)?;
    let gstar = build_star(p.k, p.m, p.n)?;
    let demand = DegreeDemand::uniform(m, k)?;

    let star_q = spectral_radius(&signless_laplacian(&gstar), DEFAULT_TOL)?.value;
    let star_infeasible = !construct_tree(&gstar, &demand)?.is_feasible();
    let star_tight = (star_q - qstar).abs() <= tol;

    let bits = m * n;
    let total: u64 = 1 << bits;
    let chunk_bits = bits.min(10);
    let chunks: u64 = 1 << chunk_bits;
    let per_chunk = total / chunks;

    let partials: Vec<Result<Partial>> = with_jobs(jobs, || {
        (0..chunks)
            .into_par_iter()
            .map(|c| scan_range(c * per_chunk, (c + 1) * per_chunk, m, n, qstar, tol, &gstar, &demand))
            .collect()
    })?;

    let mut report = TheoremReport {
        schema: "1",
        params: Params { k, m, n },
        qstar,
        graphs_total: 0,
        graphs_connected: 0,
        graphs_above_bound: 0,
        counterexamples: Vec::new(),
        extremal_found: false,
        certificates_verified: 0,
        extremal_copies: 0,
    };
    let mut enumerated_tight = false;
    for part in partials {
        let part = part?;
        report.graphs_total += part.total;
        report.graphs_connected += part.connected;
        report.graphs_above_bound += part.above;
        report.certificates_verified += part.certified;
        report.extremal_copies += part.extremal_copies;
        enumerated_tight |= part.extremal_tight;
        report.counterexamples.extend(part.counterexamples);
    }
    report.extremal_found = enumerated_tight && star_infeasible && star_tight;
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn scan_range(
    lo: u64,
    hi: u64,
    m: usize,
    n: usize,
    qstar: f64,
    tol: f64,
    gstar: &BipartiteGraph,
    demand: &DegreeDemand,
) -> Result<Partial> {
    let mut part = Partial::default();
    for mask in lo..hi {
        part.total += 1;
        if !mask_connected(m, n, mask) {
            continue;
        }
        part.connected += 1;
        let g = BipartiteGraph::from_edge_mask(m, n, mask);
        let q = spectral_radius(&signless_laplacian(&g), DEFAULT_TOL)?.value;
        if q < qstar - tol {
            continue;
        }
        part.above += 1;
        match construct_tree(&g, demand)? {
            FeasibilityResult::Feasible(cert) => {
                if !verify_certificate(&g, demand, &cert) {
                    part.counterexamples.push(Counterexample {
                        edges: g.edges(),
                        q,
                        reason: "certificate failed replay".into(),
                    });
                } else {
                    part.certified += 1;
                }
            }
            FeasibilityResult::Infeasible(v) => {
                if part_preserving_isomorphic(&g, gstar)? {
                    part.extremal_copies += 1;
                    if (q - qstar).abs() <= tol {
                        part.extremal_tight = true;
                    }
                } else {
                    part.counterexamples.push(Counterexample {
                        edges: g.edges(),
                        q,
                        reason: format!("no qualifying tree; violating set {:?}", v.set),
                    });
                }
            }
        }
    }
    Ok(part)
}

/// Parameter ranges for [`proof_sweep`], all inclusive. `n` runs over
/// `(k−1)m + e` for `e` in `n_extra`; `e = 0` is the boundary just outside
/// the hypothesis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepGrid {
    pub k: (i64, i64),
    pub m: (i64, i64),
    pub n_extra: (i64, i64),
}

impl Default for SweepGrid {
    fn default() -> Self {
        SweepGrid {
            k: (3, 5),
            m: (3, 5),
            n_extra: (1, 5),
        }
    }
}

impl SweepGrid {
    pub fn validate(&self) -> Result<()> {
        let ok = self.k.0 >= 3
            && self.m.0 >= 3
            && self.n_extra.0 >= 0
            && self.k.0 <= self.k.1
            && self.m.0 <= self.m.1
            && self.n_extra.0 <= self.n_extra.1;
        if !ok {
            return Err(Error::input(format!(
                "grid needs 3 ≤ k_lo ≤ k_hi, 3 ≤ m_lo ≤ m_hi, 0 ≤ e_lo ≤ e_hi (got {self:?})"
            )));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<ExtremalParams> {
        let mut out = Vec::new();
        for k in self.k.0..=self.k.1 {
            for m in self.m.0..=self.m.1 {
                for e in self.n_extra.0..=self.n_extra.1 {
                    for s in 1..m {
                        out.push(ExtremalParams { k, m, n: (k - 1) * m + e, s });
                    }
                }
            }
        }
        out
    }
}

/// Every check made at one `(k, m, n, s)`. `None` marks checks that only apply for `s ≥ 2`.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SweepPoint {
    pub k: i64,
    pub m: i64,
    pub n: i64,
    pub s: i64,
    pub in_hypothesis: bool,
    #[serde(serialize_with = "ser_sig")]
    pub q1: f64,
    #[serde(serialize_with = "ser_sig")]
    pub qstar: f64,
    #[serde(serialize_with = "ser_sig")]
    pub q_eigensolve: f64,
    pub f_n: i128,
    pub h_2: i128,
    pub h_m_minus_1: i128,
    pub psi_at_m_plus_n: i128,
    pub psi_at_m_plus_r: i128,
    /// `char_poly(B₁) = φ_{B₁}`, `B₁` matches the graph's equitable quotient, and at
    /// `s = 1` also `φ_{B₁} = φ_{B_*}`.
    pub coeff_identity: bool,
    /// `φ_{B_*} − φ_{B₁} = x(s−1)ψ` coefficientwise.
    pub psi_identity: bool,
    /// `ψ(m+n)` equals its linear form in `s`, `ψ(m+n) ≤ f(n)`, and `f(n) < 0`.
    pub psi_upper_end: bool,
    /// `ψ(m+(k−1)s) = (k−1)h(s)`, and `< 0` when `s ≥ 2`.
    pub psi_lower_end: bool,
    /// `h(2) < 0` and `h(m−1) < 0`.
    pub h_endpoints: bool,
    /// `ψ(q₁) ≤ max(ψ(m+n), ψ(m+(k−1)s)) < 0`.
    pub psi_at_q1: Option<bool>,
    /// `m + (k−1)s < q₁ < m + n`.
    pub ordering: bool,
    /// `q_* − q₁ > 1e−8` for `s ≥ 2`, `|q₁ − q_*| ≤ 1e−8` for `s = 1`.
    pub separation: bool,
    /// `|q₁ − q(G₁)| ≤ 1e−8` with `q(G₁)` from a full eigensolve.
    pub quotient_agreement: bool,
    /// `q(K_{s,r} ∇ K_{m−s,n−r}) ≤ q₁` for every `1 ≤ r ≤ (k−1)s`.
    pub subgraph_chain: bool,
}

impl SweepPoint {
    fn failed_checks(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let named = [
            ("coeff_identity", self.coeff_identity),
            ("psi_identity", self.psi_identity),
            ("psi_upper_end", self.psi_upper_end),
            ("psi_lower_end", self.psi_lower_end),
            ("h_endpoints", self.h_endpoints),
            ("psi_at_q1", self.psi_at_q1.unwrap_or(true)),
            ("ordering", self.ordering),
            ("separation", self.separation),
            ("quotient_agreement", self.quotient_agreement),
            ("subgraph_chain", self.subgraph_chain),
        ];
        for (name, ok) in named {
            if !ok {
                out.push(name);
            }
        }
        out
    }

    fn label(&self) -> String {
        format!("k={} m={} n={} s={}", self.k, self.m, self.n, self.s)
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SweepReport {
    pub schema: &'static str,
    pub grid: SweepGrid,
    pub points: Vec<SweepPoint>,
    pub failures: Vec<String>,
    /// Outcomes at `n = (k−1)m`, outside the hypothesis. Never counted as failures.
    pub boundary: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        let g = &self.grid;
        let _ = writeln!(
            s,
            "proof sweep k in {}..={}, m in {}..={}, n - (k-1)m in {}..={}",
            g.k.0, g.k.1, g.m.0, g.m.1, g.n_extra.0, g.n_extra.1
        );
        let _ = writeln!(s, "  points     {}", self.points.len());
        let _ = writeln!(s, "  failures   {}", self.failures.len());
        for f in &self.failures {
            let _ = writeln!(s, "    {f}");
        }
        let _ = writeln!(s, "  boundary   {}", self.boundary.len());
        for b in &self.boundary {
            let _ = writeln!(s, "    {b}");
        }
        let _ = writeln!(s, "  result     {}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }
}

/// Largest eigenvalue of `Q(G)` via the dense path.
fn q_of(g: &BipartiteGraph) -> Result<f64> {
    Ok(spectral_radius(&signless_laplacian(g), DEFAULT_TOL)?.value)
}

/// All checks at one point. `p.n` may equal `(k−1)m` (boundary).
pub fn sweep_point(p: &ExtremalParams) -> Result<SweepPoint> {
    let (k, m, n, s) = (p.k, p.m, p.n, p.s);
    let r = p.r();
    let in_hypothesis = n > (k - 1) * m;

    let phi = phi_coeffs(p);
    let phi_star = phi_star_coeffs(k, m, n);
    let psi = psi_coeffs(p);

    // quotient and its polynomial
    let b1 = quotient_b1(p)?;
    let g1 = build_extremal(p)?;
    let from_graph = quotient_matrix(&g1, &extremal_partition(p))?;
    let coeff_identity = char_poly(&b1)? == phi
        && from_graph.is_equitable()
        && from_graph == b1
        && phi.coeffs[0] == 0
        && (s != 1 || phi == phi_star);

    // φ_* − φ₁ − x(s−1)ψ ≡ 0
    let x_s1 = PolyCoeffs::new(vec![0, (s - 1) as i128]);
    let psi_identity = phi_star.sub(&phi).sub(&x_s1.mul(&psi)).is_zero();

    // ψ at m + n
    let (ki, mi, ni, si) = (k as i128, m as i128, n as i128, s as i128);
    let psi_mn = psi.eval_exact(mi + ni);
    let linear = (ki * mi + ki * ni - mi - ni) * si + ki * mi - mi - ni * ni + ki * ni - ni - mi * ni;
    let f_n = f_eval(n, k, m);
    let psi_upper_end = psi_mn == linear && psi_mn <= f_n && f_n < 0;

    // ψ at m + (k−1)s
    let psi_mr = psi.eval_exact(mi + r as i128);
    let h_s = h_eval(s, k, m, n);
    let psi_lower_end = psi_mr == (ki - 1) * h_s && (s == 1 || h_s < 0);
    let h_2 = h_eval(2, k, m, n);
    let h_m_minus_1 = h_eval(m - 1, k, m, n);
    let h_endpoints = h_2 < 0 && h_m_minus_1 < 0;

    // roots
    let q1v = q1(p)?;
    let qstar = star_root(p)?;
    let ordering = ((m + r) as f64) < q1v && q1v < (m + n) as f64;
    let separation = if s == 1 {
        (q1v - qstar).abs() <= ROOT_AGREEMENT
    } else {
        qstar - q1v > ROOT_AGREEMENT
    };
    let psi_at_q1 = (s >= 2).then(|| {
        let v = psi.eval(q1v);
        v <= psi_mn.max(psi_mr) as f64 + 1e-9 * v.abs().max(1.0) && v < 0.0
    });

    let q_eig = q_of(&g1)?;
    let quotient_agreement = (q1v - q_eig).abs() <= ROOT_AGREEMENT;

    // spanning subgraphs with smaller N(S)
    let mut subgraph_chain = true;
    for rr in 1..=r {
        let h = join_complete(s as usize, rr as usize, m as usize, n as usize)?;
        if q_of(&h)? > q1v + MONOTONE_SLACK {
            subgraph_chain = false;
        }
    }

    Ok(SweepPoint {
        k,
        m,
        n,
        s,
        in_hypothesis,
        q1: q1v,
        qstar,
        q_eigensolve: q_eig,
        f_n,
        h_2,
        h_m_minus_1,
        psi_at_m_plus_n: psi_mn,
        psi_at_m_plus_r: psi_mr,
        coeff_identity,
        psi_identity,
        psi_upper_end,
        psi_lower_end,
        h_endpoints,
        psi_at_q1,
        ordering,
        separation,
        quotient_agreement,
        subgraph_chain,
    })
}

pub fn proof_sweep(grid: &SweepGrid) -> Result<SweepReport> {
    proof_sweep_with_jobs(grid, None)
}

pub fn proof_sweep_with_jobs(grid: &SweepGrid, jobs: Option<usize>) -> Result<SweepReport> {
    grid.validate()?;
    let params = grid.points();
    let points: Vec<Result<SweepPoint>> =
        with_jobs(jobs, || params.par_iter().map(sweep_point).collect())?;
    let points: Vec<SweepPoint> = points.into_iter().collect::<Result<_>>()?;

    let mut failures = Vec::new();
    let mut boundary = Vec::new();
    for pt in &points {
        let failed = pt.failed_checks();
        if pt.in_hypothesis {
            failures.extend(failed.iter().map(|c| format!("{}: {c}", pt.label())));
        } else {
            let mut note = format!("{}: f(n) = {}", pt.label(), pt.f_n);
            if !failed.is_empty() {
                let _ = write!(note, "; outside hypothesis, failing {}", failed.join(", "));
            }
            boundary.push(note);
        }
    }
    Ok(SweepReport {
        schema: "1",
        grid: grid.clone(),
        points,
        failures,
        boundary,
    })
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct FuzzViolation {
    pub trial: u64,
    pub graph: Vec<(usize, usize)>,
    pub subgraph: Vec<(usize, usize)>,
    #[serde(serialize_with = "ser_sig")]
    pub q_graph: f64,
    #[serde(serialize_with = "ser_sig")]
    pub q_subgraph: f64,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct MonotonicityReport {
    pub schema: &'static str,
    pub trials: u64,
    pub seed: u64,
    /// Pairs where no edge was deleted.
    pub identical_pairs: u64,
    /// Proper subgraphs small enough for the exact comparison.
    pub strict_checked: u64,
    /// Of those, pairs where `q(H) < q(G)` was proven by root counting.
    pub strict_confirmed: u64,
    pub violations: Vec<FuzzViolation>,
}

impl MonotonicityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "subgraph monotonicity fuzz, seed {}", self.seed);
        let _ = writeln!(s, "  trials            {}", self.trials);
        let _ = writeln!(s, "  identical pairs   {}", self.identical_pairs);
        let _ = writeln!(s, "  strict checked    {}", self.strict_checked);
        let _ = writeln!(s, "  strict confirmed  {}", self.strict_confirmed);
        let _ = writeln!(s, "  violations        {}", self.violations.len());
        let _ = writeln!(s, "  result            {}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }
}

/// Largest `m + n` for the exact strictness comparison.
pub const EXACT_ORDER_CAP: usize = 8;

/// Random connected bipartite graph with `1 ≤ m ≤ max_m`, `1 ≤ n ≤ max_n`.
pub fn random_connected(rng: &mut impl Rng, max_m: usize, max_n: usize) -> BipartiteGraph {
    let m = rng.gen_range(1..=max_m);
    let n = rng.gen_range(1..=max_n);
    let p: f64 = rng.gen_range(0.3..0.9);
    for _ in 0..1000 {
        let edges: Vec<_> = (0..m)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = BipartiteGraph::from_edge_list(m, n, &edges).expect("indices in range");
        if g.is_connected() {
            return g;
        }
    }
    BipartiteGraph::complete_bipartite(m, n).expect("nonempty sides")
}

/// Deletes edges of `g` in random order, each with probability 1/2, skipping bridges.
pub fn random_connected_spanning_subgraph(rng: &mut impl Rng, g: &BipartiteGraph) -> BipartiteGraph {
    let mut edges = g.edges();
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.shuffle(rng);
    let mut keep = vec![true; edges.len()];
    for i in order {
        if !rng.gen_bool(0.5) {
            continue;
        }
        keep[i] = false;
        let trial: Vec<_> = edges
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(&e, _)| e)
            .collect();
        let h = BipartiteGraph::from_edge_list(g.m(), g.n(), &trial).expect("same sides");
        if !h.is_connected() {
            keep[i] = true;
        }
    }
    edges = edges
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(e, _)| e)
        .collect();
    BipartiteGraph::from_edge_list(g.m(), g.n(), &edges).expect("same sides")
}

fn integer_rows(q: &SymMatrix) -> Vec<Vec<i128>> {
    (0..q.order())
        .map(|i| q.row(i).iter().map(|&v| v as i128).collect())
        .collect()
}

/// Proves `q(H) < q(G)` exactly: a dyadic rational strictly between the two float
/// estimates must lie above every root of `det(xI − Q(H))` and below some root of
/// `det(xI − Q(G))`. `None` when the float gap is too small to separate.
pub fn prove_strict_increase(g: &BipartiteGraph, h: &BipartiteGraph, qg: f64, qh: f64) -> Result<Option<bool>> {
    if qg - qh < 1e-9 {
        return Ok(None);
    }
    let mid = 0.5 * (qg + qh);
    let scale = 1u64 << 40;
    let cut = BigRational::new(
        BigInt::from((mid * scale as f64).round() as i128),
        BigInt::from(scale),
    );
    let pg = char_poly_int(&integer_rows(&signless_laplacian(g)))?;
    let ph = char_poly_int(&integer_rows(&signless_laplacian(h)))?;
    Ok(Some(
        count_roots_above(&ph, &cut) == 0 && count_roots_above(&pg, &cut) >= 1,
    ))
}

/// Random connected `G` (`m ≤ 6`, `n ≤ 8`) and random connected spanning `H ⊆ G`;
/// checks `q(H) ≤ q(G) + 1e−9`, and proves strictness exactly when `m + n ≤ 8`.
pub fn monotonicity_fuzz(trials: u64, seed: u64) -> Result<MonotonicityReport> {
    monotonicity_fuzz_with_jobs(trials, seed, None)
}

pub fn monotonicity_fuzz_with_jobs(trials: u64, seed: u64, jobs: Option<usize>) -> Result<MonotonicityReport> {
    #[derive(Default)]
    struct Trial {
        identical: bool,
        checked: bool,
        confirmed: bool,
        violation: Option<FuzzViolation>,
    }

    let run = |trial: u64| -> Result<Trial> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let g = random_connected(&mut rng, 6, 8);
        let h = random_connected_spanning_subgraph(&mut rng, &g);
        let qg = q_of(&g)?;
        let qh = q_of(&h)?;
        let mut out = Trial::default();
        let violation = |reason: String| FuzzViolation {
            trial,
            graph: g.edges(),
            subgraph: h.edges(),
            q_graph: qg,
            q_subgraph: qh,
            reason,
        };
        if qh > qg + MONOTONE_SLACK {
            out.violation = Some(violation("q(H) > q(G) + 1e-9".into()));
            return Ok(out);
        }
        if h.edge_count() == g.edge_count() {
            out.identical = true;
            if (qg - qh).abs() > 1e-12 {
                out.violation = Some(violation("identical graphs with different q".into()));
            }
            return Ok(out);
        }
        if g.order() <= EXACT_ORDER_CAP {
            out.checked = true;
            match prove_strict_increase(&g, &h, qg, qh)? {
                Some(true) => out.confirmed = true,
                Some(false) => {
                    out.violation = Some(violation("exact root count contradicts q(H) < q(G)".into()))
                }
                None => out.violation = Some(violation("proper subgraph with q(H) ≈ q(G)".into())),
            }
        }
        Ok(out)
    };

    let results: Vec<Result<Trial>> = with_jobs(jobs, || (0..trials).into_par_iter().map(run).collect())?;
    let mut report = MonotonicityReport {
        schema: "1",
        trials,
        seed,
        identical_pairs: 0,
        strict_checked: 0,
        strict_confirmed: 0,
        violations: Vec::new(),
    };
    for r in results {
        let r = r?;
        report.identical_pairs += r.identical as u64;
        report.strict_checked += r.checked as u64;
        report.strict_confirmed += r.confirmed as u64;
        report.violations.extend(r.violation);
    }
    Ok(report)
}
