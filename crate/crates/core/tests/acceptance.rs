//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use qbound::extremal::f_eval;
use qbound::spectral::{signless_laplacian, spectral_radius, DEFAULT_TOL};
use qbound::trees::{
    check_condition_bruteforce, check_condition_flow, construct_tree, is_violation, verify_certificate,
    DegreeDemand, FeasibilityResult,
};
use qbound::verify::{
    enumerate_bipartite, monotonicity_fuzz, proof_sweep, random_connected, theorem_check, SweepGrid,
    SweepPoint,
};
use qbound::{BipartiteGraph, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = std::result::Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

const FUZZ_SEED: u64 = 20_240_601;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_s: u64) -> std::result::Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit_s as f64, || {
        format!("took {:.1}s, limit {limit_s}s", elapsed.as_secs_f64())
    })
}

fn default_sweep() -> std::result::Result<Vec<SweepPoint>, String> {
    let report = proof_sweep(&SweepGrid::default()).map_err(|e| e.to_string())?;
    ensure(report.points.len() == 135, || format!("{} grid points, expected 135", report.points.len()))?;
    ensure(report.points.iter().all(|p| p.in_hypothesis), || "grid left the hypothesis".into())?;
    Ok(report.points)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for m in 1..=30usize {
        for n in 1..=30usize {
            let g = BipartiteGraph::complete_bipartite(m, n).map_err(|e| e.to_string())?;
            let q = spectral_radius(&signless_laplacian(&g), DEFAULT_TOL).map_err(|e| e.to_string())?.value;
            let err = (q - (m + n) as f64).abs();
            worst = worst.max(err);
            ensure(err <= 1e-9, || format!("q(K_{{{m},{n}}}) = {q}"))?;
        }
    }
    within(start.elapsed(), 10)?;
    Ok(format!("900 graphs, max |q - (m+n)| = {worst:.2e}, {:.2}s", start.elapsed().as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let points = default_sweep()?;
    let mut worst: f64 = 0.0;
    for p in &points {
        let err = (p.q1 - p.q_eigensolve).abs();
        worst = worst.max(err);
        ensure(err <= 1e-8, || format!("k={} m={} n={} s={}: |q1 - q(G)| = {err:e}", p.k, p.m, p.n, p.s))?;
    }
    within(start.elapsed(), 30)?;
    Ok(format!("{} points, max gap {worst:.2e}, {:.2}s", points.len(), start.elapsed().as_secs_f64()))
}

fn criterion_3() -> Outcome {
    let points = default_sweep()?;
    for p in &points {
        ensure(p.coeff_identity, || format!("k={} m={} n={} s={}: char_poly(B1) != phi", p.k, p.m, p.n, p.s))?;
        ensure(p.psi_identity, || format!("k={} m={} n={} s={}: phi_* - phi_1 != x(s-1)psi", p.k, p.m, p.n, p.s))?;
    }
    Ok(format!("{} points, exact integer coefficients", points.len()))
}

fn criterion_4() -> Outcome {
    let points = default_sweep()?;
    for k in 3..=5i64 {
        for m in 3..=5i64 {
            ensure(f_eval((k - 1) * m, k, m) == 0, || format!("f((k-1)m) != 0 at k={k} m={m}"))?;
        }
    }
    for p in &points {
        let at = || format!("k={} m={} n={} s={}", p.k, p.m, p.n, p.s);
        ensure(p.f_n < 0, || format!("{}: f(n) = {}", at(), p.f_n))?;
        ensure(p.h_2 < 0, || format!("{}: h(2) = {}", at(), p.h_2))?;
        ensure(p.h_m_minus_1 < 0, || format!("{}: h(m-1) = {}", at(), p.h_m_minus_1))?;
        ensure(p.psi_at_m_plus_n < 0, || format!("{}: psi(m+n) = {}", at(), p.psi_at_m_plus_n))?;
        ensure(p.psi_at_m_plus_n <= p.f_n, || format!("{}: psi(m+n) > f(n)", at()))?;
        let h_s = qbound::extremal::h_eval(p.s, p.k, p.m, p.n);
        ensure(p.psi_at_m_plus_r == (p.k as i128 - 1) * h_s, || format!("{}: psi(m+(k-1)s) != (k-1)h(s)", at()))?;
        ensure(p.psi_at_m_plus_r < 0, || format!("{}: psi(m+(k-1)s) = {}", at(), p.psi_at_m_plus_r))?;
        ensure(p.psi_lower_end && p.psi_upper_end && p.h_endpoints, || format!("{}: sweep flags", at()))?;
    }
    Ok(format!("{} points, all strict in exact integers", points.len()))
}

fn criterion_5() -> Outcome {
    let points = default_sweep()?;
    let mut min_margin = f64::INFINITY;
    let mut max_s1 = 0.0f64;
    for p in &points {
        let at = || format!("k={} m={} n={} s={}", p.k, p.m, p.n, p.s);
        let r = (p.k - 1) * p.s;
        ensure(((p.m + r) as f64) < p.q1 && p.q1 < (p.m + p.n) as f64, || format!("{}: q1 = {} out of order", at(), p.q1))?;
        if p.s >= 2 {
            let margin = p.qstar - p.q1;
            min_margin = min_margin.min(margin);
            ensure(margin > 1e-8, || format!("{}: q_* - q1 = {margin:e}", at()))?;
            ensure(p.psi_at_q1 == Some(true), || format!("{}: psi(q1) >= 0", at()))?;
        } else {
            let gap = (p.q1 - p.qstar).abs();
            max_s1 = max_s1.max(gap);
            ensure(gap <= 1e-8, || format!("{}: |q1 - q_*| = {gap:e}", at()))?;
        }
        ensure(p.subgraph_chain, || format!("{}: subgraph chain", at()))?;
    }
    Ok(format!("min q_* - q1 (s>=2) = {min_margin:.4}, max |q1 - q_*| (s=1) = {max_s1:.1e}"))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let r = theorem_check(3, 3, 7, 1e-7).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(r.graphs_total == 1 << 21, || format!("enumerated {}", r.graphs_total))?;
    ensure(r.graphs_connected == 778_765, || format!("connected {}", r.graphs_connected))?;
    ensure(r.graphs_above_bound == 505, || format!("near-bound {}", r.graphs_above_bound))?;
    ensure(r.extremal_copies == 63, || format!("copies of G_* {}", r.extremal_copies))?;
    ensure(r.counterexamples.is_empty(), || format!("{} counterexamples: {:?}", r.counterexamples.len(), r.counterexamples.first()))?;
    ensure(r.extremal_found, || "G_* not found infeasible at the bound".into())?;
    ensure((r.qstar - 9.096924095597053).abs() < 1e-9, || format!("q_* = {}", r.qstar))?;
    let threads = rayon::current_num_threads();
    within(elapsed, if threads > 1 { 180 } else { 900 })?;
    Ok(format!(
        "2^21 graphs, {} connected, {} near q_*, {} certified, {} copies of G_*, 0 counterexamples, {:.1}s on {threads} thread(s)",
        r.graphs_connected,
        r.graphs_above_bound,
        r.certificates_verified,
        r.extremal_copies,
        elapsed.as_secs_f64()
    ))
}

fn fuzz_corpus() -> Vec<(BipartiteGraph, DegreeDemand)> {
    (0..10_000u64)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(FUZZ_SEED);
            rng.set_stream(i);
            let g = random_connected(&mut rng, 8, 12);
            let f: Vec<usize> = (0..g.m()).map(|_| rng.gen_range(2..=4)).collect();
            (g, DegreeDemand::new(f).expect("demands are at least 2"))
        })
        .collect()
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let corpus = fuzz_corpus();
    let results: Vec<std::result::Result<bool, String>> = corpus
        .par_iter()
        .enumerate()
        .map(|(i, (g, f))| {
            let brute = check_condition_bruteforce(g, f).map_err(|e| e.to_string())?;
            let flow = check_condition_flow(g, f).map_err(|e| e.to_string())?;
            ensure(brute.is_some() == flow.is_some(), || format!("instance {i}: checkers disagree"))?;
            for v in brute.iter().chain(flow.iter()) {
                ensure(is_violation(g, f, &v.set), || format!("instance {i}: bogus violation {:?}", v.set))?;
            }
            Ok(brute.is_none())
        })
        .collect();
    let mut feasible = 0;
    for r in results {
        feasible += r? as usize;
    }
    within(start.elapsed(), 120)?;
    Ok(format!(
        "10000 instances ({feasible} satisfy the condition, {} violate), {:.1}s",
        10_000 - feasible,
        start.elapsed().as_secs_f64()
    ))
}

fn tree_agrees(g: &BipartiteGraph, f: &DegreeDemand) -> std::result::Result<bool, String> {
    let brute = check_condition_bruteforce(g, f).map_err(|e| e.to_string())?;
    match construct_tree(g, f) {
        Ok(FeasibilityResult::Feasible(t)) => {
            ensure(brute.is_none(), || format!("tree returned but brute force finds a violation: {:?}", g.edges()))?;
            ensure(verify_certificate(g, f, &t), || format!("certificate fails: {:?}", g.edges()))?;
            Ok(true)
        }
        Ok(FeasibilityResult::Infeasible(v)) => {
            ensure(brute.is_some(), || format!("violation returned but brute force finds none: {:?}", g.edges()))?;
            ensure(is_violation(g, f, &v.set), || format!("bogus violation: {:?}", g.edges()))?;
            Ok(false)
        }
        Err(Error::Internal(msg)) => Err(format!("internal stall: {msg} on {:?}", g.edges())),
        Err(e) => Err(e.to_string()),
    }
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let f3 = DegreeDemand::uniform(3, 3).map_err(|e| e.to_string())?;
    let graphs: Vec<BipartiteGraph> = enumerate_bipartite(3, 7, true).map_err(|e| e.to_string())?.collect();
    ensure(graphs.len() == 778_765, || format!("{} connected graphs", graphs.len()))?;
    let enum_feasible = graphs
        .par_iter()
        .map(|g| tree_agrees(g, &f3).map(|b| b as usize))
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    let corpus = fuzz_corpus();
    let fuzz_feasible = corpus
        .par_iter()
        .map(|(g, f)| tree_agrees(g, f).map(|b| b as usize))
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(format!(
        "(3,7) f=3: {} graphs, {enum_feasible} trees certified; fuzz corpus: {fuzz_feasible} trees certified; 0 stalls; {:.1}s",
        graphs.len(),
        start.elapsed().as_secs_f64()
    ))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let r = monotonicity_fuzz(10_000, FUZZ_SEED).map_err(|e| e.to_string())?;
    ensure(r.violations.is_empty(), || format!("{} violations: {:?}", r.violations.len(), r.violations.first()))?;
    within(start.elapsed(), 60)?;
    Ok(format!(
        "10000 pairs, 0 violations, {} proper pairs proven strict exactly, {:.1}s",
        r.strict_confirmed,
        start.elapsed().as_secs_f64()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "q(K_{m,n}) = m+n for 1 <= m,n <= 30", criterion_1),
        (2, "quotient root equals full eigensolve on the default grid", criterion_2),
        (3, "exact coefficient and polynomial identities", criterion_3),
        (4, "exact strict proof inequalities", criterion_4),
        (5, "ordering and separation of q1 and q_*", criterion_5),
        (6, "exhaustive threshold check at (k,m,n) = (3,3,7)", criterion_6),
        (7, "flow checker agrees with brute force", criterion_7),
        (8, "tree constructor agrees with brute force", criterion_8),
        (9, "subgraph monotonicity fuzz", criterion_9),
    ];
    let mut failed = 0;
    for (id, name, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {id}: {name} ({detail})"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {id}: {name} ({why})");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
