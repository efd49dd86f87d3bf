//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::extremal::{build_extremal, phi_coeffs, quotient_b1, ExtremalParams};
use crate::graph::BipartiteGraph;
use crate::report::fmt_sig;
use crate::spectral::{signless_laplacian, spectral_radius, DEFAULT_TOL};
use crate::trees::{construct_tree, DegreeDemand, FeasibilityResult};
use crate::verify::{
    monotonicity_fuzz_with_jobs, proof_sweep_with_jobs, sweep_point, theorem_check_with_jobs,
    SweepGrid, DEFAULT_BOUND_TOL,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qbound", version, about = "Spanning trees with degree lower bounds and the signless Laplacian threshold")]
pub struct Cli {
    /// Output format. With json the report goes to stdout and a summary to stderr.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Largest eigenvalue of Q(G) = D + A.
    Spectral {
        graph: PathBuf,
    },
    /// Spanning tree with d_T(v) >= f(v) on side A, or a violating set.
    CheckTree(CheckTreeArgs),
    /// Builds K_{s,(k-1)s} join K_{m-s,n-(k-1)s} and reports its quotient data.
    Extremal {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        s: i64,
        /// Write the graph here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive check of every connected bipartite graph on (m, n).
    VerifyTheorem {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_BOUND_TOL)]
        tol: f64,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Checks the polynomial identities and inequalities over a parameter grid.
    ProofSweep {
        /// Inclusive range, e.g. 3..5.
        #[arg(long, default_value = "3..5", value_parser = parse_range)]
        k_range: (i64, i64),
        #[arg(long, default_value = "3..5", value_parser = parse_range)]
        m_range: (i64, i64),
        /// Offsets e with n = (k-1)m + e; 0 is the boundary.
        #[arg(long, default_value = "1..5", value_parser = parse_range)]
        n_extra: (i64, i64),
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Random subgraph pairs: q(H) <= q(G).
    MonotonicityFuzz {
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct DemandArgs {
    /// Uniform demand f(v) = k.
    #[arg(long)]
    pub k: Option<usize>,
    /// Demand file, one integer per line.
    #[arg(long = "f")]
    pub f: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CheckTreeArgs {
    pub graph: PathBuf,
    #[command(flatten)]
    pub demand: DemandArgs,
}

/// Parses `a..b` (inclusive) or a single integer.
pub fn parse_range(text: &str) -> std::result::Result<(i64, i64), String> {
    let parse = |s: &str| s.trim().parse::<i64>().map_err(|e| format!("bad bound {s:?}: {e}"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(text)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {text}"));
    }
    Ok((lo, hi))
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<serde_json::Value> {
    serde_json::to_value(v).map_err(|e| Error::internal(e.to_string()))
}

struct Outcome {
    json: serde_json::Value,
    text: String,
    passed: bool,
}

fn read_graph(path: &PathBuf) -> Result<BipartiteGraph> {
    BipartiteGraph::read_file(path).map_err(|e| match e {
        Error::Parse { line, msg } => Error::input(format!("{}, line {line}: {msg}", path.display())),
        other => other,
    })
}

fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Spectral { graph } => {
            let g = read_graph(graph)?;
            let est = spectral_radius(&signless_laplacian(&g), DEFAULT_TOL)?;
            let text = format!(
                "q(G) = {}\nresidual = {:e}\niterations = {}\nmethod = {:?}\n",
                fmt_sig(est.value),
                est.residual,
                est.iterations,
                est.method
            );
            let mut json = json!({ "schema": "1" });
            json["estimate"] = to_json(&est)?;
            Ok(Outcome { json, text, passed: true })
        }
        Command::CheckTree(args) => {
            let g = read_graph(&args.graph)?;
            let f = match (&args.demand.k, &args.demand.f) {
                (Some(k), None) => DegreeDemand::uniform(g.m(), *k)?,
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
                    DegreeDemand::parse(&text, g.m()).map_err(|e| match e {
                        Error::Parse { line, msg } => Error::input(format!("{}, line {line}: {msg}", path.display())),
                        other => other,
                    })?
                }
                _ => return Err(Error::input("exactly one of --k and --f is required")),
            };
            let result = construct_tree(&g, &f)?;
            let text = match &result {
                FeasibilityResult::Feasible(t) => {
                    let edges: Vec<String> = t.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                    format!("feasible\ntree {}\n", edges.join(" "))
                }
                FeasibilityResult::Infeasible(v) => format!("infeasible\nviolating set {:?}\n", v.set),
            };
            Ok(Outcome {
                json: result.to_json(),
                text,
                passed: true,
            })
        }
        Command::Extremal { k, m, n, s, out } => extremal(*k, *m, *n, *s, out.as_ref()),
        Command::VerifyTheorem { k, m, n, tol, jobs } => {
            if tol.is_nan() || *tol < 0.0 {
                return Err(Error::input("--tol must be nonnegative"));
            }
            let r = theorem_check_with_jobs(*k, *m, *n, *tol, *jobs)?;
            Ok(Outcome {
                json: to_json(&r)?,
                text: r.summary(),
                passed: r.passed(),
            })
        }
        Command::ProofSweep {
            k_range,
            m_range,
            n_extra,
            jobs,
        } => {
            let grid = SweepGrid {
                k: *k_range,
                m: *m_range,
                n_extra: *n_extra,
            };
            let r = proof_sweep_with_jobs(&grid, *jobs)?;
            Ok(Outcome {
                json: to_json(&r)?,
                text: r.summary(),
                passed: r.passed(),
            })
        }
        Command::MonotonicityFuzz { trials, seed, jobs } => {
            let r = monotonicity_fuzz_with_jobs(*trials, *seed, *jobs)?;
            Ok(Outcome {
                json: to_json(&r)?,
                text: r.summary(),
                passed: r.passed(),
            })
        }
    }
}

fn extremal(k: i64, m: i64, n: i64, s: i64, out: Option<&PathBuf>) -> Result<Outcome> {
    let p = ExtremalParams::new(k, m, n, s)?;
    let g = build_extremal(&p)?;
    let b1 = quotient_b1(&p)?;
    let phi = phi_coeffs(&p);
    let pt = sweep_point(&p)?;
    let checks = [
        ("coefficient identity", pt.coeff_identity),
        ("psi identity", pt.psi_identity),
        ("psi(m+n) <= f(n) < 0", pt.psi_upper_end),
        ("psi(m+(k-1)s) = (k-1)h(s)", pt.psi_lower_end),
        ("h(2) < 0, h(m-1) < 0", pt.h_endpoints),
        ("m+(k-1)s < q1 < m+n", pt.ordering),
        ("q1 vs q_*", pt.separation),
        ("q1 = q(G) by eigensolve", pt.quotient_agreement),
        ("subgraph chain", pt.subgraph_chain),
    ];
    let mut checks: Vec<(&str, bool)> = checks.to_vec();
    if let Some(ok) = pt.psi_at_q1 {
        checks.push(("psi(q1) < 0", ok));
    }
    let passed = checks.iter().all(|(_, ok)| *ok);

    let mut report = String::new();
    report.push_str(&format!("extremal graph k = {k}, m = {m}, n = {n}, s = {s}\n"));
    report.push_str(&format!("block sizes {:?}\nquotient matrix\n", b1.block_sizes()));
    for line in b1.to_string().lines() {
        report.push_str(&format!("  {line}\n"));
    }
    report.push_str(&format!("phi(x) = {phi}\n"));
    report.push_str(&format!("q1  = {}\n", fmt_sig(pt.q1)));
    report.push_str(&format!("q_* = {}\n", fmt_sig(pt.qstar)));
    report.push_str(&format!("q(G) eigensolve = {}\n", fmt_sig(pt.q_eigensolve)));
    report.push_str(&format!(
        "f(n) = {}, h(2) = {}, h(m-1) = {}, psi(m+n) = {}, psi(m+(k-1)s) = {}\n",
        pt.f_n, pt.h_2, pt.h_m_minus_1, pt.psi_at_m_plus_n, pt.psi_at_m_plus_r
    ));
    for (name, ok) in &checks {
        report.push_str(&format!("{} {name}\n", if *ok { "ok  " } else { "FAIL" }));
    }

    let file = g.to_file_string();
    let text = match out {
        Some(path) => {
            g.write_file(path)?;
            report.clone()
        }
        None => {
            let mut t = file.clone();
            for line in report.lines() {
                t.push_str(&format!("# {line}\n"));
            }
            t
        }
    };
    let json = json!({
        "schema": "1",
        "params": p,
        "graph": file,
        "block_sizes": b1.block_sizes(),
        "quotient": b1.integer_rows(),
        "phi": phi.descending().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "point": to_json(&pt)?,
        "passed": passed,
    });
    Ok(Outcome { json, text: if out.is_some() { report } else { text }, passed })
}

/// Runs one command, writing the report to `out` and diagnostics to `err`. Returns the exit status.
pub fn run_with(cli: &Cli, out: &mut impl Write, err: &mut impl Write) -> i32 {
    match execute(&cli.command) {
        Ok(o) => {
            let written = match cli.format {
                Format::Json => serde_json::to_string_pretty(&o.json)
                    .map_err(std::io::Error::other)
                    .and_then(|s| writeln!(out, "{s}"))
                    .and_then(|_| write!(err, "{}", o.text)),
                Format::Text => write!(out, "{}", o.text),
            };
            if written.is_err() {
                return EXIT_FAILED;
            }
            if o.passed {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Input(_) | Error::Parse { .. } | Error::Capacity(_) => EXIT_INPUT,
                Error::Numerical { .. } | Error::Internal(_) => EXIT_FAILED,
            }
        }
    }
}

pub fn run(cli: &Cli) -> i32 {
    run_with(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
