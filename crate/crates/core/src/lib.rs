//! Spanning trees with degree lower bounds on one side of a bipartite graph,
//! and the signless Laplacian spectral threshold that forces them.
//!
//! A connected bipartite graph `G` with sides `A` (`|A| = m`) and `B` (`|B| = n`),
//! `k ≥ 3`, `m ≥ 3`, `n ≥ (k−1)m + 1`, has a spanning tree with `d_T(v) ≥ k` on `A`
//! whenever `q(G) ≥ q(K_{1,k−1} ∇ K_{m−1,n−k+1})`, unless `G` is that graph.
//!
//! * [`graph`]: bipartite graphs, the `∇` join, file format.
//! * [`spectral`]: `Q(G)`, its spectral radius, quotient matrices, exact characteristic polynomials.
//! * [`extremal`]: the extremal family and the polynomials comparing it with the threshold graph.
//! * [`trees`]: the Hall-type condition, witness trees and violating sets.
//! * [`verify`]: exhaustive and parameter-sweep verification.
//! * [`cli`]: the `qbound` command-line front end.

pub mod bitset;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod report;
pub mod spectral;
pub mod trees;
pub mod verify;

pub use error::{Error, Result};
pub use graph::BipartiteGraph;
