//! Spanning trees whose degrees on side `A` meet a lower bound `f(v) ≥ 2`.
//!
//! Such a tree exists in a connected bipartite graph iff
//! `|N(S)| ≥ Σ_{v∈S} f(v) − |S| + 1` for every nonempty `S ⊆ A`. This module
//! checks that condition two ways, builds a witness tree when it holds, and
//! verifies both kinds of witness.

use std::collections::VecDeque;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// Largest `m` accepted by [`check_condition_bruteforce`].
pub const BRUTE_FORCE_CAP: usize = 25;
/// Largest edge count for which the exhaustive spanning-tree fallback runs.
pub const EXHAUSTIVE_EDGE_CAP: usize = 24;

/// Lower bounds `f(v) ≥ 2` on the tree degree of each A-vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeDemand {
    f: Vec<usize>,
}

impl DegreeDemand {
    pub fn new(f: Vec<usize>) -> Result<Self> {
        if let Some((v, &d)) = f.iter().enumerate().find(|(_, &d)| d < 2) {
            return Err(Error::input(format!("demand f({v}) = {d} is below 2")));
        }
        Ok(DegreeDemand { f })
    }

    pub fn uniform(m: usize, k: usize) -> Result<Self> {
        DegreeDemand::new(vec![k; m])
    }

    /// One integer per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str, m: usize) -> Result<Self> {
        let mut f = Vec::with_capacity(m);
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let v: usize = line.parse().map_err(|_| Error::Parse {
                line: i + 1,
                msg: format!("expected an integer demand, found `{line}`"),
            })?;
            if v < 2 {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("demand {v} is below 2"),
                });
            }
            f.push(v);
        }
        if f.len() != m {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                msg: format!("expected {m} demands, found {}", f.len()),
            });
        }
        DegreeDemand::new(f)
    }

    pub fn get(&self, v: usize) -> usize {
        self.f[v]
    }

    pub fn len(&self) -> usize {
        self.f.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.f
    }

    pub fn total(&self) -> usize {
        self.f.iter().sum()
    }
}

/// Edges of a spanning tree, each `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeCertificate {
    pub edges: Vec<(usize, usize)>,
}

/// A nonempty `S ⊆ A` (sorted) with `|N(S)| ≤ Σ_{v∈S} f(v) − |S|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HallViolation {
    pub set: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FeasibilityResult {
    Feasible(TreeCertificate),
    Infeasible(HallViolation),
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityResult::Feasible(_))
    }

    /// `{"feasible": true, "tree": [[a,b],…]}` or `{"feasible": false, "violating_set": […]}`.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            FeasibilityResult::Feasible(t) => serde_json::json!({
                "schema": "1",
                "feasible": true,
                "tree": t.edges.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
            }),
            FeasibilityResult::Infeasible(v) => serde_json::json!({
                "schema": "1",
                "feasible": false,
                "violating_set": v.set,
            }),
        }
    }
}

fn check_demand(g: &BipartiteGraph, f: &DegreeDemand) -> Result<()> {
    if f.len() != g.m() {
        return Err(Error::input(format!(
            "demand has {} entries but the graph has m = {}",
            f.len(),
            g.m()
        )));
    }
    Ok(())
}

/// True iff `set` is nonempty and `|N(set)| ≤ Σ f − |set|`.
pub fn is_violation(g: &BipartiteGraph, f: &DegreeDemand, set: &[usize]) -> bool {
    if set.is_empty() || set.iter().any(|&v| v >= g.m()) {
        return false;
    }
    let need: usize = set.iter().map(|&v| f.get(v) - 1).sum();
    g.neighbors_of_set(set.iter().copied()).count() < need + 1
}

/// Enumerates every nonempty `S ⊆ A`, by increasing size and then
/// lexicographically, and returns the first violation.
pub fn check_condition_bruteforce(g: &BipartiteGraph, f: &DegreeDemand) -> Result<Option<HallViolation>> {
    check_demand(g, f)?;
    let m = g.m();
    if m > BRUTE_FORCE_CAP {
        return Err(Error::Capacity(format!(
            "brute-force check enumerates 2^m subsets; m = {m} exceeds {BRUTE_FORCE_CAP}"
        )));
    }
    let mut chosen = Vec::with_capacity(m);
    let mut unions: Vec<BitSet> = vec![BitSet::new(g.n()); m + 1];
    for size in 1..=m {
        if let Some(set) = combos(g, f, size, 0, 0, &mut chosen, &mut unions) {
            return Ok(Some(HallViolation { set }));
        }
    }
    Ok(None)
}

/// Depth-first walk over `size`-subsets in lexicographic order. `unions[d]` holds
/// `N` of the first `d` chosen vertices; `excess` is `Σ (f(v) − 1)` over them.
fn combos(
    g: &BipartiteGraph,
    f: &DegreeDemand,
    size: usize,
    start: usize,
    excess: usize,
    chosen: &mut Vec<usize>,
    unions: &mut [BitSet],
) -> Option<Vec<usize>> {
    let depth = chosen.len();
    if depth == size {
        return (unions[depth].count() < excess + 1).then(|| chosen.clone());
    }
    let remaining = size - depth;
    for v in start..=g.m() - remaining {
        let (lo, hi) = unions.split_at_mut(depth + 1);
        hi[0].clone_from(&lo[depth]);
        hi[0].union_with(g.neighbors_a(v));
        chosen.push(v);
        let hit = combos(g, f, size, v + 1, excess + f.get(v) - 1, chosen, unions);
        chosen.pop();
        if hit.is_some() {
            return hit;
        }
    }
    None
}

struct FlowNet {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_arc(&mut self, u: usize, v: usize, c: i64) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    /// Shortest-augmenting-path max flow, stopping early once `stop_at` is reached.
    fn max_flow(&mut self, s: usize, t: usize, stop_at: i64) -> i64 {
        let mut flow = 0;
        let mut pred = vec![usize::MAX; self.head.len()];
        while flow < stop_at {
            pred.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &arc in &self.head[u] {
                    let v = self.to[arc];
                    if self.cap[arc] > 0 && v != s && pred[v] == usize::MAX {
                        pred[v] = arc;
                        if v == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut push = i64::MAX;
            let mut v = t;
            while v != s {
                let arc = pred[v];
                push = push.min(self.cap[arc]);
                v = self.to[arc ^ 1];
            }
            let mut v = t;
            while v != s {
                let arc = pred[v];
                self.cap[arc] -= push;
                self.cap[arc ^ 1] += push;
                v = self.to[arc ^ 1];
            }
            flow += push;
        }
        flow
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &arc in &self.head[u] {
                let v = self.to[arc];
                if self.cap[arc] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

/// Polynomial-time version of the condition check via one max-flow per anchor.
///
/// For anchor `a`: source→v with capacity `f(v) − 1` (`v ≠ a`), source→a with a
/// capacity exceeding every finite cut, v→u with the same large capacity for
/// each edge, and u→sink with capacity 1. Subsets containing `a` all satisfy the
/// condition iff the max flow reaches `Σ_A (f(v) − 1) + 1`; otherwise the
/// source side of a minimum cut is a violating set.
pub fn check_condition_flow(g: &BipartiteGraph, f: &DegreeDemand) -> Result<Option<HallViolation>> {
    check_demand(g, f)?;
    let (m, n) = (g.m(), g.n());
    let excess: i64 = f.as_slice().iter().map(|&d| d as i64 - 1).sum();
    let big = excess + n as i64 + 1;
    let target = excess + 1;
    let (source, sink) = (0, m + n + 1);
    for anchor in 0..m {
        let mut net = FlowNet::new(m + n + 2);
        for v in 0..m {
            let c = if v == anchor { big } else { f.get(v) as i64 - 1 };
            net.add_arc(source, 1 + v, c);
        }
        for (a, b) in g.edges() {
            net.add_arc(1 + a, 1 + m + b, big);
        }
        for b in 0..n {
            net.add_arc(1 + m + b, sink, 1);
        }
        if net.max_flow(source, sink, target) >= target {
            continue;
        }
        let side = net.reachable(source);
        let set: Vec<usize> = (0..m).filter(|&v| side[1 + v]).collect();
        if !set.contains(&anchor) || !is_violation(g, f, &set) {
            return Err(Error::internal(format!(
                "min cut for anchor {anchor} gave {set:?}, which does not violate the condition"
            )));
        }
        return Ok(Some(HallViolation { set }));
    }
    Ok(None)
}

/// True iff `tree` is a spanning tree of `g` meeting every demand on `A`.
pub fn verify_certificate(g: &BipartiteGraph, f: &DegreeDemand, tree: &TreeCertificate) -> bool {
    let (m, t) = (g.m(), g.order());
    if f.len() != m || tree.edges.len() + 1 != t {
        return false;
    }
    let mut dsu = Dsu::new(t);
    let mut deg = vec![0usize; m];
    for &(a, b) in &tree.edges {
        if !g.has_edge(a, b) || !dsu.union(a, m + b) {
            return false;
        }
        deg[a] += 1;
    }
    (0..m).all(|a| deg[a] >= f.get(a))
}

/// Knobs for [`construct_tree_with`].
#[derive(Clone, Debug)]
pub struct TreeSearchConfig {
    /// Run single-swap local search on the BFS tree before anything else.
    pub local_search: bool,
    /// Run the swap-sequence search when local search leaves a deficiency.
    pub swap_sequences: bool,
    /// Maximum number of edge exchanges in one swap sequence; `None` means `m + n`.
    pub swap_depth: Option<usize>,
    /// The exhaustive fallback only runs when `|E| ≤` this.
    pub exhaustive_edge_cap: usize,
}

impl Default for TreeSearchConfig {
    fn default() -> Self {
        TreeSearchConfig {
            local_search: true,
            swap_sequences: true,
            swap_depth: None,
            exhaustive_edge_cap: EXHAUSTIVE_EDGE_CAP,
        }
    }
}

/// Which stage of [`construct_tree_with`] settled the instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase {
    Checker,
    LocalSearch,
    SwapSequences,
    Exhaustive,
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub result: FeasibilityResult,
    pub phase: Phase,
}

pub fn construct_tree(g: &BipartiteGraph, f: &DegreeDemand) -> Result<FeasibilityResult> {
    construct_tree_with(g, f, &TreeSearchConfig::default()).map(|c| c.result)
}

/// Decides feasibility and returns a verified witness either way.
///
/// 1. flow check; a violation is returned as is.
/// 2. breadth-first spanning tree.
/// 3. single swaps: add a non-tree edge at a deficient vertex, drop an edge of
///    the fundamental cycle whose A-end has slack.
/// 4. swap sequences: shortest augmenting paths between the forest matroid and
///    the partition matroid `{≤ f(a) edges at a}`, each path an alternating
///    sequence of exchanges.
/// 5. exhaustive enumeration of spanning trees for small edge counts.
pub fn construct_tree_with(
    g: &BipartiteGraph,
    f: &DegreeDemand,
    cfg: &TreeSearchConfig,
) -> Result<Construction> {
    check_demand(g, f)?;
    if !g.is_connected() {
        return Err(Error::input("graph is not connected"));
    }
    let violation = check_condition_flow(g, f)?;
    if f.total() + 1 > g.order() && violation.is_none() {
        return Err(Error::internal(
            "demands exceed m + n − 1 yet the checker reported no violation",
        ));
    }
    if let Some(v) = violation {
        return Ok(Construction {
            result: FeasibilityResult::Infeasible(v),
            phase: Phase::Checker,
        });
    }

    let mut tree = TreeState::bfs(g);
    let mut phase = Phase::LocalSearch;
    if cfg.local_search {
        tree.single_swaps(g, f);
    }
    let mut edges = if tree.deficiency(f) == 0 {
        Some(tree.edge_list(g))
    } else {
        None
    };
    if edges.is_none() && cfg.swap_sequences {
        phase = Phase::SwapSequences;
        let depth = cfg.swap_depth.unwrap_or(g.order());
        edges = augment_from_tree(g, f, &tree, depth);
    }
    if edges.is_none() && g.edge_count() <= cfg.exhaustive_edge_cap {
        phase = Phase::Exhaustive;
        edges = exhaustive_tree(g, f);
    }
    let Some(edges) = edges else {
        return Err(Error::internal(
            "condition holds but no qualifying spanning tree was found",
        ));
    };
    let cert = TreeCertificate { edges };
    if !verify_certificate(g, f, &cert) {
        return Err(Error::internal("constructed tree failed verification"));
    }
    Ok(Construction {
        result: FeasibilityResult::Feasible(cert),
        phase,
    })
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Spanning tree as a membership mask over `g.edges()`.
struct TreeState {
    edges: Vec<(usize, usize)>,
    in_tree: Vec<bool>,
    deg_a: Vec<usize>,
    m: usize,
}

impl TreeState {
    fn bfs(g: &BipartiteGraph) -> Self {
        let edges = g.edges();
        let (m, t) = (g.m(), g.order());
        let mut in_tree = vec![false; edges.len()];
        let mut deg_a = vec![0; m];
        let incident = incidence(g, &edges);
        let mut seen = vec![false; t];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &e in &incident[u] {
                let (a, b) = edges[e];
                let w = if u == a { m + b } else { a };
                if !seen[w] {
                    seen[w] = true;
                    in_tree[e] = true;
                    deg_a[a] += 1;
                    queue.push_back(w);
                }
            }
        }
        TreeState {
            edges,
            in_tree,
            deg_a,
            m,
        }
    }

    fn deficiency(&self, f: &DegreeDemand) -> usize {
        (0..self.m).map(|a| f.get(a).saturating_sub(self.deg_a[a])).sum()
    }

    fn edge_list(&self, _g: &BipartiteGraph) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .zip(&self.in_tree)
            .filter(|(_, &t)| t)
            .map(|(&e, _)| e)
            .collect()
    }

    /// Edge indices on the tree path between combined vertices `u` and `v`.
    fn path(&self, u: usize, v: usize, t: usize) -> Vec<usize> {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); t];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if self.in_tree[i] {
                adj[a].push((self.m + b, i));
                adj[self.m + b].push((a, i));
            }
        }
        let mut via = vec![usize::MAX; t];
        let mut seen = vec![false; t];
        seen[u] = true;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &(y, e) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    via[y] = e;
                    queue.push_back(y);
                }
            }
        }
        let mut out = Vec::new();
        let mut x = v;
        while x != u {
            let e = via[x];
            out.push(e);
            let (a, b) = self.edges[e];
            x = if x == a { self.m + b } else { a };
        }
        out
    }

    fn single_swaps(&mut self, g: &BipartiteGraph, f: &DegreeDemand) {
        let t = g.order();
        loop {
            let mut improved = false;
            'outer: for v in 0..self.m {
                if self.deg_a[v] >= f.get(v) {
                    continue;
                }
                for i in 0..self.edges.len() {
                    let (a, b) = self.edges[i];
                    if a != v || self.in_tree[i] {
                        continue;
                    }
                    let cycle = self.path(a, self.m + b, t);
                    let drop = cycle.into_iter().find(|&e| {
                        let x = self.edges[e].0;
                        x != v && self.deg_a[x] > f.get(x)
                    });
                    if let Some(e) = drop {
                        self.in_tree[e] = false;
                        self.deg_a[self.edges[e].0] -= 1;
                        self.in_tree[i] = true;
                        self.deg_a[v] += 1;
                        improved = true;
                        break 'outer;
                    }
                }
            }
            if !improved {
                break;
            }
        }
    }
}

fn incidence(g: &BipartiteGraph, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut incident = vec![Vec::new(); g.order()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        incident[a].push(i);
        incident[g.m() + b].push(i);
    }
    incident
}

/// Grows a common independent set of the forest matroid and the partition
/// matroid `{≤ f(a) edges at each a}` to size `Σ f`, then completes it to a
/// spanning tree. Starts from the demand-capped part of `tree`. Returns `None`
/// if some augmenting path needs more than `depth` exchanges.
fn augment_from_tree(
    g: &BipartiteGraph,
    f: &DegreeDemand,
    tree: &TreeState,
    depth: usize,
) -> Option<Vec<(usize, usize)>> {
    let edges = &tree.edges;
    let (m, t) = (g.m(), g.order());
    let mut in_set = vec![false; edges.len()];
    let mut load = vec![0usize; m];
    for (i, &(a, _)) in edges.iter().enumerate() {
        if tree.in_tree[i] && load[a] < f.get(a) {
            in_set[i] = true;
            load[a] += 1;
        }
    }
    let goal = f.total();
    let mut size: usize = load.iter().sum();
    while size < goal {
        let path = shortest_exchange(edges, &in_set, &load, f, m, t)?;
        let swaps = path.iter().filter(|&&e| in_set[e]).count();
        if swaps > depth {
            return None;
        }
        for e in path {
            let a = edges[e].0;
            if in_set[e] {
                in_set[e] = false;
                load[a] -= 1;
            } else {
                in_set[e] = true;
                load[a] += 1;
            }
        }
        size += 1;
    }

    let mut dsu = Dsu::new(t);
    let mut out = Vec::with_capacity(t - 1);
    for (i, &(a, b)) in edges.iter().enumerate() {
        if in_set[i] {
            if !dsu.union(a, m + b) {
                return None;
            }
            out.push((a, b));
        }
    }
    for &(a, b) in edges.iter() {
        if dsu.union(a, m + b) {
            out.push((a, b));
        }
    }
    out.sort_unstable();
    Some(out)
}

/// Shortest path in the exchange graph of the current set, as edge indices.
fn shortest_exchange(
    edges: &[(usize, usize)],
    in_set: &[bool],
    load: &[usize],
    f: &DegreeDemand,
    m: usize,
    t: usize,
) -> Option<Vec<usize>> {
    // Forest structure of the current set: root each component and record parent edges.
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); t];
    for (i, &(a, b)) in edges.iter().enumerate() {
        if in_set[i] {
            adj[a].push((m + b, i));
            adj[m + b].push((a, i));
        }
    }
    let mut comp = vec![usize::MAX; t];
    let mut parent_edge = vec![usize::MAX; t];
    let mut depth_of = vec![0usize; t];
    for root in 0..t {
        if comp[root] != usize::MAX {
            continue;
        }
        comp[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &(y, e) in &adj[x] {
                if comp[y] == usize::MAX {
                    comp[y] = root;
                    parent_edge[y] = e;
                    depth_of[y] = depth_of[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    let other = |x: usize, e: usize| {
        let (a, b) = edges[e];
        if x == a {
            m + b
        } else {
            a
        }
    };
    let forest_path = |mut u: usize, mut v: usize| {
        let mut out = Vec::new();
        while u != v {
            if depth_of[u] >= depth_of[v] {
                let e = parent_edge[u];
                out.push(e);
                u = other(u, e);
            } else {
                let e = parent_edge[v];
                out.push(e);
                v = other(v, e);
            }
        }
        out
    };

    let ne = edges.len();
    let mut out_arcs: Vec<Vec<usize>> = vec![Vec::new(); ne];
    let mut sources = Vec::new();
    let mut is_sink = vec![false; ne];
    for z in 0..ne {
        if in_set[z] {
            continue;
        }
        let (a, b) = edges[z];
        if comp[a] != comp[m + b] {
            sources.push(z);
        } else {
            // y → z when swapping y out for z keeps a forest
            for y in forest_path(a, m + b) {
                out_arcs[y].push(z);
            }
        }
        if load[a] < f.get(a) {
            is_sink[z] = true;
        } else {
            // z → y when swapping y out for z respects the cap at a
            for (y, &(ya, _)) in edges.iter().enumerate() {
                if in_set[y] && ya == a {
                    out_arcs[z].push(y);
                }
            }
        }
    }

    let mut pred = vec![usize::MAX; ne];
    let mut seen = vec![false; ne];
    let mut queue = VecDeque::new();
    for &z in &sources {
        seen[z] = true;
        queue.push_back(z);
    }
    while let Some(x) = queue.pop_front() {
        if is_sink[x] {
            let mut path = vec![x];
            let mut cur = x;
            while pred[cur] != usize::MAX {
                cur = pred[cur];
                path.push(cur);
            }
            return Some(path);
        }
        for &y in &out_arcs[x] {
            if !seen[y] {
                seen[y] = true;
                pred[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Tries every `(m + n − 1)`-subset of edges in increasing bitmask order.
fn exhaustive_tree(g: &BipartiteGraph, f: &DegreeDemand) -> Option<Vec<(usize, usize)>> {
    let edges = g.edges();
    let (m, t) = (g.m(), g.order());
    let ne = edges.len();
    let need = t - 1;
    if need > ne || ne > 63 {
        return None;
    }
    let limit = 1u64 << ne;
    let mut mask: u64 = (1u64 << need) - 1;
    while mask < limit {
        let mut dsu = Dsu::new(t);
        let mut deg = vec![0usize; m];
        let mut ok = true;
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (a, b) = edges[i];
            if !dsu.union(a, m + b) {
                ok = false;
                break;
            }
            deg[a] += 1;
        }
        if ok && (0..m).all(|a| deg[a] >= f.get(a)) {
            return Some(
                (0..ne)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| edges[i])
                    .collect(),
            );
        }
        if need == 0 {
            break;
        }
        // next subset of the same popcount (Gosper)
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    None
}
