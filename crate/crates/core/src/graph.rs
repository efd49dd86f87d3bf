//! Bipartite graphs with sides `A` (size `m`) and `B` (size `n`).
//!
//! Vertices on each side are indexed separately from zero. Whenever a graph is
//! viewed as a single vertex set (for instance when assembling a matrix), the
//! `A`-vertices come first: A-vertex `a` is vertex `a`, B-vertex `b` is vertex `m + b`.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::path::Path;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BipartiteGraph {
    m: usize,
    n: usize,
    /// For each A-vertex, its neighbors in B.
    adj_a: Vec<BitSet>,
    /// For each B-vertex, its neighbors in A.
    adj_b: Vec<BitSet>,
    edges: usize,
}

impl BipartiteGraph {
    /// Graph with no edges. Unlike [`from_edge_list`](Self::from_edge_list), either side
    /// may be empty; this is the neutral element for [`join`](Self::join).
    pub fn edgeless(m: usize, n: usize) -> Self {
        BipartiteGraph {
            m,
            n,
            adj_a: vec![BitSet::new(n); m],
            adj_b: vec![BitSet::new(m); n],
            edges: 0,
        }
    }

    pub fn from_edge_list(m: usize, n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::input(format!(
                "both sides must be nonempty (got m = {m}, n = {n})"
            )));
        }
        let mut g = BipartiteGraph::edgeless(m, n);
        for &(a, b) in edges {
            if a >= m || b >= n {
                return Err(Error::input(format!(
                    "edge ({a}, {b}) out of range for m = {m}, n = {n}"
                )));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    /// Edge `(a, b)` corresponds to bit `a * n + b` of `mask`.
    pub fn from_edge_mask(m: usize, n: usize, mask: u64) -> Self {
        debug_assert!(m * n <= 64);
        let mut g = BipartiteGraph::edgeless(m, n);
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            g.add_edge(i / n, i % n);
        }
        g
    }

    pub fn complete_bipartite(m: usize, n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..m).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
        BipartiteGraph::from_edge_list(m, n, &edges)
    }

    /// The bipartite join `G1 ∇ G2`: the disjoint union plus every edge between
    /// `A2` and `B1`. Indices of `G1` come first on both sides.
    pub fn join(g1: &BipartiteGraph, g2: &BipartiteGraph) -> BipartiteGraph {
        let (m, n) = (g1.m + g2.m, g1.n + g2.n);
        let mut g = BipartiteGraph::edgeless(m, n);
        for (a, b) in g1.edges() {
            g.add_edge(a, b);
        }
        for (a, b) in g2.edges() {
            g.add_edge(g1.m + a, g1.n + b);
        }
        for a in 0..g2.m {
            for b in 0..g1.n {
                g.add_edge(g1.m + a, b);
            }
        }
        g
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        if self.adj_a[a].insert(b) {
            self.adj_b[b].insert(a);
            self.edges += 1;
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.m + self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.m && self.adj_a[a].contains(b)
    }

    pub fn neighbors_a(&self, a: usize) -> &BitSet {
        &self.adj_a[a]
    }

    pub fn neighbors_b(&self, b: usize) -> &BitSet {
        &self.adj_b[b]
    }

    pub fn degree_a(&self, a: usize) -> usize {
        self.adj_a[a].count()
    }

    pub fn degree_b(&self, b: usize) -> usize {
        self.adj_b[b].count()
    }

    /// Degrees of all `m + n` vertices, A-side first.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.m)
            .map(|a| self.degree_a(a))
            .chain((0..self.n).map(|b| self.degree_b(b)))
            .collect()
    }

    /// Edges sorted lexicographically by `(a, b)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edges);
        for (a, nb) in self.adj_a.iter().enumerate() {
            out.extend(nb.iter().map(|b| (a, b)));
        }
        out
    }

    /// `N_G(S)` for `S ⊆ A`.
    pub fn neighbors_of_set<I>(&self, set: I) -> BitSet
    where
        I: IntoIterator<Item = usize>,
    {
        let mut out = BitSet::new(self.n);
        for a in set {
            out.union_with(&self.adj_a[a]);
        }
        out
    }

    /// True iff a breadth-first search from the first vertex reaches all `m + n` vertices.
    pub fn is_connected(&self) -> bool {
        let total = self.order();
        if total == 0 {
            return false;
        }
        let mut seen_a = vec![false; self.m];
        let mut seen_b = vec![false; self.n];
        let mut queue = VecDeque::new();
        // Side::A = false, Side::B = true
        if self.m > 0 {
            seen_a[0] = true;
            queue.push_back((false, 0));
        } else {
            seen_b[0] = true;
            queue.push_back((true, 0));
        }
        let mut reached = 1;
        while let Some((on_b, v)) = queue.pop_front() {
            if on_b {
                for a in self.adj_b[v].iter() {
                    if !seen_a[a] {
                        seen_a[a] = true;
                        reached += 1;
                        queue.push_back((false, a));
                    }
                }
            } else {
                for b in self.adj_a[v].iter() {
                    if !seen_b[b] {
                        seen_b[b] = true;
                        reached += 1;
                        queue.push_back((true, b));
                    }
                }
            }
        }
        reached == total
    }

    /// Parse the line-based `p bip <m> <n>` / `e <a> <b>` format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let perr = |msg: String| Error::Parse { line: line_no, msg };
            match fields.as_slice() {
                ["p", "bip", m, n] => {
                    if header.is_some() {
                        return Err(perr("duplicate problem line".into()));
                    }
                    let m = parse_count(m).map_err(&perr)?;
                    let n = parse_count(n).map_err(&perr)?;
                    if m == 0 || n == 0 {
                        return Err(perr(format!("both sides must be nonempty (m = {m}, n = {n})")));
                    }
                    header = Some((m, n));
                }
                ["e", a, b] => {
                    let (m, n) = header.ok_or_else(|| perr("edge before `p bip` line".into()))?;
                    let a = parse_count(a).map_err(&perr)?;
                    let b = parse_count(b).map_err(&perr)?;
                    if a >= m || b >= n {
                        return Err(perr(format!("edge ({a}, {b}) out of range for m = {m}, n = {n}")));
                    }
                    edges.push((a, b));
                }
                _ => return Err(perr(format!("unrecognized line `{line}`"))),
            }
        }
        let (m, n) = header.ok_or(Error::Parse {
            line: 1,
            msg: "missing `p bip <m> <n>` line".into(),
        })?;
        BipartiteGraph::from_edge_list(m, n, &edges)
    }

    /// Serialize with edges in lexicographic order.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("p bip {} {}\n", self.m, self.n);
        for (a, b) in self.edges() {
            let _ = writeln!(out, "e {a} {b}");
        }
        out
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
        BipartiteGraph::parse(&text)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_file_string())
            .map_err(|e| Error::input(format!("cannot write {}: {e}", path.display())))
    }
}

fn parse_count(s: &str) -> std::result::Result<usize, String> {
    s.parse::<usize>()
        .map_err(|_| format!("expected a nonnegative integer, found `{s}`"))
}

/// Largest side the isomorphism search will permute.
pub const ISO_SIDE_CAP: usize = 10;

/// Isomorphism that maps `A` onto `A` and `B` onto `B`.
///
/// Permutes the smaller side (restricted to degree-preserving maps) and compares
/// the multiset of other-side neighborhoods under each candidate.
pub fn part_preserving_isomorphic(g: &BipartiteGraph, h: &BipartiteGraph) -> Result<bool> {
    if g.m != h.m || g.n != h.n {
        return Err(Error::input(format!(
            "size mismatch: ({}, {}) vs ({}, {})",
            g.m, g.n, h.m, h.n
        )));
    }
    if g.edges != h.edges {
        return Ok(false);
    }
    let mut da: Vec<_> = (0..g.m).map(|a| g.degree_a(a)).collect();
    let mut ha: Vec<_> = (0..h.m).map(|a| h.degree_a(a)).collect();
    let mut db: Vec<_> = (0..g.n).map(|b| g.degree_b(b)).collect();
    let mut hb: Vec<_> = (0..h.n).map(|b| h.degree_b(b)).collect();
    da.sort_unstable();
    ha.sort_unstable();
    db.sort_unstable();
    hb.sort_unstable();
    if da != ha || db != hb {
        return Ok(false);
    }

    // Work with the smaller side as the permuted side.
    let (p_side, g_perm, g_other, h_perm, h_other) = if g.m <= g.n {
        (g.m, &g.adj_a, &g.adj_b, &h.adj_a, &h.adj_b)
    } else {
        (g.n, &g.adj_b, &g.adj_a, &h.adj_b, &h.adj_a)
    };
    if p_side > ISO_SIDE_CAP {
        return Err(Error::Capacity(format!(
            "isomorphism search supports at most {ISO_SIDE_CAP} vertices on the smaller side"
        )));
    }
    let mut target: Vec<u64> = h_other.iter().map(mask_of).collect();
    target.sort_unstable();
    let g_other: Vec<u64> = g_other.iter().map(mask_of).collect();
    let g_deg: Vec<usize> = g_perm.iter().map(BitSet::count).collect();
    let h_deg: Vec<usize> = h_perm.iter().map(BitSet::count).collect();

    let mut perm = vec![usize::MAX; p_side];
    let mut used = vec![false; p_side];
    Ok(search_perm(0, &mut perm, &mut used, &g_deg, &h_deg, &g_other, &target))
}

fn mask_of(set: &BitSet) -> u64 {
    set.iter().fold(0u64, |acc, i| acc | 1 << i)
}

fn search_perm(
    i: usize,
    perm: &mut [usize],
    used: &mut [bool],
    g_deg: &[usize],
    h_deg: &[usize],
    g_other: &[u64],
    target: &[u64],
) -> bool {
    if i == perm.len() {
        let mut mapped: Vec<u64> = g_other
            .iter()
            .map(|&mask| {
                let mut out = 0u64;
                let mut bits = mask;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    out |= 1 << perm[v];
                }
                out
            })
            .collect();
        mapped.sort_unstable();
        return mapped == target;
    }
    for j in 0..perm.len() {
        if used[j] || g_deg[i] != h_deg[j] {
            continue;
        }
        used[j] = true;
        perm[i] = j;
        if search_perm(i + 1, perm, used, g_deg, h_deg, g_other, target) {
            return true;
        }
        used[j] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(m: usize, n: usize) -> BipartiteGraph {
        BipartiteGraph::complete_bipartite(m, n).unwrap()
    }

    #[test]
    fn from_edge_list_examples() {
        let g = BipartiteGraph::from_edge_list(1, 1, &[(0, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.is_connected());

        let g = BipartiteGraph::from_edge_list(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1), (1, 1)]).unwrap();
        assert_eq!(g, k(2, 2));
    }

    #[test]
    fn from_edge_list_rejects_bad_input() {
        assert!(matches!(
            BipartiteGraph::from_edge_list(0, 3, &[]),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            BipartiteGraph::from_edge_list(2, 2, &[(2, 0)]),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            BipartiteGraph::from_edge_list(2, 2, &[(0, 2)]),
            Err(Error::Input(_))
        ));
        assert!(BipartiteGraph::complete_bipartite(3, 0).is_err());
    }

    #[test]
    fn complete_bipartite_degrees() {
        assert_eq!(k(1, 1).edge_count(), 1);
        assert_eq!(k(2, 3).edge_count(), 6);
        let g = k(3, 7);
        assert_eq!(g.edge_count(), 21);
        assert!((0..3).all(|a| g.degree_a(a) == 7));
        assert!((0..7).all(|b| g.degree_b(b) == 3));
    }

    #[test]
    fn join_of_stars() {
        // K_{1,2} ∇ K_{2,5}
        let g = BipartiteGraph::join(&k(1, 2), &k(2, 5));
        assert_eq!((g.m(), g.n()), (3, 7));
        assert_eq!(g.edge_count(), 16);
        assert_eq!(g.degree_a(0), 2);
        assert_eq!(g.degree_a(1), 7);
        assert_eq!(g.degree_a(2), 7);
        let from_list = BipartiteGraph::from_edge_list(3, 7, &g.edges()).unwrap();
        assert_eq!(from_list, g);
    }

    #[test]
    fn join_degree_profile() {
        for (s, r, m, n) in [(1, 2, 3, 7), (2, 3, 4, 9), (3, 6, 5, 14)] {
            let g = BipartiteGraph::join(&k(s, r), &k(m - s, n - r));
            for a in 0..s {
                assert_eq!(g.degree_a(a), r);
            }
            for a in s..m {
                assert_eq!(g.degree_a(a), n);
            }
            for b in 0..r {
                assert_eq!(g.degree_b(b), m);
            }
            for b in r..n {
                assert_eq!(g.degree_b(b), m - s);
            }
        }
    }

    #[test]
    fn join_with_empty_side() {
        let g1 = k(2, 2);
        let g2 = BipartiteGraph::edgeless(0, 3);
        let g = BipartiteGraph::join(&g1, &g2);
        assert_eq!((g.m(), g.n()), (2, 5));
        assert_eq!(g.edge_count(), 4);
        assert!((2..5).all(|b| g.degree_b(b) == 0));
    }

    #[test]
    fn neighbors_of_set_examples() {
        let g = k(3, 7);
        assert_eq!(g.neighbors_of_set([1]).count(), 7);
        assert_eq!(g.neighbors_of_set([0, 2]).count(), 7);
        assert!(g.neighbors_of_set(std::iter::empty()).is_empty());

        let gstar = BipartiteGraph::join(&k(1, 2), &k(2, 5));
        assert_eq!(gstar.neighbors_of_set([0]).iter().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn connectivity() {
        assert!(k(3, 4).is_connected());
        let g = BipartiteGraph::from_edge_list(2, 2, &[(0, 0), (1, 1)]).unwrap();
        assert!(!g.is_connected());
        let g = BipartiteGraph::from_edge_list(2, 3, &[(0, 0), (1, 0), (1, 1)]).unwrap();
        assert!(!g.is_connected());
        assert!(!BipartiteGraph::edgeless(0, 0).is_connected());
    }

    #[test]
    fn isomorphism_examples() {
        let k22 = k(2, 2);
        assert!(part_preserving_isomorphic(&k22, &k22).unwrap());
        // C4 with a scrambled labeling is still K_{2,2}
        let c4 = BipartiteGraph::from_edge_list(2, 2, &[(1, 1), (0, 1), (1, 0), (0, 0)]).unwrap();
        assert!(part_preserving_isomorphic(&k22, &c4).unwrap());
        let p4 = BipartiteGraph::from_edge_list(2, 2, &[(0, 0), (0, 1), (1, 1)]).unwrap();
        assert!(!part_preserving_isomorphic(&k22, &p4).unwrap());
        assert!(matches!(
            part_preserving_isomorphic(&k22, &k(2, 3)),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn isomorphism_respects_sides() {
        // Same degree multisets per side, different structure:
        // two disjoint P3-ish pieces vs a path.
        let g = BipartiteGraph::from_edge_list(3, 3, &[(0, 0), (0, 1), (1, 1), (1, 2), (2, 2)]).unwrap();
        let h = BipartiteGraph::from_edge_list(3, 3, &[(0, 0), (0, 1), (1, 0), (1, 2), (2, 2)]).unwrap();
        assert!(part_preserving_isomorphic(&g, &h).unwrap());
        let relabel = BipartiteGraph::from_edge_list(
            3,
            3,
            &g.edges().iter().map(|&(a, b)| ((a + 1) % 3, (b + 2) % 3)).collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(part_preserving_isomorphic(&g, &relabel).unwrap());
        // K_{1,2} ∇ K_{2,5} is not isomorphic to the s = 2 member of the family.
        let gstar = BipartiteGraph::join(&k(1, 2), &k(2, 5));
        let mut e = gstar.edges();
        e.pop();
        e.push((0, 6));
        let other = BipartiteGraph::from_edge_list(3, 7, &e).unwrap();
        assert!(!part_preserving_isomorphic(&gstar, &other).unwrap());
    }

    #[test]
    fn file_format() {
        let text = "# comment\np bip 2 3\ne 1 2\ne 0 0\n\ne 0 0\n";
        let g = BipartiteGraph::parse(text).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.to_file_string(), "p bip 2 3\ne 0 0\ne 1 2\n");

        let err = BipartiteGraph::parse("p bip 2 2\ne 0 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = BipartiteGraph::parse("e 0 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = BipartiteGraph::parse("p bip 2 2\nx\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(BipartiteGraph::parse("# nothing\n").is_err());
    }

    #[test]
    fn edge_mask_layout() {
        let g = BipartiteGraph::from_edge_mask(2, 3, 0b100_001);
        assert_eq!(g.edges(), vec![(0, 0), (1, 2)]);
    }
}
