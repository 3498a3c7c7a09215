//! Degree completeness of labeled graphs via forbidden configurations.
//!
//! A labeled graph is degree complete iff no two vertex-disjoint edges
//! `{a, b}`, `{c, d}` with `a < c` have crossing (`a < c < b < d`, kind
//! [`ConfigurationKind::H1`]) or nested (`a < c < d < b`, kind
//! [`ConfigurationKind::H2`]) label intervals.
//!
//! Two searches are provided. [`scan_forbidden_configuration`] checks every
//! pair of edges. [`find_forbidden_configuration`] is a sweep over the left
//! endpoint that runs in `O(n + m log m)`. Both return the lexicographically
//! smallest witness by `(k1, k2, k3, k4)`, with H1 before H2 on ties.

use std::fmt;

use crate::graph::{Edge, LabeledGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConfigurationKind {
    /// Edges `k1k3` and `k2k4`.
    H1,
    /// Edges `k1k4` and `k2k3`.
    H2,
}

impl fmt::Display for ConfigurationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConfigurationKind::H1 => "H1",
            ConfigurationKind::H2 => "H2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LabeledWitness {
    pub kind: ConfigurationKind,
    /// `k1 < k2 < k3 < k4`.
    pub labels: [Vertex; 4],
}

impl LabeledWitness {
    fn from_pair(a: Vertex, x: Vertex, c: Vertex, y: Vertex) -> Self {
        debug_assert!(a < c && c < x && c < y && x != y);
        if x < y {
            LabeledWitness {
                kind: ConfigurationKind::H1,
                labels: [a, c, x, y],
            }
        } else {
            LabeledWitness {
                kind: ConfigurationKind::H2,
                labels: [a, c, y, x],
            }
        }
    }

    /// The two witnessing edges, the one through `k1` first.
    pub fn edges(&self) -> [Edge; 2] {
        let [k1, k2, k3, k4] = self.labels;
        match self.kind {
            ConfigurationKind::H1 => [Edge::new(k1, k3), Edge::new(k2, k4)],
            ConfigurationKind::H2 => [Edge::new(k1, k4), Edge::new(k2, k3)],
        }
    }

    fn key(&self) -> ([Vertex; 4], ConfigurationKind) {
        (self.labels, self.kind)
    }
}

impl fmt::Display for LabeledWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.labels;
        write!(f, "{} {a} {b} {c} {d}", self.kind)
    }
}

/// Checks every pair of vertex-disjoint edges. `O(m^2)`.
pub fn scan_forbidden_configuration(g: &LabeledGraph) -> Option<LabeledWitness> {
    let edges = g.edges();
    let mut best: Option<LabeledWitness> = None;
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if e.shares_vertex(f) {
                continue;
            }
            let (outer, inner) = if e.lo() < f.lo() { (e, f) } else { (f, e) };
            if inner.lo() < outer.hi() {
                let w = LabeledWitness::from_pair(outer.lo(), outer.hi(), inner.lo(), inner.hi());
                if best.is_none_or(|b| w.key() < b.key()) {
                    best = Some(w);
                }
            }
        }
    }
    best
}

/// Same result as [`scan_forbidden_configuration`], in `O(n + m log m)`.
///
/// For a fixed smallest label `a` with higher neighbors `X`, a label `c`
/// with `a < c < max X` completes a witness iff `c` has a higher neighbor `y`
/// and some `x ∈ X`, `x > c`, differs from `y`. Below the second largest
/// element of `X` that only needs `c` to have a higher neighbor at all; between
/// the two largest it fails exactly when `c`'s only higher neighbor is
/// `max X`. Both queries are answered by precomputed next-pointers.
pub fn find_forbidden_configuration(g: &LabeledGraph) -> Option<LabeledWitness> {
    let n = g.order();
    let hi = |v: Vertex| g.higher_neighbors(v);
    let single = |v: Vertex| match hi(v) {
        [only] => Some(*only),
        _ => None,
    };
    // next_hi[v]: smallest w >= v with a higher neighbor (n + 1 if none).
    let mut next_hi = vec![n + 1; n + 2];
    for v in (1..=n).rev() {
        next_hi[v] = if hi(v).is_empty() { next_hi[v + 1] } else { v };
    }
    // next_other[v], for v whose only higher neighbor is t: smallest w > v
    // with a higher neighbor and hi(w) != {t}.
    let mut next_other = vec![n + 1; n + 2];
    for v in (1..=n).rev() {
        let Some(t) = single(v) else { continue };
        let w = next_hi[v + 1];
        next_other[v] = if w <= n && single(w) == Some(t) {
            next_other[w]
        } else {
            w
        };
    }

    for a in 1..=n {
        let xs = hi(a);
        let Some(&top) = xs.last() else { continue };
        let second = xs.len().checked_sub(2).map(|i| xs[i]);

        let mut c = None;
        let first = next_hi[a + 1];
        if let Some(s) = second {
            if first < s {
                c = Some(first);
            }
        }
        if c.is_none() {
            let from = second.map_or(a + 1, |s| s.max(a + 1));
            let mut w = next_hi[from];
            if w < top && single(w) == Some(top) {
                w = next_other[w];
            }
            if w < top {
                c = Some(w);
            }
        }
        let Some(c) = c else { continue };

        let above = |list: &[Vertex]| -> Vec<Vertex> {
            list[list.partition_point(|&v| v <= c)..]
                .iter()
                .take(2)
                .copied()
                .collect()
        };
        let mut best: Option<LabeledWitness> = None;
        for x in above(xs) {
            for &y in hi(c).iter().take(2) {
                if x == y {
                    continue;
                }
                let w = LabeledWitness::from_pair(a, x, c, y);
                if best.is_none_or(|b| w.key() < b.key()) {
                    best = Some(w);
                }
            }
        }
        debug_assert!(best.is_some());
        return best;
    }
    None
}

pub fn is_degree_complete(g: &LabeledGraph) -> bool {
    find_forbidden_configuration(g).is_none()
}
