//! Orientations, out-degree vectors and the dominance-style order on them.
//!
//! For a labeled graph `G` the all-leftward and all-rightward orientations
//! give the extremal vectors `s_left(G) ≼ s ≼ s_right(G)` that bound every
//! out-degree vector. [`is_degree_complete_oracle`] decides degree
//! completeness by brute force: it enumerates every orientation and every
//! vector inside the bounds. It is exponential and guarded by caps.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, Vertex};

/// Default cap on vectors produced by [`Condition1Vectors`].
pub const DEFAULT_MAX_VECTORS: u64 = 1_000_000;
/// Default cap on the number of orientations enumerated (`2^20`).
pub const DEFAULT_MAX_ORIENTATIONS: u64 = 1 << 20;

/// Per-vertex counts `s_1..s_n`, indexed by label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeVector(Vec<usize>);

impl DegreeVector {
    pub fn new(entries: Vec<usize>) -> Self {
        DegreeVector(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Entry for vertex `i` (1-based).
    pub fn get(&self, i: Vertex) -> usize {
        self.0[i - 1]
    }

    fn prefix_sums(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for DegreeVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::io::parse_vector(s)
    }
}

impl From<Vec<usize>> for DegreeVector {
    fn from(v: Vec<usize>) -> Self {
        DegreeVector(v)
    }
}

/// A direction for every edge. `arcs()[j]` orients `g.edges()[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    order: usize,
    arcs: Vec<(Vertex, Vertex)>,
}

impl Orientation {
    /// Validates that `arcs` orients each edge of `g`, in edge order.
    pub fn new(g: &LabeledGraph, arcs: Vec<(Vertex, Vertex)>) -> Result<Self> {
        if arcs.len() != g.size() {
            return Err(Error::LengthMismatch {
                expected: g.size(),
                found: arcs.len(),
            });
        }
        for (&(t, h), e) in arcs.iter().zip(g.edges()) {
            if t == h || !e.contains(t) || !e.contains(h) {
                return Err(Error::InvalidParameter(format!(
                    "arc ({t},{h}) does not orient edge {e}"
                )));
            }
        }
        Ok(Orientation {
            order: g.order(),
            arcs,
        })
    }

    fn from_tails(g: &LabeledGraph, tails: &[Vertex]) -> Self {
        let arcs = g
            .edges()
            .iter()
            .zip(tails)
            .map(|(e, &t)| (t, e.other(t)))
            .collect();
        Orientation {
            order: g.order(),
            arcs,
        }
    }

    /// `(tail, head)` pairs in edge order.
    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn out_degrees(&self) -> DegreeVector {
        let mut s = vec![0; self.order];
        for &(t, _) in &self.arcs {
            s[t - 1] += 1;
        }
        DegreeVector(s)
    }
}

/// Out-degrees of the orientation with every arc pointing to the smaller label.
pub fn s_left(g: &LabeledGraph) -> DegreeVector {
    let mut s = vec![0; g.order()];
    for e in g.edges() {
        s[e.hi() - 1] += 1;
    }
    DegreeVector(s)
}

/// Out-degrees of the orientation with every arc pointing to the larger label.
pub fn s_right(g: &LabeledGraph) -> DegreeVector {
    let mut s = vec![0; g.order()];
    for e in g.edges() {
        s[e.lo() - 1] += 1;
    }
    DegreeVector(s)
}

/// Edges with exactly one endpoint in `{1..k}`.
pub fn cut_count(g: &LabeledGraph, k: usize) -> Result<usize> {
    if k == 0 || k > g.order() {
        return Err(Error::InvalidParameter(format!(
            "cut position {k} outside 1..={}",
            g.order()
        )));
    }
    Ok(g.edges()
        .iter()
        .filter(|e| e.lo() <= k && e.hi() > k)
        .count())
}

/// `s ≼ t`: every prefix sum of `s` is at most that of `t`, with equal totals.
pub fn dominance_leq(s: &DegreeVector, t: &DegreeVector) -> Result<bool> {
    if s.len() != t.len() {
        return Err(Error::LengthMismatch {
            expected: s.len(),
            found: t.len(),
        });
    }
    let mut last = (0, 0);
    for (a, b) in s.prefix_sums().zip(t.prefix_sums()) {
        if a > b {
            return Ok(false);
        }
        last = (a, b);
    }
    Ok(last.0 == last.1)
}

/// `s_left(g) ≼ s ≼ s_right(g)` and `0 <= s_i <= d(i)` for every `i`.
pub fn satisfies_condition_1(g: &LabeledGraph, s: &DegreeVector) -> Result<bool> {
    if s.len() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            found: s.len(),
        });
    }
    if g.vertices().any(|v| s.get(v) > g.deg(v)) {
        return Ok(false);
    }
    Ok(dominance_leq(&s_left(g), s)? && dominance_leq(s, &s_right(g))?)
}

/// Lexicographic stream of all vectors satisfying [`satisfies_condition_1`].
///
/// Yields `Err(CapExceeded)` once in place of the `cap + 1`-th vector and then
/// stops.
pub struct Condition1Vectors {
    degree: Vec<usize>,
    // Prefix bounds: low[i], high[i] bound s_1 + .. + s_{i+1}.
    low: Vec<usize>,
    high: Vec<isize>,
    // need[i] = max over k > i of (low[k] - deg_prefix[k]); keeps the
    // remaining degrees able to reach every later lower bound.
    need: Vec<isize>,
    deg_prefix: Vec<isize>,
    cur: Vec<usize>,
    pre: Vec<usize>,
    cap: u64,
    emitted: u64,
    started: bool,
    done: bool,
}

impl Condition1Vectors {
    pub fn new(g: &LabeledGraph, cap: u64) -> Self {
        let n = g.order();
        let degree: Vec<usize> = g.vertices().map(|v| g.deg(v)).collect();
        let low: Vec<usize> = s_left(g).prefix_sums().collect();
        let high: Vec<isize> = s_right(g).prefix_sums().map(|x| x as isize).collect();
        let deg_prefix: Vec<isize> = degree
            .iter()
            .scan(0isize, |acc, &d| {
                *acc += d as isize;
                Some(*acc)
            })
            .collect();
        let mut need = vec![isize::MIN; n];
        let mut best = isize::MIN;
        for i in (0..n).rev() {
            need[i] = best;
            best = best.max(low[i] as isize - deg_prefix[i]);
        }
        Condition1Vectors {
            degree,
            low,
            high,
            need,
            deg_prefix,
            cur: vec![0; n],
            pre: vec![0; n + 1],
            cap,
            emitted: 0,
            started: false,
            done: false,
        }
    }

    /// Admissible range for position `i` given the current prefix.
    fn range(&self, i: usize) -> (isize, isize) {
        let p = self.pre[i] as isize;
        let lo = 0
            .max(self.low[i] as isize - p)
            .max(self.need[i].saturating_add(self.deg_prefix[i]) - p);
        let hi = (self.degree[i] as isize).min(self.high[i] - p);
        (lo, hi)
    }

    /// Sets positions `i..` to their smallest admissible values. On a dead end
    /// returns the failing position.
    fn fill(&mut self, from: usize) -> std::result::Result<(), usize> {
        for j in from..self.cur.len() {
            let (lo, hi) = self.range(j);
            if lo > hi {
                return Err(j);
            }
            self.cur[j] = lo as usize;
            self.pre[j + 1] = self.pre[j] + self.cur[j];
        }
        Ok(())
    }
}

impl Iterator for Condition1Vectors {
    type Item = Result<DegreeVector>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let mut res = if self.started {
            Err(self.cur.len())
        } else {
            self.started = true;
            self.fill(0)
        };
        loop {
            match res {
                Ok(()) => {
                    self.emitted += 1;
                    if self.emitted > self.cap {
                        self.done = true;
                        return Some(Err(Error::CapExceeded {
                            what: "degree vectors",
                            cap: self.cap,
                        }));
                    }
                    return Some(Ok(DegreeVector(self.cur.clone())));
                }
                Err(j) => {
                    let mut bumped = None;
                    for p in (0..j).rev() {
                        let (_, hi) = self.range(p);
                        if (self.cur[p] as isize) < hi {
                            self.cur[p] += 1;
                            self.pre[p + 1] = self.pre[p] + self.cur[p];
                            bumped = Some(p);
                            break;
                        }
                    }
                    match bumped {
                        Some(p) => res = self.fill(p + 1),
                        None => {
                            self.done = true;
                            return None;
                        }
                    }
                }
            }
        }
    }
}

pub fn enumerate_condition_1_vectors(g: &LabeledGraph, cap: u64) -> Condition1Vectors {
    Condition1Vectors::new(g, cap)
}

/// Finds an orientation whose out-degree vector is exactly `s`.
///
/// Each edge picks a tail among its endpoints, vertex `i` accepting at most
/// `s_i` edges. Edges are placed in canonical order, lower endpoint first;
/// a full endpoint is freed by reversing a path of arcs towards a vertex with
/// spare capacity. If an edge cannot be placed, the vertices reachable from
/// its endpoints span more edges than their total capacity, so `s` is not
/// realizable.
pub fn realize(g: &LabeledGraph, s: &DegreeVector) -> Result<Option<Orientation>> {
    let n = g.order();
    if s.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: s.len(),
        });
    }
    if s.sum() != g.size() || g.vertices().any(|v| s.get(v) > g.deg(v)) {
        return Ok(None);
    }
    let edges = g.edges();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (j, e) in edges.iter().enumerate() {
        incident[e.lo()].push(j);
        incident[e.hi()].push(j);
    }
    let cap = |v: Vertex| s.get(v);
    let mut tail = vec![0; edges.len()];
    let mut load = vec![0; n + 1];
    // Scratch for the augmenting search.
    let mut via: Vec<Option<usize>> = vec![None; n + 1];
    let mut stamp = vec![0usize; n + 1];
    let mut round = 0;

    for (j, e) in edges.iter().enumerate() {
        if load[e.lo()] < cap(e.lo()) {
            tail[j] = e.lo();
            load[e.lo()] += 1;
            continue;
        }
        if load[e.hi()] < cap(e.hi()) {
            tail[j] = e.hi();
            load[e.hi()] += 1;
            continue;
        }
        let mut placed = false;
        for start in [e.lo(), e.hi()] {
            if cap(start) == 0 {
                continue;
            }
            round += 1;
            stamp[start] = round;
            via[start] = None;
            let mut queue = VecDeque::from([start]);
            let mut end = None;
            'bfs: while let Some(x) = queue.pop_front() {
                for &k in &incident[x] {
                    if tail[k] != x {
                        continue;
                    }
                    let y = edges[k].other(x);
                    if stamp[y] == round {
                        continue;
                    }
                    stamp[y] = round;
                    via[y] = Some(k);
                    if load[y] < cap(y) {
                        end = Some(y);
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
            if let Some(mut y) = end {
                load[y] += 1;
                while let Some(k) = via[y] {
                    let x = edges[k].other(y);
                    tail[k] = y;
                    y = x;
                }
                debug_assert_eq!(y, start);
                tail[j] = start;
                placed = true;
                break;
            }
        }
        if !placed {
            return Ok(None);
        }
    }
    Ok(Some(Orientation::from_tails(g, &tail[..])))
}

/// All `2^m` orientations. Bit `j` of the counter reverses edge `j` so that
/// it points to the smaller label.
pub struct Orientations<'g> {
    graph: &'g LabeledGraph,
    next: u64,
    end: u64,
}

impl Iterator for Orientations<'_> {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let arcs = self
            .graph
            .edges()
            .iter()
            .enumerate()
            .map(|(j, e)| {
                if mask >> j & 1 == 1 {
                    (e.hi(), e.lo())
                } else {
                    (e.lo(), e.hi())
                }
            })
            .collect();
        Some(Orientation {
            order: self.graph.order(),
            arcs,
        })
    }
}

/// Fails if `2^m` exceeds `max_orientations`.
pub fn enumerate_orientations(g: &LabeledGraph, max_orientations: u64) -> Result<Orientations<'_>> {
    let m = g.size();
    let count = if m < 64 { 1u64 << m } else { u64::MAX };
    if m >= 64 || count > max_orientations {
        return Err(Error::CapExceeded {
            what: "orientations",
            cap: max_orientations,
        });
    }
    Ok(Orientations {
        graph: g,
        next: 0,
        end: count,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vectors: u64,
    pub max_orientations: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vectors: DEFAULT_MAX_VECTORS,
            max_orientations: DEFAULT_MAX_ORIENTATIONS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    Complete,
    /// The lexicographically first vector within the bounds that no
    /// orientation realizes.
    Incomplete(DegreeVector),
}

impl OracleVerdict {
    pub fn is_complete(&self) -> bool {
        matches!(self, OracleVerdict::Complete)
    }
}

/// Brute-force degree completeness: every vector within the bounds must be
/// the out-degree vector of one of the `2^m` orientations.
pub fn is_degree_complete_oracle(g: &LabeledGraph, limits: OracleLimits) -> Result<OracleVerdict> {
    let realized: HashSet<DegreeVector> = enumerate_orientations(g, limits.max_orientations)?
        .map(|d| d.out_degrees())
        .collect();
    for s in enumerate_condition_1_vectors(g, limits.max_vectors) {
        let s = s?;
        if !realized.contains(&s) {
            return Ok(OracleVerdict::Incomplete(s));
        }
    }
    Ok(OracleVerdict::Complete)
}
