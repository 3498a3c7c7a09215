//! Simple undirected graphs on the dense vertex set `1..=n`.
//!
//! Edges are stored canonically as `(lo, hi)` with `lo < hi` and kept in
//! lexicographic order. Adjacency lists are sorted ascending. Every value is
//! immutable once built; removal operations return new graphs.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{Deref, RangeInclusive};

use crate::error::{Error, Result};

/// Vertex id, 1-based.
pub type Vertex = usize;

/// An undirected edge in canonical form (`lo < hi`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    /// Canonical edge between two distinct vertices.
    ///
    /// Panics if `u == v`; use [`Graph::from_edges`] for validated input.
    pub fn new(u: Vertex, v: Vertex) -> Self {
        assert_ne!(u, v, "loops are not edges of a simple graph");
        Edge {
            lo: u.min(v),
            hi: u.max(v),
        }
    }

    pub fn lo(self) -> Vertex {
        self.lo
    }

    pub fn hi(self) -> Vertex {
        self.hi
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint that is not `v`.
    pub fn other(self, v: Vertex) -> Vertex {
        if v == self.lo {
            self.hi
        } else {
            debug_assert_eq!(v, self.hi);
            self.lo
        }
    }

    pub fn shares_vertex(self, other: Edge) -> bool {
        self.contains(other.lo) || self.contains(other.hi)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((u, v): (Vertex, Vertex)) -> Self {
        Edge::new(u, v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
}

/// Maps the ids of a graph produced by [`Graph::remove_vertices`] back to the
/// ids of the graph it was taken from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    to_original: Vec<Vertex>,
    from_original: Vec<Option<Vertex>>,
}

impl VertexMap {
    /// Original id of vertex `v` of the reduced graph.
    pub fn original(&self, v: Vertex) -> Vertex {
        self.to_original[v - 1]
    }

    /// Id in the reduced graph of original vertex `v`, if it survived.
    pub fn reduced(&self, v: Vertex) -> Option<Vertex> {
        self.from_original.get(v.wrapping_sub(1)).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.to_original.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_original.is_empty()
    }
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Graph {
            order,
            edges: Vec::new(),
            adj: vec![Vec::new(); order],
        }
    }

    /// Builds a graph, rejecting loops, duplicate edges and out-of-range ids.
    pub fn from_edges<I, E>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<(Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for e in edges {
            let (u, v) = e.into();
            for w in [u, v] {
                if w == 0 || w > order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::Loop { vertex: u });
            }
            list.push(Edge::new(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge {
                u: w[0].lo,
                v: w[0].hi,
            });
        }
        Ok(Self::from_sorted_unique(order, list))
    }

    fn from_sorted_unique(order: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); order];
        for e in &edges {
            adj[e.lo - 1].push(e.hi);
            adj[e.hi - 1].push(e.lo);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { order, edges, adj }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> RangeInclusive<Vertex> {
        1..=self.order
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v - 1]
    }

    /// Neighbors of `v` with a larger id.
    pub fn higher_neighbors(&self, v: Vertex) -> &[Vertex] {
        let adj = self.neighbors(v);
        &adj[adj.partition_point(|&w| w < v)..]
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v - 1].len())
    }

    pub(crate) fn deg(&self, v: Vertex) -> usize {
        self.adj[v - 1].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v
            && (1..=self.order).contains(&u)
            && (1..=self.order).contains(&v)
            && self.adj[u - 1].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v == 0 || v > self.order {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    /// Common neighbors of `u` and `w`, stopping after `limit` of them.
    pub(crate) fn common_neighbors(&self, u: Vertex, w: Vertex, limit: usize) -> Vec<Vertex> {
        let (small, large) = if self.deg(u) <= self.deg(w) {
            (self.neighbors(u), self.neighbors(w))
        } else {
            (self.neighbors(w), self.neighbors(u))
        };
        let mut out = Vec::new();
        for &x in small {
            if large.binary_search(&x).is_ok() {
                out.push(x);
                if out.len() >= limit {
                    break;
                }
            }
        }
        out
    }

    /// The induced subgraph on `V \ removed`. Surviving vertices are renumbered
    /// densely in ascending order; the returned map recovers original ids.
    pub fn remove_vertices(&self, removed: &[Vertex]) -> Result<(Graph, VertexMap)> {
        let mut gone = vec![false; self.order];
        for &v in removed {
            self.check_vertex(v)?;
            gone[v - 1] = true;
        }
        let mut to_original = Vec::new();
        let mut from_original = vec![None; self.order];
        for v in self.vertices() {
            if !gone[v - 1] {
                to_original.push(v);
                from_original[v - 1] = Some(to_original.len());
            }
        }
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter_map(
                |e| match (from_original[e.lo - 1], from_original[e.hi - 1]) {
                    (Some(a), Some(b)) => Some(Edge::new(a, b)),
                    _ => None,
                },
            )
            .collect();
        // Renumbering is monotone, so the filtered list stays sorted.
        let g = Graph::from_sorted_unique(to_original.len(), edges);
        Ok((
            g,
            VertexMap {
                to_original,
                from_original,
            },
        ))
    }

    /// Same vertex set, edge set `E \ removed`.
    pub fn remove_edges(&self, removed: &[Edge]) -> Result<Graph> {
        let mut drop = removed.to_vec();
        drop.sort_unstable();
        drop.dedup();
        for e in &drop {
            if self.edges.binary_search(e).is_err() {
                return Err(Error::MissingEdge { u: e.lo, v: e.hi });
            }
        }
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| drop.binary_search(e).is_err())
            .collect();
        Ok(Graph::from_sorted_unique(self.order, edges))
    }

    /// Connected components, each sorted ascending, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in self.vertices() {
            if seen[start - 1] {
                continue;
            }
            seen[start - 1] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in self.neighbors(v) {
                    if !seen[w - 1] {
                        seen[w - 1] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// If the graph is a disjoint union of paths, returns one vertex sequence
    /// per component (in component order). Each sequence starts at the
    /// lowest-id vertex of degree at most one. Isolated vertices are paths of
    /// length zero.
    pub fn disjoint_paths(&self) -> Option<Vec<Vec<Vertex>>> {
        if self.adj.iter().any(|a| a.len() > 2) {
            return None;
        }
        let mut seen = vec![false; self.order];
        let mut paths = Vec::new();
        let mut covered = 0;
        for start in self.vertices() {
            if seen[start - 1] || self.deg(start) > 1 {
                continue;
            }
            let mut path = vec![start];
            seen[start - 1] = true;
            let mut prev = 0;
            let mut cur = start;
            while let Some(&next) = self.neighbors(cur).iter().find(|&&w| w != prev) {
                seen[next - 1] = true;
                path.push(next);
                prev = cur;
                cur = next;
            }
            covered += path.len();
            paths.push(path);
        }
        // Any vertex not reached lies on a cycle.
        if covered != self.order {
            return None;
        }
        paths.sort_by_key(|p| *p.iter().min().expect("paths are non-empty"));
        Some(paths)
    }

    pub fn is_disjoint_union_of_paths(&self) -> bool {
        self.disjoint_paths().is_some()
    }

    /// The labeled graph `G_f`: vertex `v` becomes vertex `f(v)`.
    pub fn apply_labeling(&self, labeling: &Labeling) -> Result<LabeledGraph> {
        if labeling.len() != self.order {
            return Err(Error::LengthMismatch {
                expected: self.order,
                found: labeling.len(),
            });
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge::new(labeling.label(e.lo), labeling.label(e.hi)))
            .collect();
        edges.sort_unstable();
        Ok(LabeledGraph(Graph::from_sorted_unique(self.order, edges)))
    }
}

/// A bijection from vertices `1..=n` onto labels `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    labels: Vec<usize>,
}

impl Labeling {
    pub fn identity(n: usize) -> Self {
        Labeling {
            labels: (1..=n).collect(),
        }
    }

    /// `labels[v - 1]` is the label of vertex `v`.
    pub fn from_labels(labels: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        let mut used = vec![false; n];
        for (i, &l) in labels.iter().enumerate() {
            if l == 0 || l > n {
                return Err(Error::InvalidLabeling(format!(
                    "vertex {} has label {l} outside 1..={n}",
                    i + 1
                )));
            }
            if std::mem::replace(&mut used[l - 1], true) {
                return Err(Error::InvalidLabeling(format!("label {l} used twice")));
            }
        }
        Ok(Labeling { labels })
    }

    /// The labeling that lists `order[i]` at label `i + 1`.
    pub fn from_order(order: &[Vertex]) -> Result<Self> {
        let n = order.len();
        let mut labels = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            if labels[v - 1] != 0 {
                return Err(Error::InvalidLabeling(format!("vertex {v} listed twice")));
            }
            labels[v - 1] = i + 1;
        }
        Ok(Labeling { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: Vertex) -> usize {
        self.labels[v - 1]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Vertices sorted by label.
    pub fn order(&self) -> Vec<Vertex> {
        let mut order = vec![0; self.labels.len()];
        for (i, &l) in self.labels.iter().enumerate() {
            order[l - 1] = i + 1;
        }
        order
    }
}

/// A graph whose vertex ids are read as labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph(Graph);

impl LabeledGraph {
    pub fn new(graph: Graph) -> Self {
        LabeledGraph(graph)
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }
}

impl From<Graph> for LabeledGraph {
    fn from(g: Graph) -> Self {
        LabeledGraph(g)
    }
}

impl Deref for LabeledGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.0
    }
}
