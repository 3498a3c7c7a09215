//! Construction of degree complete labelings.
//!
//! Each component is labeled independently. Its residual path `v1 .. vp+1`
//! gets labels `1 .. p+1`. Every remaining vertex `x` is then inserted right
//! after an anchor `u`: labels above `f(u)` move up by one and `x` takes
//! `f(u) + 1`.
//!
//! * Triangle apexes (`X2`) go after the lower of their two path neighbors.
//!   The neighbors are consecutive on the path. Apexes are processed in
//!   ascending id.
//! * Degree-one vertices (`X1`) go after their neighbor `u`, or after the
//!   leaf of `u` inserted most recently, so that the leaves of `u` keep
//!   insertion order. Leaves are processed in ascending id.
//!
//! Component labelings are concatenated into consecutive blocks, ordered by
//! smallest vertex id. Blocks occupy disjoint label intervals, so no
//! forbidden configuration can span two components.

use crate::error::{Error, Result};
use crate::graph::{Graph, Labeling, Vertex};
use crate::recognition::{
    decompose_removing_f, decompose_removing_x2, find_unlabeled_obstruction, recognize,
    Decomposition, Recognition, Route, UnlabeledWitness,
};

/// A partial labeling held as a linked list in label order.
///
/// Insertion is `O(1)`; reading one label walks the list.
#[derive(Debug, Clone)]
pub struct InsertionState {
    next: Vec<Option<Vertex>>,
    labeled: Vec<bool>,
    head: Option<Vertex>,
    tail: Option<Vertex>,
    count: usize,
}

impl InsertionState {
    /// Labels `path[i]` with `i + 1`. `universe` bounds the vertex ids.
    pub fn from_path(universe: usize, path: &[Vertex]) -> Result<Self> {
        let mut state = InsertionState {
            next: vec![None; universe + 1],
            labeled: vec![false; universe + 1],
            head: None,
            tail: None,
            count: 0,
        };
        for &v in path {
            state.push_back(v)?;
        }
        Ok(state)
    }

    fn check_unlabeled(&self, x: Vertex) -> Result<()> {
        if x == 0 || x >= self.labeled.len() {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                order: self.labeled.len() - 1,
            });
        }
        if self.labeled[x] {
            return Err(Error::InconsistentDecomposition(format!(
                "vertex {x} is already labeled"
            )));
        }
        Ok(())
    }

    fn push_back(&mut self, x: Vertex) -> Result<()> {
        self.check_unlabeled(x)?;
        match self.tail {
            Some(t) => self.next[t] = Some(x),
            None => self.head = Some(x),
        }
        self.tail = Some(x);
        self.labeled[x] = true;
        self.count += 1;
        Ok(())
    }

    /// Gives `x` the label `f(u) + 1`, shifting every larger label up by one.
    pub fn insert_after(&mut self, x: Vertex, u: Vertex) -> Result<()> {
        self.check_unlabeled(x)?;
        if !self.is_labeled(u) {
            return Err(Error::InconsistentDecomposition(format!(
                "anchor {u} is not labeled"
            )));
        }
        self.next[x] = self.next[u];
        self.next[u] = Some(x);
        if self.tail == Some(u) {
            self.tail = Some(x);
        }
        self.labeled[x] = true;
        self.count += 1;
        Ok(())
    }

    pub fn is_labeled(&self, v: Vertex) -> bool {
        self.labeled.get(v).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// Labeled vertices in label order.
    pub fn order(&self) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.count);
        let mut cur = self.head;
        while let Some(v) = cur {
            out.push(v);
            cur = self.next[v];
        }
        out
    }

    pub fn label(&self, v: Vertex) -> Option<usize> {
        if !self.is_labeled(v) {
            return None;
        }
        self.order().iter().position(|&w| w == v).map(|i| i + 1)
    }
}

/// The component's residual path, or an error if it has none or several.
fn component_path<'d>(component: &[Vertex], d: &'d Decomposition) -> Result<&'d [Vertex]> {
    let mut found = d
        .paths
        .iter()
        .filter(|p| component.binary_search(&p[0]).is_ok());
    let path = found.next().ok_or_else(|| {
        Error::InconsistentDecomposition(format!(
            "component of vertex {} has no residual path",
            component[0]
        ))
    })?;
    if found.next().is_some() {
        return Err(Error::InconsistentDecomposition(format!(
            "component of vertex {} has several residual paths",
            component[0]
        )));
    }
    Ok(path)
}

fn insert_leaves(
    g: &Graph,
    component: &[Vertex],
    d: &Decomposition,
    state: &mut InsertionState,
) -> Result<()> {
    let mut last_leaf: Vec<Option<Vertex>> = vec![None; g.order() + 1];
    for &x in d.x1.iter().filter(|x| component.binary_search(x).is_ok()) {
        let u = g.neighbors(x)[0];
        if !state.is_labeled(u) {
            return Err(Error::InconsistentDecomposition(format!(
                "leaf {x} hangs off unlabeled vertex {u}"
            )));
        }
        state.insert_after(x, last_leaf[u].unwrap_or(u))?;
        last_leaf[u] = Some(x);
    }
    Ok(())
}

/// Vertex order (label `i + 1` at index `i`) for one component, built from a
/// decomposition that removed `X1` and `X2`.
pub fn label_component_via_x2(
    g: &Graph,
    component: &[Vertex],
    d: &Decomposition,
) -> Result<Vec<Vertex>> {
    if let Some(order) = trivial_component(g, component) {
        return Ok(order);
    }
    let path = component_path(component, d)?;
    let mut position = vec![usize::MAX; g.order() + 1];
    for (i, &v) in path.iter().enumerate() {
        position[v] = i;
    }
    let mut state = InsertionState::from_path(g.order(), path)?;
    for &x in d.x2.iter().filter(|x| component.binary_search(x).is_ok()) {
        let &[u, w] = g.neighbors(x) else {
            return Err(Error::InconsistentDecomposition(format!(
                "apex {x} does not have degree two"
            )));
        };
        let (pu, pw) = (position[u], position[w]);
        if pu == usize::MAX || pw == usize::MAX || pu.abs_diff(pw) != 1 {
            return Err(Error::InconsistentDecomposition(format!(
                "neighbors {u}, {w} of apex {x} are not consecutive on the path"
            )));
        }
        state.insert_after(x, if pu < pw { u } else { w })?;
    }
    insert_leaves(g, component, d, &mut state)?;
    finish(component, state)
}

/// Vertex order for one component, built from a decomposition that removed
/// `X1` and `F`.
pub fn label_component_via_f(
    g: &Graph,
    component: &[Vertex],
    d: &Decomposition,
) -> Result<Vec<Vertex>> {
    if let Some(order) = trivial_component(g, component) {
        return Ok(order);
    }
    let path = component_path(component, d)?;
    let mut state = InsertionState::from_path(g.order(), path)?;
    insert_leaves(g, component, d, &mut state)?;
    finish(component, state)
}

/// Isolated vertices and single edges are labeled directly.
fn trivial_component(g: &Graph, component: &[Vertex]) -> Option<Vec<Vertex>> {
    match component {
        [v] => Some(vec![*v]),
        [u, w] if g.has_edge(*u, *w) => Some(vec![*u, *w]),
        _ => None,
    }
}

fn finish(component: &[Vertex], state: InsertionState) -> Result<Vec<Vertex>> {
    if state.len() != component.len() {
        return Err(Error::InconsistentDecomposition(format!(
            "labeled {} of {} vertices in the component of vertex {}",
            state.len(),
            component.len(),
            component[0]
        )));
    }
    Ok(state.order())
}

/// Assembles the global labeling from a decomposition of `g`.
pub fn label_from_decomposition(g: &Graph, d: &Decomposition) -> Result<Labeling> {
    let mut order = Vec::with_capacity(g.order());
    for component in g.components() {
        let part = match d.route {
            Route::RemoveF => label_component_via_f(g, &component, d)?,
            _ => label_component_via_x2(g, &component, d)?,
        };
        order.extend(part);
    }
    Labeling::from_order(&order)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelOutcome {
    Labeled {
        labeling: Labeling,
        decomposition: Decomposition,
    },
    Obstructed(UnlabeledWitness),
}

/// Labels `g` through `route` ([`Route::RemoveX2`] or [`Route::RemoveF`];
/// [`Route::Obstructions`] builds through `X2`).
pub fn label_graph(g: &Graph, route: Route) -> Result<LabelOutcome> {
    match recognize(g, route)? {
        Recognition::Obstructed(w) => Ok(LabelOutcome::Obstructed(w)),
        Recognition::Labelable(d) => Ok(LabelOutcome::Labeled {
            labeling: label_from_decomposition(g, &d)?,
            decomposition: d,
        }),
    }
}

/// Labels a caterpillar: spine first, leaves after their spine vertex.
pub fn label_caterpillar(g: &Graph) -> Result<Labeling> {
    let not_caterpillar = |g: &Graph| Error::NotCaterpillar {
        witness: find_unlabeled_obstruction(g).map(Box::new),
    };
    let is_tree = g.order() > 0 && g.size() + 1 == g.order() && g.components().len() == 1;
    if !is_tree {
        return Err(not_caterpillar(g));
    }
    let d = decompose_removing_x2(g).ok_or_else(|| not_caterpillar(g))?;
    if d.paths.len() > 1 {
        return Err(not_caterpillar(g));
    }
    label_from_decomposition(g, &d)
}

/// Labels via the `F` route, used to compare with the `X2` route.
pub fn label_graph_via_f(g: &Graph) -> Result<Option<Labeling>> {
    decompose_removing_f(g)
        .map(|d| label_from_decomposition(g, &d))
        .transpose()
}
