//! Independent oracles shared by the integration tests. Nothing here calls
//! the recognition or labeling code under test.

#![allow(dead_code)]

use dcl_core::{Graph, Labeling, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).unwrap()
}

pub fn pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect()
}

/// Every graph on vertex set `1..=n`, indexed by edge subsets of `pairs(n)`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let ps = pairs(n);
    (0u64..1 << ps.len()).map(move |mask| {
        let es = ps
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        Graph::from_edges(n, es).unwrap()
    })
}

/// `G(n, p)` with a seeded generator.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let es: Vec<_> = pairs(n)
        .into_iter()
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::from_edges(n, es).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Two vertex-disjoint edges `ab`, `cd` with `f(a) < f(b)`, `f(c) < f(d)`
/// and `f(a) < f(c) < f(b)`: the crossing and the nested configuration.
pub fn has_forbidden_pair(g: &Graph, f: &Labeling) -> bool {
    let spans: Vec<(usize, usize, Vertex, Vertex)> = g
        .edges()
        .iter()
        .map(|e| {
            let (x, y) = (f.label(e.lo()), f.label(e.hi()));
            (x.min(y), x.max(y), e.lo(), e.hi())
        })
        .collect();
    spans.iter().any(|&(a, b, u, v)| {
        spans
            .iter()
            .any(|&(c, _, x, y)| a < c && c < b && u != x && u != y && v != x && v != y)
    })
}

/// Exhaustive search over all `n!` labelings.
pub fn has_dcl_exhaustive(g: &Graph) -> bool {
    let n = g.order();
    let mut perm: Vec<usize> = (1..=n).collect();
    loop {
        let f = Labeling::from_labels(perm.clone()).unwrap();
        if !has_forbidden_pair(g, &f) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Exact search for a labeling without a forbidden pair.
///
/// Vertices are placed in label order. A configuration appears exactly when
/// a vertex `c` is placed while it still has an unplaced neighbor `d` and
/// some edge `ab` disjoint from `cd` has `a` placed and `b` unplaced, so
/// such branches are cut. Components are searched separately, since a
/// labeling restricted to a subgraph keeps its relative order and blocks of
/// consecutive labels never interact.
pub fn has_dcl_pruned(g: &Graph) -> bool {
    components(g).iter().all(|c| component_has_dcl(g, c))
}

fn components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.order() + 1];
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &w in g.neighbors(comp[i]) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        out.push(comp);
    }
    out
}

fn component_has_dcl(g: &Graph, comp: &[Vertex]) -> bool {
    let mut placed = vec![false; g.order() + 1];
    search(g, comp, &mut placed, 0)
}

fn search(g: &Graph, comp: &[Vertex], placed: &mut [bool], count: usize) -> bool {
    if count == comp.len() {
        return true;
    }
    let open: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .filter(|e| placed[e.lo()] != placed[e.hi()])
        .map(|e| {
            if placed[e.lo()] {
                (e.lo(), e.hi())
            } else {
                (e.hi(), e.lo())
            }
        })
        .collect();
    for &c in comp {
        if placed[c] {
            continue;
        }
        let dead = g
            .neighbors(c)
            .iter()
            .any(|&d| !placed[d] && open.iter().any(|&(a, b)| b != c && b != d && a != d));
        if dead {
            continue;
        }
        placed[c] = true;
        let ok = search(g, comp, placed, count + 1);
        placed[c] = false;
        if ok {
            return true;
        }
    }
    false
}

/// Whether `pattern` (on `1..=k`) is a subgraph of `g`, not necessarily
/// induced.
pub fn contains_subgraph(g: &Graph, pattern: &Graph) -> bool {
    let k = pattern.order();
    if k > g.order() || pattern.size() > g.size() {
        return false;
    }
    let mut image = vec![0; k + 1];
    let mut used = vec![false; g.order() + 1];
    embed(g, pattern, 1, &mut image, &mut used)
}

fn embed(g: &Graph, p: &Graph, i: usize, image: &mut [usize], used: &mut [bool]) -> bool {
    if i > p.order() {
        return true;
    }
    for v in g.vertices() {
        if used[v] || g.neighbors(v).len() < p.neighbors(i).len() {
            continue;
        }
        let fits = p
            .neighbors(i)
            .iter()
            .filter(|&&j| j < i)
            .all(|&j| g.has_edge(v, image[j]));
        if fits {
            used[v] = true;
            image[i] = v;
            if embed(g, p, i + 1, image, used) {
                return true;
            }
            used[v] = false;
        }
    }
    false
}

pub fn t1() -> Graph {
    graph(7, &[(1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (4, 7)])
}

pub fn t2() -> Graph {
    graph(6, &[(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)])
}

pub fn cycle(k: usize) -> Graph {
    let mut es: Vec<_> = (1..k).map(|v| (v, v + 1)).collect();
    es.push((1, k));
    graph(k, &es)
}

/// Contains `T1`, `T2` or a cycle of length at least four.
pub fn contains_obstruction(g: &Graph) -> bool {
    contains_subgraph(g, &t1())
        || contains_subgraph(g, &t2())
        || (4..=g.order()).any(|k| contains_subgraph(g, &cycle(k)))
}
