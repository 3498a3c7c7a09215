//! Text formats: edge lists, labeling files, degree vectors, orientations and
//! Graphviz DOT.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` (1-based). Blank
//! lines and lines starting with `#` are ignored. Labeling file: one line
//! `vertex label` per vertex.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Labeling, Vertex};
use crate::realization::{DegreeVector, Orientation};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = fields
            .next()
            .ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| Error::parse(line, format!("invalid {what} `{tok}`")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(Error::parse(line, format!("unexpected field `{extra}`")));
    }
    Ok((a, b))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header `n m`"))?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut edges: Vec<(Edge, usize)> = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, body) in lines {
        last_line = line;
        if edges.len() == m {
            return Err(Error::parse(line, format!("more than {m} edge lines")));
        }
        let (u, v) = parse_pair(line, body)?;
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(Error::parse(
                    line,
                    format!("vertex {w} out of range 1..={n}"),
                ));
            }
        }
        if u == v {
            return Err(Error::parse(line, format!("loop at vertex {u}")));
        }
        edges.push((Edge::new(u, v), line));
    }
    if edges.len() != m {
        return Err(Error::parse(
            last_line,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    edges.sort_unstable();
    if let Some(w) = edges.windows(2).find(|w| w[0].0 == w[1].0) {
        let line = w[0].1.max(w[1].1);
        return Err(Error::parse(line, format!("duplicate edge {}", w[0].0)));
    }
    Graph::from_edges(n, edges.into_iter().map(|(e, _)| (e.lo(), e.hi())))
}

/// Canonical edge list: edges in lexicographic order, `lo hi` per line.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.lo(), e.hi());
    }
    out
}

/// Parses `n` lines `vertex label`. The vertex count is taken from the file.
pub fn parse_labeling(text: &str) -> Result<Labeling> {
    let mut pairs = Vec::new();
    for (line, body) in content_lines(text) {
        pairs.push((parse_pair(line, body)?, line));
    }
    let n = pairs.len();
    let mut labels = vec![0; n];
    for ((v, l), line) in pairs {
        if v == 0 || v > n {
            return Err(Error::parse(
                line,
                format!("vertex {v} out of range 1..={n}"),
            ));
        }
        if labels[v - 1] != 0 {
            return Err(Error::parse(line, format!("vertex {v} labeled twice")));
        }
        labels[v - 1] = l;
    }
    Labeling::from_labels(labels)
}

pub fn serialize_labeling(f: &Labeling) -> String {
    let mut out = String::new();
    for (i, l) in f.labels().iter().enumerate() {
        let _ = writeln!(out, "{} {}", i + 1, l);
    }
    out
}

/// Comma-separated nonnegative integers, e.g. `0,2,1,0`.
pub fn parse_vector(text: &str) -> Result<DegreeVector> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(DegreeVector::new(Vec::new()));
    }
    text.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<usize>()
                .map_err(|_| Error::parse(1, format!("invalid vector entry `{t}`")))
        })
        .collect::<Result<Vec<_>>>()
        .map(DegreeVector::new)
}

/// One `tail head` line per arc.
pub fn serialize_orientation(d: &Orientation) -> String {
    let mut out = String::new();
    for &(tail, head) in d.arcs() {
        let _ = writeln!(out, "{tail} {head}");
    }
    out
}

/// Graphviz DOT. With a labeling, vertices are emitted in label order on one
/// rank, chained by invisible edges so the renderer keeps them on a line and
/// draws the real edges as arcs above it.
pub fn export_dot(g: &Graph, labeling: Option<&Labeling>) -> String {
    let mut out = String::from("graph G {\n");
    match labeling {
        None => {
            out.push_str("  node [shape=circle];\n");
            for v in g.vertices() {
                let _ = writeln!(out, "  {v};");
            }
        }
        Some(f) => {
            out.push_str("  rankdir=LR;\n  node [shape=circle];\n");
            let order: Vec<Vertex> = f.order();
            for &v in &order {
                let _ = writeln!(out, "  {v} [label=\"{}\", xlabel=\"v{v}\"];", f.label(v));
            }
            out.push_str("  { rank=same;");
            for &v in &order {
                let _ = write!(out, " {v};");
            }
            out.push_str(" }\n");
            for w in order.windows(2) {
                let _ = writeln!(out, "  {} -- {} [style=invis, weight=100];", w[0], w[1]);
            }
        }
    }
    for e in g.edges() {
        let _ = writeln!(out, "  {} -- {};", e.lo(), e.hi());
    }
    out.push_str("}\n");
    out
}
