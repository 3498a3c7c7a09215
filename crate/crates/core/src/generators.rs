//! Seeded graph generators.

use std::fmt;
use std::str::FromStr;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Caterpillar,
    T1,
    T2,
    TriangleChain,
    RandomGnm,
    RandomDcl,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Caterpillar,
        Family::T1,
        Family::T2,
        Family::TriangleChain,
        Family::RandomGnm,
        Family::RandomDcl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Caterpillar => "caterpillar",
            Family::T1 => "t1",
            Family::T2 => "t2",
            Family::TriangleChain => "triangle_chain",
            Family::RandomGnm => "random_gnm",
            Family::RandomDcl => "random_dcl",
        }
    }

    /// Fixed order of the families that have one.
    fn fixed_order(self) -> Option<usize> {
        match self {
            Family::T1 => Some(7),
            Family::T2 => Some(6),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub family: Family,
    /// Number of vertices. Optional for `t1` and `t2`.
    pub n: Option<usize>,
    /// Number of edges, used by `random_gnm` only.
    pub m: Option<usize>,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(family: Family, n: usize) -> Self {
        GeneratorSpec {
            family,
            n: Some(n),
            m: None,
            seed: 0,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_edges(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    let family = spec.family;
    let n = match (family.fixed_order(), spec.n) {
        (Some(k), None) => k,
        (Some(k), Some(n)) if n == k => k,
        (Some(k), Some(n)) => return Err(invalid(format!("{family} has {k} vertices, not {n}"))),
        (None, Some(0)) => return Err(invalid("n must be positive")),
        (None, Some(n)) => n,
        (None, None) => return Err(invalid(format!("{family} needs --n"))),
    };
    if spec.m.is_some() && family != Family::RandomGnm {
        return Err(invalid(format!(
            "--m applies to random_gnm only, not {family}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let edges: Vec<(Vertex, Vertex)> = match family {
        Family::Path => (1..n).map(|v| (v, v + 1)).collect(),
        Family::Cycle => {
            if n < 3 {
                return Err(invalid("a cycle needs n >= 3"));
            }
            (1..n).map(|v| (v, v + 1)).chain([(1, n)]).collect()
        }
        Family::Star => (2..=n).map(|v| (1, v)).collect(),
        Family::T1 => vec![(1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (4, 7)],
        Family::T2 => vec![(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)],
        Family::TriangleChain => triangle_chain(n),
        Family::Caterpillar => {
            let spine = rng.random_range(1..=n);
            caterpillar(n, spine, 0, &mut rng)
        }
        Family::RandomDcl => {
            let spine = rng.random_range(1..=n);
            let apexes = rng.random_range(0..=(n - spine).min(spine - 1));
            let mut edges = caterpillar(n, spine, apexes, &mut rng);
            relabel(n, &mut edges, &mut rng);
            edges
        }
        Family::RandomGnm => {
            let m = spec.m.ok_or_else(|| invalid("random_gnm needs --m"))?;
            random_gnm(n, m, &mut rng)?
        }
    };
    Graph::from_edges(n, edges)
}

/// Spine `1..=k` with an apex on each of the first spine edges, and one
/// pendant on the last spine vertex when `n` is even.
fn triangle_chain(n: usize) -> Vec<(Vertex, Vertex)> {
    let k = n.div_ceil(2);
    let mut edges: Vec<(Vertex, Vertex)> = (1..k).map(|v| (v, v + 1)).collect();
    for (i, x) in (k + 1..=n).enumerate() {
        if i + 1 < k {
            edges.extend([(i + 1, x), (i + 2, x)]);
        } else {
            edges.push((k, x));
        }
    }
    edges
}

/// A random caterpillar with spine `1..=spine` in which `apexes` of the
/// remaining vertices become degree-2 apexes over distinct spine edges.
fn caterpillar(
    n: usize,
    spine: usize,
    apexes: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<(Vertex, Vertex)> {
    let mut edges: Vec<(Vertex, Vertex)> = (1..spine).map(|v| (v, v + 1)).collect();
    let bases = index::sample(rng, spine - 1, apexes).into_vec();
    let mut next = spine + 1;
    for b in bases {
        edges.extend([(b + 1, next), (b + 2, next)]);
        next += 1;
    }
    for x in next..=n {
        edges.push((rng.random_range(1..=spine), x));
    }
    edges
}

fn relabel(n: usize, edges: &mut [(Vertex, Vertex)], rng: &mut ChaCha8Rng) {
    let mut perm: Vec<Vertex> = (1..=n).collect();
    perm.shuffle(rng);
    for (u, v) in edges.iter_mut() {
        *u = perm[*u - 1];
        *v = perm[*v - 1];
    }
}

/// Uniform `m`-subset of the vertex pairs.
fn random_gnm(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Result<Vec<(Vertex, Vertex)>> {
    let pairs = n * (n - 1) / 2;
    if m > pairs {
        return Err(invalid(format!(
            "{n} vertices admit at most {pairs} edges, not {m}"
        )));
    }
    // Pairs with first vertex below u, for u in 1..=n.
    let before = |u: usize| (u - 1) * (2 * n - u) / 2;
    let mut edges: Vec<(Vertex, Vertex)> = index::sample(rng, pairs, m)
        .into_iter()
        .map(|k| {
            let (mut lo, mut hi) = (1, n - 1);
            while lo < hi {
                let mid = (lo + hi).div_ceil(2);
                if before(mid) <= k {
                    lo = mid;
                } else {
                    hi = mid - 1;
                }
            }
            (lo, lo + 1 + k - before(lo))
        })
        .collect();
    edges.sort_unstable();
    Ok(edges)
}
