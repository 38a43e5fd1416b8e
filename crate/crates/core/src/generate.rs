//! Named graph families used as test instances.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("turan graph needs 1 <= r <= n, got n={n}, r={r}")]
    TuranParts { n: usize, r: usize },
    #[error("cycle needs at least 3 vertices, got {0}")]
    ShortCycle(usize),
    #[error("invalid probability: {0}")]
    Probability(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

/// An edge probability `num/den` in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Probability {
    num: u64,
    den: u64,
}

impl Probability {
    pub fn new(num: u64, den: u64) -> Result<Self, FamilyError> {
        if den == 0 || num > den {
            return Err(FamilyError::Probability(format!("{num}/{den}")));
        }
        Ok(Probability { num, den })
    }

    pub fn half() -> Self {
        Probability { num: 1, den: 2 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Probability {
    type Err = FamilyError;

    /// Accepts `num/den` or a bare `0` / `1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::Probability(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s.trim(), "1"),
        };
        let num = num.parse().map_err(|_| bad())?;
        let den = den.parse().map_err(|_| bad())?;
        Probability::new(num, den).map_err(|_| bad())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete {
        n: usize,
    },
    Empty {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    /// Center 0 joined to leaves `1..n`.
    Star {
        n: usize,
    },
    /// Complete `r`-partite graph with parts as equal as possible.
    Turan {
        n: usize,
        r: usize,
    },
    /// Erdős–Rényi G(n, p), reproducible from `seed`.
    Gnp {
        n: usize,
        p: Probability,
        seed: u64,
    },
}

impl Family {
    pub fn n(&self) -> usize {
        match *self {
            Family::Complete { n }
            | Family::Empty { n }
            | Family::Cycle { n }
            | Family::Path { n }
            | Family::Star { n }
            | Family::Turan { n, .. }
            | Family::Gnp { n, .. } => n,
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        match *self {
            Family::Turan { n, r } if r == 0 || r > n => Err(FamilyError::TuranParts { n, r }),
            Family::Cycle { n } if n < 3 => Err(FamilyError::ShortCycle(n)),
            _ => Ok(()),
        }
    }
}

pub fn generate(spec: &Family) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let g = match *spec {
        Family::Complete { n } => complete(n),
        Family::Empty { n } => Graph::empty(n),
        Family::Cycle { n } => build(n, (0..n).map(|i| (i, (i + 1) % n))),
        Family::Path { n } => build(n, (1..n).map(|i| (i - 1, i))),
        Family::Star { n } => build(n, (1..n).map(|i| (0, i))),
        Family::Turan { n, r } => turan(n, r),
        Family::Gnp { n, p, seed } => gnp(n, p, seed),
    };
    Ok(g)
}

fn build(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("generator edges are valid")
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j))))
}

/// Part index of each vertex in the balanced `r`-partition of `0..n` into
/// contiguous blocks; the first `n mod r` blocks get the extra vertex.
pub fn turan_parts(n: usize, r: usize) -> Vec<usize> {
    let (base, extra) = (n / r, n % r);
    let mut part = Vec::with_capacity(n);
    for p in 0..r {
        let size = base + usize::from(p < extra);
        part.extend(std::iter::repeat_n(p, size));
    }
    part
}

fn turan(n: usize, r: usize) -> Graph {
    let part = turan_parts(n, r);
    build(
        n,
        (0..n).flat_map(|j| {
            let part = &part;
            (0..j)
                .filter(move |&i| part[i] != part[j])
                .map(move |i| (i, j))
        }),
    )
}

/// Each pair `(i, j)`, visited in graph6 order, becomes an edge when a
/// uniform draw from `0..den` falls below `num`.
fn gnp(n: usize, p: Probability, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gnp_with(n, p, &mut rng)
}

/// G(n, p) drawing from a caller-owned generator, so that a sequence of
/// samples can share one seeded stream.
pub fn gnp_with<R: Rng>(n: usize, p: Probability, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_range(0..p.den) < p.num {
                edges.push((i, j));
            }
        }
    }
    build(n, edges.into_iter())
}

pub fn parse_family(
    name: &str,
    n: usize,
    r: Option<usize>,
    p: Option<Probability>,
    seed: Option<u64>,
) -> Result<Family, FamilyError> {
    Ok(match name {
        "complete" => Family::Complete { n },
        "empty" => Family::Empty { n },
        "cycle" => Family::Cycle { n },
        "path" => Family::Path { n },
        "star" => Family::Star { n },
        "turan" => Family::Turan {
            n,
            r: r.ok_or(FamilyError::TuranParts { n, r: 0 })?,
        },
        "gnp" => Family::Gnp {
            n,
            p: p.unwrap_or_else(Probability::half),
            seed: seed.unwrap_or(0),
        },
        other => return Err(FamilyError::UnknownFamily(other.to_string())),
    })
}
