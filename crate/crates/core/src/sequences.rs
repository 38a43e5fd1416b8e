//! Greedy α- and β-sequences and the bounds they certify.
//!
//! Both sequences start at a vertex of maximum degree and keep choosing the
//! next vertex from the common neighborhood of everything chosen so far.
//! A β-sequence ranks candidates by their degree in G; an α-sequence by
//! their degree inside the subgraph induced by the current common
//! neighborhood.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::degree::DegreeStats;
use crate::delta::{is_delta_set, quadratic_bound_holds};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("sequences are undefined on the graph with no vertices")]
    EmptyGraph,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("trace does not match graph: {0}")]
    Mismatch(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    Alpha,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    LowestIndex,
    /// Uniform among tied candidates, from a seeded stream.
    Random(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SequenceOptions {
    pub max_len: Option<usize>,
    pub tie_break: TieBreak,
}

/// Common-neighborhood hypothesis for prefix length `r`: the set
/// N(v1, …, v_{r−1}) is non-empty and a δ-set, in which case the parts
/// V∖N(v1), N(v1)∖N(v1,v2), …, N(v1,…,v_{r−1}) are r δ-sets and
/// r ≥ n/(n − d̄̄) must hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommonNbhdCheck {
    pub r: usize,
    pub delta_set_ok: bool,
    /// `None` when the hypothesis fails.
    pub bound_ok: Option<bool>,
}

/// Degree-sum hypothesis for prefix length `r` of a β-sequence:
/// Δ(v1) + … + Δ(v_r) ≤ (r − 1)n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeSumCheck {
    pub r: usize,
    pub eq415_ok: bool,
    pub bound_ok: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTrace {
    pub kind: SequenceKind,
    pub vertices: Vec<usize>,
    /// Entry `i` is N(v1, …, v_{i+1}).
    pub common_nbhd_per_prefix: Vec<Vec<usize>>,
    pub max_len: Option<usize>,
    pub cor41: Vec<CommonNbhdCheck>,
    /// Only filled for β-sequences.
    pub cor42: Vec<DegreeSumCheck>,
}

impl SequenceTrace {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// No prefix whose hypothesis holds violates its bound.
    pub fn all_ok(&self) -> bool {
        self.cor41.iter().all(|c| c.bound_ok != Some(false))
            && self.cor42.iter().all(|c| c.bound_ok != Some(false))
    }
}

/// N(v1, …, vk), sorted.
pub fn common_neighborhood(g: &Graph, vs: &[usize]) -> Result<Vec<usize>, SequenceError> {
    let (first, rest) = vs
        .split_first()
        .ok_or_else(|| SequenceError::Mismatch("empty vertex list".into()))?;
    g.check_vertices(vs)?;
    let mut common = g.neighbors(*first).to_vec();
    for &v in rest {
        common.retain(|&w| g.has_edge(v, w));
    }
    Ok(common)
}

/// Rank of candidate `u` drawn from the current common neighborhood.
fn score(g: &Graph, kind: SequenceKind, u: usize, pool: &[usize]) -> usize {
    match kind {
        SequenceKind::Beta => g.degree(u),
        SequenceKind::Alpha => pool.iter().filter(|&&w| g.has_edge(u, w)).count(),
    }
}

fn best_candidates(g: &Graph, kind: SequenceKind, pool: &[usize]) -> Vec<usize> {
    let scores: Vec<usize> = pool.iter().map(|&u| score(g, kind, u, pool)).collect();
    let top = scores.iter().copied().max().unwrap_or(0);
    pool.iter()
        .zip(&scores)
        .filter(|(_, &s)| s == top)
        .map(|(&u, _)| u)
        .collect()
}

pub fn build_sequence(g: &Graph, kind: SequenceKind) -> Result<SequenceTrace, SequenceError> {
    build_sequence_with(g, kind, SequenceOptions::default())
}

/// Grows the sequence while the common neighborhood is non-empty (or until
/// `max_len`), then evaluates the prefix bound checks.
pub fn build_sequence_with(
    g: &Graph,
    kind: SequenceKind,
    opts: SequenceOptions,
) -> Result<SequenceTrace, SequenceError> {
    if g.n() == 0 {
        return Err(SequenceError::EmptyGraph);
    }
    let mut rng = match opts.tie_break {
        TieBreak::LowestIndex => None,
        TieBreak::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let cap = opts.max_len.unwrap_or(usize::MAX);

    let mut vertices = Vec::new();
    let mut prefixes: Vec<Vec<usize>> = Vec::new();
    // v1 maximizes degree in G for both kinds
    let mut pool: Vec<usize> = (0..g.n()).collect();
    let mut first = true;
    while !pool.is_empty() && vertices.len() < cap {
        let tied = if first {
            best_candidates(g, SequenceKind::Beta, &pool)
        } else {
            best_candidates(g, kind, &pool)
        };
        first = false;
        let v = match rng.as_mut() {
            None => tied[0],
            Some(rng) => *tied.choose(rng).expect("pool is non-empty"),
        };
        vertices.push(v);
        pool = match prefixes.last() {
            None => g.neighbors(v).to_vec(),
            Some(prev) => prev.iter().copied().filter(|&w| g.has_edge(v, w)).collect(),
        };
        prefixes.push(pool.clone());
    }

    let trace = SequenceTrace {
        kind,
        vertices,
        common_nbhd_per_prefix: prefixes,
        max_len: opts.max_len,
        cor41: Vec::new(),
        cor42: Vec::new(),
    };
    corollary_checks(g, trace)
}

/// Re-derives the defining conditions of `t` from scratch. Returns a
/// description of the first violated one.
pub fn validate_trace(g: &Graph, t: &SequenceTrace) -> Result<(), String> {
    let n = g.n();
    if t.vertices.is_empty() {
        return Err("sequence is empty".into());
    }
    if let Some(&v) = t.vertices.iter().find(|&&v| v >= n) {
        return Err(format!("vertex {v} out of range"));
    }
    if t.common_nbhd_per_prefix.len() != t.vertices.len() {
        return Err("one common neighborhood per prefix expected".into());
    }
    let max_deg = g.max_degree().unwrap_or(0);
    if g.degree(t.vertices[0]) != max_deg {
        return Err(format!(
            "v1 = {} does not have maximum degree",
            t.vertices[0]
        ));
    }
    for i in 0..t.vertices.len() {
        let expected = common_neighborhood(g, &t.vertices[..=i]).map_err(|e| e.to_string())?;
        if t.common_nbhd_per_prefix[i] != expected {
            return Err(format!("common neighborhood of prefix {} is wrong", i + 1));
        }
        if i == 0 {
            continue;
        }
        let pool = &t.common_nbhd_per_prefix[i - 1];
        let v = t.vertices[i];
        if !pool.contains(&v) {
            return Err(format!(
                "v{} = {v} is outside the previous common neighborhood",
                i + 1
            ));
        }
        let best = pool
            .iter()
            .map(|&u| score(g, t.kind, u, pool))
            .max()
            .unwrap_or(0);
        if score(g, t.kind, v, pool) != best {
            return Err(format!("v{} = {v} does not maximize degree", i + 1));
        }
    }
    let capped = t.max_len.is_some_and(|m| t.vertices.len() >= m);
    let exhausted = t.common_nbhd_per_prefix.last().is_some_and(Vec::is_empty);
    if !capped && !exhausted {
        return Err("sequence stopped while the common neighborhood is non-empty".into());
    }
    Ok(())
}

/// Fills the per-prefix bound checks (prefix lengths r ≥ 2).
pub fn corollary_checks(g: &Graph, mut t: SequenceTrace) -> Result<SequenceTrace, SequenceError> {
    validate_trace(g, &t).map_err(SequenceError::Mismatch)?;
    let n = g.n();
    let stats = DegreeStats::from_graph(g);

    t.cor41.clear();
    t.cor42.clear();
    let mut degree_sum = g.degree(t.vertices[0]);
    for r in 2..=t.vertices.len() {
        let hypothesis_set = &t.common_nbhd_per_prefix[r - 2];
        let delta_set_ok =
            !hypothesis_set.is_empty() && is_delta_set(g, hypothesis_set).unwrap_or(false);
        let bound = quadratic_bound_holds(&stats, r);
        t.cor41.push(CommonNbhdCheck {
            r,
            delta_set_ok,
            bound_ok: delta_set_ok.then_some(bound),
        });

        degree_sum += g.degree(t.vertices[r - 1]);
        if t.kind == SequenceKind::Beta {
            let eq415_ok = degree_sum <= (r - 1) * n;
            t.cor42.push(DegreeSumCheck {
                r,
                eq415_ok,
                bound_ok: eq415_ok.then_some(bound),
            });
        }
    }
    Ok(t)
}
