//! δ-sets, the generalized chromatic number φ(G), and the degree bounds
//! that bracket it.
//!
//! A vertex set `V` of an `n`-vertex graph is a δ-set when every `v ∈ V`
//! has degree at most `n − |V|`. φ(G) is the least number of δ-sets that
//! partition the vertex set. Membership depends only on degrees and `|V|`,
//! never on adjacency inside `V`.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use thiserror::Error;

use crate::degree::{symmetric_or_zero, DegreeError, DegreeStats};
use crate::graph::{Graph, GraphError};

/// Largest graph the exhaustive φ oracle accepts by default.
pub const ORACLE_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeltaError {
    #[error("operation undefined on the graph with no vertices")]
    EmptyGraph,
    #[error("δ-set test needs a non-empty vertex set")]
    EmptySet,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Degree(#[from] DegreeError),
    #[error("vertex {0} appears in more than one part")]
    Overlap(usize),
    #[error("vertex {0} is not covered by any part")]
    Uncovered(usize),
    #[error("partition contains an empty part")]
    EmptyPart,
    #[error("part {0} is not a δ-set")]
    NotDeltaSet(usize),
    #[error("oracle limited to n <= {limit}, got n = {n}")]
    OracleLimit { n: usize, limit: usize },
    #[error("claimed value {claimed} is inconsistent with the graph: {detail}")]
    Inconsistent { claimed: usize, detail: String },
    #[error("theorem falsified: {0}")]
    TheoremFalsified(String),
}

pub fn is_delta_set(g: &Graph, vs: &[usize]) -> Result<bool, DeltaError> {
    if vs.is_empty() {
        return Err(DeltaError::EmptySet);
    }
    g.check_vertices(vs)?;
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let room = g.n() - sorted.len();
    Ok(sorted.iter().all(|&v| g.degree(v) <= room))
}

/// Ordered partition of V(G) into non-empty δ-sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaPartition {
    parts: Vec<Vec<usize>>,
}

impl DeltaPartition {
    /// Validates `parts` against `g`. Each part is stored sorted.
    pub fn new(g: &Graph, parts: Vec<Vec<usize>>) -> Result<Self, DeltaError> {
        let mut parts = parts;
        for part in &mut parts {
            part.sort_unstable();
        }
        let p = DeltaPartition { parts };
        p.validate(g)?;
        Ok(p)
    }

    pub fn validate(&self, g: &Graph) -> Result<(), DeltaError> {
        let mut seen = vec![false; g.n()];
        for part in &self.parts {
            if part.is_empty() {
                return Err(DeltaError::EmptyPart);
            }
            g.check_vertices(part)?;
            for &v in part {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(DeltaError::Overlap(v));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(DeltaError::Uncovered(v));
        }
        for (i, part) in self.parts.iter().enumerate() {
            if !is_delta_set(g, part)? {
                return Err(DeltaError::NotDeltaSet(i));
            }
        }
        Ok(())
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiMethod {
    Greedy,
    BruteForce,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiResult {
    pub phi: usize,
    pub witness: DeltaPartition,
    pub method: PhiMethod,
}

/// φ(G) by the degree-greedy construction.
///
/// Vertices are taken by degree, highest first (ties by lower index). The
/// highest remaining degree `d` opens a part of capacity `n − d`, filled
/// with the next `n − d` vertices in that order.
pub fn phi_exact(g: &Graph) -> Result<PhiResult, DeltaError> {
    let n = g.n();
    if n == 0 {
        return Err(DeltaError::EmptyGraph);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut parts = Vec::new();
    let mut start = 0;
    while start < n {
        // degree ≤ n − 1, so capacity ≥ 1
        let capacity = n - g.degree(order[start]);
        let end = (start + capacity).min(n);
        parts.push(order[start..end].to_vec());
        start = end;
    }
    let witness = DeltaPartition::new(g, parts)?;
    Ok(PhiResult {
        phi: witness.len(),
        witness,
        method: PhiMethod::Greedy,
    })
}

pub fn phi_oracle(g: &Graph) -> Result<PhiResult, DeltaError> {
    phi_oracle_with_limit(g, ORACLE_MAX_N)
}

/// φ(G) by exhaustive search: set partitions are enumerated as restricted
/// growth strings, all partitions into `k` blocks before any into `k + 1`,
/// and the first one whose blocks all satisfy the δ-set condition wins.
pub fn phi_oracle_with_limit(g: &Graph, limit: usize) -> Result<PhiResult, DeltaError> {
    let n = g.n();
    if n == 0 {
        return Err(DeltaError::EmptyGraph);
    }
    if n > limit {
        return Err(DeltaError::OracleLimit { n, limit });
    }
    let degrees = g.degrees();
    let mut labels = vec![0usize; n];
    for blocks in 1..=n {
        if rgs_search(&degrees, &mut labels, 0, 0, blocks) {
            let mut parts = vec![Vec::new(); blocks];
            for (v, &b) in labels.iter().enumerate() {
                parts[b].push(v);
            }
            let witness = DeltaPartition::new(g, parts)?;
            return Ok(PhiResult {
                phi: blocks,
                witness,
                method: PhiMethod::BruteForce,
            });
        }
    }
    unreachable!("the partition into singletons is always valid")
}

/// Fills `labels[v..]` with every restricted-growth continuation that uses
/// exactly `blocks` labels, stopping at the first partition that passes.
fn rgs_search(
    degrees: &[usize],
    labels: &mut [usize],
    v: usize,
    used: usize,
    blocks: usize,
) -> bool {
    let n = degrees.len();
    if v == n {
        return used == blocks && all_blocks_delta(degrees, labels, blocks);
    }
    // every still-unopened block needs a vertex of its own
    if blocks - used > n - v {
        return false;
    }
    let top = if used < blocks { used + 1 } else { used };
    for label in 0..top {
        labels[v] = label;
        if rgs_search(degrees, labels, v + 1, used.max(label + 1), blocks) {
            return true;
        }
    }
    false
}

fn all_blocks_delta(degrees: &[usize], labels: &[usize], blocks: usize) -> bool {
    let n = degrees.len();
    let mut size = vec![0usize; blocks];
    let mut top = vec![0usize; blocks];
    for (&d, &b) in degrees.iter().zip(labels) {
        size[b] += 1;
        top[b] = top[b].max(d);
    }
    size.iter().zip(&top).all(|(&s, &d)| d <= n - s)
}

/// r ≥ n/(n − √(Σd²/n)), decided as r²·Σd² ≤ n³·(r − 1)².
pub fn quadratic_bound_holds(s: &DegreeStats, r: usize) -> bool {
    let (lhs, rhs) = quadratic_bound_sides(s, r);
    lhs <= rhs
}

/// Both sides `(r²·Σd², n³·(r − 1)²)` of the quadratic-mean bound test.
pub fn quadratic_bound_sides(s: &DegreeStats, r: usize) -> (BigUint, BigUint) {
    let n = BigUint::from(s.n());
    let r_big = BigUint::from(r);
    let r1 = BigUint::from(r.saturating_sub(1));
    (&r_big * &r_big * s.sum_d2(), &n * &n * &n * &r1 * &r1)
}

/// r ≥ n/(n − Σd/n), decided as r·Σd ≤ n²·(r − 1).
pub fn arithmetic_bound_holds(s: &DegreeStats, r: usize) -> bool {
    let n = BigUint::from(s.n());
    BigUint::from(r) * s.sum_d() <= &n * &n * BigUint::from(r.saturating_sub(1))
}

/// Least integers satisfying the arithmetic-mean and quadratic-mean lower
/// bounds on φ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LowerBounds {
    /// From n/(n − d̄).
    pub arithmetic: usize,
    /// From n/(n − d̄̄); never below `arithmetic`.
    pub quadratic: usize,
}

pub fn phi_lower_bound_ceil(s: &DegreeStats) -> Result<LowerBounds, DeltaError> {
    if s.n() == 0 {
        return Err(DeltaError::EmptyGraph);
    }
    s.check_simple()?;
    // r = n always satisfies both tests when every degree is below n
    let first =
        |test: fn(&DegreeStats, usize) -> bool| (1..=s.n()).find(|&r| test(s, r)).unwrap_or(s.n());
    Ok(LowerBounds {
        arithmetic: first(arithmetic_bound_holds),
        quadratic: first(quadratic_bound_holds),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EqualityVerdict {
    /// φ²·Σd² = n³·(φ − 1)².
    pub equality_holds: bool,
    /// φ divides n.
    pub divisibility_ok: bool,
    /// Every vertex has degree n(φ − 1)/φ.
    pub regular_ok: bool,
}

/// Decides equality in the quadratic-mean bound for `phi = φ(g)` and checks
/// it against the structural characterization (φ | n and G regular of
/// degree n(φ − 1)/φ). A disagreement is returned as
/// [`DeltaError::TheoremFalsified`].
pub fn equality_classifier(g: &Graph, phi: usize) -> Result<EqualityVerdict, DeltaError> {
    let n = g.n();
    if n == 0 {
        return Err(DeltaError::EmptyGraph);
    }
    let actual = phi_exact(g)?.phi;
    if phi != actual {
        return Err(DeltaError::Inconsistent {
            claimed: phi,
            detail: format!("phi is {actual}"),
        });
    }
    let stats = DegreeStats::from_graph(g);
    let (lhs, rhs) = quadratic_bound_sides(&stats, phi);
    let divisibility_ok = n.is_multiple_of(phi);
    let target = n / phi * (phi - 1);
    let regular_ok = divisibility_ok && g.degrees().iter().all(|&d| d == target);
    let verdict = EqualityVerdict {
        equality_holds: lhs == rhs,
        divisibility_ok,
        regular_ok,
    };
    if verdict.equality_holds != (divisibility_ok && regular_ok) {
        return Err(DeltaError::TheoremFalsified(format!(
            "equality case mismatch (phi={phi}, {verdict:?})"
        )));
    }
    Ok(verdict)
}

/// The degree-square bound over one δ-partition and the symmetric-function
/// bounds on its part sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionInequalities {
    pub sum_d2: BigUint,
    /// n·σ2 + 3·σ3 over the part sizes, which equals Σ nᵢ(n − nᵢ)².
    pub rhs_2_12: BigUint,
    /// Σd² ≤ n·σ2 + 3·σ3.
    pub bound_ok: bool,
    /// 2r·σ2 ≤ n²(r − 1).
    pub sigma2_ok: bool,
    /// 6r²·σ3 ≤ n³(r − 1)(r − 2).
    pub sigma3_ok: bool,
}

impl PartitionInequalities {
    pub fn all_ok(&self) -> bool {
        self.bound_ok && self.sigma2_ok && self.sigma3_ok
    }

    /// Σ nᵢ(n − nᵢ)² computed directly from the sizes, for cross-checking
    /// `rhs_2_12`.
    pub fn direct_rhs(n: usize, sizes: &[usize]) -> BigUint {
        sizes
            .iter()
            .map(|&s| BigUint::from(s) * BigUint::from(n - s) * BigUint::from(n - s))
            .fold(BigUint::zero(), |acc, x| acc + x)
    }
}

pub fn partition_inequality_check(
    g: &Graph,
    p: &DeltaPartition,
) -> Result<PartitionInequalities, DeltaError> {
    p.validate(g)?;
    let n = g.n() as u64;
    let r = p.len() as u64;
    let sizes: Vec<u64> = p.sizes().into_iter().map(|s| s as u64).collect();
    let sigma2 = symmetric_or_zero(&sizes, 2);
    let sigma3 = symmetric_or_zero(&sizes, 3);

    let stats = DegreeStats::from_graph(g);
    let sum_d2 = stats.sum_d2().clone();
    let rhs_2_12 = BigUint::from(n) * &sigma2 + BigUint::from(3u32) * &sigma3;

    let nb = BigInt::from(n);
    let rb = BigInt::from(r);
    let sigma2_ok = BigInt::from(2u32) * &rb * BigInt::from(sigma2) <= &nb * &nb * (&rb - 1u32);
    let sigma3_ok = BigInt::from(6u32) * &rb * &rb * BigInt::from(sigma3)
        <= &nb * &nb * &nb * (&rb - 1u32) * (&rb - 2u32);

    Ok(PartitionInequalities {
        bound_ok: sum_d2 <= rhs_2_12,
        sum_d2,
        rhs_2_12,
        sigma2_ok,
        sigma3_ok,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeBounds {
    /// 2ω·e ≤ n²(ω − 1).
    pub turan_ok: bool,
    pub turan_equality: bool,
    /// 2φ·e ≤ n²(φ − 1).
    pub phi_bound_ok: bool,
    pub phi_bound_equality: bool,
}

pub fn edge_bound_check(g: &Graph, phi: usize, omega: usize) -> Result<EdgeBounds, DeltaError> {
    let n = g.n();
    if n == 0 {
        return Err(DeltaError::EmptyGraph);
    }
    if phi == 0 || phi > n {
        return Err(DeltaError::Inconsistent {
            claimed: phi,
            detail: format!("phi must lie in 1..={n}"),
        });
    }
    if omega < phi || omega > n {
        return Err(DeltaError::Inconsistent {
            claimed: omega,
            detail: format!("omega must lie in {phi}..={n}"),
        });
    }
    let (turan_ok, turan_equality) = edge_bound_holds(g, omega);
    let (phi_bound_ok, phi_bound_equality) = edge_bound_holds(g, phi);
    Ok(EdgeBounds {
        turan_ok,
        turan_equality,
        phi_bound_ok,
        phi_bound_equality,
    })
}

/// `(2r·e ≤ n²(r − 1), 2r·e = n²(r − 1))` for `r ≥ 1`.
pub fn edge_bound_holds(g: &Graph, r: usize) -> (bool, bool) {
    let n = g.n();
    let lhs = BigUint::from(2 * r) * BigUint::from(g.edge_count());
    let rhs = BigUint::from(n * n) * BigUint::from(r.saturating_sub(1));
    (lhs <= rhs, lhs == rhs)
}
