//! Exact clique number and chromatic number for small graphs, plus the
//! clique-number form of the quadratic-mean degree bound.

use num_bigint::BigUint;
use thiserror::Error;

use crate::degree::DegreeStats;
use crate::delta::quadratic_bound_sides;
use crate::graph::Graph;

pub const DEFAULT_CLIQUE_MAX_N: usize = 64;
pub const DEFAULT_CHROMATIC_MAX_N: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliqueError {
    #[error("operation undefined on the graph with no vertices")]
    EmptyGraph,
    #[error("{solver} solver limited to n <= {limit}, got n = {n}")]
    SolverLimit {
        solver: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("claimed value {claimed} is inconsistent with the graph: {detail}")]
    Inconsistent { claimed: usize, detail: String },
    #[error("theorem falsified: {0}")]
    TheoremFalsified(String),
}

/// Size limits for the exact solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverLimits {
    pub clique_max_n: usize,
    pub chromatic_max_n: usize,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits {
            clique_max_n: DEFAULT_CLIQUE_MAX_N,
            chromatic_max_n: DEFAULT_CHROMATIC_MAX_N,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    pub omega: usize,
    /// Lexicographically smallest maximum clique, ascending.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringResult {
    pub chi: usize,
    /// Color of each vertex, in `0..chi`.
    pub coloring: Vec<usize>,
}

fn masks_within(g: &Graph, solver: &'static str, limit: usize) -> Result<Vec<u64>, CliqueError> {
    let n = g.n();
    if n == 0 {
        return Err(CliqueError::EmptyGraph);
    }
    let limit = limit.min(64);
    if n > limit {
        return Err(CliqueError::SolverLimit { solver, n, limit });
    }
    Ok(g.masks().expect("n <= 64"))
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Greedy sequential coloring of `cand`. Returns vertices in color order
/// with the color number (1-based) of each; the color of a vertex bounds
/// the clique size reachable through it and the vertices before it.
fn color_sort(adj: &[u64], cand: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut colors = Vec::with_capacity(order.capacity());
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !bit(v) & !adj[v];
            uncolored &= !bit(v);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

fn expand(adj: &[u64], mut cand: u64, size: usize, best: &mut usize) {
    let (order, colors) = color_sort(adj, cand);
    for i in (0..order.len()).rev() {
        if size + colors[i] <= *best {
            return;
        }
        let v = order[i];
        let next = cand & adj[v];
        if next == 0 {
            *best = (*best).max(size + 1);
        } else {
            expand(adj, next, size + 1, best);
        }
        cand &= !bit(v);
    }
}

/// Depth-first over candidates in ascending order, so the first clique of
/// `target` vertices reached is the lexicographically smallest one.
fn first_clique(adj: &[u64], cand: u64, target: usize, current: &mut Vec<usize>) -> bool {
    if current.len() == target {
        return true;
    }
    let mut rest = cand;
    while rest != 0 {
        if current.len() + color_sort(adj, rest).1.last().copied().unwrap_or(0) < target {
            return false;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= !bit(v);
        current.push(v);
        if first_clique(adj, rest & adj[v], target, current) {
            return true;
        }
        current.pop();
    }
    false
}

pub fn clique_number(g: &Graph) -> Result<CliqueResult, CliqueError> {
    clique_number_with_limit(g, DEFAULT_CLIQUE_MAX_N)
}

/// Maximum clique by branch and bound with greedy-coloring bounds.
pub fn clique_number_with_limit(g: &Graph, limit: usize) -> Result<CliqueResult, CliqueError> {
    let adj = masks_within(g, "clique", limit)?;
    let all = if g.n() == 64 {
        u64::MAX
    } else {
        bit(g.n()) - 1
    };
    let mut omega = 0;
    expand(&adj, all, 0, &mut omega);
    let mut witness = Vec::with_capacity(omega);
    let found = first_clique(&adj, all, omega, &mut witness);
    debug_assert!(found);
    Ok(CliqueResult { omega, witness })
}

pub fn chromatic_number(g: &Graph) -> Result<ColoringResult, CliqueError> {
    chromatic_number_with_limit(g, DEFAULT_CHROMATIC_MAX_N)
}

/// Exact chromatic number: raises the color budget from the clique number
/// until a backtracking search finds a proper coloring. A DSATUR coloring
/// caps the search from above.
pub fn chromatic_number_with_limit(g: &Graph, limit: usize) -> Result<ColoringResult, CliqueError> {
    let adj = masks_within(g, "chromatic", limit)?;
    let lower = clique_number_with_limit(g, 64)?.omega;
    let upper = dsatur(&adj);
    let upper_chi = upper.iter().max().map_or(0, |&c| c + 1);
    for k in lower..upper_chi {
        let mut colors = vec![usize::MAX; adj.len()];
        if color_with(&adj, k, &mut colors, 0) {
            return Ok(ColoringResult {
                chi: k,
                coloring: colors,
            });
        }
    }
    Ok(ColoringResult {
        chi: upper_chi,
        coloring: upper,
    })
}

/// Picks the uncolored vertex with the most distinct neighbor colors, then
/// the most uncolored neighbors, then the lowest index.
fn pick_vertex(adj: &[u64], colors: &[usize]) -> Option<usize> {
    let uncolored: u64 = colors
        .iter()
        .enumerate()
        .filter(|(_, &c)| c == usize::MAX)
        .fold(0, |m, (v, _)| m | bit(v));
    bits(uncolored).max_by_key(|&v| {
        let seen = bits(adj[v])
            .filter(|&w| colors[w] != usize::MAX)
            .fold(0u64, |m, w| m | bit(colors[w]));
        (
            seen.count_ones(),
            (adj[v] & uncolored).count_ones(),
            std::cmp::Reverse(v),
        )
    })
}

fn dsatur(adj: &[u64]) -> Vec<usize> {
    let mut colors = vec![usize::MAX; adj.len()];
    while let Some(v) = pick_vertex(adj, &colors) {
        let used = bits(adj[v])
            .filter(|&w| colors[w] != usize::MAX)
            .fold(0u64, |m, w| m | bit(colors[w]));
        colors[v] = (!used).trailing_zeros() as usize;
    }
    colors
}

/// Backtracking `k`-coloring. `used` counts colors opened so far; a vertex
/// may only open the next fresh color, which removes color permutations.
fn color_with(adj: &[u64], k: usize, colors: &mut [usize], used: usize) -> bool {
    let Some(v) = pick_vertex(adj, colors) else {
        return true;
    };
    let taken = bits(adj[v])
        .filter(|&w| colors[w] != usize::MAX)
        .fold(0u64, |m, w| m | bit(colors[w]));
    for c in 0..k.min(used + 1) {
        if taken & bit(c) != 0 {
            continue;
        }
        colors[v] = c;
        if color_with(adj, k, colors, used.max(c + 1)) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueBound {
    /// ω ≥ n/(n − d̄̄), decided as ω²·Σd² ≤ n³(ω − 1)².
    pub bound_ok: bool,
    pub equality: bool,
}

pub fn clique_bound_check(g: &Graph, omega: usize) -> Result<CliqueBound, CliqueError> {
    let n = g.n();
    if n == 0 {
        return Err(CliqueError::EmptyGraph);
    }
    if omega == 0 || omega > n {
        return Err(CliqueError::Inconsistent {
            claimed: omega,
            detail: format!("omega must lie in 1..={n}"),
        });
    }
    let (lhs, rhs) = quadratic_bound_sides(&DegreeStats::from_graph(g), omega);
    Ok(CliqueBound {
        bound_ok: lhs <= rhs,
        equality: lhs == rhs,
    })
}

/// Whether `g` is complete `parts`-partite with all parts the same size:
/// its complement must split into exactly `parts` cliques of equal order.
pub fn is_balanced_complete_multipartite(g: &Graph, parts: usize) -> bool {
    let comp = g.complement();
    let n = comp.n();
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut component = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < component.len() {
            for &w in comp.neighbors(component[i]) {
                if !std::mem::replace(&mut seen[w], true) {
                    component.push(w);
                }
            }
            i += 1;
        }
        let k = component.len();
        if component.iter().any(|&v| comp.degree(v) != k - 1) {
            return false;
        }
        sizes.push(k);
    }
    sizes.len() == parts && sizes.windows(2).all(|w| w[0] == w[1])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalVerdict {
    /// ω = n/(n − d̄̄).
    pub eq417: bool,
    pub regular: bool,
    /// Complete ω-partite with equal parts.
    pub complete_multipartite: bool,
}

/// Checks that equality ω = n/(n − d̄̄) forces a regular, balanced complete
/// ω-partite graph (and hence φ = ω = χ). A counterexample comes back as
/// [`CliqueError::TheoremFalsified`].
pub fn extremal_clique_classifier(
    g: &Graph,
    omega: usize,
    phi: usize,
    chi: Option<usize>,
) -> Result<ExtremalVerdict, CliqueError> {
    let bound = clique_bound_check(g, omega)?;
    if phi == 0 || phi > omega {
        return Err(CliqueError::Inconsistent {
            claimed: phi,
            detail: format!("phi must lie in 1..={omega}"),
        });
    }
    if chi.is_some_and(|c| c < omega) {
        return Err(CliqueError::Inconsistent {
            claimed: chi.unwrap_or(0),
            detail: format!("chi must be at least omega = {omega}"),
        });
    }
    let verdict = ExtremalVerdict {
        eq417: bound.equality,
        regular: g.is_regular(),
        complete_multipartite: is_balanced_complete_multipartite(g, omega),
    };
    if verdict.eq417 {
        let chain_tight = phi == omega && chi.is_none_or(|c| c == omega);
        if !(verdict.regular && verdict.complete_multipartite && chain_tight) {
            return Err(CliqueError::TheoremFalsified(format!(
                "clique equality without balanced complete multipartite structure \
                 (omega={omega}, phi={phi}, chi={chi:?}, {verdict:?})"
            )));
        }
    }
    Ok(verdict)
}

/// ω²·Σd² and n³(ω − 1)², exposed for reports.
pub fn clique_bound_sides(g: &Graph, omega: usize) -> (BigUint, BigUint) {
    quadratic_bound_sides(&DegreeStats::from_graph(g), omega)
}
