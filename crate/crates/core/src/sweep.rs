//! Exhaustive and seeded-random sweeps over many graphs.
//!
//! Reports are computed in parallel and returned in input order, so output
//! does not depend on the worker count.

use std::ops::RangeInclusive;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::clique::SolverLimits;
use crate::degree::ExactRatio;
use crate::delta::{phi_exact, phi_oracle_with_limit, DeltaError, ORACLE_MAX_N};
use crate::generate::{gnp_with, Probability};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::report::{analyze_with, AnalyzeConfig, AnalyzeError, BoundReport};

/// Largest n for which every labeled graph is enumerated.
pub const EXHAUSTIVE_MAX_N: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("invalid sweep: {0}")]
    Invalid(String),
    #[error("phi mismatch on {graph6}: greedy {greedy}, oracle {oracle}")]
    OracleMismatch {
        graph6: String,
        greedy: usize,
        oracle: usize,
    },
    #[error("{graph6}: {source}")]
    Analyze {
        graph6: String,
        #[source]
        source: AnalyzeError,
    },
    #[error(transparent)]
    Delta(#[from] DeltaError),
    #[error("thread pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SweepMode {
    /// Every labeled graph on each n.
    Exhaustive,
    /// `count` samples of G(n, p) per n, all drawn from one stream seeded
    /// with `seed`.
    Random {
        count: usize,
        p: Probability,
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    pub mode: SweepMode,
    pub n: RangeInclusive<usize>,
    pub oracle_max_n: usize,
    pub limits: SolverLimits,
    /// Worker count; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl SweepSpec {
    pub fn exhaustive(n: RangeInclusive<usize>) -> Self {
        SweepSpec {
            mode: SweepMode::Exhaustive,
            n,
            oracle_max_n: AnalyzeConfig::default().oracle_max_n,
            limits: SolverLimits::default(),
            threads: None,
        }
    }

    pub fn random(n: RangeInclusive<usize>, count: usize, p: Probability, seed: u64) -> Self {
        SweepSpec {
            mode: SweepMode::Random { count, p, seed },
            ..Self::exhaustive(n)
        }
    }

    pub fn validate(&self) -> Result<(), SweepError> {
        let (lo, hi) = (*self.n.start(), *self.n.end());
        if lo == 0 || lo > hi {
            return Err(SweepError::Invalid(format!(
                "vertex range {lo}..={hi} must be non-empty and start at 1 or more"
            )));
        }
        if self.oracle_max_n > ORACLE_MAX_N {
            return Err(SweepError::Invalid(format!(
                "oracle limit {} exceeds {ORACLE_MAX_N}",
                self.oracle_max_n
            )));
        }
        match self.mode {
            SweepMode::Exhaustive if hi > EXHAUSTIVE_MAX_N => Err(SweepError::Invalid(format!(
                "exhaustive mode supports n <= {EXHAUSTIVE_MAX_N}"
            ))),
            SweepMode::Random { count: 0, .. } => {
                Err(SweepError::Invalid("random mode needs count >= 1".into()))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSummary {
    pub reports: usize,
    pub anomalies: usize,
    /// graph6 ids of reports with anomalies.
    pub anomalous: Vec<String>,
    /// Graphs meeting the quadratic-mean bound on φ with equality.
    pub equality_hits: usize,
    pub min_gap: Option<usize>,
    /// Mean of φ − lb_ceil_16.
    pub mean_gap: Option<ExactRatio>,
    /// Reports with at least one skipped exact solver.
    pub skipped: usize,
}

impl SweepSummary {
    pub fn from_reports(reports: &[BoundReport]) -> Self {
        let gaps: Vec<usize> = reports.iter().map(|r| r.phi - r.lb_ceil_16).collect();
        let anomalous: Vec<String> = reports
            .iter()
            .filter(|r| !r.is_clean())
            .map(|r| r.graph_id.clone())
            .collect();
        SweepSummary {
            reports: reports.len(),
            anomalies: reports.iter().map(|r| r.anomalies.len()).sum(),
            anomalous,
            equality_hits: reports.iter().filter(|r| r.eq16_equality).count(),
            min_gap: gaps.iter().copied().min(),
            mean_gap: (!gaps.is_empty()).then(|| {
                ExactRatio::new(gaps.iter().sum::<usize>(), gaps.len()).expect("non-zero count")
            }),
            skipped: reports.iter().filter(|r| !r.skipped.is_empty()).count(),
        }
    }
}

/// Every labeled graph on `n` vertices: bit `k` of the mask selects the
/// `k`-th vertex pair in graph6 order.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("pairs are valid")
    })
}

/// `count` G(n, p) samples for each n in `ns`, from one seeded stream.
pub fn random_graphs(
    ns: RangeInclusive<usize>,
    count: usize,
    p: Probability,
    seed: u64,
) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graphs = Vec::new();
    for n in ns {
        for _ in 0..count {
            graphs.push(gnp_with(n, p, &mut rng));
        }
    }
    graphs
}

pub fn sweep_graphs(spec: &SweepSpec) -> Vec<Graph> {
    match spec.mode {
        SweepMode::Exhaustive => spec.n.clone().flat_map(all_labeled_graphs).collect(),
        SweepMode::Random { count, p, seed } => random_graphs(spec.n.clone(), count, p, seed),
    }
}

fn in_pool<T: Send>(
    threads: Option<usize>,
    job: impl FnOnce() -> T + Send,
) -> Result<T, SweepError> {
    match threads {
        None => Ok(job()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| SweepError::Pool(e.to_string()))?;
            Ok(pool.install(job))
        }
    }
}

/// Analyzes `graphs` in parallel, preserving order.
pub fn analyze_all(
    graphs: &[Graph],
    cfg: &AnalyzeConfig,
    threads: Option<usize>,
) -> Result<Vec<BoundReport>, SweepError> {
    in_pool(threads, || {
        graphs
            .par_iter()
            .map(|g| {
                analyze_with(g, cfg).map_err(|source| SweepError::Analyze {
                    graph6: encode_graph6(g).unwrap_or_default(),
                    source,
                })
            })
            .collect()
    })?
}

/// Runs a sweep. An oracle disagreement aborts with the offending graph;
/// other anomalies are counted in the summary and left in the reports.
pub fn run_sweep(spec: &SweepSpec) -> Result<(Vec<BoundReport>, SweepSummary), SweepError> {
    spec.validate()?;
    let graphs = sweep_graphs(spec);
    let cfg = AnalyzeConfig {
        limits: spec.limits,
        oracle_max_n: spec.oracle_max_n,
    };
    let reports = analyze_all(&graphs, &cfg, spec.threads)?;
    if let Some(r) = reports.iter().find(|r| !r.oracle_agrees()) {
        return Err(SweepError::OracleMismatch {
            graph6: r.graph_id.clone(),
            greedy: r.phi,
            oracle: r.phi_oracle.unwrap_or_default(),
        });
    }
    let summary = SweepSummary::from_reports(&reports);
    Ok((reports, summary))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCheckSummary {
    pub checked: usize,
    pub mismatches: Vec<SweepError>,
}

/// Greedy φ against the exhaustive oracle: every labeled graph for
/// n ≤ min(5, max_n), then `count` seeded G(n, 1/2) samples for each
/// n in 6..=max_n.
pub fn oracle_check(
    max_n: usize,
    count: usize,
    seed: u64,
    threads: Option<usize>,
) -> Result<OracleCheckSummary, SweepError> {
    if max_n == 0 || max_n > ORACLE_MAX_N {
        return Err(SweepError::Invalid(format!(
            "oracle check needs 1 <= max-n <= {ORACLE_MAX_N}"
        )));
    }
    let mut graphs: Vec<Graph> = (1..=max_n.min(EXHAUSTIVE_MAX_N))
        .flat_map(all_labeled_graphs)
        .collect();
    if max_n > EXHAUSTIVE_MAX_N {
        graphs.extend(random_graphs(
            EXHAUSTIVE_MAX_N + 1..=max_n,
            count,
            Probability::half(),
            seed,
        ));
    }
    let outcomes: Vec<Result<(), SweepError>> = in_pool(threads, || {
        graphs
            .par_iter()
            .map(|g| {
                let greedy = phi_exact(g)?.phi;
                let oracle = phi_oracle_with_limit(g, max_n)?.phi;
                if greedy == oracle {
                    Ok(())
                } else {
                    Err(SweepError::OracleMismatch {
                        graph6: encode_graph6(g).unwrap_or_default(),
                        greedy,
                        oracle,
                    })
                }
            })
            .collect()
    })?;
    let mut mismatches = Vec::new();
    for outcome in outcomes {
        match outcome {
            Ok(()) => {}
            Err(e @ SweepError::OracleMismatch { .. }) => mismatches.push(e),
            Err(e) => return Err(e),
        }
    }
    Ok(OracleCheckSummary {
        checked: graphs.len(),
        mismatches,
    })
}
