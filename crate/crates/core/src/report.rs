//! Per-graph bound reports and their CSV form.

use std::fmt::{self, Write as _};

use num_bigint::BigUint;
use thiserror::Error;

use crate::clique::{
    chromatic_number_with_limit, clique_bound_check, clique_number_with_limit,
    extremal_clique_classifier, CliqueError, ExtremalVerdict, SolverLimits,
};
use crate::degree::DegreeStats;
use crate::delta::{
    edge_bound_holds, equality_classifier, partition_inequality_check, phi_exact,
    phi_lower_bound_ceil, phi_oracle_with_limit, quadratic_bound_sides, DeltaError,
    EqualityVerdict,
};
use crate::graph::Graph;
use crate::graph6::{encode_graph6, Graph6Error};
use crate::sequences::{build_sequence, SequenceKind};

/// Frozen CSV column order.
pub const CSV_COLUMNS: [&str; 20] = [
    "graph_id",
    "n",
    "e",
    "sum_d",
    "sum_d2",
    "phi",
    "omega",
    "chi",
    "lb_ceil_15",
    "lb_ceil_16",
    "eq16_equality",
    "eq14_ok",
    "eq13_ok",
    "eq212_ok",
    "eq213_ok",
    "eq416_ok",
    "eq416_equality",
    "cor41_all_ok",
    "cor42_all_ok",
    "witness_partition",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyzeError {
    #[error("cannot analyze the graph with no vertices")]
    EmptyGraph,
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Delta(#[from] DeltaError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeConfig {
    pub limits: SolverLimits,
    /// Cross-check φ against the exhaustive oracle up to this many vertices.
    pub oracle_max_n: usize,
}

impl Default for AnalyzeConfig {
    fn default() -> Self {
        AnalyzeConfig {
            limits: SolverLimits::default(),
            oracle_max_n: 10,
        }
    }
}

/// Every invariant and bound check for one graph.
///
/// `omega`, `chi` and the checks that need them are `None` when the graph
/// exceeds a solver limit; `skipped` says why.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub graph_id: String,
    pub n: usize,
    pub e: usize,
    pub sum_d: BigUint,
    pub sum_d2: BigUint,
    pub phi: usize,
    pub omega: Option<usize>,
    pub chi: Option<usize>,
    pub lb_ceil_15: usize,
    pub lb_ceil_16: usize,
    pub eq16_equality: bool,
    pub eq14_ok: bool,
    pub eq13_ok: Option<bool>,
    pub eq212_ok: bool,
    pub eq213_ok: bool,
    pub eq416_ok: Option<bool>,
    pub eq416_equality: Option<bool>,
    pub cor41_all_ok: bool,
    pub cor42_all_ok: bool,
    pub witness_partition: Vec<usize>,

    pub eq13_equality: Option<bool>,
    pub eq14_equality: bool,
    pub equality: Option<EqualityVerdict>,
    pub extremal: Option<ExtremalVerdict>,
    /// φ from the exhaustive oracle, when within `oracle_max_n`.
    pub phi_oracle: Option<usize>,
    /// Violated claims. Empty for every graph unless a theorem fails.
    pub anomalies: Vec<String>,
    pub skipped: Vec<String>,
}

impl BoundReport {
    pub fn is_clean(&self) -> bool {
        self.anomalies.is_empty()
    }

    pub fn oracle_agrees(&self) -> bool {
        self.phi_oracle.is_none_or(|p| p == self.phi)
    }
}

pub fn analyze(g: &Graph) -> Result<BoundReport, AnalyzeError> {
    analyze_with(g, &AnalyzeConfig::default())
}

pub fn analyze_with(g: &Graph, cfg: &AnalyzeConfig) -> Result<BoundReport, AnalyzeError> {
    let n = g.n();
    if n == 0 {
        return Err(AnalyzeError::EmptyGraph);
    }
    let graph_id = encode_graph6(g)?;
    let stats = DegreeStats::from_graph(g);
    let mut anomalies = Vec::new();
    let mut skipped = Vec::new();

    let phi_result = phi_exact(g)?;
    let phi = phi_result.phi;
    let bounds = phi_lower_bound_ceil(&stats)?;
    let (lhs16, rhs16) = quadratic_bound_sides(&stats, phi);

    let phi_oracle = if n <= cfg.oracle_max_n {
        let oracle = phi_oracle_with_limit(g, cfg.oracle_max_n)?.phi;
        if oracle != phi {
            anomalies.push(format!(
                "oracle disagreement: greedy phi={phi}, oracle phi={oracle}"
            ));
        }
        Some(oracle)
    } else {
        None
    };

    let equality = match equality_classifier(g, phi) {
        Ok(v) => Some(v),
        Err(DeltaError::TheoremFalsified(msg)) => {
            anomalies.push(msg);
            None
        }
        Err(e) => return Err(e.into()),
    };

    let partition = partition_inequality_check(g, &phi_result.witness)?;
    let (eq14_ok, eq14_equality) = edge_bound_holds(g, phi);

    let omega = match clique_number_with_limit(g, cfg.limits.clique_max_n) {
        Ok(r) => Some(r.omega),
        Err(e) => {
            skipped.push(format!("omega: {e}"));
            None
        }
    };
    let chi = match chromatic_number_with_limit(g, cfg.limits.chromatic_max_n) {
        Ok(r) => Some(r.chi),
        Err(e) => {
            skipped.push(format!("chi: {e}"));
            None
        }
    };

    let (mut eq13_ok, mut eq13_equality) = (None, None);
    let (mut eq416_ok, mut eq416_equality) = (None, None);
    let mut extremal = None;
    if let Some(omega) = omega {
        let (ok, eq) = edge_bound_holds(g, omega);
        eq13_ok = Some(ok);
        eq13_equality = Some(eq);
        let cb = clique_bound_check(g, omega).expect("omega comes from the solver");
        eq416_ok = Some(cb.bound_ok);
        eq416_equality = Some(cb.equality);
        if phi <= omega && chi.is_none_or(|c| omega <= c) {
            match extremal_clique_classifier(g, omega, phi, chi) {
                Ok(v) => extremal = Some(v),
                Err(CliqueError::TheoremFalsified(msg)) => anomalies.push(msg),
                Err(e) => anomalies.push(e.to_string()),
            }
        }
    }

    let alpha = build_sequence(g, SequenceKind::Alpha).expect("n >= 1");
    let beta = build_sequence(g, SequenceKind::Beta).expect("n >= 1");
    let cor41_all_ok = alpha
        .cor41
        .iter()
        .chain(&beta.cor41)
        .all(|c| c.bound_ok != Some(false));
    let cor42_all_ok = beta.cor42.iter().all(|c| c.bound_ok != Some(false));

    let chain = [
        Some(bounds.arithmetic),
        Some(bounds.quadratic),
        Some(phi),
        omega,
        chi,
    ];
    let present: Vec<usize> = chain.iter().flatten().copied().collect();
    if present.windows(2).any(|w| w[0] > w[1]) {
        anomalies.push(format!(
            "chain lb15 <= lb16 <= phi <= omega <= chi broken: {chain:?}"
        ));
    }
    let checks = [
        ("eq14", Some(eq14_ok)),
        ("eq13", eq13_ok),
        ("eq212", Some(partition.bound_ok)),
        ("eq213", Some(partition.sigma2_ok && partition.sigma3_ok)),
        ("eq416", eq416_ok),
        ("cor41", Some(cor41_all_ok)),
        ("cor42", Some(cor42_all_ok)),
    ];
    for (name, ok) in checks {
        if ok == Some(false) {
            anomalies.push(format!("{name} violated"));
        }
    }

    Ok(BoundReport {
        graph_id,
        n,
        e: g.edge_count(),
        sum_d: stats.sum_d().clone(),
        sum_d2: stats.sum_d2().clone(),
        phi,
        omega,
        chi,
        lb_ceil_15: bounds.arithmetic,
        lb_ceil_16: bounds.quadratic,
        eq16_equality: lhs16 == rhs16,
        eq14_ok,
        eq13_ok,
        eq212_ok: partition.bound_ok,
        eq213_ok: partition.sigma2_ok && partition.sigma3_ok,
        eq416_ok,
        eq416_equality,
        cor41_all_ok,
        cor42_all_ok,
        witness_partition: phi_result.witness.sizes(),
        eq13_equality,
        eq14_equality,
        equality,
        extremal,
        phi_oracle,
        anomalies,
        skipped,
    })
}

fn flag(b: bool) -> &'static str {
    if b {
        "1"
    } else {
        "0"
    }
}

fn opt_flag(b: Option<bool>) -> &'static str {
    b.map_or("", flag)
}

fn opt_num(x: Option<usize>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn sizes_field(sizes: &[usize]) -> String {
    sizes
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

pub fn csv_header() -> String {
    CSV_COLUMNS.join(",")
}

/// One data row. Booleans are 0/1, absent values are empty, the graph6
/// id is quoted and part sizes are `;`-separated.
pub fn csv_row(r: &BoundReport) -> String {
    [
        format!("\"{}\"", r.graph_id),
        r.n.to_string(),
        r.e.to_string(),
        r.sum_d.to_string(),
        r.sum_d2.to_string(),
        r.phi.to_string(),
        opt_num(r.omega),
        opt_num(r.chi),
        r.lb_ceil_15.to_string(),
        r.lb_ceil_16.to_string(),
        flag(r.eq16_equality).into(),
        flag(r.eq14_ok).into(),
        opt_flag(r.eq13_ok).into(),
        flag(r.eq212_ok).into(),
        flag(r.eq213_ok).into(),
        opt_flag(r.eq416_ok).into(),
        opt_flag(r.eq416_equality).into(),
        flag(r.cor41_all_ok).into(),
        flag(r.cor42_all_ok).into(),
        sizes_field(&r.witness_partition),
    ]
    .join(",")
}

pub fn emit_csv<'a, I>(reports: I) -> String
where
    I: IntoIterator<Item = &'a BoundReport>,
{
    let mut out = csv_header();
    out.push('\n');
    for r in reports {
        out.push_str(&csv_row(r));
        out.push('\n');
    }
    out
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let opt = |b: Option<bool>| b.map_or("n/a", yn);
        let num = |x: Option<usize>| x.map_or_else(|| "n/a".to_string(), |v| v.to_string());
        let mut s = String::new();
        let _ = writeln!(s, "graph          {}", self.graph_id);
        let _ = writeln!(s, "n, e           {}, {}", self.n, self.e);
        let _ = writeln!(s, "sum d, sum d^2 {}, {}", self.sum_d, self.sum_d2);
        let _ = writeln!(
            s,
            "phi            {} (parts {})",
            self.phi,
            sizes_field(&self.witness_partition)
        );
        let _ = writeln!(s, "omega, chi     {}, {}", num(self.omega), num(self.chi));
        let _ = writeln!(
            s,
            "lower bounds   arithmetic {}, quadratic {}",
            self.lb_ceil_15, self.lb_ceil_16
        );
        let _ = writeln!(s, "quadratic bound tight: {}", yn(self.eq16_equality));
        let _ = writeln!(
            s,
            "edge bounds    phi {} / clique {}",
            yn(self.eq14_ok),
            opt(self.eq13_ok)
        );
        let _ = writeln!(
            s,
            "partition      square sum {} / symmetric {}",
            yn(self.eq212_ok),
            yn(self.eq213_ok)
        );
        let _ = writeln!(
            s,
            "clique bound   {} (tight: {})",
            opt(self.eq416_ok),
            opt(self.eq416_equality)
        );
        let _ = writeln!(
            s,
            "sequences      common-nbhd {} / degree-sum {}",
            yn(self.cor41_all_ok),
            yn(self.cor42_all_ok)
        );
        for reason in &self.skipped {
            let _ = writeln!(s, "skipped        {reason}");
        }
        for a in &self.anomalies {
            let _ = writeln!(s, "ANOMALY        {a}");
        }
        f.write_str(s.trim_end())
    }
}
