//! Generalized chromatic number φ(G) of simple graphs, together with the
//! degree, clique and chromatic invariants that bound it.
//!
//! Every inequality is decided in exact integer or rational arithmetic.
//! Quantities involving the quadratic mean degree `sqrt(Σd²/n)` are
//! squared and cross-multiplied instead of evaluated in floating point.

pub mod clique;
pub mod degree;
pub mod delta;
pub mod edgelist;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod report;
pub mod sequences;
pub mod sweep;

pub use clique::{
    chromatic_number, clique_bound_check, clique_number, extremal_clique_classifier, CliqueError,
    SolverLimits,
};
pub use degree::{DegreeStats, ExactRatio};
pub use delta::{
    equality_classifier, is_delta_set, phi_exact, phi_lower_bound_ceil, phi_oracle, DeltaError,
    DeltaPartition, PhiResult,
};
pub use edgelist::parse_edge_list;
pub use generate::{generate, Family, Probability};
pub use graph::Graph;
pub use graph6::{encode_graph6, parse_graph6};
pub use report::{analyze, analyze_with, emit_csv, AnalyzeConfig, BoundReport};
pub use sequences::{build_sequence, SequenceKind, SequenceTrace};
pub use sweep::{run_sweep, SweepMode, SweepSpec, SweepSummary};
