//! Fixed inputs shared by the benchmarks.

use phibound_core::generate::{generate, Family, Probability};
use phibound_core::Graph;

/// A seeded G(n, 1/2) sample.
pub fn random_graph(n: usize, seed: u64) -> Graph {
    generate(&Family::Gnp {
        n,
        p: Probability::half(),
        seed,
    })
    .expect("valid family")
}

/// Balanced complete multipartite graph on `n` vertices with `r` parts.
pub fn turan(n: usize, r: usize) -> Graph {
    generate(&Family::Turan { n, r }).expect("valid family")
}
