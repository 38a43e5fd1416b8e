//! Simple undirected graphs on vertices `0..n`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// A simple undirected graph: no loops, no multiple edges.
///
/// Adjacency is kept as sorted neighbor lists. Graphs are immutable once
/// built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    /// Builds a graph from an edge iterator. Duplicate edges (in either
    /// orientation) collapse to one; loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Ok(Graph {
            adj,
            edges: twice / 2,
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges, e(G).
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    /// Sorted open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_regular(&self) -> bool {
        let mut degrees = self.adj.iter().map(Vec::len);
        match degrees.next() {
            None => true,
            Some(first) => degrees.all(|d| d == first),
        }
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = Vec::with_capacity(n);
        let mut edges = 0;
        for u in 0..n {
            let list: Vec<usize> = (0..n)
                .filter(|&v| v != u && self.adj[u].binary_search(&v).is_err())
                .collect();
            edges += list.len();
            adj.push(list);
        }
        Graph {
            adj,
            edges: edges / 2,
        }
    }

    /// The subgraph induced by `vs`, relabeled to `0..k` in ascending order
    /// of the original labels. The second component maps new labels back
    /// to the original ones.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let n = self.n();
        if let Some(&bad) = vs.iter().find(|&&v| v >= n) {
            return Err(GraphError::VertexOutOfRange { vertex: bad, n });
        }
        let mut mapping = vs.to_vec();
        mapping.sort_unstable();
        mapping.dedup();

        let mut relabel = vec![usize::MAX; n];
        for (new, &old) in mapping.iter().enumerate() {
            relabel[old] = new;
        }
        let mut adj = Vec::with_capacity(mapping.len());
        let mut twice = 0;
        for &old in &mapping {
            // neighbors are sorted and relabel is monotone, so lists stay sorted
            let list: Vec<usize> = self.adj[old]
                .iter()
                .map(|&w| relabel[w])
                .filter(|&w| w != usize::MAX)
                .collect();
            twice += list.len();
            adj.push(list);
        }
        Ok((
            Graph {
                adj,
                edges: twice / 2,
            },
            mapping,
        ))
    }

    /// Checks `v < n` for every listed vertex.
    pub(crate) fn check_vertices(&self, vs: &[usize]) -> Result<(), GraphError> {
        let n = self.n();
        match vs.iter().find(|&&v| v >= n) {
            Some(&vertex) => Err(GraphError::VertexOutOfRange { vertex, n }),
            None => Ok(()),
        }
    }

    /// Neighborhoods as 64-bit masks, for the exact solvers. `None` when
    /// `n > 64`.
    pub(crate) fn masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &v| m | (1u64 << v)))
                .collect(),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
