//! Plain-text edge lists: a header line `n m`, then `m` lines `u v`.
//!
//! Blank lines are skipped. Duplicate edges are merged; loops are errors.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("line {line}: expected {expected} integers")]
    Arity { line: usize, expected: usize },
    #[error("line {line}: `{token}` is not a non-negative integer")]
    NotAnInteger { line: usize, token: String },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("header declares {declared} edges but {found} edge lines follow")]
    EdgeCount { declared: usize, found: usize },
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), EdgeListError> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(EdgeListError::Arity {
            line: line_no,
            expected: 2,
        });
    }
    let num = |t: &str| {
        t.parse::<usize>().map_err(|_| EdgeListError::NotAnInteger {
            line: line_no,
            token: t.to_string(),
        })
    };
    Ok((num(tokens[0])?, num(tokens[1])?))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_no, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) = parse_pair(header_no, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let (u, v) = parse_pair(line_no, line)?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(EdgeListError::VertexOutOfRange {
                    line: line_no,
                    vertex,
                    n,
                });
            }
        }
        if u == v {
            return Err(EdgeListError::SelfLoop {
                line: line_no,
                vertex: u,
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated above"))
}

/// Writes `g` in edge-list form, one edge per line with `u < v`.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
