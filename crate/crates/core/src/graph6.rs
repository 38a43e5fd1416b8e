//! graph6 encoding and decoding.
//!
//! A graph6 string is a size header followed by the upper triangle of the
//! adjacency matrix, packed six bits per printable byte (value + 63). Pairs
//! `(i, j)` with `i < j` are visited column by column: `(0,1), (0,2),
//! (1,2), (0,3), ...`. Sizes up to 62 use a single header byte; sizes up to
//! 258047 use `~` followed by three bytes. The eight-byte form is rejected.

use thiserror::Error;

use crate::graph::Graph;

const BIAS: u8 = 63;
const LONG_MARKER: u8 = 126;
const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("malformed size header")]
    Header,
    #[error("graphs with more than 258047 vertices are not supported")]
    TooLarge(usize),
    #[error("adjacency data truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} trailing bytes after adjacency data")]
    Trailing(usize),
    #[error("non-zero padding bits in final byte")]
    Padding,
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Decodes one graph6 line. A single trailing newline is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(BIAS..=126).contains(&b))
    {
        return Err(Graph6Error::BadByte { offset, byte });
    }

    let (n, body) = if bytes[0] == LONG_MARKER {
        if bytes.len() < 4 || bytes[1] == LONG_MARKER {
            return Err(Graph6Error::Header);
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS));
        (n, &bytes[4..])
    } else {
        (usize::from(bytes[0] - BIAS), &bytes[1..])
    };

    let bits = pair_count(n);
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::Trailing(body.len() - expected));
    }
    let pad = expected * 6 - bits;
    if pad > 0 {
        let last = body[expected - 1] - BIAS;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::Padding);
        }
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = body[k / 6] - BIAS;
            if chunk & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("decoded pairs are in range and loop-free"))
}

/// Encodes a graph as graph6, without a trailing newline.
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + pair_count(n).div_ceil(6));
    if n <= MAX_SHORT {
        out.push(n as u8 + BIAS);
    } else if n <= MAX_MEDIUM {
        out.push(LONG_MARKER);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        return Err(Graph6Error::TooLarge(n));
    }

    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
