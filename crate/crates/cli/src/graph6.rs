//! graph6 encoding, decoding, and a small-graph canonical form.
//!
//! Format: an optional `>>graph6<<` header, a size field N(n) (one byte
//! `n + 63` for `n <= 62`, otherwise byte 126 followed by three bytes
//! carrying 6 bits of `n` each, most significant first, for `n < 2^18`),
//! then `ceil(n(n-1)/2 / 6)` body bytes. Each body byte holds six bits of
//! the upper-triangle adjacency vector in column-major order
//! (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), most significant bit first,
//! offset by 63. All bytes lie in `63..=126`.

use extraconn_core::{Graph, GraphError};
use thiserror::Error;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("graph6 input is empty")]
    Empty,
    #[error("byte 0x{byte:02x} at offset {offset} is outside the printable range 63..=126")]
    ByteOutOfRange { byte: u8, offset: usize },
    #[error("input ends inside the size field")]
    TruncatedSize,
    #[error("graphs on more than 2^18 vertices are not supported")]
    TooLarge,
    #[error("expected {expected} body bytes for n={n}, found {found}")]
    BodyLength { n: usize, expected: usize, found: usize },
    #[error("trailing garbage after offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decodes one graph6 line into a graph with `Base` labels `0..n-1`.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::ByteOutOfRange { byte, offset });
        }
    }
    let (n, offset) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Graph6Error::TooLarge);
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::TruncatedSize);
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b as usize - 63));
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };
    let expected = if n < 2 { 0 } else { body_len(n) };
    let found = bytes.len() - offset;
    if found < expected {
        return Err(Graph6Error::BodyLength { n, expected, found });
    }
    if found > expected {
        return Err(Graph6Error::TrailingGarbage { offset: offset + expected });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for v in 1..n as u32 {
        for u in 0..v {
            let byte = bytes[offset + bit / 6] - 63;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Ok(Graph::new(n, &edges)?)
}

/// Encodes the graph in its current vertex order.
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n >= 1 << 18 {
        return Err(Graph6Error::TooLarge);
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for v in 1..n as u32 {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("all bytes are printable ASCII"))
}

/// Largest order for which the canonical form searches all permutations.
pub const CANONICAL_MAX_N: usize = 8;

fn permutations(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = (0..n as u32).collect();
    fn heap(k: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k <= 1 {
            out.push(current.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, current, out);
            if k.is_multiple_of(2) {
                current.swap(i, k - 1);
            } else {
                current.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut current, &mut out);
    out
}

/// Relabels the graph to the permutation minimizing its graph6 body, for
/// `n <=` [`CANONICAL_MAX_N`]; larger graphs are returned in their given
/// order (their identifiers are stable but not isomorphism-invariant).
/// The result carries fresh `Base` labels.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let plain = || {
        let edges: Vec<(u32, u32)> = g.edges().to_vec();
        Graph::new(n, &edges).expect("edges were valid in the source graph")
    };
    if !(2..=CANONICAL_MAX_N).contains(&n) {
        return plain();
    }
    let pairs: Vec<(u32, u32)> = (1..n as u32).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let mut best_word = u64::MAX;
    let mut best_perm: Option<Vec<u32>> = None;
    for perm in permutations(n) {
        let mut word = 0u64;
        for &(u, v) in &pairs {
            word = (word << 1) | u64::from(g.has_edge(perm[u as usize], perm[v as usize]));
        }
        if word < best_word {
            best_word = word;
            best_perm = Some(perm);
        }
    }
    let perm = match best_perm {
        Some(p) => p,
        None => return plain(),
    };
    let edges: Vec<(u32, u32)> = pairs
        .iter()
        .filter(|&&(u, v)| g.has_edge(perm[u as usize], perm[v as usize]))
        .copied()
        .collect();
    Graph::new(n, &edges).expect("permuted edges are valid")
}

/// The graph6 string of [`canonical_form`]; equal strings mean isomorphic
/// graphs for `n <=` [`CANONICAL_MAX_N`].
pub fn canonical_graph6(g: &Graph) -> String {
    emit_graph6(&canonical_form(g)).expect("canonical form is within size limits")
}
