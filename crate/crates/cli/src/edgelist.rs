//! Plain-text edge list parser.
//!
//! Lines hold `u v` vertex pairs; blank lines and `#` comments are
//! ignored. An optional leading header `n <count>` fixes the vertex count
//! (the only way to declare isolated vertices); without it the count is
//! one past the largest endpoint. Duplicate edges are collapsed with a
//! warning; self-loops are errors. Errors carry 1-based line numbers.

use extraconn_core::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: expected `u v`, got {content:?}")]
    Malformed { line: usize, content: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: u32 },
    #[error("line {line}: vertex {vertex} out of range for declared n={n}")]
    OutOfRange { line: usize, vertex: u32, n: usize },
    #[error("line {line}: vertex count {content:?} in the header is not a number")]
    BadHeader { line: usize, content: String },
    #[error("input declares no vertices")]
    Empty,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses an edge list; returns the graph and any duplicate-edge warnings.
pub fn parse_edge_list(text: &str) -> Result<(Graph, Vec<String>), EdgeListError> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut warnings = Vec::new();
    let mut max_vertex: Option<u32> = None;
    let mut seen_content = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens[0] == "n" {
            if seen_content || tokens.len() != 2 {
                return Err(EdgeListError::Malformed { line, content: content.to_string() });
            }
            let n: usize = tokens[1]
                .parse()
                .map_err(|_| EdgeListError::BadHeader { line, content: tokens[1].to_string() })?;
            declared_n = Some(n);
            seen_content = true;
            continue;
        }
        seen_content = true;
        if tokens.len() != 2 {
            return Err(EdgeListError::Malformed { line, content: content.to_string() });
        }
        let parse = |t: &str| {
            t.parse::<u32>()
                .map_err(|_| EdgeListError::Malformed { line, content: content.to_string() })
        };
        let u = parse(tokens[0])?;
        let v = parse(tokens[1])?;
        if u == v {
            return Err(EdgeListError::SelfLoop { line, vertex: u });
        }
        if let Some(n) = declared_n {
            for w in [u, v] {
                if w as usize >= n {
                    return Err(EdgeListError::OutOfRange { line, vertex: w, n });
                }
            }
        }
        max_vertex = Some(max_vertex.unwrap_or(0).max(u).max(v));
        let edge = (u.min(v), u.max(v));
        if edges.contains(&edge) {
            warnings.push(format!("line {line}: duplicate edge ({u}, {v}) collapsed"));
        } else {
            edges.push(edge);
        }
    }

    let n = match (declared_n, max_vertex) {
        (Some(n), _) => n,
        (None, Some(max)) => max as usize + 1,
        (None, None) => return Err(EdgeListError::Empty),
    };
    Ok((Graph::new(n, &edges)?, warnings))
}
