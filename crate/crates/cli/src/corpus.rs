//! Exhaustive corpus of small connected graphs, one per isomorphism class.
//!
//! Graphs on `n` vertices are built by attaching a new vertex to every
//! nonempty neighbour subset of every graph on `n - 1` vertices (every
//! connected graph has a vertex whose removal keeps it connected, so this
//! reaches every class) and deduplicated by canonical graph6 key. The
//! emitted graphs are the canonical representatives, ordered by vertex
//! count and then canonical key, so the corpus is deterministic.

use std::collections::BTreeMap;

use extraconn_core::Graph;
use thiserror::Error;

use crate::graph6::{canonical_form, emit_graph6};

/// Hard ceiling: one vertex more and the corpus jumps from 853 to 11117
/// graphs of top order, and the exhaustive searches downstream stop being
/// interactive.
pub const MAX_CORPUS_N: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("corpus enumeration is capped at n = {MAX_CORPUS_N}, requested {0}")]
    TooLarge(usize),
}

/// All connected graphs on `2..=max_n` vertices up to isomorphism, as
/// canonical representatives in deterministic order.
pub fn enumerate_connected_base_graphs(max_n: usize) -> Result<Vec<Graph>, CorpusError> {
    if max_n > MAX_CORPUS_N {
        return Err(CorpusError::TooLarge(max_n));
    }
    let mut corpus: Vec<Graph> = Vec::new();
    if max_n < 2 {
        return Ok(corpus);
    }
    let mut level: Vec<Graph> = vec![canonical_form(&Graph::complete(2))];
    corpus.extend(level.iter().cloned());
    for n in 3..=max_n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        let new = (n - 1) as u32;
        for g in &level {
            let base_edges = g.edges();
            for mask in 1u32..(1 << (n - 1)) {
                let mut edges: Vec<(u32, u32)> = base_edges.to_vec();
                for v in 0..new {
                    if (mask >> v) & 1 == 1 {
                        edges.push((v, new));
                    }
                }
                let candidate = Graph::new(n, &edges).expect("extension edges are simple");
                let canonical = canonical_form(&candidate);
                next.entry(emit_graph6(&canonical).expect("small graph")).or_insert(canonical);
            }
        }
        level = next.into_values().collect();
        corpus.extend(level.iter().cloned());
    }
    Ok(corpus)
}

/// The number of isomorphism classes the corpus holds per vertex count,
/// for sanity anchors: connected graphs on 2..=7 vertices.
pub const CONNECTED_COUNTS: [(usize, usize); 6] =
    [(2, 1), (3, 2), (4, 6), (5, 21), (6, 112), (7, 853)];
