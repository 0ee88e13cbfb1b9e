//! Exact g-extra connectivity oracle.
//!
//! An `R_g` cutset is a vertex (or edge) set whose removal disconnects the
//! graph so that every remaining component has at least `g + 1` vertices;
//! `kappa_g` / `lambda_g` are the minimum sizes of such sets, `Infinite`
//! when none exists.
//!
//! The search enumerates candidate cut sizes in increasing order starting
//! from the plain connectivity (a lower bound, since every `R_g` cutset is a
//! cutset), so minimality is structural. `Infinite` is only reported after
//! exhausting every size that could possibly qualify; a [`SearchBudget`]
//! bounds the search and exceeding it is an error, never a wrong value.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{ExtendedCount, Graph, GraphError, VertexLabel};

/// Caps on the exhaustive search. Exceeding a cap yields
/// [`ExtraError::BudgetExceeded`] rather than a truncated answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    /// Largest cut cardinality the search will try.
    pub max_cut_size: usize,
    /// Largest host (in vertices) accepted for vertex-cut searches.
    pub max_host_vertices: usize,
    /// Largest host (in edges) accepted for edge-cut searches.
    pub max_host_edges: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_cut_size: 8, max_host_vertices: 24, max_host_edges: 40 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtraError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("vertex label {0} is not in the graph")]
    UnknownLabel(VertexLabel),
}

/// A qualifying vertex cut together with the components it leaves behind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexCutCertificate {
    pub cut: Vec<VertexLabel>,
    pub components: Vec<Vec<VertexLabel>>,
    pub min_component_size: usize,
}

/// A qualifying edge cut together with the components it leaves behind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeCutCertificate {
    pub cut: Vec<(VertexLabel, VertexLabel)>,
    pub components: Vec<Vec<VertexLabel>>,
    pub min_component_size: usize,
}

/// The `A` / `X` of the range-case formulas: a minimum vertex cut under a
/// component-size floor, with its count of internal adjacent pairs (`A'`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstrainedCutResult {
    pub cut_set: Vec<VertexLabel>,
    pub size: usize,
    pub adjacent_pairs: usize,
    pub component_floor: usize,
}

/// Minimum size of a vertex set whose removal disconnects `g` into
/// components of at least `extra + 1` vertices each, with a witness.
pub fn g_extra_vertex_connectivity(
    g: &Graph,
    extra: usize,
    budget: &SearchBudget,
) -> Result<(ExtendedCount, Option<VertexCutCertificate>), ExtraError> {
    let kappa = match g.vertex_connectivity()? {
        ExtendedCount::Infinite => return Ok((ExtendedCount::Infinite, None)),
        ExtendedCount::Finite(k) => k,
    };
    let n = g.vertex_count();
    check_vertex_host(n, budget)?;
    let floor = extra + 1;
    if n < 2 * floor + kappa {
        return Ok((ExtendedCount::Infinite, None));
    }
    let max_useful = n - 2 * floor;
    let adj = g.adjacency_bits().expect("host fits in 128 bits");
    let full = ones(n);
    let lex_by_index = labels_ascending(g);
    for size in kappa..=max_useful.min(budget.max_cut_size) {
        let mut best: Option<Vec<u32>> = None;
        for_each_subset(n, size, |cut| {
            let alive = full & !index_mask(cut);
            if !split_ok(adj, alive, floor) {
                return false;
            }
            if lex_by_index {
                best = Some(cut.to_vec());
                return true;
            }
            let better = match &best {
                None => true,
                Some(b) => label_vec(g, cut) < label_vec(g, b),
            };
            if better {
                best = Some(cut.to_vec());
            }
            false
        });
        if let Some(cut) = best {
            let cert = vertex_certificate(g, &cut);
            return Ok((ExtendedCount::Finite(size), Some(cert)));
        }
    }
    if max_useful > budget.max_cut_size {
        return Err(ExtraError::BudgetExceeded(format!(
            "no qualifying vertex cut of size <= {}; sizes up to {} remain unexplored",
            budget.max_cut_size, max_useful
        )));
    }
    Ok((ExtendedCount::Infinite, None))
}

/// Minimum size of an edge set whose removal disconnects `g` into
/// components of at least `extra + 1` vertices each, with a witness.
pub fn g_extra_edge_connectivity(
    g: &Graph,
    extra: usize,
    budget: &SearchBudget,
) -> Result<(ExtendedCount, Option<EdgeCutCertificate>), ExtraError> {
    let lambda = match g.edge_connectivity()? {
        ExtendedCount::Infinite => return Ok((ExtendedCount::Infinite, None)),
        ExtendedCount::Finite(l) => l,
    };
    let n = g.vertex_count();
    let m = g.edge_count();
    if m > budget.max_host_edges {
        return Err(ExtraError::BudgetExceeded(format!(
            "host has {m} edges, budget allows {}",
            budget.max_host_edges
        )));
    }
    if n > 128 {
        return Err(ExtraError::BudgetExceeded(format!(
            "host has {n} vertices, bitset search supports at most 128"
        )));
    }
    let floor = extra + 1;
    if n < 2 * floor {
        return Ok((ExtendedCount::Infinite, None));
    }
    let edges = g.edges();
    let full = ones(n);
    let mut scratch = g.adjacency_bits().expect("host fits in 128 bits").to_vec();
    let lex_by_index = labels_ascending(g);
    for size in lambda..=m.min(budget.max_cut_size) {
        let mut best: Option<Vec<u32>> = None;
        for_each_subset(m, size, |cut| {
            for &e in cut {
                let (u, v) = edges[e as usize];
                scratch[u as usize] &= !(1u128 << v);
                scratch[v as usize] &= !(1u128 << u);
            }
            let qualifies = split_ok(&scratch, full, floor);
            for &e in cut {
                let (u, v) = edges[e as usize];
                scratch[u as usize] |= 1u128 << v;
                scratch[v as usize] |= 1u128 << u;
            }
            if !qualifies {
                return false;
            }
            if lex_by_index {
                best = Some(cut.to_vec());
                return true;
            }
            let better = match &best {
                None => true,
                Some(b) => pair_vec(g, cut) < pair_vec(g, b),
            };
            if better {
                best = Some(cut.to_vec());
            }
            false
        });
        if let Some(cut) = best {
            let cert = edge_certificate(g, &cut);
            return Ok((ExtendedCount::Finite(size), Some(cert)));
        }
    }
    if m > budget.max_cut_size {
        return Err(ExtraError::BudgetExceeded(format!(
            "no qualifying edge cut of size <= {}; sizes up to {m} remain unexplored",
            budget.max_cut_size
        )));
    }
    Ok((ExtendedCount::Infinite, None))
}

/// `lambda_k`: the same quantity as [`g_extra_edge_connectivity`] with
/// `extra = k`, named after the rooted-product range formula's symbol.
pub fn lambda_k(
    g: &Graph,
    k: usize,
    budget: &SearchBudget,
) -> Result<(ExtendedCount, Option<EdgeCutCertificate>), ExtraError> {
    g_extra_edge_connectivity(g, k, budget)
}

/// Minimum vertex cut leaving every component with at least `k + 1`
/// vertices, or `None` when no such cut exists. Ties are broken by fewest
/// adjacent pairs, then lexicographically smallest sorted label set.
pub fn min_constrained_vertex_cut(
    g: &Graph,
    k: usize,
    budget: &SearchBudget,
) -> Result<Option<ConstrainedCutResult>, ExtraError> {
    let kappa = match g.vertex_connectivity()? {
        ExtendedCount::Infinite => return Ok(None),
        ExtendedCount::Finite(v) => v,
    };
    let n = g.vertex_count();
    check_vertex_host(n, budget)?;
    let floor = k + 1;
    if n < 2 * floor + kappa {
        return Ok(None);
    }
    let max_useful = n - 2 * floor;
    let adj = g.adjacency_bits().expect("host fits in 128 bits");
    let full = ones(n);
    for size in kappa..=max_useful.min(budget.max_cut_size) {
        let mut best: Option<(usize, Vec<VertexLabel>, Vec<u32>)> = None;
        for_each_subset(n, size, |cut| {
            let mask = index_mask(cut);
            if !split_ok(adj, full & !mask, floor) {
                return false;
            }
            let pairs = internal_pairs(adj, cut, mask);
            let labels = label_vec(g, cut);
            let better = match &best {
                None => true,
                Some((bp, bl, _)) => (pairs, &labels) < (*bp, bl),
            };
            if better {
                best = Some((pairs, labels, cut.to_vec()));
            }
            false
        });
        if let Some((pairs, labels, _)) = best {
            return Ok(Some(ConstrainedCutResult {
                cut_set: labels,
                size,
                adjacent_pairs: pairs,
                component_floor: floor,
            }));
        }
    }
    if max_useful > budget.max_cut_size {
        return Err(ExtraError::BudgetExceeded(format!(
            "no constrained cut of size <= {}; sizes up to {} remain unexplored",
            budget.max_cut_size, max_useful
        )));
    }
    Ok(None)
}

/// Every vertex cut of size exactly `vertex_connectivity(g)`, as sorted
/// index sets in lexicographic order; empty exactly for complete graphs.
pub fn minimum_vertex_cuts(g: &Graph, budget: &SearchBudget) -> Result<Vec<Vec<u32>>, ExtraError> {
    let kappa = match g.vertex_connectivity()? {
        ExtendedCount::Infinite => return Ok(Vec::new()),
        ExtendedCount::Finite(v) => v,
    };
    let n = g.vertex_count();
    check_vertex_host(n, budget)?;
    if kappa > budget.max_cut_size {
        return Err(ExtraError::BudgetExceeded(format!(
            "minimum cuts have size {kappa}, budget allows {}",
            budget.max_cut_size
        )));
    }
    let adj = g.adjacency_bits().expect("host fits in 128 bits");
    let full = ones(n);
    let mut cuts = Vec::new();
    for_each_subset(n, kappa, |cut| {
        if split_ok(adj, full & !index_mask(cut), 1) {
            cuts.push(cut.to_vec());
        }
        false
    });
    Ok(cuts)
}

/// The maximum, over all minimum vertex cuts, of (smallest component size
/// after removal) − 1, with a witnessing cut; `None` for complete graphs.
pub fn k_max_of_min_cuts(
    g: &Graph,
    budget: &SearchBudget,
) -> Result<Option<(usize, VertexCutCertificate)>, ExtraError> {
    let cuts = minimum_vertex_cuts(g, budget)?;
    if cuts.is_empty() {
        return Ok(None);
    }
    let adj = g.adjacency_bits().expect("host fits in 128 bits");
    let full = ones(g.vertex_count());
    let mut best: Option<(usize, Vec<VertexLabel>, Vec<u32>)> = None;
    for cut in &cuts {
        let comps = masked_components(adj, full & !index_mask(cut));
        let k = comps.iter().map(|c| c.len()).min().expect("cut leaves components") - 1;
        let labels = label_vec(g, cut);
        let better = match &best {
            None => true,
            Some((bk, bl, _)) => k > *bk || (k == *bk && labels < *bl),
        };
        if better {
            best = Some((k, labels, cut.clone()));
        }
    }
    let (k, _, cut) = best.expect("at least one minimum cut");
    Ok(Some((k, vertex_certificate(g, &cut))))
}

/// Number of `g`-edges with both endpoints in `set` (the `A'` / `X'` count).
pub fn adjacent_pairs_in(g: &Graph, set: &[VertexLabel]) -> Result<usize, ExtraError> {
    let mut member = vec![false; g.vertex_count()];
    for label in set {
        let v = g.index_of_label(label).ok_or(ExtraError::UnknownLabel(*label))?;
        member[v as usize] = true;
    }
    Ok(g.edges().iter().filter(|&&(u, v)| member[u as usize] && member[v as usize]).count())
}

fn check_vertex_host(n: usize, budget: &SearchBudget) -> Result<(), ExtraError> {
    if n > budget.max_host_vertices {
        return Err(ExtraError::BudgetExceeded(format!(
            "host has {n} vertices, budget allows {}",
            budget.max_host_vertices
        )));
    }
    if n > 128 {
        return Err(ExtraError::BudgetExceeded(format!(
            "host has {n} vertices, bitset search supports at most 128"
        )));
    }
    Ok(())
}

fn ones(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

fn index_mask(indices: &[u32]) -> u128 {
    indices.iter().fold(0u128, |acc, &v| acc | (1u128 << v))
}

fn labels_ascending(g: &Graph) -> bool {
    g.labels().windows(2).all(|w| w[0] < w[1])
}

fn label_vec(g: &Graph, indices: &[u32]) -> Vec<VertexLabel> {
    let mut labels: Vec<VertexLabel> =
        indices.iter().map(|&v| g.label(v).expect("index in range")).collect();
    labels.sort_unstable();
    labels
}

fn pair_vec(g: &Graph, edge_indices: &[u32]) -> Vec<(VertexLabel, VertexLabel)> {
    let mut pairs: Vec<(VertexLabel, VertexLabel)> = edge_indices
        .iter()
        .map(|&e| {
            let (u, v) = g.edges()[e as usize];
            let (a, b) = (g.label(u).expect("in range"), g.label(v).expect("in range"));
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    pairs.sort_unstable();
    pairs
}

fn internal_pairs(adj: &[u128], indices: &[u32], mask: u128) -> usize {
    let total: u32 = indices.iter().map(|&v| (adj[v as usize] & mask).count_ones()).sum();
    (total / 2) as usize
}

/// True when the `alive` subgraph is disconnected and every component has
/// at least `floor` vertices.
fn split_ok(adj: &[u128], alive: u128, floor: usize) -> bool {
    if alive == 0 {
        return false;
    }
    let mut remaining = alive;
    let mut first = true;
    while remaining != 0 {
        let start = remaining.trailing_zeros();
        let mut comp = 1u128 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut grown = 0u128;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                grown |= adj[v];
            }
            frontier = grown & alive & !comp;
            comp |= frontier;
        }
        if first && comp == alive {
            return false;
        }
        if (comp.count_ones() as usize) < floor {
            return false;
        }
        remaining &= !comp;
        first = false;
    }
    true
}

/// Components of the `alive` subgraph, each ascending, ordered by smallest
/// member.
fn masked_components(adj: &[u128], alive: u128) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut remaining = alive;
    while remaining != 0 {
        let start = remaining.trailing_zeros();
        let mut comp = 1u128 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut grown = 0u128;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                grown |= adj[v];
            }
            frontier = grown & alive & !comp;
            comp |= frontier;
        }
        let mut members = Vec::with_capacity(comp.count_ones() as usize);
        let mut c = comp;
        while c != 0 {
            members.push(c.trailing_zeros());
            c &= c - 1;
        }
        out.push(members);
        remaining &= !comp;
    }
    out
}

/// Visits all `k`-subsets of `0..n` in lexicographic order until the
/// visitor returns `true`.
fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(&[u32]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<u32> = (0..k as u32).collect();
    loop {
        if visit(&idx) || !next_combination(&mut idx, n) {
            return;
        }
    }
}

fn next_combination(idx: &mut [u32], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    loop {
        if i == 0 {
            return false;
        }
        i -= 1;
        if idx[i] < (n - k + i) as u32 {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
}

fn sorted_component_labels(g: &Graph, comps: &[Vec<u32>]) -> Vec<Vec<VertexLabel>> {
    let mut out: Vec<Vec<VertexLabel>> = comps.iter().map(|c| label_vec(g, c)).collect();
    out.sort();
    out
}

fn vertex_certificate(g: &Graph, cut: &[u32]) -> VertexCutCertificate {
    let adj = g.adjacency_bits().expect("host fits in 128 bits");
    let comps = masked_components(adj, ones(g.vertex_count()) & !index_mask(cut));
    let components = sorted_component_labels(g, &comps);
    let min_component_size = components.iter().map(|c| c.len()).min().unwrap_or(0);
    VertexCutCertificate { cut: label_vec(g, cut), components, min_component_size }
}

fn edge_certificate(g: &Graph, cut: &[u32]) -> EdgeCutCertificate {
    let mut scratch = g.adjacency_bits().expect("host fits in 128 bits").to_vec();
    for &e in cut {
        let (u, v) = g.edges()[e as usize];
        scratch[u as usize] &= !(1u128 << v);
        scratch[v as usize] &= !(1u128 << u);
    }
    let comps = masked_components(&scratch, ones(g.vertex_count()));
    let components = sorted_component_labels(g, &comps);
    let min_component_size = components.iter().map(|c| c.len()).min().unwrap_or(0);
    EdgeCutCertificate { cut: pair_vec(g, cut), components, min_component_size }
}
