//! Corona-style graph products.
//!
//! Every constructor relabels the base graph's vertices as `Base(i)` and
//! orders the product's vertices canonically: Base vertices first (in base
//! order), then Sub vertices (lexicographic by endpoint pair), then Copy
//! vertices (by owner, then inner index). Attachments may be disconnected
//! or edgeless; connectivity hypotheses belong to the theorem evaluators,
//! not the constructors.

use thiserror::Error;

use crate::graph::{CopyOwner, Graph, VertexLabel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProductError {
    #[error("expected {expected} attachments (one per base vertex), got {got}")]
    AttachmentCountMismatch { expected: usize, got: usize },
    #[error("attachment {0} has no vertices")]
    EmptyAttachment(usize),
    #[error("root {root} out of range for a graph on {n} vertices")]
    RootOutOfRange { root: u32, n: usize },
}

/// The edge corona `G \u{22c4} H`: one copy of `H` per edge of `G`, with every
/// copy vertex joined to both endpoints of its edge.
///
/// `|V| = n1 + m1*n2` and `|E| = m1 + m1*|E(H)| + 2*m1*n2` where `n1 = |V(G)|`,
/// `m1 = |E(G)|`, `n2 = |V(H)|`.
pub fn edge_corona(g: &Graph, h: &Graph) -> Graph {
    let n1 = g.vertex_count() as u32;
    let n2 = h.vertex_count() as u32;
    let mut labels: Vec<VertexLabel> = (0..n1).map(VertexLabel::Base).collect();
    let mut edges: Vec<(u32, u32)> = g.edges().to_vec();
    for &(i, j) in g.edges() {
        let start = labels.len() as u32;
        for t in 0..n2 {
            labels.push(VertexLabel::Copy { owner: CopyOwner::Edge(i, j), index: t });
            edges.push((i, start + t));
            edges.push((j, start + t));
        }
        for &(a, b) in h.edges() {
            edges.push((start + a, start + b));
        }
    }
    let out = Graph::with_labels(labels, &edges).expect("edge corona is a valid simple graph");
    debug_assert_eq!(out.vertex_count(), g.vertex_count() + g.edge_count() * h.vertex_count());
    debug_assert_eq!(
        out.edge_count(),
        g.edge_count() + g.edge_count() * h.edge_count()
            + 2 * g.edge_count() * h.vertex_count()
    );
    out
}

/// The neighbourhood corona `G * H`: one copy of `H` per vertex `u` of `G`,
/// with every copy vertex joined to every neighbour of `u` (not to `u`).
///
/// `|V| = n1*(1 + n2)` and `|E| = m1 + n1*|E(H)| + 2*m1*n2`.
pub fn neighbourhood_corona(g: &Graph, h: &Graph) -> Graph {
    let n1 = g.vertex_count() as u32;
    let n2 = h.vertex_count() as u32;
    let mut labels: Vec<VertexLabel> = (0..n1).map(VertexLabel::Base).collect();
    let mut edges: Vec<(u32, u32)> = g.edges().to_vec();
    for i in 0..n1 {
        let start = labels.len() as u32;
        for t in 0..n2 {
            labels.push(VertexLabel::Copy { owner: CopyOwner::Vertex(i), index: t });
            for &w in g.neighbors(i).expect("index in range") {
                edges.push((w, start + t));
            }
        }
        for &(a, b) in h.edges() {
            edges.push((start + a, start + b));
        }
    }
    let out =
        Graph::with_labels(labels, &edges).expect("neighbourhood corona is a valid simple graph");
    debug_assert_eq!(out.vertex_count(), g.vertex_count() * (1 + h.vertex_count()));
    debug_assert_eq!(
        out.edge_count(),
        g.edge_count() + g.vertex_count() * h.edge_count()
            + 2 * g.edge_count() * h.vertex_count()
    );
    out
}

/// The subdivision vertex neighbourhood corona `G \u{22a1} H`: the subdivision
/// graph `S(G)` plus one copy of `H` per vertex `v` of `G`, with every copy
/// vertex joined to the subdivision vertices of the edges incident to `v`.
///
/// `|V| = n1 + m1 + n1*n2` and `|E| = 2*m1 + n1*|E(H)| + 2*m1*n2`.
pub fn subdivision_vertex_nc(g: &Graph, h: &Graph) -> Graph {
    let n1 = g.vertex_count() as u32;
    let m1 = g.edge_count() as u32;
    let n2 = h.vertex_count() as u32;
    let mut labels: Vec<VertexLabel> = (0..n1).map(VertexLabel::Base).collect();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (t, &(i, j)) in g.edges().iter().enumerate() {
        labels.push(VertexLabel::Sub(i, j));
        let s = n1 + t as u32;
        edges.push((i, s));
        edges.push((j, s));
    }
    for i in 0..n1 {
        let start = labels.len() as u32;
        for t in 0..n2 {
            labels.push(VertexLabel::Copy { owner: CopyOwner::Vertex(i), index: t });
            for (e, &(a, b)) in g.edges().iter().enumerate() {
                if a == i || b == i {
                    edges.push((n1 + e as u32, start + t));
                }
            }
        }
        for &(a, b) in h.edges() {
            edges.push((start + a, start + b));
        }
    }
    let out = Graph::with_labels(labels, &edges)
        .expect("subdivision vertex neighbourhood corona is a valid simple graph");
    debug_assert_eq!(
        out.vertex_count(),
        g.vertex_count() + g.edge_count() + g.vertex_count() * h.vertex_count()
    );
    debug_assert_eq!(
        out.edge_count(),
        2 * m1 as usize + g.vertex_count() * h.edge_count()
            + 2 * g.edge_count() * h.vertex_count()
    );
    out
}

/// The subdivision edge neighbourhood corona `G \u{229f} H`: the subdivision
/// graph `S(G)` plus one copy of `H` per edge `e` of `G`, with every copy
/// vertex joined to the two endpoints of `e` (the neighbours of `e`'s
/// subdivision vertex in `S(G)`).
///
/// `|V| = n1 + m1 + m1*n2` and `|E| = 2*m1 + m1*|E(H)| + 2*m1*n2`.
pub fn subdivision_edge_nc(g: &Graph, h: &Graph) -> Graph {
    let n1 = g.vertex_count() as u32;
    let n2 = h.vertex_count() as u32;
    let mut labels: Vec<VertexLabel> = (0..n1).map(VertexLabel::Base).collect();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (t, &(i, j)) in g.edges().iter().enumerate() {
        labels.push(VertexLabel::Sub(i, j));
        let s = n1 + t as u32;
        edges.push((i, s));
        edges.push((j, s));
    }
    for &(i, j) in g.edges() {
        let start = labels.len() as u32;
        for t in 0..n2 {
            labels.push(VertexLabel::Copy { owner: CopyOwner::Edge(i, j), index: t });
            edges.push((i, start + t));
            edges.push((j, start + t));
        }
        for &(a, b) in h.edges() {
            edges.push((start + a, start + b));
        }
    }
    let out = Graph::with_labels(labels, &edges)
        .expect("subdivision edge neighbourhood corona is a valid simple graph");
    debug_assert_eq!(
        out.vertex_count(),
        g.vertex_count() + g.edge_count() + g.edge_count() * h.vertex_count()
    );
    debug_assert_eq!(
        out.edge_count(),
        2 * g.edge_count() + g.edge_count() * h.edge_count()
            + 2 * g.edge_count() * h.vertex_count()
    );
    out
}

/// Base graph plus one attachment per base vertex, for the generalized
/// corona `G \u{2218} \u{22c0} H_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedCoronaSpec {
    base: Graph,
    attachments: Vec<Graph>,
}

impl GeneralizedCoronaSpec {
    /// Requires exactly one nonempty attachment per base vertex.
    pub fn new(base: Graph, attachments: Vec<Graph>) -> Result<Self, ProductError> {
        if attachments.len() != base.vertex_count() {
            return Err(ProductError::AttachmentCountMismatch {
                expected: base.vertex_count(),
                got: attachments.len(),
            });
        }
        if let Some(i) = attachments.iter().position(|h| h.vertex_count() == 0) {
            return Err(ProductError::EmptyAttachment(i));
        }
        Ok(GeneralizedCoronaSpec { base, attachments })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn attachments(&self) -> &[Graph] {
        &self.attachments
    }

    /// The smallest attachment order, the `m_i = min` the range bounds use.
    pub fn min_attachment_order(&self) -> Option<usize> {
        self.attachments.iter().map(|h| h.vertex_count()).min()
    }
}

/// The generalized corona `G \u{2218} \u{22c0} H_i`: vertex `v_i` of the base
/// is joined to every vertex of its own copy of `H_i`.
///
/// `|V| = n1 + sum(m_i)` and `|E| = m1 + sum(|E(H_i)| + m_i)`.
pub fn generalized_corona(spec: &GeneralizedCoronaSpec) -> Graph {
    let g = &spec.base;
    let n1 = g.vertex_count() as u32;
    let mut labels: Vec<VertexLabel> = (0..n1).map(VertexLabel::Base).collect();
    let mut edges: Vec<(u32, u32)> = g.edges().to_vec();
    for (i, h) in spec.attachments.iter().enumerate() {
        let start = labels.len() as u32;
        for t in 0..h.vertex_count() as u32 {
            labels.push(VertexLabel::Copy { owner: CopyOwner::Vertex(i as u32), index: t });
            edges.push((i as u32, start + t));
        }
        for &(a, b) in h.edges() {
            edges.push((start + a, start + b));
        }
    }
    let out =
        Graph::with_labels(labels, &edges).expect("generalized corona is a valid simple graph");
    let total_m: usize = spec.attachments.iter().map(|h| h.vertex_count()).sum();
    let total_e: usize = spec.attachments.iter().map(|h| h.edge_count()).sum();
    debug_assert_eq!(out.vertex_count(), g.vertex_count() + total_m);
    debug_assert_eq!(out.edge_count(), g.edge_count() + total_e + total_m);
    out
}

/// A graph with a distinguished root vertex, the `H` of a rooted product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedGraph {
    graph: Graph,
    root: u32,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: u32) -> Result<Self, ProductError> {
        if root as usize >= graph.vertex_count() {
            return Err(ProductError::RootOutOfRange { root, n: graph.vertex_count() });
        }
        Ok(RootedGraph { graph, root })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    /// Degree of the root inside `H`, the `deg(v^r)` of the formulas.
    pub fn root_degree(&self) -> usize {
        self.graph.degree(self.root).expect("root is in range")
    }
}

/// The rooted product `H(G)`: one copy of `H` per vertex of `G`, with the
/// copies' roots identified with `G`'s vertices and wired by `G`'s edges.
///
/// The root of copy `i` is labelled `Base(i)`; a non-root vertex `j` of `H`
/// keeps its `H`-index as the inner index of `Copy { Vertex(i), j }`.
///
/// `|V| = n1*n2` and `|E| = m1 + n1*|E(H)|`.
pub fn rooted_product(g: &Graph, h: &RootedGraph) -> Graph {
    let n1 = g.vertex_count() as u32;
    let n2 = h.graph().vertex_count() as u32;
    let root = h.root();
    let mut labels: Vec<VertexLabel> = (0..n1).map(VertexLabel::Base).collect();
    let mut edges: Vec<(u32, u32)> = g.edges().to_vec();
    let mut copy_index = vec![vec![0u32; n2 as usize]; n1 as usize];
    for i in 0..n1 {
        for j in 0..n2 {
            if j == root {
                copy_index[i as usize][j as usize] = i;
            } else {
                copy_index[i as usize][j as usize] = labels.len() as u32;
                labels.push(VertexLabel::Copy { owner: CopyOwner::Vertex(i), index: j });
            }
        }
        for &(a, b) in h.graph().edges() {
            edges.push((copy_index[i as usize][a as usize], copy_index[i as usize][b as usize]));
        }
    }
    let out = Graph::with_labels(labels, &edges).expect("rooted product is a valid simple graph");
    debug_assert_eq!(out.vertex_count(), g.vertex_count() * h.graph().vertex_count());
    debug_assert_eq!(out.edge_count(), g.edge_count() + g.vertex_count() * h.graph().edge_count());
    out
}
