//! Simple undirected graphs with provenance-tracking vertex labels.
//!
//! Vertices are indexed `0..n` and carry a [`VertexLabel`] recording where
//! they came from when the graph was built by a product construction: an
//! original vertex of the base graph, a subdivision vertex placed on a base
//! edge, or a vertex inside an attached copy.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Which piece of the base graph an attached copy belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CopyOwner {
    /// Copy attached for base vertex `i`.
    Vertex(u32),
    /// Copy attached for base edge `(i, j)` with `i < j`.
    Edge(u32, u32),
}

/// Provenance of a vertex in a (possibly product) graph.
///
/// The ordering is `Base < Sub < Copy`, then positional within each variant;
/// this is the canonical vertex order used by every product constructor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexLabel {
    /// Vertex `i` of the base graph.
    Base(u32),
    /// Subdivision vertex on base edge `(i, j)` with `i < j`.
    Sub(u32, u32),
    /// Vertex `index` inside the copy owned by `owner`.
    Copy { owner: CopyOwner, index: u32 },
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Base(i) => write!(f, "v{i}"),
            VertexLabel::Sub(i, j) => write!(f, "s{i}-{j}"),
            VertexLabel::Copy { owner: CopyOwner::Vertex(i), index } => write!(f, "v{i}.{index}"),
            VertexLabel::Copy { owner: CopyOwner::Edge(i, j), index } => {
                write!(f, "e{i}-{j}.{index}")
            }
        }
    }
}

impl Serialize for VertexLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A connectivity count that may be infinite.
///
/// `Infinite` means no qualifying cut exists at all, e.g. the vertex
/// connectivity of a complete graph, or a g-extra connectivity where no
/// vertex set of any size produces only components of order at least `g + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedCount {
    Finite(usize),
    Infinite,
}

impl ExtendedCount {
    pub fn as_finite(self) -> Option<usize> {
        match self {
            ExtendedCount::Finite(k) => Some(k),
            ExtendedCount::Infinite => None,
        }
    }
}

impl fmt::Display for ExtendedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedCount::Finite(k) => write!(f, "{k}"),
            ExtendedCount::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for ExtendedCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedCount::Finite(k) => serializer.serialize_u64(*k as u64),
            ExtendedCount::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

/// A maximal connected set of vertices, listed in ascending index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<u32>,
}

impl Component {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex index {0} out of range for graph on {1} vertices")]
    IndexOutOfRange(u32, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u32, u32),
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(VertexLabel),
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has fewer than two vertices")]
    TooSmall,
}

/// A finite simple undirected graph.
///
/// Invariants: no self-loops, no parallel edges, labels pairwise distinct,
/// edges stored as `(u, v)` with `u < v` in lexicographic order, and
/// neighbour lists sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<VertexLabel>,
    neighbors: Vec<Vec<u32>>,
    edges: Vec<(u32, u32)>,
    bits: Option<Vec<u128>>,
}

impl Graph {
    /// Builds a graph on `n` vertices labelled `Base(0..n)`.
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        let labels = (0..n as u32).map(VertexLabel::Base).collect();
        Graph::with_labels(labels, edges)
    }

    /// Builds a graph with explicit vertex labels; `labels.len()` is the
    /// vertex count and edges refer to label positions.
    pub fn with_labels(labels: Vec<VertexLabel>, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        let n = labels.len();
        {
            let mut seen = BTreeSet::new();
            for &label in &labels {
                if !seen.insert(label) {
                    return Err(GraphError::DuplicateLabel(label));
                }
            }
        }
        let mut normalized: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a as usize >= n {
                return Err(GraphError::IndexOutOfRange(a, n));
            }
            if b as usize >= n {
                return Err(GraphError::IndexOutOfRange(b, n));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        for w in normalized.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            neighbors[u as usize].push(v);
            neighbors[v as usize].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        let bits = if n <= 128 {
            let mut rows = vec![0u128; n];
            for &(u, v) in &normalized {
                rows[u as usize] |= 1u128 << v;
                rows[v as usize] |= 1u128 << u;
            }
            Some(rows)
        } else {
            None
        };
        Ok(Graph { labels, neighbors, edges: normalized, bits })
    }

    /// Path on `n >= 1` vertices with edges `(i, i+1)`.
    pub fn path(n: usize) -> Graph {
        assert!(n >= 1, "path needs at least one vertex");
        let edges: Vec<(u32, u32)> = (1..n as u32).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least three vertices");
        let mut edges: Vec<(u32, u32)> = (1..n as u32).map(|i| (i - 1, i)).collect();
        edges.push((0, n as u32 - 1));
        Graph::new(n, &edges).expect("cycle edges are valid")
    }

    /// Complete graph on `n >= 1` vertices.
    pub fn complete(n: usize) -> Graph {
        assert!(n >= 1, "complete graph needs at least one vertex");
        let mut edges = Vec::new();
        for i in 0..n as u32 {
            for j in i + 1..n as u32 {
                edges.push((i, j));
            }
        }
        Graph::new(n, &edges).expect("complete graph edges are valid")
    }

    /// Star `K_{1,k}`: centre `0`, leaves `1..=k`.
    pub fn star(k: usize) -> Graph {
        let edges: Vec<(u32, u32)> = (1..=k as u32).map(|i| (0, i)).collect();
        Graph::new(k + 1, &edges).expect("star edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: u32) -> Result<VertexLabel, GraphError> {
        self.labels
            .get(v as usize)
            .copied()
            .ok_or(GraphError::IndexOutOfRange(v, self.vertex_count()))
    }

    pub fn index_of_label(&self, label: &VertexLabel) -> Option<u32> {
        self.labels.iter().position(|l| l == label).map(|i| i as u32)
    }

    pub fn neighbors(&self, v: u32) -> Result<&[u32], GraphError> {
        self.neighbors
            .get(v as usize)
            .map(|list| list.as_slice())
            .ok_or(GraphError::IndexOutOfRange(v, self.vertex_count()))
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        match self.neighbors.get(u as usize) {
            Some(list) => list.binary_search(&v).is_ok(),
            None => false,
        }
    }

    /// Adjacency rows as 128-bit sets, available when `n <= 128`.
    pub fn adjacency_bits(&self) -> Option<&[u128]> {
        self.bits.as_deref()
    }

    pub fn degree(&self, v: u32) -> Result<usize, GraphError> {
        self.neighbors(v).map(|list| list.len())
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        self.neighbors
            .iter()
            .map(|list| list.len())
            .min()
            .ok_or(GraphError::Empty)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count() == n * (n - 1) / 2
    }

    /// Connected components, each sorted ascending, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Component> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut queue = vec![start];
            seen[start as usize] = true;
            let mut members = Vec::new();
            while let Some(v) = queue.pop() {
                members.push(v);
                for &w in &self.neighbors[v as usize] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        queue.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(Component { vertices: members });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() >= 1 && self.connected_components().len() == 1
    }

    /// The subdivision `S(G)`: every edge `(i, j)` is replaced by a path
    /// `i - s - j` through a fresh vertex labelled `Sub(i, j)`.
    pub fn subdivision(&self) -> Graph {
        let n = self.vertex_count() as u32;
        let mut labels = self.labels.clone();
        let mut edges = Vec::with_capacity(2 * self.edges.len());
        for (t, &(i, j)) in self.edges.iter().enumerate() {
            labels.push(VertexLabel::Sub(i, j));
            let s = n + t as u32;
            edges.push((i, s));
            edges.push((j, s));
        }
        Graph::with_labels(labels, &edges).expect("subdivision produces a valid graph")
    }

    fn require_connected_pair(&self) -> Result<(), GraphError> {
        if self.vertex_count() < 2 {
            return Err(GraphError::TooSmall);
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(())
    }

    /// Vertex connectivity via Menger's theorem: the minimum over
    /// non-adjacent pairs of the maximum number of internally disjoint
    /// paths. `Infinite` exactly for complete graphs.
    pub fn vertex_connectivity(&self) -> Result<ExtendedCount, GraphError> {
        self.require_connected_pair()?;
        if self.is_complete() {
            return Ok(ExtendedCount::Infinite);
        }
        let n = self.vertex_count() as u32;
        let mut best = usize::MAX;
        for s in 0..n {
            for t in s + 1..n {
                if self.has_edge(s, t) {
                    continue;
                }
                best = best.min(self.vertex_flow(s, t));
                if best == 1 {
                    return Ok(ExtendedCount::Finite(1));
                }
            }
        }
        Ok(ExtendedCount::Finite(best))
    }

    /// Edge connectivity via Menger's theorem: the minimum over targets of
    /// the maximum number of edge-disjoint paths from vertex 0.
    pub fn edge_connectivity(&self) -> Result<ExtendedCount, GraphError> {
        self.require_connected_pair()?;
        let n = self.vertex_count() as u32;
        let mut best = usize::MAX;
        for t in 1..n {
            let mut net = FlowNet::new(self.vertex_count());
            for &(u, v) in &self.edges {
                net.add_arc(u, v, 1);
                net.add_arc(v, u, 1);
            }
            best = best.min(net.max_flow(0, t));
            if best == 1 {
                return Ok(ExtendedCount::Finite(1));
            }
        }
        Ok(ExtendedCount::Finite(best))
    }

    /// Maximum number of internally vertex-disjoint `s`-`t` paths for
    /// non-adjacent `s`, `t`, computed on the vertex-split network.
    fn vertex_flow(&self, s: u32, t: u32) -> usize {
        let n = self.vertex_count() as u32;
        // Vertex v splits into in-node 2v and out-node 2v + 1.
        let mut net = FlowNet::new(2 * n as usize);
        for v in 0..n {
            let cap = if v == s || v == t { FlowNet::INF } else { 1 };
            net.add_arc(2 * v, 2 * v + 1, cap);
        }
        for &(u, v) in &self.edges {
            net.add_arc(2 * u + 1, 2 * v, FlowNet::INF);
            net.add_arc(2 * v + 1, 2 * u, FlowNet::INF);
        }
        net.max_flow(2 * s + 1, 2 * t)
    }
}

/// Unit-capacity max-flow network (Edmonds-Karp), sized for the small
/// graphs this crate works with.
struct FlowNet {
    head: Vec<Vec<u32>>,
    to: Vec<u32>,
    cap: Vec<u32>,
}

impl FlowNet {
    const INF: u32 = u32::MAX / 2;

    fn new(nodes: usize) -> FlowNet {
        FlowNet { head: vec![Vec::new(); nodes], to: Vec::new(), cap: Vec::new() }
    }

    fn add_arc(&mut self, a: u32, b: u32, cap: u32) {
        self.head[a as usize].push(self.to.len() as u32);
        self.to.push(b);
        self.cap.push(cap);
        self.head[b as usize].push(self.to.len() as u32);
        self.to.push(a);
        self.cap.push(0);
    }

    fn max_flow(&mut self, s: u32, t: u32) -> usize {
        let mut flow = 0usize;
        loop {
            let mut pred: Vec<Option<u32>> = vec![None; self.head.len()];
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(s);
            pred[s as usize] = Some(u32::MAX);
            while let Some(v) = queue.pop_front() {
                if v == t {
                    break;
                }
                for &arc in &self.head[v as usize] {
                    let w = self.to[arc as usize];
                    if self.cap[arc as usize] > 0 && pred[w as usize].is_none() {
                        pred[w as usize] = Some(arc);
                        queue.push_back(w);
                    }
                }
            }
            if pred[t as usize].is_none() {
                return flow;
            }
            let mut bottleneck = u32::MAX;
            let mut v = t;
            while v != s {
                let arc = pred[v as usize].unwrap();
                bottleneck = bottleneck.min(self.cap[arc as usize]);
                v = self.to[(arc ^ 1) as usize];
            }
            let mut v = t;
            while v != s {
                let arc = pred[v as usize].unwrap();
                self.cap[arc as usize] -= bottleneck;
                self.cap[(arc ^ 1) as usize] += bottleneck;
                v = self.to[(arc ^ 1) as usize];
            }
            flow += bottleneck as usize;
        }
    }
}
