//! Graph representations shared by every other module.
//!
//! All graph values are loop-free and immutable once built. Reflexivity is a
//! property of [`ReflexiveTarget`], never of a stored edge list.

mod canon;
mod enumerate;
mod io;

use std::fmt;

use thiserror::Error;

pub(crate) use canon::oriented_from_code;
pub use canon::{
    canonical_code_oriented, canonical_code_simple, canonical_oriented, canonical_simple,
};
pub use enumerate::{
    connected_graph_classes, connected_graphs, enumerate_colourings, enumerate_connected_graphs,
    enumerate_orientations, Colourings, ConnectedGraphs, EnumerationError, Orientations,
    DEFAULT_ENUMERATION_LIMIT,
};
pub use io::{parse_document, parse_graph, serialize_graph, GraphDocument, ParseError};

/// Dense vertex index `0..n`.
pub type VertexId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("self-loop at vertex {0}")]
    Loop(VertexId),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("arcs {0}->{1} and {1}->{0} form a digon")]
    Digon(VertexId, VertexId),
    #[error("arc {0}->{1} is not present")]
    MissingArc(VertexId, VertexId),
    #[error("edge {0} {1} is not present")]
    MissingEdge(VertexId, VertexId),
    #[error("vertices {0} and {1} are already adjacent")]
    AlreadyAdjacent(VertexId, VertexId),
    #[error("cannot identify a {0} edge with a {1} edge")]
    ColourMismatch(Colour, Colour),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub fn flip(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Colour::Red => 'r',
            Colour::Blue => 'b',
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Colour::Red => "red",
            Colour::Blue => "blue",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Simple,
    Oriented,
    Coloured,
}

impl GraphKind {
    /// Keyword used on the `kind` line of the graph file format.
    pub fn keyword(self) -> &'static str {
        match self {
            GraphKind::Simple => "graph",
            GraphKind::Oriented => "oriented",
            GraphKind::Coloured => "2ec",
        }
    }
}

fn check_vertex(v: VertexId, n: usize) -> Result<(), GraphError> {
    if v < n {
        Ok(())
    } else {
        Err(GraphError::VertexOutOfRange { vertex: v, n })
    }
}

fn ordered(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Maps a vertex of a graph to its index after deleting `removed`.
fn shift_after_removal(v: VertexId, removed: VertexId) -> VertexId {
    if v > removed {
        v - 1
    } else {
        v
    }
}

/// Undirected simple graph: no loops, no parallel edges.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimpleGraph {
    n: usize,
    /// Sorted, each pair stored as `(min, max)`.
    edges: Vec<(VertexId, VertexId)>,
}

impl SimpleGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            list.push(ordered(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(SimpleGraph { n, edges: list })
    }

    pub fn edgeless(n: usize) -> Self {
        SimpleGraph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
        SimpleGraph::new(n, edges).expect("complete graph is simple")
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        SimpleGraph::new(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        SimpleGraph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(min, max)` pairs.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.binary_search(&ordered(u, v)).is_ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn neighbours(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<_> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| match (a == v, b == v) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Connected in the usual sense; the graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn with_edge(&self, u: VertexId, v: VertexId) -> Result<Self, GraphError> {
        SimpleGraph::new(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    /// Deletes `v` and renumbers later vertices down by one.
    pub fn remove_vertex(&self, v: VertexId) -> Self {
        assert!(v < self.n);
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift_after_removal(a, v), shift_after_removal(b, v)));
        SimpleGraph::new(self.n - 1, edges).expect("vertex deletion keeps the graph simple")
    }

    /// Renames vertex `v` to `perm[v]`; `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[VertexId]) -> Self {
        assert_eq!(perm.len(), self.n);
        SimpleGraph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabelling by a permutation keeps the graph simple")
    }
}

/// Antisymmetric, loop-free digraph.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrientedGraph {
    n: usize,
    /// Sorted `(tail, head)` pairs.
    arcs: Vec<(VertexId, VertexId)>,
}

impl OrientedGraph {
    pub fn new<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut list = Vec::new();
        for (u, v) in arcs {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            list.push((u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        for &(u, v) in &list {
            if u < v && list.binary_search(&(v, u)).is_ok() {
                return Err(GraphError::Digon(u, v));
            }
        }
        Ok(OrientedGraph { n, arcs: list })
    }

    pub fn edgeless(n: usize) -> Self {
        OrientedGraph {
            n,
            arcs: Vec::new(),
        }
    }

    /// `0 -> 1 -> ... -> (n-1) -> 0`.
    pub fn directed_cycle(n: usize) -> Self {
        assert!(n >= 3, "a directed cycle needs at least three vertices");
        OrientedGraph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is oriented")
    }

    /// `0 -> 1 -> ... -> (n-1)`.
    pub fn directed_path(n: usize) -> Self {
        OrientedGraph::new(n, (1..n).map(|v| (v - 1, v))).expect("path is oriented")
    }

    /// Tournament with `i -> j` whenever `i < j`.
    pub fn transitive_tournament(n: usize) -> Self {
        let arcs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
        OrientedGraph::new(n, arcs).expect("transitive tournament is oriented")
    }

    /// Orients every edge of `g` from its smaller to its larger end.
    pub fn from_underlying_ascending(g: &SimpleGraph) -> Self {
        OrientedGraph {
            n: g.n,
            arcs: g.edges.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(VertexId, VertexId)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn out_neighbours(&self, v: VertexId) -> Vec<VertexId> {
        self.arcs.iter().filter(|a| a.0 == v).map(|a| a.1).collect()
    }

    pub fn in_neighbours(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<_> = self.arcs.iter().filter(|a| a.1 == v).map(|a| a.0).collect();
        out.sort_unstable();
        out
    }

    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph::new(self.n, self.arcs.iter().copied())
            .expect("oriented graph has simple underlying graph")
    }

    /// Every arc reversed.
    pub fn converse(&self) -> Self {
        OrientedGraph::new(self.n, self.arcs.iter().map(|&(u, v)| (v, u)))
            .expect("converse is oriented")
    }

    pub fn remove_vertex(&self, v: VertexId) -> Self {
        assert!(v < self.n);
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift_after_removal(a, v), shift_after_removal(b, v)));
        OrientedGraph::new(self.n - 1, arcs).expect("vertex deletion keeps the graph oriented")
    }

    pub fn relabel(&self, perm: &[VertexId]) -> Self {
        assert_eq!(perm.len(), self.n);
        OrientedGraph::new(self.n, self.arcs.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabelling by a permutation keeps the graph oriented")
    }
}

/// Simple graph whose edges are each coloured red or blue.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TwoEdgeColouredGraph {
    n: usize,
    /// Sorted by `(min, max)` endpoint pair.
    edges: Vec<(VertexId, VertexId, Colour)>,
}

impl TwoEdgeColouredGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Colour)>,
    {
        let mut list = Vec::new();
        for (u, v, c) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            let (a, b) = ordered(u, v);
            list.push((a, b, c));
        }
        list.sort_unstable();
        if let Some(w) = list
            .windows(2)
            .find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1))
        {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(TwoEdgeColouredGraph { n, edges: list })
    }

    /// Every edge of `g` in colour `c`.
    pub fn monochromatic(g: &SimpleGraph, c: Colour) -> Self {
        TwoEdgeColouredGraph {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| (u, v, c)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId, Colour)] {
        &self.edges
    }

    pub fn red_edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges
            .iter()
            .filter(|e| e.2 == Colour::Red)
            .map(|e| (e.0, e.1))
    }

    pub fn blue_edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges
            .iter()
            .filter(|e| e.2 == Colour::Blue)
            .map(|e| (e.0, e.1))
    }

    pub fn colour(&self, u: VertexId, v: VertexId) -> Option<Colour> {
        let (a, b) = ordered(u, v);
        self.edges
            .binary_search_by(|e| (e.0, e.1).cmp(&(a, b)))
            .ok()
            .map(|i| self.edges[i].2)
    }

    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph {
            n: self.n,
            edges: self.edges.iter().map(|e| (e.0, e.1)).collect(),
        }
    }

    /// Exchanges red and blue on every edge.
    pub fn swap_colours(&self) -> Self {
        TwoEdgeColouredGraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|&(u, v, c)| (u, v, c.flip()))
                .collect(),
        }
    }

    pub fn is_monochromatic(&self) -> bool {
        self.edges.windows(2).all(|w| w[0].2 == w[1].2)
    }

    pub fn remove_vertex(&self, v: VertexId) -> Self {
        assert!(v < self.n);
        let edges = self
            .edges
            .iter()
            .filter(|e| e.0 != v && e.1 != v)
            .map(|&(a, b, c)| (shift_after_removal(a, v), shift_after_removal(b, v), c));
        TwoEdgeColouredGraph::new(self.n - 1, edges)
            .expect("vertex deletion keeps the graph simple")
    }

    pub fn relabel(&self, perm: &[VertexId]) -> Self {
        assert_eq!(perm.len(), self.n);
        TwoEdgeColouredGraph::new(
            self.n,
            self.edges.iter().map(|&(u, v, c)| (perm[u], perm[v], c)),
        )
        .expect("relabelling by a permutation keeps the graph simple")
    }
}

/// An oriented graph or a 2-edge-coloured graph: the objects convexity is defined on.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum MixedGraph {
    Oriented(OrientedGraph),
    Coloured(TwoEdgeColouredGraph),
}

impl MixedGraph {
    pub fn n(&self) -> usize {
        match self {
            MixedGraph::Oriented(g) => g.n(),
            MixedGraph::Coloured(g) => g.n(),
        }
    }

    pub fn kind(&self) -> GraphKind {
        match self {
            MixedGraph::Oriented(_) => GraphKind::Oriented,
            MixedGraph::Coloured(_) => GraphKind::Coloured,
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            MixedGraph::Oriented(g) => g.arc_count(),
            MixedGraph::Coloured(g) => g.edge_count(),
        }
    }

    /// Endpoints of every arc (as `(tail, head)`) or coloured edge (as `(min, max)`).
    pub fn edge_ends(&self) -> Vec<(VertexId, VertexId)> {
        match self {
            MixedGraph::Oriented(g) => g.arcs().to_vec(),
            MixedGraph::Coloured(g) => g.edges().iter().map(|e| (e.0, e.1)).collect(),
        }
    }

    pub fn underlying(&self) -> SimpleGraph {
        match self {
            MixedGraph::Oriented(g) => g.underlying(),
            MixedGraph::Coloured(g) => g.underlying(),
        }
    }

    pub fn as_oriented(&self) -> Option<&OrientedGraph> {
        match self {
            MixedGraph::Oriented(g) => Some(g),
            MixedGraph::Coloured(_) => None,
        }
    }

    pub fn as_coloured(&self) -> Option<&TwoEdgeColouredGraph> {
        match self {
            MixedGraph::Coloured(g) => Some(g),
            MixedGraph::Oriented(_) => None,
        }
    }

    pub fn remove_vertex(&self, v: VertexId) -> Self {
        match self {
            MixedGraph::Oriented(g) => g.remove_vertex(v).into(),
            MixedGraph::Coloured(g) => g.remove_vertex(v).into(),
        }
    }

    pub fn relabel(&self, perm: &[VertexId]) -> Self {
        match self {
            MixedGraph::Oriented(g) => g.relabel(perm).into(),
            MixedGraph::Coloured(g) => g.relabel(perm).into(),
        }
    }

    /// Subgraph induced by `vertices`, which become `0..k` in the given order.
    pub fn induced(&self, vertices: &[VertexId]) -> Self {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let keep = |u: VertexId, v: VertexId| pos[u] != usize::MAX && pos[v] != usize::MAX;
        let k = vertices.len();
        match self {
            MixedGraph::Oriented(g) => {
                let arcs = g
                    .arcs()
                    .iter()
                    .filter(|&&(u, v)| keep(u, v))
                    .map(|&(u, v)| (pos[u], pos[v]));
                OrientedGraph::new(k, arcs)
                    .expect("induced subgraph of an oriented graph")
                    .into()
            }
            MixedGraph::Coloured(g) => {
                let edges = g
                    .edges()
                    .iter()
                    .filter(|e| keep(e.0, e.1))
                    .map(|&(u, v, c)| (pos[u], pos[v], c));
                TwoEdgeColouredGraph::new(k, edges)
                    .expect("induced subgraph of a coloured graph")
                    .into()
            }
        }
    }

    /// Converse for oriented graphs, colour swap for 2-edge-coloured graphs.
    pub fn dual(&self) -> Self {
        match self {
            MixedGraph::Oriented(g) => g.converse().into(),
            MixedGraph::Coloured(g) => g.swap_colours().into(),
        }
    }
}

impl From<OrientedGraph> for MixedGraph {
    fn from(g: OrientedGraph) -> Self {
        MixedGraph::Oriented(g)
    }
}

impl From<TwoEdgeColouredGraph> for MixedGraph {
    fn from(g: TwoEdgeColouredGraph) -> Self {
        MixedGraph::Coloured(g)
    }
}

/// Homomorphism codomain with an implicit loop at every vertex (one loop of
/// each colour in the 2-edge-coloured case).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ReflexiveTarget(MixedGraph);

impl ReflexiveTarget {
    pub fn new(graph: impl Into<MixedGraph>) -> Self {
        ReflexiveTarget(graph.into())
    }

    /// The arcs or coloured edges between distinct vertices.
    pub fn graph(&self) -> &MixedGraph {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn kind(&self) -> GraphKind {
        self.0.kind()
    }

    pub fn into_inner(self) -> MixedGraph {
        self.0
    }
}

/// Any graph that can appear in a graph file.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ParsedGraph {
    Simple(SimpleGraph),
    Mixed(MixedGraph),
}

impl ParsedGraph {
    pub fn kind(&self) -> GraphKind {
        match self {
            ParsedGraph::Simple(_) => GraphKind::Simple,
            ParsedGraph::Mixed(g) => g.kind(),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            ParsedGraph::Simple(g) => g.n(),
            ParsedGraph::Mixed(g) => g.n(),
        }
    }
}

impl From<SimpleGraph> for ParsedGraph {
    fn from(g: SimpleGraph) -> Self {
        ParsedGraph::Simple(g)
    }
}

impl From<MixedGraph> for ParsedGraph {
    fn from(g: MixedGraph) -> Self {
        ParsedGraph::Mixed(g)
    }
}

impl From<OrientedGraph> for ParsedGraph {
    fn from(g: OrientedGraph) -> Self {
        ParsedGraph::Mixed(g.into())
    }
}

impl From<TwoEdgeColouredGraph> for ParsedGraph {
    fn from(g: TwoEdgeColouredGraph) -> Self {
        ParsedGraph::Mixed(g.into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn digons_are_rejected() {
        assert_eq!(
            OrientedGraph::new(2, [(0, 1), (1, 0)]),
            Err(GraphError::Digon(0, 1))
        );
    }

    #[test]
    fn loops_and_duplicates_are_rejected() {
        assert_eq!(SimpleGraph::new(2, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            SimpleGraph::new(2, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            TwoEdgeColouredGraph::new(2, [(0, 1, Colour::Red), (1, 0, Colour::Blue)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            OrientedGraph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn vertex_removal_renumbers() {
        let g = OrientedGraph::directed_cycle(4).remove_vertex(1);
        assert_eq!(g.arcs(), &[(1, 2), (2, 0)]);
    }

    #[test]
    fn connectivity() {
        assert!(SimpleGraph::path(4).is_connected());
        assert!(!SimpleGraph::new(4, [(0, 1), (2, 3)])
            .unwrap()
            .is_connected());
        assert!(SimpleGraph::edgeless(1).is_connected());
    }

    proptest! {
        // Any arc set containing both directions of some pair must be refused.
        #[test]
        fn digon_insertion_always_fails(
            n in 2usize..7,
            raw in proptest::collection::vec((0usize..7, 0usize..7), 0..12),
            pick in 0usize..100,
        ) {
            let mut arcs: Vec<_> = raw.into_iter().map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u != v).collect();
            arcs.sort_unstable();
            arcs.dedup();
            let mut clean = Vec::new();
            for &(u, v) in &arcs {
                if !clean.contains(&(v, u)) {
                    clean.push((u, v));
                }
            }
            prop_assume!(!clean.is_empty());
            let (u, v) = clean[pick % clean.len()];
            let g = OrientedGraph::new(n, clean.clone());
            prop_assert!(g.is_ok());
            clean.push((v, u));
            prop_assert_eq!(OrientedGraph::new(n, clean), Err(GraphError::Digon(u.min(v), u.max(v))));
        }
    }
}
