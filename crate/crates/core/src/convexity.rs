//! Convex sets and hulls under 2-dipath (oriented) and alternating 2-path
//! (2-edge-coloured) convexity.
//!
//! Both graph kinds compile to the same shape: each vertex `c` carries two
//! neighbour masks, and `c` is the centre of a qualifying 2-path with ends in
//! `S` exactly when both masks meet `S`. For oriented graphs the masks are the
//! in- and out-neighbourhoods; for 2-edge-coloured graphs the red and blue
//! neighbourhoods. Antisymmetry (resp. one colour per edge) guarantees the two
//! ends are distinct.

use thiserror::Error;

use crate::bitset::{Mask, VertexSet};
use crate::graph::{Colour, MixedGraph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConvexityError {
    #[error("vertex set is bound to {set} vertices but the graph has {graph}")]
    BindingMismatch { set: usize, graph: usize },
    #[error("graph has no arcs or edges")]
    Edgeless,
}

/// Compiled two-sided adjacency used by every hull computation.
#[derive(Clone, Debug)]
pub(crate) struct Closure<M> {
    pub(crate) n: usize,
    /// `(in, out)` for oriented graphs, `(red, blue)` for coloured graphs.
    pub(crate) sides: Vec<(M, M)>,
    pub(crate) nbrs: Vec<M>,
    /// Arc tails/heads or edge ends, in the graph's sorted order.
    pub(crate) edges: Vec<(VertexId, VertexId)>,
}

impl<M: Mask> Closure<M> {
    pub(crate) fn new(g: &MixedGraph) -> Self {
        let n = g.n();
        let mut sides = vec![(M::empty(n), M::empty(n)); n];
        let mut nbrs = vec![M::empty(n); n];
        match g {
            MixedGraph::Oriented(o) => {
                for &(u, v) in o.arcs() {
                    sides[v].0.insert(u);
                    sides[u].1.insert(v);
                }
            }
            MixedGraph::Coloured(c) => {
                for &(u, v, colour) in c.edges() {
                    for (x, y) in [(u, v), (v, u)] {
                        match colour {
                            Colour::Red => sides[x].0.insert(y),
                            Colour::Blue => sides[x].1.insert(y),
                        };
                    }
                }
            }
        }
        for (u, v) in g.edge_ends() {
            nbrs[u].insert(v);
            nbrs[v].insert(u);
        }
        Closure {
            n,
            sides,
            nbrs,
            edges: g.edge_ends(),
        }
    }

    #[inline]
    pub(crate) fn is_centre(&self, c: VertexId, s: &M) -> bool {
        let (a, b) = &self.sides[c];
        a.intersects(s) && b.intersects(s)
    }

    pub(crate) fn centres(&self, s: &M) -> M {
        let mut out = M::empty(self.n);
        for c in 0..self.n {
            if self.is_centre(c, s) {
                out.insert(c);
            }
        }
        out
    }

    /// Least fixpoint above `start`. `on_layer` sees every strictly larger
    /// layer; the return value is the hull.
    ///
    /// Only neighbours of vertices added in the previous round can become new
    /// centres, so each round scans that frontier instead of all vertices.
    pub(crate) fn close(&self, start: M, mut on_layer: impl FnMut(&M)) -> M {
        let mut hull = start;
        let mut fresh = hull.clone();
        loop {
            let mut candidates = M::empty(self.n);
            for v in fresh.ones() {
                candidates.union_with(&self.nbrs[v]);
            }
            candidates.difference_with(&hull);
            let mut added = M::empty(self.n);
            for c in candidates.ones() {
                if self.is_centre(c, &hull) {
                    added.insert(c);
                }
            }
            if added.is_empty() {
                return hull;
            }
            hull.union_with(&added);
            on_layer(&hull);
            fresh = added;
        }
    }

    /// Whether the hull of `{u, v}` is the whole vertex set.
    pub(crate) fn spans(&self, u: VertexId, v: VertexId) -> bool {
        let mut start = M::empty(self.n);
        start.insert(u);
        start.insert(v);
        self.close(start, |_| {}).count() == self.n
    }

    /// Index into `edges` of the first edge whose hull is not everything.
    pub(crate) fn first_deficient_edge(&self) -> Option<usize> {
        self.edges.iter().position(|&(u, v)| !self.spans(u, v))
    }
}

/// Sequence `S_0 ⊂ S_1 ⊂ … ⊂ S_k` produced by repeatedly adding centres; the
/// last layer is the hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullTrace {
    layers: Vec<VertexSet>,
}

impl HullTrace {
    pub fn layers(&self) -> &[VertexSet] {
        &self.layers
    }

    pub fn hull(&self) -> &VertexSet {
        self.layers
            .last()
            .expect("a trace has at least the starting layer")
    }

    pub fn into_hull(mut self) -> VertexSet {
        self.layers
            .pop()
            .expect("a trace has at least the starting layer")
    }
}

fn check_binding(g: &MixedGraph, s: &VertexSet) -> Result<(), ConvexityError> {
    if s.capacity() == g.n() {
        Ok(())
    } else {
        Err(ConvexityError::BindingMismatch {
            set: s.capacity(),
            graph: g.n(),
        })
    }
}

/// Vertices that are the centre of a 2-dipath (alternating 2-path) with both
/// ends in `s`. Members of `s` may appear in the result.
pub fn two_path_centres(g: &MixedGraph, s: &VertexSet) -> Result<VertexSet, ConvexityError> {
    check_binding(g, s)?;
    Ok(Closure::<VertexSet>::new(g).centres(s))
}

pub fn convex_hull(g: &MixedGraph, s: &VertexSet) -> Result<HullTrace, ConvexityError> {
    check_binding(g, s)?;
    let closure = Closure::<VertexSet>::new(g);
    let mut layers = vec![s.clone()];
    closure.close(s.clone(), |layer| layers.push(layer.clone()));
    Ok(HullTrace { layers })
}

pub fn is_convex(g: &MixedGraph, s: &VertexSet) -> Result<bool, ConvexityError> {
    Ok(two_path_centres(g, s)?.is_subset(s))
}

/// Whether every arc/edge `uv` has `conv({u, v}) = V`. Edgeless graphs are
/// rejected.
pub fn is_complete_convex(g: &MixedGraph) -> Result<bool, ConvexityError> {
    Ok(deficient_edge(g)?.is_none())
}

/// First arc/edge (in sorted order) whose hull misses a vertex, together
/// with that hull; `None` when `g` is complete convex.
pub fn deficient_edge(
    g: &MixedGraph,
) -> Result<Option<((VertexId, VertexId), VertexSet)>, ConvexityError> {
    if g.edge_count() == 0 {
        return Err(ConvexityError::Edgeless);
    }
    let n = g.n();
    let hit = if n <= 64 {
        let closure = Closure::<u64>::new(g);
        closure.first_deficient_edge().map(|i| {
            let (u, v) = closure.edges[i];
            let hull = closure.close(1 << u | 1 << v, |_| {});
            ((u, v), VertexSet::from_low_word(n, hull))
        })
    } else {
        let closure = Closure::<VertexSet>::new(g);
        closure.first_deficient_edge().map(|i| {
            let (u, v) = closure.edges[i];
            let hull = closure.close(VertexSet::from_vertices(n, [u, v]), |_| {});
            ((u, v), hull)
        })
    };
    Ok(hit)
}

/// Hull queries against one graph without recompiling its adjacency.
pub struct HullEngine {
    inner: Engine,
}

enum Engine {
    Small(Closure<u64>),
    Wide(Closure<VertexSet>),
}

impl HullEngine {
    pub fn new(g: &MixedGraph) -> Self {
        let inner = if g.n() <= 64 {
            Engine::Small(Closure::new(g))
        } else {
            Engine::Wide(Closure::new(g))
        };
        HullEngine { inner }
    }

    pub fn n(&self) -> usize {
        match &self.inner {
            Engine::Small(c) => c.n,
            Engine::Wide(c) => c.n,
        }
    }

    pub fn hull(&self, s: &VertexSet) -> Result<VertexSet, ConvexityError> {
        let n = self.n();
        if s.capacity() != n {
            return Err(ConvexityError::BindingMismatch {
                set: s.capacity(),
                graph: n,
            });
        }
        Ok(match &self.inner {
            Engine::Small(c) => VertexSet::from_low_word(n, c.close(s.low_word(), |_| {})),
            Engine::Wide(c) => c.close(s.clone(), |_| {}),
        })
    }

    pub fn edge_spans(&self, u: VertexId, v: VertexId) -> bool {
        match &self.inner {
            Engine::Small(c) => c.spans(u, v),
            Engine::Wide(c) => c.spans(u, v),
        }
    }

    pub fn is_complete_convex(&self) -> bool {
        match &self.inner {
            Engine::Small(c) => c.first_deficient_edge().is_none(),
            Engine::Wide(c) => c.first_deficient_edge().is_none(),
        }
    }
}
