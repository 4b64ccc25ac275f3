//! Homomorphisms into reflexive and irreflexive targets, the quotient witness
//! for non-complete-convex graphs, and oriented / simple chromatic numbers.

use std::collections::HashSet;
use std::sync::OnceLock;

use rayon::prelude::*;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::convexity::{deficient_edge, is_convex, ConvexityError};
use crate::graph::{
    canonical_code_oriented, Colour, EnumerationError, GraphError, GraphKind, MixedGraph,
    OrientedGraph, ReflexiveTarget, TwoEdgeColouredGraph, VertexId,
};

/// Largest tournament (and source graph) size the chromatic searches accept
/// by default.
pub const DEFAULT_TOURNAMENT_LIMIT: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error("map has {got} entries, source has {expected} vertices")]
    WrongLength { got: usize, expected: usize },
    #[error("image {image} of vertex {vertex} is not a target vertex")]
    ImageOutOfRange { vertex: VertexId, image: VertexId },
    #[error("source is {source_kind:?} but target is {target_kind:?}")]
    KindMismatch {
        source_kind: GraphKind,
        target_kind: GraphKind,
    },
    #[error("edge {0} {1} is not preserved")]
    NotPreserved(VertexId, VertexId),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuotientError {
    #[error(transparent)]
    Convexity(#[from] ConvexityError),
    #[error("vertex set is not convex")]
    NotConvex,
    #[error("vertex set contains no arc or edge")]
    NoInternalEdge,
    #[error("vertex set is the whole vertex set")]
    Full,
    /// Unreachable for convex sets; reported rather than panicking so the
    /// verification harness can flag it.
    #[error("contraction merges opposite arcs or differently coloured edges between {0} and {1}")]
    Conflict(VertexId, VertexId),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChromaticError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("graph has no arcs, so every homomorphism is trivial")]
    Edgeless,
}

/// Homomorphism codomain: either every vertex carries loops or none does.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Reflexive(ReflexiveTarget),
    Irreflexive(MixedGraph),
}

impl Target {
    /// Arcs or coloured edges between distinct vertices.
    pub fn graph(&self) -> &MixedGraph {
        match self {
            Target::Reflexive(t) => t.graph(),
            Target::Irreflexive(g) => g,
        }
    }

    pub fn is_reflexive(&self) -> bool {
        matches!(self, Target::Reflexive(_))
    }

    pub fn n(&self) -> usize {
        self.graph().n()
    }
}

impl From<ReflexiveTarget> for Target {
    fn from(t: ReflexiveTarget) -> Self {
        Target::Reflexive(t)
    }
}

/// A vertex map that has been checked to preserve every arc (with direction)
/// or coloured edge (with colour).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomMap {
    image: Vec<VertexId>,
    source: MixedGraph,
    target: Target,
}

impl HomMap {
    pub fn new(source: MixedGraph, target: Target, image: Vec<VertexId>) -> Result<Self, HomError> {
        if source.kind() != target.graph().kind() {
            return Err(HomError::KindMismatch {
                source_kind: source.kind(),
                target_kind: target.graph().kind(),
            });
        }
        if image.len() != source.n() {
            return Err(HomError::WrongLength {
                got: image.len(),
                expected: source.n(),
            });
        }
        if let Some((vertex, &image)) = image.iter().enumerate().find(|(_, &a)| a >= target.n()) {
            return Err(HomError::ImageOutOfRange { vertex, image });
        }
        let reflexive = target.is_reflexive();
        let ok = |a: VertexId, b: VertexId, preserved: bool| (reflexive && a == b) || preserved;
        match (&source, target.graph()) {
            (MixedGraph::Oriented(g), MixedGraph::Oriented(t)) => {
                for &(u, v) in g.arcs() {
                    let (a, b) = (image[u], image[v]);
                    if !ok(a, b, t.has_arc(a, b)) {
                        return Err(HomError::NotPreserved(u, v));
                    }
                }
            }
            (MixedGraph::Coloured(g), MixedGraph::Coloured(t)) => {
                for &(u, v, c) in g.edges() {
                    let (a, b) = (image[u], image[v]);
                    if !ok(a, b, t.colour(a, b) == Some(c)) {
                        return Err(HomError::NotPreserved(u, v));
                    }
                }
            }
            _ => unreachable!("kinds were compared above"),
        }
        Ok(HomMap {
            image,
            source,
            target,
        })
    }

    pub fn image(&self) -> &[VertexId] {
        &self.image
    }

    pub fn source(&self) -> &MixedGraph {
        &self.source
    }

    pub fn target(&self) -> &Target {
        &self.target
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomClass {
    /// Every arc/edge lands on a loop, all at one target vertex (vacuously
    /// true of an edgeless source).
    Trivial,
    /// Some arc/edge lands on a loop, but the map is not trivial.
    Improper,
    /// No arc/edge lands on a loop.
    Proper,
}

pub fn classify(h: &HomMap) -> HomClass {
    let ends = h.source.edge_ends();
    let looped: Vec<VertexId> = ends
        .iter()
        .filter(|&&(u, v)| h.image[u] == h.image[v])
        .map(|&(u, _)| h.image[u])
        .collect();
    if looped.len() == ends.len() && looped.windows(2).all(|w| w[0] == w[1]) {
        HomClass::Trivial
    } else if looped.is_empty() {
        HomClass::Proper
    } else {
        HomClass::Improper
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchMode {
    Any,
    /// Improper or proper.
    Nontrivial,
    Proper,
}

#[derive(Clone, Copy)]
enum Rel {
    Out,
    In,
    Red,
    Blue,
}

/// Backtracking search with forward checking over bit-mask domains.
struct HomSearch {
    order: Vec<VertexId>,
    rels: Vec<Vec<(VertexId, Rel)>>,
    /// `out_ok[a]`: images `b` allowed for `w` when `v -> w` and `v ↦ a`.
    out_ok: Vec<u64>,
    in_ok: Vec<u64>,
    red_ok: Vec<u64>,
    blue_ok: Vec<u64>,
    /// Vertices incident with at least one arc/edge.
    active: Vec<bool>,
    nontrivial: bool,
    image: Vec<VertexId>,
}

impl HomSearch {
    fn compat(&self, rel: Rel, a: VertexId) -> u64 {
        match rel {
            Rel::Out => self.out_ok[a],
            Rel::In => self.in_ok[a],
            Rel::Red => self.red_ok[a],
            Rel::Blue => self.blue_ok[a],
        }
    }

    fn run(&mut self, depth: usize, domains: &[u64], seen: Seen) -> bool {
        if depth == self.order.len() {
            return !(self.nontrivial && matches!(seen, Seen::Same(_)));
        }
        let v = self.order[depth];
        let mut choices = domains[v];
        while choices != 0 {
            let a = choices.trailing_zeros() as usize;
            choices &= choices - 1;
            let mut next = domains.to_vec();
            next[v] = 1 << a;
            let mut dead = false;
            for &(w, rel) in &self.rels[v] {
                next[w] &= self.compat(rel, a);
                if next[w] == 0 {
                    dead = true;
                    break;
                }
            }
            if dead {
                continue;
            }
            let seen = match seen {
                _ if !self.active[v] => seen,
                Seen::Nothing => Seen::Same(a),
                Seen::Same(c) if c == a => seen,
                _ => Seen::Mixed,
            };
            self.image[v] = a;
            if self.run(depth + 1, &next, seen) {
                return true;
            }
        }
        false
    }
}

/// Images of the vertices incident with an arc/edge, assigned so far.
#[derive(Clone, Copy)]
enum Seen {
    Nothing,
    Same(VertexId),
    Mixed,
}

/// Breadth-first order, each component rooted at its (first) vertex of
/// maximum degree.
fn bfs_order(g: &MixedGraph) -> Vec<VertexId> {
    let n = g.n();
    let adj = g.underlying().adjacency();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let root = (0..n)
            .filter(|&v| !seen[v])
            .max_by_key(|&v| (adj[v].len(), std::cmp::Reverse(v)))
            .expect("an unvisited vertex remains");
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            for &w in &adj[order[i]] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    order
}

/// Searches for a homomorphism of the requested class. Deterministic: the
/// first map found in a fixed vertex and value order is returned.
///
/// Returns `None` when the kinds differ or the target has more than 64
/// vertices' worth of domain.
pub fn find_homomorphism(g: &MixedGraph, target: &Target, mode: SearchMode) -> Option<HomMap> {
    let t = target.graph();
    let (n, nt) = (g.n(), t.n());
    assert!(nt <= 64, "homomorphism targets are limited to 64 vertices");
    if g.kind() != t.kind() || (n > 0 && nt == 0) {
        return None;
    }
    let loops = target.is_reflexive() && mode != SearchMode::Proper;
    let loop_mask = |a: usize| if loops { 1u64 << a } else { 0 };
    let mut out_ok: Vec<u64> = (0..nt).map(loop_mask).collect();
    let mut in_ok = out_ok.clone();
    let mut red_ok = out_ok.clone();
    let mut blue_ok = out_ok.clone();
    let mut rels = vec![Vec::new(); n];
    let mut active = vec![false; n];
    match (g, t) {
        (MixedGraph::Oriented(g), MixedGraph::Oriented(t)) => {
            for &(a, b) in t.arcs() {
                out_ok[a] |= 1 << b;
                in_ok[b] |= 1 << a;
            }
            for &(u, v) in g.arcs() {
                rels[u].push((v, Rel::Out));
                rels[v].push((u, Rel::In));
                active[u] = true;
                active[v] = true;
            }
        }
        (MixedGraph::Coloured(g), MixedGraph::Coloured(t)) => {
            for &(a, b, c) in t.edges() {
                let table = if c == Colour::Red {
                    &mut red_ok
                } else {
                    &mut blue_ok
                };
                table[a] |= 1 << b;
                table[b] |= 1 << a;
            }
            for &(u, v, c) in g.edges() {
                let rel = if c == Colour::Red {
                    Rel::Red
                } else {
                    Rel::Blue
                };
                rels[u].push((v, rel));
                rels[v].push((u, rel));
                active[u] = true;
                active[v] = true;
            }
        }
        _ => return None,
    }
    let nontrivial = mode == SearchMode::Nontrivial;
    if nontrivial && !active.iter().any(|&a| a) {
        return None;
    }
    let mut search = HomSearch {
        order: bfs_order(g),
        rels,
        out_ok,
        in_ok,
        red_ok,
        blue_ok,
        active,
        nontrivial,
        image: vec![0; n],
    };
    let full = crate::bitset::low_bits(nt);
    if !search.run(0, &vec![full; n], Seen::Nothing) {
        return None;
    }
    let h = HomMap::new(g.clone(), target.clone(), search.image)
        .expect("search only builds homomorphisms");
    debug_assert!(match mode {
        SearchMode::Any => true,
        SearchMode::Nontrivial => classify(&h) != HomClass::Trivial,
        SearchMode::Proper => classify(&h) == HomClass::Proper,
    });
    Some(h)
}

/// Contracts a convex set `s` to one vertex of a reflexive target. The
/// contracted vertex is numbered by the smallest member of `s`; all other
/// vertices keep their relative order.
pub fn quotient_by_convex(
    g: &MixedGraph,
    s: &VertexSet,
) -> Result<(ReflexiveTarget, HomMap), QuotientError> {
    if !is_convex(g, s)? {
        return Err(QuotientError::NotConvex);
    }
    if s.is_full() {
        return Err(QuotientError::Full);
    }
    if !g
        .edge_ends()
        .iter()
        .any(|&(u, v)| s.contains(u) && s.contains(v))
    {
        return Err(QuotientError::NoInternalEdge);
    }
    let rep = s.iter().next().expect("s contains an edge");
    let mut image = vec![0; g.n()];
    let mut next = 0;
    for (v, slot) in image.iter_mut().enumerate() {
        if s.contains(v) && v != rep {
            continue;
        }
        *slot = next;
        next += 1;
    }
    for v in s.iter() {
        image[v] = image[rep];
    }
    let m = next;
    let conflict = |e: GraphError| match e {
        GraphError::DuplicateEdge(a, b) | GraphError::Digon(a, b) => QuotientError::Conflict(a, b),
        other => unreachable!("quotient vertices are in range and loop-free: {other}"),
    };
    let quotient: MixedGraph = match g {
        MixedGraph::Oriented(o) => {
            let arcs: HashSet<_> = o
                .arcs()
                .iter()
                .map(|&(u, v)| (image[u], image[v]))
                .filter(|(a, b)| a != b)
                .collect();
            OrientedGraph::new(m, arcs).map_err(conflict)?.into()
        }
        MixedGraph::Coloured(c) => {
            let edges: HashSet<_> = c
                .edges()
                .iter()
                .map(|&(u, v, col)| (image[u].min(image[v]), image[u].max(image[v]), col))
                .filter(|(a, b, _)| a != b)
                .collect();
            TwoEdgeColouredGraph::new(m, edges)
                .map_err(conflict)?
                .into()
        }
    };
    let target = ReflexiveTarget::new(quotient);
    let h = HomMap::new(g.clone(), Target::Reflexive(target.clone()), image)
        .expect("quotient map is a homomorphism");
    Ok((target, h))
}

/// An improper homomorphism to a reflexive target, or `None` exactly when
/// `g` is complete convex.
pub fn admits_improper(
    g: &MixedGraph,
) -> Result<Option<(ReflexiveTarget, HomMap)>, ConvexityError> {
    let Some((_, hull)) = deficient_edge(g)? else {
        return Ok(None);
    };
    let witness =
        quotient_by_convex(g, &hull).expect("the hull of a deficient edge is a proper convex set");
    Ok(Some(witness))
}

/// Orientation of a complete graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tournament(OrientedGraph);

impl Tournament {
    /// Wraps `g` if it has exactly one arc between every pair of vertices.
    pub fn new(g: OrientedGraph) -> Option<Self> {
        let n = g.n();
        (g.arc_count() == n * n.saturating_sub(1) / 2).then_some(Tournament(g))
    }

    pub fn graph(&self) -> &OrientedGraph {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn into_inner(self) -> OrientedGraph {
        self.0
    }
}

fn labelled_tournament(k: usize, index: u64) -> Tournament {
    let mut i = 0;
    let mut arcs = Vec::new();
    for v in 1..k {
        for u in 0..v {
            arcs.push(if index >> i & 1 == 1 { (v, u) } else { (u, v) });
            i += 1;
        }
    }
    Tournament(OrientedGraph::new(k, arcs).expect("tournament is oriented"))
}

fn check_tournament_size(k: usize, limit: usize) -> Result<(), EnumerationError> {
    if k == 0 {
        Err(EnumerationError::Empty)
    } else if k > limit {
        Err(EnumerationError::LimitExceeded {
            requested: k,
            limit,
        })
    } else {
        Ok(())
    }
}

/// Tournaments on `k` vertices: all `2^(k(k-1)/2)` labelled ones, or one per
/// isomorphism class when `reduced` is set.
pub fn enumerate_tournaments(
    k: usize,
    reduced: bool,
    limit: usize,
) -> Result<Box<dyn Iterator<Item = Tournament>>, EnumerationError> {
    check_tournament_size(k, limit)?;
    if reduced {
        Ok(Box::new(tournament_classes(k).to_vec().into_iter()))
    } else {
        let total = 1u64 << (k * (k - 1) / 2);
        Ok(Box::new((0..total).map(move |i| labelled_tournament(k, i))))
    }
}

const CLASS_CACHE: usize = 12;

/// Isomorphism classes of tournaments on `k` vertices, extended vertex by
/// vertex from the classes on `k - 1` (every vertex-deleted tournament is a
/// tournament). Cached for the life of the process.
fn tournament_classes(k: usize) -> &'static [Tournament] {
    static CACHE: [OnceLock<Vec<Tournament>>; CLASS_CACHE] =
        [const { OnceLock::new() }; CLASS_CACHE];
    assert!(
        (1..CLASS_CACHE).contains(&k),
        "tournament size out of range"
    );
    CACHE[k].get_or_init(|| {
        if k == 1 {
            return vec![Tournament(OrientedGraph::edgeless(1))];
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for t in tournament_classes(k - 1) {
            for dirs in 0u64..1 << (k - 1) {
                let extra = (0..k - 1).map(|u| {
                    if dirs >> u & 1 == 1 {
                        (k - 1, u)
                    } else {
                        (u, k - 1)
                    }
                });
                let g = OrientedGraph::new(k, t.0.arcs().iter().copied().chain(extra))
                    .expect("extension is oriented");
                let code = canonical_code_oriented(&g);
                if seen.insert(code) {
                    out.push((code, g));
                }
            }
        }
        out.sort_unstable_by_key(|(code, _)| *code);
        out.into_iter().map(|(_, g)| Tournament(g)).collect()
    })
}

fn check_source(g: &OrientedGraph, limit: usize) -> Result<(), ChromaticError> {
    if g.n() > limit {
        return Err(EnumerationError::LimitExceeded {
            requested: g.n(),
            limit,
        }
        .into());
    }
    if g.n() == 0 {
        return Err(EnumerationError::Empty.into());
    }
    Ok(())
}

/// Least `k` such that `g` maps to some tournament on `k` vertices, with one
/// witness map into an irreflexive tournament.
pub fn oriented_chromatic_number(
    g: &OrientedGraph,
    limit: usize,
) -> Result<(usize, HomMap), ChromaticError> {
    check_source(g, limit)?;
    let source = MixedGraph::from(g.clone());
    for k in 1..=g.n() {
        let hit = tournament_classes(k).par_iter().find_map_first(|t| {
            find_homomorphism(
                &source,
                &Target::Irreflexive(t.0.clone().into()),
                SearchMode::Any,
            )
        });
        if let Some(h) = hit {
            return Ok((k, h));
        }
    }
    unreachable!("every oriented graph maps injectively into a tournament on its own vertex count")
}

/// Least `k` such that `g` has a non-trivial homomorphism to some reflexive
/// tournament on `k` vertices, with one witness map.
pub fn simple_chromatic_number(
    g: &OrientedGraph,
    limit: usize,
) -> Result<(usize, HomMap), ChromaticError> {
    check_source(g, limit)?;
    if g.arc_count() == 0 {
        return Err(ChromaticError::Edgeless);
    }
    let source = MixedGraph::from(g.clone());
    for k in 2..=g.n() {
        let hit = tournament_classes(k).par_iter().find_map_first(|t| {
            let target = Target::Reflexive(ReflexiveTarget::new(t.0.clone()));
            find_homomorphism(&source, &target, SearchMode::Nontrivial)
        });
        if let Some(h) = hit {
            return Ok((k, h));
        }
    }
    unreachable!("a graph with an arc maps non-trivially into a tournament on its own vertex count")
}
