//! Structural edits (arc reversal, deletion, addition, degree-2 extension,
//! identification along an arc or edge) and 2-tree machinery.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{
    canonical_code_simple, Colour, EnumerationError, GraphError, MixedGraph, OrientedGraph,
    SimpleGraph, TwoEdgeColouredGraph, VertexId,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("underlying graph is not a 2-tree")]
    NotTwoTree,
    #[error("edit does not apply to a {0} graph")]
    KindMismatch(&'static str),
}

/// One structural edit, as recorded alongside its result.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Edit {
    ReverseArc(VertexId, VertexId),
    DeleteArc(VertexId, VertexId),
    AddArc(VertexId, VertexId),
    /// New vertex `v` with `head -> v -> tail` for the arc `tail -> head`.
    AddDegree2Vertex(VertexId, VertexId),
    Recolour(VertexId, VertexId),
    DeleteEdge(VertexId, VertexId),
    AddEdge(VertexId, VertexId, Colour),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EditResult {
    pub graph: MixedGraph,
    pub edit: Edit,
}

/// Applies a single-graph edit to an oriented or 2-edge-coloured graph.
pub fn apply_edit(g: &MixedGraph, edit: Edit) -> Result<EditResult, StructureError> {
    let graph: MixedGraph = match (g, &edit) {
        (MixedGraph::Oriented(o), &Edit::ReverseArc(u, v)) => reverse_arc(o, (u, v))?.into(),
        (MixedGraph::Oriented(o), &Edit::DeleteArc(u, v)) => delete_arc(o, (u, v))?.into(),
        (MixedGraph::Oriented(o), &Edit::AddArc(u, v)) => add_arc(o, u, v)?.0.into(),
        (MixedGraph::Oriented(o), &Edit::AddDegree2Vertex(u, v)) => {
            add_degree2_vertex(o, (u, v))?.into()
        }
        (MixedGraph::Coloured(c), &Edit::Recolour(u, v)) => recolour_edge(c, u, v)?.into(),
        (MixedGraph::Coloured(c), &Edit::DeleteEdge(u, v)) => delete_edge(c, u, v)?.into(),
        (MixedGraph::Coloured(c), &Edit::AddEdge(u, v, col)) => add_edge(c, u, v, col)?.0.into(),
        (MixedGraph::Oriented(_), _) => return Err(StructureError::KindMismatch("oriented")),
        (MixedGraph::Coloured(_), _) => {
            return Err(StructureError::KindMismatch("2-edge-coloured"))
        }
    };
    Ok(EditResult { graph, edit })
}

fn require_arc(g: &OrientedGraph, (u, v): (VertexId, VertexId)) -> Result<(), GraphError> {
    if g.has_arc(u, v) {
        Ok(())
    } else {
        Err(GraphError::MissingArc(u, v))
    }
}

pub fn reverse_arc(
    g: &OrientedGraph,
    a: (VertexId, VertexId),
) -> Result<OrientedGraph, GraphError> {
    require_arc(g, a)?;
    let arcs = g
        .arcs()
        .iter()
        .map(|&x| if x == a { (a.1, a.0) } else { x });
    OrientedGraph::new(g.n(), arcs)
}

pub fn delete_arc(g: &OrientedGraph, a: (VertexId, VertexId)) -> Result<OrientedGraph, GraphError> {
    require_arc(g, a)?;
    OrientedGraph::new(g.n(), g.arcs().iter().copied().filter(|&x| x != a))
}

/// Whether `u` and `v` are the ends of a 2-dipath, traversed either way.
pub fn are_dipath_ends(g: &OrientedGraph, u: VertexId, v: VertexId) -> bool {
    (0..g.n()).any(|c| (g.has_arc(u, c) && g.has_arc(c, v)) || (g.has_arc(v, c) && g.has_arc(c, u)))
}

/// Adds the arc `u -> v` between non-adjacent vertices. The flag reports
/// whether `u` and `v` were the ends of a 2-dipath beforehand, which is when
/// complete convexity is guaranteed to survive.
pub fn add_arc(
    g: &OrientedGraph,
    u: VertexId,
    v: VertexId,
) -> Result<(OrientedGraph, bool), GraphError> {
    for w in [u, v] {
        if w >= g.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: w,
                n: g.n(),
            });
        }
    }
    if u == v {
        return Err(GraphError::Loop(u));
    }
    if g.adjacent(u, v) {
        return Err(GraphError::AlreadyAdjacent(u, v));
    }
    let ends = are_dipath_ends(g, u, v);
    Ok((
        OrientedGraph::new(g.n(), g.arcs().iter().copied().chain([(u, v)]))?,
        ends,
    ))
}

/// For the arc `u -> w`, adds vertex `n` with arcs `w -> n -> u`, closing a
/// directed triangle.
pub fn add_degree2_vertex(
    g: &OrientedGraph,
    a: (VertexId, VertexId),
) -> Result<OrientedGraph, GraphError> {
    require_arc(g, a)?;
    let (u, w) = a;
    let v = g.n();
    OrientedGraph::new(v + 1, g.arcs().iter().copied().chain([(w, v), (v, u)]))
}

/// Vertex map for gluing `h` onto `g`: `h`'s `(p, q)` become `g`'s `(x, y)`,
/// other vertices of `h` follow the vertices of `g` in order.
fn glue_map(
    g_n: usize,
    h_n: usize,
    (x, y): (VertexId, VertexId),
    (p, q): (VertexId, VertexId),
) -> Vec<VertexId> {
    let mut next = g_n;
    (0..h_n)
        .map(|w| {
            if w == p {
                x
            } else if w == q {
                y
            } else {
                next += 1;
                next - 1
            }
        })
        .collect()
}

/// Disjoint union of `g` and `h` with the tails of `a` and `b` merged and
/// their heads merged. Vertices of `g` keep their ids.
pub fn identify_arcs(
    g: &OrientedGraph,
    a: (VertexId, VertexId),
    h: &OrientedGraph,
    b: (VertexId, VertexId),
) -> Result<OrientedGraph, GraphError> {
    require_arc(g, a)?;
    require_arc(h, b)?;
    let map = glue_map(g.n(), h.n(), a, b);
    let extra = h
        .arcs()
        .iter()
        .filter(|&&x| x != b)
        .map(|&(p, q)| (map[p], map[q]));
    OrientedGraph::new(g.n() + h.n() - 2, g.arcs().iter().copied().chain(extra))
}

fn require_edge(g: &TwoEdgeColouredGraph, u: VertexId, v: VertexId) -> Result<Colour, GraphError> {
    g.colour(u, v)
        .ok_or(GraphError::MissingEdge(u.min(v), u.max(v)))
}

/// Exchanges the colour of the edge `uv`.
pub fn recolour_edge(
    g: &TwoEdgeColouredGraph,
    u: VertexId,
    v: VertexId,
) -> Result<TwoEdgeColouredGraph, GraphError> {
    require_edge(g, u, v)?;
    let key = (u.min(v), u.max(v));
    let edges = g.edges().iter().map(|&(a, b, c)| {
        if (a, b) == key {
            (a, b, c.flip())
        } else {
            (a, b, c)
        }
    });
    TwoEdgeColouredGraph::new(g.n(), edges)
}

pub fn delete_edge(
    g: &TwoEdgeColouredGraph,
    u: VertexId,
    v: VertexId,
) -> Result<TwoEdgeColouredGraph, GraphError> {
    require_edge(g, u, v)?;
    let key = (u.min(v), u.max(v));
    TwoEdgeColouredGraph::new(
        g.n(),
        g.edges().iter().copied().filter(|&(a, b, _)| (a, b) != key),
    )
}

/// Whether `u` and `v` are the ends of an alternating 2-path.
pub fn are_alternating_ends(g: &TwoEdgeColouredGraph, u: VertexId, v: VertexId) -> bool {
    (0..g.n()).any(|c| match (g.colour(u, c), g.colour(c, v)) {
        (Some(a), Some(b)) => a != b,
        _ => false,
    })
}

/// Adds the edge `uv` in colour `c`; the flag reports whether `u`, `v` were
/// the ends of an alternating 2-path beforehand.
pub fn add_edge(
    g: &TwoEdgeColouredGraph,
    u: VertexId,
    v: VertexId,
    c: Colour,
) -> Result<(TwoEdgeColouredGraph, bool), GraphError> {
    for w in [u, v] {
        if w >= g.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: w,
                n: g.n(),
            });
        }
    }
    if u == v {
        return Err(GraphError::Loop(u));
    }
    if g.colour(u, v).is_some() {
        return Err(GraphError::AlreadyAdjacent(u, v));
    }
    let ends = are_alternating_ends(g, u, v);
    Ok((
        TwoEdgeColouredGraph::new(g.n(), g.edges().iter().copied().chain([(u, v, c)]))?,
        ends,
    ))
}

/// Disjoint union of `g` and `h` glued along edges of the same colour, with
/// `a.0 ~ b.0` and `a.1 ~ b.1`.
pub fn identify_edges(
    g: &TwoEdgeColouredGraph,
    a: (VertexId, VertexId),
    h: &TwoEdgeColouredGraph,
    b: (VertexId, VertexId),
) -> Result<TwoEdgeColouredGraph, GraphError> {
    let ca = require_edge(g, a.0, a.1)?;
    let cb = require_edge(h, b.0, b.1)?;
    if ca != cb {
        return Err(GraphError::ColourMismatch(ca, cb));
    }
    let map = glue_map(g.n(), h.n(), a, b);
    let key = (b.0.min(b.1), b.0.max(b.1));
    let extra = h
        .edges()
        .iter()
        .filter(|&&(p, q, _)| (p, q) != key)
        .map(|&(p, q, c)| (map[p], map[q], c));
    TwoEdgeColouredGraph::new(g.n() + h.n() - 2, g.edges().iter().copied().chain(extra))
}

/// Construction order of a 2-tree: `order[0] order[1]` is an edge and each
/// later `order[i]` is adjacent to exactly the pair `attachments[i - 2]`
/// among its predecessors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTreeOrdering {
    pub order: Vec<VertexId>,
    pub attachments: Vec<(VertexId, VertexId)>,
}

/// Recognises 2-trees by repeatedly deleting a degree-2 vertex whose two
/// neighbours are adjacent, succeeding when a single edge remains.
pub fn recognize_two_tree(g: &SimpleGraph) -> Option<TwoTreeOrdering> {
    let n = g.n();
    if n < 2 || g.edge_count() != 2 * n - 3 {
        return None;
    }
    let mut adj: Vec<HashSet<VertexId>> = g
        .adjacency()
        .into_iter()
        .map(|a| a.into_iter().collect())
        .collect();
    let mut alive: Vec<bool> = vec![true; n];
    let mut removed = Vec::new();
    let mut attachments = Vec::new();
    for _ in 0..n - 2 {
        let v = (0..n).find(|&v| {
            alive[v] && adj[v].len() == 2 && {
                let mut it = adj[v].iter();
                let (a, b) = (*it.next().unwrap(), *it.next().unwrap());
                adj[a].contains(&b)
            }
        })?;
        let mut pair: Vec<_> = adj[v].iter().copied().collect();
        pair.sort_unstable();
        for &w in &pair {
            adj[w].remove(&v);
        }
        adj[v].clear();
        alive[v] = false;
        removed.push(v);
        attachments.push((pair[0], pair[1]));
    }
    let mut order: Vec<_> = (0..n).filter(|&v| alive[v]).collect();
    if order.len() != 2 || !g.has_edge(order[0], order[1]) {
        return None;
    }
    order.extend(removed.iter().rev());
    attachments.reverse();
    Some(TwoTreeOrdering { order, attachments })
}

pub fn is_two_tree(g: &SimpleGraph) -> bool {
    recognize_two_tree(g).is_some()
}

/// Triangles `(a, b, c)` with `a < b < c`.
pub fn triangles(g: &SimpleGraph) -> Vec<(VertexId, VertexId, VertexId)> {
    let adj = g.adjacency();
    let mut out = Vec::new();
    for &(a, b) in g.edges() {
        for &c in &adj[b] {
            if c > b && g.has_edge(a, c) {
                out.push((a, b, c));
            }
        }
    }
    out
}

/// For an orientation of a 2-tree: whether every triangle is a directed
/// 3-cycle.
pub fn check_2tree_orientation(g: &OrientedGraph) -> Result<bool, StructureError> {
    let u = g.underlying();
    if !is_two_tree(&u) {
        return Err(StructureError::NotTwoTree);
    }
    Ok(triangles(&u).into_iter().all(|(a, b, c)| {
        (g.has_arc(a, b) && g.has_arc(b, c) && g.has_arc(c, a))
            || (g.has_arc(b, a) && g.has_arc(c, b) && g.has_arc(a, c))
    }))
}

/// One representative per isomorphism class of 2-trees on `n >= 2`
/// vertices, built from `K_2` by attaching vertices to existing edges.
pub fn two_tree_classes(n: usize, limit: usize) -> Result<Vec<SimpleGraph>, EnumerationError> {
    if n < 2 {
        return Err(EnumerationError::Empty);
    }
    if n > limit {
        return Err(EnumerationError::LimitExceeded {
            requested: n,
            limit,
        });
    }
    let mut classes = vec![SimpleGraph::complete(2)];
    for k in 3..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &classes {
            for &(a, b) in t.edges() {
                let g =
                    SimpleGraph::new(k, t.edges().iter().copied().chain([(a, k - 1), (b, k - 1)]))
                        .expect("attaching a vertex keeps the graph simple");
                if seen.insert(canonical_code_simple(&g)) {
                    next.push(g);
                }
            }
        }
        classes = next;
    }
    Ok(classes)
}

/// Whether `g` is a spanning subgraph of some 2-tree (tree-width at most 2),
/// by trying every completion to `2n - 3` edges.
pub fn has_treewidth_at_most_two(g: &SimpleGraph) -> bool {
    let n = g.n();
    if n <= 2 {
        return true;
    }
    let target = 2 * n - 3;
    if g.edge_count() > target {
        return false;
    }
    let missing: Vec<_> = (0..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let need = target - g.edge_count();
    let mut chosen = Vec::with_capacity(need);
    completes(g, &missing, 0, need, &mut chosen)
}

fn completes(
    g: &SimpleGraph,
    missing: &[(VertexId, VertexId)],
    from: usize,
    need: usize,
    chosen: &mut Vec<(VertexId, VertexId)>,
) -> bool {
    if need == 0 {
        let h = SimpleGraph::new(
            g.n(),
            g.edges().iter().copied().chain(chosen.iter().copied()),
        )
        .expect("completion adds non-edges only");
        return is_two_tree(&h);
    }
    for i in from..=missing.len().saturating_sub(need) {
        if i >= missing.len() {
            break;
        }
        chosen.push(missing[i]);
        if completes(g, missing, i + 1, need - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::is_complete_convex;
    use crate::graph::{connected_graphs, enumerate_orientations};

    fn og(n: usize, arcs: &[(usize, usize)]) -> OrientedGraph {
        OrientedGraph::new(n, arcs.iter().copied()).unwrap()
    }

    fn cc(g: impl Into<MixedGraph>) -> bool {
        is_complete_convex(&g.into()).unwrap()
    }

    #[test]
    fn reverse_examples() {
        let c3 = OrientedGraph::directed_cycle(3);
        assert_eq!(
            reverse_arc(&c3, (0, 1)).unwrap(),
            og(3, &[(1, 0), (1, 2), (2, 0)])
        );
        assert_eq!(
            reverse_arc(&og(2, &[(0, 1)]), (0, 1)).unwrap(),
            og(2, &[(1, 0)])
        );
        let twice = reverse_arc(&reverse_arc(&c3, (1, 2)).unwrap(), (2, 1)).unwrap();
        assert_eq!(twice, c3);
        assert_eq!(reverse_arc(&c3, (1, 0)), Err(GraphError::MissingArc(1, 0)));
    }

    #[test]
    fn delete_examples() {
        let c3 = OrientedGraph::directed_cycle(3);
        assert_eq!(
            delete_arc(&c3, (2, 0)).unwrap(),
            OrientedGraph::directed_path(3)
        );
        let empty = delete_arc(&og(2, &[(0, 1)]), (0, 1)).unwrap();
        assert_eq!(empty.arc_count(), 0);
        assert!(is_complete_convex(&empty.into()).is_err());
    }

    #[test]
    fn add_arc_examples() {
        let c4 = OrientedGraph::directed_cycle(4);
        let (g, ends) = add_arc(&c4, 0, 2).unwrap();
        assert!(ends);
        assert_eq!(cc(c4.clone()), cc(g));
        let (g, _) = add_arc(&OrientedGraph::directed_path(3), 2, 0).unwrap();
        assert_eq!(g, OrientedGraph::directed_cycle(3));
        let (_, ends) = add_arc(&og(4, &[(0, 1), (2, 3)]), 0, 3).unwrap();
        assert!(!ends);
        assert_eq!(add_arc(&c4, 0, 1), Err(GraphError::AlreadyAdjacent(0, 1)));
        assert_eq!(add_arc(&c4, 2, 2), Err(GraphError::Loop(2)));
    }

    #[test]
    fn degree2_extension_builds_cc_two_trees() {
        let g = add_degree2_vertex(&og(2, &[(0, 1)]), (0, 1)).unwrap();
        assert_eq!(g, og(3, &[(0, 1), (1, 2), (2, 0)]));
        assert!(cc(g.clone()));
        let mut h = g;
        for a in [(0, 1), (1, 2), (2, 0)] {
            h = add_degree2_vertex(&h, a).unwrap();
        }
        assert_eq!(h.n(), 6);
        assert!(cc(h.clone()));
        assert_eq!(check_2tree_orientation(&h), Ok(true));
        let t = add_degree2_vertex(&OrientedGraph::transitive_tournament(3), (0, 2)).unwrap();
        assert!(!cc(t));
    }

    #[test]
    fn identification_examples() {
        let c3 = OrientedGraph::directed_cycle(3);
        let glued = identify_arcs(&c3, (0, 1), &c3, (1, 2)).unwrap();
        assert_eq!(glued.n(), 4);
        assert_eq!(glued.arc_count(), 5);
        assert!(cc(glued));

        // K_4 coloured with two red disjoint edges would be excluded by the
        // minimum degree condition; use an exhaustively found CC example.
        let k4 = SimpleGraph::complete(4);
        let example = crate::graph::enumerate_colourings(&k4)
            .find(|c| cc(c.clone()))
            .expect("K_4 has a CC colouring");
        let &(u, v, colour) = example.edges().iter().next().unwrap();
        let glued = identify_edges(&example, (u, v), &example, (u, v)).unwrap();
        assert!(cc(glued));
        let other = example.edges().iter().find(|e| e.2 != colour).unwrap();
        assert_eq!(
            identify_edges(&example, (u, v), &example, (other.0, other.1)),
            Err(GraphError::ColourMismatch(colour, colour.flip()))
        );
    }

    #[test]
    fn coloured_edits() {
        let g = TwoEdgeColouredGraph::new(3, [(0, 1, Colour::Red), (1, 2, Colour::Blue)]).unwrap();
        assert_eq!(
            recolour_edge(&g, 1, 0).unwrap().colour(0, 1),
            Some(Colour::Blue)
        );
        assert_eq!(delete_edge(&g, 2, 1).unwrap().edge_count(), 1);
        let (h, ends) = add_edge(&g, 0, 2, Colour::Red).unwrap();
        assert!(ends);
        assert_eq!(h.edge_count(), 3);
        assert_eq!(delete_edge(&g, 0, 2), Err(GraphError::MissingEdge(0, 2)));
    }

    #[test]
    fn apply_edit_dispatches_by_kind() {
        let c3 = MixedGraph::from(OrientedGraph::directed_cycle(3));
        let r = apply_edit(&c3, Edit::ReverseArc(0, 1)).unwrap();
        assert_eq!(r.edit, Edit::ReverseArc(0, 1));
        assert!(matches!(
            apply_edit(&c3, Edit::Recolour(0, 1)),
            Err(StructureError::KindMismatch(_))
        ));
    }

    #[test]
    fn two_tree_recognition_examples() {
        let k3 = SimpleGraph::complete(3);
        let ord = recognize_two_tree(&k3).unwrap();
        assert_eq!(ord.order.len(), 3);
        assert_eq!(ord.attachments.len(), 1);
        let diamond = SimpleGraph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(is_two_tree(&diamond));
        assert!(!is_two_tree(&SimpleGraph::cycle(4)));
        assert!(is_two_tree(&SimpleGraph::complete(2)));
        assert!(!is_two_tree(&SimpleGraph::complete(4)));
    }

    #[test]
    fn orderings_are_valid_constructions() {
        for n in 2..=6 {
            for g in connected_graphs(n, 7).unwrap() {
                let Some(ord) = recognize_two_tree(&g) else {
                    continue;
                };
                let pos: Vec<_> = {
                    let mut p = vec![0; n];
                    for (i, &v) in ord.order.iter().enumerate() {
                        p[v] = i;
                    }
                    p
                };
                assert!(g.has_edge(ord.order[0], ord.order[1]));
                for (i, &v) in ord.order.iter().enumerate().skip(2) {
                    let earlier: Vec<_> = g
                        .neighbours(v)
                        .into_iter()
                        .filter(|&w| pos[w] < i)
                        .collect();
                    let (a, b) = ord.attachments[i - 2];
                    assert_eq!(earlier, vec![a.min(b), a.max(b)]);
                    assert!(g.has_edge(a, b));
                }
            }
        }
    }

    /// Every labelled 2-tree on `n` vertices, straight from the inductive
    /// definition.
    fn labelled_two_trees(n: usize) -> HashSet<SimpleGraph> {
        let mut out = HashSet::new();
        fn grow(
            order: &[usize],
            edges: Vec<(usize, usize)>,
            n: usize,
            out: &mut HashSet<SimpleGraph>,
        ) {
            if order.len() == n {
                out.insert(SimpleGraph::new(n, edges).unwrap());
                return;
            }
            for v in 0..n {
                if order.contains(&v) {
                    continue;
                }
                for &(a, b) in &edges {
                    let mut e = edges.clone();
                    e.extend([(a, v), (b, v)]);
                    let mut o = order.to_vec();
                    o.push(v);
                    grow(&o, e, n, out);
                }
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                grow(&[u, v], vec![(u, v)], n, &mut out);
            }
        }
        out
    }

    #[test]
    fn recognition_matches_inductive_definition() {
        for n in 2..=5 {
            let defined = labelled_two_trees(n);
            let recognised: HashSet<_> = connected_graphs(n, 7)
                .unwrap()
                .filter(is_two_tree)
                .collect();
            assert_eq!(defined, recognised, "n = {n}");
        }
    }

    #[test]
    fn two_tree_class_counts() {
        // OEIS A054581: 1, 1, 2, 5, 12 for n = 3..7.
        let counts: Vec<_> = (3..=7)
            .map(|n| two_tree_classes(n, 7).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 12]);
        for g in two_tree_classes(6, 7).unwrap() {
            assert!(is_two_tree(&g));
        }
    }

    #[test]
    fn triangle_orientation_examples() {
        assert_eq!(
            check_2tree_orientation(&OrientedGraph::directed_cycle(3)),
            Ok(true)
        );
        assert_eq!(
            check_2tree_orientation(&OrientedGraph::transitive_tournament(3)),
            Ok(false)
        );
        assert_eq!(
            check_2tree_orientation(&OrientedGraph::directed_cycle(4)),
            Err(StructureError::NotTwoTree)
        );
        let diamond = add_degree2_vertex(&OrientedGraph::directed_cycle(3), (0, 1)).unwrap();
        assert_eq!(check_2tree_orientation(&diamond), Ok(true));
        assert!(cc(diamond));
    }

    #[test]
    fn two_tree_orientations_small() {
        for n in 3..=5 {
            for t in two_tree_classes(n, 7).unwrap() {
                for o in enumerate_orientations(&t) {
                    assert_eq!(check_2tree_orientation(&o).unwrap(), cc(o.clone()));
                }
            }
        }
    }

    /// Series-parallel reduction: delete vertices of degree at most one and
    /// suppress vertices of degree two (merging parallel edges). A graph has
    /// tree-width at most two iff this empties it.
    fn treewidth2_oracle(g: &SimpleGraph) -> bool {
        let mut adj: Vec<HashSet<usize>> = g
            .adjacency()
            .into_iter()
            .map(|a| a.into_iter().collect())
            .collect();
        let mut alive = vec![true; g.n()];
        loop {
            let Some(v) = (0..g.n()).find(|&v| alive[v] && adj[v].len() <= 2) else {
                return !alive.iter().any(|&a| a);
            };
            let nbrs: Vec<_> = adj[v].drain().collect();
            for &w in &nbrs {
                adj[w].remove(&v);
            }
            if let [a, b] = nbrs[..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
            alive[v] = false;
        }
    }

    #[test]
    fn treewidth_matches_series_parallel_oracle() {
        for n in 1..=6 {
            for g in connected_graphs(n, 7)
                .unwrap()
                .step_by(if n == 6 { 7 } else { 1 })
            {
                assert_eq!(
                    has_treewidth_at_most_two(&g),
                    treewidth2_oracle(&g),
                    "{g:?}"
                );
            }
        }
        assert!(has_treewidth_at_most_two(
            &SimpleGraph::new(5, [(0, 1), (3, 4)]).unwrap()
        ));
        assert!(!has_treewidth_at_most_two(&SimpleGraph::complete(4)));
    }
}
