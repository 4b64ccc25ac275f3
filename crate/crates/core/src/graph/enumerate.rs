//! Exhaustive enumeration of orientations, colourings and connected graphs.
//!
//! The orientation and colouring streams are indexable so that callers can
//! split them by index range across workers.

use std::collections::HashSet;

use thiserror::Error;

use super::{canonical_code_simple, Colour, OrientedGraph, SimpleGraph, TwoEdgeColouredGraph};
use crate::graph::canon::simple_from_code;

/// Largest vertex count accepted by the connected-graph enumerators unless
/// the caller raises it.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("requested {requested} vertices, limit is {limit}")]
    LimitExceeded { requested: usize, limit: usize },
    #[error("need at least one vertex")]
    Empty,
}

fn check_limit(n: usize, limit: usize) -> Result<(), EnumerationError> {
    if n == 0 {
        Err(EnumerationError::Empty)
    } else if n > limit {
        Err(EnumerationError::LimitExceeded {
            requested: n,
            limit,
        })
    } else {
        Ok(())
    }
}

/// All `2^|E|` orientations of a simple graph.
///
/// Bit `i` of the index reverses edge `i` (edges in sorted order) relative to
/// its ascending direction.
#[derive(Clone)]
pub struct Orientations<'a> {
    graph: &'a SimpleGraph,
    next: u64,
    end: u64,
}

pub fn enumerate_orientations(g: &SimpleGraph) -> Orientations<'_> {
    assert!(
        g.edge_count() < 64,
        "too many edges to enumerate orientations"
    );
    Orientations {
        graph: g,
        next: 0,
        end: 1u64 << g.edge_count(),
    }
}

impl Orientations<'_> {
    pub fn total(&self) -> u64 {
        1u64 << self.graph.edge_count()
    }

    pub fn get(&self, index: u64) -> OrientedGraph {
        let arcs = self.graph.edges().iter().enumerate().map(|(i, &(u, v))| {
            if index >> i & 1 == 1 {
                (v, u)
            } else {
                (u, v)
            }
        });
        OrientedGraph::new(self.graph.n(), arcs).expect("orientation of a simple graph")
    }
}

impl Iterator for Orientations<'_> {
    type Item = OrientedGraph;

    fn next(&mut self) -> Option<OrientedGraph> {
        if self.next >= self.end {
            return None;
        }
        let g = self.get(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }

    fn nth(&mut self, n: usize) -> Option<OrientedGraph> {
        self.next = self.next.saturating_add(n as u64).min(self.end);
        self.next()
    }
}

/// All `2^|E|` red/blue colourings of a simple graph; bit `i` of the index
/// makes edge `i` blue.
#[derive(Clone)]
pub struct Colourings<'a> {
    graph: &'a SimpleGraph,
    next: u64,
    end: u64,
}

pub fn enumerate_colourings(g: &SimpleGraph) -> Colourings<'_> {
    assert!(
        g.edge_count() < 64,
        "too many edges to enumerate colourings"
    );
    Colourings {
        graph: g,
        next: 0,
        end: 1u64 << g.edge_count(),
    }
}

impl Colourings<'_> {
    pub fn total(&self) -> u64 {
        1u64 << self.graph.edge_count()
    }

    pub fn get(&self, index: u64) -> TwoEdgeColouredGraph {
        let edges = self.graph.edges().iter().enumerate().map(|(i, &(u, v))| {
            let c = if index >> i & 1 == 1 {
                Colour::Blue
            } else {
                Colour::Red
            };
            (u, v, c)
        });
        TwoEdgeColouredGraph::new(self.graph.n(), edges).expect("colouring of a simple graph")
    }
}

impl Iterator for Colourings<'_> {
    type Item = TwoEdgeColouredGraph;

    fn next(&mut self) -> Option<TwoEdgeColouredGraph> {
        if self.next >= self.end {
            return None;
        }
        let g = self.get(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }

    fn nth(&mut self, n: usize) -> Option<TwoEdgeColouredGraph> {
        self.next = self.next.saturating_add(n as u64).min(self.end);
        self.next()
    }
}

/// Every connected simple graph on `n` labelled vertices.
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

pub fn connected_graphs(n: usize, limit: usize) -> Result<ConnectedGraphs, EnumerationError> {
    check_limit(n, limit)?;
    let pairs: Vec<_> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    assert!(pairs.len() < 64, "too many vertex pairs to enumerate");
    Ok(ConnectedGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

impl Iterator for ConnectedGraphs {
    type Item = SimpleGraph;

    fn next(&mut self) -> Option<SimpleGraph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if !mask_connected(self.n, &self.pairs, mask) {
                continue;
            }
            let edges = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p);
            return Some(SimpleGraph::new(self.n, edges).expect("subset of vertex pairs"));
        }
        None
    }
}

fn mask_connected(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    let mut adj = [0u64; 64];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen.count_ones() as usize == n
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, each in its canonical labelling, sorted by canonical code.
///
/// Classes on `n` vertices are obtained by attaching a new vertex to every
/// class on `n - 1` vertices: every connected graph has a non-cut vertex.
pub fn connected_graph_classes(
    n: usize,
    limit: usize,
) -> Result<Vec<SimpleGraph>, EnumerationError> {
    check_limit(n, limit)?;
    let mut classes = vec![SimpleGraph::edgeless(1)];
    for k in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for h in &classes {
            for nbrs in 1u64..(1 << (k - 1)) {
                let extra = (0..k - 1)
                    .filter(|&u| nbrs >> u & 1 == 1)
                    .map(|u| (u, k - 1));
                let g = SimpleGraph::new(k, h.edges().iter().copied().chain(extra))
                    .expect("extension is simple");
                let code = canonical_code_simple(&g);
                if seen.insert(code) {
                    next.push(code);
                }
            }
        }
        next.sort_unstable();
        classes = next
            .into_iter()
            .map(|code| simple_from_code(k, code))
            .collect();
    }
    Ok(classes)
}

/// Labelled enumeration by default, one graph per isomorphism class when
/// `reduced` is set.
pub fn enumerate_connected_graphs(
    n: usize,
    reduced: bool,
    limit: usize,
) -> Result<Box<dyn Iterator<Item = SimpleGraph>>, EnumerationError> {
    if reduced {
        Ok(Box::new(connected_graph_classes(n, limit)?.into_iter()))
    } else {
        Ok(Box::new(connected_graphs(n, limit)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_code_simple;

    #[test]
    fn triangle_has_two_cyclic_orientations() {
        let k3 = SimpleGraph::complete(3);
        let all: Vec<_> = enumerate_orientations(&k3).collect();
        assert_eq!(all.len(), 8);
        let cyclic = all
            .iter()
            .filter(|g| {
                g.arcs()
                    .iter()
                    .all(|&(u, _)| g.out_neighbours(u).len() == 1)
            })
            .count();
        assert_eq!(cyclic, 2);
    }

    #[test]
    fn small_orientation_counts() {
        assert_eq!(enumerate_orientations(&SimpleGraph::path(2)).count(), 2);
        assert_eq!(enumerate_orientations(&SimpleGraph::edgeless(3)).count(), 1);
    }

    #[test]
    fn colourings_of_small_graphs() {
        assert_eq!(enumerate_colourings(&SimpleGraph::complete(3)).count(), 8);
        let k2: Vec<_> = enumerate_colourings(&SimpleGraph::path(2)).collect();
        assert_eq!(k2.len(), 2);
        assert_ne!(k2[0].colour(0, 1), k2[1].colour(0, 1));
        let p3: Vec<_> = enumerate_colourings(&SimpleGraph::path(3)).collect();
        assert_eq!(p3.len(), 4);
        let alternating = p3
            .iter()
            .filter(|g| g.colour(0, 1) != g.colour(1, 2))
            .count();
        assert_eq!(alternating, 2);
    }

    #[test]
    fn cardinality_without_duplicates() {
        for g in [
            SimpleGraph::complete(4),
            SimpleGraph::cycle(5),
            SimpleGraph::complete(5),
        ] {
            let expected = 1usize << g.edge_count();
            let o: HashSet<_> = enumerate_orientations(&g).collect();
            let c: HashSet<_> = enumerate_colourings(&g).collect();
            assert_eq!(o.len(), expected);
            assert_eq!(c.len(), expected);
        }
    }

    #[test]
    fn indexed_access_matches_iteration() {
        let g = SimpleGraph::cycle(4);
        let o = enumerate_orientations(&g);
        for (i, h) in o.clone().enumerate() {
            assert_eq!(o.get(i as u64), h);
        }
        assert_eq!(o.clone().nth(5), Some(o.get(5)));
    }

    #[test]
    fn labelled_connected_counts() {
        // OEIS A001187: 1, 1, 4, 38, 728, 26704
        let counts: Vec<_> = (1..=6)
            .map(|n| connected_graphs(n, 7).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728, 26704]);
    }

    #[test]
    fn connected_class_counts() {
        // OEIS A001349: 1, 1, 2, 6, 21, 112, 853
        let counts: Vec<_> = (1..=7)
            .map(|n| connected_graph_classes(n, 7).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn classes_cover_labelled_graphs() {
        for n in 1..=5 {
            let classes: HashSet<_> = connected_graph_classes(n, 7)
                .unwrap()
                .iter()
                .map(canonical_code_simple)
                .collect();
            let labelled: HashSet<_> = connected_graphs(n, 7)
                .unwrap()
                .map(|g| canonical_code_simple(&g))
                .collect();
            assert_eq!(classes, labelled);
        }
    }

    #[test]
    fn limits_are_enforced() {
        assert_eq!(
            connected_graphs(8, 7).err(),
            Some(EnumerationError::LimitExceeded {
                requested: 8,
                limit: 7
            })
        );
        assert_eq!(connected_graphs(0, 7).err(), Some(EnumerationError::Empty));
        assert_eq!(connected_graphs(2, 7).unwrap().count(), 1);
    }
}
