//! Canonical forms for small graphs.
//!
//! The canonical code is the lexicographically largest adjacency bit string
//! over all vertex orders that list vertices by non-increasing degree
//! (out-degree, then in-degree, for oriented graphs). Restricting to these
//! orders keeps the code an isomorphism invariant and prunes most of `n!`.

use super::{OrientedGraph, SimpleGraph, VertexId};

const MAX_BITS: usize = 128;

struct Search<'a, F: Fn(VertexId, VertexId) -> bool> {
    n: usize,
    directed: bool,
    adjacent: F,
    /// `allowed[p]`: vertices that may occupy position `p`.
    allowed: &'a [Vec<VertexId>],
    total_bits: usize,
    order: Vec<VertexId>,
    used: Vec<bool>,
    best: Option<(u128, Vec<VertexId>)>,
}

impl<F: Fn(VertexId, VertexId) -> bool> Search<'_, F> {
    fn run(&mut self, prefix: u128, bits: usize) {
        let j = self.order.len();
        if j == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix > *b) {
                self.best = Some((prefix, self.order.clone()));
            }
            return;
        }
        for idx in 0..self.allowed[j].len() {
            let v = self.allowed[j][idx];
            if self.used[v] {
                continue;
            }
            let mut code = prefix;
            let mut len = bits;
            for i in 0..j {
                let u = self.order[i];
                code = code << 1 | (self.adjacent)(u, v) as u128;
                len += 1;
                if self.directed {
                    code = code << 1 | (self.adjacent)(v, u) as u128;
                    len += 1;
                }
            }
            if let Some((best, _)) = &self.best {
                let shift = self.total_bits - len;
                let best_prefix = if shift >= MAX_BITS { 0 } else { best >> shift };
                if code < best_prefix {
                    continue;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.run(code, len);
            self.order.pop();
            self.used[v] = false;
        }
    }
}

fn blocks(keys: &[(usize, usize)]) -> Vec<Vec<VertexId>> {
    let mut sorted: Vec<_> = keys.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted
        .iter()
        .map(|k| (0..keys.len()).filter(|&v| keys[v] == *k).collect())
        .collect()
}

fn search<F: Fn(VertexId, VertexId) -> bool>(
    n: usize,
    directed: bool,
    keys: &[(usize, usize)],
    adjacent: F,
) -> (u128, Vec<VertexId>) {
    let pairs = n * n.saturating_sub(1) / 2;
    let total_bits = if directed { 2 * pairs } else { pairs };
    assert!(
        total_bits <= MAX_BITS,
        "graph too large for a canonical code"
    );
    let allowed = blocks(keys);
    let mut s = Search {
        n,
        directed,
        adjacent,
        allowed: &allowed,
        total_bits,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    s.run(0, 0);
    s.best.expect("at least one vertex order exists")
}

fn simple_search(g: &SimpleGraph) -> (u128, Vec<VertexId>) {
    let n = g.n();
    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let keys: Vec<_> = g.degrees().into_iter().map(|d| (d, 0)).collect();
    search(n, false, &keys, |u, v| adj[u * n + v])
}

fn oriented_search(g: &OrientedGraph) -> (u128, Vec<VertexId>) {
    let n = g.n();
    let mut adj = vec![false; n * n];
    let mut keys = vec![(0, 0); n];
    for &(u, v) in g.arcs() {
        adj[u * n + v] = true;
        keys[u].0 += 1;
        keys[v].1 += 1;
    }
    search(n, true, &keys, |u, v| adj[u * n + v])
}

/// Isomorphism-invariant code of a simple graph (at most 16 vertices).
pub fn canonical_code_simple(g: &SimpleGraph) -> u128 {
    simple_search(g).0
}

/// Isomorphism-invariant code of an oriented graph (at most 11 vertices).
pub fn canonical_code_oriented(g: &OrientedGraph) -> u128 {
    oriented_search(g).0
}

fn inverse(order: &[VertexId]) -> Vec<VertexId> {
    let mut perm = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    perm
}

/// `g` relabelled into its canonical vertex order.
pub fn canonical_simple(g: &SimpleGraph) -> SimpleGraph {
    let (_, order) = simple_search(g);
    g.relabel(&inverse(&order))
}

pub fn canonical_oriented(g: &OrientedGraph) -> OrientedGraph {
    let (_, order) = oriented_search(g);
    g.relabel(&inverse(&order))
}

pub(crate) fn simple_from_code(n: usize, code: u128) -> SimpleGraph {
    let total = n * n.saturating_sub(1) / 2;
    let mut k = 0;
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    SimpleGraph::new(n, edges).expect("decoded code is simple")
}

pub(crate) fn oriented_from_code(n: usize, code: u128) -> OrientedGraph {
    let total = n * n.saturating_sub(1);
    let mut k = 0;
    let mut arcs = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                arcs.push((i, j));
            }
            if code >> (total - 2 - k) & 1 == 1 {
                arcs.push((j, i));
            }
            k += 2;
        }
    }
    OrientedGraph::new(n, arcs).expect("decoded code is oriented")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{connected_graphs, enumerate_orientations};

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn code_is_invariant_under_relabelling() {
        let perms = permutations(5);
        for g in connected_graphs(5, 7).unwrap().step_by(37) {
            let code = canonical_code_simple(&g);
            for p in perms.iter().step_by(11) {
                assert_eq!(canonical_code_simple(&g.relabel(p)), code);
            }
            assert_eq!(simple_from_code(5, code), canonical_simple(&g));
        }
    }

    #[test]
    fn oriented_codes_separate_triangles() {
        let k3 = SimpleGraph::complete(3);
        let codes: std::collections::HashSet<_> = enumerate_orientations(&k3)
            .map(|g| canonical_code_oriented(&g))
            .collect();
        assert_eq!(codes.len(), 2);
        let c3 = OrientedGraph::directed_cycle(3);
        assert_eq!(
            oriented_from_code(3, canonical_code_oriented(&c3)),
            canonical_oriented(&c3)
        );
    }

    #[test]
    fn brute_force_agrees_on_orientations() {
        // Brute force over all n! relabellings: the minimum arc list is a
        // canonical form independent of the degree-ordered search.
        let perms = permutations(4);
        let brute = |g: &OrientedGraph| {
            perms
                .iter()
                .map(|p| g.relabel(p).arcs().to_vec())
                .min()
                .unwrap()
        };
        let g = SimpleGraph::complete(4);
        let all: Vec<_> = enumerate_orientations(&g).collect();
        for a in &all {
            for b in &all {
                assert_eq!(
                    canonical_code_oriented(a) == canonical_code_oriented(b),
                    brute(a) == brute(b)
                );
            }
        }
    }
}
