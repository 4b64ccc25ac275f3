//! Fixtures shared by the criterion benches.

use cconv_core::{build_gadget, NaeInstance, OrientedGraph, SimpleGraph, Variant};

/// Complete convex oriented 2-tree grown by gluing directed triangles onto
/// arcs in round-robin order.
pub fn triangle_strip(n: usize) -> OrientedGraph {
    let mut g = OrientedGraph::directed_cycle(3);
    let mut next = 0;
    while g.n() < n {
        let a = g.arcs()[next % g.arc_count()];
        g = cconv_core::add_degree2_vertex(&g, a).expect("arc is present");
        next += 7;
    }
    g
}

/// Underlying graph of the single-clause gadget.
pub fn single_clause_gadget(variant: Variant) -> SimpleGraph {
    let y = NaeInstance::new(3, vec![[1, 2, 3]]).expect("valid clause");
    build_gadget(&y, variant).graph().clone()
}
