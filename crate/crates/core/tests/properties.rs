use cconv_core::graph::{parse_document, parse_graph};
use cconv_core::reduction::nae_solutions;
use cconv_core::{
    add_degree2_vertex, build_gadget, colouring_from_assignment, convex_hull, decode_assignment,
    identify_arcs, is_complete_convex, orientation_from_assignment, parse_nae, random_instance,
    reverse_arc, Assignment, Colour, MixedGraph, OrientedGraph, ParsedGraph, TwoEdgeColouredGraph,
    Variant, VertexSet,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Oriented graph and 2-edge-colouring over the same random simple graph.
fn graphs(max_n: usize) -> impl Strategy<Value = (OrientedGraph, TwoEdgeColouredGraph)> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(0u8..3, pairs))
        })
        .prop_map(|(n, choice)| {
            let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            let mut arcs = Vec::new();
            let mut edges = Vec::new();
            for ((u, v), c) in pairs.zip(choice) {
                match c {
                    1 => {
                        arcs.push((u, v));
                        edges.push((u, v, Colour::Red));
                    }
                    2 => {
                        arcs.push((v, u));
                        edges.push((u, v, Colour::Blue));
                    }
                    _ => {}
                }
            }
            (
                OrientedGraph::new(n, arcs).unwrap(),
                TwoEdgeColouredGraph::new(n, edges).unwrap(),
            )
        })
}

fn subset(n: usize, bits: u64) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|&v| bits >> v & 1 == 1))
}

proptest! {
    #[test]
    fn serialization_round_trips((o, c) in graphs(9)) {
        for g in [ParsedGraph::from(o.clone()), ParsedGraph::from(c.clone()), ParsedGraph::from(o.underlying())] {
            prop_assert_eq!(parse_graph(&g.to_string()).unwrap(), g);
        }
    }

    #[test]
    fn hull_is_a_closure_operator((o, c) in graphs(10), a in any::<u64>(), b in any::<u64>()) {
        for g in [MixedGraph::from(o), MixedGraph::from(c)] {
            let n = g.n();
            let small = subset(n, a & b);
            let large = subset(n, a);
            let trace = convex_hull(&g, &large).unwrap();
            let hull = trace.hull().clone();
            prop_assert!(large.is_subset(&hull));
            prop_assert!(trace.layers().len() <= n + 1);
            let again = convex_hull(&g, &hull).unwrap();
            prop_assert_eq!(again.layers().len(), 1);
            prop_assert_eq!(again.hull(), &hull);
            prop_assert!(convex_hull(&g, &small).unwrap().hull().is_subset(&hull));
        }
    }

    #[test]
    fn reversing_an_arc_twice_is_identity((o, _) in graphs(8), pick in any::<prop::sample::Index>()) {
        prop_assume!(o.arc_count() > 0);
        let a = o.arcs()[pick.index(o.arc_count())];
        let once = reverse_arc(&o, a).unwrap();
        prop_assert_eq!(reverse_arc(&once, (a.1, a.0)).unwrap(), o);
    }

    // Gluing a directed 3-cycle on an arc of a complete convex graph keeps it
    // complete convex.
    #[test]
    fn degree2_extension_keeps_complete_convexity(seed in any::<u64>(), steps in 1usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = OrientedGraph::directed_cycle(3);
        for _ in 0..steps {
            let a = g.arcs()[rand::Rng::gen_range(&mut rng, 0..g.arc_count())];
            g = add_degree2_vertex(&g, a).unwrap();
            prop_assert!(is_complete_convex(&g.clone().into()).unwrap());
        }
        let glued = identify_arcs(&g, g.arcs()[0], &OrientedGraph::directed_cycle(3), (0, 1)).unwrap();
        prop_assert!(is_complete_convex(&glued.into()).unwrap());
    }

    #[test]
    fn encodings_round_trip(seed in any::<u64>(), clauses in 1usize..5, pick in any::<prop::sample::Index>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let y = random_instance(&mut rng, clauses);
        prop_assert_eq!(parse_nae(&y.to_string()).unwrap(), y.clone());
        let solutions = nae_solutions(&y, 24).unwrap();
        prop_assume!(!solutions.is_empty());
        let s = solutions[pick.index(solutions.len())].clone();
        prop_assert_eq!(s.to_string().parse::<Assignment>().unwrap(), s.clone());

        let c = colouring_from_assignment(&y, &s).unwrap();
        let o = orientation_from_assignment(&y, &s).unwrap();
        prop_assert_eq!(colouring_from_assignment(&y, &s.complement()).unwrap(), c.swap_colours());
        prop_assert_eq!(orientation_from_assignment(&y, &s.complement()).unwrap(), o.converse());

        for (g, variant) in [(MixedGraph::from(c), Variant::Coloured), (MixedGraph::from(o), Variant::Oriented)] {
            let gadget = build_gadget(&y, variant);
            prop_assert_eq!(decode_assignment(&g, &gadget).unwrap(), s.clone());
            // The labelled serialization carries the roles the decoder checks.
            let mut text = g.to_string();
            for (v, role) in gadget.roles().iter().enumerate() {
                text.push_str(&format!("# label {v} {role}\n"));
            }
            let doc = parse_document(&text).unwrap();
            prop_assert!(gadget.check_labels(&doc.labels).is_ok());
        }
    }
}
