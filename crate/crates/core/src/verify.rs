//! Desk-scale verification harness: every structural property is checked
//! exhaustively on small graphs and on seeded random graphs beyond that.

use std::collections::HashSet;
use std::fmt;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::convexity::{convex_hull, is_complete_convex, is_convex};
use crate::graph::{
    canonical_code_oriented, connected_graph_classes, enumerate_colourings, enumerate_orientations,
    oriented_from_code, Colour, MixedGraph, OrientedGraph, SimpleGraph, TwoEdgeColouredGraph,
    VertexId,
};
use crate::homomorphism::{
    admits_improper, classify, find_homomorphism, oriented_chromatic_number, quotient_by_convex,
    simple_chromatic_number, HomClass, SearchMode, Target,
};
use crate::structure::{
    add_arc, add_edge, are_alternating_ends, are_dipath_ends, check_2tree_orientation, delete_arc,
    delete_edge, has_treewidth_at_most_two, identify_arcs, identify_edges, is_two_tree,
    recolour_edge, reverse_arc, two_tree_classes,
};

/// Largest vertex count the harness accepts.
pub const MAX_VERIFY_N: usize = 7;

/// Vertex counts up to this bound are enumerated exhaustively.
pub const EXHAUSTIVE_N: usize = 5;

/// Identifications are tested over complete convex graphs up to this size.
const IDENTIFY_N: usize = 4;

macro_rules! properties {
    ($($variant:ident => $id:literal,)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Property { $($variant,)* }

        impl Property {
            pub const ALL: &'static [Property] = &[$(Property::$variant,)*];

            pub fn id(self) -> &'static str {
                match self { $(Property::$variant => $id,)* }
            }
        }
    };
}

properties! {
    ImproperIffNotCc => "improper-iff-not-cc",
    HullConstantOnLoopEdge => "hull-constant-on-loop-edge",
    QuotientAntisymmetry => "quotient-antisymmetry",
    CcChiEqualsChiS => "cc-chi-equals-chi-s",
    ChiSLeChi => "chi-s-le-chi",
    IdentifyArcsCc => "identify-arcs-cc",
    IdentifyEdgesCc => "identify-edges-cc",
    Degree2InDirectedTriangle => "degree2-in-directed-triangle",
    Degree2RemovalCc => "degree2-removal-cc",
    ReverseDeleteArcCc => "reverse-delete-arc-cc",
    AddArcCc => "add-arc-cc",
    TwoTreeOrientation => "two-tree-orientation",
    EcMinDegree3 => "ec-min-degree-3",
    EcSparseNotCc => "ec-sparse-not-cc",
    EcTreewidth2NotCc => "ec-treewidth2-not-cc",
    EcRecolourDelete => "ec-recolour-delete",
    EcAddEdge => "ec-add-edge",
    FamilyForests => "family-forests",
    FamilyMaxDegree2 => "family-max-degree-2",
    FamilyTreewidth2 => "family-treewidth-2",
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .iter()
            .copied()
            .find(|p| p.id() == s)
            .ok_or_else(|| format!("unknown property `{s}`"))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub seed: u64,
    pub only: Option<Property>,
    /// Random connected graphs drawn on `EXHAUSTIVE_N + 1..=max_n` vertices.
    pub random_samples: u64,
    /// Chromatic properties run on every `chromatic_stride`-th random sample.
    pub chromatic_stride: u64,
}

impl VerifyConfig {
    pub fn new(max_n: usize, seed: u64) -> Self {
        VerifyConfig {
            max_n,
            seed,
            only: None,
            random_samples: 100_000,
            chromatic_stride: 1,
        }
    }

    fn enabled(&self, p: Property) -> bool {
        self.only.is_none_or(|q| q == p)
    }
}

/// Substitutable pieces, so tests can check that the harness catches a
/// broken implementation.
#[derive(Clone, Copy)]
pub struct VerifyHooks {
    pub two_tree_classifier: fn(&OrientedGraph) -> bool,
}

impl Default for VerifyHooks {
    fn default() -> Self {
        VerifyHooks {
            two_tree_classifier: |g| check_2tree_orientation(g).unwrap_or(false),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The graph (in the graph file format) that violates the property.
    Fail(String),
    /// A family bound that no instance reached.
    BoundNotAttained(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyResult {
    pub property: Property,
    pub instances: u64,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub seed: u64,
    pub max_n: usize,
    /// Random graphs examined beyond the exhaustive range.
    pub random_samples: u64,
    pub results: Vec<PropertyResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.outcome == Outcome::Pass)
    }

    /// Report lines, writing each counterexample to `dir`.
    pub fn render(&self, dir: &Path) -> io::Result<Vec<String>> {
        self.results
            .iter()
            .map(|r| {
                Ok(match &r.outcome {
                    Outcome::Pass => format!("{} PASS instances={}", r.property, r.instances),
                    Outcome::Fail(graph) => {
                        let path = counterexample_path(dir, r.property, self.seed);
                        std::fs::write(&path, graph)?;
                        format!("{} FAIL counterexample={}", r.property, path.display())
                    }
                    Outcome::BoundNotAttained(bound) => {
                        format!(
                            "{} FAIL counterexample=none (no instance reaches {bound})",
                            r.property
                        )
                    }
                })
            })
            .collect()
    }
}

pub fn counterexample_path(dir: &Path, p: Property, seed: u64) -> PathBuf {
    dir.join(format!("cconv-{p}-seed{seed}.txt"))
}

/// Per-property instance count and first counterexample.
#[derive(Clone, Debug, Default)]
struct Tally {
    instances: u64,
    counterexample: Option<String>,
    /// Largest simple chromatic number seen, for family bounds.
    peak: usize,
}

#[derive(Clone, Debug)]
struct Tallies(Vec<Tally>);

impl Tallies {
    fn new() -> Self {
        Tallies(vec![Tally::default(); Property::ALL.len()])
    }

    fn record(&mut self, p: Property, ok: bool, witness: impl FnOnce() -> String) {
        let t = &mut self.0[p as usize];
        t.instances += 1;
        if !ok && t.counterexample.is_none() {
            t.counterexample = Some(witness());
        }
    }

    fn peak(&mut self, p: Property, value: usize) {
        let t = &mut self.0[p as usize];
        t.peak = t.peak.max(value);
    }

    /// Order-preserving merge: the earlier counterexample wins.
    fn merge(mut self, other: Tallies) -> Tallies {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            a.instances += b.instances;
            a.peak = a.peak.max(b.peak);
            if a.counterexample.is_none() {
                a.counterexample = b.counterexample;
            }
        }
        self
    }
}

/// Facts about an underlying graph shared by all its orientations and
/// colourings.
struct Shape {
    edges: usize,
    is_forest: bool,
    max_degree: usize,
    treewidth2: bool,
    two_tree: bool,
}

impl Shape {
    fn of(g: &SimpleGraph) -> Self {
        Shape {
            edges: g.edge_count(),
            is_forest: g.edge_count() + 1 == g.n(),
            max_degree: g.degrees().into_iter().max().unwrap_or(0),
            treewidth2: has_treewidth_at_most_two(g),
            two_tree: is_two_tree(g),
        }
    }
}

struct Checker<'a> {
    config: &'a VerifyConfig,
    hooks: VerifyHooks,
}

fn cc(g: impl Into<MixedGraph>) -> bool {
    is_complete_convex(&g.into()).unwrap_or(false)
}

impl Checker<'_> {
    fn on(&self, p: Property) -> bool {
        self.config.enabled(p)
    }

    fn any_on(&self, ps: &[Property]) -> bool {
        ps.iter().any(|&p| self.on(p))
    }

    /// Properties shared by both kinds: the improper-homomorphism
    /// characterisation and its witnesses.
    fn common(&self, g: &MixedGraph, is_cc: bool, all_subsets: bool, t: &mut Tallies) {
        use Property::*;
        if self.any_on(&[ImproperIffNotCc, HullConstantOnLoopEdge]) {
            let witness = admits_improper(g).expect("graph has edges");
            let ok = match &witness {
                None => is_cc,
                Some((_, h)) => !is_cc && classify(h) == HomClass::Improper,
            };
            if self.on(ImproperIffNotCc) {
                t.record(ImproperIffNotCc, ok, || g.to_string());
            }
            if let (Some((_, h)), true) = (&witness, self.on(HullConstantOnLoopEdge)) {
                let image = h.image();
                let ok = g
                    .edge_ends()
                    .into_iter()
                    .filter(|&(u, v)| image[u] == image[v])
                    .all(|(u, v)| {
                        let hull = convex_hull(g, &VertexSet::from_vertices(g.n(), [u, v]))
                            .expect("in range")
                            .into_hull();
                        hull.iter().all(|x| image[x] == image[u])
                    });
                t.record(HullConstantOnLoopEdge, ok, || g.to_string());
            }
        }
        if self.on(QuotientAntisymmetry) {
            let n = g.n();
            let candidates: Vec<VertexSet> = if all_subsets {
                (1u64..(1 << n) - 1)
                    .map(|m| VertexSet::from_vertices(n, (0..n).filter(|&v| m >> v & 1 == 1)))
                    .collect()
            } else {
                g.edge_ends()
                    .into_iter()
                    .map(|(u, v)| {
                        convex_hull(g, &VertexSet::from_vertices(n, [u, v]))
                            .expect("in range")
                            .into_hull()
                    })
                    .collect()
            };
            let mut ok = true;
            for s in candidates {
                let internal = g
                    .edge_ends()
                    .iter()
                    .any(|&(u, v)| s.contains(u) && s.contains(v));
                if s.is_full() || !internal || !is_convex(g, &s).expect("in range") {
                    continue;
                }
                ok &= matches!(quotient_by_convex(g, &s), Ok((_, h)) if classify(&h) == HomClass::Improper);
            }
            t.record(QuotientAntisymmetry, ok, || g.to_string());
        }
    }

    fn oriented(
        &self,
        g: &OrientedGraph,
        shape: &Shape,
        chromatic: bool,
        all_subsets: bool,
        t: &mut Tallies,
    ) {
        use Property::*;
        let mixed = MixedGraph::from(g.clone());
        let is_cc = cc(mixed.clone());
        self.common(&mixed, is_cc, all_subsets, t);
        let n = g.n();
        let show = || g.to_string();

        if is_cc && n >= 3 {
            let degree2: Vec<VertexId> = (0..n)
                .filter(|&v| g.out_neighbours(v).len() + g.in_neighbours(v).len() == 2)
                .collect();
            if self.on(Degree2InDirectedTriangle) && !degree2.is_empty() {
                let ok = degree2.iter().all(|&v| {
                    let (outs, ins) = (g.out_neighbours(v), g.in_neighbours(v));
                    // A directed 3-cycle through v enters it from one side and leaves through the other.
                    outs.len() == 1 && ins.len() == 1 && g.has_arc(outs[0], ins[0])
                });
                t.record(Degree2InDirectedTriangle, ok, show);
            }
            if self.on(Degree2RemovalCc) && !degree2.is_empty() {
                let ok = degree2.iter().all(|&v| cc(g.remove_vertex(v)));
                t.record(Degree2RemovalCc, ok, show);
            }
            if self.on(ReverseDeleteArcCc) {
                let ok = g.arcs().iter().all(|&a| {
                    !cc(reverse_arc(g, a).expect("arc present"))
                        || cc(delete_arc(g, a).expect("arc present"))
                });
                t.record(ReverseDeleteArcCc, ok, show);
            }
            if self.on(AddArcCc) {
                let mut ok = true;
                for v in 0..n {
                    for u in 0..v {
                        if g.adjacent(u, v)
                            || !(are_dipath_ends(g, u, v) || are_dipath_ends(g, v, u))
                        {
                            continue;
                        }
                        for (p, q) in [(u, v), (v, u)] {
                            ok &= cc(add_arc(g, p, q).expect("non-adjacent pair").0);
                        }
                    }
                }
                t.record(AddArcCc, ok, show);
            }
        }

        if shape.two_tree && self.on(TwoTreeOrientation) {
            t.record(
                TwoTreeOrientation,
                (self.hooks.two_tree_classifier)(g) == is_cc,
                show,
            );
        }
        if shape.two_tree && is_cc && self.on(FamilyTreewidth2) {
            let c3 = Target::Irreflexive(OrientedGraph::directed_cycle(3).into());
            let ok = find_homomorphism(&mixed, &c3, SearchMode::Proper).is_some();
            t.record(FamilyTreewidth2, ok, show);
        }

        let family = [
            (shape.is_forest, FamilyForests, 2),
            (shape.max_degree <= 2, FamilyMaxDegree2, 3),
            (shape.treewidth2, FamilyTreewidth2, 3),
        ];
        let wants_family = family.iter().any(|&(member, p, _)| member && self.on(p));
        let wants_chi = chromatic && (self.on(ChiSLeChi) || (is_cc && self.on(CcChiEqualsChiS)));
        if !(wants_family && chromatic) && !wants_chi {
            return;
        }
        let limit = n.max(1);
        let (chi_s, _) = simple_chromatic_number(g, limit)
            .expect("graph has arcs and n is within the tournament limit");
        if chromatic {
            for (member, p, bound) in family {
                if member && self.on(p) {
                    t.record(p, chi_s <= bound, show);
                    t.peak(p, chi_s);
                }
            }
        }
        if wants_chi {
            let (chi, _) =
                oriented_chromatic_number(g, limit).expect("n is within the tournament limit");
            if self.on(ChiSLeChi) {
                t.record(ChiSLeChi, chi_s <= chi, show);
            }
            if is_cc && self.on(CcChiEqualsChiS) {
                t.record(CcChiEqualsChiS, chi == chi_s, show);
            }
        }
    }

    fn coloured(
        &self,
        g: &TwoEdgeColouredGraph,
        shape: &Shape,
        all_subsets: bool,
        t: &mut Tallies,
    ) {
        use Property::*;
        let mixed = MixedGraph::from(g.clone());
        let is_cc = cc(mixed.clone());
        self.common(&mixed, is_cc, all_subsets, t);
        let n = g.n();
        let show = || g.to_string();

        if is_cc && self.on(EcMinDegree3) {
            let degrees = g.underlying().degrees();
            let ok = (n == 2 && g.is_monochromatic()) || degrees.iter().all(|&d| d >= 3);
            t.record(EcMinDegree3, ok, show);
        }
        if n >= 3 && shape.edges <= 2 * n - 3 && self.on(EcSparseNotCc) {
            t.record(EcSparseNotCc, !is_cc, show);
        }
        if n >= 3 && shape.treewidth2 && self.on(EcTreewidth2NotCc) {
            t.record(EcTreewidth2NotCc, !is_cc, show);
        }
        if is_cc && n >= 3 && self.on(EcRecolourDelete) {
            let ok = g.edges().iter().all(|&(u, v, _)| {
                !cc(recolour_edge(g, u, v).expect("edge present"))
                    || cc(delete_edge(g, u, v).expect("edge present"))
            });
            t.record(EcRecolourDelete, ok, show);
        }
        if is_cc && self.on(EcAddEdge) {
            let mut ok = true;
            for v in 0..n {
                for u in 0..v {
                    if g.colour(u, v).is_some() || !are_alternating_ends(g, u, v) {
                        continue;
                    }
                    for c in [Colour::Red, Colour::Blue] {
                        ok &= cc(add_edge(g, u, v, c).expect("non-adjacent pair").0);
                    }
                }
            }
            t.record(EcAddEdge, ok, show);
        }
    }

    /// Every orientation and colouring of one underlying graph.
    fn exhaust(&self, g: &SimpleGraph) -> Tallies {
        let shape = Shape::of(g);
        let mut t = Tallies::new();
        if g.edge_count() == 0 {
            return t;
        }
        for o in enumerate_orientations(g) {
            self.oriented(&o, &shape, true, true, &mut t);
        }
        for c in enumerate_colourings(g) {
            self.coloured(&c, &shape, true, &mut t);
        }
        t
    }

    fn sample(&self, index: u64) -> Tallies {
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        rng.set_stream(index);
        let n = rng.gen_range(EXHAUSTIVE_N + 1..=self.config.max_n);
        let g = random_connected_graph(&mut rng, n);
        let shape = Shape::of(&g);
        let orientation = OrientedGraph::new(
            n,
            g.edges()
                .iter()
                .map(|&(u, v)| if rng.gen() { (u, v) } else { (v, u) }),
        )
        .expect("orientation");
        let colouring = TwoEdgeColouredGraph::new(
            n,
            g.edges()
                .iter()
                .map(|&(u, v)| (u, v, if rng.gen() { Colour::Red } else { Colour::Blue })),
        )
        .expect("colouring");
        let mut t = Tallies::new();
        let chromatic = index.is_multiple_of(self.config.chromatic_stride.max(1));
        self.oriented(&orientation, &shape, chromatic, false, &mut t);
        self.coloured(&colouring, &shape, false, &mut t);
        t
    }
}

/// Random connected graph: a random recursive tree plus each other pair
/// with a density drawn per graph, biased towards dense graphs where
/// complete convex instances live.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize) -> SimpleGraph {
    let density: f64 = rng.gen_range(0.3..1.0);
    let mut edges = HashSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(density) {
                edges.insert((u, v));
            }
        }
    }
    SimpleGraph::new(n, edges).expect("pairs are distinct and in range")
}

/// Complete convex oriented graphs on `2..=n` vertices, one per
/// isomorphism class.
fn cc_oriented_classes(n: usize) -> Vec<OrientedGraph> {
    let mut out = Vec::new();
    for k in 2..=n {
        let mut codes = HashSet::new();
        for g in connected_graph_classes(k, k).expect("small n") {
            for o in enumerate_orientations(&g) {
                if cc(o.clone()) {
                    codes.insert(canonical_code_oriented(&o));
                }
            }
        }
        let mut codes: Vec<_> = codes.into_iter().collect();
        codes.sort_unstable();
        out.extend(codes.into_iter().map(|c| oriented_from_code(k, c)));
    }
    out
}

fn cc_coloured(n: usize) -> Vec<TwoEdgeColouredGraph> {
    (2..=n)
        .flat_map(|k| connected_graph_classes(k, k).expect("small n"))
        .flat_map(|g| {
            enumerate_colourings(&g)
                .filter(|c| cc(c.clone()))
                .collect::<Vec<_>>()
        })
        .collect()
}

fn identifications(config: &VerifyConfig) -> Tallies {
    let mut t = Tallies::new();
    let n = config.max_n.min(IDENTIFY_N);
    if config.enabled(Property::IdentifyArcsCc) {
        let graphs = cc_oriented_classes(n);
        for g in &graphs {
            for h in &graphs {
                for &a in g.arcs() {
                    for &b in h.arcs() {
                        let glued = identify_arcs(g, a, h, b).expect("arcs present");
                        t.record(Property::IdentifyArcsCc, cc(glued.clone()), || {
                            glued.to_string()
                        });
                    }
                }
            }
        }
    }
    if config.enabled(Property::IdentifyEdgesCc) {
        let graphs = cc_coloured(n);
        let parts: Vec<Tallies> = graphs
            .par_iter()
            .map(|g| {
                let mut t = Tallies::new();
                for h in &graphs {
                    for &(p, q, c) in g.edges() {
                        for &(r, s, d) in h.edges() {
                            if c != d {
                                continue;
                            }
                            for b in [(r, s), (s, r)] {
                                let glued = identify_edges(g, (p, q), h, b).expect("same colour");
                                t.record(Property::IdentifyEdgesCc, cc(glued.clone()), || {
                                    glued.to_string()
                                });
                            }
                        }
                    }
                }
                t
            })
            .collect();
        t = parts.into_iter().fold(t, Tallies::merge);
    }
    t
}

/// Every orientation of every 2-tree up to `max_n`; the exhaustive phase
/// already covers the small ones.
fn large_two_trees(checker: &Checker<'_>) -> Tallies {
    let mut t = Tallies::new();
    if !checker.any_on(&[Property::TwoTreeOrientation, Property::FamilyTreewidth2]) {
        return t;
    }
    for n in EXHAUSTIVE_N + 1..=checker.config.max_n {
        let classes = two_tree_classes(n, MAX_VERIFY_N).expect("n within limit");
        let parts: Vec<Tallies> = classes
            .par_iter()
            .map(|g| {
                let mut t = Tallies::new();
                for o in enumerate_orientations(g) {
                    let is_cc = cc(o.clone());
                    if checker.on(Property::TwoTreeOrientation) {
                        t.record(
                            Property::TwoTreeOrientation,
                            (checker.hooks.two_tree_classifier)(&o) == is_cc,
                            || o.to_string(),
                        );
                    }
                    if is_cc && checker.on(Property::FamilyTreewidth2) {
                        let c3 = Target::Irreflexive(OrientedGraph::directed_cycle(3).into());
                        let ok =
                            find_homomorphism(&o.clone().into(), &c3, SearchMode::Proper).is_some();
                        t.record(Property::FamilyTreewidth2, ok, || o.to_string());
                    }
                }
                t
            })
            .collect();
        t = parts.into_iter().fold(t, Tallies::merge);
    }
    t
}

/// Runs every enabled property. `config.max_n` is clamped to
/// `2..=MAX_VERIFY_N`.
pub fn verify_suite(config: &VerifyConfig, hooks: VerifyHooks) -> Report {
    let max_n = config.max_n.clamp(2, MAX_VERIFY_N);
    let config = VerifyConfig {
        max_n,
        ..config.clone()
    };
    let checker = Checker {
        config: &config,
        hooks,
    };

    let graphs: Vec<SimpleGraph> = (2..=max_n.min(EXHAUSTIVE_N))
        .flat_map(|n| connected_graph_classes(n, n).expect("small n"))
        .collect();
    let exhaustive = graphs
        .par_iter()
        .map(|g| checker.exhaust(g))
        .reduce(Tallies::new, Tallies::merge);

    let samples = if max_n > EXHAUSTIVE_N {
        config.random_samples
    } else {
        0
    };
    let random = (0..samples)
        .into_par_iter()
        .map(|i| checker.sample(i))
        .reduce(Tallies::new, Tallies::merge);

    let tallies = exhaustive
        .merge(random)
        .merge(large_two_trees(&checker))
        .merge(identifications(&config));

    let results = Property::ALL
        .iter()
        .copied()
        .filter(|&p| config.enabled(p))
        .map(|p| {
            let tally = &tallies.0[p as usize];
            let bound = match p {
                Property::FamilyForests => Some(2),
                Property::FamilyMaxDegree2 | Property::FamilyTreewidth2 if max_n >= 3 => Some(3),
                _ => None,
            };
            let outcome = match (&tally.counterexample, bound) {
                (Some(g), _) => Outcome::Fail(g.clone()),
                (None, Some(b)) if tally.peak < b => Outcome::BoundNotAttained(b),
                (None, _) => Outcome::Pass,
            };
            PropertyResult {
                property: p,
                instances: tally.instances,
                outcome,
            }
        })
        .collect();
    Report {
        seed: config.seed,
        max_n,
        random_samples: samples,
        results,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(max_n: usize) -> VerifyConfig {
        VerifyConfig {
            random_samples: 200,
            chromatic_stride: 4,
            ..VerifyConfig::new(max_n, 1)
        }
    }

    #[test]
    fn property_ids_round_trip() {
        for &p in Property::ALL {
            assert_eq!(p.id().parse::<Property>().unwrap(), p);
        }
        assert!("no-such-property".parse::<Property>().is_err());
    }

    #[test]
    fn small_suite_passes() {
        let report = verify_suite(&quick(4), VerifyHooks::default());
        assert_eq!(report.results.len(), Property::ALL.len());
        for r in &report.results {
            assert_eq!(r.outcome, Outcome::Pass, "{}", r.property);
        }
        let count = |p: Property| {
            report
                .results
                .iter()
                .find(|r| r.property == p)
                .unwrap()
                .instances
        };
        assert!(count(Property::ImproperIffNotCc) > 0);
        assert!(count(Property::EcSparseNotCc) > 0);
    }

    #[test]
    fn random_phase_runs() {
        let config = VerifyConfig {
            only: Some(Property::ReverseDeleteArcCc),
            ..quick(6)
        };
        let report = verify_suite(&config, VerifyHooks::default());
        assert_eq!(report.random_samples, 200);
        assert_eq!(report.results.len(), 1);
        assert_eq!(report.results[0].outcome, Outcome::Pass);
    }

    #[test]
    fn reports_are_deterministic() {
        let config = VerifyConfig {
            only: Some(Property::EcAddEdge),
            ..quick(6)
        };
        assert_eq!(
            verify_suite(&config, VerifyHooks::default()),
            verify_suite(&config, VerifyHooks::default())
        );
    }

    #[test]
    fn mutant_classifier_is_caught() {
        let hooks = VerifyHooks {
            two_tree_classifier: |_| true,
        };
        let config = VerifyConfig {
            only: Some(Property::TwoTreeOrientation),
            ..quick(4)
        };
        let report = verify_suite(&config, hooks);
        let dir = tempfile_dir();
        let lines = report.render(&dir).unwrap();
        assert!(
            lines[0].starts_with("two-tree-orientation FAIL counterexample="),
            "{}",
            lines[0]
        );
        let path = counterexample_path(&dir, Property::TwoTreeOrientation, 1);
        let text = std::fs::read_to_string(path).unwrap();
        assert!(text.starts_with("kind oriented"));
    }

    fn tempfile_dir() -> PathBuf {
        let dir = std::env::temp_dir().join(format!("cconv-verify-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        dir
    }
}
