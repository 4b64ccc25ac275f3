//! Monotone not-all-equal 3-SAT instances and their gadget graphs: the
//! 2-edge-coloured gadget `G_Y` and the orientation gadget `G'_Y`, encoders
//! from assignments, the decoder, and brute-force solvers on both sides.
//!
//! Vertex layout of `G_Y` (clauses and positions 0-based, variables 1-based):
//! `0` is `b`, `1..=L` are the variable vertices, then each clause `c`
//! contributes `x_f, x_f', x_f''` for each of its three positions, starting
//! at `1 + L + 9c`. `G'_Y` drops `x_f''` and appends the clause vertex `g`,
//! so clause `c` starts at `1 + L + 7c` and lays out
//! `[x_f, x_f'] x 3, g`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::convexity::{is_complete_convex, Closure};
use crate::graph::{
    Colour, MixedGraph, OrientedGraph, SimpleGraph, TwoEdgeColouredGraph, VertexId,
};

/// Largest variable count `nae_solve` accepts by default.
pub const DEFAULT_NAE_LIMIT: usize = 24;

/// Largest edge count the exhaustive CC scan accepts by default.
pub const DEFAULT_EXHAUSTIVE_EDGE_LIMIT: usize = 28;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NaeParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `p nae <vars> <clauses>` header")]
    MissingHeader,
    #[error("header announces {expected} clauses, found {found}")]
    ClauseCount { expected: usize, found: usize },
    #[error(transparent)]
    Invalid(#[from] InstanceError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("instance has no clauses")]
    Empty,
    #[error("clause {clause} repeats variable {variable}")]
    RepeatedVariable { clause: usize, variable: usize },
    #[error("clause {clause} uses variable {variable}, outside 1..={count}")]
    VariableOutOfRange {
        clause: usize,
        variable: usize,
        count: usize,
    },
    #[error(
        "clause-variable incidence is disconnected (variable {0} is not reachable from variable 1)"
    )]
    Disconnected(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("assignment has {got} values, instance has {expected} variables")]
    AssignmentLength { got: usize, expected: usize },
    #[error("assignment gives every variable of clause {0} the same value")]
    NotSatisfying(usize),
    #[error("graph does not match the {0} gadget of this instance")]
    GadgetMismatch(Variant),
    #[error("label {label:?} on vertex {vertex} disagrees with role {role}")]
    LabelMismatch {
        vertex: VertexId,
        label: String,
        role: Role,
    },
    #[error("graph is not complete convex")]
    NotCompleteConvex,
    #[error("{variables} variables exceeds the limit of {limit}")]
    TooManyVariables { variables: usize, limit: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("graph has no edges")]
    Edgeless,
    #[error("{edges} edges exceeds the exhaustive limit of {limit}")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("exhaustive scan supports at most 64 vertices, graph has {0}")]
    TooManyVertices(usize),
    #[error("node budget of {0} exhausted before the search finished")]
    BudgetExhausted(u64),
}

/// A monotone NAE-3SAT formula: every clause is three distinct positive
/// variables from `1..=variable_count`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NaeInstance {
    variable_count: usize,
    clauses: Vec<[usize; 3]>,
}

impl NaeInstance {
    /// Validates clauses and the standing assumption that no partition of the
    /// variables splits the clauses (the incidence structure is connected and
    /// every variable occurs).
    pub fn new(variable_count: usize, clauses: Vec<[usize; 3]>) -> Result<Self, InstanceError> {
        if clauses.is_empty() {
            return Err(InstanceError::Empty);
        }
        for (i, clause) in clauses.iter().enumerate() {
            for (j, &x) in clause.iter().enumerate() {
                if x == 0 || x > variable_count {
                    return Err(InstanceError::VariableOutOfRange {
                        clause: i + 1,
                        variable: x,
                        count: variable_count,
                    });
                }
                if clause[..j].contains(&x) {
                    return Err(InstanceError::RepeatedVariable {
                        clause: i + 1,
                        variable: x,
                    });
                }
            }
        }
        let mut reached = vec![false; variable_count + 1];
        reached[clauses[0][0]] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for clause in &clauses {
                if clause.iter().any(|&x| reached[x]) {
                    for &x in clause {
                        changed |= !reached[x];
                        reached[x] = true;
                    }
                }
            }
        }
        if let Some(x) = (1..=variable_count).find(|&x| !reached[x]) {
            return Err(InstanceError::Disconnected(x));
        }
        Ok(NaeInstance {
            variable_count,
            clauses,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, s: &Assignment) -> bool {
        s.len() == self.variable_count && self.first_violated(s).is_none()
    }

    /// 1-based index of the first clause whose variables all agree.
    fn first_violated(&self, s: &Assignment) -> Option<usize> {
        self.clauses
            .iter()
            .position(|c| s.get(c[0]) == s.get(c[1]) && s.get(c[1]) == s.get(c[2]))
            .map(|i| i + 1)
    }

    fn check(&self, s: &Assignment) -> Result<(), ReductionError> {
        if s.len() != self.variable_count {
            return Err(ReductionError::AssignmentLength {
                got: s.len(),
                expected: self.variable_count,
            });
        }
        match self.first_violated(s) {
            Some(c) => Err(ReductionError::NotSatisfying(c)),
            None => Ok(()),
        }
    }
}

impl fmt::Display for NaeInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p nae {} {}", self.variable_count, self.clauses.len())?;
        for [a, b, c] in &self.clauses {
            writeln!(f, "{a} {b} {c} 0")?;
        }
        Ok(())
    }
}

/// Parses `p nae <vars> <clauses>` followed by `<a> <b> <c> 0` lines.
/// Lines starting with `c` or `#` are comments.
pub fn parse_nae(text: &str) -> Result<NaeInstance, NaeParseError> {
    let syntax = |line: usize, message: String| NaeParseError::Syntax { line, message };
    let mut header = None;
    let mut clauses = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.as_slice() {
            [] => continue,
            [first, ..] if first.starts_with('c') || first.starts_with('#') => continue,
            ["p", "nae", vars, count] if header.is_none() => {
                let parse = |t: &str| {
                    t.parse::<usize>()
                        .map_err(|_| syntax(line, format!("bad number `{t}`")))
                };
                header = Some((parse(vars)?, parse(count)?));
            }
            ["p", ..] => {
                return Err(syntax(
                    line,
                    "expected a single `p nae <vars> <clauses>` header".into(),
                ))
            }
            _ if header.is_none() => return Err(NaeParseError::MissingHeader),
            [a, b, c, "0"] => {
                let mut clause = [0; 3];
                for (slot, t) in clause.iter_mut().zip([a, b, c]) {
                    *slot = t.parse::<usize>().map_err(|_| {
                        syntax(line, format!("expected a positive variable, found `{t}`"))
                    })?;
                }
                clauses.push(clause);
            }
            _ => return Err(syntax(line, "expected `<a> <b> <c> 0`".into())),
        }
    }
    let (vars, count) = header.ok_or(NaeParseError::MissingHeader)?;
    if clauses.len() != count {
        return Err(NaeParseError::ClauseCount {
            expected: count,
            found: clauses.len(),
        });
    }
    Ok(NaeInstance::new(vars, clauses)?)
}

/// Truth values indexed by variable; written as a bit string with variable 1
/// first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment(Vec<bool>);

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value of the 1-based variable `x`.
    pub fn get(&self, x: usize) -> bool {
        self.0[x - 1]
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }

    pub fn complement(&self) -> Assignment {
        Assignment(self.0.iter().map(|b| !b).collect())
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("assignment must be a non-empty string of 0s and 1s")]
pub struct AssignmentParseError;

impl FromStr for Assignment {
    type Err = AssignmentParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(AssignmentParseError);
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(AssignmentParseError),
            })
            .collect::<Result<_, _>>()
            .map(Assignment)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `G_Y`, decided by 2-edge-colourings.
    Coloured,
    /// `G'_Y`, decided by orientations.
    Oriented,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Coloured => "2ec",
            Variant::Oriented => "orient",
        })
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "2ec" => Ok(Variant::Coloured),
            "orient" => Ok(Variant::Oriented),
            other => Err(format!(
                "unknown variant `{other}` (expected 2ec or orient)"
            )),
        }
    }
}

/// Which copy of a literal occurrence a vertex is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Copy {
    Plain,
    Prime,
    DoublePrime,
}

/// Named role of a gadget vertex. Clauses are numbered from 1 in labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Hub,
    Variable(usize),
    Occurrence {
        variable: usize,
        clause: usize,
        copy: Copy,
    },
    Clause(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::Hub => f.write_str("b"),
            Role::Variable(x) => write!(f, "x{x}"),
            Role::Occurrence {
                variable,
                clause,
                copy,
            } => {
                let primes = match copy {
                    Copy::Plain => "",
                    Copy::Prime => "'",
                    Copy::DoublePrime => "''",
                };
                write!(f, "x{variable}{primes}@{}", clause + 1)
            }
            Role::Clause(c) => write!(f, "g{}", c + 1),
        }
    }
}

/// Vertices of one literal occurrence: `x_f`, `x_f'` and (in `G_Y` only)
/// `x_f''`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OccurrenceVertices {
    pub plain: VertexId,
    pub prime: VertexId,
    pub double_prime: Option<VertexId>,
}

/// `G_Y` or `G'_Y` together with the role of every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledGadgetGraph {
    graph: SimpleGraph,
    roles: Vec<Role>,
    variant: Variant,
    instance: NaeInstance,
}

pub const HUB: VertexId = 0;

impl LabelledGadgetGraph {
    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn instance(&self) -> &NaeInstance {
        &self.instance
    }

    pub fn variable_vertex(&self, x: usize) -> VertexId {
        x
    }

    fn clause_base(&self, c: usize) -> usize {
        1 + self.instance.variable_count
            + c * match self.variant {
                Variant::Coloured => 9,
                Variant::Oriented => 7,
            }
    }

    /// Vertices of the occurrence at position `p` of clause `c` (0-based).
    pub fn occurrence(&self, c: usize, p: usize) -> OccurrenceVertices {
        let base = self.clause_base(c);
        match self.variant {
            Variant::Coloured => OccurrenceVertices {
                plain: base + 3 * p,
                prime: base + 3 * p + 1,
                double_prime: Some(base + 3 * p + 2),
            },
            Variant::Oriented => OccurrenceVertices {
                plain: base + 2 * p,
                prime: base + 2 * p + 1,
                double_prime: None,
            },
        }
    }

    /// The clause vertex `g` of `G'_Y`.
    pub fn clause_vertex(&self, c: usize) -> Option<VertexId> {
        (self.variant == Variant::Oriented).then(|| self.clause_base(c) + 6)
    }

    /// Vertices of the literal gadget `F_{f,x}` (or `F'_{f,x}`):
    /// `b, x, x_f, x_f'` and `x_f''` when present.
    pub fn literal_vertices(&self, c: usize, p: usize) -> Vec<VertexId> {
        let o = self.occurrence(c, p);
        let mut vs = vec![HUB, self.instance.clauses[c][p], o.plain, o.prime];
        vs.extend(o.double_prime);
        vs
    }

    /// Vertices of the clause part `C_g` (`b, u_g, v_g, w_g`) or `C'_g`
    /// (additionally `g`).
    pub fn clause_part_vertices(&self, c: usize) -> Vec<VertexId> {
        let mut vs = vec![HUB];
        vs.extend((0..3).map(|p| self.occurrence(c, p).plain));
        vs.extend(self.clause_vertex(c));
        vs
    }

    /// Every vertex of the clause graph of clause `c`: `b`, its three
    /// variables and all occurrence (and clause) vertices.
    pub fn clause_graph_vertices(&self, c: usize) -> Vec<VertexId> {
        let mut vs = vec![HUB];
        vs.extend(self.instance.clauses[c]);
        let base = self.clause_base(c);
        let width = match self.variant {
            Variant::Coloured => 9,
            Variant::Oriented => 7,
        };
        vs.extend(base..base + width);
        vs
    }

    /// Checks `# label` lines against the gadget's roles.
    pub fn check_labels(&self, labels: &[(VertexId, String)]) -> Result<(), ReductionError> {
        for (v, label) in labels {
            let role = self
                .roles
                .get(*v)
                .ok_or(ReductionError::GadgetMismatch(self.variant))?;
            if role.to_string() != *label {
                return Err(ReductionError::LabelMismatch {
                    vertex: *v,
                    label: label.clone(),
                    role: *role,
                });
            }
        }
        Ok(())
    }
}

pub fn build_gadget(y: &NaeInstance, variant: Variant) -> LabelledGadgetGraph {
    let l = y.variable_count;
    let mut roles = vec![Role::Hub];
    roles.extend((1..=l).map(Role::Variable));
    let mut edges: Vec<(VertexId, VertexId)> = (1..=l).map(|x| (x, HUB)).collect();
    for (c, clause) in y.clauses.iter().enumerate() {
        let base = roles.len();
        let occ = |p: usize| match variant {
            Variant::Coloured => base + 3 * p,
            Variant::Oriented => base + 2 * p,
        };
        for (p, &x) in clause.iter().enumerate() {
            let (xf, xf1) = (occ(p), occ(p) + 1);
            roles.push(Role::Occurrence {
                variable: x,
                clause: c,
                copy: Copy::Plain,
            });
            roles.push(Role::Occurrence {
                variable: x,
                clause: c,
                copy: Copy::Prime,
            });
            edges.extend([(xf, HUB), (xf1, HUB), (x, xf1), (xf, xf1)]);
            if variant == Variant::Coloured {
                let xf2 = xf + 2;
                roles.push(Role::Occurrence {
                    variable: x,
                    clause: c,
                    copy: Copy::DoublePrime,
                });
                edges.extend([(xf2, HUB), (x, xf2), (xf, xf2)]);
            }
        }
        edges.extend([(occ(0), occ(1)), (occ(1), occ(2)), (occ(0), occ(2))]);
        if variant == Variant::Oriented {
            let g = roles.len();
            roles.push(Role::Clause(c));
            edges.extend((0..3).map(|p| (g, occ(p))));
        }
    }
    let graph = SimpleGraph::new(roles.len(), edges).expect("gadget edges are distinct");
    LabelledGadgetGraph {
        graph,
        roles,
        variant,
        instance: y.clone(),
    }
}

/// Clause positions reordered as `(u, v, w)` with the minority variable in
/// the `u` slot and the other two in their original order.
fn minority_first(clause: &[usize; 3], s: &Assignment) -> [usize; 3] {
    let vals = clause.map(|x| s.get(x));
    let u = (0..3).find(|&p| vals[p] != vals[(p + 1) % 3] && vals[p] != vals[(p + 2) % 3]);
    let u = u.expect("a not-all-equal clause has a minority position");
    let mut rest = (0..3).filter(|&p| p != u);
    [u, rest.next().unwrap(), rest.next().unwrap()]
}

/// The 2-edge-colouring of `G_Y` read off a not-all-equal satisfying
/// assignment.
pub fn colouring_from_assignment(
    y: &NaeInstance,
    s: &Assignment,
) -> Result<TwoEdgeColouredGraph, ReductionError> {
    y.check(s)?;
    let gadget = build_gadget(y, Variant::Coloured);
    let pick = |value: bool, red_when_true: bool| {
        if value == red_when_true {
            Colour::Red
        } else {
            Colour::Blue
        }
    };
    let mut edges: Vec<_> = (1..=y.variable_count)
        .map(|x| (x, HUB, pick(s.get(x), true)))
        .collect();
    for (c, clause) in y.clauses.iter().enumerate() {
        for (p, &x) in clause.iter().enumerate() {
            let o = gadget.occurrence(c, p);
            let xf2 = o.double_prime.expect("coloured gadget has x_f''");
            let v = s.get(x);
            edges.extend([
                (o.plain, HUB, pick(v, true)),
                (x, xf2, pick(v, true)),
                (o.plain, o.prime, pick(v, true)),
                (o.prime, HUB, pick(v, false)),
                (o.prime, x, pick(v, false)),
                (xf2, HUB, pick(v, false)),
                (o.plain, xf2, pick(v, false)),
            ]);
        }
        let [u, v, w] = minority_first(clause, s).map(|p| gadget.occurrence(c, p).plain);
        let minority = s.get(clause[minority_first(clause, s)[0]]);
        // Minority false: uw and wv blue, uv red; minority true: swapped.
        let (pair, single) = if minority {
            (Colour::Red, Colour::Blue)
        } else {
            (Colour::Blue, Colour::Red)
        };
        edges.extend([(u, w, pair), (w, v, pair), (u, v, single)]);
    }
    Ok(TwoEdgeColouredGraph::new(gadget.graph.n(), edges)
        .expect("encoding colours each gadget edge once"))
}

/// The orientation of `G'_Y` read off a not-all-equal satisfying assignment.
pub fn orientation_from_assignment(
    y: &NaeInstance,
    s: &Assignment,
) -> Result<OrientedGraph, ReductionError> {
    y.check(s)?;
    let gadget = build_gadget(y, Variant::Oriented);
    let dir = |forward: bool, a: VertexId, b: VertexId| if forward { (a, b) } else { (b, a) };
    let mut arcs: Vec<_> = (1..=y.variable_count)
        .map(|x| dir(s.get(x), HUB, x))
        .collect();
    for (c, clause) in y.clauses.iter().enumerate() {
        for (p, &x) in clause.iter().enumerate() {
            let o = gadget.occurrence(c, p);
            let v = s.get(x);
            arcs.extend([
                dir(v, x, o.prime),
                dir(v, o.plain, o.prime),
                dir(v, HUB, o.plain),
                dir(v, o.prime, HUB),
            ]);
        }
        let order = minority_first(clause, s);
        let [u, v, w] = order.map(|p| gadget.occurrence(c, p).plain);
        let g = gadget
            .clause_vertex(c)
            .expect("orientation gadget has clause vertices");
        // Minority false: w -> v, u -> g and the 4-cycle u -> v -> g -> w -> u;
        // minority true: the converse.
        let forward = !s.get(clause[order[0]]);
        arcs.extend(
            [(w, v), (u, g), (u, v), (v, g), (g, w), (w, u)].map(|(a, b)| dir(forward, a, b)),
        );
    }
    Ok(OrientedGraph::new(gadget.graph.n(), arcs).expect("encoding orients each gadget edge once"))
}

/// Reads the assignment off the edges `xb` of a complete convex colouring
/// (red means true) or orientation (`b -> x` means true) of the gadget.
pub fn decode_assignment(
    g: &MixedGraph,
    gadget: &LabelledGadgetGraph,
) -> Result<Assignment, ReductionError> {
    let expected = match g {
        MixedGraph::Oriented(_) => Variant::Oriented,
        MixedGraph::Coloured(_) => Variant::Coloured,
    };
    if expected != gadget.variant || g.underlying() != gadget.graph {
        return Err(ReductionError::GadgetMismatch(gadget.variant));
    }
    if !is_complete_convex(g).map_err(|_| ReductionError::GadgetMismatch(gadget.variant))? {
        return Err(ReductionError::NotCompleteConvex);
    }
    let values = (1..=gadget.instance.variable_count)
        .map(|x| match g {
            MixedGraph::Coloured(c) => c.colour(x, HUB) == Some(Colour::Red),
            MixedGraph::Oriented(o) => o.has_arc(HUB, x),
        })
        .collect();
    Ok(Assignment(values))
}

fn clause_masks(y: &NaeInstance) -> Vec<u64> {
    y.clauses
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &x| m | 1 << (x - 1)))
        .collect()
}

fn mask_satisfies(masks: &[u64], a: u64) -> bool {
    masks.iter().all(|&m| a & m != 0 && a & m != m)
}

/// Bit `x - 1` of the mask is variable `x`; iteration index `i` is read
/// with variable 1 most significant so results come out lexicographically.
fn assignment_from_index(l: usize, i: u64) -> (Assignment, u64) {
    let values: Vec<bool> = (0..l).map(|k| i >> (l - 1 - k) & 1 == 1).collect();
    let mask = values
        .iter()
        .enumerate()
        .fold(0u64, |m, (k, &b)| m | (b as u64) << k);
    (Assignment(values), mask)
}

/// Lexicographically first not-all-equal satisfying assignment with
/// variable 1 false (complements of solutions are solutions).
pub fn nae_solve(y: &NaeInstance, limit: usize) -> Result<Option<Assignment>, ReductionError> {
    let l = y.variable_count;
    if l > limit || l > 63 {
        return Err(ReductionError::TooManyVariables {
            variables: l,
            limit: limit.min(63),
        });
    }
    let masks = clause_masks(y);
    Ok((0..1u64 << (l - 1))
        .map(|i| assignment_from_index(l, i))
        .find(|(_, m)| mask_satisfies(&masks, *m))
        .map(|(a, _)| a))
}

/// Every not-all-equal satisfying assignment, in lexicographic order.
pub fn nae_solutions(y: &NaeInstance, limit: usize) -> Result<Vec<Assignment>, ReductionError> {
    let l = y.variable_count;
    if l > limit || l > 63 {
        return Err(ReductionError::TooManyVariables {
            variables: l,
            limit: limit.min(63),
        });
    }
    let masks = clause_masks(y);
    Ok((0..1u64 << l)
        .map(|i| assignment_from_index(l, i))
        .filter(|(_, m)| mask_satisfies(&masks, *m))
        .map(|(a, _)| a)
        .collect())
}

/// A random instance with `clauses` clauses whose incidence structure is
/// connected; each clause after the first reuses at least one variable.
pub fn random_instance<R: Rng>(rng: &mut R, clauses: usize) -> NaeInstance {
    assert!(clauses >= 1);
    let fresh_total = rng.gen_range(0..=2 * (clauses - 1));
    let mut fresh: Vec<usize> = vec![0; clauses - 1];
    let mut left = fresh_total;
    while left > 0 {
        let i = rng.gen_range(0..clauses - 1);
        if fresh[i] < 2 {
            fresh[i] += 1;
            left -= 1;
        }
    }
    let mut next = 4;
    let mut list = vec![[1, 2, 3]];
    for &k in &fresh {
        let mut existing: Vec<usize> = (1..next).collect();
        existing.shuffle(rng);
        let mut clause: Vec<usize> = existing[..3 - k].to_vec();
        for _ in 0..k {
            clause.push(next);
            next += 1;
        }
        clause.shuffle(rng);
        list.push([clause[0], clause[1], clause[2]]);
    }
    let l = next - 1;
    let mut perm: Vec<usize> = (1..=l).collect();
    perm.shuffle(rng);
    let mut list: Vec<[usize; 3]> = list.into_iter().map(|c| c.map(|x| perm[x - 1])).collect();
    list.shuffle(rng);
    NaeInstance::new(l, list).expect("generated instances are connected")
}

// Gadget properties used to validate the reconstruction.

/// In `G_Y`: every occurrence has `c(xb) = c(x_f b)`.
pub fn literal_colours_consistent(g: &TwoEdgeColouredGraph, gadget: &LabelledGadgetGraph) -> bool {
    occurrences(gadget)
        .all(|(c, p, x)| g.colour(x, HUB) == g.colour(gadget.occurrence(c, p).plain, HUB))
}

/// In `G_Y`: for every clause the spokes `u_g b, v_g b, w_g b` use both colours.
pub fn clause_spokes_mixed(g: &TwoEdgeColouredGraph, gadget: &LabelledGadgetGraph) -> bool {
    (0..gadget.instance.clauses.len()).all(|c| {
        let colours: Vec<_> = (0..3)
            .map(|p| g.colour(gadget.occurrence(c, p).plain, HUB))
            .collect();
        colours.iter().any(|&k| k != colours[0])
    })
}

/// In `G'_Y`: no occurrence has `x, b, x_f` as a 2-dipath, in either direction.
pub fn no_dipath_through_hub(g: &OrientedGraph, gadget: &LabelledGadgetGraph) -> bool {
    occurrences(gadget).all(|(c, p, x)| {
        let xf = gadget.occurrence(c, p).plain;
        !(g.has_arc(x, HUB) && g.has_arc(HUB, xf)) && !(g.has_arc(xf, HUB) && g.has_arc(HUB, x))
    })
}

/// In `G'_Y`: `b` is neither a source nor a sink of the subgraph induced by
/// `b, u_g, v_g, w_g`, for every clause.
pub fn hub_mixed_in_clauses(g: &OrientedGraph, gadget: &LabelledGadgetGraph) -> bool {
    (0..gadget.instance.clauses.len()).all(|c| {
        let ends: Vec<_> = (0..3).map(|p| gadget.occurrence(c, p).plain).collect();
        ends.iter().any(|&v| g.has_arc(HUB, v)) && ends.iter().any(|&v| g.has_arc(v, HUB))
    })
}

/// In `G_Y`: for every occurrence, `b` is the only common neighbour of `x`
/// and `x_f'`, and of `x_f` and `x_f'`.
pub fn unique_two_paths(gadget: &LabelledGadgetGraph) -> bool {
    let adj = gadget.graph.adjacency();
    let common = |a: VertexId, b: VertexId| {
        adj[a]
            .iter()
            .filter(|w| adj[b].contains(w))
            .copied()
            .collect::<Vec<_>>()
    };
    occurrences(gadget).all(|(c, p, x)| {
        let o = gadget.occurrence(c, p);
        common(x, o.prime) == [HUB] && common(o.plain, o.prime) == [HUB]
    })
}

/// Minimum degree, over every vertex of a literal gadget of clause `c`, of
/// the degree inside the clause graph (`b`, the clause's variables and its
/// occurrence and clause vertices).
pub fn clause_graph_min_degree(gadget: &LabelledGadgetGraph, c: usize) -> usize {
    let vs = gadget.clause_graph_vertices(c);
    let adj = gadget.graph.adjacency();
    (0..3)
        .flat_map(|p| gadget.literal_vertices(c, p))
        .map(|v| adj[v].iter().filter(|w| vs.contains(w)).count())
        .min()
        .expect("clauses have literals")
}

/// Whether every literal gadget and clause part of `g` (an encoding of the
/// gadget) induces a complete convex graph.
pub fn parts_complete_convex(g: &MixedGraph, gadget: &LabelledGadgetGraph) -> bool {
    (0..gadget.instance.clauses.len()).all(|c| {
        let parts = (0..3)
            .map(|p| gadget.literal_vertices(c, p))
            .chain([gadget.clause_part_vertices(c)]);
        parts
            .into_iter()
            .all(|vs| is_complete_convex(&g.induced(&vs)).unwrap_or(false))
    })
}

fn occurrences(gadget: &LabelledGadgetGraph) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
    gadget
        .instance
        .clauses
        .iter()
        .enumerate()
        .flat_map(|(c, clause)| clause.iter().enumerate().map(move |(p, &x)| (c, p, x)))
}

/// How `search_cc` explores the `2^|E|` candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Gray-code scan of every completion of a fixed first edge.
    Exhaustive,
    /// Depth-first search with degree pruning, capped at this many nodes.
    Budgeted(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CcSearch {
    Found(MixedGraph),
    /// Exhaustive scan finished without a hit.
    CertifiedNone,
    /// Budgeted search finished without a hit; not claimed as a certificate.
    Indeterminate,
}

/// Result of scanning every candidate (or as many as a deadline allows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcScan {
    /// Complete convex graphs found, including their converses / colour swaps,
    /// sorted.
    pub graphs: Vec<MixedGraph>,
    pub candidates: u64,
    pub complete: bool,
}

fn materialize(g: &SimpleGraph, variant: Variant, state: u64) -> MixedGraph {
    let edges = g.edges().iter().enumerate();
    match variant {
        Variant::Oriented => OrientedGraph::new(
            g.n(),
            edges.map(|(i, &(u, v))| if state >> i & 1 == 1 { (v, u) } else { (u, v) }),
        )
        .expect("orientation of a simple graph")
        .into(),
        Variant::Coloured => TwoEdgeColouredGraph::new(
            g.n(),
            edges.map(|(i, &(u, v))| {
                (
                    u,
                    v,
                    if state >> i & 1 == 1 {
                        Colour::Blue
                    } else {
                        Colour::Red
                    },
                )
            }),
        )
        .expect("colouring of a simple graph")
        .into(),
    }
}

/// Two-sided masks for a candidate `state`: bit `i` reverses edge `i`
/// (oriented) or makes it blue (coloured).
fn closure_for(g: &SimpleGraph, variant: Variant, state: u64) -> Closure<u64> {
    let n = g.n();
    let mut sides = vec![(0u64, 0u64); n];
    let mut nbrs = vec![0u64; n];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let flipped = state >> i & 1 == 1;
        match (variant, flipped) {
            (Variant::Oriented, false) => {
                sides[v].0 |= 1 << u;
                sides[u].1 |= 1 << v;
            }
            (Variant::Oriented, true) => {
                sides[u].0 |= 1 << v;
                sides[v].1 |= 1 << u;
            }
            (Variant::Coloured, false) => {
                sides[u].0 |= 1 << v;
                sides[v].0 |= 1 << u;
            }
            (Variant::Coloured, true) => {
                sides[u].1 |= 1 << v;
                sides[v].1 |= 1 << u;
            }
        }
        nbrs[u] |= 1 << v;
        nbrs[v] |= 1 << u;
    }
    Closure {
        n,
        sides,
        nbrs,
        edges: g.edges().to_vec(),
    }
}

/// Reversing an arc and recolouring an edge both toggle the same four bits:
/// `v` in both masks of `u` and `u` in both masks of `v`.
#[inline]
fn flip(closure: &mut Closure<u64>, i: usize) {
    let (u, v) = closure.edges[i];
    let (su, sv) = (1u64 << u, 1u64 << v);
    closure.sides[u].0 ^= sv;
    closure.sides[u].1 ^= sv;
    closure.sides[v].0 ^= su;
    closure.sides[v].1 ^= su;
}

/// Complete convexity with the most recently failing edge tried first.
#[inline]
fn spans_all(closure: &Closure<u64>, hint: &mut usize) -> bool {
    let m = closure.edges.len();
    for k in 0..m {
        let i = (*hint + k) % m;
        let (u, v) = closure.edges[i];
        if !closure.spans(u, v) {
            *hint = i;
            return false;
        }
    }
    true
}

const CHUNK_BITS: u32 = 16;

fn check_scan_input(g: &SimpleGraph, limit: usize) -> Result<(), SearchError> {
    let m = g.edge_count();
    if m == 0 {
        return Err(SearchError::Edgeless);
    }
    if m > limit {
        return Err(SearchError::TooManyEdges { edges: m, limit });
    }
    if g.n() > 64 {
        return Err(SearchError::TooManyVertices(g.n()));
    }
    Ok(())
}

/// Scans the Gray-code indices `lo..hi` of the completions of the fixed
/// first edge, stopping at the first hit when `first_only` is set.
fn scan_chunk(g: &SimpleGraph, variant: Variant, lo: u64, hi: u64, first_only: bool) -> Vec<u64> {
    let gray = |t: u64| t ^ (t >> 1);
    // Candidate `t` is the state `gray(t) << 1`: edge 0 never moves.
    let mut closure = closure_for(g, variant, gray(lo) << 1);
    let mut hint = 0;
    let mut hits = Vec::new();
    for t in lo..hi {
        if t > lo {
            flip(&mut closure, 1 + t.trailing_zeros() as usize);
        }
        if spans_all(&closure, &mut hint) {
            hits.push(gray(t) << 1);
            if first_only {
                break;
            }
        }
    }
    hits
}

/// Every complete convex orientation / colouring of `g`: an exhaustive scan
/// of the completions of a fixed first edge, closed under converse / colour
/// swap. Stops early (with `complete == false`) once `deadline` passes.
pub fn enumerate_cc(
    g: &SimpleGraph,
    variant: Variant,
    limit: usize,
    deadline: Option<Instant>,
) -> Result<CcScan, SearchError> {
    check_scan_input(g, limit)?;
    let total = 1u64 << (g.edge_count() - 1);
    let chunk = 1u64 << CHUNK_BITS;
    let chunks: Vec<u64> = (0..total.div_ceil(chunk)).collect();
    let results: Vec<Option<Vec<u64>>> = chunks
        .par_iter()
        .map(|&k| {
            if deadline.is_some_and(|d| Instant::now() > d) {
                return None;
            }
            Some(scan_chunk(
                g,
                variant,
                k * chunk,
                ((k + 1) * chunk).min(total),
                false,
            ))
        })
        .collect();
    let complete = results.iter().all(Option::is_some);
    let candidates = results
        .iter()
        .zip(&chunks)
        .filter(|(r, _)| r.is_some())
        .map(|(_, &k)| ((k + 1) * chunk).min(total) - k * chunk)
        .sum();
    let mut graphs: Vec<MixedGraph> = results
        .into_iter()
        .flatten()
        .flatten()
        .flat_map(|state| {
            let found = materialize(g, variant, state);
            let dual = found.dual();
            [found, dual]
        })
        .collect();
    graphs.sort_by_cached_key(|h| h.to_string());
    graphs.dedup();
    Ok(CcScan {
        graphs,
        candidates,
        complete,
    })
}

/// Finds a complete convex orientation / colouring of `g` or certifies that
/// none exists.
///
/// The exhaustive strategy fixes the first edge (converse and colour swap
/// preserve complete convexity) and scans the rest in Gray-code order. The
/// budgeted strategy is a depth-first search that prunes once every edge
/// at some vertex is fixed and that vertex cannot be a 2-path centre; it
/// errors if the node budget runs out first.
pub fn search_cc(
    g: &SimpleGraph,
    variant: Variant,
    strategy: Strategy,
    limit: usize,
) -> Result<CcSearch, SearchError> {
    match strategy {
        Strategy::Exhaustive => {
            check_scan_input(g, limit)?;
            let total = 1u64 << (g.edge_count() - 1);
            let chunk = 1u64 << CHUNK_BITS;
            let chunks: Vec<u64> = (0..total.div_ceil(chunk)).collect();
            let hit = chunks.par_iter().find_map_first(|&k| {
                scan_chunk(g, variant, k * chunk, ((k + 1) * chunk).min(total), true)
                    .first()
                    .copied()
            });
            Ok(match hit {
                Some(state) => CcSearch::Found(materialize(g, variant, state)),
                None => CcSearch::CertifiedNone,
            })
        }
        Strategy::Budgeted(budget) => budgeted_search(g, variant, budget),
    }
}

struct Dfs<'a> {
    g: &'a SimpleGraph,
    variant: Variant,
    order: Vec<usize>,
    /// Per vertex: how many incident edges are still unset.
    open: Vec<usize>,
    /// Per vertex: whether it has an incident edge of each side.
    sides: Vec<[u32; 2]>,
    state: u64,
    nodes: u64,
    budget: u64,
}

impl Dfs<'_> {
    /// Sides an edge contributes to its ends: `(side at u, side at v)`.
    fn sides_of(&self, flipped: bool) -> (usize, usize) {
        match (self.variant, flipped) {
            (Variant::Oriented, false) => (1, 0),
            (Variant::Oriented, true) => (0, 1),
            (Variant::Coloured, false) => (0, 0),
            (Variant::Coloured, true) => (1, 1),
        }
    }

    fn run(&mut self, depth: usize) -> Result<Option<u64>, SearchError> {
        if depth == self.order.len() {
            let candidate = materialize(self.g, self.variant, self.state);
            return Ok(is_complete_convex(&candidate)
                .unwrap_or(false)
                .then_some(self.state));
        }
        let i = self.order[depth];
        let (u, v) = self.g.edges()[i];
        let choices: &[bool] = if depth == 0 { &[false] } else { &[false, true] };
        for &flipped in choices {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(SearchError::BudgetExhausted(self.budget));
            }
            let (su, sv) = self.sides_of(flipped);
            self.sides[u][su] += 1;
            self.sides[v][sv] += 1;
            self.open[u] -= 1;
            self.open[v] -= 1;
            let dead = [u, v]
                .iter()
                .any(|&w| self.open[w] == 0 && self.sides[w].contains(&0));
            if flipped {
                self.state |= 1 << i;
            }
            let found = if dead { None } else { self.run(depth + 1)? };
            self.state &= !(1 << i);
            self.open[u] += 1;
            self.open[v] += 1;
            self.sides[u][su] -= 1;
            self.sides[v][sv] -= 1;
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

fn budgeted_search(
    g: &SimpleGraph,
    variant: Variant,
    budget: u64,
) -> Result<CcSearch, SearchError> {
    let m = g.edge_count();
    if m == 0 {
        return Err(SearchError::Edgeless);
    }
    if m > 64 {
        return Err(SearchError::TooManyEdges {
            edges: m,
            limit: 64,
        });
    }
    if g.n() <= 2 {
        // A single edge is complete convex in any orientation or colour.
        return Ok(CcSearch::Found(materialize(g, variant, 0)));
    }
    // Every vertex of a complete convex graph on three or more vertices is
    // a 2-path centre, so order edges to close vertices early.
    let adj = g.adjacency();
    let mut order = Vec::with_capacity(m);
    let mut placed = vec![false; m];
    let mut by_vertex: Vec<usize> = (0..g.n()).collect();
    by_vertex.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));
    for v in by_vertex {
        for &w in &adj[v] {
            let i = g
                .edges()
                .binary_search(&(v.min(w), v.max(w)))
                .expect("adjacency lists edges");
            if !placed[i] {
                placed[i] = true;
                order.push(i);
            }
        }
    }
    let mut dfs = Dfs {
        g,
        variant,
        order,
        open: adj.iter().map(Vec::len).collect(),
        sides: vec![[0, 0]; g.n()],
        state: 0,
        nodes: 0,
        budget,
    };
    Ok(match dfs.run(0)? {
        Some(state) => CcSearch::Found(materialize(g, variant, state)),
        None => CcSearch::Indeterminate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::two_tree_classes;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn one_clause() -> NaeInstance {
        NaeInstance::new(3, vec![[1, 2, 3]]).unwrap()
    }

    fn bits(s: &str) -> Assignment {
        s.parse().unwrap()
    }

    fn cc(g: impl Into<MixedGraph>) -> bool {
        is_complete_convex(&g.into()).unwrap()
    }

    #[test]
    fn gadget_validation_on_small_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let clauses = rng.gen_range(1..=3);
            let y = random_instance(&mut rng, clauses);
            let gc = build_gadget(&y, Variant::Coloured);
            let go = build_gadget(&y, Variant::Oriented);
            assert!(unique_two_paths(&gc));
            for c in 0..clauses {
                assert!(clause_graph_min_degree(&gc, c) >= 3);
            }
            for s in nae_solutions(&y, 24).unwrap() {
                let col = MixedGraph::from(colouring_from_assignment(&y, &s).unwrap());
                let ori = MixedGraph::from(orientation_from_assignment(&y, &s).unwrap());
                assert!(cc(col.clone()) && cc(ori.clone()), "{y} {s}");
                assert!(parts_complete_convex(&col, &gc), "coloured parts {y} {s}");
                assert!(parts_complete_convex(&ori, &go), "oriented parts {y} {s}");
            }
        }
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_nae("p nae 3 1\n1 2 3 0\n").unwrap(), one_clause());
        assert_eq!(
            parse_nae("p nae 3 1\n1 1 2 0\n"),
            Err(NaeParseError::Invalid(InstanceError::RepeatedVariable {
                clause: 1,
                variable: 1
            }))
        );
        assert!(matches!(
            parse_nae("p nae 6 2\n1 2 3 0\n4 5 6 0\n"),
            Err(NaeParseError::Invalid(InstanceError::Disconnected(_)))
        ));
        assert!(matches!(
            parse_nae("p nae 3 1\n1 2 x 0\n"),
            Err(NaeParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_nae("1 2 3 0\n"),
            Err(NaeParseError::MissingHeader)
        ));
        assert!(matches!(
            parse_nae("p nae 3 2\n1 2 3 0\n"),
            Err(NaeParseError::ClauseCount { .. })
        ));
        let y = parse_nae("c comment\np nae 4 2\n1 2 3 0\n2 3 4 0\n").unwrap();
        assert_eq!(parse_nae(&y.to_string()).unwrap(), y);
    }

    #[test]
    fn assignment_round_trip() {
        let a = bits("0110");
        assert_eq!(a.to_string(), "0110");
        assert!(a.get(2) && !a.get(1));
        assert!("01a".parse::<Assignment>().is_err());
        assert!("".parse::<Assignment>().is_err());
    }

    #[test]
    fn gadget_sizes() {
        let y = one_clause();
        let g = build_gadget(&y, Variant::Coloured);
        assert_eq!((g.graph().n(), g.graph().edge_count()), (13, 27));
        let h = build_gadget(&y, Variant::Oriented);
        assert_eq!((h.graph().n(), h.graph().edge_count()), (11, 21));
        assert_eq!(h.roles()[h.clause_vertex(0).unwrap()], Role::Clause(0));
    }

    #[test]
    fn shared_variables_are_identified() {
        let y = NaeInstance::new(5, vec![[1, 2, 3], [3, 4, 5]]).unwrap();
        let g = build_gadget(&y, Variant::Coloured);
        let labelled_3 = g
            .roles()
            .iter()
            .filter(|r| **r == Role::Variable(3))
            .count();
        let hubs = g.roles().iter().filter(|r| **r == Role::Hub).count();
        assert_eq!((labelled_3, hubs), (1, 1));
        assert!(g.graph().has_edge(3, HUB));
        // 5 variable edges + 6 occurrences * 7 + 2 triangles * 3.
        assert_eq!(g.graph().edge_count(), 5 + 42 + 6);
    }

    #[test]
    fn literal_gadgets_have_the_listed_edges() {
        let y = NaeInstance::new(4, vec![[1, 2, 3], [2, 3, 4]]).unwrap();
        let g = build_gadget(&y, Variant::Coloured);
        let mixed = MixedGraph::from(TwoEdgeColouredGraph::monochromatic(g.graph(), Colour::Red));
        for c in 0..2 {
            for p in 0..3 {
                assert_eq!(mixed.induced(&g.literal_vertices(c, p)).edge_count(), 8);
            }
            assert_eq!(mixed.induced(&g.clause_part_vertices(c)).edge_count(), 6);
        }
        let h = build_gadget(&y, Variant::Oriented);
        let mixed = MixedGraph::from(TwoEdgeColouredGraph::monochromatic(h.graph(), Colour::Red));
        for c in 0..2 {
            for p in 0..3 {
                assert_eq!(mixed.induced(&h.literal_vertices(c, p)).edge_count(), 5);
            }
            assert_eq!(mixed.induced(&h.clause_part_vertices(c)).edge_count(), 9);
        }
    }

    #[test]
    fn labels_render_roles() {
        let g = build_gadget(&one_clause(), Variant::Coloured);
        let labels: Vec<String> = g.roles().iter().map(Role::to_string).collect();
        assert_eq!(&labels[..6], &["b", "x1", "x2", "x3", "x1@1", "x1'@1"]);
        assert_eq!(labels[6], "x1''@1");
        assert!(g.check_labels(&[(0, "b".into())]).is_ok());
        assert!(g.check_labels(&[(0, "x1".into())]).is_err());
    }

    #[test]
    fn encoders_on_single_clause() {
        let y = one_clause();
        for s in ["011", "100", "001", "110", "010", "101"] {
            let s = bits(s);
            let c = colouring_from_assignment(&y, &s).unwrap();
            assert!(cc(c.clone()), "colouring for {s}");
            let o = orientation_from_assignment(&y, &s).unwrap();
            assert!(cc(o.clone()), "orientation for {s}");
            let gc = build_gadget(&y, Variant::Coloured);
            let go = build_gadget(&y, Variant::Oriented);
            assert_eq!(decode_assignment(&c.clone().into(), &gc).unwrap(), s);
            assert_eq!(decode_assignment(&o.clone().into(), &go).unwrap(), s);
            // Complementing the assignment dualises the encoding.
            assert_eq!(
                colouring_from_assignment(&y, &s.complement()).unwrap(),
                c.swap_colours()
            );
            assert_eq!(
                orientation_from_assignment(&y, &s.complement()).unwrap(),
                o.converse()
            );
        }
        assert_eq!(
            colouring_from_assignment(&y, &bits("111")),
            Err(ReductionError::NotSatisfying(1))
        );
        assert_eq!(
            orientation_from_assignment(&y, &bits("000")),
            Err(ReductionError::NotSatisfying(1))
        );
    }

    #[test]
    fn triangle_pattern_for_minority_false() {
        let y = one_clause();
        let g = build_gadget(&y, Variant::Coloured);
        let c = colouring_from_assignment(&y, &bits("011")).unwrap();
        let [u, v, w] = [0, 1, 2].map(|p| g.occurrence(0, p).plain);
        assert_eq!(c.colour(u, w), Some(Colour::Blue));
        assert_eq!(c.colour(w, v), Some(Colour::Blue));
        assert_eq!(c.colour(u, v), Some(Colour::Red));
        let c = colouring_from_assignment(&y, &bits("100")).unwrap();
        assert_eq!(c.colour(u, w), Some(Colour::Red));
        assert_eq!(c.colour(u, v), Some(Colour::Blue));
    }

    #[test]
    fn decode_rejects_mismatches() {
        let y = one_clause();
        let go = build_gadget(&y, Variant::Oriented);
        let gc = build_gadget(&y, Variant::Coloured);
        let o = MixedGraph::from(orientation_from_assignment(&y, &bits("100")).unwrap());
        assert_eq!(
            decode_assignment(&o, &gc),
            Err(ReductionError::GadgetMismatch(Variant::Coloured))
        );
        let flipped = crate::structure::reverse_arc(o.as_oriented().unwrap(), (HUB, 1)).unwrap();
        if !cc(flipped.clone()) {
            assert_eq!(
                decode_assignment(&flipped.into(), &go),
                Err(ReductionError::NotCompleteConvex)
            );
        }
    }

    #[test]
    fn solver_examples() {
        assert_eq!(nae_solve(&one_clause(), 24).unwrap(), Some(bits("001")));
        let fano = NaeInstance::new(
            7,
            vec![
                [1, 2, 3],
                [1, 4, 5],
                [1, 6, 7],
                [2, 4, 6],
                [2, 5, 7],
                [3, 4, 7],
                [3, 5, 6],
            ],
        )
        .unwrap();
        assert_eq!(nae_solve(&fano, 24).unwrap(), None);
        assert!(nae_solutions(&fano, 24).unwrap().is_empty());
        assert_eq!(nae_solutions(&one_clause(), 24).unwrap().len(), 6);
        assert!(matches!(
            nae_solve(&fano, 5),
            Err(ReductionError::TooManyVariables { .. })
        ));
    }

    #[test]
    fn solver_matches_definition_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let clauses = rng.gen_range(1..=6);
            let y = random_instance(&mut rng, clauses);
            let all = nae_solutions(&y, 24).unwrap();
            let brute: Vec<_> = (0u64..1 << y.variable_count())
                .map(|i| assignment_from_index(y.variable_count(), i).0)
                .filter(|a| {
                    y.clauses()
                        .iter()
                        .all(|c| !(a.get(c[0]) == a.get(c[1]) && a.get(c[1]) == a.get(c[2])))
                })
                .collect();
            assert_eq!(all, brute);
            assert_eq!(nae_solve(&y, 24).unwrap(), all.first().cloned());
        }
    }

    #[test]
    fn search_examples() {
        let k3 = SimpleGraph::complete(3);
        let found = search_cc(&k3, Variant::Oriented, Strategy::Exhaustive, 28).unwrap();
        let CcSearch::Found(g) = found else {
            panic!("K_3 has a directed 3-cycle")
        };
        assert!(cc(g));
        assert_eq!(
            search_cc(
                &SimpleGraph::path(3),
                Variant::Oriented,
                Strategy::Exhaustive,
                28
            )
            .unwrap(),
            CcSearch::CertifiedNone
        );
        for t in two_tree_classes(5, 7).unwrap() {
            assert_eq!(
                search_cc(&t, Variant::Coloured, Strategy::Exhaustive, 28).unwrap(),
                CcSearch::CertifiedNone
            );
        }
        assert_eq!(
            search_cc(
                &SimpleGraph::edgeless(3),
                Variant::Oriented,
                Strategy::Exhaustive,
                28
            ),
            Err(SearchError::Edgeless)
        );
        assert!(matches!(
            search_cc(
                &SimpleGraph::complete(8),
                Variant::Oriented,
                Strategy::Exhaustive,
                20
            ),
            Err(SearchError::TooManyEdges { .. })
        ));
    }

    #[test]
    fn scan_matches_plain_enumeration() {
        use crate::graph::{connected_graphs, enumerate_colourings, enumerate_orientations};
        for n in 2..=5 {
            for g in connected_graphs(n, 7).unwrap().step_by(3) {
                for variant in [Variant::Oriented, Variant::Coloured] {
                    let mut expected: Vec<MixedGraph> = match variant {
                        Variant::Oriented => enumerate_orientations(&g)
                            .map(MixedGraph::from)
                            .filter(|h| cc(h.clone()))
                            .collect(),
                        Variant::Coloured => enumerate_colourings(&g)
                            .map(MixedGraph::from)
                            .filter(|h| cc(h.clone()))
                            .collect(),
                    };
                    expected.sort_by_cached_key(|h| h.to_string());
                    let scan = enumerate_cc(&g, variant, 28, None).unwrap();
                    assert!(scan.complete);
                    assert_eq!(scan.graphs, expected);
                    assert_eq!(scan.candidates, 1 << (g.edge_count() - 1));
                    let exhaustive = search_cc(&g, variant, Strategy::Exhaustive, 28).unwrap();
                    let budgeted = search_cc(&g, variant, Strategy::Budgeted(1 << 30), 28).unwrap();
                    assert_eq!(
                        matches!(exhaustive, CcSearch::Found(_)),
                        !expected.is_empty()
                    );
                    assert_eq!(matches!(budgeted, CcSearch::Found(_)), !expected.is_empty());
                    assert_ne!(budgeted, CcSearch::CertifiedNone);
                }
            }
        }
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = SimpleGraph::complete(6);
        assert_eq!(
            search_cc(&g, Variant::Coloured, Strategy::Budgeted(3), 28),
            Err(SearchError::BudgetExhausted(3))
        );
    }

    #[test]
    fn single_clause_orientation_gadget() {
        let y = one_clause();
        let gadget = build_gadget(&y, Variant::Oriented);
        let scan = enumerate_cc(gadget.graph(), Variant::Oriented, 28, None).unwrap();
        assert!(scan.complete);
        assert!(!scan.graphs.is_empty());
        for g in &scan.graphs {
            let s = decode_assignment(g, &gadget).unwrap();
            assert!(y.is_satisfied_by(&s));
            let o = g.as_oriented().unwrap();
            assert!(no_dipath_through_hub(o, &gadget));
            assert!(hub_mixed_in_clauses(o, &gadget));
        }
    }
}
