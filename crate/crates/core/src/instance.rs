//! Problem instances, their witness invariants, and the shared text format.
//!
//! ```text
//! problem clique-by-vc
//! vertices 5
//! edge 1 2
//! target 2
//! witness 1 2 4
//! ```
//!
//! One directive per line, `#` starts a comment. Edges are 1-based and
//! written canonically as ascending `(min, max)` pairs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{InstanceError, ParseError, WitnessError};
use crate::graph::{Graph, GraphBuilder, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProblemKind {
    Clique,
    VertexCover,
    TriangleSplit3Coloring,
    CliqueByVc,
    VcByCliqueDeletion,
    IsByCliqueDeletion,
    ChromaticByVc,
    FvsByCliqueDeletion,
    OctByCliqueDeletion,
    WeightedFvsByVc,
    WeightedOctByVc,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 11] = [
        ProblemKind::Clique,
        ProblemKind::VertexCover,
        ProblemKind::TriangleSplit3Coloring,
        ProblemKind::CliqueByVc,
        ProblemKind::VcByCliqueDeletion,
        ProblemKind::IsByCliqueDeletion,
        ProblemKind::ChromaticByVc,
        ProblemKind::FvsByCliqueDeletion,
        ProblemKind::OctByCliqueDeletion,
        ProblemKind::WeightedFvsByVc,
        ProblemKind::WeightedOctByVc,
    ];

    pub fn token(self) -> &'static str {
        match self {
            ProblemKind::Clique => "clique",
            ProblemKind::VertexCover => "vertex-cover",
            ProblemKind::TriangleSplit3Coloring => "triangle-split-3-coloring",
            ProblemKind::CliqueByVc => "clique-by-vc",
            ProblemKind::VcByCliqueDeletion => "vc-by-clique-deletion",
            ProblemKind::IsByCliqueDeletion => "is-by-clique-deletion",
            ProblemKind::ChromaticByVc => "chromatic-by-vc",
            ProblemKind::FvsByCliqueDeletion => "fvs-by-clique-deletion",
            ProblemKind::OctByCliqueDeletion => "oct-by-clique-deletion",
            ProblemKind::WeightedFvsByVc => "weighted-fvs-by-vc",
            ProblemKind::WeightedOctByVc => "weighted-oct-by-vc",
        }
    }

    /// Witness `Z` must be a vertex cover.
    pub fn witness_is_vertex_cover(self) -> bool {
        matches!(
            self,
            ProblemKind::CliqueByVc
                | ProblemKind::ChromaticByVc
                | ProblemKind::WeightedFvsByVc
                | ProblemKind::WeightedOctByVc
        )
    }

    /// `G - Z` must be a clique.
    pub fn witness_is_clique_deletion(self) -> bool {
        matches!(
            self,
            ProblemKind::VcByCliqueDeletion
                | ProblemKind::IsByCliqueDeletion
                | ProblemKind::FvsByCliqueDeletion
                | ProblemKind::OctByCliqueDeletion
        )
    }

    pub fn has_witness(self) -> bool {
        self.witness_is_vertex_cover() || self.witness_is_clique_deletion()
    }

    pub fn is_weighted(self) -> bool {
        matches!(self, ProblemKind::WeightedFvsByVc | ProblemKind::WeightedOctByVc)
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for ProblemKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ProblemKind::ALL
            .into_iter()
            .find(|k| k.token() == s)
            .ok_or_else(|| format!("unknown problem kind `{s}`"))
    }
}

/// Partition `X ∪ Y` of a triangle split graph. `Y` is the union of the
/// listed triangles, kept in stored order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriangleSplit {
    pub x: VertexSet,
    pub triangles: Vec<[Vertex; 3]>,
}

impl TriangleSplit {
    pub fn y(&self) -> VertexSet {
        self.triangles.iter().flatten().copied().collect()
    }
}

/// Positive per-vertex weights, indexed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weights(Vec<u64>);

impl Weights {
    pub fn new(per_vertex: Vec<u64>) -> Self {
        Weights(per_vertex)
    }

    pub fn unit(n: usize) -> Self {
        Weights(vec![1; n])
    }

    pub fn get(&self, v: Vertex) -> u64 {
        self.0[v - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self, s: &VertexSet) -> u64 {
        s.iter().map(|v| self.get(v)).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProblemInstance {
    pub kind: ProblemKind,
    pub graph: Graph,
    /// The target ℓ.
    pub target: u64,
    pub witness: Option<VertexSet>,
    pub split: Option<TriangleSplit>,
    pub weights: Option<Weights>,
}

impl ProblemInstance {
    pub fn new(kind: ProblemKind, graph: Graph, target: u64) -> Self {
        ProblemInstance {
            kind,
            graph,
            target,
            witness: None,
            split: None,
            weights: None,
        }
    }

    pub fn with_witness(mut self, z: VertexSet) -> Self {
        self.witness = Some(z);
        self
    }

    pub fn with_split(mut self, split: TriangleSplit) -> Self {
        self.split = Some(split);
        self
    }

    pub fn with_weights(mut self, w: Weights) -> Self {
        self.weights = Some(w);
        self
    }

    /// The parameter k = |Z|, when a witness is present.
    pub fn parameter(&self) -> Option<usize> {
        self.witness.as_ref().map(VertexSet::len)
    }

    pub fn witness_or_empty(&self) -> VertexSet {
        self.witness.clone().unwrap_or_default()
    }

    pub fn validated(self) -> Result<Self, WitnessError> {
        self.validate_witness()?;
        Ok(self)
    }

    /// Checks every structural invariant of the instance's kind and reports
    /// all violations at once.
    pub fn validate_witness(&self) -> Result<(), WitnessError> {
        let mut v = Vec::new();
        let g = &self.graph;
        let kind = self.kind;

        match (&self.witness, kind.has_witness()) {
            (None, true) => v.push("witness Z missing".to_string()),
            (Some(_), false) => v.push(format!("{kind} instances carry no witness")),
            (Some(z), true) => {
                if let Err(e) = g.check_subset(z) {
                    v.push(format!("witness: {e}"));
                } else if kind.witness_is_vertex_cover() && !g.is_vertex_cover(z) {
                    let (a, b) = g
                        .edges()
                        .into_iter()
                        .find(|&(a, b)| !z.contains(a) && !z.contains(b))
                        .expect("uncovered edge exists");
                    v.push(format!("Z is not a vertex cover: edge {a}-{b} uncovered"));
                } else if kind.witness_is_clique_deletion() {
                    let rest = g.vertex_set().difference(z);
                    if !g.is_clique(&rest) {
                        v.push(format!("G - Z is not a clique ({} vertices remain)", rest.len()));
                    }
                }
            }
            (None, false) => {}
        }

        match (&self.split, kind == ProblemKind::TriangleSplit3Coloring) {
            (None, true) => v.push("triangle-split partition missing".to_string()),
            (Some(_), false) => v.push(format!("{kind} instances carry no triangle-split partition")),
            (Some(split), true) => check_split(g, split, &mut v),
            (None, false) => {}
        }
        if kind == ProblemKind::TriangleSplit3Coloring && self.target != 3 {
            v.push(format!("triangle-split target must be 3, got {}", self.target));
        }

        match (&self.weights, kind.is_weighted()) {
            (None, true) => v.push("weights missing".to_string()),
            (Some(_), false) => v.push(format!("{kind} instances carry no weights")),
            (Some(w), true) => {
                if w.len() != g.n() {
                    v.push(format!("{} weights for {} vertices", w.len(), g.n()));
                }
                if let Some(pos) = w.as_slice().iter().position(|&x| x == 0) {
                    v.push(format!("weight of vertex {} is not positive", pos + 1));
                }
            }
            (None, false) => {}
        }

        if v.is_empty() {
            Ok(())
        } else {
            Err(WitnessError(v))
        }
    }

    /// Canonical text form.
    pub fn serialize(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "problem {}", self.kind).unwrap();
        writeln!(out, "vertices {}", self.graph.n()).unwrap();
        for (u, v) in self.graph.edges() {
            writeln!(out, "edge {u} {v}").unwrap();
        }
        writeln!(out, "target {}", self.target).unwrap();
        if let Some(z) = &self.witness {
            out.push_str("witness");
            for v in z.iter() {
                write!(out, " {v}").unwrap();
            }
            out.push('\n');
        }
        if let Some(split) = &self.split {
            out.push_str("part_x");
            for v in split.x.iter() {
                write!(out, " {v}").unwrap();
            }
            out.push('\n');
            for [a, b, c] in &split.triangles {
                writeln!(out, "triangle {a} {b} {c}").unwrap();
            }
        }
        if let Some(w) = &self.weights {
            for (i, x) in w.as_slice().iter().enumerate() {
                writeln!(out, "weight {} {x}", i + 1).unwrap();
            }
        }
        out
    }

    /// Parses and validates an instance.
    pub fn parse(text: &str) -> Result<ProblemInstance, InstanceError> {
        let inst = parse_unvalidated(text)?;
        inst.validate_witness()?;
        Ok(inst)
    }
}

impl FromStr for ProblemInstance {
    type Err = InstanceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ProblemInstance::parse(s)
    }
}

fn check_split(g: &Graph, split: &TriangleSplit, v: &mut Vec<String>) {
    if let Err(e) = g.check_subset(&split.x) {
        v.push(format!("part_x: {e}"));
        return;
    }
    let mut y = BTreeSet::new();
    for t in &split.triangles {
        for &a in t {
            if !g.contains_vertex(a) {
                v.push(format!("triangle vertex {a} out of range"));
                return;
            }
            if !y.insert(a) {
                v.push(format!("vertex {a} lies in two triangles"));
            }
        }
        let [a, b, c] = *t;
        if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
            v.push(format!("{a} {b} {c} is not a triangle"));
        }
    }
    let y: VertexSet = y.into_iter().collect();
    if !split.x.intersection(&y).is_empty() {
        v.push("X and Y intersect".to_string());
    }
    if split.x.union(&y) != g.vertex_set() {
        v.push("X ∪ Y does not cover all vertices".to_string());
    }
    if !g.is_independent(&split.x) {
        v.push("G[X] is not edgeless".to_string());
    }
    let triangle_edges: usize = 3 * split.triangles.len();
    let (gy, _) = g.induced_subgraph(&y).expect("range checked");
    if gy.edge_count() != triangle_edges {
        v.push("G[Y] has edges outside the listed triangles".to_string());
    }
}

fn parse_unvalidated(text: &str) -> Result<ProblemInstance, ParseError> {
    let mut kind = None;
    let mut n: Option<usize> = None;
    let mut target = None;
    let mut witness: Option<VertexSet> = None;
    let mut part_x: Option<VertexSet> = None;
    let mut triangles: Vec<(usize, [Vertex; 3])> = Vec::new();
    let mut edges: Vec<(usize, Vertex, Vertex)> = Vec::new();
    let mut weights: Vec<(usize, Vertex, u64)> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |reason: String| ParseError { line, reason };
        let mut words = content.split_whitespace();
        let directive = words.next().expect("nonempty line");
        let args: Vec<&str> = words.collect();
        let nums = |args: &[&str]| -> Result<Vec<u64>, ParseError> {
            args.iter()
                .map(|a| a.parse::<u64>().map_err(|_| err(format!("`{a}` is not a non-negative integer"))))
                .collect()
        };
        let arity = |want: usize| -> Result<(), ParseError> {
            if args.len() == want {
                Ok(())
            } else {
                Err(err(format!("`{directive}` takes {want} argument(s), got {}", args.len())))
            }
        };
        match directive {
            "problem" => {
                arity(1)?;
                if kind.is_some() {
                    return Err(err("duplicate `problem` line".into()));
                }
                kind = Some(args[0].parse::<ProblemKind>().map_err(err)?);
            }
            "vertices" => {
                arity(1)?;
                if n.is_some() {
                    return Err(err("duplicate `vertices` line".into()));
                }
                n = Some(nums(&args)?[0] as usize);
            }
            "edge" => {
                arity(2)?;
                let x = nums(&args)?;
                edges.push((line, x[0] as usize, x[1] as usize));
            }
            "target" => {
                arity(1)?;
                if target.is_some() {
                    return Err(err("duplicate `target` line".into()));
                }
                target = Some(nums(&args)?[0]);
            }
            "witness" | "part_x" => {
                let slot = if directive == "witness" { &mut witness } else { &mut part_x };
                if slot.is_some() {
                    return Err(err(format!("duplicate `{directive}` line")));
                }
                let mut set = VertexSet::new();
                for x in nums(&args)? {
                    if !set.insert(x as usize) {
                        return Err(err(format!("vertex {x} repeated")));
                    }
                }
                *slot = Some(set);
            }
            "triangle" => {
                arity(3)?;
                let x = nums(&args)?;
                triangles.push((line, [x[0] as usize, x[1] as usize, x[2] as usize]));
            }
            "weight" => {
                arity(2)?;
                let x = nums(&args)?;
                weights.push((line, x[0] as usize, x[1]));
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }

    let end = |reason: String| ParseError { line: last_line, reason };
    let kind = kind.ok_or_else(|| end("missing `problem` line".into()))?;
    let n = n.ok_or_else(|| end("missing `vertices` line".into()))?;
    let target = match (target, kind) {
        (Some(t), _) => t,
        (None, ProblemKind::TriangleSplit3Coloring) => 3,
        (None, _) => return Err(end("missing `target` line".into())),
    };

    let mut b = GraphBuilder::new(n);
    for (line, u, v) in edges {
        match b.try_add_edge(u, v) {
            Ok(true) => {}
            Ok(false) => {
                return Err(ParseError {
                    line,
                    reason: format!("duplicate edge {u} {v}"),
                })
            }
            Err(e) => return Err(ParseError { line, reason: e.to_string() }),
        }
    }
    let graph = b.build();

    let split = if part_x.is_some() || !triangles.is_empty() {
        for (line, t) in &triangles {
            if let Some(&a) = t.iter().find(|&&a| a == 0 || a > n) {
                return Err(ParseError {
                    line: *line,
                    reason: format!("vertex {a} out of range 1..={n}"),
                });
            }
        }
        Some(TriangleSplit {
            x: part_x.unwrap_or_default(),
            triangles: triangles.into_iter().map(|(_, t)| t).collect(),
        })
    } else if kind == ProblemKind::TriangleSplit3Coloring {
        // an edgeless graph with no triangles still needs its X listed
        Some(TriangleSplit {
            x: VertexSet::new(),
            triangles: Vec::new(),
        })
    } else {
        None
    };

    let weights = if weights.is_empty() && !kind.is_weighted() {
        None
    } else {
        let mut per = vec![None; n];
        for (line, v, w) in weights {
            if v == 0 || v > n {
                return Err(ParseError {
                    line,
                    reason: format!("vertex {v} out of range 1..={n}"),
                });
            }
            if per[v - 1].replace(w).is_some() {
                return Err(ParseError {
                    line,
                    reason: format!("duplicate weight for vertex {v}"),
                });
            }
        }
        if let Some(missing) = per.iter().position(Option::is_none) {
            return Err(end(format!("missing weight for vertex {}", missing + 1)));
        }
        Some(Weights::new(per.into_iter().map(Option::unwrap).collect()))
    };

    Ok(ProblemInstance {
        kind,
        graph,
        target,
        witness,
        split,
        weights,
    })
}

/// A certificate carried by a YES verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Set(VertexSet),
    /// Colour of each vertex (`colors[v - 1]`), colours start at 1.
    Coloring(Vec<usize>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Answer {
    Yes,
    No,
}

impl Answer {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Answer::Yes
        } else {
            Answer::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Answer::Yes
    }
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_yes() { "YES" } else { "NO" })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub answer: Answer,
    pub witness: Option<Certificate>,
    /// Optimum size or weight, when the solver established it.
    pub value: Option<u64>,
}

impl Verdict {
    pub fn yes(witness: Option<Certificate>, value: Option<u64>) -> Self {
        Verdict {
            answer: Answer::Yes,
            witness,
            value,
        }
    }

    pub fn no(value: Option<u64>) -> Self {
        Verdict {
            answer: Answer::No,
            witness: None,
            value,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.answer.is_yes()
    }
}
