//! Polynomial parameter transformations and the single-instance gadget
//! reductions, exposed behind a named [`Transform`] registry.

use crate::error::{TransformError, WitnessError};
use crate::gadgets::{inflate, triangle_split_reduction};
use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::instance::{ProblemInstance, ProblemKind, Weights};
use crate::oracle::TransversalMode;

/// `(Ḡ, Z, ℓ)` as an independent-set instance and `(Ḡ, Z, n − ℓ)` as a
/// vertex-cover instance, both parameterized by clique deletion set.
pub fn complement_chain(inst: &ProblemInstance) -> Result<(ProblemInstance, ProblemInstance), TransformError> {
    expect_kind(inst, "cor4", ProblemKind::CliqueByVc)?;
    let n = inst.graph.n();
    if inst.target > n as u64 {
        return Err(TransformError::TargetExceedsVertices { target: inst.target, n });
    }
    let z = inst.witness_or_empty();
    let h = inst.graph.complement();
    let is = ProblemInstance::new(ProblemKind::IsByCliqueDeletion, h.clone(), inst.target).with_witness(z.clone());
    let vc = ProblemInstance::new(ProblemKind::VcByCliqueDeletion, h, n as u64 - inst.target).with_witness(z);
    Ok((is, vc))
}

/// Cliques covering every edge of `g`, given that `g − z` is a clique: the
/// edges inside `z`, the clique `V ∖ z`, and `{v} ∪ (N(v) ∖ z)` for each
/// `v ∈ z`. Duplicates and empty sets are dropped; order is first occurrence.
pub fn clique_cover(g: &Graph, z: &VertexSet) -> Result<Vec<VertexSet>, WitnessError> {
    let outside = g.vertex_set().difference(z);
    if g.check_subset(z).is_err() || !g.is_clique(&outside) {
        return Err(WitnessError(vec![format!("G - Z is not a clique for Z = {z}")]));
    }
    let mut family: Vec<VertexSet> = Vec::new();
    let mut push = |s: VertexSet| {
        if !s.is_empty() && !family.contains(&s) {
            family.push(s);
        }
    };
    for (u, v) in g.edges() {
        if z.contains(u) && z.contains(v) {
            push(VertexSet::from([u, v]));
        }
    }
    push(outside);
    for v in z.iter() {
        let mut member: VertexSet = g.neighbors(v).filter(|&u| !z.contains(u)).collect();
        member.insert(v);
        push(member);
    }
    Ok(family)
}

/// Adds one apex per clique-cover member, adjacent to exactly that member.
/// Vertex cover of `G` at most `ℓ` iff FVS (or OCT) of the output at most `ℓ`.
pub fn apexify(inst: &ProblemInstance, mode: TransversalMode) -> Result<ProblemInstance, TransformError> {
    let rule = match mode {
        TransversalMode::Fvs => "thm9-fvs",
        TransversalMode::Oct => "thm9-oct",
    };
    expect_kind(inst, rule, ProblemKind::VcByCliqueDeletion)?;
    let z = inst.witness_or_empty();
    let family = clique_cover(&inst.graph, &z)?;
    let mut b = GraphBuilder::from_graph(&inst.graph);
    let mut z_new = z;
    for member in &family {
        let apex = b.add_vertex();
        for v in member.iter() {
            b.add_edge(apex, v);
        }
        z_new.insert(apex);
    }
    let kind = match mode {
        TransversalMode::Fvs => ProblemKind::FvsByCliqueDeletion,
        TransversalMode::Oct => ProblemKind::OctByCliqueDeletion,
    };
    Ok(ProblemInstance::new(kind, b.build(), inst.target).with_witness(z_new))
}

fn expect_kind(inst: &ProblemInstance, rule: &'static str, expected: ProblemKind) -> Result<(), TransformError> {
    if inst.kind != expected {
        return Err(TransformError::WrongKind { rule, expected, got: inst.kind });
    }
    inst.validate_witness()?;
    Ok(())
}

/// A named single-instance rewrite.
pub trait Transform: Send + Sync {
    fn id(&self) -> &'static str;

    /// Accepted input kind; `None` means any kind (only the graph is used).
    fn source_kind(&self) -> Option<ProblemKind>;

    fn apply(&self, inst: &ProblemInstance) -> Result<ProblemInstance, TransformError>;
}

/// Graph to triangle-split 3-colouring instance.
pub struct TriangleSplitRule;

impl Transform for TriangleSplitRule {
    fn id(&self) -> &'static str {
        "lemma2"
    }

    fn source_kind(&self) -> Option<ProblemKind> {
        None
    }

    fn apply(&self, inst: &ProblemInstance) -> Result<ProblemInstance, TransformError> {
        Ok(triangle_split_reduction(&inst.graph))
    }
}

/// Graph with target `ℓ` to the inflated graph as a unit-weight FVS
/// instance, witness the scaffold.
pub struct InflateRule;

impl Transform for InflateRule {
    fn id(&self) -> &'static str {
        "inflate"
    }

    fn source_kind(&self) -> Option<ProblemKind> {
        None
    }

    fn apply(&self, inst: &ProblemInstance) -> Result<ProblemInstance, TransformError> {
        let r = inflate(&inst.graph);
        let z = r.scaffold_vertices();
        let n = r.graph.n();
        Ok(ProblemInstance::new(ProblemKind::WeightedFvsByVc, r.graph, inst.target)
            .with_witness(z)
            .with_weights(Weights::unit(n)))
    }
}

pub struct ComplementRule {
    vertex_cover: bool,
}

impl Transform for ComplementRule {
    fn id(&self) -> &'static str {
        if self.vertex_cover {
            "cor4-vc"
        } else {
            "cor4-is"
        }
    }

    fn source_kind(&self) -> Option<ProblemKind> {
        Some(ProblemKind::CliqueByVc)
    }

    fn apply(&self, inst: &ProblemInstance) -> Result<ProblemInstance, TransformError> {
        let (is, vc) = complement_chain(inst)?;
        Ok(if self.vertex_cover { vc } else { is })
    }
}

pub struct ApexRule {
    mode: TransversalMode,
}

impl Transform for ApexRule {
    fn id(&self) -> &'static str {
        match self.mode {
            TransversalMode::Fvs => "thm9-fvs",
            TransversalMode::Oct => "thm9-oct",
        }
    }

    fn source_kind(&self) -> Option<ProblemKind> {
        Some(ProblemKind::VcByCliqueDeletion)
    }

    fn apply(&self, inst: &ProblemInstance) -> Result<ProblemInstance, TransformError> {
        apexify(inst, self.mode)
    }
}

pub struct TransformRegistry {
    entries: Vec<Box<dyn Transform>>,
}

impl Default for TransformRegistry {
    fn default() -> Self {
        TransformRegistry {
            entries: vec![
                Box::new(TriangleSplitRule),
                Box::new(InflateRule),
                Box::new(ComplementRule { vertex_cover: false }),
                Box::new(ComplementRule { vertex_cover: true }),
                Box::new(ApexRule { mode: TransversalMode::Fvs }),
                Box::new(ApexRule { mode: TransversalMode::Oct }),
            ],
        }
    }
}

impl TransformRegistry {
    pub fn get(&self, id: &str) -> Result<&dyn Transform, TransformError> {
        self.entries
            .iter()
            .find(|t| t.id() == id)
            .map(|t| t.as_ref())
            .ok_or_else(|| TransformError::UnknownRule(id.to_string()))
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.entries.iter().map(|t| t.id()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::decide;

    fn with_z(kind: ProblemKind, g: Graph, z: &[usize], l: u64) -> ProblemInstance {
        ProblemInstance::new(kind, g, l).with_witness(z.iter().copied().collect())
    }

    #[test]
    fn complement_chain_examples() {
        let k4 = with_z(ProblemKind::CliqueByVc, Graph::complete(4), &[1, 2, 3], 4);
        let (is, vc) = complement_chain(&k4).unwrap();
        assert_eq!(is.graph, Graph::empty(4));
        assert_eq!((is.target, vc.target), (4, 0));
        assert!(decide(&is).unwrap().is_yes());
        assert!(decide(&vc).unwrap().is_yes());

        let c5 = with_z(ProblemKind::CliqueByVc, Graph::cycle(5), &[1, 2, 4], 3);
        let (is, vc) = complement_chain(&c5).unwrap();
        assert!(!decide(&c5).unwrap().is_yes());
        assert!(!decide(&is).unwrap().is_yes());
        assert!(!decide(&vc).unwrap().is_yes());

        let big = with_z(ProblemKind::CliqueByVc, Graph::complete(2), &[1], 3);
        assert!(matches!(complement_chain(&big), Err(TransformError::TargetExceedsVertices { .. })));
    }

    #[test]
    fn clique_cover_examples() {
        let fam = clique_cover(&Graph::complete(4), &VertexSet::from([1])).unwrap();
        assert_eq!(fam, vec![VertexSet::from([2, 3, 4]), VertexSet::from([1, 2, 3, 4])]);
        let fam = clique_cover(&Graph::complete(3), &VertexSet::new()).unwrap();
        assert_eq!(fam, vec![VertexSet::from([1, 2, 3])]);
        assert!(clique_cover(&Graph::path(3), &VertexSet::new()).is_err());
        // z = V drops the empty member
        let fam = clique_cover(&Graph::path(3), &VertexSet::from([1, 2, 3])).unwrap();
        assert!(fam.iter().all(|m| !m.is_empty()));
    }

    #[test]
    fn apexify_examples() {
        for (l, expect) in [(3, true), (2, false)] {
            let inst = with_z(ProblemKind::VcByCliqueDeletion, Graph::complete(4), &[1], l);
            for mode in [TransversalMode::Fvs, TransversalMode::Oct] {
                let out = apexify(&inst, mode).unwrap();
                assert_eq!(out.graph.n(), 6);
                assert_eq!(out.parameter(), Some(3));
                assert!(out.validate_witness().is_ok());
                assert_eq!(decide(&out).unwrap().is_yes(), expect);
            }
        }
    }

    #[test]
    fn registry() {
        let reg = TransformRegistry::default();
        assert_eq!(reg.ids(), vec!["lemma2", "inflate", "cor4-is", "cor4-vc", "thm9-fvs", "thm9-oct"]);
        assert!(reg.get("cor5").is_err());
        let inst = ProblemInstance::new(ProblemKind::VertexCover, Graph::complete(2), 1);
        let out = reg.get("inflate").unwrap().apply(&inst).unwrap();
        assert!(out.validate_witness().is_ok());
        assert!(decide(&out).unwrap().is_yes());
        let wrong = reg.get("cor4-is").unwrap().apply(&inst);
        assert!(matches!(wrong, Err(TransformError::WrongKind { .. })));
    }
}
