use super::{
    constant_no_weighted, constant_yes_weighted, encode_index, require_one_class, require_power_of_two, Audit, Block,
    ClassTag, Composition, CompositionReport,
};
use crate::error::ComposeError;
use crate::gadgets::{inflate, k4_in_a_box, InflationResult, ScaffoldUnit};
use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::instance::{ProblemInstance, ProblemKind, Weights};
use crate::oracle::TransversalMode;

/// Vertex-cover instances with equal `n`, `m` and `ℓ` composed into one
/// weighted FVS or OCT instance parameterized by vertex cover.
#[derive(Clone, Copy, Debug)]
pub struct WeightedTransversalComposition {
    mode: TransversalMode,
}

impl WeightedTransversalComposition {
    pub fn new(mode: TransversalMode) -> Self {
        WeightedTransversalComposition { mode }
    }

    pub fn mode(&self) -> TransversalMode {
        self.mode
    }
}

impl Composition for WeightedTransversalComposition {
    fn id(&self) -> &'static str {
        match self.mode {
            TransversalMode::Fvs => "thm10-fvs",
            TransversalMode::Oct => "thm10-oct",
        }
    }

    fn source_kind(&self) -> ProblemKind {
        ProblemKind::VertexCover
    }

    fn target_kind(&self) -> ProblemKind {
        match self.mode {
            TransversalMode::Fvs => ProblemKind::WeightedFvsByVc,
            TransversalMode::Oct => ProblemKind::WeightedOctByVc,
        }
    }

    fn class_tag(&self, inst: &ProblemInstance) -> ClassTag {
        let n = inst.graph.n();
        if inst.target >= n as u64 {
            ClassTag::TrivialYes
        } else {
            ClassTag::WellFormed {
                n,
                target: Some(inst.target),
                m: Some(inst.graph.edge_count()),
            }
        }
    }

    fn pads_to_power_of_two(&self) -> bool {
        true
    }

    fn compose_well_formed(&self, group: &[ProblemInstance], t_raw: usize) -> Result<CompositionReport, ComposeError> {
        let (n, target, m) = require_one_class(self, group)?;
        let l = target.expect("vertex-cover classes carry a target");
        let m = m.expect("vertex-cover classes carry m");
        let t = group.len();
        let bits = require_power_of_two(t)?;
        let big_l = bits as usize;

        let inflated: Vec<InflationResult> = group.iter().map(|i| inflate(&i.graph)).collect();
        let graphs: Vec<&Graph> = inflated.iter().map(|r| &r.graph).collect();
        let (union, offsets) = Graph::disjoint_union(&graphs);
        let mut classes = Vec::with_capacity(ScaffoldUnit::SIZE * m);
        for j in 0..m {
            for label in 0..ScaffoldUnit::SIZE {
                let class: VertexSet = inflated
                    .iter()
                    .zip(&offsets)
                    .map(|(r, off)| off + r.scaffold[j].labeled()[label])
                    .collect();
                classes.push(class);
            }
        }
        let (merged, _) = union.identify_classes(&classes).expect("scaffold classes are disjoint");
        let a_start = t * n + 1;
        let a_len = ScaffoldUnit::SIZE * m;

        let mut b = GraphBuilder::from_graph(&merged);
        let boxes_start = b.n() + 1;
        let gadget = k4_in_a_box();
        let mut copies = Vec::with_capacity(big_l);
        for _ in 0..big_l {
            let base = b.n();
            b.add_vertices(gadget.graph.n());
            for (u, v) in gadget.graph.edges() {
                b.add_edge(base + u, base + v);
            }
            copies.push(base);
        }
        for i in 1..=t {
            let code = encode_index(i, bits)?;
            for v in (i - 1) * n + 1..=i * n {
                for (j, &base) in copies.iter().enumerate() {
                    for term in gadget.terminals(code.bit(j + 1)) {
                        b.add_edge(v, base + term);
                    }
                }
            }
        }
        let g = b.build();

        let heavy = (t * n) as u64;
        let weights: Vec<u64> = (1..=g.n()).map(|v| if v >= boxes_start { heavy } else { 1 }).collect();
        let l_prime = 2 * (big_l * t * n) as u64 + ((t - 1) * n) as u64 + l;
        let z: VertexSet = (a_start..=g.n()).collect();
        let instance = ProblemInstance::new(self.target_kind(), g, l_prime)
            .with_witness(z)
            .with_weights(Weights::new(weights));

        let mut layout: Vec<Block> = (0..t)
            .map(|i| Block { name: format!("V{}", i + 1), start: i * n + 1, len: n })
            .collect();
        layout.push(Block { name: "A".into(), start: a_start, len: a_len });
        for (j, &base) in copies.iter().enumerate() {
            layout.push(Block { name: format!("box{}", j + 1), start: base + 1, len: gadget.graph.n() });
        }
        let audit = Audit {
            construction: self.id(),
            t_raw,
            t,
            n,
            m,
            l_prime,
            k_prime: instance.parameter().unwrap_or(0),
            layout,
        };
        Ok(CompositionReport { instance, audit })
    }

    fn constant_no(&self) -> ProblemInstance {
        constant_no_weighted(self.target_kind())
    }

    fn constant_yes(&self) -> Option<ProblemInstance> {
        Some(constant_yes_weighted(self.target_kind()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compose::compose_group;
    use crate::oracle::decide;

    fn vc(g: Graph, l: u64) -> ProblemInstance {
        ProblemInstance::new(ProblemKind::VertexCover, g, l)
    }

    #[test]
    fn k2_pair_formulas_and_structure() {
        for mode in [TransversalMode::Fvs, TransversalMode::Oct] {
            let comp = WeightedTransversalComposition::new(mode);
            let r = compose_group(&comp, &[vc(Graph::complete(2), 1), vc(Graph::complete(2), 1)]).unwrap();
            assert_eq!(r.instance.graph.n(), 19);
            assert_eq!(r.audit.l_prime, 11);
            assert_eq!(r.audit.k_prime, 7 + 8);
            assert!(r.instance.validate_witness().is_ok());
            let a = r.audit.block("A").unwrap().vertices();
            for i in 1..=2 {
                let v = r.audit.block(&format!("V{i}")).unwrap().vertices();
                assert!(r.instance.graph.is_independent(&v));
                let (sub, _) = r.instance.graph.induced_subgraph(&v.union(&a)).unwrap();
                assert!(sub.is_isomorphic_to(&inflate(&Graph::complete(2)).graph));
            }
        }
    }

    #[test]
    fn modes_share_graph_and_weights() {
        let group = [vc(Graph::path(3), 1), vc(Graph::path(3), 1)];
        let f = compose_group(&WeightedTransversalComposition::new(TransversalMode::Fvs), &group).unwrap();
        let o = compose_group(&WeightedTransversalComposition::new(TransversalMode::Oct), &group).unwrap();
        assert_eq!(f.instance.graph, o.instance.graph);
        assert_eq!(f.instance.weights, o.instance.weights);
        assert_ne!(f.instance.kind, o.instance.kind);
    }

    #[test]
    fn or_semantics_k2() {
        for mode in [TransversalMode::Fvs, TransversalMode::Oct] {
            let comp = WeightedTransversalComposition::new(mode);
            let yes = compose_group(&comp, &[vc(Graph::complete(2), 1), vc(Graph::complete(2), 1)]).unwrap();
            assert!(decide(&yes.instance).unwrap().is_yes());
            let no = compose_group(&comp, &[vc(Graph::complete(2), 0), vc(Graph::complete(2), 0)]).unwrap();
            assert!(!decide(&no.instance).unwrap().is_yes());
        }
    }

    #[test]
    fn single_input_is_plain_inflation() {
        let comp = WeightedTransversalComposition::new(TransversalMode::Fvs);
        let r = compose_group(&comp, &[vc(Graph::path(3), 1)]).unwrap();
        assert_eq!(r.instance.graph, inflate(&Graph::path(3)).graph);
        assert_eq!(r.audit.l_prime, 1);
        assert!(decide(&r.instance).unwrap().is_yes());
    }

    #[test]
    fn trivial_yes_class() {
        let comp = WeightedTransversalComposition::new(TransversalMode::Oct);
        let r = compose_group(&comp, &[vc(Graph::complete(3), 3)]).unwrap();
        assert!(decide(&r.instance).unwrap().is_yes());
    }
}
