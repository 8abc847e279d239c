use super::{
    constant_no_chromatic_by_vc, encode_index, require_one_class, require_power_of_two, Audit, Block, ClassTag,
    Composition, CompositionReport,
};
use crate::error::ComposeError;
use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::instance::{ProblemInstance, ProblemKind};

/// Triangle-split 3-colouring instances with equal `|X|` and triangle count
/// composed into one chromatic-number-by-vertex-cover instance.
#[derive(Clone, Copy, Debug, Default)]
pub struct ChromaticComposition;

impl Composition for ChromaticComposition {
    fn id(&self) -> &'static str {
        "thm8"
    }

    fn source_kind(&self) -> ProblemKind {
        ProblemKind::TriangleSplit3Coloring
    }

    fn target_kind(&self) -> ProblemKind {
        ProblemKind::ChromaticByVc
    }

    fn class_tag(&self, inst: &ProblemInstance) -> ClassTag {
        match &inst.split {
            Some(split) => ClassTag::WellFormed {
                n: split.x.len(),
                target: None,
                m: Some(split.triangles.len()),
            },
            None => ClassTag::Malformed,
        }
    }

    fn pads_to_power_of_two(&self) -> bool {
        true
    }

    fn compose_well_formed(&self, group: &[ProblemInstance], t_raw: usize) -> Result<CompositionReport, ComposeError> {
        let (n, _, m) = require_one_class(self, group)?;
        let m = m.expect("triangle-split classes carry m");
        let t = group.len();
        let bits = require_power_of_two(t)?;
        let big_l = bits as usize;

        let graphs: Vec<&Graph> = group.iter().map(|i| &i.graph).collect();
        let (union, offsets) = Graph::disjoint_union(&graphs);
        let mut classes = Vec::with_capacity(3 * m);
        for j in 0..m {
            for role in 0..3 {
                let class: VertexSet = group
                    .iter()
                    .zip(&offsets)
                    .map(|(inst, off)| off + inst.split.as_ref().expect("well-formed").triangles[j][role])
                    .collect();
                classes.push(class);
            }
        }
        let (merged, _) = union.identify_classes(&classes).expect("triangle classes are disjoint");
        // X blocks occupy 1..=t·n, then T′
        let t_start = t * n + 1;

        let mut b = GraphBuilder::from_graph(&merged);
        let palette_start = b.n() + 1;
        let p: Vec<usize> = b.add_vertices(big_l).collect();
        let w = b.add_vertex();
        let xyz: Vec<usize> = b.add_vertices(3).collect();
        let palette: Vec<usize> = p.iter().copied().chain([w]).chain(xyz.iter().copied()).collect();
        for (a, &u) in palette.iter().enumerate() {
            for &v in &palette[a + 1..] {
                b.add_edge(u, v);
            }
        }
        for tv in t_start..t_start + 3 * m {
            for &c in p.iter().chain([&w]) {
                b.add_edge(tv, c);
            }
        }
        for xv in 1..=t * n {
            b.add_edge(xv, w);
        }
        let selectors_start = b.n() + 1;
        let mut selectors = Vec::with_capacity(big_l);
        for &pi in &p {
            let q0 = b.add_vertex();
            let q1 = b.add_vertex();
            b.add_edge(q0, q1);
            for &c in palette.iter().filter(|&&c| c != pi && c != w) {
                b.add_edge(q0, c);
                b.add_edge(q1, c);
            }
            selectors.push([q0, q1]);
        }
        for i in 1..=t {
            let code = encode_index(i, bits)?;
            for xv in (i - 1) * n + 1..=i * n {
                for (j, pair) in selectors.iter().enumerate() {
                    b.add_edge(xv, pair[code.bit(j + 1) as usize]);
                }
            }
        }
        let g = b.build();

        let z: VertexSet = (t_start..=g.n()).collect();
        let instance = ProblemInstance::new(ProblemKind::ChromaticByVc, g, (big_l + 4) as u64).with_witness(z);
        let mut layout: Vec<Block> = (0..t)
            .map(|i| Block { name: format!("X{}", i + 1), start: i * n + 1, len: n })
            .collect();
        layout.push(Block { name: "T".into(), start: t_start, len: 3 * m });
        layout.push(Block { name: "palette".into(), start: palette_start, len: big_l + 4 });
        layout.push(Block { name: "selectors".into(), start: selectors_start, len: 2 * big_l });
        let audit = Audit {
            construction: self.id(),
            t_raw,
            t,
            n,
            m,
            l_prime: instance.target,
            k_prime: instance.parameter().unwrap_or(0),
            layout,
        };
        Ok(CompositionReport { instance, audit })
    }

    fn constant_no(&self) -> ProblemInstance {
        constant_no_chromatic_by_vc()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compose::compose_group;
    use crate::gadgets::triangle_split_reduction;
    use crate::oracle::decide;

    #[test]
    fn two_copies_of_k2() {
        let inst = triangle_split_reduction(&Graph::complete(2));
        let r = compose_group(&ChromaticComposition, &[inst.clone(), inst]).unwrap();
        assert_eq!(r.instance.graph.n(), 14);
        assert_eq!((r.audit.l_prime, r.audit.k_prime), (5, 10));
        assert!(r.instance.validate_witness().is_ok());
        for i in 1..=2 {
            let x = r.audit.block(&format!("X{i}")).unwrap().vertices();
            assert!(r.instance.graph.is_independent(&x));
        }
        assert!(decide(&r.instance).unwrap().is_yes());
    }

    #[test]
    fn single_k4_is_no() {
        let inst = triangle_split_reduction(&Graph::complete(4));
        let r = compose_group(&ChromaticComposition, &[inst]).unwrap();
        assert_eq!(r.audit.l_prime, 4);
        assert_eq!(r.instance.graph.n(), 4 + 18 + 4);
        assert!(!decide(&r.instance).unwrap().is_yes());
    }

    #[test]
    fn three_inputs_pad_to_four() {
        let inst = triangle_split_reduction(&Graph::path(3));
        let r = compose_group(&ChromaticComposition, &[inst.clone(), inst.clone(), inst]).unwrap();
        assert_eq!((r.audit.t_raw, r.audit.t), (3, 4));
        assert_eq!(r.instance.graph.n(), 4 * 3 + 6 + 6 + 4);
        assert_eq!(r.audit.k_prime, 3 * 2 + 4 + 6);
    }

    #[test]
    fn rejects_unpadded_direct_call() {
        let inst = triangle_split_reduction(&Graph::complete(2));
        let group = vec![inst.clone(), inst.clone(), inst];
        assert_eq!(
            ChromaticComposition.compose_well_formed(&group, 3),
            Err(ComposeError::NotPowerOfTwo(3))
        );
    }
}
