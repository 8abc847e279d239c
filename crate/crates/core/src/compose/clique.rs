use super::{constant_no_clique_by_vc, require_one_class, Audit, Block, ClassTag, Composition, CompositionReport};
use crate::error::ComposeError;
use crate::graph::{GraphBuilder, Vertex};
use crate::instance::{ProblemInstance, ProblemKind};

/// Clique instances with `n` vertices and target `ℓ` composed into one
/// clique-by-vertex-cover instance.
#[derive(Clone, Copy, Debug, Default)]
pub struct CliqueComposition;

/// Id layout of the composed graph.
#[derive(Clone, Copy, Debug)]
pub(crate) struct CliqueLayout {
    pub n: usize,
    pub l: usize,
    pub t: usize,
}

impl CliqueLayout {
    pub fn pairs(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    /// `v_{i,j}`, `i ∈ [ℓ]`, `j ∈ [n]`.
    pub fn v(&self, i: usize, j: usize) -> Vertex {
        (i - 1) * self.n + j
    }

    /// Rank of the pair `p < q` in lexicographic order, from 0.
    pub fn pair_rank(&self, p: usize, q: usize) -> usize {
        // pairs with first element below p, then offset within row p
        (p - 1) * self.n - (p - 1) * p / 2 + (q - p - 1)
    }

    /// `[w_{p,q}, w_{p,q̂}, w_{p̂,q}]`.
    pub fn w(&self, p: usize, q: usize) -> [Vertex; 3] {
        let base = self.l * self.n + 3 * self.pair_rank(p, q);
        [base + 1, base + 2, base + 3]
    }

    pub fn u(&self, i: usize) -> Vertex {
        self.l * self.n + 3 * self.pairs() + i
    }

    pub fn total(&self) -> usize {
        self.l * self.n + 3 * self.pairs() + self.t
    }
}

impl CliqueComposition {
    /// Builds the composed graph; `flip_b` inverts the adjacency of `u_i`
    /// towards the pair gadgets.
    pub(crate) fn build(group: &[ProblemInstance], n: usize, l: usize, flip_b: bool) -> ProblemInstance {
        let lay = CliqueLayout { n, l, t: group.len() };
        let mut b = GraphBuilder::new(lay.total());

        for i in 1..=l {
            for j in 1..=n {
                for i2 in i + 1..=l {
                    for j2 in (1..=n).filter(|&j2| j2 != j) {
                        b.add_edge(lay.v(i, j), lay.v(i2, j2));
                    }
                }
            }
        }

        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|p| (p + 1..=n).map(move |q| (p, q))).collect();
        for &(p, q) in &pairs {
            let [wpq, wpq_hat, wphat_q] = lay.w(p, q);
            for i in 1..=l {
                for j in 1..=n {
                    let v = lay.v(i, j);
                    b.add_edge(wpq, v);
                    if j != q {
                        b.add_edge(wpq_hat, v);
                    }
                    if j != p {
                        b.add_edge(wphat_q, v);
                    }
                }
            }
        }
        for (a, &(p, q)) in pairs.iter().enumerate() {
            for &(p2, q2) in &pairs[a + 1..] {
                for x in lay.w(p, q) {
                    for y in lay.w(p2, q2) {
                        b.add_edge(x, y);
                    }
                }
            }
        }

        for (idx, inst) in group.iter().enumerate() {
            let u = lay.u(idx + 1);
            for i in 1..=l {
                for j in 1..=n {
                    b.add_edge(u, lay.v(i, j));
                }
            }
            for &(p, q) in &pairs {
                let [wpq, wpq_hat, wphat_q] = lay.w(p, q);
                if inst.graph.has_edge(p, q) != flip_b {
                    b.add_edge(u, wpq);
                } else {
                    b.add_edge(u, wpq_hat);
                    b.add_edge(u, wphat_q);
                }
            }
        }

        let z = (1..=l * n + 3 * pairs.len()).collect();
        let target = (l + 1 + pairs.len()) as u64;
        ProblemInstance::new(ProblemKind::CliqueByVc, b.build(), target).with_witness(z)
    }

    pub(crate) fn report(group: &[ProblemInstance], t_raw: usize, instance: ProblemInstance, id: &'static str) -> CompositionReport {
        let n = group[0].graph.n();
        let l = group[0].target as usize;
        let lay = CliqueLayout { n, l, t: group.len() };
        let audit = Audit {
            construction: id,
            t_raw,
            t: group.len(),
            n,
            m: 0,
            l_prime: instance.target,
            k_prime: instance.parameter().unwrap_or(0),
            layout: vec![
                Block { name: "C".into(), start: 1, len: l * n },
                Block { name: "D".into(), start: l * n + 1, len: 3 * lay.pairs() },
                Block { name: "B".into(), start: lay.u(1), len: group.len() },
            ],
        };
        CompositionReport { instance, audit }
    }
}

impl Composition for CliqueComposition {
    fn id(&self) -> &'static str {
        "thm7"
    }

    fn source_kind(&self) -> ProblemKind {
        ProblemKind::Clique
    }

    fn target_kind(&self) -> ProblemKind {
        ProblemKind::CliqueByVc
    }

    fn class_tag(&self, inst: &ProblemInstance) -> ClassTag {
        let n = inst.graph.n();
        if inst.target > n as u64 {
            ClassTag::Malformed
        } else {
            ClassTag::WellFormed { n, target: Some(inst.target), m: None }
        }
    }

    fn compose_well_formed(&self, group: &[ProblemInstance], t_raw: usize) -> Result<CompositionReport, ComposeError> {
        let (n, target, _) = require_one_class(self, group)?;
        let l = target.expect("clique classes carry a target") as usize;
        let instance = Self::build(group, n, l, false);
        Ok(Self::report(group, t_raw, instance, self.id()))
    }

    fn constant_no(&self) -> ProblemInstance {
        constant_no_clique_by_vc()
    }
}
