//! OR-cross-compositions.
//!
//! Each construction implements [`Composition`] and is looked up by name in a
//! [`CompositionRegistry`]. A batch of source instances is first split into
//! equivalence classes ([`partition_instances`]); each class is padded to a
//! power of two when the construction needs binary instance selectors, then
//! composed into a single parameterized instance whose answer is the OR of
//! the class.

mod budget;
mod clique;
mod chromatic;
mod index;
mod weighted;

use std::fmt;

pub use budget::{distillation_budget, BudgetParameters, BudgetReport};
pub use chromatic::ChromaticComposition;
pub use clique::CliqueComposition;
pub use index::{encode_index, IndexCode};
pub use weighted::WeightedTransversalComposition;

use crate::error::ComposeError;
use crate::graph::{Graph, VertexSet};
use crate::instance::{ProblemInstance, ProblemKind, Weights};
use crate::oracle::TransversalMode;

/// Equivalence class of a source instance under a construction's relation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    /// Instances the construction maps to a constant NO instance.
    Malformed,
    /// Instances that are trivially YES; mapped to a constant YES instance.
    TrivialYes,
    /// Instances sharing vertex count, and target and/or edge count where
    /// the construction keys on them.
    WellFormed {
        n: usize,
        target: Option<u64>,
        m: Option<usize>,
    },
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassTag::Malformed => f.write_str("malformed"),
            ClassTag::TrivialYes => f.write_str("trivial-yes"),
            ClassTag::WellFormed { n, target, m } => {
                write!(f, "n={n}")?;
                if let Some(l) = target {
                    write!(f, ",l={l}")?;
                }
                if let Some(m) = m {
                    write!(f, ",m={m}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EquivalenceClassKey {
    pub construction: &'static str,
    pub tag: ClassTag,
}

impl fmt::Display for EquivalenceClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.construction, self.tag)
    }
}

/// A contiguous range of output vertices with a role name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    /// First vertex id of the block.
    pub start: usize,
    pub len: usize,
}

impl Block {
    pub fn vertices(&self) -> VertexSet {
        (self.start..self.start + self.len).collect()
    }
}

/// Bookkeeping figures of one composition, checked against closed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Audit {
    pub construction: &'static str,
    pub t_raw: usize,
    pub t: usize,
    pub n: usize,
    pub m: usize,
    pub l_prime: u64,
    pub k_prime: usize,
    pub layout: Vec<Block>,
}

impl Audit {
    pub fn block(&self, name: &str) -> Option<&Block> {
        self.layout.iter().find(|b| b.name == name)
    }

    /// Sidecar text: one `key=value` per line.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "construction={}\nt_raw={}\nt={}\nn={}\nm={}\nl_prime={}\nk_prime={}\n",
            self.construction, self.t_raw, self.t, self.n, self.m, self.l_prime, self.k_prime
        );
        if !self.layout.is_empty() {
            let blocks: Vec<String> = self
                .layout
                .iter()
                .map(|b| format!("{}:{}+{}", b.name, b.start, b.len))
                .collect();
            out.push_str(&format!("layout={}\n", blocks.join(",")));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionReport {
    pub instance: ProblemInstance,
    pub audit: Audit,
}

/// One OR-cross-composition algorithm.
pub trait Composition: Send + Sync {
    fn id(&self) -> &'static str;

    fn source_kind(&self) -> ProblemKind;

    fn target_kind(&self) -> ProblemKind;

    /// Equivalence class of a (valid) source instance.
    fn class_tag(&self, inst: &ProblemInstance) -> ClassTag;

    /// Whether inputs are duplicated up to a power of two before composing.
    fn pads_to_power_of_two(&self) -> bool {
        false
    }

    /// Composes one well-formed class. `group` is already padded when
    /// [`Composition::pads_to_power_of_two`] holds; `t_raw` is the length
    /// before padding.
    fn compose_well_formed(&self, group: &[ProblemInstance], t_raw: usize) -> Result<CompositionReport, ComposeError>;

    /// Constant instance for a whole malformed class.
    fn constant_no(&self) -> ProblemInstance;

    /// Constant instance for a whole trivially-YES class.
    fn constant_yes(&self) -> Option<ProblemInstance> {
        None
    }

    fn key(&self, inst: &ProblemInstance) -> EquivalenceClassKey {
        EquivalenceClassKey {
            construction: self.id(),
            tag: self.class_tag(inst),
        }
    }
}

/// The named constructions.
pub struct CompositionRegistry {
    entries: Vec<Box<dyn Composition>>,
}

impl Default for CompositionRegistry {
    fn default() -> Self {
        CompositionRegistry {
            entries: vec![
                Box::new(CliqueComposition),
                Box::new(ChromaticComposition),
                Box::new(WeightedTransversalComposition::new(TransversalMode::Fvs)),
                Box::new(WeightedTransversalComposition::new(TransversalMode::Oct)),
            ],
        }
    }
}

impl CompositionRegistry {
    pub fn get(&self, id: &str) -> Result<&dyn Composition, ComposeError> {
        self.entries
            .iter()
            .find(|c| c.id() == id)
            .map(|c| c.as_ref())
            .ok_or_else(|| ComposeError::UnknownConstruction(id.to_string()))
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.entries.iter().map(|c| c.id()).collect()
    }

    pub fn register(&mut self, composition: Box<dyn Composition>) {
        self.entries.retain(|c| c.id() != composition.id());
        self.entries.push(composition);
    }
}

/// One class produced by [`partition_instances`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceClass {
    pub key: EquivalenceClassKey,
    /// Indices into the partitioned list, ascending.
    pub members: Vec<usize>,
}

/// Groups instances by equivalence key. Classes appear in order of their
/// first member.
pub fn partition_instances(
    composition: &dyn Composition,
    instances: &[ProblemInstance],
) -> Result<Vec<InstanceClass>, ComposeError> {
    let mut classes: Vec<InstanceClass> = Vec::new();
    for (i, inst) in instances.iter().enumerate() {
        if inst.kind != composition.source_kind() {
            return Err(ComposeError::MixedKinds {
                construction: composition.id(),
                expected: composition.source_kind(),
                got: inst.kind,
            });
        }
        let key = composition.key(inst);
        match classes.iter_mut().find(|c| c.key == key) {
            Some(c) => c.members.push(i),
            None => classes.push(InstanceClass { key, members: vec![i] }),
        }
    }
    Ok(classes)
}

/// Appends copies of the first element until the length is a power of two.
pub fn pad_to_power_of_two<T: Clone>(list: &[T]) -> Result<Vec<T>, ComposeError> {
    let first = list.first().ok_or(ComposeError::Empty)?;
    let mut out = list.to_vec();
    out.resize(list.len().next_power_of_two(), first.clone());
    Ok(out)
}

/// Composes a group that must form a single equivalence class.
pub fn compose_group(
    composition: &dyn Composition,
    group: &[ProblemInstance],
) -> Result<CompositionReport, ComposeError> {
    let classes = partition_instances(composition, group)?;
    let class = match classes.as_slice() {
        [] => return Err(ComposeError::Empty),
        [one] => one,
        many => {
            let keys: Vec<String> = many.iter().map(|c| c.key.to_string()).collect();
            return Err(ComposeError::ClassMismatch(keys.join(", ")));
        }
    };
    for inst in group {
        inst.validate_witness()?;
    }
    let t_raw = group.len();
    let constant = match class.key.tag {
        ClassTag::Malformed => Some(composition.constant_no()),
        ClassTag::TrivialYes => Some(
            composition
                .constant_yes()
                .expect("constructions with a trivial-yes class supply a constant"),
        ),
        ClassTag::WellFormed { .. } => None,
    };
    if let Some(instance) = constant {
        let audit = Audit {
            construction: composition.id(),
            t_raw,
            t: t_raw,
            n: 0,
            m: 0,
            l_prime: instance.target,
            k_prime: instance.parameter().unwrap_or(0),
            layout: Vec::new(),
        };
        return Ok(CompositionReport { instance, audit });
    }
    if composition.pads_to_power_of_two() {
        let padded = pad_to_power_of_two(group)?;
        composition.compose_well_formed(&padded, t_raw)
    } else {
        composition.compose_well_formed(group, t_raw)
    }
}

/// Partitions a batch and composes every class.
pub fn compose_all(
    composition: &dyn Composition,
    instances: &[ProblemInstance],
) -> Result<Vec<(InstanceClass, CompositionReport)>, ComposeError> {
    partition_instances(composition, instances)?
        .into_iter()
        .map(|class| {
            let group: Vec<ProblemInstance> = class.members.iter().map(|&i| instances[i].clone()).collect();
            compose_group(composition, &group).map(|r| (class, r))
        })
        .collect()
}

fn require_power_of_two(t: usize) -> Result<u32, ComposeError> {
    if t == 0 || !t.is_power_of_two() {
        return Err(ComposeError::NotPowerOfTwo(t));
    }
    Ok(t.trailing_zeros())
}

fn require_one_class(
    composition: &dyn Composition,
    group: &[ProblemInstance],
) -> Result<(usize, Option<u64>, Option<usize>), ComposeError> {
    let first = group.first().ok_or(ComposeError::Empty)?;
    let tag = composition.class_tag(first);
    for inst in group {
        let other = composition.class_tag(inst);
        if other != tag {
            return Err(ComposeError::ClassMismatch(format!("{tag} vs {other}")));
        }
    }
    match tag {
        ClassTag::WellFormed { n, target, m } => Ok((n, target, m)),
        other => Err(ComposeError::ClassMismatch(format!("{other} class is not composable"))),
    }
}

/// `(single vertex, Z = ∅, ℓ = 2)`: no clique on two vertices.
pub fn constant_no_clique_by_vc() -> ProblemInstance {
    ProblemInstance::new(ProblemKind::CliqueByVc, Graph::empty(1), 2).with_witness(VertexSet::new())
}

/// `(K2, Z = {1}, ℓ = 1)`: an edge needs two colours.
pub fn constant_no_chromatic_by_vc() -> ProblemInstance {
    ProblemInstance::new(ProblemKind::ChromaticByVc, Graph::complete(2), 1).with_witness(VertexSet::from([1]))
}

/// `(K3, Z = {1, 2}, unit weights, ℓ = 0)`: a triangle must lose a vertex.
pub fn constant_no_weighted(kind: ProblemKind) -> ProblemInstance {
    ProblemInstance::new(kind, Graph::complete(3), 0)
        .with_witness(VertexSet::from([1, 2]))
        .with_weights(Weights::unit(3))
}

/// `(single vertex, Z = ∅, unit weight, ℓ = 0)`: already acyclic.
pub fn constant_yes_weighted(kind: ProblemKind) -> ProblemInstance {
    ProblemInstance::new(kind, Graph::empty(1), 0)
        .with_witness(VertexSet::new())
        .with_weights(Weights::unit(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::decide;

    fn clique(g: Graph, l: u64) -> ProblemInstance {
        ProblemInstance::new(ProblemKind::Clique, g, l)
    }

    #[test]
    fn partition_keys() {
        let reg = CompositionRegistry::default();
        let thm7 = reg.get("thm7").unwrap();
        let batch = vec![
            clique(Graph::complete(3), 2),
            clique(Graph::path(3), 2),
            clique(Graph::complete(4), 2),
            clique(Graph::complete(3), 3),
        ];
        let classes = partition_instances(thm7, &batch).unwrap();
        let tags: Vec<String> = classes.iter().map(|c| c.key.tag.to_string()).collect();
        assert_eq!(tags, vec!["n=3,l=2", "n=4,l=2", "n=3,l=3"]);
        assert_eq!(classes[0].members, vec![0, 1]);

        let malformed = partition_instances(thm7, &[clique(Graph::complete(3), 5)]).unwrap();
        assert_eq!(malformed[0].key.tag, ClassTag::Malformed);

        let thm10 = reg.get("thm10-fvs").unwrap();
        let vc = ProblemInstance::new(ProblemKind::VertexCover, Graph::complete(3), 3);
        assert_eq!(partition_instances(thm10, &[vc]).unwrap()[0].key.tag, ClassTag::TrivialYes);

        let mixed = vec![clique(Graph::complete(3), 2), ProblemInstance::new(ProblemKind::VertexCover, Graph::complete(3), 1)];
        assert!(matches!(partition_instances(thm7, &mixed), Err(ComposeError::MixedKinds { .. })));
    }

    #[test]
    fn padding() {
        assert_eq!(pad_to_power_of_two(&[1, 2, 3]).unwrap(), vec![1, 2, 3, 1]);
        assert_eq!(pad_to_power_of_two(&[1, 2, 3, 4]).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(pad_to_power_of_two(&[7]).unwrap(), vec![7]);
        assert_eq!(pad_to_power_of_two::<u8>(&[]), Err(ComposeError::Empty));
    }

    #[test]
    fn constant_instances_have_their_answers() {
        assert!(!decide(&constant_no_clique_by_vc()).unwrap().is_yes());
        assert!(!decide(&constant_no_chromatic_by_vc()).unwrap().is_yes());
        for kind in [ProblemKind::WeightedFvsByVc, ProblemKind::WeightedOctByVc] {
            assert!(!decide(&constant_no_weighted(kind)).unwrap().is_yes());
            assert!(decide(&constant_yes_weighted(kind)).unwrap().is_yes());
        }
    }

    #[test]
    fn malformed_batch_composes_to_constant_no() {
        let reg = CompositionRegistry::default();
        let thm7 = reg.get("thm7").unwrap();
        let report = compose_group(thm7, &[clique(Graph::complete(2), 2), clique(Graph::empty(3), 2)]);
        assert!(matches!(report, Err(ComposeError::ClassMismatch(_))));
        let report = compose_group(thm7, &[clique(Graph::complete(2), 3), clique(Graph::empty(2), 4)]).unwrap();
        assert_eq!(report.instance, constant_no_clique_by_vc());
        assert_eq!(report.audit.t_raw, 2);
    }

    #[test]
    fn registry_lookup() {
        let reg = CompositionRegistry::default();
        assert_eq!(reg.ids(), vec!["thm7", "thm8", "thm10-fvs", "thm10-oct"]);
        assert!(matches!(reg.get("thm11"), Err(ComposeError::UnknownConstruction(_))));
    }
}
