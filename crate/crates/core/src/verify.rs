//! Seeded instance generation and oracle-backed OR-equivalence checks.
//!
//! Trial `i` of a run seeded with `S` draws its batch from seed `S + i`, so a
//! failing trial is replayed by a run with one trial and seed `S + i`.

use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Deserialize;

use crate::compose::{
    compose_group, constant_no_chromatic_by_vc, constant_no_clique_by_vc, constant_no_weighted,
    constant_yes_weighted, partition_instances, pad_to_power_of_two, ClassTag, CliqueComposition, Composition,
    CompositionReport, EquivalenceClassKey,
};
use crate::error::{ComposeError, VerifyError};
use crate::gadgets::{inflate, triangle_split_reduction};
use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::instance::{Answer, ProblemInstance, ProblemKind, Weights};
use crate::oracle::{chromatic_number, decide, max_clique, min_transversal, min_vertex_cover, TransversalMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TargetPolicy {
    /// Uniform over `0..=n` (or the total weight).
    Uniform,
    /// One of `opt − 1, opt, opt + 1`, clamped at 0.
    NearOptimum,
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` with edges decided in lexicographic order.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(density) {
                b.add_edge(u, v);
            }
        }
    }
    b.build()
}

/// Uniform graph on `n` vertices with exactly `m` edges.
pub fn random_graph_with_edges<R: Rng>(rng: &mut R, n: usize, m: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    assert!(m <= pairs.len(), "{m} edges do not fit on {n} vertices");
    pairs.shuffle(rng);
    pairs.truncate(m);
    Graph::from_edges(n, &pairs).expect("pairs are valid")
}

/// Max-degree greedy cover, then drops every vertex that is not needed.
pub fn greedy_vertex_cover(g: &Graph) -> VertexSet {
    let mut cover = VertexSet::new();
    loop {
        let uncovered: Vec<(usize, usize)> =
            g.edges().into_iter().filter(|&(u, v)| !cover.contains(u) && !cover.contains(v)).collect();
        if uncovered.is_empty() {
            break;
        }
        let mut deg = vec![0usize; g.n() + 1];
        for &(u, v) in &uncovered {
            deg[u] += 1;
            deg[v] += 1;
        }
        let best = (1..=g.n()).max_by_key(|&v| (deg[v], std::cmp::Reverse(v))).expect("nonempty");
        cover.insert(best);
    }
    for v in cover.to_vec() {
        cover.remove(v);
        if !g.is_vertex_cover(&cover) {
            cover.insert(v);
        }
    }
    cover
}

/// Random graph whose vertices outside the returned set form a clique.
pub fn planted_clique<R: Rng>(rng: &mut R, n: usize, density: f64) -> (Graph, VertexSet) {
    let size = rng.gen_range(0..=n);
    let mut ids: Vec<usize> = (1..=n).collect();
    ids.shuffle(rng);
    let clique: VertexSet = ids[..size].iter().copied().collect();
    let mut b = GraphBuilder::new(n);
    for u in 1..=n {
        for v in u + 1..=n {
            let inside = clique.contains(u) && clique.contains(v);
            if inside || rng.gen_bool(density) {
                b.add_edge(u, v);
            }
        }
    }
    let g = b.build();
    let z = g.vertex_set().difference(&clique);
    (g, z)
}

/// Optimum value of the quantity an instance's target bounds.
pub fn optimum(inst: &ProblemInstance) -> Result<u64, VerifyError> {
    let g = &inst.graph;
    Ok(match inst.kind {
        ProblemKind::Clique | ProblemKind::CliqueByVc => max_clique(g)?.0 as u64,
        ProblemKind::IsByCliqueDeletion => max_clique(&g.complement())?.0 as u64,
        ProblemKind::VertexCover | ProblemKind::VcByCliqueDeletion => min_vertex_cover(g)?.0 as u64,
        ProblemKind::TriangleSplit3Coloring | ProblemKind::ChromaticByVc => chromatic_number(g)?.0 as u64,
        ProblemKind::FvsByCliqueDeletion | ProblemKind::WeightedFvsByVc => {
            min_transversal(g, TransversalMode::Fvs, inst.weights.as_ref())?.0
        }
        ProblemKind::OctByCliqueDeletion | ProblemKind::WeightedOctByVc => {
            min_transversal(g, TransversalMode::Oct, inst.weights.as_ref())?.0
        }
    })
}

fn draw_target<R: Rng>(rng: &mut R, inst: &ProblemInstance, policy: TargetPolicy) -> Result<u64, VerifyError> {
    Ok(match policy {
        TargetPolicy::Uniform => {
            let top = inst.weights.as_ref().map_or(inst.graph.n() as u64, |w| w.as_slice().iter().sum());
            rng.gen_range(0..=top)
        }
        TargetPolicy::NearOptimum => {
            let opt = optimum(inst)?;
            (opt + rng.gen_range(0..=2)).saturating_sub(1)
        }
    })
}

/// A seeded random valid instance of `kind`.
pub fn random_instance(
    kind: ProblemKind,
    n_range: RangeInclusive<usize>,
    density: f64,
    policy: TargetPolicy,
    seed: u64,
) -> Result<ProblemInstance, VerifyError> {
    if n_range.is_empty() {
        return Err(VerifyError::Infeasible(format!("empty vertex range {n_range:?}")));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(VerifyError::Infeasible(format!("density {density} outside [0, 1]")));
    }
    let mut rng = rng_for(seed);
    let n = rng.gen_range(n_range);
    let mut inst = match kind {
        ProblemKind::Clique | ProblemKind::VertexCover => ProblemInstance::new(kind, random_graph(&mut rng, n, density), 0),
        ProblemKind::TriangleSplit3Coloring => return Ok(triangle_split_reduction(&random_graph(&mut rng, n, density))),
        ProblemKind::CliqueByVc | ProblemKind::ChromaticByVc => {
            let g = random_graph(&mut rng, n, density);
            let z = greedy_vertex_cover(&g);
            ProblemInstance::new(kind, g, 0).with_witness(z)
        }
        ProblemKind::VcByCliqueDeletion
        | ProblemKind::IsByCliqueDeletion
        | ProblemKind::FvsByCliqueDeletion
        | ProblemKind::OctByCliqueDeletion => {
            let (g, z) = planted_clique(&mut rng, n, density);
            ProblemInstance::new(kind, g, 0).with_witness(z)
        }
        ProblemKind::WeightedFvsByVc | ProblemKind::WeightedOctByVc => {
            let g = random_graph(&mut rng, n, density);
            let z = greedy_vertex_cover(&g);
            let w = Weights::new((0..n).map(|_| rng.gen_range(1..=3)).collect());
            ProblemInstance::new(kind, g, 0).with_witness(z).with_weights(w)
        }
    };
    inst.target = draw_target(&mut rng, &inst, policy)?;
    Ok(inst)
}

// ------------------------------------------------------------ batches

/// A batch of source instances sized for the oracles, drawn from `seed`.
pub fn generate_batch(composition: &dyn Composition, seed: u64) -> Result<Vec<ProblemInstance>, VerifyError> {
    let mut rng = rng_for(seed);
    match composition.source_kind() {
        ProblemKind::Clique => {
            let t = rng.gen_range(1..=4);
            let n = rng.gen_range(3..=4);
            let graphs: Vec<Graph> = (0..t)
                .map(|_| {
                    let p = rng.gen_range(0.1..0.9);
                    random_graph(&mut rng, n, p)
                })
                .collect();
            let mut best = 0;
            for g in &graphs {
                best = best.max(max_clique(g)?.0 as u64);
            }
            let target = (best + rng.gen_range(0..=2)).saturating_sub(1);
            Ok(graphs.into_iter().map(|g| ProblemInstance::new(ProblemKind::Clique, g, target)).collect())
        }
        ProblemKind::TriangleSplit3Coloring => {
            let t = rng.gen_range(1..=2);
            let n = rng.gen_range(1..=3);
            let p = rng.gen_range(0.2..1.0);
            let first = random_graph(&mut rng, n, p);
            let m = first.edge_count();
            let mut graphs = vec![first];
            for _ in 1..t {
                graphs.push(random_graph_with_edges(&mut rng, n, m));
            }
            Ok(graphs.iter().map(triangle_split_reduction).collect())
        }
        ProblemKind::VertexCover => {
            let t = rng.gen_range(1..=2);
            let n = rng.gen_range(2..=3);
            let m = rng.gen_range(1..=choose2(n).min(2));
            let graphs: Vec<Graph> = (0..t).map(|_| random_graph_with_edges(&mut rng, n, m)).collect();
            let mut low = u64::MAX;
            for g in &graphs {
                low = low.min(min_vertex_cover(g)?.0 as u64);
            }
            let target = (low + rng.gen_range(0..=2)).saturating_sub(1);
            Ok(graphs.into_iter().map(|g| ProblemInstance::new(ProblemKind::VertexCover, g, target)).collect())
        }
        other => Err(VerifyError::Infeasible(format!("no batch generator for {other} inputs"))),
    }
}

// ------------------------------------------------------------ checks

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCheck {
    pub key: EquivalenceClassKey,
    pub members: Vec<usize>,
    pub expected: Answer,
    pub got: Answer,
    pub audit_violations: Vec<String>,
}

impl ClassCheck {
    pub fn agrees(&self) -> bool {
        self.expected == self.got
    }
}

/// Partitions, pads and composes `batch`, then compares each composed
/// verdict with the OR of its class and audits the output.
pub fn check_or_equivalence(
    composition: &dyn Composition,
    batch: &[ProblemInstance],
) -> Result<Vec<ClassCheck>, VerifyError> {
    let mut checks = Vec::new();
    for class in partition_instances(composition, batch)? {
        let group: Vec<ProblemInstance> = class.members.iter().map(|&i| batch[i].clone()).collect();
        let mut expected = false;
        for inst in &group {
            expected |= decide(inst)?.is_yes();
        }
        let report = compose_group(composition, &group)?;
        let got = decide(&report.instance)?.is_yes();
        let audit_violations = audit(composition, &class.key.tag, &group, &report)?;
        checks.push(ClassCheck {
            key: class.key,
            members: class.members,
            expected: Answer::from_bool(expected),
            got: Answer::from_bool(got),
            audit_violations,
        });
    }
    Ok(checks)
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(out: &mut Vec<String>, what: &str, got: T, want: T) {
    if got != want {
        out.push(format!("{what}: got {got:?}, expected {want:?}"));
    }
}

fn range(start: usize, len: usize) -> VertexSet {
    (start..start + len).collect()
}

/// Closed-form, witness and structure checks of one composed class.
pub fn audit(
    composition: &dyn Composition,
    tag: &ClassTag,
    group: &[ProblemInstance],
    report: &CompositionReport,
) -> Result<Vec<String>, ComposeError> {
    let mut v = Vec::new();
    let out = &report.instance;
    let g = &out.graph;
    if let Err(e) = out.validate_witness() {
        v.push(format!("composed witness: {e}"));
    }
    expect_eq(&mut v, "t_raw", report.audit.t_raw, group.len());

    let source = composition.source_kind();
    match tag {
        ClassTag::Malformed => {
            let want = match source {
                ProblemKind::Clique => constant_no_clique_by_vc(),
                ProblemKind::TriangleSplit3Coloring => constant_no_chromatic_by_vc(),
                _ => constant_no_weighted(composition.target_kind()),
            };
            expect_eq(&mut v, "constant NO instance", out, &want);
            return Ok(v);
        }
        ClassTag::TrivialYes => {
            expect_eq(&mut v, "constant YES instance", out, &constant_yes_weighted(composition.target_kind()));
            return Ok(v);
        }
        ClassTag::WellFormed { .. } => {}
    }
    expect_eq(&mut v, "kind", out.kind, composition.target_kind());
    let k_prime = out.parameter().unwrap_or(0);
    expect_eq(&mut v, "audit k'", report.audit.k_prime, k_prime);
    expect_eq(&mut v, "audit l'", report.audit.l_prime, out.target);

    match source {
        ProblemKind::Clique => {
            let n = group[0].graph.n();
            let l = group[0].target as usize;
            let t = group.len();
            expect_eq(&mut v, "k'", k_prime, l * n + 3 * choose2(n));
            expect_eq(&mut v, "l'", out.target, (l + 1 + choose2(n)) as u64);
            expect_eq(&mut v, "|V'|", g.n(), k_prime + t);
            if !g.is_independent(&range(k_prime + 1, t)) {
                v.push("instance selector block is not independent".into());
            }
        }
        ProblemKind::TriangleSplit3Coloring => {
            let split = group[0].split.as_ref().expect("well-formed");
            let (n, m) = (split.x.len(), split.triangles.len());
            let padded = pad_to_power_of_two(group)?;
            let t = padded.len();
            let big_l = t.trailing_zeros() as usize;
            expect_eq(&mut v, "t", report.audit.t, t);
            expect_eq(&mut v, "k'", k_prime, 3 * big_l + 4 + 3 * m);
            expect_eq(&mut v, "l'", out.target, (big_l + 4) as u64);
            expect_eq(&mut v, "|V'|", g.n(), t * n + 3 * m + big_l + 4 + 2 * big_l);
            for i in 0..t {
                if !g.is_independent(&range(i * n + 1, n)) {
                    v.push(format!("X block {} is not independent", i + 1));
                }
            }
        }
        ProblemKind::VertexCover => {
            let n = group[0].graph.n();
            let m = group[0].graph.edge_count();
            let l = group[0].target;
            let padded = pad_to_power_of_two(group)?;
            let t = padded.len();
            let big_l = t.trailing_zeros() as usize;
            expect_eq(&mut v, "t", report.audit.t, t);
            expect_eq(&mut v, "k'", k_prime, 7 * m + 8 * big_l);
            expect_eq(&mut v, "l'", out.target, (2 * big_l * t * n + (t - 1) * n) as u64 + l);
            expect_eq(&mut v, "|V'|", g.n(), t * n + 7 * m + 8 * big_l);
            let heavy = (t * n) as u64;
            let box_start = t * n + 7 * m + 1;
            if let Some(w) = &out.weights {
                let bad = g.vertices().find(|&x| w.get(x) != if x >= box_start { heavy } else { 1 });
                if let Some(x) = bad {
                    v.push(format!("weight of vertex {x} is {}", w.get(x)));
                }
            }
            let a = range(t * n + 1, 7 * m);
            for (i, inst) in padded.iter().enumerate() {
                let block = range(i * n + 1, n);
                if !g.is_independent(&block) {
                    v.push(format!("original block {} is not independent", i + 1));
                }
                let (sub, _) = g.induced_subgraph(&block.union(&a)).expect("blocks are in range");
                if !sub.is_isomorphic_to(&inflate(&inst.graph).graph) {
                    v.push(format!("block {} with the merged scaffold is not the inflated input", i + 1));
                }
            }
        }
        _ => {}
    }
    Ok(v)
}

// ------------------------------------------------------------ runs

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialFailure {
    pub seed: u64,
    pub batch: Vec<ProblemInstance>,
    pub class: String,
    pub expected: Answer,
    pub got: Answer,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub construction: String,
    pub trials: usize,
    pub agreements: usize,
    pub failures: Vec<TrialFailure>,
    pub formula_violations: Vec<String>,
    /// Composed classes checked across all trials.
    pub classes: usize,
    pub yes_classes: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.formula_violations.is_empty() && self.agreements == self.trials
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "construction={}", self.construction).unwrap();
        writeln!(s, "trials={}", self.trials).unwrap();
        writeln!(s, "agreements={}", self.agreements).unwrap();
        writeln!(s, "classes={} yes={} no={}", self.classes, self.yes_classes, self.classes - self.yes_classes).unwrap();
        writeln!(s, "failures={}", self.failures.len()).unwrap();
        for f in &self.failures {
            writeln!(s, "  seed {} class {}: expected {}, got {}", f.seed, f.class, f.expected, f.got).unwrap();
        }
        writeln!(s, "formula_violations={}", self.formula_violations.len()).unwrap();
        for msg in &self.formula_violations {
            writeln!(s, "  {msg}").unwrap();
        }
        s
    }
}

type TrialResult = (u64, Vec<ProblemInstance>, Vec<ClassCheck>);

/// Runs `trials` independent seeded trials in parallel. Failing batches are
/// written under `out` when given.
pub fn run_verification(
    composition: &dyn Composition,
    trials: usize,
    seed: u64,
    out: Option<&Path>,
) -> Result<VerificationReport, VerifyError> {
    let results: Vec<Result<TrialResult, VerifyError>> = (0..trials as u64)
        .into_par_iter()
        .map(|i| {
            let s = seed.wrapping_add(i);
            let batch = generate_batch(composition, s)?;
            let checks = check_or_equivalence(composition, &batch)?;
            Ok((s, batch, checks))
        })
        .collect();

    let mut report = VerificationReport {
        construction: composition.id().to_string(),
        trials,
        ..Default::default()
    };
    for r in results {
        let (s, batch, checks) = r?;
        report.classes += checks.len();
        report.yes_classes += checks.iter().filter(|c| c.expected.is_yes()).count();
        for c in &checks {
            for msg in &c.audit_violations {
                report.formula_violations.push(format!("seed {s} class {}: {msg}", c.key));
            }
        }
        match checks.iter().find(|c| !c.agrees()) {
            None => report.agreements += 1,
            Some(c) => report.failures.push(TrialFailure {
                seed: s,
                batch: c.members.iter().map(|&i| batch[i].clone()).collect(),
                class: c.key.to_string(),
                expected: c.expected,
                got: c.got,
            }),
        }
    }
    if let Some(dir) = out {
        write_failures(dir, composition.id(), &report)?;
    }
    Ok(report)
}

/// One directory per failing seed holding the class inputs and a replay line.
pub fn write_failures(dir: &Path, construction: &str, report: &VerificationReport) -> Result<(), VerifyError> {
    for f in &report.failures {
        let d = dir.join(format!("seed-{}", f.seed));
        fs::create_dir_all(&d)?;
        for (k, inst) in f.batch.iter().enumerate() {
            fs::write(d.join(format!("input-{}.txt", k + 1)), inst.serialize())?;
        }
        let replay = format!(
            "xcomp verify --construction {construction} --trials 1 --seed {}\nexpected={}\ngot={}\n",
            f.seed, f.expected, f.got
        );
        fs::write(d.join("replay.txt"), replay)?;
    }
    Ok(())
}

/// The clique composition with the pair-gadget adjacency of the instance
/// vertices inverted. Exists so the harness can show it catches a wrong
/// construction.
#[derive(Clone, Copy, Debug, Default)]
pub struct MutantCliqueComposition;

impl Composition for MutantCliqueComposition {
    fn id(&self) -> &'static str {
        "clique-mutant"
    }

    fn source_kind(&self) -> ProblemKind {
        ProblemKind::Clique
    }

    fn target_kind(&self) -> ProblemKind {
        ProblemKind::CliqueByVc
    }

    fn class_tag(&self, inst: &ProblemInstance) -> ClassTag {
        CliqueComposition.class_tag(inst)
    }

    fn compose_well_formed(&self, group: &[ProblemInstance], t_raw: usize) -> Result<CompositionReport, ComposeError> {
        let n = group[0].graph.n();
        let l = group[0].target as usize;
        let instance = CliqueComposition::build(group, n, l, true);
        Ok(CliqueComposition::report(group, t_raw, instance, self.id()))
    }

    fn constant_no(&self) -> ProblemInstance {
        constant_no_clique_by_vc()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compose::CompositionRegistry;

    #[test]
    fn generation_is_deterministic() {
        for kind in ProblemKind::ALL {
            let a = random_instance(kind, 3..=6, 0.5, TargetPolicy::NearOptimum, 11).unwrap();
            let b = random_instance(kind, 3..=6, 0.5, TargetPolicy::NearOptimum, 11).unwrap();
            assert_eq!(a.serialize(), b.serialize());
            assert!(a.validate_witness().is_ok(), "{kind}: {:?}", a.validate_witness());
        }
    }

    #[test]
    fn near_optimum_gives_both_answers() {
        let (mut yes, mut no) = (0, 0);
        for seed in 0..100 {
            let inst = random_instance(ProblemKind::VcByCliqueDeletion, 2..=7, 0.4, TargetPolicy::NearOptimum, seed).unwrap();
            if decide(&inst).unwrap().is_yes() {
                yes += 1;
            } else {
                no += 1;
            }
        }
        assert!(yes > 0 && no > 0);
    }

    #[test]
    fn greedy_cover_is_minimal() {
        let g = Graph::petersen();
        let c = greedy_vertex_cover(&g);
        assert!(g.is_vertex_cover(&c));
        for v in c.iter() {
            let mut smaller = c.clone();
            smaller.remove(v);
            assert!(!g.is_vertex_cover(&smaller));
        }
    }

    #[test]
    fn small_batches_agree() {
        let reg = CompositionRegistry::default();
        let thm7 = reg.get("thm7").unwrap();
        let batch = vec![
            ProblemInstance::new(ProblemKind::Clique, Graph::path(3), 2),
            ProblemInstance::new(ProblemKind::Clique, Graph::empty(3), 2),
        ];
        let checks = check_or_equivalence(thm7, &batch).unwrap();
        assert_eq!(checks.len(), 1);
        assert!(checks[0].agrees() && checks[0].got.is_yes());
        assert!(checks[0].audit_violations.is_empty(), "{:?}", checks[0].audit_violations);

        for id in ["thm10-fvs", "thm10-oct"] {
            let comp = reg.get(id).unwrap();
            let k2 = ProblemInstance::new(ProblemKind::VertexCover, Graph::complete(2), 0);
            let checks = check_or_equivalence(comp, &[k2.clone(), k2]).unwrap();
            assert!(checks[0].agrees() && !checks[0].got.is_yes());
            assert!(checks[0].audit_violations.is_empty(), "{:?}", checks[0].audit_violations);
        }

        let malformed = vec![ProblemInstance::new(ProblemKind::Clique, Graph::complete(2), 3)];
        let checks = check_or_equivalence(thm7, &malformed).unwrap();
        assert!(checks[0].agrees() && !checks[0].got.is_yes());
    }

    #[test]
    fn short_runs_pass() {
        let reg = CompositionRegistry::default();
        for id in reg.ids() {
            let report = run_verification(reg.get(id).unwrap(), 6, 500, None).unwrap();
            assert!(report.passed(), "{id}\n{}", report.to_text());
        }
    }

    #[test]
    fn mutant_is_caught() {
        let report = run_verification(&MutantCliqueComposition, 40, 0, None).unwrap();
        assert!(!report.failures.is_empty());
    }
}
