//! The acceptance suite: thirteen gating checks plus one reported stretch case.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Deserialize;

use crate::compose::{
    compose_group, distillation_budget, encode_index, BudgetParameters, ChromaticComposition, CliqueComposition,
    Composition, CompositionRegistry, WeightedTransversalComposition,
};
use crate::engine::{FptSolver, Solver};
use crate::error::VerifyError;
use crate::fpt::turing_kernel_clique_by_vc;
use crate::gadgets::{inflate, k4_in_a_box, triangle_split_reduction};
use crate::graph::{Graph, VertexSet};
use crate::instance::{ProblemInstance, ProblemKind};
use crate::oracle::{decide, find_coloring, min_transversal, min_vertex_cover, TransversalMode};
use crate::transform::{apexify, clique_cover, complement_chain};
use crate::verify::{audit, check_or_equivalence, random_instance, run_verification, TargetPolicy};

#[derive(Clone, Debug, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AcceptanceConfig {
    pub seed: u64,
    pub clique_batches: usize,
    pub chromatic_batches: usize,
    pub apex_instances: usize,
    pub fpt_instances: usize,
    pub complement_instances: usize,
    /// Run the large weighted composition (reported, never gating).
    pub stretch: bool,
    /// Where failing batches are written.
    pub failure_dir: Option<PathBuf>,
}

impl Default for AcceptanceConfig {
    fn default() -> Self {
        AcceptanceConfig {
            seed: 20_240_601,
            clique_batches: 100,
            chromatic_batches: 50,
            apex_instances: 100,
            fpt_instances: 100,
            complement_instances: 100,
            stretch: true,
            failure_dir: None,
        }
    }
}

impl AcceptanceConfig {
    pub fn from_toml(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub gating: bool,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        let status = match (self.passed, self.gating) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "MISS",
        };
        let tag = if self.gating { format!("C{}", self.id) } else { format!("C{}*", self.id) };
        format!("[{status}] {tag:<4} {:<48} {:>8.2}s  {}", self.name, self.elapsed.as_secs_f64(), self.detail)
    }
}

#[derive(Clone, Debug, Default)]
pub struct AcceptanceSummary {
    pub results: Vec<CriterionResult>,
}

impl AcceptanceSummary {
    pub fn all_passed(&self) -> bool {
        self.results.iter().filter(|r| r.gating).all(|r| r.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.results {
            writeln!(s, "{}", r.line()).unwrap();
        }
        let gating: Vec<&CriterionResult> = self.results.iter().filter(|r| r.gating).collect();
        let passed = gating.iter().filter(|r| r.passed).count();
        writeln!(s, "{passed}/{} gating criteria passed", gating.len()).unwrap();
        s
    }
}

pub const CRITERIA: [u8; 13] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13];

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

/// Runs one gating criterion (1..=13).
pub fn run_criterion(id: u8, cfg: &AcceptanceConfig) -> CriterionResult {
    let (name, limit): (&'static str, Option<Duration>) = match id {
        1 => ("inflating an edge gives a 9-cycle", secs(1)),
        2 => ("box gadget triangle transversals", secs(1)),
        3 => ("inflation preserves vertex cover as FVS/OCT", secs(60)),
        4 => ("triangle-split reduction preserves 3-colouring", secs(120)),
        5 => ("clique composition OR-equivalence", secs(600)),
        6 => ("chromatic composition OR-equivalence", secs(600)),
        7 => ("apex transformation verdict equivalence", secs(300)),
        8 => ("weighted composition OR-equivalence", secs(60)),
        9 => ("weighted composition structure", None),
        10 => ("fpt algorithms and Turing kernel vs oracle", secs(300)),
        11 => ("complement chain preserves verdicts", None),
        12 => ("index convention and budget formulas", None),
        13 => ("composition output is deterministic", None),
        _ => ("unknown criterion", None),
    };
    let start = Instant::now();
    let outcome = match id {
        1 => c1_inflate_edge(),
        2 => c2_box_transversals(),
        3 => c3_inflation_equivalence(),
        4 => c4_triangle_split(),
        5 => c5_clique(cfg),
        6 => c6_chromatic(cfg),
        7 => c7_apex(cfg),
        8 => c8_weighted(),
        9 => c9_weighted_structure(),
        10 => c10_fpt(cfg),
        11 => c11_complement(cfg),
        12 => c12_formulas(),
        13 => c13_determinism(cfg),
        _ => Ok((false, format!("no criterion {id}"))),
    };
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    if let Some(l) = limit {
        if elapsed > l {
            passed = false;
            detail.push_str(&format!("; over time limit {}s", l.as_secs()));
        }
    }
    CriterionResult { id, name, gating: true, passed, detail, elapsed, limit }
}

/// The large weighted composition; reported but never gating.
pub fn run_stretch() -> CriterionResult {
    let start = Instant::now();
    let outcome = stretch_weighted();
    let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    CriterionResult {
        id: 8,
        name: "weighted composition, 37-vertex stretch case",
        gating: false,
        passed,
        detail,
        elapsed: start.elapsed(),
        limit: None,
    }
}

pub fn run_acceptance_suite(cfg: &AcceptanceConfig) -> AcceptanceSummary {
    let mut results: Vec<CriterionResult> = CRITERIA.iter().map(|&id| run_criterion(id, cfg)).collect();
    if cfg.stretch {
        results.push(run_stretch());
    }
    AcceptanceSummary { results }
}

type Outcome = Result<(bool, String), VerifyError>;

fn c1_inflate_edge() -> Outcome {
    let g = inflate(&Graph::complete(2)).graph;
    let ok = g.n() == 9 && g.edge_count() == 9 && g.is_isomorphic_to(&Graph::cycle(9));
    Ok((ok, format!("{} vertices, {} edges", g.n(), g.edge_count())))
}

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        for w in v + 1..=g.n() {
            if g.has_edge(u, w) && g.has_edge(v, w) {
                out.push([u, v, w]);
            }
        }
    }
    out
}

fn c2_box_transversals() -> Outcome {
    let b = k4_in_a_box();
    let tris = triangles(&b.graph);
    let hits: Vec<u32> = (0u32..1 << 8)
        .filter(|mask| tris.iter().all(|t| t.iter().any(|&v| mask >> (v - 1) & 1 == 1)))
        .collect();
    let min = hits.iter().map(|m| m.count_ones()).min().unwrap_or(0);
    let mut smallest: Vec<VertexSet> = hits
        .iter()
        .filter(|m| m.count_ones() == min)
        .map(|&m| (1..=8).filter(|v| m >> (v - 1) & 1 == 1).collect())
        .collect();
    smallest.sort_by_key(|s| s.to_vec());
    let want = vec![VertexSet::from(b.zero_terminals), VertexSet::from(b.one_terminals)];
    let ok = min == 2 && smallest == want;
    let listed: Vec<String> = smallest.iter().map(|s| s.to_string()).collect();
    Ok((ok, format!("{} triangles, minimum {min}, minimum sets {}", tris.len(), listed.join(" "))))
}

/// Every labelled graph on `n` vertices, edges drawn from a bitmask.
fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).expect("valid pairs")
    })
}

fn c3_inflation_equivalence() -> Outcome {
    let graphs: Vec<Graph> = (0..=4).flat_map(all_graphs).filter(|g| g.edge_count() <= 4).collect();
    let mismatches: Vec<String> = graphs
        .par_iter()
        .map(|g| -> Result<Option<String>, VerifyError> {
            let vc = min_vertex_cover(g)?.0 as u64;
            let phi = inflate(g).graph;
            let fvs = min_transversal(&phi, TransversalMode::Fvs, None)?.0;
            let oct = min_transversal(&phi, TransversalMode::Oct, None)?.0;
            let bad = (0..=4u64).any(|l| !((vc <= l) == (fvs <= l) && (fvs <= l) == (oct <= l)));
            Ok(bad.then(|| format!("{:?}: vc={vc} fvs={fvs} oct={oct}", g.edges())))
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    let checks = graphs.len() * 5;
    Ok((mismatches.is_empty(), format!("{checks} (graph, l) pairs, {} mismatches {}", mismatches.len(), mismatches.join("; "))))
}

fn c4_triangle_split() -> Outcome {
    let graphs: Vec<Graph> = (0..=5).flat_map(all_graphs).collect();
    let bad: Vec<String> = graphs
        .par_iter()
        .map(|g| -> Result<Option<String>, VerifyError> {
            let before = find_coloring(g, 3)?.is_some();
            let r = triangle_split_reduction(g);
            let valid = r.validate_witness().is_ok();
            let after = find_coloring(&r.graph, 3)?.is_some();
            Ok((before != after || !valid).then(|| format!("{:?}", g.edges())))
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok((bad.is_empty(), format!("{} graphs, {} mismatches {}", graphs.len(), bad.len(), bad.join("; "))))
}

fn verification(composition: &dyn Composition, trials: usize, cfg: &AcceptanceConfig) -> Outcome {
    let dir = cfg.failure_dir.as_ref().map(|d| d.join(composition.id()));
    let r = run_verification(composition, trials, cfg.seed, dir.as_deref())?;
    let ok = trials > 0 && r.passed();
    let mut detail = format!(
        "{}/{} trials agree, {} classes ({} YES), {} formula violations",
        r.agreements,
        r.trials,
        r.classes,
        r.yes_classes,
        r.formula_violations.len()
    );
    if let Some(f) = r.failures.first() {
        detail.push_str(&format!("; first failure seed {}", f.seed));
    }
    if let Some(v) = r.formula_violations.first() {
        detail.push_str(&format!("; {v}"));
    }
    Ok((ok, detail))
}

fn c5_clique(cfg: &AcceptanceConfig) -> Outcome {
    verification(&CliqueComposition, cfg.clique_batches, cfg)
}

/// Fixed chromatic batches with NO members; random graphs on at most three
/// vertices are always 3-colourable.
fn chromatic_fixed_batches() -> Vec<Vec<ProblemInstance>> {
    let k4 = triangle_split_reduction(&Graph::complete(4));
    let k4_plus = triangle_split_reduction(&Graph::from_edges(5, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap());
    let k23 = triangle_split_reduction(&Graph::from_edges(5, &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap());
    vec![vec![k4.clone()], vec![k4.clone(), k4], vec![k4_plus.clone(), k23.clone()], vec![k23, k4_plus]]
}

fn c6_chromatic(cfg: &AcceptanceConfig) -> Outcome {
    let (ok, mut detail) = verification(&ChromaticComposition, cfg.chromatic_batches, cfg)?;
    let mut fixed_ok = true;
    let mut answers = Vec::new();
    for batch in chromatic_fixed_batches() {
        for check in check_or_equivalence(&ChromaticComposition, &batch)? {
            fixed_ok &= check.agrees() && check.audit_violations.is_empty();
            answers.push(check.got.to_string());
        }
    }
    detail.push_str(&format!("; fixed batches {} ({})", if fixed_ok { "agree" } else { "DISAGREE" }, answers.join(",")));
    Ok((ok && fixed_ok, detail))
}

fn c7_apex(cfg: &AcceptanceConfig) -> Outcome {
    let results: Vec<Result<Option<String>, VerifyError>> = (0..cfg.apex_instances as u64)
        .into_par_iter()
        .map(|i| {
            let seed = cfg.seed.wrapping_add(i);
            let inst = random_instance(ProblemKind::VcByCliqueDeletion, 1..=7, 0.4, TargetPolicy::NearOptimum, seed)?;
            let z = inst.witness_or_empty();
            let family = clique_cover(&inst.graph, &z).map_err(crate::error::TransformError::from)?;
            let vc = decide(&inst)?.is_yes();
            let f = apexify(&inst, TransversalMode::Fvs)?;
            let o = apexify(&inst, TransversalMode::Oct)?;
            let fvs = decide(&f)?.is_yes();
            let oct = decide(&o)?.is_yes();
            let k_ok = f.parameter() == Some(z.len() + family.len()) && o.parameter() == f.parameter();
            Ok((!(vc == fvs && fvs == oct && k_ok)).then(|| format!("seed {seed}: vc={vc} fvs={fvs} oct={oct} k_ok={k_ok}")))
        })
        .collect();
    let mut bad = Vec::new();
    for r in results {
        bad.extend(r?);
    }
    let n = cfg.apex_instances;
    Ok((n > 0 && bad.is_empty(), format!("{}/{n} instances agree {}", n - bad.len(), bad.join("; "))))
}

fn weighted_cases() -> Vec<(TransversalMode, Vec<ProblemInstance>)> {
    let mut out = Vec::new();
    for mode in [TransversalMode::Fvs, TransversalMode::Oct] {
        for l in [0, 1] {
            let k2 = ProblemInstance::new(ProblemKind::VertexCover, Graph::complete(2), l);
            out.push((mode, vec![k2.clone(), k2]));
        }
    }
    out
}

fn c8_weighted() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (mode, batch) in weighted_cases() {
        let comp = WeightedTransversalComposition::new(mode);
        let report = compose_group(&comp, &batch)?;
        let expected = batch.iter().map(decide).collect::<Result<Vec<_>, _>>()?.iter().any(|v| v.is_yes());
        let got = decide(&report.instance)?.is_yes();
        let l = batch[0].target;
        // t = 2, n = 2: 2·1·2·2 + 2 + l
        let l_prime_ok = report.instance.target == 10 + l && report.audit.l_prime == 10 + l;
        let size_ok = report.instance.graph.n() == 19;
        ok &= expected == got && l_prime_ok && size_ok;
        parts.push(format!("{} l={l}: {}", mode.token(), if got { "YES" } else { "NO" }));
    }
    Ok((ok, parts.join(", ")))
}

fn c9_weighted_structure() -> Outcome {
    let mut violations = Vec::new();
    for (mode, batch) in weighted_cases() {
        let comp = WeightedTransversalComposition::new(mode);
        let report = compose_group(&comp, &batch)?;
        let tag = comp.class_tag(&batch[0]);
        violations.extend(audit(&comp, &tag, &batch, &report)?);
    }
    Ok((violations.is_empty(), format!("{} violations {}", violations.len(), violations.join("; "))))
}

fn stretch_weighted() -> Outcome {
    let claw = ProblemInstance::new(ProblemKind::VertexCover, Graph::star(3), 1);
    let p4 = ProblemInstance::new(ProblemKind::VertexCover, Graph::path(4), 1);
    let batch = vec![claw, p4];
    let mut ok = true;
    let mut parts = Vec::new();
    for mode in [TransversalMode::Fvs, TransversalMode::Oct] {
        let comp = WeightedTransversalComposition::new(mode);
        let checks = check_or_equivalence(&comp, &batch)?;
        let c = &checks[0];
        ok &= checks.len() == 1 && c.agrees() && c.audit_violations.is_empty();
        parts.push(format!("{}: expected {}, composed {}", mode.token(), c.expected, c.got));
    }
    Ok((ok, parts.join(", ")))
}

fn c10_fpt(cfg: &AcceptanceConfig) -> Outcome {
    let kinds = [
        ProblemKind::CliqueByVc,
        ProblemKind::ChromaticByVc,
        ProblemKind::FvsByCliqueDeletion,
        ProblemKind::OctByCliqueDeletion,
    ];
    let n = cfg.fpt_instances as u64;
    let jobs: Vec<(ProblemKind, u64)> = kinds.iter().flat_map(|&k| (0..n).map(move |i| (k, i))).collect();
    let results: Vec<Result<Option<String>, VerifyError>> = jobs
        .par_iter()
        .map(|&(kind, i)| {
            let seed = cfg.seed.wrapping_add(i);
            let inst = random_instance(kind, 1..=8, 0.45, TargetPolicy::NearOptimum, seed)?;
            let oracle = decide(&inst)?.is_yes();
            let fpt = FptSolver.solve(&inst)?.is_yes();
            if oracle != fpt {
                return Ok(Some(format!("{kind} seed {seed}: oracle {oracle}, fpt {fpt}")));
            }
            if kind == ProblemKind::CliqueByVc {
                let k = inst.parameter().unwrap_or(0);
                let kernel = turing_kernel_clique_by_vc(&inst)?;
                let mut any = false;
                for out in &kernel {
                    if out.graph.n() > k + 1 {
                        return Ok(Some(format!("kernel seed {seed}: output with {} > k+1 vertices", out.graph.n())));
                    }
                    any |= decide(out)?.is_yes();
                }
                if any != oracle {
                    return Ok(Some(format!("kernel seed {seed}: OR {any}, oracle {oracle}")));
                }
            }
            Ok(None)
        })
        .collect();
    let mut bad = Vec::new();
    for r in results {
        bad.extend(r?);
    }
    Ok((n > 0 && bad.is_empty(), format!("{} checks, {} mismatches {}", jobs.len(), bad.len(), bad.join("; "))))
}

fn c11_complement(cfg: &AcceptanceConfig) -> Outcome {
    let n = cfg.complement_instances as u64;
    let results: Vec<Result<Option<String>, VerifyError>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let seed = cfg.seed.wrapping_add(i);
            let mut inst = random_instance(ProblemKind::CliqueByVc, 1..=7, 0.5, TargetPolicy::NearOptimum, seed)?;
            inst.target = inst.target.min(inst.graph.n() as u64);
            let (is, vc) = complement_chain(&inst)?;
            let a = decide(&inst)?.is_yes();
            let b = decide(&is)?.is_yes();
            let c = decide(&vc)?.is_yes();
            Ok((!(a == b && b == c)).then(|| format!("seed {seed}: {a} {b} {c}")))
        })
        .collect();
    let mut bad = Vec::new();
    for r in results {
        bad.extend(r?);
    }
    Ok((n > 0 && bad.is_empty(), format!("{}/{n} chains agree {}", n - bad.len() as u64, bad.join("; "))))
}

fn c12_formulas() -> Outcome {
    let e1 = encode_index(1, 2)?.to_string();
    let e4 = encode_index(4, 2)?.to_string();
    let budget = distillation_budget(BudgetParameters { b: 2.0, c: 1.0, d: 1.0, epsilon: 1.0, s: 2.0 })
        .map_err(|e| VerifyError::Infeasible(e.to_string()))?;
    // 1/3 is the nearest double to the exact value
    let ok = e1 == "01" && e4 == "00" && budget.t == 8 && budget.delta == 1.0 / 3.0;
    Ok((ok, format!("encode(1,2)={e1} encode(4,2)={e4} t={} delta={}", budget.t, budget.delta)))
}

fn c13_determinism(cfg: &AcceptanceConfig) -> Outcome {
    let reg = CompositionRegistry::default();
    let mut compared = 0;
    let mut bad = Vec::new();
    for id in reg.ids() {
        let comp = reg.get(id)?;
        for i in 0..5 {
            let seed = cfg.seed.wrapping_add(i);
            let batch = crate::verify::generate_batch(comp, seed)?;
            let text: Vec<String> = batch.iter().map(ProblemInstance::serialize).collect();
            let run = || -> Result<Vec<(String, String)>, VerifyError> {
                let parsed = text
                    .iter()
                    .map(|t| ProblemInstance::parse(t).map_err(|e| VerifyError::Infeasible(e.to_string())))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(crate::compose::compose_all(comp, &parsed)?
                    .into_iter()
                    .map(|(_, r)| (r.instance.serialize(), r.audit.to_text()))
                    .collect())
            };
            let first = run()?;
            let second = run()?;
            compared += first.len();
            if first != second {
                bad.push(format!("{id} seed {seed}"));
            }
        }
    }
    Ok((bad.is_empty(), format!("{compared} composed outputs compared, {} differ {}", bad.len(), bad.join("; "))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_from_toml() {
        let cfg = AcceptanceConfig::from_toml("seed = 7\nclique_batches = 3\nstretch = false\n").unwrap();
        assert_eq!((cfg.seed, cfg.clique_batches, cfg.chromatic_batches, cfg.stretch), (7, 3, 50, false));
        assert!(AcceptanceConfig::from_toml("bogus = 1").is_err());
    }

    #[test]
    fn fast_criteria() {
        let cfg = AcceptanceConfig::default();
        for id in [1, 2, 12] {
            let r = run_criterion(id, &cfg);
            assert!(r.passed, "{}", r.line());
        }
    }
}
