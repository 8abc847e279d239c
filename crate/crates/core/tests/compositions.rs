use xcomp_core::compose::{compose_group, CompositionRegistry};
use xcomp_core::gadgets::triangle_split_reduction;
use xcomp_core::oracle::decide;
use xcomp_core::verify::{check_or_equivalence, run_verification, MutantCliqueComposition};
use xcomp_core::{Graph, ProblemInstance, ProblemKind};

fn clique(g: Graph, l: u64) -> ProblemInstance {
    ProblemInstance::new(ProblemKind::Clique, g, l)
}

#[test]
fn clique_formulas_for_n4() {
    let reg = CompositionRegistry::default();
    for t in 1..=4 {
        let group: Vec<_> = (0..t).map(|_| clique(Graph::path(4), 2)).collect();
        let r = compose_group(reg.get("thm7").unwrap(), &group).unwrap();
        assert_eq!((r.audit.l_prime, r.audit.k_prime), (9, 26));
    }
}

#[test]
fn chromatic_formulas_for_one_triangle() {
    let reg = CompositionRegistry::default();
    let inst = triangle_split_reduction(&Graph::complete(2));
    let r = compose_group(reg.get("thm8").unwrap(), &[inst.clone(), inst]).unwrap();
    assert_eq!((r.audit.l_prime, r.audit.k_prime), (5, 10));
}

#[test]
fn weighted_formula_for_two_edges() {
    let reg = CompositionRegistry::default();
    let k2 = ProblemInstance::new(ProblemKind::VertexCover, Graph::complete(2), 1);
    let r = compose_group(reg.get("thm10-fvs").unwrap(), &[k2.clone(), k2]).unwrap();
    assert_eq!(r.audit.l_prime, 11);
    assert!(decide(&r.instance).unwrap().is_yes());
}

#[test]
fn mixed_chromatic_batch_agrees() {
    let reg = CompositionRegistry::default();
    let k4_plus = Graph::from_edges(5, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
    let k23 = Graph::from_edges(5, &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
    let batch = vec![triangle_split_reduction(&k4_plus), triangle_split_reduction(&k23)];
    let checks = check_or_equivalence(reg.get("thm8").unwrap(), &batch).unwrap();
    assert_eq!(checks.len(), 1);
    assert!(checks[0].agrees() && checks[0].got.is_yes());
}

#[test]
fn inverted_pair_gadget_is_detected() {
    let report = run_verification(&MutantCliqueComposition, 100, 20_240_601, None).unwrap();
    assert!(!report.passed());
    assert!(report.agreements < report.trials);
}
