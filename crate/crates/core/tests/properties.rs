use proptest::prelude::*;

use xcomp_core::compose::{compose_group, encode_index, CompositionRegistry};
use xcomp_core::engine::{FptSolver, Solver};
use xcomp_core::fpt::turing_kernel_clique_by_vc;
use xcomp_core::oracle::{chromatic_number, decide, max_clique, min_transversal, min_vertex_cover, TransversalMode};
use xcomp_core::transform::{apexify, clique_cover};
use xcomp_core::verify::{generate_batch, random_instance, TargetPolicy};
use xcomp_core::{Graph, ProblemInstance, ProblemKind, VertexSet};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u32..1 << n).map(move |m| (1..=n).filter(|v| m >> (v - 1) & 1 == 1).collect())
}

fn brute_clique(g: &Graph) -> usize {
    subsets(g.n()).filter(|s| g.is_clique(s)).map(|s| s.len()).max().unwrap_or(0)
}

fn brute_cover(g: &Graph) -> usize {
    subsets(g.n()).filter(|s| g.is_vertex_cover(s)).map(|s| s.len()).min().unwrap_or(0)
}

fn brute_chromatic(g: &Graph) -> usize {
    let n = g.n();
    (0..=n)
        .find(|&k| {
            let total = (k.max(1) as u64).pow(n as u32);
            (0..total).any(|code| {
                let mut c = code;
                let colors: Vec<u64> = (0..n)
                    .map(|_| {
                        let x = c % k.max(1) as u64;
                        c /= k.max(1) as u64;
                        x
                    })
                    .collect();
                (k > 0 || n == 0) && g.edges().iter().all(|&(u, v)| colors[u - 1] != colors[v - 1])
            })
        })
        .unwrap()
}

fn brute_transversal(g: &Graph, mode: TransversalMode) -> usize {
    subsets(g.n())
        .filter(|s| {
            let (rest, _) = g.remove_vertices(s).unwrap();
            mode.is_clean(&rest)
        })
        .map(|s| s.len())
        .min()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in graph_strategy(8)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.complement().edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
    }

    #[test]
    fn oracles_match_brute_force(g in graph_strategy(6)) {
        prop_assert_eq!(max_clique(&g).unwrap().0, brute_clique(&g));
        prop_assert_eq!(min_vertex_cover(&g).unwrap().0, brute_cover(&g));
        prop_assert_eq!(chromatic_number(&g).unwrap().0, brute_chromatic(&g));
        for mode in [TransversalMode::Fvs, TransversalMode::Oct] {
            prop_assert_eq!(min_transversal(&g, mode, None).unwrap().0 as usize, brute_transversal(&g, mode));
        }
    }

    #[test]
    fn serialization_round_trips(kind_idx in 0usize..11, seed in any::<u64>()) {
        let kind = ProblemKind::ALL[kind_idx];
        let inst = random_instance(kind, 0..=7, 0.4, TargetPolicy::Uniform, seed).unwrap();
        let text = inst.serialize();
        let back = ProblemInstance::parse(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(back.serialize(), text);
    }

    #[test]
    fn index_codes_round_trip(bits in 0u32..10, raw in any::<usize>()) {
        let i = raw % (1usize << bits) + 1;
        let code = encode_index(i, bits).unwrap();
        prop_assert_eq!(code.len(), bits as usize);
        prop_assert_eq!(code.decode(), i);
    }

    #[test]
    fn clique_cover_covers_with_cliques(seed in any::<u64>()) {
        let inst = random_instance(ProblemKind::VcByCliqueDeletion, 0..=7, 0.5, TargetPolicy::Uniform, seed).unwrap();
        let z = inst.witness_or_empty();
        let family = clique_cover(&inst.graph, &z).unwrap();
        for member in &family {
            prop_assert!(inst.graph.is_clique(member));
            prop_assert!(!member.is_empty());
        }
        for (u, v) in inst.graph.edges() {
            prop_assert!(family.iter().any(|m| m.contains(u) && m.contains(v)));
        }
        let k = z.len();
        prop_assert!(family.len() <= k * k.saturating_sub(1) / 2 + 1 + k);
        let out = apexify(&inst, TransversalMode::Fvs).unwrap();
        prop_assert!(out.validate_witness().is_ok());
        prop_assert_eq!(out.parameter(), Some(k + family.len()));
    }

    #[test]
    fn fpt_agrees_with_oracle(kind_idx in 0usize..4, seed in any::<u64>()) {
        let kind = [
            ProblemKind::CliqueByVc,
            ProblemKind::ChromaticByVc,
            ProblemKind::FvsByCliqueDeletion,
            ProblemKind::OctByCliqueDeletion,
        ][kind_idx];
        let inst = random_instance(kind, 0..=7, 0.5, TargetPolicy::NearOptimum, seed).unwrap();
        let fpt = FptSolver.solve(&inst).unwrap();
        prop_assert_eq!(fpt.is_yes(), decide(&inst).unwrap().is_yes());
        prop_assert!(xcomp_core::oracle::certificate_holds(&inst, &fpt));
    }

    #[test]
    fn turing_kernel_is_an_or(seed in any::<u64>()) {
        let inst = random_instance(ProblemKind::CliqueByVc, 0..=7, 0.5, TargetPolicy::NearOptimum, seed).unwrap();
        let list = turing_kernel_clique_by_vc(&inst).unwrap();
        let k = inst.parameter().unwrap();
        prop_assert_eq!(list.len(), 1 + inst.graph.n() - k);
        prop_assert!(list.iter().all(|i| i.graph.n() <= k + 1));
        let any = list.iter().any(|i| decide(i).unwrap().is_yes());
        prop_assert_eq!(any, decide(&inst).unwrap().is_yes());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn composition_is_deterministic_and_valid(id_idx in 0usize..4, seed in any::<u64>()) {
        let reg = CompositionRegistry::default();
        let comp = reg.get(reg.ids()[id_idx]).unwrap();
        let batch = generate_batch(comp, seed).unwrap();
        let classes = xcomp_core::compose::partition_instances(comp, &batch).unwrap();
        for class in classes {
            let group: Vec<ProblemInstance> = class.members.iter().map(|&i| batch[i].clone()).collect();
            let a = compose_group(comp, &group).unwrap();
            let b = compose_group(comp, &group).unwrap();
            prop_assert_eq!(a.instance.serialize(), b.instance.serialize());
            prop_assert_eq!(a.audit.to_text(), b.audit.to_text());
            prop_assert!(a.instance.validate_witness().is_ok());
        }
    }
}
