//! Fixed-parameter algorithms that exploit the supplied witness `Z`, plus the
//! clique Turing kernel.

use crate::error::SolveError;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::instance::{Certificate, ProblemInstance, ProblemKind, Verdict};
use crate::oracle::TransversalMode;

fn expect_kind(inst: &ProblemInstance, expected: ProblemKind) -> Result<(), SolveError> {
    if inst.kind != expected {
        return Err(SolveError::WrongKind {
            expected,
            got: inst.kind,
        });
    }
    inst.validate_witness()?;
    Ok(())
}

/// All subsets of `items`, in binary-counter order.
fn subsets(items: &[Vertex]) -> impl Iterator<Item = VertexSet> + '_ {
    (0u64..1 << items.len()).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    })
}

/// Clique by vertex cover: a clique meets `V \ Z` in at most one vertex, so
/// try every clique `C ⊆ Z` and, if needed, one common neighbour outside `Z`.
pub fn fpt_clique_by_vc(inst: &ProblemInstance) -> Result<Verdict, SolveError> {
    expect_kind(inst, ProblemKind::CliqueByVc)?;
    let g = &inst.graph;
    let z = inst.witness_or_empty();
    let outside = g.vertex_set().difference(&z);
    let zs = z.to_vec();
    let mut best: Option<VertexSet> = None;
    for c in subsets(&zs) {
        if !g.is_clique(&c) {
            continue;
        }
        let extension = outside.iter().find(|&v| c.iter().all(|u| g.has_edge(u, v)));
        let mut clique = c;
        if let Some(v) = extension {
            clique.insert(v);
        }
        if best.as_ref().is_none_or(|b| clique.len() > b.len()) {
            best = Some(clique);
        }
    }
    let best = best.unwrap_or_default();
    let size = best.len() as u64;
    Ok(if size >= inst.target {
        Verdict::yes(Some(Certificate::Set(best)), Some(size))
    } else {
        Verdict::no(Some(size))
    })
}

/// The list `(G[Z], Z, ℓ)` followed by `(G[Z ∪ {v}], Z, ℓ)` for each
/// `v ∈ V \ Z` in ascending order. Each output has at most `|Z| + 1`
/// vertices and the input is YES iff some output is.
pub fn turing_kernel_clique_by_vc(inst: &ProblemInstance) -> Result<Vec<ProblemInstance>, SolveError> {
    expect_kind(inst, ProblemKind::CliqueByVc)?;
    let g = &inst.graph;
    let z = inst.witness_or_empty();
    let mut out = Vec::new();
    let mut push = |keep: VertexSet| {
        let (h, map) = g.induced_subgraph(&keep).expect("subset of V(G)");
        let z_new: VertexSet = z.iter().map(|v| map[&v]).collect();
        out.push(ProblemInstance::new(ProblemKind::CliqueByVc, h, inst.target).with_witness(z_new));
    };
    push(z.clone());
    for v in g.vertex_set().difference(&z).iter() {
        let mut keep = z.clone();
        keep.insert(v);
        push(keep);
    }
    Ok(out)
}

/// Chromatic number by vertex cover: answer YES outright when `ℓ ≥ |Z| + 1`;
/// otherwise enumerate ℓ-colourings of `G[Z]` and test whether every vertex
/// outside `Z` sees a free colour.
pub fn fpt_chromatic_by_vc(inst: &ProblemInstance) -> Result<Verdict, SolveError> {
    expect_kind(inst, ProblemKind::ChromaticByVc)?;
    let g = &inst.graph;
    let z = inst.witness_or_empty();
    let colors = inst.target as usize;
    if inst.target > z.len() as u64 {
        let mut coloring = vec![0; g.n()];
        for (i, v) in z.iter().enumerate() {
            coloring[v - 1] = i + 1;
        }
        for v in g.vertex_set().difference(&z).iter() {
            coloring[v - 1] = z.len() + 1;
        }
        return Ok(Verdict::yes(Some(Certificate::Coloring(coloring)), None));
    }
    let zs = z.to_vec();
    let mut assignment = vec![0usize; g.n()];
    let found = extend_z_coloring(g, &zs, &z, colors, 0, 0, &mut assignment);
    Ok(if found {
        Verdict::yes(Some(Certificate::Coloring(assignment)), None)
    } else {
        Verdict::no(None)
    })
}

/// Enumerates colourings of `Z` in lexicographic order; a colour is only
/// opened after all smaller ones are in use, so the least vertex of `Z`
/// always gets colour 1.
fn extend_z_coloring(
    g: &Graph,
    zs: &[Vertex],
    z: &VertexSet,
    colors: usize,
    index: usize,
    max_used: usize,
    assignment: &mut [usize],
) -> bool {
    if index == zs.len() {
        return complete_outside(g, z, colors, assignment);
    }
    let v = zs[index];
    for c in 1..=colors.min(max_used + 1) {
        let clash = g.neighbors(v).any(|u| z.contains(u) && assignment[u - 1] == c);
        if clash {
            continue;
        }
        assignment[v - 1] = c;
        if extend_z_coloring(g, zs, z, colors, index + 1, max_used.max(c), assignment) {
            return true;
        }
    }
    assignment[v - 1] = 0;
    false
}

fn complete_outside(g: &Graph, z: &VertexSet, colors: usize, assignment: &mut [usize]) -> bool {
    for v in g.vertices().filter(|&v| !z.contains(v)) {
        // V \ Z is independent, so only Z-neighbours constrain v
        let free = (1..=colors).find(|&c| g.neighbors(v).all(|u| assignment[u - 1] != c));
        match free {
            Some(c) => assignment[v - 1] = c,
            None => {
                for u in g.vertices().filter(|&u| !z.contains(u)) {
                    assignment[u - 1] = 0;
                }
                return false;
            }
        }
    }
    true
}

/// FVS / OCT by clique deletion set: a transversal avoids at most two
/// vertices of the clique `V \ Z`, so try every avoided set `A` with
/// `|A| ≤ 2` combined with every `S_Z ⊆ Z`.
pub fn fpt_transversal_by_clique_deletion(
    inst: &ProblemInstance,
    mode: TransversalMode,
) -> Result<Verdict, SolveError> {
    let expected = match mode {
        TransversalMode::Fvs => ProblemKind::FvsByCliqueDeletion,
        TransversalMode::Oct => ProblemKind::OctByCliqueDeletion,
    };
    expect_kind(inst, expected)?;
    let g = &inst.graph;
    let z = inst.witness_or_empty();
    let outside = g.vertex_set().difference(&z).to_vec();
    let zs = z.to_vec();

    let mut avoided_sets: Vec<Vec<Vertex>> = vec![Vec::new()];
    for (i, &a) in outside.iter().enumerate() {
        avoided_sets.push(vec![a]);
        for &b in &outside[i + 1..] {
            avoided_sets.push(vec![a, b]);
        }
    }

    let mut best: Option<VertexSet> = None;
    for avoided in &avoided_sets {
        let base: VertexSet = outside.iter().copied().filter(|v| !avoided.contains(v)).collect();
        for sz in subsets(&zs) {
            let candidate = base.union(&sz);
            if best.as_ref().is_some_and(|b| b.len() <= candidate.len()) {
                continue;
            }
            let (rest, _) = g.remove_vertices(&candidate).expect("subset of V(G)");
            if mode.is_clean(&rest) {
                best = Some(candidate);
            }
        }
    }
    let best = best.expect("deleting all vertices is a transversal");
    let size = best.len() as u64;
    Ok(if size <= inst.target {
        Verdict::yes(Some(Certificate::Set(best)), Some(size))
    } else {
        Verdict::no(Some(size))
    })
}
