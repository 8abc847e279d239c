//! Exact reference solvers used as ground truth for every construction.
//!
//! All solvers work on 64-bit adjacency masks, so graphs are limited to 64
//! vertices. Search orders are fixed, which makes every witness deterministic.

use crate::error::SolveError;
use crate::graph::{shortest_cycle, CycleMode, Graph, VertexSet};
use crate::instance::{Certificate, ProblemInstance, ProblemKind, Verdict, Weights};

pub const MASK_LIMIT: usize = 64;

fn masks(g: &Graph, solver: &'static str) -> Result<Vec<u64>, SolveError> {
    if g.n() > MASK_LIMIT {
        return Err(SolveError::SizeLimit {
            solver,
            n: g.n(),
            limit: MASK_LIMIT,
        });
    }
    Ok(g.vertices()
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << (u - 1)))
        .collect())
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

// ---------------------------------------------------------------- clique

/// Greedy sequential colouring of `cand`; returns vertices sorted by colour
/// together with their colour numbers (1-based).
fn color_order(adj: &[u64], cand: u64) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(cand.count_ones() as usize);
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut available = uncolored;
        while available != 0 {
            let v = available.trailing_zeros() as usize;
            available &= !(1 << v) & !adj[v];
            uncolored &= !(1 << v);
            out.push((v, color));
        }
    }
    out
}

fn clique_expand(adj: &[u64], cand: u64, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    let order = color_order(adj, cand);
    let mut cand = cand;
    for &(v, color) in order.iter().rev() {
        if current.len() + color <= best.len() {
            return;
        }
        current.push(v);
        let next = cand & adj[v];
        if next == 0 {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            clique_expand(adj, next, current, best);
        }
        current.pop();
        cand &= !(1 << v);
    }
}

fn has_clique(adj: &[u64], cand: u64, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < need {
        return false;
    }
    let order = color_order(adj, cand);
    let mut cand = cand;
    for &(v, color) in order.iter().rev() {
        if color < need {
            return false;
        }
        if has_clique(adj, cand & adj[v], need - 1) {
            return true;
        }
        cand &= !(1 << v);
    }
    false
}

/// Maximum clique size and the lexicographically least maximum clique.
pub fn max_clique(g: &Graph) -> Result<(usize, VertexSet), SolveError> {
    let adj = masks(g, "max_clique")?;
    let mut best = Vec::new();
    clique_expand(&adj, full_mask(g.n()), &mut Vec::new(), &mut best);
    let size = best.len();

    // rebuild the lexicographically least clique of that size element by element
    let mut chosen = Vec::with_capacity(size);
    let mut pool = full_mask(g.n());
    while chosen.len() < size {
        let need = size - chosen.len() - 1;
        let v = bits(pool)
            .find(|&v| {
                let later = pool & adj[v] & !((1u64 << v) | ((1u64 << v) - 1));
                has_clique(&adj, later, need)
            })
            .expect("a clique of the optimum size exists");
        chosen.push(v);
        pool &= adj[v] & !((1u64 << v) | ((1u64 << v) - 1));
    }
    Ok((size, chosen.into_iter().map(|v| v + 1).collect()))
}

// ---------------------------------------------------------- vertex cover

fn greedy_matching(adj: &[u64], alive: u64) -> usize {
    let mut free = alive;
    let mut size = 0;
    for u in bits(alive) {
        if free & (1 << u) == 0 {
            continue;
        }
        if let Some(v) = bits(adj[u] & free).next() {
            free &= !(1 << u) & !(1 << v);
            size += 1;
        }
    }
    size
}

fn vc_branch(adj: &[u64], alive: u64, taken: u64, best: &mut (usize, u64)) {
    let cost = taken.count_ones() as usize;
    if cost + greedy_matching(adj, alive) >= best.0 {
        return;
    }
    // uncovered edge at a maximum-degree endpoint
    let pick = bits(alive)
        .map(|v| (v, (adj[v] & alive).count_ones()))
        .filter(|&(_, d)| d > 0)
        .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)));
    let Some((u, _)) = pick else {
        *best = (cost, taken);
        return;
    };
    let v = (adj[u] & alive).trailing_zeros() as usize;
    vc_branch(adj, alive & !(1 << u), taken | 1 << u, best);
    vc_branch(adj, alive & !(1 << v), taken | 1 << v, best);
}

/// Minimum vertex cover by branching on uncovered edges.
pub fn min_vertex_cover(g: &Graph) -> Result<(usize, VertexSet), SolveError> {
    let adj = masks(g, "min_vertex_cover")?;
    let all = full_mask(g.n());
    let mut best = (g.n() + 1, all);
    vc_branch(&adj, all, 0, &mut best);
    Ok((best.0, VertexSet::from_mask(best.1)))
}

// ------------------------------------------------------------- colouring

struct Coloring<'a> {
    adj: &'a [u64],
    n: usize,
    colors: Vec<usize>,
    limit: usize,
}

impl Coloring<'_> {
    fn used_around(&self, v: usize) -> u128 {
        bits(self.adj[v]).fold(0u128, |m, u| match self.colors[u] {
            0 => m,
            c => m | 1 << c,
        })
    }

    fn solve(&mut self, colored: usize, max_used: usize) -> bool {
        if colored == self.n {
            return true;
        }
        // saturation first, then uncoloured degree, then smallest id
        let mut pick = None;
        let mut key = (0u32, 0u32);
        for v in 0..self.n {
            if self.colors[v] != 0 {
                continue;
            }
            let sat = self.used_around(v).count_ones();
            let deg = bits(self.adj[v]).filter(|&u| self.colors[u] == 0).count() as u32;
            if pick.is_none() || (sat, deg) > key {
                pick = Some(v);
                key = (sat, deg);
            }
        }
        let v = pick.expect("an uncoloured vertex remains");
        let forbidden = self.used_around(v);
        for c in 1..=self.limit.min(max_used + 1) {
            if forbidden & (1 << c) != 0 {
                continue;
            }
            self.colors[v] = c;
            if self.solve(colored + 1, max_used.max(c)) {
                return true;
            }
        }
        self.colors[v] = 0;
        false
    }
}

fn k_coloring(adj: &[u64], k: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut search = Coloring {
        adj,
        n,
        colors: vec![0; n],
        limit: k,
    };
    search.solve(0, 0).then_some(search.colors)
}

/// Proper colouring with at most `k` colours, if one exists.
pub fn find_coloring(g: &Graph, k: usize) -> Result<Option<Vec<usize>>, SolveError> {
    let adj = masks(g, "find_coloring")?;
    Ok(k_coloring(&adj, k))
}

/// Chromatic number by iterative deepening from a clique lower bound.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Vec<usize>), SolveError> {
    let adj = masks(g, "chromatic_number")?;
    if g.n() == 0 {
        return Ok((0, Vec::new()));
    }
    let mut k = max_clique(g)?.0.max(1);
    loop {
        if let Some(colors) = k_coloring(&adj, k) {
            return Ok((k, colors));
        }
        k += 1;
    }
}

// ----------------------------------------------------------- transversal

/// Which cycles a transversal must hit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransversalMode {
    /// Feedback vertex set.
    Fvs,
    /// Odd cycle transversal.
    Oct,
}

impl TransversalMode {
    pub fn cycle_mode(self) -> CycleMode {
        match self {
            TransversalMode::Fvs => CycleMode::All,
            TransversalMode::Oct => CycleMode::Odd,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            TransversalMode::Fvs => "fvs",
            TransversalMode::Oct => "oct",
        }
    }

    /// Whether `g` has no violating cycle.
    pub fn is_clean(self, g: &Graph) -> bool {
        match self {
            TransversalMode::Fvs => g.is_forest(),
            TransversalMode::Oct => g.is_bipartite(),
        }
    }
}

struct TransversalSearch {
    adj: Vec<Vec<usize>>,
    weight: Vec<u64>,
    mode: CycleMode,
    best: u64,
    best_set: Option<u64>,
}

impl TransversalSearch {
    fn cycle(&self, alive: u64) -> Option<Vec<usize>> {
        let flags: Vec<bool> = (0..self.adj.len()).map(|v| alive & (1 << v) != 0).collect();
        shortest_cycle(&self.adj, &flags, self.mode)
    }

    /// Weight lower bound from greedily packed vertex-disjoint violating cycles.
    fn packing_bound(&self, alive: u64, keep: u64) -> Option<u64> {
        let mut rest = alive;
        let mut bound = 0;
        while let Some(c) = self.cycle(rest) {
            let cheapest = c
                .iter()
                .filter(|&&v| keep & (1 << v) == 0)
                .map(|&v| self.weight[v])
                .min()?;
            bound += cheapest;
            for v in c {
                rest &= !(1 << v);
            }
        }
        Some(bound)
    }

    fn branch(&mut self, alive: u64, keep: u64, deleted: u64, cost: u64) {
        let Some(cycle) = self.cycle(alive) else {
            if cost < self.best {
                self.best = cost;
                self.best_set = Some(deleted);
            }
            return;
        };
        match self.packing_bound(alive, keep) {
            Some(lb) if cost + lb < self.best => {}
            _ => return,
        }
        let mut options: Vec<usize> = cycle.into_iter().filter(|&v| keep & (1 << v) == 0).collect();
        options.sort_by_key(|&v| (self.weight[v], v));
        // branch i deletes options[i] and keeps options[..i]
        let mut keep = keep;
        for v in options {
            let next = cost + self.weight[v];
            if next < self.best {
                self.branch(alive & !(1 << v), keep, deleted | 1 << v, next);
            }
            keep |= 1 << v;
        }
    }
}

/// Minimum-weight transversal whose weight is strictly below `bound`, if any.
pub fn min_transversal_below(
    g: &Graph,
    mode: TransversalMode,
    weights: Option<&Weights>,
    bound: u64,
) -> Result<Option<(u64, VertexSet)>, SolveError> {
    masks(g, "min_transversal")?;
    let mut search = TransversalSearch {
        adj: g.vertices().map(|v| g.neighbors(v).map(|u| u - 1).collect()).collect(),
        weight: g.vertices().map(|v| weights.map_or(1, |w| w.get(v))).collect(),
        mode: mode.cycle_mode(),
        best: bound,
        best_set: None,
    };
    search.branch(full_mask(g.n()), 0, 0, 0);
    Ok(search.best_set.map(|m| (search.best, VertexSet::from_mask(m))))
}

/// Minimum-weight feedback vertex set or odd cycle transversal
/// (unit weights when `weights` is `None`).
pub fn min_transversal(
    g: &Graph,
    mode: TransversalMode,
    weights: Option<&Weights>,
) -> Result<(u64, VertexSet), SolveError> {
    let total: u64 = g.vertices().map(|v| weights.map_or(1, |w| w.get(v))).sum();
    Ok(min_transversal_below(g, mode, weights, total + 1)?.expect("deleting every vertex is a transversal"))
}

// --------------------------------------------------------------- decide

/// Decides an instance against its defining question using the exact solvers.
pub fn decide(inst: &ProblemInstance) -> Result<Verdict, SolveError> {
    inst.validate_witness()?;
    let g = &inst.graph;
    let target = inst.target;
    let verdict = match inst.kind {
        ProblemKind::Clique | ProblemKind::CliqueByVc => {
            let (size, clique) = max_clique(g)?;
            at_least(size as u64, target, Certificate::Set(clique))
        }
        ProblemKind::IsByCliqueDeletion => {
            let (size, set) = max_clique(&g.complement())?;
            at_least(size as u64, target, Certificate::Set(set))
        }
        ProblemKind::VertexCover | ProblemKind::VcByCliqueDeletion => {
            let (size, cover) = min_vertex_cover(g)?;
            at_most(size as u64, target, Certificate::Set(cover))
        }
        ProblemKind::TriangleSplit3Coloring | ProblemKind::ChromaticByVc => {
            let (chi, colors) = chromatic_number(g)?;
            at_most(chi as u64, target, Certificate::Coloring(colors))
        }
        ProblemKind::FvsByCliqueDeletion | ProblemKind::WeightedFvsByVc => {
            transversal_verdict(g, TransversalMode::Fvs, inst.weights.as_ref(), target)?
        }
        ProblemKind::OctByCliqueDeletion | ProblemKind::WeightedOctByVc => {
            transversal_verdict(g, TransversalMode::Oct, inst.weights.as_ref(), target)?
        }
    };
    Ok(verdict)
}

fn at_least(value: u64, target: u64, cert: Certificate) -> Verdict {
    if value >= target {
        Verdict::yes(Some(cert), Some(value))
    } else {
        Verdict::no(Some(value))
    }
}

fn at_most(value: u64, target: u64, cert: Certificate) -> Verdict {
    if value <= target {
        Verdict::yes(Some(cert), Some(value))
    } else {
        Verdict::no(Some(value))
    }
}

fn transversal_verdict(
    g: &Graph,
    mode: TransversalMode,
    weights: Option<&Weights>,
    target: u64,
) -> Result<Verdict, SolveError> {
    Ok(match min_transversal_below(g, mode, weights, target + 1)? {
        Some((w, set)) => Verdict::yes(Some(Certificate::Set(set)), Some(w)),
        None => Verdict::no(None),
    })
}

/// Whether a YES verdict's certificate actually certifies the instance.
pub fn certificate_holds(inst: &ProblemInstance, verdict: &Verdict) -> bool {
    let g = &inst.graph;
    let Some(cert) = &verdict.witness else {
        return true;
    };
    match (inst.kind, cert) {
        (ProblemKind::Clique | ProblemKind::CliqueByVc, Certificate::Set(s)) => {
            g.is_clique(s) && s.len() as u64 >= inst.target
        }
        (ProblemKind::IsByCliqueDeletion, Certificate::Set(s)) => {
            g.is_independent(s) && s.len() as u64 >= inst.target
        }
        (ProblemKind::VertexCover | ProblemKind::VcByCliqueDeletion, Certificate::Set(s)) => {
            g.is_vertex_cover(s) && s.len() as u64 <= inst.target
        }
        (ProblemKind::TriangleSplit3Coloring | ProblemKind::ChromaticByVc, Certificate::Coloring(c)) => {
            c.len() == g.n()
                && c.iter().all(|&x| x >= 1 && x as u64 <= inst.target)
                && g.edges().iter().all(|&(u, v)| c[u - 1] != c[v - 1])
        }
        (
            kind @ (ProblemKind::FvsByCliqueDeletion
            | ProblemKind::OctByCliqueDeletion
            | ProblemKind::WeightedFvsByVc
            | ProblemKind::WeightedOctByVc),
            Certificate::Set(s),
        ) => {
            let mode = match kind {
                ProblemKind::FvsByCliqueDeletion | ProblemKind::WeightedFvsByVc => TransversalMode::Fvs,
                _ => TransversalMode::Oct,
            };
            let weight = inst.weights.as_ref().map_or(s.len() as u64, |w| w.total(s));
            let rest = g.remove_vertices(s).map(|(h, _)| h);
            weight <= inst.target && rest.is_ok_and(|h| mode.is_clean(&h))
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_examples() {
        assert_eq!(max_clique(&Graph::complete(4)).unwrap().0, 4);
        assert_eq!(max_clique(&Graph::cycle(5)).unwrap().0, 2);
        assert_eq!(max_clique(&Graph::petersen()).unwrap().0, 2);
        assert_eq!(max_clique(&Graph::empty(0)).unwrap(), (0, VertexSet::new()));
        // two triangles; the lexicographically least one is returned
        let g = Graph::from_edges(6, &[(4, 5), (5, 6), (4, 6), (1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(max_clique(&g).unwrap().1, VertexSet::from([1, 2, 3]));
        let g = Graph::from_edges(5, &[(2, 3), (3, 4), (2, 4), (1, 5)]).unwrap();
        assert_eq!(max_clique(&g).unwrap().1, VertexSet::from([2, 3, 4]));
    }

    #[test]
    fn vertex_cover_examples() {
        assert_eq!(min_vertex_cover(&Graph::complete(2)).unwrap().0, 1);
        assert_eq!(min_vertex_cover(&Graph::empty(5)).unwrap(), (0, VertexSet::new()));
        assert_eq!(min_vertex_cover(&Graph::cycle(5)).unwrap().0, 3);
        assert_eq!(min_vertex_cover(&Graph::petersen()).unwrap().0, 6);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Graph::complete(4)).unwrap().0, 4);
        assert_eq!(chromatic_number(&Graph::cycle(5)).unwrap().0, 3);
        assert_eq!(chromatic_number(&Graph::empty(7)).unwrap().0, 1);
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap().0, 0);
        assert_eq!(chromatic_number(&Graph::petersen()).unwrap().0, 3);
    }

    #[test]
    fn transversal_examples() {
        use TransversalMode::*;
        assert_eq!(min_transversal(&Graph::cycle(3), Fvs, None).unwrap().0, 1);
        assert_eq!(min_transversal(&Graph::cycle(4), Oct, None).unwrap().0, 0);
        assert_eq!(min_transversal(&Graph::complete(4), Fvs, None).unwrap().0, 2);
        assert_eq!(min_transversal(&Graph::complete(4), Oct, None).unwrap().0, 2);
        let w = Weights::new(vec![5, 1, 1]);
        assert_eq!(
            min_transversal(&Graph::cycle(3), Fvs, Some(&w)).unwrap(),
            (1, VertexSet::from([2]))
        );
    }

    #[test]
    fn size_limit() {
        let big = Graph::empty(65);
        assert!(matches!(max_clique(&big), Err(SolveError::SizeLimit { n: 65, .. })));
    }

    #[test]
    fn decide_examples() {
        let k3 = ProblemInstance::new(ProblemKind::Clique, Graph::complete(3), 3);
        assert!(decide(&k3).unwrap().is_yes());
        let c5 = ProblemInstance::new(ProblemKind::CliqueByVc, Graph::cycle(5), 2).with_witness(VertexSet::from([1, 2, 4]));
        // C5 has edges, so a clique of size 2 exists
        assert!(decide(&c5).unwrap().is_yes());
        let c5_three = ProblemInstance { target: 3, ..c5 };
        assert!(!decide(&c5_three).unwrap().is_yes());
        let k4_bad = ProblemInstance::new(ProblemKind::WeightedFvsByVc, Graph::complete(4), 1)
            .with_witness(VertexSet::from([1]))
            .with_weights(Weights::unit(4));
        assert!(matches!(decide(&k4_bad), Err(SolveError::Witness(_))));
    }
}
