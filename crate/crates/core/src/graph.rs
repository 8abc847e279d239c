//! Simple undirected graphs on vertices `1..=n`.
//!
//! A [`Graph`] is an immutable value. Every construction in this crate builds
//! its output with [`GraphBuilder`] and relabels canonically: surviving
//! vertices keep their relative order and newly created vertices are appended.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::GraphError;

/// 1-based vertex id.
pub type Vertex = usize;

/// Finite simple undirected graph with vertex set `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    // adj[v - 1] holds the sorted neighbours of v
    adj: Vec<BTreeSet<Vertex>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Set of vertex ids, iterated in ascending order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(BTreeSet<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        self.0.remove(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn min(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.0.union(&other.0).copied().collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.0.difference(&other.0).copied().collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.0.intersection(&other.0).copied().collect()
    }

    /// Inverse of a bitmask over 0-based positions.
    pub(crate) fn from_mask(mask: u64) -> Self {
        let mut s = VertexSet::new();
        let mut m = mask;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            s.insert(b + 1);
            m &= m - 1;
        }
        s
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(vs: [Vertex; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Whether a cycle search looks for any cycle or only odd ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CycleMode {
    All,
    Odd,
}

/// Mutable edge accumulator. Duplicate edges collapse; self-loops and
/// out-of-range endpoints are rejected by [`GraphBuilder::try_add_edge`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    adj: Vec<BTreeSet<Vertex>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder { adj: g.adj.clone() }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Appends a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(BTreeSet::new());
        self.adj.len()
    }

    pub fn add_vertices(&mut self, count: usize) -> std::ops::RangeInclusive<Vertex> {
        let first = self.adj.len() + 1;
        for _ in 0..count {
            self.adj.push(BTreeSet::new());
        }
        first..=self.adj.len()
    }

    pub fn try_add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        let n = self.adj.len();
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for x in [u, v] {
            if x == 0 || x > n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        let fresh = self.adj[u - 1].insert(v);
        self.adj[v - 1].insert(u);
        Ok(fresh)
    }

    /// Panics on a self-loop or out-of-range endpoint; constructions only
    /// call this with ids they allocated themselves.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        self.try_add_edge(u, v).expect("construction produced an invalid edge");
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u >= 1 && u <= self.adj.len() && self.adj[u - 1].contains(&v)
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.adj.len(),
            adj: self.adj,
        }
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops and out-of-range endpoints.
    /// Repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.try_add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn empty(n: usize) -> Graph {
        GraphBuilder::new(n).build()
    }

    pub fn complete(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for u in 1..=n {
            for v in u + 1..=n {
                b.add_edge(u, v);
            }
        }
        b.build()
    }

    pub fn path(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for v in 1..n {
            b.add_edge(v, v + 1);
        }
        b.build()
    }

    pub fn cycle(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for v in 1..n {
            b.add_edge(v, v + 1);
        }
        if n >= 3 {
            b.add_edge(n, 1);
        }
        b.build()
    }

    /// Star with centre 1 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        let mut b = GraphBuilder::new(leaves + 1);
        for v in 2..=leaves + 1 {
            b.add_edge(1, v);
        }
        b.build()
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i + 1, (i + 1) % 5 + 1));
            edges.push((i + 1, i + 6));
            edges.push((i + 6, (i + 2) % 5 + 6));
        }
        Graph::from_edges(10, &edges).expect("petersen edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        v >= 1 && v <= self.n
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.contains_vertex(u) && self.adj[u - 1].contains(&v)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v - 1].iter().copied()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].len()
    }

    /// Edges as `(min, max)` pairs in ascending lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Open neighbourhood of a set: neighbours of members that are not members.
    pub fn set_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in s.iter() {
            for u in self.neighbors(v) {
                if !s.contains(u) {
                    out.insert(u);
                }
            }
        }
        out
    }

    pub fn check_subset(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.iter().find(|&v| !self.contains_vertex(v)) {
            Some(v) => Err(GraphError::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    pub fn complement(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n);
        for u in self.vertices() {
            for v in u + 1..=self.n {
                if !self.has_edge(u, v) {
                    b.add_edge(u, v);
                }
            }
        }
        b.build()
    }

    /// Subgraph induced by `s`, with members relabelled `1..=|s|` in ascending
    /// order. The returned map sends old ids to new ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, BTreeMap<Vertex, Vertex>), GraphError> {
        self.check_subset(s)?;
        let map: BTreeMap<Vertex, Vertex> = s.iter().enumerate().map(|(i, v)| (v, i + 1)).collect();
        let mut b = GraphBuilder::new(s.len());
        for (&old, &new) in &map {
            for u in self.neighbors(old) {
                if let Some(&nu) = map.get(&u) {
                    if new < nu {
                        b.add_edge(new, nu);
                    }
                }
            }
        }
        Ok((b.build(), map))
    }

    /// `g - s`: induced subgraph on the complement of `s`.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<(Graph, BTreeMap<Vertex, Vertex>), GraphError> {
        self.check_subset(s)?;
        self.induced_subgraph(&self.vertex_set().difference(s))
    }

    /// Identifies `s` into one new vertex adjacent to `N(s)`. Survivors keep
    /// their relative order; the merged vertex receives the highest id.
    pub fn identify(&self, s: &VertexSet) -> Result<(Graph, BTreeMap<Vertex, Vertex>), GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptyIdentification);
        }
        self.identify_classes(std::slice::from_ref(s))
    }

    /// Identifies each of several pairwise disjoint, nonempty classes into its
    /// own new vertex. Equivalent to identifying the classes one after another.
    /// Untouched vertices are relabelled first (ascending); merged vertices
    /// follow in class order.
    pub fn identify_classes(&self, classes: &[VertexSet]) -> Result<(Graph, BTreeMap<Vertex, Vertex>), GraphError> {
        let mut owner: BTreeMap<Vertex, usize> = BTreeMap::new();
        for (ci, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(GraphError::EmptyIdentification);
            }
            self.check_subset(class)?;
            for v in class.iter() {
                if owner.insert(v, ci).is_some() {
                    return Err(GraphError::OverlappingClasses(v));
                }
            }
        }
        let mut map = BTreeMap::new();
        let mut next = 1;
        for v in self.vertices() {
            if !owner.contains_key(&v) {
                map.insert(v, next);
                next += 1;
            }
        }
        let merged_base = next;
        for (&v, &ci) in &owner {
            map.insert(v, merged_base + ci);
        }
        let mut b = GraphBuilder::new(merged_base - 1 + classes.len());
        for (u, v) in self.edges() {
            let (nu, nv) = (map[&u], map[&v]);
            if nu != nv {
                b.add_edge(nu, nv);
            }
        }
        Ok((b.build(), map))
    }

    /// Disjoint union in input order. `offsets[i]` is added to a vertex of
    /// `gs[i]` to obtain its id in the union.
    pub fn disjoint_union(gs: &[&Graph]) -> (Graph, Vec<usize>) {
        let total: usize = gs.iter().map(|g| g.n).sum();
        let mut b = GraphBuilder::new(total);
        let mut offsets = Vec::with_capacity(gs.len());
        let mut off = 0;
        for g in gs {
            offsets.push(off);
            for (u, v) in g.edges() {
                b.add_edge(u + off, v + off);
            }
            off += g.n;
        }
        (b.build(), offsets)
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let vs = s.to_vec();
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        let vs = s.to_vec();
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_vertex_cover(&self, s: &VertexSet) -> bool {
        self.edges().into_iter().all(|(u, v)| s.contains(u) || s.contains(v))
    }

    /// Acyclicity by traversal: every component has exactly `size - 1` edges.
    pub fn is_forest(&self) -> bool {
        let mut seen = vec![false; self.n + 1];
        for root in self.vertices() {
            if seen[root] {
                continue;
            }
            let (mut vertices, mut degree_sum) = (0usize, 0usize);
            let mut queue = VecDeque::from([root]);
            seen[root] = true;
            while let Some(v) = queue.pop_front() {
                vertices += 1;
                degree_sum += self.degree(v);
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            if degree_sum / 2 != vertices - 1 {
                return false;
            }
        }
        true
    }

    /// Two-colourability by BFS.
    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// A proper 2-colouring (values 0/1, indexed by `v - 1`) if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for root in self.vertices() {
            if side[root - 1] != u8::MAX {
                continue;
            }
            side[root - 1] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if side[u - 1] == u8::MAX {
                        side[u - 1] = 1 - side[v - 1];
                        queue.push_back(u);
                    } else if side[u - 1] == side[v - 1] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Shortest cycle (or shortest odd cycle), as a vertex sequence starting at
    /// its minimum vertex. Among shortest cycles the lexicographically smallest
    /// sequence is returned.
    pub fn find_violating_cycle(&self, mode: CycleMode) -> Option<Vec<Vertex>> {
        let adj: Vec<Vec<usize>> = self
            .adj
            .iter()
            .map(|ns| ns.iter().map(|&v| v - 1).collect())
            .collect();
        let alive: Vec<bool> = vec![true; self.n];
        shortest_cycle(&adj, &alive, mode).map(|c| c.into_iter().map(|v| v + 1).collect())
    }

    /// Exact isomorphism test by colour refinement followed by backtracking.
    pub fn is_isomorphic_to(&self, other: &Graph) -> bool {
        crate::iso::are_isomorphic(self, other)
    }
}

/// Shortest (odd) cycle over the alive vertices of a 0-based adjacency list.
/// Ties are broken by the lexicographically smallest sequence that starts at
/// the cycle's minimum vertex.
pub(crate) fn shortest_cycle(adj: &[Vec<usize>], alive: &[bool], mode: CycleMode) -> Option<Vec<usize>> {
    let n = adj.len();
    let length = match mode {
        CycleMode::All => girth(adj, alive)?,
        CycleMode::Odd => odd_girth(adj, alive)?,
    };
    let mut dist = vec![usize::MAX; n];
    let mut on_path = vec![false; n];
    for s in 0..n {
        if !alive[s] {
            continue;
        }
        // distances to s inside the alive vertices >= s
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if u > s && alive[u] && dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        let mut path = vec![s];
        on_path[s] = true;
        let found = extend_cycle(adj, alive, s, length, &dist, &mut path, &mut on_path);
        on_path[s] = false;
        if found {
            return Some(path);
        }
    }
    None
}

fn extend_cycle(
    adj: &[Vec<usize>],
    alive: &[bool],
    s: usize,
    length: usize,
    dist: &[usize],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> bool {
    let last = *path.last().unwrap();
    if path.len() == length {
        return adj[last].contains(&s);
    }
    for &u in &adj[last] {
        if u <= s || !alive[u] || on_path[u] {
            continue;
        }
        // after placing u at position path.len(), we still need to get back to s
        if dist[u] == usize::MAX || dist[u] > length - path.len() {
            continue;
        }
        path.push(u);
        on_path[u] = true;
        if extend_cycle(adj, alive, s, length, dist, path, on_path) {
            return true;
        }
        on_path[u] = false;
        path.pop();
    }
    false
}

fn girth(adj: &[Vec<usize>], alive: &[bool]) -> Option<usize> {
    let n = adj.len();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        if !alive[s] {
            continue;
        }
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if 2 * dist[v] + 1 >= best {
                break;
            }
            for &u in &adj[v] {
                if !alive[u] {
                    continue;
                }
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if parent[v] != u {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

fn odd_girth(adj: &[Vec<usize>], alive: &[bool]) -> Option<usize> {
    // shortest odd closed walk through s = distance from (s,0) to (s,1) in the
    // bipartite double cover; the global minimum is a simple odd cycle
    let n = adj.len();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; 2 * n];
    for s in 0..n {
        if !alive[s] {
            continue;
        }
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[2 * s] = 0;
        let mut queue = VecDeque::from([2 * s]);
        while let Some(state) = queue.pop_front() {
            let (v, parity) = (state / 2, state % 2);
            if dist[state] + 1 >= best {
                break;
            }
            for &u in &adj[v] {
                if !alive[u] {
                    continue;
                }
                let next = 2 * u + (1 - parity);
                if dist[next] == usize::MAX {
                    dist[next] = dist[state] + 1;
                    queue.push_back(next);
                }
            }
        }
        if dist[2 * s + 1] != usize::MAX {
            best = best.min(dist[2 * s + 1]);
        }
    }
    (best != usize::MAX).then_some(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set<const N: usize>(vs: [Vertex; N]) -> VertexSet {
        VertexSet::from(vs)
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        assert_eq!(Graph::empty(2).complement(), Graph::complete(2));
        assert_eq!(Graph::path(3).complement(), Graph::from_edges(3, &[(1, 3)]).unwrap());
    }

    #[test]
    fn induced_subgraph_examples() {
        let (h, _) = Graph::complete(4).induced_subgraph(&set([1, 2, 3])).unwrap();
        assert_eq!(h, Graph::complete(3));
        let (h, map) = Graph::petersen().induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!(h.n(), 0);
        assert!(map.is_empty());
        let (h, map) = Graph::cycle(5).induced_subgraph(&set([1, 2, 4])).unwrap();
        assert_eq!(h.edges(), vec![(1, 2)]);
        assert_eq!(map[&4], 3);
        assert!(Graph::cycle(5).induced_subgraph(&set([6])).is_err());
    }

    #[test]
    fn identify_examples() {
        let (h, map) = Graph::complete(3).identify(&set([2, 3])).unwrap();
        assert_eq!(h, Graph::complete(2));
        assert_eq!(map[&2], 2);
        let (h, _) = Graph::empty(3).identify(&set([1, 2, 3])).unwrap();
        assert_eq!(h, Graph::empty(1));
        let (h, map) = Graph::path(3).identify(&set([1, 3])).unwrap();
        assert_eq!(h.edges(), vec![(1, 2)]);
        assert_eq!((map[&2], map[&1], map[&3]), (1, 2, 2));
        assert_eq!(Graph::path(3).identify(&VertexSet::new()), Err(GraphError::EmptyIdentification));
    }

    #[test]
    fn disjoint_union_examples() {
        let k2 = Graph::complete(2);
        let (u, offs) = Graph::disjoint_union(&[&k2, &k2]);
        assert_eq!(u.edges(), vec![(1, 2), (3, 4)]);
        assert_eq!(offs, vec![0, 2]);
        let (u, offs) = Graph::disjoint_union(&[]);
        assert_eq!((u.n(), offs.len()), (0, 0));
        let (u, _) = Graph::disjoint_union(&[&Graph::complete(3), &Graph::empty(1)]);
        assert_eq!((u.n(), u.edge_count()), (4, 3));
    }

    #[test]
    fn clique_and_independence() {
        assert!(Graph::complete(4).is_clique(&set([1, 2, 3])));
        let p = Graph::petersen();
        assert!(p.is_clique(&set([7])) && p.is_independent(&set([7])));
        assert!(Graph::cycle(4).is_independent(&set([1, 3])));
        assert!(!Graph::cycle(4).is_independent(&set([1, 2])));
    }

    #[test]
    fn forest_and_bipartite() {
        let c3 = Graph::cycle(3);
        assert!(!c3.is_forest() && !c3.is_bipartite());
        let c4 = Graph::cycle(4);
        assert!(!c4.is_forest() && c4.is_bipartite());
        let tree = Graph::from_edges(6, &[(1, 2), (1, 3), (3, 4), (3, 5), (5, 6)]).unwrap();
        assert!(tree.is_forest() && tree.is_bipartite());
        assert!(Graph::empty(0).is_forest());
    }

    #[test]
    fn violating_cycle_examples() {
        assert_eq!(Graph::cycle(5).find_violating_cycle(CycleMode::Odd), Some(vec![1, 2, 3, 4, 5]));
        assert_eq!(Graph::cycle(4).find_violating_cycle(CycleMode::Odd), None);
        assert_eq!(Graph::cycle(4).find_violating_cycle(CycleMode::All), Some(vec![1, 2, 3, 4]));
        // K4 has four triangles; the smallest sequence is 1,2,3
        assert_eq!(Graph::complete(4).find_violating_cycle(CycleMode::All), Some(vec![1, 2, 3]));
        // C6 plus chord 1-4 has two 4-cycles; 1,2,3,4 beats 1,4,5,6
        let g = Graph::from_edges(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 4)]).unwrap();
        assert_eq!(g.find_violating_cycle(CycleMode::All), Some(vec![1, 2, 3, 4]));
        assert_eq!(g.find_violating_cycle(CycleMode::Odd), None);
        assert_eq!(Graph::petersen().find_violating_cycle(CycleMode::All).map(|c| c.len()), Some(5));
    }

    #[test]
    fn builder_rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(1, 4)]),
            Err(GraphError::VertexOutOfRange { vertex: 4, n: 3 })
        );
    }
}
