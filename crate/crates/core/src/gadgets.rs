//! Reusable gadget constructions: edge inflation, the K4-in-a-box bit
//! selector, and the reduction from 3-colouring to triangle split graphs.

use crate::graph::{Graph, GraphBuilder, Vertex, VertexSet};
use crate::instance::{ProblemInstance, ProblemKind, TriangleSplit};

/// The seven vertices created for one input edge `{u, v}` (u < v).
///
/// `mid1`-`mid2` subdivides `u`-`v`; `ta1`-`ta2` subdivides `u`-`tri`;
/// `tb1`-`tb2` subdivides `v`-`tri`, where `tri` completes the triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ScaffoldUnit {
    pub mid1: Vertex,
    pub mid2: Vertex,
    pub tri: Vertex,
    pub ta1: Vertex,
    pub ta2: Vertex,
    pub tb1: Vertex,
    pub tb2: Vertex,
}

impl ScaffoldUnit {
    /// Number of vertices per unit.
    pub const SIZE: usize = 7;

    /// Vertices in label order: mid1, mid2, tri, ta1, ta2, tb1, tb2.
    pub fn labeled(&self) -> [Vertex; 7] {
        [self.mid1, self.mid2, self.tri, self.ta1, self.ta2, self.tb1, self.tb2]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InflationResult {
    pub graph: Graph,
    /// Input vertex `v` maps to `original[v - 1]`; inflation keeps ids `1..=n`.
    pub original: Vec<Vertex>,
    /// One unit per input edge, edges indexed in lexicographic order.
    pub scaffold: Vec<ScaffoldUnit>,
}

impl InflationResult {
    pub fn scaffold_vertices(&self) -> VertexSet {
        self.scaffold.iter().flat_map(|u| u.labeled()).collect()
    }
}

/// Completes every edge into a triangle with a new vertex, then replaces
/// every edge of the result by a path through two new vertices.
///
/// Output layout: the input vertices `1..=n`, then per input edge `j` the
/// unit `mid1, mid2, tri, ta1, ta2, tb1, tb2`.
pub fn inflate(g: &Graph) -> InflationResult {
    let n = g.n();
    let mut b = GraphBuilder::new(n);
    let mut scaffold = Vec::with_capacity(g.edge_count());
    for (u, v) in g.edges() {
        let ids: Vec<Vertex> = b.add_vertices(ScaffoldUnit::SIZE).collect();
        let unit = ScaffoldUnit {
            mid1: ids[0],
            mid2: ids[1],
            tri: ids[2],
            ta1: ids[3],
            ta2: ids[4],
            tb1: ids[5],
            tb2: ids[6],
        };
        // u - mid1 - mid2 - v
        b.add_edge(u, unit.mid1);
        b.add_edge(unit.mid1, unit.mid2);
        b.add_edge(unit.mid2, v);
        // u - ta1 - ta2 - tri
        b.add_edge(u, unit.ta1);
        b.add_edge(unit.ta1, unit.ta2);
        b.add_edge(unit.ta2, unit.tri);
        // v - tb1 - tb2 - tri
        b.add_edge(v, unit.tb1);
        b.add_edge(unit.tb1, unit.tb2);
        b.add_edge(unit.tb2, unit.tri);
        scaffold.push(unit);
    }
    InflationResult {
        graph: b.build(),
        original: (1..=n).collect(),
        scaffold,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K4BoxResult {
    pub graph: Graph,
    /// `{a, c}`.
    pub zero_terminals: [Vertex; 2],
    /// `{b, d}`.
    pub one_terminals: [Vertex; 2],
}

impl K4BoxResult {
    pub fn terminals(&self, bit: bool) -> [Vertex; 2] {
        if bit {
            self.one_terminals
        } else {
            self.zero_terminals
        }
    }
}

/// K4 on `a=1, b=2, c=3, d=4` plus a degree-2 vertex on each of the pairs
/// ab (5), bc (6), cd (7), da (8).
pub fn k4_in_a_box() -> K4BoxResult {
    let mut b = GraphBuilder::new(8);
    for u in 1..=4 {
        for v in u + 1..=4 {
            b.add_edge(u, v);
        }
    }
    for (ear, (x, y)) in [(5, (1, 2)), (6, (2, 3)), (7, (3, 4)), (8, (4, 1))] {
        b.add_edge(ear, x);
        b.add_edge(ear, y);
    }
    K4BoxResult {
        graph: b.build(),
        zero_terminals: [1, 3],
        one_terminals: [2, 4],
    }
}

/// Replaces each edge `e_i = {u_i, v_i}` (lexicographic order, `u_i < v_i`)
/// by a triangle `a_i b_i c_i` with `u_i ~ a_i` and `v_i ~ b_i, c_i`. The
/// original edges are dropped. `X` is the original vertex set.
pub fn triangle_split_reduction(g: &Graph) -> ProblemInstance {
    let n = g.n();
    let mut b = GraphBuilder::new(n);
    let mut triangles = Vec::with_capacity(g.edge_count());
    for (u, v) in g.edges() {
        let a = b.add_vertex();
        let bb = b.add_vertex();
        let c = b.add_vertex();
        b.add_edge(a, bb);
        b.add_edge(bb, c);
        b.add_edge(a, c);
        b.add_edge(u, a);
        b.add_edge(v, bb);
        b.add_edge(v, c);
        triangles.push([a, bb, c]);
    }
    let split = TriangleSplit {
        x: (1..=n).collect(),
        triangles,
    };
    ProblemInstance::new(ProblemKind::TriangleSplit3Coloring, b.build(), 3).with_split(split)
}
