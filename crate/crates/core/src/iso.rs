//! Exact isomorphism for small graphs: colour refinement narrows the
//! candidates, then a backtracking search extends a partial map.

use crate::graph::Graph;

/// Exact isomorphism test, intended for graphs with at most 64 vertices.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.n();
    if n == 0 {
        return true;
    }
    let (cg, ch) = joint_refinement(g, h);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return false;
    }

    // map g-vertices in order of rarest colour first, ties by degree then id
    let mut class_size = std::collections::HashMap::new();
    for &c in &cg {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[&cg[v]], std::cmp::Reverse(g.degree(v + 1)), v));

    let mut state = Search {
        g,
        h,
        cg: &cg,
        ch: &ch,
        order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    state.extend(0)
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: &'a [usize],
    ch: &'a [usize],
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.map.len() {
            if self.used[w] || self.cg[v] != self.ch[w] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| {
                self.g.has_edge(u + 1, v + 1) == self.h.has_edge(self.map[u] + 1, w + 1)
            });
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        false
    }
}

/// 1-dimensional Weisfeiler-Leman on both graphs with a shared colour
/// dictionary, so equal colours mean equal refined signatures.
fn joint_refinement(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut cg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut ch: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    loop {
        let mut dict = std::collections::BTreeMap::new();
        let sig = |graph: &Graph, col: &[usize], v: usize| {
            let mut ns: Vec<usize> = graph.neighbors(v + 1).map(|u| col[u - 1]).collect();
            ns.sort_unstable();
            (col[v], ns)
        };
        let sg: Vec<_> = (0..g.n()).map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = (0..h.n()).map(|v| sig(h, &ch, v)).collect();
        for s in sg.iter().chain(sh.iter()) {
            let next = dict.len();
            dict.entry(s.clone()).or_insert(next);
        }
        let ng: Vec<usize> = sg.iter().map(|s| dict[s]).collect();
        let nh: Vec<usize> = sh.iter().map(|s| dict[s]).collect();
        let before = distinct(&cg, &ch);
        let after = distinct(&ng, &nh);
        cg = ng;
        ch = nh;
        if after == before {
            return (cg, ch);
        }
    }
}

fn distinct(a: &[usize], b: &[usize]) -> usize {
    a.iter().chain(b).collect::<std::collections::BTreeSet<_>>().len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<_> = g.edges().into_iter().map(|(u, v)| (perm[u - 1], perm[v - 1])).collect();
        Graph::from_edges(g.n(), &edges).unwrap()
    }

    #[test]
    fn cycles_and_paths() {
        let c9 = Graph::cycle(9);
        let shuffled = relabel(&c9, &[4, 9, 1, 7, 2, 8, 3, 6, 5]);
        assert!(are_isomorphic(&c9, &shuffled));
        assert!(!are_isomorphic(&c9, &Graph::path(9)));
    }

    #[test]
    fn k4_minus_edge() {
        let k4 = Graph::complete(4);
        let minus = Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        assert!(!are_isomorphic(&k4, &minus));
    }

    #[test]
    fn regular_graphs_need_backtracking() {
        // C6 and two disjoint triangles are both 2-regular on 6 vertices
        let c6 = Graph::cycle(6);
        let two_triangles = Graph::from_edges(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert!(!are_isomorphic(&c6, &two_triangles));
        let p = Graph::petersen();
        assert!(are_isomorphic(&p, &relabel(&p, &[10, 3, 5, 1, 2, 9, 8, 7, 6, 4])));
    }
}
