//! Isomorphism search by backtracking over degree-compatible assignments.
//!
//! No canonical forms here: the search fixes vertices of the first graph in
//! order of decreasing degree and maps each to an unused vertex of the second
//! graph with the same degree whose adjacency to the already-mapped prefix
//! agrees. That is plenty at the orders this crate targets (n <= 13).

use serde::{Deserialize, Serialize};

use crate::graph::{bits, Graph};

/// `perm[v]` is the image of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoCertificate {
    pub perm: Vec<usize>,
}

impl IsoCertificate {
    /// True iff `perm` is a bijection and `uv in E(g) <=> perm(u)perm(v) in E(h)`.
    pub fn verifies(&self, g: &Graph, h: &Graph) -> bool {
        let n = g.order();
        if h.order() != n || self.perm.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &p in &self.perm {
            if p >= n || std::mem::replace(&mut hit[p], true) {
                return false;
            }
        }
        (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(self.perm[u], self.perm[v])))
    }
}

/// Finds an isomorphism `g -> h`, if any.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<IsoCertificate> {
    let n = g.order();
    if h.order() != n || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    // Place high-degree vertices first, then prefer vertices attached to
    // those already placed so adjacency checks prune early.
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let order = connectivity_order(g, order);

    let mut map = vec![usize::MAX; n];
    let mut used = 0u128;
    if extend(g, h, &order, 0, &mut map, &mut used) {
        Some(IsoCertificate { perm: map })
    } else {
        None
    }
}

fn connectivity_order(g: &Graph, by_degree: Vec<usize>) -> Vec<usize> {
    let mut placed = 0u128;
    let mut out = Vec::with_capacity(by_degree.len());
    while out.len() < by_degree.len() {
        let next = by_degree
            .iter()
            .copied()
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((g.neighbors(v) & placed).count_ones(), std::cmp::Reverse(out.len())))
            .expect("unplaced vertex remains");
        placed |= 1 << next;
        out.push(next);
    }
    out
}

fn extend(g: &Graph, h: &Graph, order: &[usize], depth: usize, map: &mut [usize], used: &mut u128) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let free = h.vertex_mask() & !*used;
    for w in bits(free) {
        if h.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        *used |= 1 << w;
        if extend(g, h, order, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << w);
        map[v] = usize::MAX;
    }
    false
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// A permutation mapping `g` onto its complement, if one exists.
pub fn is_self_complementary(g: &Graph) -> Option<IsoCertificate> {
    let n = g.order();
    // Cheap rejection: the edge count must be exactly half of C(n, 2).
    if 4 * g.size() != n * n.saturating_sub(1) {
        return None;
    }
    find_isomorphism(g, &g.complement())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn bull() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).unwrap()
    }

    #[test]
    fn c5_is_self_complementary() {
        let g = c5();
        assert_eq!(4 * g.size(), 5 * 4);
        let cert = is_self_complementary(&g).expect("C5 is self-complementary");
        assert!(cert.verifies(&g, &g.complement()));
    }

    #[test]
    fn bull_is_self_complementary() {
        let g = bull();
        let cert = is_self_complementary(&g).unwrap();
        assert!(cert.verifies(&g, &g.complement()));
    }

    #[test]
    fn triangle_is_not() {
        let k3 = Graph::empty(3).unwrap().complement();
        assert!(is_self_complementary(&k3).is_none());
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(is_self_complementary(&p4).is_some());
    }

    #[test]
    fn relabeled_graphs_are_isomorphic() {
        let g = bull();
        let perm = vec![3, 0, 4, 1, 2];
        let h = g.permuted(&perm).unwrap();
        let cert = find_isomorphism(&g, &h).unwrap();
        assert!(cert.verifies(&g, &h));
        assert!(!are_isomorphic(&g, &c5()));
    }

    #[test]
    fn same_degrees_different_graphs() {
        // C6 versus two disjoint triangles.
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let tt = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&c6, &tt));
    }

    #[test]
    fn certificate_checker_rejects_non_bijection() {
        let g = c5();
        let bad = IsoCertificate { perm: vec![0, 0, 1, 2, 3] };
        assert!(!bad.verifies(&g, &g));
    }
}
