//! Simple undirected graphs on dense vertex ids `0..n`, stored as one
//! neighbor bitmask per vertex.
//!
//! Everything in this crate works at desk scale (tens of vertices), so a
//! `u128` row per vertex is enough and keeps neighborhood algebra to a few
//! machine instructions.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order a [`Graph`] can hold.
pub const MAX_ORDER: usize = 128;

/// A set of vertices as a bitmask; bit `i` is vertex `i`.
pub type VertexMask = u128;

/// Iterates over the set bits of `mask` in increasing order.
pub fn bits(mut mask: VertexMask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Mask with the low `n` bits set.
pub fn full_mask(n: usize) -> VertexMask {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexMask>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbor masks, checking symmetry,
    /// irreflexivity and range.
    pub fn from_adjacency(adj: Vec<VertexMask>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
        }
        let range = full_mask(n);
        for (i, &row) in adj.iter().enumerate() {
            if row & !range != 0 {
                let vertex = (row & !range).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, order: n });
            }
            if row >> i & 1 == 1 {
                return Err(Error::SelfLoop(i));
            }
            for j in bits(row) {
                if adj[j] >> i & 1 == 0 {
                    return Err(Error::invalid(format!(
                        "adjacency is not symmetric: {i}->{j} present, {j}->{i} missing"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    /// Panics if either id is out of range.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbor mask of `v`.
    pub fn neighbors(&self, v: usize) -> VertexMask {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[VertexMask] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn vertex_mask(&self) -> VertexMask {
        full_mask(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let all = self.vertex_mask();
        (0..self.n).all(|v| self.adj[v] == all & !(1 << v))
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// The `k`-th power: `uv` is an edge iff `1 <= d(u, v) <= k`.
    /// Pairs in different components are never joined.
    pub fn power(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::invalid("graph power exponent must be at least 1"));
        }
        let adj = (0..self.n)
            .map(|v| {
                let mut reached = 1u128 << v;
                let mut frontier = reached;
                for _ in 0..k {
                    let next = bits(frontier).fold(0, |acc, w| acc | self.adj[w]) & !reached;
                    if next == 0 {
                        break;
                    }
                    reached |= next;
                    frontier = next;
                }
                reached & !(1 << v)
            })
            .collect();
        Ok(Graph { n: self.n, adj })
    }

    /// Vertices reachable from `start` inside `allowed` (which must contain it).
    pub fn reachable_within(&self, start: usize, allowed: VertexMask) -> VertexMask {
        let mut seen = 1u128 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |acc, w| acc | self.adj[w]) & allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    fn components_within(&self, allowed: VertexMask) -> usize {
        let mut rest = allowed;
        let mut count = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= !self.reachable_within(v, allowed);
            count += 1;
        }
        count
    }

    pub fn component_count(&self) -> usize {
        self.components_within(self.vertex_mask())
    }

    /// Connected means exactly one component; the null graph is not connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.reachable_within(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Deletes `v` and its incident edges; vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let low = full_mask(v);
        let squeeze = |row: VertexMask| (row & low) | ((row >> 1) & !low);
        let adj = (0..self.n).filter(|&u| u != v).map(|u| squeeze(self.adj[u] & !(1 << v))).collect();
        Ok(Graph { n: self.n - 1, adj })
    }

    /// Copy of the graph with edge `uv` deleted; both endpoints stay.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.remove_edge(u, v)?;
        Ok(g)
    }

    /// Induced subgraph on `keep`, relabeled in increasing vertex order.
    pub fn induced(&self, keep: VertexMask) -> Graph {
        let keep = keep & self.vertex_mask();
        let ids: Vec<usize> = bits(keep).collect();
        let adj = ids
            .iter()
            .map(|&u| {
                ids.iter().enumerate().filter(|&(_, &w)| self.has_edge(u, w)).fold(0u128, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Graph { n: ids.len(), adj }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::invalid("permutation length differs from graph order"));
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d = self.degrees();
        d.sort_unstable();
        DegreeSequence(d)
    }

    pub fn distances(&self) -> DistanceMatrix {
        let dist = (0..self.n)
            .map(|s| {
                let mut row = vec![None; self.n];
                row[s] = Some(0);
                let mut queue = VecDeque::from([s]);
                while let Some(u) = queue.pop_front() {
                    let du = row[u].unwrap_or(0);
                    for w in bits(self.adj[u]) {
                        if row[w].is_none() {
                            row[w] = Some(du + 1);
                            queue.push_back(w);
                        }
                    }
                }
                row
            })
            .collect();
        DistanceMatrix { dist }
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u] == Some(true);
                for w in bits(self.adj[u]) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Cut vertices are found by deleting each vertex in turn and counting
    /// components; `n` is small everywhere this is used.
    pub fn connectivity(&self) -> ConnectivityProfile {
        let all = self.vertex_mask();
        let base = self.components_within(all);
        let cut_vertices: Vec<usize> =
            (0..self.n).filter(|&v| self.components_within(all & !(1 << v)) > base).collect();
        let connected = self.is_connected();
        ConnectivityProfile {
            connected,
            two_connected: connected && self.n >= 3 && cut_vertices.is_empty(),
            cut_vertices,
            bipartite: self.is_bipartite(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph").field("n", &self.n).field("edges", &edges).finish()
    }
}

/// Degrees sorted nondecreasingly. Accessors are 1-based, `d(1) <= ... <= d(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Accepts any list that could be a degree sequence of a simple graph of
    /// its length (sorted, bounded, even sum); graphicality is not checked.
    pub fn new(mut degrees: Vec<usize>) -> Result<Self> {
        let n = degrees.len();
        degrees.sort_unstable();
        if let Some(&top) = degrees.last() {
            if top >= n {
                return Err(Error::invalid(format!("degree {top} impossible with {n} vertices")));
            }
        }
        if degrees.iter().sum::<usize>() % 2 == 1 {
            return Err(Error::invalid("degree sum is odd"));
        }
        Ok(DegreeSequence(degrees))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `d_k` for `1 <= k <= n`.
    pub fn d(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// The degree sequence of the complement: `(n-1-d_n, ..., n-1-d_1)`.
    pub fn complement(&self) -> DegreeSequence {
        let n = self.0.len();
        DegreeSequence(self.0.iter().rev().map(|&d| n - 1 - d).collect())
    }
}

/// All-pairs hop distances; `None` marks an unreachable pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    dist: Vec<Vec<Option<usize>>>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.dist[u][v]
    }

    pub fn rows(&self) -> &[Vec<Option<usize>>] {
        &self.dist
    }

    /// Largest distance, or `None` (infinite) when some pair is unreachable.
    pub fn diameter(&self) -> Option<usize> {
        self.dist.iter().flatten().try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityProfile {
    pub connected: bool,
    pub cut_vertices: Vec<usize>,
    /// Connected, order at least 3 and no cut vertex.
    pub two_connected: bool,
    /// Equivalently, no odd cycle.
    pub bipartite: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::empty(n).unwrap().complement()
    }

    /// The self-complementary "bull": triangle 1-2-3 with pendants 0-1 and 3-4.
    fn bull() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = Graph::empty(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { vertex: 3, order: 3 }));
        assert!(Graph::empty(MAX_ORDER + 1).is_err());
        assert!(Graph::from_adjacency(vec![0b10, 0]).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(5).complement(), Graph::empty(5).unwrap());
        assert_eq!(complete(5).complement().size(), 0);
        let c5 = cycle(5);
        assert_eq!(c5.complement().complement(), c5);
        assert_eq!(c5.complement().degree_sequence().as_slice(), &[2, 2, 2, 2, 2]);
    }

    #[test]
    fn power_of_path() {
        let sq = path(4).power(2).unwrap();
        let edges: Vec<_> = sq.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(complete(4).power(2).unwrap(), complete(4));
        assert!(path(4).power(3).unwrap().is_complete());
        assert!(path(3).power(0).is_err());
    }

    #[test]
    fn power_never_joins_components() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.power(3).unwrap(), g);
    }

    #[test]
    fn distances_and_diameter() {
        assert_eq!(complete(4).distances().diameter(), Some(1));
        assert_eq!(cycle(5).distances().diameter(), Some(2));
        assert_eq!(bull().distances().diameter(), Some(3));
        assert_eq!(Graph::empty(2).unwrap().distances().diameter(), None);
        assert_eq!(path(4).distances().get(0, 3), Some(3));
    }

    #[test]
    fn connectivity_profiles() {
        let c5 = cycle(5).connectivity();
        assert!(c5.connected && c5.two_connected && !c5.bipartite);
        assert!(c5.cut_vertices.is_empty());

        let p4 = path(4).connectivity();
        assert_eq!(p4.cut_vertices, vec![1, 2]);
        assert!(p4.bipartite && !p4.two_connected);

        let b = bull().connectivity();
        assert_eq!(b.cut_vertices, vec![1, 3]);
        assert!(b.connected && !b.two_connected);

        let k2 = complete(2).connectivity();
        assert!(k2.connected && !k2.two_connected && k2.cut_vertices.is_empty());
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(complete(4).degree_sequence().as_slice(), &[3, 3, 3, 3]);
        assert_eq!(bull().degree_sequence().as_slice(), &[1, 1, 2, 3, 3]);
        assert_eq!(cycle(5).degree_sequence().as_slice(), &[2, 2, 2, 2, 2]);
        assert!(DegreeSequence::new(vec![1, 1, 1]).is_err());
        assert!(DegreeSequence::new(vec![3, 1]).is_err());
    }

    #[test]
    fn vertex_and_edge_deletion() {
        let g = cycle(5).remove_vertex(2).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (2, 3)]);
        let h = cycle(5).without_edge(4, 0).unwrap();
        assert_eq!(h, path(5));
        assert_eq!(cycle(6).induced(0b000111), path(3));
    }
}
