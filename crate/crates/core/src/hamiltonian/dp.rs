//! Subset dynamic programming over Hamiltonian paths.
//!
//! For an anchor `a`, `ends[S]` is the set of vertices `w` such that some
//! path starting at `a` visits exactly the vertex set `S` and stops at `w`.
//! Tables are filled in increasing numeric order of `S`, so every subset is
//! final before its supersets are extended from it. Cost is `O(2^n * n)`
//! word operations per anchor and `4 * 2^n` bytes of memory.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the exact solver accepts (a table is 64 MiB at this size).
pub const MAX_DP_ORDER: usize = 24;

pub(crate) struct EndTable {
    adj: Vec<u32>,
    ends: Vec<u32>,
    full: u32,
}

pub(crate) fn check_order(g: &Graph) -> Result<()> {
    if g.order() > MAX_DP_ORDER {
        Err(Error::OrderTooLarge { order: g.order(), max: MAX_DP_ORDER })
    } else {
        Ok(())
    }
}

impl EndTable {
    pub(crate) fn build(g: &Graph, anchor: usize) -> EndTable {
        let n = g.order();
        debug_assert!(n <= MAX_DP_ORDER && anchor < n);
        let adj: Vec<u32> = g.adjacency().iter().map(|&r| r as u32).collect();
        let mut ends = vec![0u32; 1 << n];
        let a = 1u32 << anchor;
        ends[a as usize] = a;
        for mask in 0..(1u32 << n) {
            if mask & a == 0 {
                continue;
            }
            let mut e = ends[mask as usize];
            while e != 0 {
                let v = e.trailing_zeros() as usize;
                e &= e - 1;
                let mut ext = adj[v] & !mask;
                while ext != 0 {
                    let w = ext.trailing_zeros();
                    ext &= ext - 1;
                    ends[(mask | 1 << w) as usize] |= 1 << w;
                }
            }
        }
        let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        EndTable { adj, ends, full }
    }

    /// Vertices at which a Hamiltonian path from the anchor can stop.
    pub(crate) fn hamiltonian_ends(&self) -> u32 {
        self.ends[self.full as usize]
    }

    /// Walks a Hamiltonian path from `start` to the anchor, always stepping
    /// to the lowest-numbered vertex that still admits a completion.
    pub(crate) fn walk_to_anchor(&self, start: usize) -> Option<Vec<usize>> {
        if self.hamiltonian_ends() >> start & 1 == 0 {
            return None;
        }
        let mut seq = Vec::with_capacity(self.full.count_ones() as usize);
        let mut rem = self.full;
        let mut cur = start;
        loop {
            seq.push(cur);
            rem &= !(1 << cur);
            if rem == 0 {
                return Some(seq);
            }
            let cand = self.adj[cur] & self.ends[rem as usize];
            debug_assert!(cand != 0, "table promised a completion");
            cur = cand.trailing_zeros() as usize;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_on_path_graph() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let t = EndTable::build(&p4, 0);
        assert_eq!(t.hamiltonian_ends(), 1 << 3);
        assert_eq!(t.walk_to_anchor(3), Some(vec![3, 2, 1, 0]));
        assert_eq!(t.walk_to_anchor(2), None);
        let mid = EndTable::build(&p4, 1);
        assert_eq!(mid.hamiltonian_ends(), 0);
    }

    #[test]
    fn lowest_next_vertex_tie_break() {
        let k4 = Graph::empty(4).unwrap().complement();
        let t = EndTable::build(&k4, 3);
        assert_eq!(t.walk_to_anchor(0), Some(vec![0, 1, 2, 3]));
        assert_eq!(t.walk_to_anchor(2), Some(vec![2, 0, 1, 3]));
    }
}
