#![allow(dead_code)]

use hamlab_core::iso::are_isomorphic;
use hamlab_core::Graph;

/// Lexicographic successor; false once `p` is the last permutation.
pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// What plain permutation enumeration says about `g`.
pub struct Brute {
    /// `joined[u][v]`: some Hamiltonian path runs from `u` to `v`.
    pub joined: Vec<Vec<bool>>,
    pub has_path: bool,
    pub has_cycle: bool,
}

impl Brute {
    pub fn hamiltonian_connected(&self) -> bool {
        let n = self.joined.len();
        n >= 2 && (0..n).all(|u| (0..n).all(|v| u == v || self.joined[u][v]))
    }
}

pub fn brute(g: &Graph) -> Brute {
    let n = g.order();
    let mut joined = vec![vec![false; n]; n];
    let mut has_path = false;
    let mut has_cycle = false;
    let mut p: Vec<usize> = (0..n).collect();
    if n == 0 {
        return Brute { joined, has_path, has_cycle };
    }
    loop {
        if p.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            has_path = true;
            if n >= 2 {
                joined[p[0]][p[n - 1]] = true;
            }
            if n >= 3 && g.has_edge(p[n - 1], p[0]) {
                has_cycle = true;
            }
        }
        if !next_permutation(&mut p) {
            break;
        }
    }
    Brute { joined, has_path, has_cycle }
}

/// Self-complementary graphs of order `n`, one per class, built from the
/// antimorphism `(0 1 2 3)(4 5 6 7)...` (with a fixed last vertex when
/// `n = 1 mod 4`). Every self-complementary graph has an antimorphism of
/// that cycle type, and under it edge status alternates along each orbit of
/// vertex pairs, so choosing one status per orbit lists them all.
pub fn sc_by_antimorphism(n: usize) -> Vec<Graph> {
    assert!(n.is_multiple_of(4) || n % 4 == 1);
    let sigma = |v: usize| if v >= n - n % 4 { v } else { v - v % 4 + (v % 4 + 1) % 4 };
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut seen = std::collections::HashSet::new();
    let mut orbits: Vec<Vec<(usize, usize)>> = Vec::new();
    for v in 0..n {
        for u in 0..v {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut orbit = vec![(u, v)];
            seen.insert((u, v));
            let (mut a, mut b) = (sigma(u), sigma(v));
            while key(a, b) != (u, v) {
                orbit.push(key(a, b));
                seen.insert(key(a, b));
                (a, b) = (sigma(a), sigma(b));
            }
            assert!(orbit.len() % 2 == 0, "odd orbit under an antimorphism");
            orbits.push(orbit);
        }
    }
    let mut classes: Vec<Graph> = Vec::new();
    for mask in 0u64..1 << orbits.len() {
        let mut g = Graph::empty(n).unwrap();
        for (i, orbit) in orbits.iter().enumerate() {
            let first_is_edge = mask >> i & 1 == 1;
            for (j, &(u, v)) in orbit.iter().enumerate() {
                if (j % 2 == 0) == first_is_edge {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        if !classes.iter().any(|h| h.degree_sequence() == g.degree_sequence() && are_isomorphic(h, &g)) {
            classes.push(g);
        }
    }
    classes
}
