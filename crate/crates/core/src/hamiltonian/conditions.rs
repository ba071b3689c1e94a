use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Graph};

/// Chvátal's condition: for every `k < n/2`, `d_k >= k+1` or `d_{n-k} >= n-k`.
/// Sufficient for a Hamiltonian cycle. Defined for `n > 3`.
pub fn chvatal_hamiltonian_condition(ds: &DegreeSequence) -> Result<bool> {
    let n = ds.len();
    if n <= 3 {
        return Err(Error::invalid(format!("Chvátal's condition needs n > 3, got {n}")));
    }
    Ok((1..).take_while(|&k| 2 * k < n).all(|k| ds.d(k) > k || ds.d(n - k) >= n - k))
}

/// The path analogue: for every `k < (n+1)/2`, `d_k >= k` or
/// `d_{n+1-k} >= n-k`. Sufficient for a Hamiltonian path. Defined for `n >= 2`.
pub fn path_condition(ds: &DegreeSequence) -> Result<bool> {
    let n = ds.len();
    if n < 2 {
        return Err(Error::invalid(format!("the path condition needs n >= 2, got {n}")));
    }
    Ok((1..).take_while(|&k| 2 * k < n + 1).all(|k| ds.d(k) >= k || ds.d(n + 1 - k) >= n - k))
}

/// Ore-type condition for Hamiltonian-connectedness: every non-adjacent
/// pair has degree sum at least `n+1`. Vacuous on complete graphs.
pub fn ore_hc_condition(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n < 3 {
        return Err(Error::invalid(format!("Ore's condition needs n >= 3, got {n}")));
    }
    let missing = g.complement();
    let holds = missing.edges().all(|(u, v)| g.degree(u) + g.degree(v) > n);
    Ok(holds)
}

/// Bondy–Chvátal closure: repeatedly join non-adjacent pairs whose degree
/// sum is at least `n` until none remain.
pub fn closure(g: &Graph) -> Graph {
    let n = g.order();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    closure_with_order(g, &pairs)
}

/// Closure computed by sweeping `pairs` in the given order until a fixed
/// point. The result does not depend on the order; this entry point exists
/// so that can be tested. Pairs not listed are never joined.
pub fn closure_with_order(g: &Graph, pairs: &[(usize, usize)]) -> Graph {
    let n = g.order();
    let mut h = g.clone();
    loop {
        let mut changed = false;
        for &(u, v) in pairs {
            if u != v && u < n && v < n && !h.has_edge(u, v) && h.degree(u) + h.degree(v) >= n {
                h.add_edge(u, v).expect("ids checked");
                changed = true;
            }
        }
        if !changed {
            return h;
        }
    }
}
