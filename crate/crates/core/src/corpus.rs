//! Small exhaustive graph corpora.
//!
//! Graphs of order `n` are produced by attaching one new vertex, with every
//! possible neighborhood, to each isomorphism class of order `n - 1`, and
//! deduplicating with a brute-force canonical form. This is nowhere near
//! `geng`, but it finishes in seconds up to order 8, which is all the suites
//! need. Larger corpora come in as graph6 files.

use std::collections::HashSet;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::hamiltonian::is_hamiltonian_connected;
use crate::iso::is_self_complementary;

/// Largest order served by [`all_graphs`].
pub const MAX_EXHAUSTIVE_ORDER: usize = 8;
/// Largest order accepted by [`canonical_code`].
pub const MAX_CANONICAL_ORDER: usize = 16;

/// A labeling-independent code: equal codes iff isomorphic (same order).
pub type CanonicalCode = (usize, u128);

/// Ordered partition of the vertex set; every cell is nonempty.
type Partition = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Partition) -> Partition {
    // Split cells by neighbor counts into each cell until nothing changes.
    // New cells are ordered by the count, so the result is equivariant.
    let mut changed = true;
    while changed {
        changed = false;
        let mut w = 0;
        while w < cells.len() {
            let target: u128 = cells[w].iter().fold(0, |acc, &v| acc | 1 << v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    cell.iter().map(|&v| ((g.neighbors(v) & target).count_ones(), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        let mut part: Vec<usize> = keyed[start..i].iter().map(|&(_, v)| v).collect();
                        part.sort_unstable();
                        next.push(part);
                        start = i;
                    }
                }
            }
            if next.len() != cells.len() {
                changed = true;
            }
            cells = next;
            w += 1;
        }
    }
    cells
}

fn leaf_code(g: &Graph, cells: &Partition) -> u128 {
    let n = g.order();
    let mut label = vec![0usize; n];
    for (i, cell) in cells.iter().enumerate() {
        label[cell[0]] = i;
    }
    let mut code = 0u128;
    for (u, v) in g.edges() {
        let (a, b) = (label[u].min(label[v]), label[u].max(label[v]));
        code |= 1 << (b * (b - 1) / 2 + a);
    }
    code
}

fn search(g: &Graph, cells: Partition, best: &mut Option<u128>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let code = leaf_code(g, &cells);
        if best.is_none_or(|b| code < b) {
            *best = Some(code);
        }
        return;
    };
    let cell = &cells[target];
    // Twins (same neighborhood apart from each other) in one cell are
    // swapped by an automorphism fixing the current partition; branching on
    // one of them suffices.
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        let twin = tried.iter().any(|&u| {
            let mask = !(1u128 << u | 1u128 << v);
            g.neighbors(u) & mask == g.neighbors(v) & mask
        });
        if twin {
            continue;
        }
        tried.push(v);
        let mut split = cells.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
        split[target] = vec![v];
        split.insert(target + 1, rest);
        search(g, refine(g, split), best);
    }
}

/// Canonical code by individualization and refinement.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_CANONICAL_ORDER });
    }
    if n == 0 {
        return Ok((0, 0));
    }
    let mut best = None;
    search(g, refine(g, vec![(0..n).collect()]), &mut best);
    Ok((n, best.expect("search reaches a leaf")))
}

/// Rebuilds the representative graph from a code.
pub fn from_code(code: CanonicalCode) -> Graph {
    let (n, bitsets) = code;
    let mut g = Graph::empty(n).expect("canonical orders are small");
    for b in 1..n {
        for a in 0..b {
            if bitsets >> (b * (b - 1) / 2 + a) & 1 == 1 {
                g.add_edge(a, b).expect("in range");
            }
        }
    }
    g
}

/// Graphs obtained by adding vertex `n` to `base` with every neighborhood
/// accepted by `keep`.
fn extensions<'a>(base: &'a Graph, keep: impl Fn(&Graph) -> bool + 'a) -> impl Iterator<Item = Graph> + 'a {
    let n = base.order();
    (0u128..1 << n).filter_map(move |nbrs| {
        let mut g = Graph::empty(n + 1).expect("small");
        for (u, v) in base.edges() {
            g.add_edge(u, v).expect("in range");
        }
        for u in bits(nbrs) {
            g.add_edge(u, n).expect("in range");
        }
        keep(&g).then_some(g)
    })
}

/// Deduplicated, sorted by canonical code.
fn dedup(graphs: impl ParallelIterator<Item = Graph>) -> Vec<Graph> {
    let codes: HashSet<CanonicalCode> =
        graphs.map(|g| canonical_code(&g).expect("small order")).collect::<Vec<_>>().into_iter().collect();
    let mut codes: Vec<_> = codes.into_iter().collect();
    codes.sort_unstable();
    codes.into_iter().map(from_code).collect()
}

static LEVELS: [OnceLock<Vec<Graph>>; MAX_EXHAUSTIVE_ORDER + 1] = [const { OnceLock::new() }; MAX_EXHAUSTIVE_ORDER + 1];

/// One representative per isomorphism class of graphs of order `n`
/// (`n <= 8`), in canonical-code order. Cached for the process lifetime.
pub fn all_graphs(n: usize) -> Result<&'static [Graph]> {
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_EXHAUSTIVE_ORDER });
    }
    if let Some(level) = LEVELS[n].get() {
        return Ok(level);
    }
    let level = if n == 0 {
        vec![Graph::empty(0)?]
    } else {
        let prev = all_graphs(n - 1)?;
        dedup(prev.par_iter().flat_map_iter(|b| extensions(b, |_| true)))
    };
    Ok(LEVELS[n].get_or_init(|| level))
}

pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?.iter().filter(|g| g.is_connected()).cloned().collect())
}

/// Self-complementary graphs of order `n <= 9`, one per isomorphism class.
///
/// Filters the one-vertex extensions of every class of order `n - 1`
/// (a stream covering every graph of order `n`), with cheap edge-count and
/// complementary-degree screens before the isomorphism search.
pub fn self_complementary_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_EXHAUSTIVE_ORDER + 1 {
        return Err(Error::OrderTooLarge { order: n, max: MAX_EXHAUSTIVE_ORDER + 1 });
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)?]);
    }
    if !(n * (n - 1)).is_multiple_of(4) {
        return Ok(Vec::new());
    }
    let target_edges = n * (n - 1) / 4;
    let screen = move |g: &Graph| {
        if g.size() != target_edges {
            return false;
        }
        let ds = g.degree_sequence();
        ds == ds.complement() && is_self_complementary(g).is_some()
    };
    let prev = all_graphs(n - 1)?;
    Ok(dedup(prev.par_iter().flat_map_iter(move |b| extensions(b, screen))))
}

/// Hamiltonian-connected classes of order `n`.
pub fn hamiltonian_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    let all = all_graphs(n)?;
    Ok(all
        .par_iter()
        .filter(|g| is_hamiltonian_connected(g).map(|c| c.is_connected()).unwrap_or(false))
        .cloned()
        .collect())
}

/// `count` random Hamiltonian-connected graphs of order `n`, from a seeded
/// stream of dense random graphs. Deterministic for a given seed.
pub fn random_hamiltonian_connected(n: usize, count: usize, seed: u64) -> Result<Vec<Graph>> {
    if n < 3 {
        return Err(Error::invalid("random Hamiltonian-connected graphs need n >= 3"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        if attempts > 1000 * count.max(1) {
            return Err(Error::invalid("random search for Hamiltonian-connected graphs gave up"));
        }
        let p = rng.gen_range(0.45..0.9);
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            for u in 0..v {
                if rng.gen_bool(p) {
                    g.add_edge(u, v)?;
                }
            }
        }
        if !g.is_complete() && is_hamiltonian_connected(&g)?.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}
