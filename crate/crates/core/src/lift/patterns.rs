//! The interleaving patterns, written against positions of a base path.
//!
//! `p` is a Hamiltonian path of the base graph; position `k` (1-based) plays
//! `x_k`/`y_k`. Every function assumes its documented
//! preconditions and returns a raw vertex sequence of `mu(G)`; callers verify.

use crate::constructions::MycielskiLabeling;

/// Odd positions map to `x`, even to `y`.
const ODD_X: bool = true;
/// Odd positions map to `y`, even to `x`.
const ODD_Y: bool = false;

struct Builder<'a> {
    p: &'a [usize],
    lab: &'a MycielskiLabeling,
    out: Vec<usize>,
}

impl<'a> Builder<'a> {
    fn new(p: &'a [usize], lab: &'a MycielskiLabeling) -> Self {
        Builder { p, lab, out: Vec::with_capacity(2 * p.len() + 1) }
    }

    fn x(&mut self, k: usize) -> &mut Self {
        self.out.push(self.lab.x(self.p[k - 1]));
        self
    }

    fn y(&mut self, k: usize) -> &mut Self {
        self.out.push(self.lab.y(self.p[k - 1]));
        self
    }

    fn z(&mut self) -> &mut Self {
        self.out.push(self.lab.z());
        self
    }

    fn alt(&mut self, ks: impl IntoIterator<Item = usize>, odd_is_x: bool) -> &mut Self {
        for k in ks {
            if (k % 2 == 1) == odd_is_x {
                self.x(k);
            } else {
                self.y(k);
            }
        }
        self
    }

    fn done(&mut self) -> Vec<usize> {
        std::mem::take(&mut self.out)
    }
}

/// Case 1, `x_1 .. x_n`: `x_1 y_2 x_3 .. y_n z y_1 x_2 .. x_n`.
pub(super) fn case1(p: &[usize], lab: &MycielskiLabeling) -> Vec<usize> {
    let n = p.len();
    Builder::new(p, lab).alt(1..=n, ODD_X).z().alt(1..=n, ODD_Y).done()
}

/// Case 2, `x_1 .. y_n`.
pub(super) fn case2(p: &[usize], lab: &MycielskiLabeling) -> Vec<usize> {
    let n = p.len();
    Builder::new(p, lab).alt(1..n, ODD_X).x(n).alt((1..n).rev(), ODD_Y).z().y(n).done()
}

/// Case 3, `x_1 .. z`. Needs `x_1 x_n` and `x_q x_n` edges, `q` even, `q < n`.
pub(super) fn case3(p: &[usize], lab: &MycielskiLabeling, q: usize) -> Vec<usize> {
    let n = p.len();
    Builder::new(p, lab).alt(1..=n, ODD_X).x(q).alt((1..q).rev(), ODD_Y).alt((q + 1..=n).rev(), ODD_Y).z().done()
}

/// Case 4, `x_1 .. y_1`. Same edge needs as case 3 with `r` for `q`.
pub(super) fn case4(p: &[usize], lab: &MycielskiLabeling, r: usize) -> Vec<usize> {
    let n = p.len();
    Builder::new(p, lab)
        .x(1)
        .alt(2..=r, ODD_Y)
        .y(n)
        .alt((r + 1..n).rev(), ODD_X)
        .alt((2..=r).rev(), ODD_X)
        .z()
        .alt(r + 1..=n, ODD_Y)
        .y(1)
        .done()
}

/// Case 5, `y_1 .. z`. Needs `x_1 x_n`.
pub(super) fn case5(p: &[usize], lab: &MycielskiLabeling) -> Vec<usize> {
    let n = p.len();
    Builder::new(p, lab).y(1).alt(2..=n, ODD_Y).x(1).alt(2..=n, ODD_X).z().done()
}

/// Case 6, `y_1 .. y_2`. Needs `x_1 x_n`; `x_1 x_2` is a path edge.
pub(super) fn case6(p: &[usize], lab: &MycielskiLabeling) -> Vec<usize> {
    let n = p.len();
    Builder::new(p, lab).y(1).x(2).alt(3..=n, ODD_X).x(1).x(n).alt((3..n).rev(), ODD_Y).z().y(2).done()
}

/// Case 6.1, `y_1 .. y_q`, `q` even, `q < n`. Needs `x_1 x_n`.
///
/// The plain interleaving skips `y_n` and `x_n` between `x_{n-1}` and
/// `y_{n-1}`; this is the completed form.
pub(super) fn case6_1(p: &[usize], lab: &MycielskiLabeling, q: usize) -> Vec<usize> {
    let n = p.len();
    Builder::new(p, lab)
        .alt(1..=q, ODD_Y)
        .alt(q + 1..=n, ODD_X)
        .x(1)
        .alt((q + 1..=n).rev(), ODD_Y)
        .z()
        .alt(2..=q, ODD_X)
        .done()
}

/// Case 6.2, `y_1 .. y_q`, `q` odd, `3 <= q < n`. Needs `x_1 x_n`.
///
/// The plain interleaving never visits `x_n`; this reroutes the second
/// half through `x_1 x_n` and keeps the `y_{q-2} x_{q-1} x_q y_{q+1}` start.
pub(super) fn case6_2(p: &[usize], lab: &MycielskiLabeling, q: usize) -> Vec<usize> {
    let n = p.len();
    Builder::new(p, lab)
        .alt(1..q, ODD_Y)
        .alt(q..=n, ODD_X)
        .z()
        .alt((2..q).rev(), ODD_X)
        .x(1)
        .alt((q + 1..=n).rev(), ODD_Y)
        .y(q)
        .done()
}

/// Formula path of `mu(P_n)` on the identity path `0..n`.
pub(super) fn prop7(n: usize, lab: &MycielskiLabeling) -> Vec<usize> {
    let p: Vec<usize> = (0..n).collect();
    let mut b = Builder::new(&p, lab);
    if n.is_multiple_of(2) {
        b.alt(1..=n, ODD_X).z().alt(1..=n, ODD_Y);
    } else {
        b.alt(1..=n, ODD_X).x(n - 1).y(n).z().alt(1..=n - 2, ODD_Y);
    }
    b.done()
}
