use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Smith decomposition `U·A·V = S` of an integer matrix.
///
/// `u_inv` is carried along so that cokernel computations can lift group
/// coordinates back to the ambient lattice without a second inversion.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal of `S`, length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols())).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// Nontrivial invariant factors (entries of the diagonal other than 0 and 1).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|d| !d.is_zero() && *d != BigInt::from(1)).collect()
    }
}

/// Pivot: smallest absolute value, ties broken by leftmost column then topmost row.
fn find_pivot(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for j in t..s.cols() {
        for i in t..s.rows() {
            let x = &s[(i, j)];
            if x.is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if x.abs() < s[(bi, bj)].abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

/// Deterministic Smith normal form. Diagonal entries are non-negative and
/// satisfy `d₁ | d₂ | …`, with zeros last.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (r, c) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(r);
    let mut u_inv = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);

    let swap_rows = |s: &mut IntMatrix, u: &mut IntMatrix, u_inv: &mut IntMatrix, a: usize, b: usize| {
        s.swap_rows(a, b);
        u.swap_rows(a, b);
        u_inv.swap_cols(a, b);
    };
    // row[dst] += q row[src]
    let add_row = |s: &mut IntMatrix, u: &mut IntMatrix, u_inv: &mut IntMatrix, dst: usize, src: usize, q: &BigInt| {
        s.add_row_multiple(dst, src, q);
        u.add_row_multiple(dst, src, q);
        u_inv.add_col_multiple(src, dst, &-q);
    };

    let mut t = 0;
    while t < r.min(c) {
        let Some((pi, pj)) = find_pivot(&s, t) else { break };
        swap_rows(&mut s, &mut u, &mut u_inv, t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..r {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = s[(i, t)].div_floor(&s[(t, t)]);
                add_row(&mut s, &mut u, &mut u_inv, i, t, &-q);
                if !s[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..c {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = s[(t, j)].div_floor(&s[(t, t)]);
                let nq = -q;
                s.add_col_multiple(j, t, &nq);
                v.add_col_multiple(j, t, &nq);
                if !s[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // A smaller remainder appeared in row/column t: re-pivot on it.
                let (pi, pj) = find_pivot(&s, t).expect("nonzero entry exists");
                swap_rows(&mut s, &mut u, &mut u_inv, t, pi);
                s.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            // Row and column t are clear; enforce divisibility of the remainder.
            let p = s[(t, t)].clone();
            let offender =
                (t + 1..c).flat_map(|j| (t + 1..r).map(move |i| (i, j))).find(|&(i, j)| !s[(i, j)].is_multiple_of(&p));
            match offender {
                Some((i, _)) => {
                    add_row(&mut s, &mut u, &mut u_inv, t, i, &BigInt::from(1));
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        t += 1;
    }
    SmithForm { u, u_inv, s, v }
}
