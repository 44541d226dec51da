use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// A sublattice of ℤⁿ held as an integer row-echelon basis (Hermite form after
/// [`Lattice::reduce_upper`]). Rows are kept sorted by pivot column and every
/// pivot is positive.
#[derive(Clone, Debug)]
pub struct Lattice {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn leading(v: &[BigInt]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

fn axpy(y: &mut [BigInt], a: &BigInt, x: &[BigInt]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += a * xi;
        }
    }
}

impl Lattice {
    pub fn new(dim: usize) -> Self {
        Lattice { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_generators<I: IntoIterator<Item = Vec<BigInt>>>(dim: usize, gens: I) -> Self {
        let mut l = Lattice::new(dim);
        for g in gens {
            l.insert(g);
        }
        l.reduce_upper();
        l
    }

    /// Lattice spanned by the columns of `m`.
    pub fn column_span(m: &IntMatrix) -> Self {
        Self::from_generators(m.rows(), m.column_vectors())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis as the columns of a `dim × rank` matrix.
    pub fn basis_columns(&self) -> IntMatrix {
        IntMatrix::from_columns(self.dim, &self.rows)
    }

    pub fn insert(&mut self, mut v: Vec<BigInt>) {
        assert_eq!(v.len(), self.dim, "vector dimension mismatch");
        while let Some(p) = leading(&v) {
            match self.pivots.binary_search(&p) {
                Err(pos) => {
                    if v[p].is_negative() {
                        v.iter_mut().for_each(|x| *x = -std::mem::take(x));
                    }
                    self.rows.insert(pos, v);
                    self.pivots.insert(pos, p);
                    return;
                }
                Ok(k) => {
                    let rp = self.rows[k][p].clone();
                    let vp = v[p].clone();
                    if vp.is_multiple_of(&rp) {
                        let q = -(vp / &rp);
                        axpy(&mut v, &q, &self.rows[k]);
                        continue;
                    }
                    let eg = rp.extended_gcd(&vp);
                    let (g, a, b) = (eg.gcd, eg.x, eg.y);
                    let row = std::mem::take(&mut self.rows[k]);
                    let mut new_row: Vec<BigInt> = row.iter().zip(&v).map(|(r, x)| &a * r + &b * x).collect();
                    let cr = &rp / &g;
                    let cv = &vp / &g;
                    let mut rest: Vec<BigInt> = v.iter().zip(&row).map(|(x, r)| &cr * x - &cv * r).collect();
                    if new_row[p].is_negative() {
                        new_row.iter_mut().for_each(|x| *x = -std::mem::take(x));
                    }
                    debug_assert!(rest[p].is_zero());
                    rest[p] = BigInt::zero();
                    self.rows[k] = new_row;
                    v = rest;
                }
            }
        }
    }

    /// Reduces entries above each pivot into `[0, pivot)`.
    pub fn reduce_upper(&mut self) {
        for j in 0..self.rows.len() {
            let p = self.pivots[j];
            let (head, tail) = self.rows.split_at_mut(j);
            let pivot_row = &tail[0];
            let pv = &pivot_row[p];
            for row in head.iter_mut() {
                let q = row[p].div_floor(pv);
                if !q.is_zero() {
                    axpy(row, &-q, pivot_row);
                }
            }
        }
    }

    /// Coefficients `y` with `Σ yₖ·basisₖ = v`, if `v` lies in the lattice.
    pub fn solve(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut r = v.to_vec();
        let mut y = vec![BigInt::zero(); self.rows.len()];
        for (k, (&p, row)) in self.pivots.iter().zip(&self.rows).enumerate() {
            if let Some(l) = leading(&r) {
                if l < p {
                    return None;
                }
            } else {
                break;
            }
            if r[p].is_zero() {
                continue;
            }
            if !r[p].is_multiple_of(&row[p]) {
                return None;
            }
            let q = &r[p] / &row[p];
            axpy(&mut r, &-&q, row);
            y[k] = q;
        }
        if r.iter().all(Zero::is_zero) {
            Some(y)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.solve(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn same_as(&self, other: &Lattice) -> bool {
        self.dim == other.dim && self.contains_lattice(other) && other.contains_lattice(self)
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        let mut l = self.clone();
        for r in &other.rows {
            l.insert(r.clone());
        }
        l.reduce_upper();
        l
    }
}

/// Lattice basis of `ker(A: ℤᶜ → ℤʳ)` as the columns of a `c × k` matrix,
/// by echelonising `[Aᵀ | I]`.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let (r, c) = (a.rows(), a.cols());
    let mut l = Lattice::new(r + c);
    for j in 0..c {
        let mut v = vec![BigInt::zero(); r + c];
        for i in 0..r {
            v[i] = a[(i, j)].clone();
        }
        v[r + j] = BigInt::from(1);
        l.insert(v);
    }
    l.reduce_upper();
    let kernel: Vec<Vec<BigInt>> =
        l.rows.iter().zip(&l.pivots).filter(|(_, &p)| p >= r).map(|(row, _)| row[r..].to_vec()).collect();
    IntMatrix::from_columns(c, &kernel)
}
