use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::lattice::{kernel_basis, Lattice};
use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// Isomorphism type of a finitely generated abelian group: `ℤ^free ⊕ ⊕ C_dᵢ`
/// with `d₁ | d₂ | …` and every `dᵢ ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    #[serde(with = "crate::report::big_vec")]
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        AbelianInvariants { free_rank: 0, torsion: Vec::new() }
    }

    /// Normal form of `ℤ^free ⊕ ⊕ C_{orders}`; orders of 0 count as free and 1 is dropped.
    pub fn from_cyclic_orders(free_rank: usize, orders: &[BigInt]) -> Self {
        let mut free = free_rank;
        // Merge prime-power parts into invariant factors.
        let mut primary: Vec<(BigInt, Vec<u32>)> = Vec::new();
        for d in orders {
            let d = d.abs();
            if d.is_zero() {
                free += 1;
                continue;
            }
            for (p, e) in factorize(&d) {
                match primary.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, es)) => es.push(e),
                    None => primary.push((p, vec![e])),
                }
            }
        }
        let len = primary.iter().map(|(_, es)| es.len()).max().unwrap_or(0);
        let mut torsion = vec![BigInt::one(); len];
        for (p, mut es) in primary {
            es.sort_unstable_by(|a, b| b.cmp(a));
            for (k, e) in es.into_iter().enumerate() {
                torsion[k] *= num_traits::pow(p.clone(), e as usize);
            }
        }
        torsion.reverse();
        AbelianInvariants { free_rank: free, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    pub fn exponent(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.last().cloned().unwrap_or_else(BigInt::one))
    }

    /// Number of cyclic summands; equals the 𝔽_p-dimension of `A ⊗ 𝔽_p` for p-groups.
    pub fn num_generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Primary decomposition `(p, p^e)` list for display.
    pub fn primary_parts(&self) -> Vec<BigInt> {
        let mut out = Vec::new();
        for d in &self.torsion {
            for (p, e) in factorize(d) {
                out.push(num_traits::pow(p, e as usize));
            }
        }
        out.sort();
        out
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut orders = self.torsion.clone();
        orders.extend(other.torsion.iter().cloned());
        Self::from_cyclic_orders(self.free_rank + other.free_rank, &orders)
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut orders = Vec::new();
        for d in &self.torsion {
            for _ in 0..other.free_rank {
                orders.push(d.clone());
            }
            for e in &other.torsion {
                orders.push(d.gcd(e));
            }
        }
        for e in &other.torsion {
            for _ in 0..self.free_rank {
                orders.push(e.clone());
            }
        }
        Self::from_cyclic_orders(self.free_rank * other.free_rank, &orders)
    }

    pub fn tor(&self, other: &Self) -> Self {
        let orders: Vec<BigInt> =
            self.torsion.iter().flat_map(|d| other.torsion.iter().map(move |e| d.gcd(e))).collect();
        Self::from_cyclic_orders(0, &orders)
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|d| format!("C{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut out = Vec::new();
    let mut n = n.abs();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while n.is_multiple_of(&p) {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

/// A finitely generated abelian group presented as a quotient `ℤʳ / K` of an
/// ambient lattice, together with coordinates in invariant-factor normal form.
///
/// Coordinates are ordered torsion first (`C_{d₁}, …`) then free. `projection`
/// maps ambient vectors to coordinates (torsion entries read modulo `dᵢ`),
/// `lift` sends each coordinate unit vector back to an ambient representative,
/// and `relations` is a basis of `K`, the kernel of the projection.
#[derive(Clone, Debug)]
pub struct FgAbGroup {
    invariants: AbelianInvariants,
    projection: IntMatrix,
    lift: IntMatrix,
    relations: IntMatrix,
}

/// Equality compares isomorphism types only.
impl PartialEq for FgAbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.invariants == other.invariants
    }
}

impl Eq for FgAbGroup {}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.invariants.fmt(f)
    }
}

impl FgAbGroup {
    /// `ℤ^free ⊕ ⊕ C_{orders}` on its own cyclic coordinates.
    pub fn from_cyclic_orders(free_rank: usize, orders: &[BigInt]) -> Self {
        let n = orders.len() + free_rank;
        let diag = IntMatrix::diagonal(n, orders.len(), orders.iter().cloned());
        cokernel(&diag)
    }

    pub fn from_invariants(inv: &AbelianInvariants) -> Self {
        Self::from_cyclic_orders(inv.free_rank, &inv.torsion)
    }

    pub fn trivial() -> Self {
        cokernel(&IntMatrix::zeros(0, 0))
    }

    pub fn invariants(&self) -> &AbelianInvariants {
        &self.invariants
    }

    pub fn free_rank(&self) -> usize {
        self.invariants.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.invariants.torsion
    }

    pub fn order(&self) -> Option<BigInt> {
        self.invariants.order()
    }

    pub fn exponent(&self) -> Option<BigInt> {
        self.invariants.exponent()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_trivial()
    }

    pub fn ambient_dim(&self) -> usize {
        self.projection.cols()
    }

    pub fn num_coords(&self) -> usize {
        self.projection.rows()
    }

    pub fn projection(&self) -> &IntMatrix {
        &self.projection
    }

    pub fn lift(&self) -> &IntMatrix {
        &self.lift
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// Reduces group coordinates into canonical range.
    pub fn normalize_coords(&self, c: &mut [BigInt]) {
        for (x, d) in c.iter_mut().zip(&self.invariants.torsion) {
            *x = x.mod_floor(d);
        }
    }

    /// Canonical coordinates of the class of an ambient vector.
    pub fn project(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut c = self.projection.apply(v);
        self.normalize_coords(&mut c);
        c
    }

    pub fn is_zero_class(&self, v: &[BigInt]) -> bool {
        self.project(v).iter().all(Zero::is_zero)
    }

    /// Additive order of the class of `v` (`None` if infinite).
    pub fn element_order(&self, v: &[BigInt]) -> Option<BigInt> {
        let c = self.project(v);
        let t = self.invariants.torsion.len();
        if c[t..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(c[..t].iter().zip(&self.invariants.torsion).fold(BigInt::one(), |acc, (x, d)| {
            let ord = d / x.gcd(d);
            acc.lcm(&ord)
        }))
    }

    /// Diagonal relation matrix of the coordinate group (`C_dᵢ` coordinates get `dᵢ`, free get 0).
    fn coordinate_relations(&self) -> IntMatrix {
        let n = self.num_coords();
        IntMatrix::diagonal(n, self.invariants.torsion.len(), self.invariants.torsion.iter().cloned())
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self::from_invariants(&self.invariants.tensor(&other.invariants))
    }

    pub fn tor(&self, other: &Self) -> Self {
        Self::from_invariants(&self.invariants.tor(&other.invariants))
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_invariants(&self.invariants.direct_sum(&other.invariants))
    }
}

/// `ℤʳ / colspan(A)` computed by first echelonising the columns of `A`.
pub fn cokernel(a: &IntMatrix) -> FgAbGroup {
    let basis = Lattice::column_span(a).basis_columns();
    cokernel_direct(&basis)
}

/// `ℤʳ / colspan(A)` from the Smith form of `A` itself (reference path).
pub fn cokernel_direct(a: &IntMatrix) -> FgAbGroup {
    let r = a.rows();
    let f = smith_normal_form(a);
    let diag = f.diagonal();
    let mut torsion_idx = Vec::new();
    let mut torsion = Vec::new();
    let mut free_idx = Vec::new();
    for i in 0..r {
        match diag.get(i) {
            Some(d) if d.is_zero() => free_idx.push(i),
            None => free_idx.push(i),
            Some(d) if d.is_one() => {}
            Some(d) => {
                torsion_idx.push(i);
                torsion.push(d.clone());
            }
        }
    }
    let mut idx = torsion_idx;
    let free_rank = free_idx.len();
    idx.extend(free_idx);
    let mut projection = f.u.select_rows(&idx);
    for (k, d) in torsion.iter().enumerate() {
        for j in 0..projection.cols() {
            let x = projection[(k, j)].mod_floor(d);
            projection[(k, j)] = x;
        }
    }
    let lift = f.u_inv.select_columns(&idx);
    let relations = Lattice::column_span(a).basis_columns();
    FgAbGroup { invariants: AbelianInvariants { free_rank, torsion }, projection, lift, relations }
}

/// A subquotient `L / R` of ℤᵐ with `R ⊆ L`, together with ambient generators.
#[derive(Clone, Debug)]
pub struct Subquotient {
    /// Group on the coordinates of a basis of `L`.
    pub group: FgAbGroup,
    /// Ambient (ℤᵐ) representatives of the group's coordinate generators, as columns.
    pub generators: IntMatrix,
    /// Basis of `L` as columns.
    pub numerator: IntMatrix,
}

pub fn subquotient(dim: usize, numerator: &[Vec<BigInt>], denominator: &[Vec<BigInt>]) -> Result<Subquotient> {
    let l = Lattice::from_generators(dim, numerator.iter().cloned());
    let rho = l.rank();
    let mut cols = Vec::with_capacity(denominator.len());
    for r in denominator {
        let y = l.solve(r).ok_or_else(|| Error::NotWellDefined("denominator is not contained in numerator".into()))?;
        cols.push(y);
    }
    let group = cokernel(&IntMatrix::from_columns(rho, &cols));
    let basis = l.basis_columns();
    let generators = &basis * group.lift();
    Ok(Subquotient { group, generators, numerator: basis })
}

/// Kernel, cokernel and isomorphism flag of the homomorphism `src → dst`
/// induced by an ambient integer matrix.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub kernel: FgAbGroup,
    /// Ambient representatives (columns, in `src`'s ambient lattice) of the kernel's coordinate generators.
    pub kernel_generators: IntMatrix,
    pub cokernel: FgAbGroup,
    /// The image, as a subgroup of `dst`.
    pub image: FgAbGroup,
    pub is_iso: bool,
    /// The homomorphism in group coordinates (`dst coords × src coords`).
    pub coordinate_matrix: IntMatrix,
}

impl InducedMap {
    /// `|ker|`, `|coker|` when finite.
    pub fn kernel_order(&self) -> Option<BigInt> {
        self.kernel.order()
    }
}

/// Matrix of the homomorphism induced by `f` in group coordinates, after
/// checking that `f` carries the relations of `src` into those of `dst`.
pub fn coordinate_matrix(f: &IntMatrix, src: &FgAbGroup, dst: &FgAbGroup) -> Result<IntMatrix> {
    if f.rows() != dst.ambient_dim() || f.cols() != src.ambient_dim() {
        return Err(Error::NotWellDefined(format!(
            "map is {}x{}, expected {}x{}",
            f.rows(),
            f.cols(),
            dst.ambient_dim(),
            src.ambient_dim()
        )));
    }
    for j in 0..src.relations().cols() {
        let img = f.apply(&src.relations().column(j));
        if !dst.is_zero_class(&img) {
            return Err(Error::NotWellDefined(format!("relation {j} of the source maps to a nonzero class")));
        }
    }
    let cols: Vec<Vec<BigInt>> = (0..src.num_coords()).map(|c| dst.project(&f.apply(&src.lift().column(c)))).collect();
    Ok(IntMatrix::from_columns(dst.num_coords(), &cols))
}

pub fn induced_map(f: &IntMatrix, src: &FgAbGroup, dst: &FgAbGroup) -> Result<InducedMap> {
    let m = coordinate_matrix(f, src, dst)?;
    let (ns, nd) = (src.num_coords(), dst.num_coords());
    let dst_rel = dst.coordinate_relations();
    let cokernel = cokernel(&m.hconcat(&dst_rel));

    // x ∈ ker  ⟺  M x ∈ colspan(D_dst)
    let k = kernel_basis(&m.hconcat(&dst_rel));
    let numerator: Vec<Vec<BigInt>> = (0..k.cols()).map(|j| k.column(j)[..ns].to_vec()).collect();
    let denominator: Vec<Vec<BigInt>> = src.coordinate_relations().column_vectors();
    let sq = subquotient(ns, &numerator, &denominator)?;
    let kernel_generators = src.lift() * &sq.generators;
    let is_iso = sq.group.is_trivial() && cokernel.is_trivial();
    let rels = dst_rel.column_vectors();
    let mut gens = m.column_vectors();
    gens.extend(rels.iter().cloned());
    let image = subquotient(nd, &gens, &rels)?.group;
    Ok(InducedMap { kernel: sq.group, kernel_generators, cokernel, image, is_iso, coordinate_matrix: m })
}

/// `ker(×f)` for an endomorphism-style map expressed on ambient lattices,
/// returned as a subquotient of `src` in ambient terms: `{v : f v ∈ K_dst} / K_src`.
pub fn kernel_subgroup_lattice(f: &IntMatrix, src: &FgAbGroup, dst: &FgAbGroup) -> Result<Lattice> {
    let im = induced_map(f, src, dst)?;
    let mut gens: Vec<Vec<BigInt>> = im.kernel_generators.column_vectors();
    gens.extend(src.relations().column_vectors());
    Ok(Lattice::from_generators(src.ambient_dim(), gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::{big, vec_big};

    fn inv(free: usize, t: &[i64]) -> AbelianInvariants {
        AbelianInvariants { free_rank: free, torsion: vec_big(t) }
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(cokernel(&IntMatrix::from_rows(&[vec![3]])).invariants(), &inv(0, &[3]));
        assert!(cokernel(&IntMatrix::identity(3)).is_trivial());
        let a = IntMatrix::from_rows(&[vec![3, 0], vec![0, 1]]);
        assert_eq!(cokernel(&a).invariants(), &inv(0, &[3]));
        let g = cokernel(&IntMatrix::zeros(2, 0));
        assert_eq!(g.invariants(), &inv(2, &[]));
    }

    #[test]
    fn projection_kernel_is_relation_span() {
        let a = IntMatrix::from_rows(&[vec![2, 4, 0], vec![6, 0, 3], vec![0, 0, 9]]);
        let g = cokernel(&a);
        for j in 0..3 {
            assert!(g.is_zero_class(&a.column(j)));
        }
        for c in 0..g.num_coords() {
            let mut e = vec![big(0); g.num_coords()];
            e[c] = big(1);
            assert_eq!(g.project(&g.lift().column(c)), e);
        }
        assert_eq!(g.order(), Some(a.determinant().abs()));
    }

    #[test]
    fn normal_form_from_orders() {
        assert_eq!(AbelianInvariants::from_cyclic_orders(0, &vec_big(&[9, 3, 1, 27])), inv(0, &[3, 9, 27]));
        assert_eq!(AbelianInvariants::from_cyclic_orders(0, &vec_big(&[2, 3])), inv(0, &[6]));
        assert_eq!(AbelianInvariants::from_cyclic_orders(1, &vec_big(&[4, 6])), inv(1, &[2, 12]));
    }

    #[test]
    fn tensor_and_tor_identities() {
        let c3 = inv(0, &[3]);
        let c9 = inv(0, &[9]);
        let z = inv(1, &[]);
        assert_eq!(c3.tensor(&c9), c3);
        assert_eq!(z.tor(&c3), AbelianInvariants::trivial());
        assert_eq!(c3.tor(&c9), c3);
        assert_eq!(z.tensor(&c9), c9);
    }

    #[test]
    fn induced_identity_and_times_three() {
        let c3 = FgAbGroup::from_cyclic_orders(0, &vec_big(&[3]));
        let im = induced_map(&IntMatrix::identity(1), &c3, &c3).unwrap();
        assert!(im.is_iso && im.kernel.is_trivial() && im.cokernel.is_trivial());

        let c9 = FgAbGroup::from_cyclic_orders(0, &vec_big(&[9]));
        let im = induced_map(&IntMatrix::from_rows(&[vec![3]]), &c9, &c9).unwrap();
        assert_eq!(im.kernel.invariants(), &inv(0, &[3]));
        assert_eq!(im.cokernel.invariants(), &inv(0, &[3]));
        assert!(!im.is_iso);
        // generator of the kernel is 3 mod 9
        let g = im.kernel_generators.column(0);
        assert_eq!(c9.element_order(&g), Some(big(3)));
    }

    #[test]
    fn map_that_does_not_descend() {
        let z = FgAbGroup::from_cyclic_orders(1, &[]);
        let c3 = FgAbGroup::from_cyclic_orders(0, &vec_big(&[3]));
        // C3 -> Z, 1 -> 1 is not well defined
        let err = induced_map(&IntMatrix::identity(1), &c3, &z).unwrap_err();
        assert!(matches!(err, Error::NotWellDefined(_)));
    }
}
