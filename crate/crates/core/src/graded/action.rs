use num_bigint::BigInt;

use super::maps::RingMap;
use super::piece::GradedRing;
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::linalg::{induced_map, kernel_subgroup_lattice, subquotient, FgAbGroup, IntMatrix};

/// An automorphism of order dividing 3 of a presented ring.
#[derive(Clone, Debug)]
pub struct Order3Action {
    map: RingMap,
}

/// A subgroup or subquotient of a graded piece with polynomial representatives.
#[derive(Clone, Debug)]
pub struct PieceSubquotient {
    pub group: FgAbGroup,
    pub generators: Vec<Poly>,
}

impl Order3Action {
    /// Checks that `map` is an endomorphism of `ring` whose cube fixes every generator.
    pub fn new(map: RingMap, ring: &GradedRing) -> Result<Self> {
        if map.source() != map.target() || map.source() != ring.presentation() {
            return Err(Error::NotAnAction("map is not an endomorphism of the ring".into()));
        }
        let v = map.verify(ring)?;
        if !v.passes {
            return Err(Error::NotAnAction("map does not respect the relations".into()));
        }
        let cube = map.compose(&map)?.compose(&map)?;
        let pres = ring.presentation();
        for (i, g) in pres.generators().iter().enumerate() {
            let diff = cube.images()[i].sub(&Poly::generator(pres.ngens(), i));
            if g.degree <= ring.bound() && !ring.is_zero(&diff)? {
                return Err(Error::NotAnAction(format!("cube does not fix `{}`", g.name)));
            }
        }
        Ok(Order3Action { map })
    }

    pub fn map(&self) -> &RingMap {
        &self.map
    }

    fn matrix(&self, ring: &GradedRing, d: u32) -> Result<IntMatrix> {
        self.map.degree_matrix(ring, ring, d)
    }

    /// Elements of degree `d` fixed by the action.
    pub fn fixed_subgroup(&self, ring: &GradedRing, d: u32) -> Result<PieceSubquotient> {
        let piece = ring.piece(d)?;
        let m = self.matrix(ring, d)?;
        let g_minus_1 = sub_identity(&m);
        let im = induced_map(&g_minus_1, &piece.group, &piece.group)?;
        let generators = im.kernel_generators.column_vectors().iter().map(|v| piece.poly(v)).collect();
        Ok(PieceSubquotient { group: im.kernel, generators })
    }

    /// First cohomology `ker(1 + g + g²) / im(g − 1)` of the cyclic group on the degree-`d` piece.
    pub fn h1_c3(&self, ring: &GradedRing, d: u32) -> Result<PieceSubquotient> {
        let piece = ring.piece(d)?;
        let m = self.matrix(ring, d)?;
        let m2 = &m * &m;
        let n = piece.dim();
        let mut norm = IntMatrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                norm[(i, j)] += &m[(i, j)] + &m2[(i, j)];
            }
        }
        let ker = kernel_subgroup_lattice(&norm, &piece.group, &piece.group)?;
        let mut denominator = sub_identity(&m).column_vectors();
        denominator.extend(piece.group.relations().column_vectors());
        let sq = subquotient(n, ker.basis(), &denominator)?;
        let generators = sq.generators.column_vectors().iter().map(|v| piece.poly(v)).collect();
        Ok(PieceSubquotient { group: sq.group, generators })
    }
}

fn sub_identity(m: &IntMatrix) -> IntMatrix {
    let mut out = m.clone();
    for i in 0..m.rows() {
        out[(i, i)] -= BigInt::from(1);
    }
    out
}
