use num_bigint::BigInt;
use serde::Serialize;

use super::piece::GradedRing;
use super::poly::Poly;
use super::presentation::RingPresentation;
use crate::error::{Error, Result};
use crate::linalg::{induced_map, FgAbGroup, IntMatrix, Lattice};
use crate::report::big_vec;

/// A degree-preserving ring homomorphism given by generator images.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: RingPresentation,
    target: RingPresentation,
    images: Vec<Poly>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub image: String,
    #[serde(with = "big_vec")]
    pub reduced: Vec<BigInt>,
    pub zero: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MapVerification {
    pub passes: bool,
    pub relations: Vec<RelationCheck>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeVerdict {
    Bijective,
    NotBijective,
    NotWellDefined,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeMapReport {
    pub degree: u32,
    pub verdict: DegreeVerdict,
    pub source: String,
    pub target: String,
    pub kernel: String,
    pub cokernel: String,
}

impl RingMap {
    pub fn new(source: RingPresentation, target: RingPresentation, images: Vec<Poly>) -> Result<Self> {
        if images.len() != source.ngens() {
            return Err(Error::BadParameter(format!(
                "{} images given for {} generators",
                images.len(),
                source.ngens()
            )));
        }
        let images: Vec<Poly> = images.iter().map(|p| target.normalize(p)).collect();
        for (g, img) in source.generators().iter().zip(&images) {
            if img.is_zero() {
                continue;
            }
            match target.degree_of(img) {
                Some(d) if d == g.degree => {}
                Some(d) => {
                    return Err(Error::BadParameter(format!(
                        "image of `{}` has degree {d}, expected {}",
                        g.name, g.degree
                    )))
                }
                None => return Err(Error::NotHomogeneous),
            }
        }
        Ok(RingMap { source, target, images })
    }

    /// Builds a map from `(generator name, image)` pairs; unnamed generators map to themselves
    /// when the target has a generator of the same name and degree, otherwise to zero.
    pub fn from_named(source: RingPresentation, target: RingPresentation, named: &[(&str, Poly)]) -> Result<Self> {
        let mut images = Vec::with_capacity(source.ngens());
        for g in source.generators() {
            if let Some((_, p)) = named.iter().find(|(n, _)| *n == g.name) {
                images.push(p.clone());
            } else {
                match target.index_of(&g.name) {
                    Some(i) if target.degrees()[i] == g.degree => images.push(Poly::generator(target.ngens(), i)),
                    _ => images.push(Poly::zero()),
                }
            }
        }
        for (n, _) in named {
            if source.index_of(n).is_none() {
                return Err(Error::UnknownIdentifier { name: n.to_string(), line: 0, col: 0 });
            }
        }
        Self::new(source, target, images)
    }

    pub fn identity(r: &RingPresentation) -> Self {
        let images = (0..r.ngens()).map(|i| Poly::generator(r.ngens(), i)).collect();
        RingMap { source: r.clone(), target: r.clone(), images }
    }

    pub fn source(&self) -> &RingPresentation {
        &self.source
    }

    pub fn target(&self) -> &RingPresentation {
        &self.target
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    /// Image of a source polynomial, substituting generators in their fixed order.
    pub fn apply(&self, p: &Poly) -> Poly {
        let t = &self.target;
        let mut out = Poly::zero();
        for (m, c) in p.terms() {
            let mut acc = t.constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    acc = t.mul(&acc, &t.pow(&self.images[i], e as u32));
                }
            }
            out = out.add(&acc);
        }
        out
    }

    pub fn compose(&self, other: &RingMap) -> Result<RingMap> {
        if other.source != self.target {
            return Err(Error::BadParameter("maps are not composable".into()));
        }
        let images = self.images.iter().map(|p| other.apply(p)).collect();
        Ok(RingMap { source: self.source.clone(), target: other.target.clone(), images })
    }

    /// Reduces the image of every source relation in `target`.
    pub fn verify(&self, target: &GradedRing) -> Result<MapVerification> {
        let mut relations = Vec::new();
        for r in self.source.relations() {
            let img = self.apply(r);
            let reduced = target.reduce(&img)?;
            let zero = reduced.iter().all(|x| x == &BigInt::from(0));
            relations.push(RelationCheck {
                relation: self.source.format(r),
                image: self.target.format(&img),
                reduced,
                zero,
            });
        }
        let passes = relations.iter().all(|c| c.zero);
        Ok(MapVerification { passes, relations })
    }

    /// Ambient matrix of the map from degree `d` of the source to degree `d` of the target.
    pub fn degree_matrix(&self, source: &GradedRing, target: &GradedRing, d: u32) -> Result<IntMatrix> {
        let sp = source.piece(d)?;
        let tp = target.piece(d)?;
        let mut cols = Vec::with_capacity(sp.dim());
        for m in &sp.basis {
            let img = self.target.normalize(&self.apply(&Poly::term(m.clone(), BigInt::from(1))));
            cols.push(tp.vector(&img)?);
        }
        Ok(IntMatrix::from_columns(tp.dim(), &cols))
    }

    /// Per-degree verdict on whether the induced map of graded pieces is an isomorphism.
    pub fn bijective_report(
        &self,
        source: &GradedRing,
        target: &GradedRing,
        max_degree: u32,
    ) -> Result<Vec<DegreeMapReport>> {
        let mut out = Vec::new();
        for d in 0..=max_degree {
            let f = self.degree_matrix(source, target, d)?;
            let sp = source.piece(d)?;
            let tp = target.piece(d)?;
            let (verdict, kernel, cokernel) = match induced_map(&f, &sp.group, &tp.group) {
                Ok(im) => (
                    if im.is_iso { DegreeVerdict::Bijective } else { DegreeVerdict::NotBijective },
                    im.kernel.to_string(),
                    im.cokernel.to_string(),
                ),
                Err(Error::NotWellDefined(_)) => (DegreeVerdict::NotWellDefined, "-".into(), "-".into()),
                Err(e) => return Err(e),
            };
            out.push(DegreeMapReport {
                degree: d,
                verdict,
                source: sp.group.to_string(),
                target: tp.group.to_string(),
                kernel,
                cokernel,
            });
        }
        Ok(out)
    }

    pub fn is_bijective(&self, source: &GradedRing, target: &GradedRing, max_degree: u32) -> Result<bool> {
        Ok(self.bijective_report(source, target, max_degree)?.iter().all(|r| r.verdict == DegreeVerdict::Bijective))
    }
}

/// Kernel of multiplication by a homogeneous element on the degree-`d` piece,
/// with polynomial representatives of its generators.
#[derive(Clone, Debug)]
pub struct MultKernel {
    pub group: FgAbGroup,
    pub generators: Vec<Poly>,
    /// Ambient lattice `{v : e·v = 0}` in the degree-`d` monomial basis (contains the relations).
    pub lattice: Lattice,
}

pub fn mult_kernel(ring: &GradedRing, e: &Poly, d: u32) -> Result<MultKernel> {
    let pres = ring.presentation();
    let e = pres.normalize(e);
    let de = if e.is_zero() { 0 } else { pres.degree_of(&e).ok_or(Error::NotHomogeneous)? };
    let f = ring.multiplication_matrix(&e, d)?;
    let src = ring.piece(d)?;
    let dst = ring.piece(d + de)?;
    let im = induced_map(&f, &src.group, &dst.group)?;
    let generators = im.kernel_generators.column_vectors().iter().map(|v| src.poly(v)).collect();
    let mut gens = im.kernel_generators.column_vectors();
    gens.extend(src.group.relations().column_vectors());
    let lattice = Lattice::from_generators(src.dim(), gens);
    Ok(MultKernel { group: im.kernel, generators, lattice })
}
