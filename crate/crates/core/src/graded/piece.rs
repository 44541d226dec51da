use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::poly::{Monomial, Poly};
use super::presentation::RingPresentation;
use crate::error::{Error, Result};
use crate::linalg::{cokernel, FgAbGroup, IntMatrix};
use crate::report::big_vec;

pub const DEFAULT_DEGREE_BOUND: u32 = 16;

/// Environment variable overriding [`DEFAULT_DEGREE_BOUND`].
pub const DEGREE_BOUND_ENV: &str = "PGCOH_DEGREE_BOUND";

pub fn degree_bound_from_env() -> u32 {
    std::env::var(DEGREE_BOUND_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_DEGREE_BOUND)
}

/// The degree-`d` part of a presented ring: free abelian group on the degree-`d`
/// monomials modulo every product `m·r` of total degree `d`.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub degree: u32,
    pub basis: Vec<Monomial>,
    pub group: FgAbGroup,
    index: HashMap<Monomial, usize>,
}

impl GradedPiece {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Ambient coefficient vector of a polynomial all of whose terms have this degree.
    pub fn vector(&self, p: &Poly) -> Result<Vec<BigInt>> {
        let mut v = vec![BigInt::zero(); self.basis.len()];
        for (m, c) in p.terms() {
            let i = *self.index.get(m).ok_or(Error::NotHomogeneous)?;
            v[i] += c;
        }
        Ok(v)
    }

    pub fn poly(&self, v: &[BigInt]) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in self.basis.iter().zip(v) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn coords(&self, p: &Poly) -> Result<Vec<BigInt>> {
        Ok(self.group.project(&self.vector(p)?))
    }

    /// Ambient representatives of the coordinate generators of the group.
    pub fn generator_polys(&self) -> Vec<Poly> {
        (0..self.group.num_coords()).map(|k| self.poly(&self.group.lift().column(k))).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PieceSummary {
    pub degree: u32,
    pub free_rank: usize,
    #[serde(with = "big_vec")]
    pub torsion: Vec<BigInt>,
    pub basis: Vec<String>,
    pub generators: Vec<String>,
}

/// A presentation together with a per-degree cache of its graded pieces.
#[derive(Debug)]
pub struct GradedRing {
    pres: RingPresentation,
    bound: u32,
    cache: Mutex<BTreeMap<u32, Arc<GradedPiece>>>,
}

impl Clone for GradedRing {
    fn clone(&self) -> Self {
        GradedRing::with_bound(self.pres.clone(), self.bound)
    }
}

impl GradedRing {
    pub fn new(pres: RingPresentation) -> Self {
        Self::with_bound(pres, degree_bound_from_env())
    }

    pub fn with_bound(pres: RingPresentation, bound: u32) -> Self {
        GradedRing { pres, bound, cache: Mutex::new(BTreeMap::new()) }
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.pres
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn piece(&self, d: u32) -> Result<Arc<GradedPiece>> {
        if d > self.bound {
            return Err(Error::DegreeBoundExceeded { degree: d, bound: self.bound });
        }
        if let Some(p) = self.cache.lock().expect("cache poisoned").get(&d) {
            return Ok(p.clone());
        }
        let piece = Arc::new(self.compute_piece(d));
        self.cache.lock().expect("cache poisoned").entry(d).or_insert(piece.clone());
        Ok(piece)
    }

    fn compute_piece(&self, d: u32) -> GradedPiece {
        let pres = &self.pres;
        let basis = pres.monomials_of_degree(d);
        let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut columns: BTreeSet<Vec<BigInt>> = BTreeSet::new();
        for r in pres.relations() {
            let e = pres.degree_of(r).expect("relations are homogeneous");
            if e > d {
                continue;
            }
            for m in pres.monomials_of_degree(d - e) {
                let prod = pres.mul(&Poly::term(m, BigInt::from(1)), r);
                if prod.is_zero() {
                    continue;
                }
                let mut v = vec![BigInt::zero(); basis.len()];
                for (mm, c) in prod.terms() {
                    v[index[mm]] += c;
                }
                columns.insert(v);
            }
        }
        let columns: Vec<Vec<BigInt>> = columns.into_iter().collect();
        let group = cokernel(&IntMatrix::from_columns(basis.len(), &columns));
        GradedPiece { degree: d, basis, group, index }
    }

    /// Coordinates of the class of a homogeneous element in its graded piece.
    /// The zero polynomial reduces to the empty coordinate vector.
    pub fn reduce(&self, p: &Poly) -> Result<Vec<BigInt>> {
        let p = self.pres.normalize(p);
        if p.is_zero() {
            return Ok(Vec::new());
        }
        let d = self.pres.degree_of(&p).ok_or(Error::NotHomogeneous)?;
        self.piece(d)?.coords(&p)
    }

    pub fn is_zero(&self, p: &Poly) -> Result<bool> {
        Ok(self.reduce(p)?.iter().all(Zero::is_zero))
    }

    /// Coordinates of `p` read in degree `d` (zero is allowed).
    pub fn reduce_in_degree(&self, p: &Poly, d: u32) -> Result<Vec<BigInt>> {
        self.piece(d)?.coords(&self.pres.normalize(p))
    }

    pub fn summary(&self, d: u32) -> Result<PieceSummary> {
        let piece = self.piece(d)?;
        Ok(PieceSummary {
            degree: d,
            free_rank: piece.group.free_rank(),
            torsion: piece.group.torsion().to_vec(),
            basis: piece.basis.iter().map(|m| self.pres.format_monomial(m)).collect(),
            generators: piece.generator_polys().iter().map(|p| self.pres.format(p)).collect(),
        })
    }

    /// Structure of every graded piece in degrees `0..=max_degree`.
    pub fn hilbert_report(&self, max_degree: u32) -> Result<Vec<PieceSummary>> {
        (0..=max_degree).map(|d| self.summary(d)).collect()
    }

    /// Matrix of `×e` from the ambient lattice of degree `d` to that of `d + deg e`.
    pub fn multiplication_matrix(&self, e: &Poly, d: u32) -> Result<IntMatrix> {
        let e = self.pres.normalize(e);
        let de = if e.is_zero() { 0 } else { self.pres.degree_of(&e).ok_or(Error::NotHomogeneous)? };
        let src = self.piece(d)?;
        let dst = self.piece(d + de)?;
        let mut cols = Vec::with_capacity(src.dim());
        for m in &src.basis {
            let prod = self.pres.mul(&Poly::term(m.clone(), BigInt::from(1)), &e);
            cols.push(dst.vector(&prod)?);
        }
        Ok(IntMatrix::from_columns(dst.dim(), &cols))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::presentation::Generator;

    #[test]
    fn polynomial_ring_mod_three() {
        let gens = vec![Generator { name: "x".into(), degree: 2 }];
        let pres = RingPresentation::new("r", gens, vec![]).unwrap();
        let three_x = pres.gen("x").unwrap().scale(&BigInt::from(3));
        let pres = pres.with_relations("r", vec![three_x]).unwrap();
        let ring = GradedRing::with_bound(pres, 8);
        assert_eq!(ring.piece(0).unwrap().group.to_string(), "Z");
        assert_eq!(ring.piece(1).unwrap().group.to_string(), "0");
        assert_eq!(ring.piece(4).unwrap().group.to_string(), "C3");
        assert!(matches!(ring.piece(9), Err(Error::DegreeBoundExceeded { degree: 9, bound: 8 })));
    }
}
