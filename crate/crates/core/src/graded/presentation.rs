use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;

use super::poly::{Monomial, Poly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

/// A finitely presented graded-commutative ring over ℤ.
///
/// Relations are stored as polynomials meaning `r = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    name: String,
    generators: Vec<Generator>,
    relations: Vec<Poly>,
    degrees: Vec<u32>,
    odd: Vec<bool>,
    names: Vec<String>,
}

impl RingPresentation {
    pub fn new(name: impl Into<String>, generators: Vec<Generator>, relations: Vec<Poly>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if g.degree == 0 {
                return Err(Error::BadParameter(format!("generator `{}` has degree 0", g.name)));
            }
            if !seen.insert(g.name.as_str()) {
                return Err(Error::BadParameter(format!("duplicate generator `{}`", g.name)));
            }
        }
        let degrees: Vec<u32> = generators.iter().map(|g| g.degree).collect();
        let odd = degrees.iter().map(|d| d % 2 == 1).collect();
        let names = generators.iter().map(|g| g.name.clone()).collect();
        let mut p = RingPresentation { name: name.into(), generators, relations: Vec::new(), degrees, odd, names };
        for r in relations {
            p.push_relation(r)?;
        }
        Ok(p)
    }

    fn push_relation(&mut self, r: Poly) -> Result<()> {
        let r = self.normalize(&r);
        if r.is_zero() {
            return Ok(());
        }
        if r.homogeneous_degree(&self.degrees).is_none() {
            return Err(Error::NotHomogeneous);
        }
        self.relations.push(r);
        Ok(())
    }

    /// Same presentation with extra relations appended.
    pub fn with_relations(&self, name: impl Into<String>, extra: Vec<Poly>) -> Result<Self> {
        let mut p = self.clone();
        p.name = name.into();
        for r in extra {
            p.push_relation(r)?;
        }
        Ok(p)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn odd(&self) -> &[bool] {
        &self.odd
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The generator called `name` as a polynomial.
    pub fn gen(&self, name: &str) -> Result<Poly> {
        let i =
            self.index_of(name).ok_or_else(|| Error::UnknownIdentifier { name: name.to_string(), line: 0, col: 0 })?;
        Ok(Poly::generator(self.ngens(), i))
    }

    pub fn one(&self) -> Poly {
        Poly::constant(self.ngens(), BigInt::from(1))
    }

    pub fn constant(&self, c: impl Into<BigInt>) -> Poly {
        Poly::constant(self.ngens(), c.into())
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b, &self.odd)
    }

    pub fn pow(&self, a: &Poly, e: u32) -> Poly {
        a.pow(e, self.ngens(), &self.odd)
    }

    /// Drops monomials with a repeated odd generator.
    pub fn normalize(&self, p: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in p.terms() {
            if m.0.iter().zip(&self.odd).all(|(&e, &o)| !o || e <= 1) {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn degree_of(&self, p: &Poly) -> Option<u32> {
        p.homogeneous_degree(&self.degrees)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.degree(&self.degrees)
    }

    pub fn format(&self, p: &Poly) -> String {
        p.format(&self.names)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        m.format(&self.names)
    }

    /// Monomials of degree `d`, square-free in odd generators, in descending
    /// lexicographic order of exponent vectors.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let n = self.ngens();
        let mut out = Vec::new();
        let mut cur = vec![0u16; n];
        self.enumerate(0, d, &mut cur, &mut out);
        out
    }

    fn enumerate(&self, i: usize, rest: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            if rest == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let deg = self.degrees[i];
        let mut max = rest / deg;
        if self.odd[i] {
            max = max.min(1);
        }
        for e in (0..=max).rev() {
            cur[i] = e as u16;
            self.enumerate(i + 1, rest - e * deg, cur, out);
        }
        cur[i] = 0;
    }
}
