use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent vector over the generators of a presentation.
///
/// Odd-degree generators never carry an exponent above 1: their squares are
/// identified with zero when monomials are multiplied.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(ngens: usize) -> Self {
        Monomial(vec![0; ngens])
    }

    pub fn generator(ngens: usize, i: usize) -> Self {
        let mut m = Self::one(ngens);
        m.0[i] = 1;
        m
    }

    pub fn degree(&self, degrees: &[u32]) -> u32 {
        self.0.iter().zip(degrees).map(|(&e, &d)| e as u32 * d).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product with the Koszul sign, or `None` when an odd generator would be squared.
    pub fn mul(&self, other: &Monomial, odd: &[bool]) -> Option<(bool, Monomial)> {
        let mut negative = false;
        let mut odd_seen_in_self_after = 0usize;
        // count pairs (x in self, y in other) of odd generators with y < x
        let n = self.0.len();
        for i in (0..n).rev() {
            if !odd[i] {
                continue;
            }
            if other.0[i] > 0 && odd_seen_in_self_after % 2 == 1 {
                negative = !negative;
            }
            if self.0[i] > 0 {
                if other.0[i] > 0 {
                    return None;
                }
                odd_seen_in_self_after += 1;
            }
        }
        let exps = self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect();
        Some((negative, Monomial(exps)))
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (e, name) in self.0.iter().zip(names) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

/// Integer polynomial in the generators of a presentation (sparse, canonical:
/// no zero coefficients).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(ngens: usize, c: BigInt) -> Self {
        Self::term(Monomial::one(ngens), c)
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn generator(ngens: usize, i: usize) -> Self {
        Self::term(Monomial::generator(ngens, i), BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul(&self, other: &Poly, odd: &[bool]) -> Poly {
        let mut p = Poly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((neg, m)) = a.mul(b, odd) {
                    let c = ca * cb;
                    p.add_term(m, if neg { -c } else { c });
                }
            }
        }
        p
    }

    pub fn pow(&self, e: u32, ngens: usize, odd: &[bool]) -> Poly {
        let mut acc = Poly::constant(ngens, BigInt::one());
        for _ in 0..e {
            acc = acc.mul(self, odd);
        }
        acc
    }

    /// Degrees of the monomials present (sorted, deduplicated).
    pub fn degrees(&self, degrees: &[u32]) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(|m| m.degree(degrees)).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Degree if homogeneous and nonzero.
    pub fn homogeneous_degree(&self, degrees: &[u32]) -> Option<u32> {
        match self.degrees(degrees).as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    /// Canonical text form: terms in descending monomial order, `*` products.
    pub fn format(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                let _ = write!(s, "{a}");
            } else if a.is_one() {
                s.push_str(&m.format(names));
            } else {
                let _ = write!(s, "{a}*{}", m.format(names));
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koszul_sign_of_odd_generators() {
        // generators x (odd), y (even), z (odd)
        let odd = [true, false, true];
        let x = Monomial(vec![1, 0, 0]);
        let z = Monomial(vec![0, 0, 1]);
        assert_eq!(x.mul(&z, &odd), Some((false, Monomial(vec![1, 0, 1]))));
        assert_eq!(z.mul(&x, &odd), Some((true, Monomial(vec![1, 0, 1]))));
        assert_eq!(x.mul(&x, &odd), None);
    }

    #[test]
    fn format_is_canonical() {
        let names: Vec<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
        let mut p = Poly::zero();
        p.add_term(Monomial(vec![0, 2]), BigInt::from(-3));
        p.add_term(Monomial(vec![2, 0]), BigInt::from(1));
        p.add_term(Monomial(vec![0, 0]), BigInt::from(5));
        assert_eq!(p.format(&names), "a^2 - 3*b^2 + 5");
    }
}
