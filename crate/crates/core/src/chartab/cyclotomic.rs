use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub type Q = Ratio<i64>;

/// An element of `ℚ(ζ_N)` with `N = 3^level`, stored in the power basis
/// `1, ζ, …, ζ^{φ(N)-1}` reduced by `Φ_N(x) = x^{2M} + x^M + 1`, `M = 3^{level-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyc {
    level: u32,
    coeffs: Vec<Q>,
}

fn phi(level: u32) -> usize {
    if level == 0 {
        1
    } else {
        2 * 3usize.pow(level - 1)
    }
}

impl Cyc {
    pub fn zero(level: u32) -> Self {
        Cyc { level, coeffs: vec![Q::zero(); phi(level)] }
    }

    pub fn rational(level: u32, q: Q) -> Self {
        let mut c = Self::zero(level);
        c.coeffs[0] = q;
        c
    }

    pub fn integer(level: u32, n: i64) -> Self {
        Self::rational(level, Q::from_integer(n))
    }

    pub fn one(level: u32) -> Self {
        Self::integer(level, 1)
    }

    /// `ζ_N^e`.
    pub fn zeta_pow(level: u32, e: i64) -> Self {
        let n = 3i64.pow(level);
        let e = e.rem_euclid(n) as usize;
        let mut c = Self::zero(level);
        let f = phi(level);
        if level == 0 {
            c.coeffs[0] = Q::one();
        } else if e < f {
            c.coeffs[e] = Q::one();
        } else {
            let m = f / 2;
            c.coeffs[e - m] = -Q::one();
            c.coeffs[e - 2 * m] = -Q::one();
        }
        c
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// The same number written over `ℚ(ζ_{3^level})`, `level ≥ self.level`.
    pub fn lift(&self, level: u32) -> Self {
        assert!(level >= self.level, "cannot lower the conductor");
        if level == self.level {
            return self.clone();
        }
        let step = 3usize.pow(level - self.level);
        let mut c = Self::zero(level);
        if self.level == 0 {
            c.coeffs[0] = self.coeffs[0];
        } else {
            for (i, q) in self.coeffs.iter().enumerate() {
                c.coeffs[i * step] = *q;
            }
        }
        c
    }

    fn common(&self, o: &Self) -> (Self, Self) {
        let l = self.level.max(o.level);
        (self.lift(l), o.lift(l))
    }

    pub fn add(&self, o: &Self) -> Self {
        let (mut a, b) = self.common(o);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Cyc { level: self.level, coeffs: self.coeffs.iter().map(|q| -q).collect() }
    }

    pub fn scale(&self, q: Q) -> Self {
        Cyc { level: self.level, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = self.common(o);
        let f = phi(a.level);
        if a.level == 0 {
            return Cyc { level: 0, coeffs: vec![a.coeffs[0] * b.coeffs[0]] };
        }
        let mut prod = vec![Q::zero(); 2 * f - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let m = f / 2;
        for d in (f..prod.len()).rev() {
            let c = std::mem::take(&mut prod[d]);
            if !c.is_zero() {
                prod[d - m] -= c;
                prod[d - 2 * m] -= c;
            }
        }
        prod.truncate(f);
        Cyc { level: a.level, coeffs: prod }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.level), |acc, _| acc.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value when the number lies in `ℚ`.
    pub fn as_rational(&self) -> Option<Q> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    /// Whether every coefficient is an integer (power-basis coordinates of an algebraic integer).
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|q| q.is_integer())
    }

    /// Equality after lifting to a common conductor.
    pub fn equals(&self, o: &Self) -> bool {
        let (a, b) = self.common(o);
        a.coeffs == b.coeffs
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = 3u64.pow(self.level);
        let mut parts = Vec::new();
        for (i, q) in self.coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            parts.push(match i {
                0 => format!("{q}"),
                _ if q.is_one() => format!("z{n}^{i}"),
                _ => format!("{q}*z{n}^{i}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Serialize for Cyc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Cyc", 2)?;
        st.serialize_field("conductor", &3u64.pow(self.level))?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|q| q.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity() {
        let z = Cyc::zeta_pow(2, 1);
        assert!(z.pow(9).equals(&Cyc::one(2)));
        assert!(!z.pow(3).equals(&Cyc::one(2)));
        // 1 + ω + ω² = 0
        let w = Cyc::zeta_pow(1, 1);
        assert!(Cyc::one(1).add(&w).add(&w.pow(2)).is_zero());
        // sum of all 9th roots is 0
        let s = (0..9).fold(Cyc::zero(2), |acc, e| acc.add(&Cyc::zeta_pow(2, e)));
        assert!(s.is_zero());
    }

    #[test]
    fn lifting_is_compatible() {
        let w = Cyc::zeta_pow(1, 1);
        assert!(w.lift(3).equals(&Cyc::zeta_pow(3, 9)));
        assert!(w.equals(&Cyc::zeta_pow(2, 3)));
        assert!(w.mul(&Cyc::zeta_pow(2, 1)).equals(&Cyc::zeta_pow(2, 4)));
    }

    #[test]
    fn products_reduce() {
        for a in 0..27 {
            for b in 0..27 {
                assert!(Cyc::zeta_pow(3, a).mul(&Cyc::zeta_pow(3, b)).equals(&Cyc::zeta_pow(3, a + b)));
            }
        }
    }
}
