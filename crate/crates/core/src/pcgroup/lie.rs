use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use super::blackbox::{pc_from_blackbox, BlackboxPc, GroupOps};
use super::presentation::PcPresentation;
use crate::error::{Error, Result};

type Q = Ratio<i64>;

fn frac(t: Q) -> Q {
    t - t.floor()
}

/// An element `X^i Y^j Z^k · exp(2πi t)` of the nine-circle Lie group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LieElement {
    pub i: u8,
    pub j: u8,
    pub k: u8,
    pub t: Q,
}

impl LieElement {
    pub fn new(i: i64, j: i64, k: i64, t: Q) -> Self {
        LieElement { i: i.rem_euclid(3) as u8, j: j.rem_euclid(3) as u8, k: k.rem_euclid(3) as u8, t: frac(t) }
    }

    pub fn identity() -> Self {
        Self::new(0, 0, 0, Q::from_integer(0))
    }

    pub fn x() -> Self {
        Self::new(1, 0, 0, Q::from_integer(0))
    }

    pub fn y() -> Self {
        Self::new(0, 1, 0, Q::from_integer(0))
    }

    pub fn z() -> Self {
        Self::new(0, 0, 1, Q::from_integer(0))
    }

    pub fn circle(t: Q) -> Self {
        Self::new(0, 0, 0, t)
    }

    /// `ω = exp(2πi/3)`.
    pub fn omega() -> Self {
        Self::circle(Q::new(1, 3))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (i, j, k) = (self.i as i64, self.j as i64, self.k as i64);
        let (i2, j2, k2) = (o.i as i64, o.j as i64, o.k as i64);
        // moving X^{i'} left past Y^j Z^k
        let w = k * i2 + j * (i2 * (i2 - 1) / 2);
        Self::new(i + i2, j + j2, k + j * i2 + k2, self.t + o.t + Q::new(w, 3))
    }

    pub fn inv(&self) -> Self {
        // the order divides 9 · denominator(t)
        let ord = 9 * *self.t.denom();
        (0..ord - 1).fold(Self::identity(), |r, _| r.mul(self))
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X^{} Y^{} Z^{} e({})", self.i, self.j, self.k, self.t)
    }
}

/// The ambient Lie group, for black-box algorithms.
#[derive(Clone, Copy, Debug, Default)]
pub struct LieGroup;

impl GroupOps for LieGroup {
    type Elem = LieElement;

    fn identity(&self) -> LieElement {
        LieElement::identity()
    }

    fn mul(&self, a: &LieElement, b: &LieElement) -> LieElement {
        a.mul(b)
    }

    fn inv(&self, a: &LieElement) -> LieElement {
        a.inv()
    }
}

/// `c_δ₁·δ₁ + c_α·α + c_β·β`, where `α`, `β`, `δ₁` send `X^iY^jZ^k t` to
/// `ωⁱ`, `ωʲ`, `t³`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CircleHom {
    pub delta1: i64,
    pub alpha: i64,
    pub beta: i64,
}

impl CircleHom {
    pub fn new(delta1: i64, alpha: i64, beta: i64) -> Self {
        CircleHom { delta1, alpha: alpha.rem_euclid(3), beta: beta.rem_euclid(3) }
    }

    /// `ξ = 3^{n-4}δ₁ − εβ`, whose kernel is `G(n,ε)`.
    pub fn for_family(n: u32, eps: i32) -> Self {
        Self::new(3i64.pow(n - 4), 0, -(eps as i64))
    }

    /// Image as an element of `ℚ/ℤ`.
    pub fn eval(&self, x: &LieElement) -> Q {
        frac(x.t * 3 * self.delta1 + Q::new(self.alpha * x.i as i64 + self.beta * x.j as i64, 3))
    }

    /// Parses `3*delta1 - beta + alpha` style linear combinations.
    pub fn parse(text: &str) -> Result<Self> {
        let mut coeffs = [0i64; 3];
        let cleaned = text.replace(' ', "").replace('-', "+-");
        for term in cleaned.split('+').filter(|t| !t.is_empty()) {
            let (c, name) = match term.rsplit_once('*') {
                Some((c, n)) => (c.parse::<i64>().map_err(|_| bad(text))?, n),
                None => match term.strip_prefix('-') {
                    Some(n) => (-1, n),
                    None => (1, term),
                },
            };
            let slot = match name {
                "delta1" | "d1" => 0,
                "alpha" | "a" => 1,
                "beta" | "b" => 2,
                _ => return Err(bad(text)),
            };
            coeffs[slot] += c;
        }
        Ok(Self::new(coeffs[0], coeffs[1], coeffs[2]))
    }
}

fn bad(text: &str) -> Error {
    Error::BadParameter(format!("cannot read `{text}` as a combination of delta1, alpha and beta"))
}

impl fmt::Display for CircleHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*delta1", self.delta1)?;
        if self.alpha != 0 {
            write!(f, " + {}*alpha", self.alpha)?;
        }
        if self.beta != 0 {
            write!(f, " + {}*beta", self.beta)?;
        }
        Ok(())
    }
}

/// Generators of the kernel of `h` as Lie group elements.
pub fn kernel_generators(h: &CircleHom) -> Result<Vec<LieElement>> {
    if h.delta1 == 0 {
        return Err(Error::InfiniteKernel);
    }
    let mut c = h.delta1.abs();
    while c % 3 == 0 {
        c /= 3;
    }
    if c != 1 {
        return Err(Error::NotThreeGroup(h.delta1));
    }
    let den = 9 * h.delta1.abs();
    let sign = h.delta1.signum();
    // t = m / (9|c|) with sign·m + a i + b j ≡ 0 (mod 3)
    let solve = |i: i64, j: i64| -> Q {
        let m = (0..3).find(|m| (sign * m + h.alpha * i + h.beta * j).mod_floor(&3) == 0).expect("3 is odd");
        Q::new(m, den)
    };
    let gens = vec![
        LieElement::new(1, 0, 0, solve(1, 0)),
        LieElement::new(0, 1, 0, solve(0, 1)),
        LieElement::z(),
        LieElement::circle(Q::new(3, den)),
    ];
    debug_assert!(gens.iter().all(|g| *h.eval(g).numer() == 0));
    Ok(gens)
}

/// The finite kernel of `h`, with the Lie group elements chosen as pc generators.
pub fn kernel_of_circle_hom_blackbox(h: &CircleHom) -> Result<BlackboxPc<LieElement>> {
    let gens = kernel_generators(h)?;
    pc_from_blackbox(&LieGroup, &gens, &format!("ker({h})"))
}

pub fn kernel_of_circle_hom(h: &CircleHom) -> Result<PcPresentation> {
    Ok(kernel_of_circle_hom_blackbox(h)?.presentation)
}

/// `G(n,ε)` inside the Lie group: `⟨X, Y·η^ε, Z⟩` with `η = exp(2πi/3^{n-2})`.
pub fn family_embedding(n: u32, eps: i32) -> Vec<LieElement> {
    let eta = Q::new(eps as i64, 3i64.pow(n - 2));
    vec![LieElement::x(), LieElement::new(0, 1, 0, eta), LieElement::z()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcgroup::{isomorphic, make_group, Family, PcGroup};

    #[test]
    fn defining_commutators() {
        let g = LieGroup;
        let (x, y, z) = (LieElement::x(), LieElement::y(), LieElement::z());
        assert_eq!(g.commutator(&y, &x), z);
        assert_eq!(g.commutator(&z, &x), LieElement::omega());
        assert_eq!(g.commutator(&y, &z), LieElement::identity());
        assert_eq!(g.power(&x, 3), LieElement::identity());
        assert_eq!(x.mul(&x.inv()), LieElement::identity());
    }

    #[test]
    fn homs_are_multiplicative() {
        let h = CircleHom::new(3, 1, 2);
        let a = LieElement::new(1, 2, 0, Q::new(1, 7));
        let b = LieElement::new(2, 2, 1, Q::new(2, 5));
        assert_eq!(h.eval(&a.mul(&b)), frac(h.eval(&a) + h.eval(&b)));
    }

    #[test]
    fn kernel_orders() {
        for (c, order) in [(1, 81), (3, 243), (-3, 243), (9, 729)] {
            let p = kernel_of_circle_hom(&CircleHom::new(c, 0, 1)).unwrap();
            assert_eq!(p.nominal_order(), order);
        }
        assert_eq!(kernel_of_circle_hom(&CircleHom::new(0, 1, 0)), Err(Error::InfiniteKernel));
        assert_eq!(kernel_of_circle_hom(&CircleHom::new(2, 1, 0)), Err(Error::NotThreeGroup(2)));
    }

    #[test]
    fn kernels_match_the_family() {
        let iso = |h: CircleHom, f: Family, eps: i32| {
            let k = PcGroup::new(kernel_of_circle_hom(&h).unwrap()).unwrap();
            let g = PcGroup::new(make_group(f, 4, eps).unwrap()).unwrap();
            isomorphic(&k, &g).unwrap().isomorphic
        };
        assert!(iso(CircleHom::parse("delta1 - beta").unwrap(), Family::G, 1));
        assert!(iso(CircleHom::parse("delta1 + beta").unwrap(), Family::G, -1));
        assert!(iso(CircleHom::parse("delta1 + beta + alpha").unwrap(), Family::GPrime, 1));
        assert!(!iso(CircleHom::parse("delta1 - beta").unwrap(), Family::G, -1));
    }

    #[test]
    fn embedding_lies_in_the_kernel() {
        for n in 4..=6 {
            for eps in [1, -1] {
                let h = CircleHom::for_family(n, eps);
                assert!(family_embedding(n, eps).iter().all(|x| *h.eval(x).numer() == 0));
            }
        }
    }
}
