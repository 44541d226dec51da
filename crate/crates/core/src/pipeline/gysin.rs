use num_bigint::BigInt;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::{mult_kernel, GradedRing, Poly};
use crate::linalg::{induced_map, AbelianInvariants, FgAbGroup, InducedMap, Lattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoType {
    Determined,
    Ambiguous,
}

/// One degree of the Gysin sequence of a circle bundle `BK → BG̃` with Euler class `ξ`:
/// `0 → Hᵐ(G̃)/ξHᵐ⁻²(G̃) → Hᵐ(K) → ker(ξ: Hᵐ⁻¹ → Hᵐ⁺¹) → 0`.
#[derive(Clone, Debug)]
pub struct GysinSegment {
    pub degree: u32,
    pub coker_part: FgAbGroup,
    pub ker_part: FgAbGroup,
    /// `None` when infinite.
    pub total_order: Option<BigInt>,
    pub iso_type: IsoType,
}

impl GysinSegment {
    /// The isomorphism type of `Hᵐ(K)` when the extension is forced.
    pub fn structure(&self) -> Option<AbelianInvariants> {
        match self.iso_type {
            IsoType::Ambiguous => None,
            IsoType::Determined if self.ker_part.is_trivial() => Some(self.coker_part.invariants().clone()),
            IsoType::Determined => Some(self.ker_part.invariants().clone()),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.coker_part.free_rank() + self.ker_part.free_rank()
    }
}

#[derive(Serialize)]
struct SegmentJson {
    degree: u32,
    coker_part: String,
    ker_part: String,
    total_order: Option<String>,
    iso_type: IsoType,
    structure: Option<String>,
}

impl Serialize for GysinSegment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SegmentJson {
            degree: self.degree,
            coker_part: self.coker_part.to_string(),
            ker_part: self.ker_part.to_string(),
            total_order: self.total_order.as_ref().map(|o| o.to_string()),
            iso_type: self.iso_type,
            structure: self.structure().map(|s| s.to_string()),
        }
        .serialize(s)
    }
}

/// Multiplication by `ξ` from degree `d` to `d + 2`; zero map when `d` is negative.
fn times_xi(ring: &GradedRing, xi: &Poly, d: i64) -> Result<Option<InducedMap>> {
    if d < 0 {
        return Ok(None);
    }
    let d = d as u32;
    let f = ring.multiplication_matrix(xi, d)?;
    let src = ring.piece(d)?;
    let dst = ring.piece(d + 2)?;
    Ok(Some(induced_map(&f, &src.group, &dst.group)?))
}

fn check_xi(ring: &GradedRing, xi: &Poly) -> Result<Poly> {
    let pres = ring.presentation();
    let xi = pres.normalize(xi);
    match pres.degree_of(&xi) {
        Some(2) => Ok(xi),
        None if xi.is_zero() => Ok(xi),
        Some(d) => Err(Error::BadParameter(format!("Euler class must have degree 2, got {d}"))),
        None => Err(Error::NotHomogeneous),
    }
}

/// The segment of degree `m`, from the pieces of degree `m-2 ..= m+1`.
pub fn gysin_segment(ring: &GradedRing, xi: &Poly, m: u32) -> Result<GysinSegment> {
    let xi = check_xi(ring, xi)?;
    segment(ring, &xi, m)
}

fn segment(ring: &GradedRing, xi: &Poly, m: u32) -> Result<GysinSegment> {
    let coker_part = match times_xi(ring, xi, m as i64 - 2)? {
        Some(im) => im.cokernel,
        None => ring.piece(m)?.group.clone(),
    };
    let ker_part = match times_xi(ring, xi, m as i64 - 1)? {
        Some(im) => im.kernel,
        None => FgAbGroup::trivial(),
    };
    let total_order = match (coker_part.order(), ker_part.order()) {
        (Some(a), Some(b)) => Some(a * b),
        _ => None,
    };
    // Two sides of exponent 3 may still extend to a cyclic group, so only a trivial side pins the type.
    let iso_type =
        if coker_part.is_trivial() || ker_part.is_trivial() { IsoType::Determined } else { IsoType::Ambiguous };
    Ok(GysinSegment { degree: m, coker_part, ker_part, total_order, iso_type })
}

/// Segments for `2 ≤ m ≤ max_degree - 1`.
pub fn gysin_series(ring: &GradedRing, xi: &Poly, max_degree: u32) -> Result<Vec<GysinSegment>> {
    let xi = check_xi(ring, xi)?;
    (2..max_degree).map(|m| segment(ring, &xi, m)).collect()
}

/// [`gysin_series`] for the subgroup rings `prop4.M` and `thm6.P`.
pub fn gysin_series_sub(ring: &GradedRing, xi: &Poly, max_degree: u32) -> Result<Vec<GysinSegment>> {
    let name = ring.presentation().name();
    if name != "prop4.M" && name != "thm6.P" {
        return Err(Error::BadParameter(format!("expected the prop4.M or thm6.P ring, got `{name}`")));
    }
    gysin_series(ring, xi, max_degree)
}

fn pow3(e: u32) -> BigInt {
    BigInt::from(3).pow(e)
}

/// `ξ = 3^{n-4}δ₁ − εβ` on the ring of `G̃`, whose circle kernel is `G(n,ε)`.
pub fn family_class(ring: &GradedRing, n: u32, eps: i32) -> Result<Poly> {
    if n < 4 {
        return Err(Error::BadParameter(format!("n must be at least 4, got {n}")));
    }
    let d1 = ring.presentation().gen("delta1")?.scale(&pow3(n - 4));
    let b = ring.presentation().gen("beta")?.scale(&BigInt::from(eps));
    Ok(ring.presentation().normalize(&d1.sub(&b)))
}

/// `ξ = 3^{n-3}τ − εβ` on the ring of `M̃`.
pub fn m_class(ring: &GradedRing, n: u32, eps: i32) -> Result<Poly> {
    if n < 3 {
        return Err(Error::BadParameter(format!("n must be at least 3, got {n}")));
    }
    let t = ring.presentation().gen("tau")?.scale(&pow3(n - 3));
    let b = ring.presentation().gen("beta")?.scale(&BigInt::from(eps));
    Ok(ring.presentation().normalize(&t.sub(&b)))
}

/// `ξ = 3^{n-4}δ₁` on the ring of `P̃`.
pub fn p_class(ring: &GradedRing, n: u32) -> Result<Poly> {
    if n < 4 {
        return Err(Error::BadParameter(format!("n must be at least 4, got {n}")));
    }
    Ok(ring.presentation().gen("delta1")?.scale(&pow3(n - 4)))
}

/// Order and rank bookkeeping for one multiplication map `A → B`:
/// `|A| = |ker|·|im|` and `|B| = |im|·|coker|` (ranks add in the same pattern).
#[derive(Clone, Debug, Serialize)]
pub struct ExactnessCheck {
    pub degree: u32,
    pub source: String,
    pub kernel: String,
    pub image: String,
    pub cokernel: String,
    pub target: String,
    pub consistent: bool,
}

fn multiplicative(a: &FgAbGroup, b: &FgAbGroup, c: &FgAbGroup) -> bool {
    if a.free_rank() != b.free_rank() + c.free_rank() {
        return false;
    }
    match (a.order(), b.order(), c.order()) {
        (Some(x), Some(y), Some(z)) => x == y * z,
        _ => true,
    }
}

/// Checks every multiplication map `×ξ: H^d → H^{d+2}` for `d + 2 ≤ max_degree`.
pub fn exactness_bookkeeping(ring: &GradedRing, xi: &Poly, max_degree: u32) -> Result<Vec<ExactnessCheck>> {
    let xi = check_xi(ring, xi)?;
    let mut out = Vec::new();
    for d in 0..max_degree.saturating_sub(1) {
        let im = times_xi(ring, &xi, d as i64)?.expect("nonnegative degree");
        let src = ring.piece(d)?.group.clone();
        let dst = ring.piece(d + 2)?.group.clone();
        let consistent = multiplicative(&src, &im.kernel, &im.image) && multiplicative(&dst, &im.image, &im.cokernel);
        out.push(ExactnessCheck {
            degree: d,
            source: src.to_string(),
            kernel: im.kernel.to_string(),
            image: im.image.to_string(),
            cokernel: im.cokernel.to_string(),
            target: dst.to_string(),
            consistent,
        });
    }
    Ok(out)
}

/// Whether `ker(×ξ)` on degree `d` equals the degree-`d` part of the ideal generated by `generator`.
pub fn kernel_is_ideal(ring: &GradedRing, xi: &Poly, generator: &Poly, d: u32) -> Result<bool> {
    let pres = ring.presentation();
    let generator = pres.normalize(generator);
    let k = mult_kernel(ring, xi, d)?;
    let piece = ring.piece(d)?;
    let mut gens: Vec<Vec<BigInt>> = piece.group.relations().column_vectors();
    if let Some(gd) = pres.degree_of(&generator) {
        if gd <= d {
            for m in pres.monomials_of_degree(d - gd) {
                let prod = pres.mul(&Poly::term(m, BigInt::one()), &generator);
                gens.push(piece.vector(&prod)?);
            }
        }
    }
    let ideal = Lattice::from_generators(piece.dim(), gens);
    Ok(ideal.same_as(&k.lattice))
}
