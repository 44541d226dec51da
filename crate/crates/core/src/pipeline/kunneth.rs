use num_bigint::BigInt;

use super::fingerprint::{Fingerprint, FingerprintEntry};
use crate::error::{Error, Result};
use crate::linalg::AbelianInvariants;

/// `H^m(C_n; ℤ)` for `m ≤ max_degree`: `ℤ, 0, C_n, 0, C_n, …`.
pub fn cyclic_cohomology(n: &BigInt, max_degree: u32) -> Vec<AbelianInvariants> {
    (0..=max_degree)
        .map(|m| match m {
            0 => AbelianInvariants::from_cyclic_orders(1, &[]),
            _ if m % 2 == 1 => AbelianInvariants::trivial(),
            _ => AbelianInvariants::from_cyclic_orders(0, std::slice::from_ref(n)),
        })
        .collect()
}

/// `H^m(X × Y) = ⊕_{i+j=m} Hⁱ⊗Hʲ ⊕ ⊕_{i+j=m+1} Tor(Hⁱ, Hʲ)`.
pub fn kunneth_product(x: &[AbelianInvariants], y: &[AbelianInvariants]) -> Vec<AbelianInvariants> {
    let top = x.len().min(y.len());
    (0..top)
        .map(|m| {
            let mut acc = AbelianInvariants::trivial();
            for i in 0..=m {
                acc = acc.direct_sum(&x[i].tensor(&y[m - i]));
            }
            for i in 0..top.min(m + 2) {
                let j = m + 1 - i;
                if j < top {
                    acc = acc.direct_sum(&x[i].tor(&y[j]));
                }
            }
            acc
        })
        .collect()
}

/// Integral cohomology of `∏ C_{nᵢ}` in degrees `0..=max_degree`.
pub fn abelian_cohomology(orders: &[BigInt], max_degree: u32) -> Result<Vec<AbelianInvariants>> {
    if let Some(bad) = orders.iter().find(|n| **n < BigInt::from(2)) {
        return Err(Error::BadParameter(format!("cyclic orders must be at least 2, got {bad}")));
    }
    let mut acc: Vec<AbelianInvariants> = (0..=max_degree)
        .map(|m| if m == 0 { AbelianInvariants::from_cyclic_orders(1, &[]) } else { AbelianInvariants::trivial() })
        .collect();
    for n in orders {
        acc = kunneth_product(&acc, &cyclic_cohomology(n, max_degree));
    }
    Ok(acc)
}

/// The fingerprint of an abelian group from its cyclic factors; every type is determined.
pub fn kunneth_abelian(label: &str, orders: &[BigInt], max_degree: u32) -> Result<Fingerprint> {
    let groups = abelian_cohomology(orders, max_degree)?;
    Ok(Fingerprint {
        label: label.to_string(),
        entries: groups.iter().enumerate().map(|(m, g)| FingerprintEntry::known(m as u32, g)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orders(v: &[u64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclic_81() {
        let h = abelian_cohomology(&orders(&[81]), 8).unwrap();
        for (m, g) in h.iter().enumerate().skip(1) {
            assert_eq!(g.to_string(), if m % 2 == 0 { "C81" } else { "0" });
        }
    }

    #[test]
    fn c3_times_c27() {
        let h = abelian_cohomology(&orders(&[3, 27]), 4).unwrap();
        assert_eq!(h[0].to_string(), "Z");
        assert_eq!(h[1].to_string(), "0");
        assert_eq!(h[2], AbelianInvariants::from_cyclic_orders(0, &orders(&[3, 27])));
        assert_eq!(h[3].to_string(), "C3");
    }

    #[test]
    fn rejects_trivial_factor() {
        assert!(abelian_cohomology(&orders(&[1]), 3).is_err());
    }
}
