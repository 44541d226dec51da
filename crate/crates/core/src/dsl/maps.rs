use num_bigint::BigInt;
use num_traits::Pow;

use super::parse_poly;
use super::rings::{builtin_ring, split_params, Provenance};
use crate::error::{Error, Result};
use crate::graded::{Poly, RingMap, RingPresentation};

pub const MAP_BUILTINS: &[&str] = &["prop7.resM", "prop7.resP", "cor14(n)", "scale3(n,eps)"];

fn named_map(source: RingPresentation, target: RingPresentation, images: &[(&str, String)]) -> Result<RingMap> {
    let parsed: Vec<(&str, Poly)> =
        images.iter().map(|(g, t)| Ok((*g, parse_poly(&target, t)?))).collect::<Result<_>>()?;
    RingMap::from_named(source, target, &parsed)
}

/// Restriction from `thm10.G` to `prop4.M`.
pub fn restriction_to_m() -> Result<RingMap> {
    restriction_to_m_from("thm10.G")
}

/// Restriction to `prop4.M` from either reading of the `G̃` ring (`thm10.G` or `thm10.G-stated`).
pub fn restriction_to_m_from(source: &str) -> Result<RingMap> {
    let (s, _) = builtin_ring(source)?;
    let (t, _) = builtin_ring("prop4.M")?;
    named_map(
        s,
        t,
        &[
            ("alpha", "0".into()),
            ("delta1", "3*tau".into()),
            ("zeta", "beta^2*gamma - gamma^3".into()),
            ("delta2", "3*tau^2 - tau*beta - gamma^2 + gamma*beta + beta^2".into()),
            ("delta3", "tau^3 + tau^2*beta - tau*gamma^2 + tau*gamma*beta".into()),
        ],
    )
}

/// Restriction from `thm10.G` to `thm6.P`.
pub fn restriction_to_p() -> Result<RingMap> {
    restriction_to_p_from("thm10.G")
}

pub fn restriction_to_p_from(source: &str) -> Result<RingMap> {
    let (s, _) = builtin_ring(source)?;
    let (t, _) = builtin_ring("thm6.P")?;
    named_map(s, t, &[("beta", "0".into()), ("mu", "0".into()), ("zeta", "alpha^2*gamma - gamma^3".into())])
}

/// The primed generators of `H*(G(n,1))`: a map from the `ε = -1` presentation to the `ε = 1` ring.
pub fn primed_map(n: u32) -> Result<RingMap> {
    if n < 5 {
        return Err(Error::BadParameter(format!("the primed map needs n >= 5, got {n}")));
    }
    let (s, _) = builtin_ring(&format!("thm13.G({n},-1)"))?;
    let (t, _) = builtin_ring(&format!("thm13.G({n},1)"))?;
    let c = BigInt::from(1) + BigInt::from(3).pow(n - 4);
    named_map(s, t, &[("delta2", format!("{c}*delta2")), ("delta3", format!("{c}*delta3"))])
}

/// Endomorphism of `thm13.G(n,eps)` scaling each even generator of degree `2k` by `3^k`
/// and killing the odd ones. It is a ring map but not onto in degree 2.
pub fn scale3_map(n: u32, eps: i32) -> Result<RingMap> {
    let (r, _) = builtin_ring(&format!("thm13.G({n},{eps})"))?;
    let images: Vec<(&str, String)> = r
        .generators()
        .iter()
        .map(|g| {
            let img =
                if g.degree % 2 == 1 { "0".to_string() } else { format!("{}*{}", 3u64.pow(g.degree / 2), g.name) };
            (g.name.as_str(), img)
        })
        .collect();
    named_map(r.clone(), r.clone(), &images)
}

/// A builtin ring map by name, e.g. `prop7.resM` or `cor14(5)`.
pub fn builtin_map(spec: &str) -> Result<(RingMap, Provenance)> {
    let (name, params) = split_params(spec)?;
    let prov = |encodes: &str| Provenance {
        builtin: spec.trim().to_string(),
        encodes: encodes.to_string(),
        variants: Vec::new(),
    };
    let n_of = |p: i64| u32::try_from(p).map_err(|_| Error::BadParameter(format!("bad n in `{spec}`")));
    let eps_of = |p: i64| i32::try_from(p).map_err(|_| Error::BadParameter(format!("bad eps in `{spec}`")));
    match (name.as_str(), params.as_slice()) {
        ("prop7.resM", []) => Ok((restriction_to_m()?, prov("restriction from H*(G~) to H*(M~)"))),
        ("prop7.resP", []) => Ok((restriction_to_p()?, prov("restriction from H*(G~) to H*(P~)"))),
        ("cor14", [n]) => Ok((
            primed_map(n_of(*n)?)?,
            prov("primed generators of H*(G(n,1)) satisfying the relations of H*(G(n,-1))"),
        )),
        ("scale3", [n, e]) => {
            Ok((scale3_map(n_of(*n)?, eps_of(*e)?)?, prov("delta1 -> 3 delta1, scaling degree 2k generators by 3^k")))
        }
        _ => Err(Error::UnknownBuiltin(spec.trim().to_string())),
    }
}
