use num_bigint::BigInt;
use num_traits::Pow;
use serde::Serialize;

use super::parse_ring;
use crate::error::{Error, Result};
use crate::graded::RingPresentation;

/// Which presentation a builtin encodes and which reading choices are active.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Provenance {
    pub builtin: String,
    pub encodes: String,
    pub variants: Vec<String>,
}

pub const RING_BUILTINS: &[&str] =
    &["prop4.M", "thm6.P", "thm6.Pfin(n)", "thm10.G", "thm10.G-stated", "lemma8.gr", "thm13.G(n,eps)"];

fn pow3(e: u32) -> BigInt {
    BigInt::from(3).pow(e)
}

pub fn m_tilde_text() -> String {
    "ring prop4.M {
  gen beta deg 2, mu deg 3, tau deg 2, gamma deg 2;
  rel 3*beta, 3*gamma, 3*mu;
}
"
    .to_string()
}

const P_TILDE_GENS: &str = "alpha deg 2, delta1 deg 2, delta2 deg 4, delta3 deg 6, gamma deg 2";

const P_TILDE_RELS: &str = "3*gamma, 3*alpha, alpha^3*gamma = gamma^3*alpha,
    alpha*delta1, gamma*delta1, alpha*delta2, gamma*delta2 = -gamma^3 + alpha^2*gamma,
    delta1^2 = 3*delta2, delta1*delta2 = 9*delta3,
    delta2^2 = 3*delta3*delta1 + gamma^4 - alpha^2*gamma^2";

pub fn p_tilde_text() -> String {
    format!("ring thm6.P {{\n  gen {P_TILDE_GENS};\n  rel {P_TILDE_RELS};\n}}\n")
}

/// Even part of `P(n,ε)` extended by the two degree-3 module generators.
pub fn p_finite_text(n: u32) -> Result<String> {
    if n < 4 {
        return Err(Error::BadParameter(format!("P(n,eps) needs n >= 4, got {n}")));
    }
    let mu12 = if n == 4 { "mu1*mu2 = 3*delta3" } else { "mu1*mu2" };
    Ok(format!(
        "ring thm6.Pfin({n}) {{
  gen {P_TILDE_GENS}, mu1 deg 3, mu2 deg 3;
  rel {P_TILDE_RELS},
    {}*delta1,
    3*mu1, 3*mu2, mu1*delta1, mu2*delta1, mu1*gamma = mu2*alpha,
    mu1*delta2, mu2*delta2 = -gamma^2*mu2 - alpha^2*mu2, alpha^3*mu2 = gamma^3*mu1,
    {mu12};
}}
",
        pow3(n - 4)
    ))
}

const G_TILDE_GENS: &str = "alpha deg 2, beta deg 2, delta1 deg 2, mu deg 3, delta2 deg 4, delta3 deg 6, zeta deg 6";

fn g_tilde_with(name: &str, delta1_sq: &str) -> String {
    format!(
        "ring {name} {{
  gen {G_TILDE_GENS};
  rel 3*alpha, 3*beta, 3*mu, 3*zeta,
    alpha*delta1 = -alpha*beta, {delta1_sq}, alpha*delta2, delta1*delta2 = 9*delta3,
    alpha*zeta, delta1*zeta, alpha^2*beta = -delta1*beta^2,
    alpha*mu, delta1*mu,
    delta2^3 - 27*delta3^2 + zeta^2 = -delta3*(delta1*beta^2 + beta^3) + delta2^2*beta^2
      + delta2*beta^4 - (delta1*beta^5 + beta^6);
}}
"
    )
}

pub fn g_tilde_text() -> String {
    g_tilde_with("thm10.G", "delta1^2 = 3*delta2 - delta1*beta")
}

/// The alternative reading `δ₁² = 3δ₂` (the printed `3δ₂β` is not homogeneous).
pub fn g_tilde_stated_text() -> String {
    g_tilde_with("thm10.G-stated", "delta1^2 = 3*delta2")
}

pub fn lemma8_text() -> String {
    format!(
        "ring lemma8.gr {{
  gen {G_TILDE_GENS};
  rel 3*alpha, 3*beta, 3*mu, 3*zeta,
    alpha*delta1, delta1^2 = 3*delta2, alpha*delta2, delta1*delta2 = 9*delta3,
    alpha*zeta, delta1*zeta, alpha^2*beta,
    alpha*mu, delta1*mu, 27*delta3^2 - delta2^3 = zeta^2;
}}
"
    )
}

pub fn g_finite_text(n: u32, eps: i32) -> Result<String> {
    if n < 5 {
        return Err(Error::BadParameter(format!("G(n,eps) ring needs n >= 5, got {n}")));
    }
    if eps != 1 && eps != -1 {
        return Err(Error::BadParameter(format!("eps must be 1 or -1, got {eps}")));
    }
    let coeff = BigInt::from(1) + BigInt::from(eps) * pow3(n - 4);
    Ok(format!(
        "ring thm13.G({n},{eps}) {{
  gen alpha deg 2, delta1 deg 2, mu deg 3, delta2 deg 4, nu deg 5, delta3 deg 6, zeta deg 6;
  rel 3*alpha, 3*mu, 3*nu, 3*zeta,
    {}*delta1, {}*delta2, {}*delta3,
    3*delta2 = {coeff}*delta1^2, delta1*alpha, alpha*mu,
    9*delta3 = delta1*delta2, delta1*mu, delta2*alpha,
    zeta*delta1, zeta*alpha, delta2^3 = 27*delta3^2 - zeta^2,
    delta1*nu, delta2*nu = zeta*mu, zeta*nu = -delta2^2*mu, mu*nu;
}}
",
        pow3(n - 3),
        pow3(n - 2),
        pow3(n - 1)
    ))
}

/// Splits `name(a,b)` into `("name", ["a", "b"])`.
pub(crate) fn split_params(spec: &str) -> Result<(String, Vec<i64>)> {
    let spec = spec.trim();
    let Some(open) = spec.find('(') else { return Ok((spec.to_string(), Vec::new())) };
    let Some(inner) = spec[open + 1..].strip_suffix(')') else {
        return Err(Error::UnknownBuiltin(spec.to_string()));
    };
    let params = inner
        .split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| Error::UnknownBuiltin(spec.to_string())))
        .collect::<Result<Vec<_>>>()?;
    Ok((spec[..open].to_string(), params))
}

fn param_u32(p: i64, spec: &str) -> Result<u32> {
    u32::try_from(p).map_err(|_| Error::BadParameter(format!("bad parameter in `{spec}`")))
}

/// Text of a builtin ring, e.g. `thm10.G`, `thm6.Pfin(5)`, `thm13.G(5,-1)`.
pub fn builtin_ring_text(spec: &str) -> Result<(String, Provenance)> {
    let (name, params) = split_params(spec)?;
    let prov = |encodes: &str, variants: &[&str]| Provenance {
        builtin: spec.trim().to_string(),
        encodes: encodes.to_string(),
        variants: variants.iter().map(|s| s.to_string()).collect(),
    };
    let odd_sq = "odd-degree generators square to zero";
    let out = match (name.as_str(), params.as_slice()) {
        ("prop4.M", []) => {
            (m_tilde_text(), prov("integral cohomology of M~ = T x C3 x C3: tau, beta, gamma, mu", &[odd_sq]))
        }
        ("thm6.P", []) | ("thm6.P", [_]) => {
            (p_tilde_text(), prov("integral cohomology of P~: alpha, gamma, delta1, delta2, delta3", &[]))
        }
        ("thm6.Pfin", [n]) | ("thm6.Pfin", [n, _]) => {
            let n = param_u32(*n, spec)?;
            let case = if n == 4 { "mu1*mu2 = 3*delta3 (n = 4 case)" } else { "mu1*mu2 = 0 (n > 4 case)" };
            (
                p_finite_text(n)?,
                prov(
                    "integral cohomology of P(n,eps): P~ modulo 3^(n-4)*delta1, with mu1, mu2 as ring generators",
                    &[odd_sq, case],
                ),
            )
        }
        ("thm10.G", []) => (
            g_tilde_text(),
            prov(
                "integral cohomology of the Lie group G~: seven generators",
                &[
                    odd_sq,
                    "delta1^2 = 3*delta2 - delta1*beta (derived form; the printed 3*delta2*beta is inhomogeneous)",
                ],
            ),
        ),
        ("thm10.G-stated", []) => (
            g_tilde_stated_text(),
            prov(
                "integral cohomology of the Lie group G~, alternative reading",
                &[odd_sq, "delta1^2 = 3*delta2 (homogeneous reading of the printed 3*delta2*beta)"],
            ),
        ),
        ("lemma8.gr", []) => {
            (lemma8_text(), prov("associated graded ring of H*(G~) filtered by powers of beta (E2 page)", &[odd_sq]))
        }
        ("thm13.G", [n, e]) => {
            let n = param_u32(*n, spec)?;
            let e = i32::try_from(*e).map_err(|_| Error::BadParameter(format!("bad eps in `{spec}`")))?;
            (g_finite_text(n, e)?, prov("integral cohomology ring of G(n,eps), n >= 5", &[odd_sq]))
        }
        _ => return Err(Error::UnknownBuiltin(spec.to_string())),
    };
    Ok(out)
}

pub fn builtin_ring(spec: &str) -> Result<(RingPresentation, Provenance)> {
    let (text, prov) = builtin_ring_text(spec)?;
    Ok((parse_ring(&text)?, prov))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::print_ring;

    #[test]
    fn g_tilde_has_seven_generators() {
        assert_eq!(builtin_ring("thm10.G").unwrap().0.ngens(), 7);
    }

    #[test]
    fn m_tilde_generators() {
        let (r, _) = builtin_ring("prop4.M").unwrap();
        let names: Vec<&str> = r.generators().iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, vec!["beta", "mu", "tau", "gamma"]);
    }

    #[test]
    fn g_finite_contains_nine_delta1() {
        let (r, _) = builtin_ring("thm13.G(5,-1)").unwrap();
        let nine_d1 = r.gen("delta1").unwrap().scale(&BigInt::from(9));
        assert!(r.relations().contains(&nine_d1));
    }

    #[test]
    fn unknown_builtin() {
        assert_eq!(builtin_ring("thm99.X").unwrap_err(), Error::UnknownBuiltin("thm99.X".into()));
        assert!(builtin_ring("thm13.G(4,1)").is_err());
    }

    #[test]
    fn corpus_round_trips() {
        for spec in [
            "prop4.M",
            "thm6.P",
            "thm6.Pfin(4)",
            "thm6.Pfin(5)",
            "thm10.G",
            "thm10.G-stated",
            "lemma8.gr",
            "thm13.G(5,1)",
            "thm13.G(6,-1)",
        ] {
            let (r, _) = builtin_ring(spec).unwrap();
            let printed = print_ring(&r);
            let again = parse_ring(&printed).unwrap();
            assert_eq!(again, r, "{spec}");
            assert_eq!(print_ring(&again), printed, "{spec}");
        }
    }
}
