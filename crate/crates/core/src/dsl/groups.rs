use super::rings::{split_params, Provenance};
use crate::error::{Error, Result};
use crate::pcgroup::{make_group, Family, PcPresentation};

pub const GROUP_BUILTINS: &[&str] = &["G(n,eps)", "G'(4)", "E", "M(n)", "N(n)", "P(n,eps)", "wreath"];

/// A builtin pc-presentation, e.g. `G(5,-1)`, `G'(4)`, `P(5,1)`, `wreath`.
pub fn builtin_group(spec: &str) -> Result<(PcPresentation, Provenance)> {
    let (name, params) = split_params(spec)?;
    let unknown = || Error::UnknownBuiltin(spec.trim().to_string());
    let u = |p: i64| u32::try_from(p).map_err(|_| Error::BadParameter(format!("bad n in `{spec}`")));
    let e = |p: i64| i32::try_from(p).map_err(|_| Error::BadParameter(format!("bad eps in `{spec}`")));
    let (family, n, eps, encodes) = match (name.as_str(), params.as_slice()) {
        ("G", [n, eps]) => {
            (Family::G, u(*n)?, e(*eps)?, "A^3 = B^(3^(n-2)) = C^3 = [B,C] = 1, [B,A] = C, [C,A] = B^(eps 3^(n-3))")
        }
        ("G'", [4]) | ("G'", []) | ("Gprime", []) => (Family::GPrime, 4, 1, "G(4,-1) with A^3 = B^-3"),
        ("E", []) => (Family::E, 3, 1, "non-abelian of order 27 and exponent 3"),
        ("M", [n]) | ("M", [n, _]) => (Family::M, u(*n)?, 1, "maximal subgroup containing B: C_(3^(n-2)) + C3"),
        ("N", [n]) | ("N", [n, _]) => (Family::N, u(*n)?, 1, "intersection of the maximal subgroups: C_(3^(n-3)) + C3"),
        ("P", [n, eps]) => (Family::P, u(*n)?, e(*eps)?, "maximal subgroup containing A, generated by A, C and B^3"),
        ("wreath", []) | ("C3wrC3", []) => (Family::Wreath, 4, 1, "C3 wr C3, the kernel of delta1"),
        _ => return Err(unknown()),
    };
    let pres = make_group(family, n, eps)?;
    Ok((
        pres,
        Provenance {
            builtin: spec.trim().to_string(),
            encodes: encodes.to_string(),
            variants: if family == Family::G || family == Family::P {
                vec!["[x,y] = x^-1 y^-1 x y".to_string()]
            } else {
                Vec::new()
            },
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::{parse_group, print_group};

    #[test]
    fn registry() {
        assert_eq!(builtin_group("G(4,1)").unwrap().0.nominal_order(), 81);
        assert_eq!(builtin_group("G'(4)").unwrap().0.name, "G'(4)");
        assert!(matches!(builtin_group("Q(4)"), Err(Error::UnknownBuiltin(_))));
        assert!(matches!(builtin_group("G(3,1)"), Err(Error::BadParameter(_))));
    }

    #[test]
    fn corpus_round_trips() {
        for spec in ["G(4,1)", "G(4,-1)", "G(6,1)", "G'(4)", "E", "M(5)", "N(5)", "P(5,-1)", "wreath"] {
            let p = builtin_group(spec).unwrap().0;
            let text = print_group(&p);
            assert_eq!(parse_group(&text).unwrap(), p, "{spec}");
        }
    }
}
