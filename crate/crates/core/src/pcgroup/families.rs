use super::presentation::PcPresentation;
use crate::error::{Error, Result};

/// Named families of 3-groups with builtin presentations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `G(n,ε)`, order `3ⁿ`.
    G,
    /// `G'(4)`, order 81.
    GPrime,
    /// Extraspecial of order 27 and exponent 3.
    E,
    /// `M(n,ε) ≅ C_{3^{n-2}} ⊕ C₃`.
    M,
    /// `N(n,ε) ≅ C_{3^{n-3}} ⊕ C₃`.
    N,
    /// `P(n,ε)`, the maximal subgroup of `G(n,ε)` containing `A`.
    P,
    /// `C₃ ≀ C₃`.
    Wreath,
}

impl Family {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "G" => Family::G,
            "G'" | "Gprime" | "G'(4)" => Family::GPrime,
            "E" => Family::E,
            "M" => Family::M,
            "N" => Family::N,
            "P" => Family::P,
            "wreath" | "W" => Family::Wreath,
            _ => return Err(Error::UnknownBuiltin(s.to_string())),
        })
    }
}

fn check_eps(eps: i32) -> Result<()> {
    if eps == 1 || eps == -1 {
        Ok(())
    } else {
        Err(Error::BadParameter(format!("eps must be 1 or -1, got {eps}")))
    }
}

fn p3(e: u32) -> u64 {
    3u64.pow(e)
}

pub fn make_group(family: Family, n: u32, eps: i32) -> Result<PcPresentation> {
    let need = |min: u32| {
        if n < min {
            Err(Error::BadParameter(format!("n must be at least {min}, got {n}")))
        } else if n > 12 {
            Err(Error::BadParameter(format!("n = {n} is out of range")))
        } else {
            Ok(())
        }
    };
    match family {
        Family::G => {
            need(4)?;
            check_eps(eps)?;
            let mut p = PcPresentation::new(format!("G({n},{eps})"), &[("A", 3), ("B", p3(n - 2)), ("C", 3)])?;
            p.set_commutator("B", "A", "C")?;
            p.set_commutator("C", "A", &format!("B^{}", eps as i64 * p3(n - 3) as i64))?;
            Ok(p)
        }
        Family::GPrime => {
            if n != 4 {
                return Err(Error::BadParameter(format!("G'(n) exists only for n = 4, got {n}")));
            }
            let mut p = PcPresentation::new("G'(4)", &[("A", 3), ("B", 9), ("C", 3)])?;
            p.set_power("A", "B^-3")?;
            p.set_commutator("B", "A", "C")?;
            p.set_commutator("C", "A", "B^-3")?;
            Ok(p)
        }
        Family::E => {
            let mut p = PcPresentation::new("E", &[("A", 3), ("B", 3), ("C", 3)])?;
            p.set_commutator("B", "A", "C")?;
            Ok(p)
        }
        Family::M => {
            need(4)?;
            PcPresentation::new(format!("M({n},{eps})"), &[("B", p3(n - 2)), ("C", 3)])
        }
        Family::N => {
            need(4)?;
            PcPresentation::new(format!("N({n},{eps})"), &[("D", p3(n - 3)), ("C", 3)])
        }
        Family::P => {
            need(4)?;
            check_eps(eps)?;
            let mut p = PcPresentation::new(format!("P({n},{eps})"), &[("A", 3), ("C", 3), ("D", p3(n - 3))])?;
            p.set_commutator("C", "A", &format!("D^{}", eps as i64 * p3(n - 4) as i64))?;
            Ok(p)
        }
        Family::Wreath => {
            let mut p = PcPresentation::new("C3wrC3", &[("A", 3), ("B", 3), ("C", 3), ("D", 3)])?;
            p.set_commutator("B", "A", "C")?;
            p.set_commutator("C", "A", "D")?;
            Ok(p)
        }
    }
}

/// `G(n,ε)` shorthand.
pub fn g_n_eps(n: u32, eps: i32) -> Result<PcPresentation> {
    make_group(Family::G, n, eps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcgroup::PcGroup;

    fn grp(f: Family, n: u32, eps: i32) -> PcGroup {
        PcGroup::new(make_group(f, n, eps).unwrap()).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(grp(Family::G, 4, 1).order(), 81);
        assert_eq!(grp(Family::G, 6, -1).order(), 729);
        assert_eq!(grp(Family::GPrime, 4, 1).order(), 81);
        assert_eq!(grp(Family::E, 0, 1).order(), 27);
        assert_eq!(grp(Family::Wreath, 0, 1).order(), 81);
        assert_eq!(grp(Family::P, 5, 1).order(), 81);
    }

    #[test]
    fn defining_relations_hold() {
        let g = grp(Family::G, 4, 1);
        let (a, b, c) = (g.generator(0), g.generator(1), g.generator(2));
        assert_eq!(g.mul(b, a), g.mul(g.mul(a, b), c));
        assert_eq!(g.mul(c, a), g.mul(g.mul(a, c), g.pow(b, 3)));
        let gm = grp(Family::G, 4, -1);
        let (a, b, c) = (gm.generator(0), gm.generator(1), gm.generator(2));
        assert_eq!(gm.commutator(c, a), gm.pow(b, -3));
    }

    #[test]
    fn e_has_exponent_three() {
        let e = grp(Family::E, 0, 1);
        assert!(e.elements().all(|x| e.element_order(x) <= 3));
        let gp = grp(Family::GPrime, 4, 1);
        assert_eq!(gp.element_order(gp.generator(0)), 9);
    }

    #[test]
    fn bad_parameters() {
        assert!(make_group(Family::G, 3, 1).is_err());
        assert!(make_group(Family::G, 4, 2).is_err());
        assert!(make_group(Family::GPrime, 5, 1).is_err());
    }

    #[test]
    fn inconsistent_presentation_is_rejected() {
        let mut p = PcPresentation::new("bad", &[("A", 3), ("B", 3), ("C", 3)]).unwrap();
        p.set_commutator("B", "A", "C").unwrap();
        p.set_power("A", "B").unwrap();
        assert!(matches!(PcGroup::new(p), Err(Error::Inconsistent(_))));
    }
}
