use std::collections::HashMap;

use serde::Serialize;

use super::cyclotomic::{Cyc, Q};
use super::table::{CharacterTable, ClassFunction};
use crate::error::{Error, Result};
use crate::pcgroup::{make_group, Family, PcGroup};

/// The symbols `θ, ψ, χ, χ̄, ξ, ξ̄` evaluated on the classes of one table.
#[derive(Clone)]
struct Syms<'a> {
    t: &'a CharacterTable,
    n: u32,
    eps: i64,
    theta: Vec<i64>,
    psi: Vec<i64>,
    chi: ClassFunction,
    chib: ClassFunction,
    xi: ClassFunction,
    xib: ClassFunction,
}

impl Syms<'_> {
    fn lv(&self) -> u32 {
        self.t.level
    }
    fn k(&self) -> i64 {
        3i64.pow(self.n - 4)
    }
    fn lin(&self, exps: &[i64], p: i64, j: usize) -> Cyc {
        Cyc::zeta_pow(self.lv(), exps[j] * p)
    }
    fn int(&self, n: i64) -> Cyc {
        Cyc::integer(self.lv(), n)
    }
    /// `1 + ψ^k + ψ^{-k}` at class `j`.
    fn psi_triple(&self, j: usize) -> Cyc {
        let k = self.k();
        self.int(1).add(&self.lin(&self.psi, k, j)).add(&self.lin(&self.psi, -k, j))
    }
    fn theta_triple(&self, j: usize) -> Cyc {
        self.int(1).add(&self.lin(&self.theta, 1, j)).add(&self.lin(&self.theta, 2, j))
    }
    fn lambda2(&self, f: &ClassFunction, j: usize) -> Cyc {
        let c = &self.t.classes[j];
        f[j].mul(&f[j]).sub(&f[c.square]).scale(Q::new(1, 2))
    }
    fn lambda3(&self, f: &ClassFunction, j: usize) -> Cyc {
        let c = &self.t.classes[j];
        let (a, b, d) = (&f[j], &f[c.square], &f[c.cube]);
        a.pow(3).sub(&a.mul(b).scale(Q::from_integer(3))).add(&d.scale(Q::from_integer(2))).scale(Q::new(1, 6))
    }
}

type Side = fn(&Syms, usize) -> (Cyc, Cyc);

const TH: u8 = 1;
const PS: u8 = 2;
const CH: u8 = 4;
const XI: u8 = 8;

struct Relation {
    statement: &'static str,
    /// Symbols the relation mentions.
    deps: u8,
    /// Part of the ring structure, as opposed to the λ-operations.
    ring: bool,
    eval: Side,
}

const RELATIONS: &[Relation] = &[
    Relation { statement: "θ^3 = 1", deps: TH, ring: true, eval: |s, j| (s.lin(&s.theta, 3, j), s.int(1)) },
    Relation {
        statement: "ψ^(3^(n-3)) = 1",
        deps: PS,
        ring: true,
        eval: |s, j| (s.lin(&s.psi, 3 * s.k(), j), s.int(1)),
    },
    Relation {
        statement: "θχ = χ",
        deps: TH | CH,
        ring: true,
        eval: |s, j| (s.lin(&s.theta, 1, j).mul(&s.chi[j]), s.chi[j].clone()),
    },
    Relation {
        statement: "ψ^(3^(n-4))χ = χ",
        deps: PS | CH,
        ring: true,
        eval: |s, j| (s.lin(&s.psi, s.k(), j).mul(&s.chi[j]), s.chi[j].clone()),
    },
    Relation {
        statement: "χ^2 = 3χ̄",
        deps: CH,
        ring: true,
        eval: |s, j| (s.chi[j].mul(&s.chi[j]), s.chib[j].scale(Q::from_integer(3))),
    },
    Relation {
        statement: "χχ̄ = (1+θ+θ^2)(1+ψ^(3^(n-4))+ψ^(-3^(n-4)))",
        deps: TH | PS | CH,
        ring: true,
        eval: |s, j| (s.chi[j].mul(&s.chib[j]), s.theta_triple(j).mul(&s.psi_triple(j))),
    },
    Relation {
        statement: "ξχ = ξ(1+ψ^(3^(n-4))+ψ^(-3^(n-4)))",
        deps: PS | CH | XI,
        ring: true,
        eval: |s, j| (s.xi[j].mul(&s.chi[j]), s.xi[j].mul(&s.psi_triple(j))),
    },
    Relation {
        statement: "ξχ̄ = ξ(1+ψ^(3^(n-4))+ψ^(-3^(n-4)))",
        deps: PS | CH | XI,
        ring: true,
        eval: |s, j| (s.xi[j].mul(&s.chib[j]), s.xi[j].mul(&s.psi_triple(j))),
    },
    Relation {
        statement: "θξ = ξ",
        deps: TH | XI,
        ring: true,
        eval: |s, j| (s.lin(&s.theta, 1, j).mul(&s.xi[j]), s.xi[j].clone()),
    },
    Relation {
        statement: "ξξ̄ = χ + χ̄ + 1 + θ + θ^2",
        deps: TH | CH | XI,
        ring: true,
        eval: |s, j| (s.xi[j].mul(&s.xib[j]), s.chi[j].add(&s.chib[j]).add(&s.theta_triple(j))),
    },
    Relation {
        statement: "ξ^2 = ξ̄ψ(1+2ψ^(ε3^(n-4)))",
        deps: PS | XI,
        ring: true,
        eval: |s, j| {
            let twist = s.int(1).add(&s.lin(&s.psi, s.eps * s.k(), j).scale(Q::from_integer(2)));
            (s.xi[j].mul(&s.xi[j]), s.xib[j].mul(&s.lin(&s.psi, 1, j)).mul(&twist))
        },
    },
    Relation {
        statement: "Λ^2(χ) = χ̄ψ^3",
        deps: PS | CH,
        ring: false,
        eval: |s, j| (s.lambda2(&s.chi, j), s.chib[j].mul(&s.lin(&s.psi, 3, j))),
    },
    Relation {
        statement: "Λ^3(χ) = ψ^3",
        deps: PS | CH,
        ring: false,
        eval: |s, j| (s.lambda3(&s.chi, j), s.lin(&s.psi, 3, j)),
    },
    Relation {
        statement: "Λ^2(ξ) = ξ̄ψ^(1+ε3^(n-4))",
        deps: PS | XI,
        ring: false,
        eval: |s, j| (s.lambda2(&s.xi, j), s.xib[j].mul(&s.lin(&s.psi, 1 + s.eps * s.k(), j))),
    },
    Relation {
        statement: "Λ^3(ξ) = ψ^(1+ε3^(n-4))",
        deps: PS | XI,
        ring: false,
        eval: |s, j| (s.lambda3(&s.xi, j), s.lin(&s.psi, 1 + s.eps * s.k(), j)),
    },
];

/// Determinant-free forms of the λ-identities for `χ`, valid for every `n ≥ 4`.
const SUPPLEMENTARY: &[Relation] = &[
    Relation {
        statement: "Λ^2(χ) = χ̄", deps: CH, ring: false, eval: |s, j| (s.lambda2(&s.chi, j), s.chib[j].clone())
    },
    Relation { statement: "Λ^3(χ) = 1", deps: CH, ring: false, eval: |s, j| (s.lambda3(&s.chi, j), s.int(1)) },
];

fn holds(r: &Relation, s: &Syms) -> bool {
    (0..s.t.num_classes()).all(|j| {
        let (a, b) = (r.eval)(s, j);
        a.equals(&b)
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

/// Rows of the character table chosen for each symbol.
#[derive(Clone, Debug, Serialize)]
pub struct SymbolAssignment {
    pub theta: usize,
    pub psi: usize,
    pub chi: usize,
    pub xi: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TwistCheck {
    /// Relations of `G(n, source_eps)` tested in the representation ring of `G(n, -source_eps)`.
    pub source_eps: i32,
    pub xi_image: String,
    pub xi_bar_image: String,
    pub relations: Vec<RelationCheck>,
    pub holds_mod_3: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RepRingReport {
    pub group: String,
    pub n: u32,
    pub eps: i32,
    pub assignment: SymbolAssignment,
    pub relations: Vec<RelationCheck>,
    pub assignments_tried: usize,
    pub verified: bool,
    pub supplementary: Vec<RelationCheck>,
    pub twist: Vec<TwistCheck>,
}

/// Exponents `e_j` with `f(class j) = ζ^{e_j}`, when `f` is linear.
fn exponents(t: &CharacterTable, f: &ClassFunction) -> Option<Vec<i64>> {
    let n = 3i64.pow(t.level);
    f.iter().map(|v| (0..n).find(|&e| Cyc::zeta_pow(t.level, e).equals(v))).collect()
}

fn lin_order(exps: &[i64], level: u32) -> i64 {
    let n = 3i64.pow(level);
    (0..=level).map(|k| 3i64.pow(k)).find(|&o| exps.iter().all(|e| (e * o) % n == 0)).unwrap_or(n)
}

struct Candidates {
    theta: Vec<(usize, Vec<i64>)>,
    psi: Vec<(usize, Vec<i64>)>,
    chi: Vec<usize>,
    xi: Vec<usize>,
}

fn candidates(g: &PcGroup, t: &CharacterTable, n: u32) -> Result<Candidates> {
    let (a, b) = (g.generator(0), g.generator(1));
    let (ca, cb) = (t.class_of(a), t.class_of(b));
    let z = t.class_of(g.pow(b, 3i64.pow(n - 3)));
    let mut c = Candidates { theta: vec![], psi: vec![], chi: vec![], xi: vec![] };
    for (r, f) in t.characters.iter().enumerate() {
        match t.degree(f) {
            1 => {
                let e = exponents(t, f)
                    .ok_or_else(|| Error::Inconsistent("linear character off the unit circle".into()))?;
                let ord = lin_order(&e, t.level);
                if ord == 3 && e[cb] == 0 {
                    c.theta.push((r, e.clone()));
                }
                if ord == 3i64.pow(n - 3) && e[ca] == 0 {
                    c.psi.push((r, e));
                }
            }
            3 if f[z].equals(&f[0]) => c.chi.push(r),
            3 => c.xi.push(r),
            _ => {}
        }
    }
    for (sym, empty) in
        [("θ", c.theta.is_empty()), ("ψ", c.psi.is_empty()), ("χ", c.chi.is_empty()), ("ξ", c.xi.is_empty())]
    {
        if empty {
            return Err(Error::GeneratorMatchFailed(format!("no character qualifies as {sym}")));
        }
    }
    Ok(c)
}

/// Memoised relation checks over assignments of candidate rows to the symbols.
struct Search<'a> {
    t: &'a CharacterTable,
    n: u32,
    eps: i64,
    c: Candidates,
    memo: HashMap<(usize, [usize; 4]), bool>,
}

impl<'a> Search<'a> {
    fn syms(&self, a: [usize; 4]) -> Syms<'a> {
        let chi = self.t.characters[self.c.chi[a[2]]].clone();
        let xi = self.t.characters[self.c.xi[a[3]]].clone();
        Syms {
            t: self.t,
            n: self.n,
            eps: self.eps,
            theta: self.c.theta[a[0]].1.clone(),
            psi: self.c.psi[a[1]].1.clone(),
            chib: self.t.dual(&chi),
            chi,
            xib: self.t.dual(&xi),
            xi,
        }
    }

    fn check(&mut self, r: usize, a: [usize; 4]) -> bool {
        let d = RELATIONS[r].deps;
        let key = [TH, PS, CH, XI].iter().zip(a).map(|(&bit, i)| if d & bit != 0 { i } else { 0 }).collect::<Vec<_>>();
        let key = (r, [key[0], key[1], key[2], key[3]]);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let v = holds(&RELATIONS[r], &self.syms(a));
        self.memo.insert(key, v);
        v
    }

    fn assignments(&self) -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        for i in 0..self.c.theta.len() {
            for j in 0..self.c.psi.len() {
                for k in 0..self.c.chi.len() {
                    for l in 0..self.c.xi.len() {
                        out.push([i, j, k, l]);
                    }
                }
            }
        }
        out
    }

    /// First assignment satisfying every selected relation, otherwise one satisfying the most.
    fn best(&mut self, select: impl Fn(&Relation) -> bool) -> ([usize; 4], bool, usize) {
        let rels: Vec<usize> = (0..RELATIONS.len()).filter(|&r| select(&RELATIONS[r])).collect();
        let all = self.assignments();
        for (tried, &a) in all.iter().enumerate() {
            if rels.iter().all(|&r| self.check(r, a)) {
                return (a, true, tried + 1);
            }
        }
        let mut best = (all[0], 0);
        for &a in &all {
            let score = rels.iter().filter(|&&r| self.check(r, a)).count();
            if score > best.1 {
                best = (a, score);
            }
        }
        (best.0, false, all.len())
    }

    fn assignment(&self, a: [usize; 4]) -> SymbolAssignment {
        SymbolAssignment {
            theta: self.c.theta[a[0]].0,
            psi: self.c.psi[a[1]].0,
            chi: self.c.chi[a[2]],
            xi: self.c.xi[a[3]],
        }
    }

    fn checks(&mut self, a: [usize; 4], select: impl Fn(&Relation) -> bool) -> Vec<RelationCheck> {
        (0..RELATIONS.len())
            .filter(|&r| select(&RELATIONS[r]))
            .map(|r| RelationCheck { relation: RELATIONS[r].statement.to_string(), holds: self.check(r, a) })
            .collect()
    }
}

fn search<'a>(g: &PcGroup, t: &'a CharacterTable, n: u32, eps: i32) -> Result<Search<'a>> {
    let c = candidates(g, t, n)?;
    Ok(Search { t, n, eps: eps as i64, c, memo: HashMap::new() })
}

/// Checks every defining relation and λ-identity for the representation ring
/// of `G(n, ε)`, trying all assignments of table rows to the symbols.
pub fn verify_rep_ring_relations(n: u32, eps: i32) -> Result<RepRingReport> {
    if !(4..=6).contains(&n) {
        return Err(Error::BadParameter(format!("n = {n} outside 4..=6")));
    }
    let g = PcGroup::new(make_group(Family::G, n, eps)?)?;
    let t = CharacterTable::new(&g)?;
    let mut s = search(&g, &t, n, eps)?;
    let (a, verified, tried) = s.best(|_| true);
    let relations = s.checks(a, |_| true);
    let assignment = s.assignment(a);
    let syms = s.syms(a);
    let supplementary = SUPPLEMENTARY
        .iter()
        .map(|r| RelationCheck { relation: r.statement.to_string(), holds: holds(r, &syms) })
        .collect();
    let twist = if n >= 5 { twist_checks(n, eps)? } else { Vec::new() };
    Ok(RepRingReport {
        group: g.name().to_string(),
        n,
        eps,
        assignment,
        relations,
        assignments_tried: tried,
        verified,
        supplementary,
        twist,
    })
}

/// `ξ ↦ -ξψ^{2·3^{n-5}}`, `ξ̄ ↦ -ξ̄ψ^{7·3^{n-5}}` applied in `R(G(n,-source))`; each
/// ring relation of `G(n, source)` must then hold modulo 3.
fn twist_checks(n: u32, source: i32) -> Result<Vec<TwistCheck>> {
    let target = -source;
    let g = PcGroup::new(make_group(Family::G, n, target)?)?;
    let t = CharacterTable::new(&g)?;
    let mut s = search(&g, &t, n, target)?;
    let m = 3i64.pow(n - 5);
    let rels: Vec<usize> = (0..RELATIONS.len()).filter(|&r| RELATIONS[r].ring).collect();
    let mut first: Option<TwistCheck> = None;
    for a in s.assignments() {
        if !rels.iter().all(|&r| s.check(r, a)) {
            continue;
        }
        let own = s.syms(a);
        let mut tw = own.clone();
        tw.eps = source as i64;
        tw.xi = (0..t.num_classes()).map(|j| own.xi[j].mul(&own.lin(&own.psi, 2 * m, j)).neg()).collect();
        tw.xib = (0..t.num_classes()).map(|j| own.xib[j].mul(&own.lin(&own.psi, 7 * m, j)).neg()).collect();
        let ok = rels.iter().all(|&r| holds_mod3(&RELATIONS[r], &tw));
        if ok || first.is_none() {
            let relations: Vec<RelationCheck> = rels
                .iter()
                .map(|&r| RelationCheck {
                    relation: RELATIONS[r].statement.to_string(),
                    holds: holds_mod3(&RELATIONS[r], &tw),
                })
                .collect();
            let check = TwistCheck {
                source_eps: source,
                xi_image: format!("-ξψ^{}", 2 * m),
                xi_bar_image: format!("-ξ̄ψ^{}", 7 * m),
                relations,
                holds_mod_3: ok,
            };
            if ok {
                return Ok(vec![check]);
            }
            first = Some(check);
        }
    }
    Ok(first.into_iter().collect())
}

fn holds_mod3(r: &Relation, s: &Syms) -> bool {
    let diff: ClassFunction = (0..s.t.num_classes())
        .map(|j| {
            let (a, b) = (r.eval)(s, j);
            a.sub(&b)
        })
        .collect();
    if diff.iter().all(Cyc::is_zero) {
        return true;
    }
    match s.t.decompose(&diff) {
        Ok(coeffs) => coeffs.iter().all(|k| k % 3 == 0),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold_for_order_81() {
        for eps in [1, -1] {
            let r = verify_rep_ring_relations(4, eps).unwrap();
            assert!(r.verified, "{:?}", r.relations);
            assert_eq!(r.relations.len(), 15);
            assert!(r.relations.iter().all(|c| c.holds));
            assert!(r.twist.is_empty());
        }
    }

    #[test]
    fn range_is_checked() {
        assert!(matches!(verify_rep_ring_relations(3, 1), Err(Error::BadParameter(_))));
        assert!(matches!(verify_rep_ring_relations(7, 1), Err(Error::BadParameter(_))));
    }

    #[test]
    fn linear_order() {
        assert_eq!(lin_order(&[0, 3, 6], 2), 3);
        assert_eq!(lin_order(&[0, 1], 2), 9);
        assert_eq!(lin_order(&[0, 0], 2), 1);
    }
}
