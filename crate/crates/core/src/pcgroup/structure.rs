use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use serde::Serialize;

use super::blackbox::{closure, normal_closure, pc_from_blackbox, quotient_presentation, Quotient};
use super::group::PcGroup;
use super::presentation::PcPresentation;
use crate::error::{Error, Result};
use crate::linalg::{cokernel, AbelianInvariants, FgAbGroup, IntMatrix};

/// Largest order accepted by the isomorphism search and by maximal subgroup enumeration.
pub const SEARCH_BOUND: usize = 729;

/// A subgroup given by its sorted element list and a generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: Vec<u32>,
    pub generators: Vec<u32>,
}

impl Subgroup {
    pub fn generated_by(g: &PcGroup, gens: &[u32]) -> Result<Self> {
        let mut elements = closure(g, gens)?;
        elements.sort_unstable();
        Ok(Subgroup { elements, generators: gens.to_vec() })
    }

    fn from_elements(g: &PcGroup, mut elements: Vec<u32>) -> Result<Self> {
        elements.sort_unstable();
        let generators = small_generating_set(g, &elements)?;
        Ok(Subgroup { elements, generators })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_abelian(&self, g: &PcGroup) -> bool {
        self.generators.iter().all(|&x| self.generators.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
    }

    /// Isomorphism type when abelian, read off from the sizes of `{x : x^{3^k} = 1}`.
    pub fn abelian_invariants(&self, g: &PcGroup) -> Option<AbelianInvariants> {
        if !self.is_abelian(g) {
            return None;
        }
        Some(abelian_type(g, &self.elements))
    }

    pub fn presentation(&self, g: &PcGroup, name: &str) -> Result<PcPresentation> {
        Ok(pc_from_blackbox(g, &self.generators, name)?.presentation)
    }
}

fn abelian_type(g: &PcGroup, elems: &[u32]) -> AbelianInvariants {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &x in elems {
        let o = g.element_order(x);
        *counts.entry(log3(o)).or_default() += 1;
    }
    let max_k = counts.keys().copied().max().unwrap_or(0);
    // |Ω_k| = 3^{Σ min(aᵢ, k)}
    let omega: Vec<u32> = (0..=max_k).map(|k| log3(counts.range(..=k).map(|(_, c)| *c as u64).sum())).collect();
    let mut orders = Vec::new();
    for k in 1..=max_k as usize {
        let at_least_k = omega[k] - omega[k - 1];
        let at_least_k1 = if k < max_k as usize { omega[k + 1] - omega[k] } else { 0 };
        for _ in 0..at_least_k - at_least_k1 {
            orders.push(BigInt::from(3u64.pow(k as u32)));
        }
    }
    AbelianInvariants::from_cyclic_orders(0, &orders)
}

fn log3(mut x: u64) -> u32 {
    let mut k = 0;
    while x > 1 {
        x /= 3;
        k += 1;
    }
    k
}

fn small_generating_set(g: &PcGroup, elems: &[u32]) -> Result<Vec<u32>> {
    let mut gens = Vec::new();
    let mut span: HashSet<u32> = HashSet::from([0]);
    for &x in elems {
        if span.len() == elems.len() {
            break;
        }
        if !span.contains(&x) {
            gens.push(x);
            span = closure(g, &gens)?.into_iter().collect();
        }
    }
    Ok(gens)
}

pub fn center_subgroup(g: &PcGroup) -> Result<Subgroup> {
    let gens = g.generators();
    let elems: Vec<u32> = g.elements().filter(|&x| gens.iter().all(|&s| g.mul(x, s) == g.mul(s, x))).collect();
    Subgroup::from_elements(g, elems)
}

pub fn center(g: &PcGroup) -> Result<FgAbGroup> {
    let z = center_subgroup(g)?;
    Ok(FgAbGroup::from_invariants(&abelian_type(g, &z.elements)))
}

pub fn derived_subgroup(g: &PcGroup) -> Result<Subgroup> {
    let gens = g.generators();
    let comms: Vec<u32> =
        gens.iter().flat_map(|&x| gens.iter().map(move |&y| (x, y))).map(|(x, y)| g.commutator(x, y)).collect();
    let (ngens, elems) = normal_closure(g, &gens, &comms)?;
    let mut s = Subgroup::from_elements(g, elems)?;
    if s.generators.is_empty() && !ngens.is_empty() {
        s.generators = ngens;
    }
    Ok(s)
}

/// Relation matrix of the abelianization: one row per generator, one column
/// per power or commutator relation (exponent sums of `lhs · rhs⁻¹`).
pub fn abelianization_matrix(p: &PcPresentation) -> IntMatrix {
    let k = p.ngens();
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    let sums = |w: &[(usize, i64)], v: &mut Vec<i64>| {
        for &(g, e) in w {
            v[g] -= e;
        }
    };
    for i in 0..k {
        let mut v = vec![0i64; k];
        v[i] = p.rel_orders[i] as i64;
        sums(&p.powers[i], &mut v);
        cols.push(v.into_iter().map(BigInt::from).collect());
    }
    for i in 0..k {
        for j in i + 1..k {
            let w = p.commutator(j, i);
            if w.is_empty() {
                continue;
            }
            let mut v = vec![0i64; k];
            sums(w, &mut v);
            cols.push(v.into_iter().map(BigInt::from).collect());
        }
    }
    IntMatrix::from_columns(k, &cols)
}

pub fn abelianization(p: &PcPresentation) -> FgAbGroup {
    cokernel(&abelianization_matrix(p))
}

pub fn exponent(g: &PcGroup) -> u64 {
    g.elements().map(|x| g.element_order(x)).max().unwrap_or(1)
}

/// Conjugacy classes, each sorted, in order of their smallest element.
pub fn conjugacy_classes(g: &PcGroup) -> Vec<Vec<u32>> {
    let gens = g.generators();
    let mut seen = vec![false; g.order()];
    let mut classes = Vec::new();
    for x in g.elements() {
        if seen[x as usize] {
            continue;
        }
        let mut class = vec![x];
        seen[x as usize] = true;
        let mut i = 0;
        while i < class.len() {
            let y = class[i];
            for &s in &gens {
                let z = g.conjugate(y, s);
                if !seen[z as usize] {
                    seen[z as usize] = true;
                    class.push(z);
                }
            }
            i += 1;
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// Sorted multiset of class sizes.
pub fn class_sizes(g: &PcGroup) -> Vec<usize> {
    let mut s: Vec<usize> = conjugacy_classes(g).iter().map(Vec::len).collect();
    s.sort_unstable();
    s
}

/// `Φ(G) = G' G³`.
pub fn frattini(g: &PcGroup) -> Result<Subgroup> {
    let gens = g.generators();
    let mut seeds: Vec<u32> = g.elements().map(|x| g.pow(x, 3)).collect::<HashSet<_>>().into_iter().collect();
    seeds.sort_unstable();
    for &x in &gens {
        for &y in &gens {
            seeds.push(g.commutator(x, y));
        }
    }
    let (_, elems) = normal_closure(g, &gens, &seeds)?;
    Subgroup::from_elements(g, elems)
}

/// A minimal generating set, chosen greedily among the pc generators.
pub fn minimal_generators(g: &PcGroup) -> Result<Vec<u32>> {
    let phi = frattini(g)?;
    let mut gens: Vec<u32> = Vec::new();
    let mut span: HashSet<u32> = phi.elements.iter().copied().collect();
    for x in g.generators() {
        if span.contains(&x) {
            continue;
        }
        gens.push(x);
        let mut all = phi.generators.clone();
        all.extend(&gens);
        span = closure(g, &all)?.into_iter().collect();
    }
    Ok(gens)
}

/// The rank `d` of `G/Φ(G)`, the minimal number of generators.
pub fn generator_rank(g: &PcGroup) -> Result<usize> {
    Ok(minimal_generators(g)?.len())
}

/// Coordinates in `F₃^d` of every element modulo `Φ(G)`, relative to `basis`.
fn frattini_coordinates(g: &PcGroup, phi: &Subgroup, basis: &[u32]) -> Vec<Vec<u8>> {
    let q = Quotient::new(g, &phi.elements);
    let d = basis.len();
    let mut coset_coords: HashMap<u32, Vec<u8>> = HashMap::new();
    for idx in 0..3usize.pow(d as u32) {
        let mut e = Vec::with_capacity(d);
        let mut rest = idx;
        for _ in 0..d {
            e.push((rest % 3) as u8);
            rest /= 3;
        }
        let x = basis.iter().zip(&e).fold(0u32, |acc, (&b, &k)| g.mul(acc, g.pow(b, k as i64)));
        coset_coords.insert(q.project(x), e);
    }
    g.elements().map(|x| coset_coords[&q.project(x)].clone()).collect()
}

/// An index-3 subgroup with the hyperplane of `G/Φ` that cuts it out.
#[derive(Clone, Debug)]
pub struct MaximalSubgroup {
    pub subgroup: Subgroup,
    pub functional: Vec<u8>,
}

/// All maximal subgroups, in lexicographic order of their normalized functionals.
pub fn maximal_subgroups(g: &PcGroup) -> Result<Vec<MaximalSubgroup>> {
    if g.order() > SEARCH_BOUND {
        return Err(Error::TooLarge { order: g.order() as u64, bound: SEARCH_BOUND as u64 });
    }
    let phi = frattini(g)?;
    let basis = minimal_generators(g)?;
    let d = basis.len();
    let coords = frattini_coordinates(g, &phi, &basis);
    let mut out = Vec::new();
    for idx in 1..3usize.pow(d as u32) {
        let mut f = Vec::with_capacity(d);
        let mut rest = idx;
        for _ in 0..d {
            f.push((rest % 3) as u8);
            rest /= 3;
        }
        // one functional per line: leading nonzero entry equal to 1
        if f.iter().rev().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        let elems: Vec<u32> = g
            .elements()
            .filter(|&x| coords[x as usize].iter().zip(&f).map(|(&a, &b)| (a * b) as u32).sum::<u32>() % 3 == 0)
            .collect();
        out.push(MaximalSubgroup { subgroup: Subgroup::from_elements(g, elems)?, functional: f });
    }
    Ok(out)
}

/// Intersection of a family of subgroups.
pub fn intersection(g: &PcGroup, subs: &[Subgroup]) -> Result<Subgroup> {
    let elems: Vec<u32> = g.elements().filter(|&x| subs.iter().all(|s| s.contains(x))).collect();
    Subgroup::from_elements(g, elems)
}

/// `G / ⟨⟨gens⟩⟩` as a pc-presentation.
pub fn quotient(g: &PcGroup, normal_gens: &[u32], name: &str) -> Result<PcPresentation> {
    let (_, elems) = normal_closure(g, &g.generators(), normal_gens)?;
    quotient_presentation(g, &elems, name)
}

/// Orders of the images of the pc generators in `G / ⟨⟨gens⟩⟩`, checked against `q`.
pub fn quotient_map_images(g: &PcGroup, normal_gens: &[u32]) -> Result<Vec<u32>> {
    let (_, elems) = normal_closure(g, &g.generators(), normal_gens)?;
    let q = Quotient::new(g, &elems);
    Ok(g.generators().iter().map(|&x| q.project(x)).collect())
}

/// Isomorphism invariants used as a pre-filter and exported as JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub exponent: u64,
    pub center: AbelianInvariants,
    pub abelianization: AbelianInvariants,
    pub derived_order: usize,
    pub generator_rank: usize,
    pub class_sizes: BTreeMap<usize, usize>,
    pub element_orders: BTreeMap<u64, usize>,
    pub is_abelian: bool,
}

pub fn fingerprint(g: &PcGroup) -> Result<Fingerprint> {
    let mut class_counts = BTreeMap::new();
    for s in class_sizes(g) {
        *class_counts.entry(s).or_insert(0) += 1;
    }
    let mut element_orders = BTreeMap::new();
    for x in g.elements() {
        *element_orders.entry(g.element_order(x)).or_insert(0) += 1;
    }
    let derived = derived_subgroup(g)?;
    Ok(Fingerprint {
        order: g.order(),
        exponent: exponent(g),
        center: center(g)?.invariants().clone(),
        abelianization: abelianization(g.presentation()).invariants().clone(),
        derived_order: derived.order(),
        generator_rank: generator_rank(g)?,
        class_sizes: class_counts,
        element_orders,
        is_abelian: derived.order() == 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::smith_normal_form;
    use crate::pcgroup::{make_group, Family};

    fn grp(f: Family, n: u32, eps: i32) -> PcGroup {
        PcGroup::new(make_group(f, n, eps).unwrap()).unwrap()
    }

    #[test]
    fn center_of_g51_is_c9() {
        assert_eq!(center(&grp(Family::G, 5, 1)).unwrap().to_string(), "C9");
    }

    #[test]
    fn abelianization_of_g4() {
        for eps in [1, -1] {
            let g = grp(Family::G, 4, eps);
            assert_eq!(abelianization(g.presentation()).to_string(), "C3 + C3");
        }
        let m = abelianization_matrix(&make_group(Family::G, 4, 1).unwrap());
        assert_eq!((m.rows(), m.cols()), (3, 5));
        let s = smith_normal_form(&m);
        let diag: Vec<BigInt> = (0..3).map(|i| s.s[(i, i)].clone()).collect();
        assert_eq!(diag, vec![BigInt::from(1), BigInt::from(3), BigInt::from(3)]);
    }

    #[test]
    fn m_is_abelian_of_the_right_type() {
        let m = grp(Family::M, 5, 1);
        let all = Subgroup::generated_by(&m, &m.generators()).unwrap();
        assert_eq!(all.abelian_invariants(&m).unwrap().to_string(), "C3 + C27");
    }

    #[test]
    fn class_sizes_agree_across_eps() {
        for n in [4, 5] {
            assert_eq!(class_sizes(&grp(Family::G, n, 1)), class_sizes(&grp(Family::G, n, -1)));
        }
    }

    #[test]
    fn family_invariants() {
        for n in 4..=6 {
            for eps in [1, -1] {
                let g = grp(Family::G, n, eps);
                assert_eq!(center_subgroup(&g).unwrap().order(), 3usize.pow(n - 3));
                assert_eq!(g.order() / derived_subgroup(&g).unwrap().order(), 3usize.pow(n - 2));
                assert_eq!(generator_rank(&g).unwrap(), 2);
            }
        }
    }

    #[test]
    fn four_maximal_subgroups() {
        let g = grp(Family::G, 4, 1);
        let maxes = maximal_subgroups(&g).unwrap();
        assert_eq!(maxes.len(), 4);
        let b = g.generator(1);
        let m = maxes.iter().find(|m| m.subgroup.contains(b)).unwrap();
        assert_eq!(m.subgroup.abelian_invariants(&g).unwrap().to_string(), "C3 + C9");
        let subs: Vec<Subgroup> = maxes.into_iter().map(|m| m.subgroup).collect();
        let n = intersection(&g, &subs).unwrap();
        assert_eq!(n.abelian_invariants(&g).unwrap().to_string(), "C3 + C3");
    }
}
