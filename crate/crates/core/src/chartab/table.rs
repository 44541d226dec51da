use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use super::cyclotomic::{Cyc, Q};
use crate::error::{Error, Result};
use crate::pcgroup::{conjugacy_classes, exponent, maximal_subgroups, minimal_generators, PcGroup, Subgroup};

/// One value per conjugacy class.
pub type ClassFunction = Vec<Cyc>;

/// An integer combination of irreducible characters, indexed by table row.
pub type RepRingElement = Vec<i64>;

#[derive(Clone, Debug, Serialize)]
pub struct ClassInfo {
    pub representative: String,
    #[serde(skip)]
    pub rep: u32,
    pub size: usize,
    pub element_order: u64,
    /// Class of `g²`, `g³` and `g⁻¹` for `g` in this class.
    pub square: usize,
    pub cube: usize,
    pub inverse: usize,
}

/// Exact character table of a 3-group with an abelian subgroup of index at most 3.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    pub group: String,
    pub order: usize,
    /// Values lie in `ℚ(ζ_{3^level})`.
    pub level: u32,
    pub classes: Vec<ClassInfo>,
    pub characters: Vec<ClassFunction>,
    #[serde(skip)]
    class_of: Vec<usize>,
}

/// All homomorphisms from `⟨gens⟩ ⊆ g` to `ℤ/N` (`N = 3^level`), as dense
/// maps from element indices (entries outside the subgroup are `u64::MAX`).
pub fn cyclic_homs(g: &PcGroup, gens: &[u32], level: u32) -> Vec<Vec<u64>> {
    let n = 3u64.pow(level);
    // breadth-first spanning tree of the Cayley graph
    let mut tree: Vec<(u32, u32, usize)> = vec![(0, 0, usize::MAX)];
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut i = 0;
    while i < tree.len() {
        let x = tree[i].0;
        for (k, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            if !seen[y as usize] {
                seen[y as usize] = true;
                tree.push((y, x, k));
            }
        }
        i += 1;
    }
    let orders: Vec<u64> = gens.iter().map(|&s| g.element_order(s)).collect();
    let total: u64 = orders.iter().product();
    let mut out = Vec::new();
    for idx in 0..total {
        let mut rest = idx;
        let vals: Vec<u64> = orders
            .iter()
            .map(|&o| {
                let k = rest % o;
                rest /= o;
                k * (n / o)
            })
            .collect();
        let mut v = vec![u64::MAX; g.order()];
        for &(x, parent, k) in &tree {
            v[x as usize] = if k == usize::MAX { 0 } else { (v[parent as usize] + vals[k]) % n };
        }
        let ok = tree.iter().all(|&(x, _, _)| {
            gens.iter().enumerate().all(|(k, &s)| v[g.mul(x, s) as usize] == (v[x as usize] + vals[k]) % n)
        });
        if ok {
            out.push(v);
        }
    }
    out
}

impl CharacterTable {
    pub fn new(g: &PcGroup) -> Result<Self> {
        let exp = exponent(g);
        let mut level = 0;
        while 3u64.pow(level) < exp {
            level += 1;
        }
        let classes_raw = conjugacy_classes(g);
        let mut class_of = vec![0usize; g.order()];
        for (i, c) in classes_raw.iter().enumerate() {
            for &x in c {
                class_of[x as usize] = i;
            }
        }
        let classes: Vec<ClassInfo> = classes_raw
            .iter()
            .map(|c| {
                let r = c[0];
                ClassInfo {
                    representative: g.format_element(r),
                    rep: r,
                    size: c.len(),
                    element_order: g.element_order(r),
                    square: class_of[g.mul(r, r) as usize],
                    cube: class_of[g.pow(r, 3) as usize],
                    inverse: class_of[g.inv(r) as usize],
                }
            })
            .collect();
        let value = |e: u64| Cyc::zeta_pow(level, e as i64);

        let mut linear: Vec<ClassFunction> = cyclic_homs(g, &minimal_generators(g)?, level)
            .into_iter()
            .map(|v| classes.iter().map(|c| value(v[c.rep as usize])).collect())
            .collect();
        let trivial: ClassFunction = vec![Cyc::one(level); classes.len()];
        linear.retain(|c| *c != trivial);
        linear.sort();
        let mut characters = vec![trivial];
        characters.extend(linear);

        if characters.len() < classes.len() {
            let m = maximal_subgroups(g)?
                .into_iter()
                .map(|m| m.subgroup)
                .find(|s| s.is_abelian(g))
                .ok_or(Error::NoAbelianIndex3)?;
            let s = g.generators().into_iter().find(|&x| !m.contains(x)).expect("proper subgroup");
            let s2 = g.mul(s, s);
            let mut induced: BTreeSet<ClassFunction> = BTreeSet::new();
            for phi in cyclic_homs(g, &m.generators, level) {
                let conj = |x: u32, t: u32| phi[g.mul(g.mul(t, x), g.inv(t)) as usize];
                if m.elements.iter().all(|&x| conj(x, s) == phi[x as usize]) {
                    continue;
                }
                let row: ClassFunction = classes
                    .iter()
                    .map(|c| {
                        if m.contains(c.rep) {
                            value(phi[c.rep as usize]).add(&value(conj(c.rep, s))).add(&value(conj(c.rep, s2)))
                        } else {
                            Cyc::zero(level)
                        }
                    })
                    .collect();
                induced.insert(row);
            }
            characters.extend(induced);
        }
        let table =
            CharacterTable { group: g.name().to_string(), order: g.order(), level, classes, characters, class_of };
        table.certify()?;
        Ok(table)
    }

    fn certify(&self) -> Result<()> {
        if self.characters.len() != self.classes.len() {
            return Err(Error::Inconsistent(format!(
                "{} irreducible characters for {} classes",
                self.characters.len(),
                self.classes.len()
            )));
        }
        let sum: i64 = self.characters.iter().map(|c| self.degree(c).pow(2)).sum();
        if sum != self.order as i64 {
            return Err(Error::Inconsistent(format!("sum of squared degrees is {sum}, not {}", self.order)));
        }
        Ok(())
    }

    pub fn class_of(&self, x: u32) -> usize {
        self.class_of[x as usize]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn degree(&self, f: &ClassFunction) -> i64 {
        let q = f[0].as_rational().expect("degree is rational");
        q.to_integer()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.characters.iter().map(|c| self.degree(c)).collect()
    }

    pub fn constant(&self, n: i64) -> ClassFunction {
        vec![Cyc::integer(self.level, n); self.classes.len()]
    }

    pub fn add(&self, a: &ClassFunction, b: &ClassFunction) -> ClassFunction {
        a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
    }

    pub fn sub(&self, a: &ClassFunction, b: &ClassFunction) -> ClassFunction {
        a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
    }

    pub fn mul(&self, a: &ClassFunction, b: &ClassFunction) -> ClassFunction {
        a.iter().zip(b).map(|(x, y)| x.mul(y)).collect()
    }

    pub fn scale(&self, a: &ClassFunction, q: Q) -> ClassFunction {
        a.iter().map(|x| x.scale(q)).collect()
    }

    pub fn sum(&self, fs: &[&ClassFunction]) -> ClassFunction {
        fs.iter().fold(self.constant(0), |acc, f| self.add(&acc, f))
    }

    /// `f̄(g) = f(g⁻¹)`.
    pub fn dual(&self, f: &ClassFunction) -> ClassFunction {
        self.classes.iter().map(|c| f[c.inverse].clone()).collect()
    }

    /// Adams operation `ψᵏ f(g) = f(gᵏ)`; for a linear character this is the `k`-th power.
    pub fn adams(&self, f: &ClassFunction, k: i64, g: &PcGroup) -> ClassFunction {
        self.classes.iter().map(|c| f[self.class_of(g.pow(c.rep, k))].clone()).collect()
    }

    fn power_class(&self, j: usize, k: u32) -> usize {
        match k {
            2 => self.classes[j].square,
            3 => self.classes[j].cube,
            _ => unreachable!("only squares and cubes are tabulated"),
        }
    }

    /// `⟨a, b⟩ = |G|⁻¹ Σ a(g) b(g⁻¹)`.
    pub fn inner(&self, a: &ClassFunction, b: &ClassFunction) -> Result<Q> {
        let mut acc = Cyc::zero(self.level);
        for (j, c) in self.classes.iter().enumerate() {
            acc = acc.add(&a[j].mul(&b[c.inverse]).scale(Q::from_integer(c.size as i64)));
        }
        let q = acc.as_rational().ok_or_else(|| Error::Inconsistent("inner product is not rational".into()))?;
        Ok(q / Q::from_integer(self.order as i64))
    }

    /// Coordinates in the irreducible basis; fails unless they are integers.
    pub fn decompose(&self, f: &ClassFunction) -> Result<RepRingElement> {
        let mut out = Vec::with_capacity(self.characters.len());
        for chi in &self.characters {
            let q = self.inner(f, chi)?;
            if !q.is_integer() {
                return Err(Error::NotGenuine(format!("multiplicity {q} is not an integer")));
            }
            out.push(q.to_integer());
        }
        if self.compose(&out) != *f {
            return Err(Error::NotGenuine("not in the span of the irreducible characters".into()));
        }
        Ok(out)
    }

    pub fn compose(&self, coeffs: &[i64]) -> ClassFunction {
        coeffs.iter().zip(&self.characters).fold(self.constant(0), |acc, (&k, chi)| {
            if k == 0 {
                acc
            } else {
                self.add(&acc, &self.scale(chi, Q::from_integer(k)))
            }
        })
    }

    fn genuine(&self, f: &ClassFunction, what: &str) -> Result<ClassFunction> {
        let coeffs = self.decompose(f)?;
        if coeffs.iter().any(|&k| k < 0) {
            return Err(Error::NotGenuine(format!("{what} has a negative multiplicity")));
        }
        Ok(f.clone())
    }

    /// `λ²χ(g) = (χ(g)² − χ(g²)) / 2`.
    pub fn lambda2(&self, f: &ClassFunction) -> Result<ClassFunction> {
        self.genuine(f, "argument")?;
        let half = Q::new(1, 2);
        let out: ClassFunction =
            (0..f.len()).map(|j| f[j].mul(&f[j]).sub(&f[self.power_class(j, 2)]).scale(half)).collect();
        self.genuine(&out, "exterior square")
    }

    /// `λ³χ(g) = (χ(g)³ − 3χ(g)χ(g²) + 2χ(g³)) / 6`.
    pub fn lambda3(&self, f: &ClassFunction) -> Result<ClassFunction> {
        self.genuine(f, "argument")?;
        let three = Q::from_integer(3);
        let two = Q::from_integer(2);
        let sixth = Q::new(1, 6);
        let out: ClassFunction = (0..f.len())
            .map(|j| {
                let a = &f[j];
                let b = &f[self.power_class(j, 2)];
                let c = &f[self.power_class(j, 3)];
                a.pow(3).sub(&a.mul(b).scale(three)).add(&c.scale(two)).scale(sixth)
            })
            .collect();
        self.genuine(&out, "exterior cube")
    }

    /// Restriction to the classes meeting `sub`, as values on the elements of `sub`.
    pub fn restrict(&self, f: &ClassFunction, sub: &Subgroup) -> Vec<Cyc> {
        sub.elements.iter().map(|&x| f[self.class_of(x)].clone()).collect()
    }

    /// Whether some entry equals `v`.
    pub fn has_value(&self, v: &Cyc) -> bool {
        self.characters.iter().flatten().any(|x| x.equals(v))
    }

    /// Kernel of a character as a set of class indices.
    pub fn kernel_classes(&self, f: &ClassFunction) -> HashSet<usize> {
        (0..f.len()).filter(|&j| f[j].equals(&f[0])).collect()
    }
}

/// `Ind_H^G φ` for a class function `φ` of `H`, given by its values on the
/// sorted elements of `h`.
pub fn induce(t: &CharacterTable, g: &PcGroup, h: &Subgroup, phi: &[Cyc]) -> ClassFunction {
    t.classes
        .iter()
        .map(|c| {
            let mut acc = Cyc::zero(t.level);
            for x in g.elements() {
                let y = g.mul(g.mul(x, c.rep), g.inv(x));
                if let Ok(pos) = h.elements.binary_search(&y) {
                    acc = acc.add(&phi[pos]);
                }
            }
            acc.scale(Q::new(1, h.order() as i64))
        })
        .collect()
}

/// `|H|⁻¹ Σ a(h) b(h⁻¹)` for functions on the sorted elements of `h`.
pub fn subgroup_inner(g: &PcGroup, h: &Subgroup, a: &[Cyc], b: &[Cyc]) -> Option<Q> {
    let mut acc = Cyc::zero(a.first().map_or(0, Cyc::level));
    for (i, &x) in h.elements.iter().enumerate() {
        let j = h.elements.binary_search(&g.inv(x)).ok()?;
        acc = acc.add(&a[i].mul(&b[j]));
    }
    Some(acc.as_rational()? / Q::from_integer(h.order() as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcgroup::{make_group, Family};

    fn table(f: Family, n: u32, eps: i32) -> CharacterTable {
        CharacterTable::new(&PcGroup::new(make_group(f, n, eps).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn degrees_of_g41_and_e() {
        let t = table(Family::G, 4, 1);
        let d = t.degrees();
        assert_eq!(d.iter().filter(|&&x| x == 1).count(), 9);
        assert_eq!(d.iter().filter(|&&x| x == 3).count(), 8);
        let e = table(Family::E, 3, 1);
        let d = e.degrees();
        assert_eq!((d.iter().filter(|&&x| x == 1).count(), d.iter().filter(|&&x| x == 3).count()), (9, 2));
        assert!(t.characters[0].iter().all(|v| v.equals(&Cyc::one(t.level))));
    }

    #[test]
    fn orthogonality() {
        for (f, n, e) in [(Family::G, 4, -1), (Family::GPrime, 4, 1), (Family::G, 5, 1)] {
            let t = table(f, n, e);
            for (i, a) in t.characters.iter().enumerate() {
                for (j, b) in t.characters.iter().enumerate() {
                    let expect = if i == j { Q::from_integer(1) } else { Q::from_integer(0) };
                    assert_eq!(t.inner(a, b).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn lambda_of_linear_vanishes() {
        let t = table(Family::G, 4, 1);
        let theta = &t.characters[1];
        assert!(t.lambda2(theta).unwrap().iter().all(Cyc::is_zero));
    }

    #[test]
    fn abelian_group_has_only_linear_characters() {
        let t = table(Family::M, 5, 1);
        assert_eq!(t.characters.len(), 81);
    }
}
