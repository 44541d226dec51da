use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::fingerprint::{Fingerprint, FingerprintEntry};
use super::gysin::gysin_series;
use super::kunneth::kunneth_abelian;
use crate::dsl::{builtin_ring, parse_poly};
use crate::error::{Error, Result};
use crate::graded::{degree_bound_from_env, GradedRing};
use crate::linalg::AbelianInvariants;

/// How the cohomology of one group is obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Target {
    /// `∏ C_{orders}` through Künneth.
    Abelian { label: String, orders: Vec<u64> },
    /// Circle kernel of `ξ` on a builtin ring of a Lie group.
    Gysin { label: String, ring: String, xi: String },
    /// Graded pieces of a builtin presentation of the group's own ring.
    Ring { label: String, ring: String },
}

impl Target {
    pub fn label(&self) -> &str {
        match self {
            Target::Abelian { label, .. } | Target::Gysin { label, .. } | Target::Ring { label, .. } => label,
        }
    }

    fn abelian(label: &str, orders: &[u64]) -> Self {
        Target::Abelian { label: label.into(), orders: orders.to_vec() }
    }

    fn gysin(label: &str, xi: &str) -> Self {
        Target::Gysin { label: label.into(), ring: "thm10.G".into(), xi: xi.into() }
    }
}

/// The five abelian groups of order 81 and the four circle kernels in `G̃`.
pub fn order81_targets() -> Vec<Target> {
    vec![
        Target::abelian("C81", &[81]),
        Target::abelian("C27 x C3", &[27, 3]),
        Target::abelian("C9 x C9", &[9, 9]),
        Target::abelian("C9 x C3 x C3", &[9, 3, 3]),
        Target::abelian("C3^4", &[3, 3, 3, 3]),
        Target::gysin("G(4,1)", "delta1 - beta"),
        Target::gysin("G(4,-1)", "delta1 + beta"),
        Target::gysin("G'(4)", "delta1 + beta + alpha"),
        Target::gysin("C3 wr C3", "delta1"),
    ]
}

/// Non-abelian groups of order 81 outside the circle-kernel family; no pipeline covers them.
pub const ORDER81_NOT_COMPUTED: &[&str] = &[
    "C27 : C3 (metacyclic, element of order 27)",
    "C9 : C9 (metacyclic)",
    "non-metacyclic with H^2 = C3 + C9",
    "C3 x E (E of order 27, exponent 3)",
    "C3 x (C9 : C3)",
    "P(5,eps)",
];

/// `G(n,1)` and `G(n,-1)` through their presented rings.
pub fn family_targets(n: u32) -> Vec<Target> {
    [1, -1].iter().map(|e| Target::Ring { label: format!("G({n},{e})"), ring: format!("thm13.G({n},{e})") }).collect()
}

struct Rings {
    bound: u32,
    cache: BTreeMap<String, GradedRing>,
}

impl Rings {
    fn get(&mut self, spec: &str) -> Result<&GradedRing> {
        if !self.cache.contains_key(spec) {
            let (pres, _) = builtin_ring(spec)?;
            self.cache.insert(spec.to_string(), GradedRing::with_bound(pres, self.bound));
        }
        Ok(&self.cache[spec])
    }
}

fn fingerprint_with(rings: &mut Rings, target: &Target, max_degree: u32) -> Result<Fingerprint> {
    match target {
        Target::Abelian { label, orders } => {
            let orders: Vec<BigInt> = orders.iter().map(|&o| BigInt::from(o)).collect();
            kunneth_abelian(label, &orders, max_degree)
        }
        Target::Gysin { label, ring, xi } => {
            let r = rings.get(ring)?;
            let xi = parse_poly(r.presentation(), xi)?;
            let mut entries = vec![
                FingerprintEntry::known(0, &AbelianInvariants::from_cyclic_orders(1, &[])),
                FingerprintEntry::known(1, &AbelianInvariants::trivial()),
            ];
            entries.extend(gysin_series(r, &xi, max_degree + 1)?.iter().map(FingerprintEntry::from_segment));
            entries.truncate(max_degree as usize + 1);
            Ok(Fingerprint { label: label.clone(), entries })
        }
        Target::Ring { label, ring } => {
            let r = rings.get(ring)?;
            let entries = (0..=max_degree)
                .map(|d| Ok(FingerprintEntry::known(d, r.piece(d)?.group.invariants())))
                .collect::<Result<_>>()?;
            Ok(Fingerprint { label: label.clone(), entries })
        }
    }
}

pub fn fingerprint(target: &Target, max_degree: u32) -> Result<Fingerprint> {
    let mut rings = Rings { bound: degree_bound_from_env(), cache: BTreeMap::new() };
    fingerprint_with(&mut rings, target, max_degree)
}

/// Fingerprints of every target and their partition into classes that the data cannot separate.
#[derive(Clone, Debug, Serialize)]
pub struct Distinction {
    pub max_degree: u32,
    pub fingerprints: Vec<Fingerprint>,
    pub classes: Vec<Vec<String>>,
    pub all_distinct: bool,
}

pub fn distinguish(targets: &[Target], max_degree: u32) -> Result<Distinction> {
    if targets.is_empty() {
        return Err(Error::BadParameter("no targets given".into()));
    }
    let mut rings = Rings { bound: degree_bound_from_env(), cache: BTreeMap::new() };
    let fingerprints: Vec<Fingerprint> =
        targets.iter().map(|t| fingerprint_with(&mut rings, t, max_degree)).collect::<Result<_>>()?;

    // Components of the "not separated" relation.
    let n = fingerprints.len();
    let mut root: Vec<usize> = (0..n).collect();
    fn find(root: &mut [usize], i: usize) -> usize {
        let mut i = i;
        while root[i] != i {
            root[i] = root[root[i]];
            i = root[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if fingerprints[i].separating_degree(&fingerprints[j]).is_none() {
                let (a, b) = (find(&mut root, i), find(&mut root, j));
                root[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for i in 0..n {
        let r = find(&mut root, i);
        groups.entry(r).or_default().push(fingerprints[i].label.clone());
    }
    let classes: Vec<Vec<String>> = groups.into_values().collect();
    let all_distinct = classes.iter().all(|c| c.len() == 1);
    Ok(Distinction { max_degree, fingerprints, classes, all_distinct })
}

impl Distinction {
    /// One row per group and degree: `group,degree,order,exponent,structure`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("group,degree,order,exponent,structure\n");
        for f in &self.fingerprints {
            for e in &f.entries {
                let show = |v: &Option<BigInt>| v.as_ref().map_or_else(|| "".to_string(), |x| x.to_string());
                let order = if e.order.is_none() && e.determined { "infinite".to_string() } else { show(&e.order) };
                out.push_str(&format!(
                    "\"{}\",{},{},{},{}\n",
                    f.label,
                    e.degree,
                    order,
                    show(&e.exponent),
                    e.structure.as_deref().unwrap_or("")
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cyclic_group_is_one_class() {
        let d = distinguish(&[Target::abelian("C81", &[81])], 6).unwrap();
        assert_eq!(d.classes, vec![vec!["C81".to_string()]]);
    }

    #[test]
    fn csv_has_a_row_per_degree() {
        let d = distinguish(&[Target::abelian("C9", &[9]), Target::abelian("C3 x C3", &[3, 3])], 4).unwrap();
        assert!(d.all_distinct);
        let csv = d.to_csv();
        assert_eq!(csv.lines().count(), 1 + 2 * 5);
        assert!(csv.contains("\"C9\",0,infinite,,Z"));
        assert!(csv.contains("\"C3 x C3\",2,9,3,C3 + C3"));
    }
}
