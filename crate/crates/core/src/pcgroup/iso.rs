use std::collections::BTreeMap;

use serde::Serialize;

use super::blackbox::closure;
use super::families::{make_group, Family};
use super::group::PcGroup;
use super::structure::{conjugacy_classes, fingerprint, frattini, minimal_generators, Subgroup, SEARCH_BOUND};
use crate::error::{Error, Result};

/// Outcome of an isomorphism test. `witness` sends each pc generator of the
/// first group to the normal form of its image in the second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoResult {
    pub isomorphic: bool,
    pub witness: Option<BTreeMap<String, String>>,
    #[serde(skip)]
    pub images: Option<Vec<u32>>,
    pub reason: String,
}

struct Cayley {
    /// `(element, parent, generator index)` in breadth-first order.
    order: Vec<(u32, u32, usize)>,
}

impl Cayley {
    fn new(g: &PcGroup, gens: &[u32]) -> Self {
        let mut seen = vec![false; g.order()];
        seen[0] = true;
        let mut order = vec![(0u32, 0u32, usize::MAX)];
        let mut i = 0;
        while i < order.len() {
            let x = order[i].0;
            for (k, &s) in gens.iter().enumerate() {
                let y = g.mul(x, s);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    order.push((y, x, k));
                }
            }
            i += 1;
        }
        Cayley { order }
    }

    /// Extends `x_k ↦ y_k` along the Cayley graph and checks every edge.
    fn extend(&self, g1: &PcGroup, g2: &PcGroup, xs: &[u32], ys: &[u32]) -> Option<Vec<u32>> {
        let mut phi = vec![u32::MAX; g1.order()];
        for &(x, parent, k) in &self.order {
            phi[x as usize] = if k == usize::MAX { 0 } else { g2.mul(phi[parent as usize], ys[k]) };
        }
        for &(x, _, _) in &self.order {
            for (k, &s) in xs.iter().enumerate() {
                let target = phi[g1.mul(x, s) as usize];
                if target == u32::MAX || target != g2.mul(phi[x as usize], ys[k]) {
                    return None;
                }
            }
        }
        Some(phi)
    }
}

fn rank_mod3(rows: &[Vec<u8>]) -> usize {
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_multiple_of(3)) else { continue };
        m.swap(rank, p);
        let inv = if m[rank][c] % 3 == 1 { 1 } else { 2 };
        for v in m[rank].iter_mut() {
            *v = (*v * inv) % 3;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_multiple_of(3) {
                let f = m[r][c];
                for k in 0..cols {
                    m[r][k] = (m[r][k] + 3 * 3 - (f * m[rank][k]) % 3) % 3;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Coordinates of every element of `g` in `G/Φ(G) ≅ F₃^d`.
fn phi_coordinates(g: &PcGroup) -> Result<Vec<Vec<u8>>> {
    let phi = frattini(g)?;
    let basis = minimal_generators(g)?;
    let mut coords = vec![Vec::new(); g.order()];
    let d = basis.len();
    for idx in 0..3usize.pow(d as u32) {
        let mut e = Vec::with_capacity(d);
        let mut rest = idx;
        for _ in 0..d {
            e.push((rest % 3) as u8);
            rest /= 3;
        }
        let x = basis.iter().zip(&e).fold(0u32, |acc, (&b, &k)| g.mul(acc, g.pow(b, k as i64)));
        for &f in &phi.elements {
            coords[g.mul(x, f) as usize] = e.clone();
        }
    }
    Ok(coords)
}

fn check_size(g: &PcGroup) -> Result<()> {
    if g.order() > SEARCH_BOUND {
        return Err(Error::TooLarge { order: g.order() as u64, bound: SEARCH_BOUND as u64 });
    }
    Ok(())
}

/// Decides whether two pc groups are isomorphic.
pub fn isomorphic(g1: &PcGroup, g2: &PcGroup) -> Result<IsoResult> {
    check_size(g1)?;
    check_size(g2)?;
    let (f1, f2) = (fingerprint(g1)?, fingerprint(g2)?);
    if f1 != f2 {
        return Ok(IsoResult {
            isomorphic: false,
            witness: None,
            images: None,
            reason: "invariant fingerprints differ".into(),
        });
    }
    let xs = minimal_generators(g1)?;
    let d = xs.len();
    let cayley = Cayley::new(g1, &xs);
    let coords2 = phi_coordinates(g2)?;

    let orders: Vec<u64> = xs.iter().map(|&x| g1.element_order(x)).collect();
    let reps: Vec<u32> = conjugacy_classes(g2).iter().map(|c| c[0]).collect();
    let mut candidates: Vec<Vec<u32>> = (0..d)
        .map(|i| {
            let pool: Vec<u32> = if i == 0 { reps.clone() } else { g2.elements().collect() };
            let mut c: Vec<u32> = pool.into_iter().filter(|&y| g2.element_order(y) == orders[i]).collect();
            // try the element with the same normal form first
            if let Some(pos) = c.iter().position(|&y| y == xs[i]) {
                c.remove(pos);
                c.insert(0, xs[i]);
            } else if (xs[i] as usize) < g2.order() && g2.element_order(xs[i]) == orders[i] {
                c.insert(0, xs[i]);
            }
            c
        })
        .collect();
    if g1.presentation() == g2.presentation() {
        candidates.iter_mut().zip(&xs).for_each(|(c, &x)| c.insert(0, x));
    }

    let partial: Vec<Cayley> = (1..=d).map(|k| Cayley::new(g1, &xs[..k])).collect();
    let mut ys: Vec<u32> = Vec::with_capacity(d);
    let mut idx = vec![0usize; d];
    let mut level = 0usize;
    loop {
        if idx[level] >= candidates[level].len() {
            if level == 0 {
                break;
            }
            idx[level] = 0;
            level -= 1;
            ys.pop();
            idx[level] += 1;
            continue;
        }
        let y = candidates[level][idx[level]];
        ys.push(y);
        let rows: Vec<Vec<u8>> = ys.iter().map(|&v| coords2[v as usize].clone()).collect();
        let ok = rank_mod3(&rows) == ys.len() && partial_ok(&partial[level], g1, g2, &xs[..=level], &ys);
        if ok && level + 1 == d {
            if let Some(phi) = cayley.extend(g1, g2, &xs, &ys) {
                let images: Vec<u32> = g1.generators().iter().map(|&x| phi[x as usize]).collect();
                let witness = g1
                    .presentation()
                    .names
                    .iter()
                    .zip(&images)
                    .map(|(n, &y)| (n.clone(), g2.format_element(y)))
                    .collect();
                return Ok(IsoResult {
                    isomorphic: true,
                    witness: Some(witness),
                    images: Some(images),
                    reason: "generator images satisfy every relation".into(),
                });
            }
        }
        if ok && level + 1 < d {
            level += 1;
            continue;
        }
        ys.pop();
        idx[level] += 1;
    }
    Ok(IsoResult {
        isomorphic: false,
        witness: None,
        images: None,
        reason: "no assignment of generator images satisfies the relations".into(),
    })
}

fn partial_ok(c: &Cayley, g1: &PcGroup, g2: &PcGroup, xs: &[u32], ys: &[u32]) -> bool {
    let mut phi = std::collections::HashMap::with_capacity(c.order.len());
    for &(x, parent, k) in &c.order {
        let v = if k == usize::MAX { 0 } else { g2.mul(phi[&parent], ys[k]) };
        phi.insert(x, v);
    }
    c.order
        .iter()
        .all(|&(x, _, _)| xs.iter().zip(ys).all(|(&s, &t)| phi.get(&g1.mul(x, s)) == Some(&g2.mul(phi[&x], t))))
}

/// Checks that `images` (one per pc generator of `g1`) satisfy every pc
/// relation of `g1` and generate `g2`, with `|g1| = |g2|`.
pub fn verify_isomorphism(g1: &PcGroup, g2: &PcGroup, images: &[u32]) -> Result<bool> {
    let p = g1.presentation();
    if images.len() != p.ngens() || g1.order() != g2.order() {
        return Ok(false);
    }
    let eval = |w: &[(usize, i64)]| w.iter().fold(0u32, |acc, &(g, e)| g2.mul(acc, g2.pow(images[g], e)));
    for i in 0..p.ngens() {
        if g2.pow(images[i], p.rel_orders[i] as i64) != eval(&p.powers[i]) {
            return Ok(false);
        }
        for j in i + 1..p.ngens() {
            if g2.commutator(images[j], images[i]) != eval(p.commutator(j, i)) {
                return Ok(false);
            }
        }
    }
    Ok(closure(g2, images)?.len() == g2.order())
}

/// Whether two subgroups of possibly different groups are isomorphic.
pub fn subgroups_isomorphic(g1: &PcGroup, s1: &Subgroup, g2: &PcGroup, s2: &Subgroup) -> Result<bool> {
    if s1.order() != s2.order() {
        return Ok(false);
    }
    let a = PcGroup::new(s1.presentation(g1, "S1")?)?;
    let b = PcGroup::new(s2.presentation(g2, "S2")?)?;
    Ok(isomorphic(&a, &b)?.isomorphic)
}

/// Names the isomorphism type of `g`: the invariant factors when abelian,
/// otherwise the first builtin family member of the same order that matches.
pub fn identify(g: &PcGroup) -> Result<Option<String>> {
    let all = Subgroup::generated_by(g, &g.generators())?;
    if let Some(inv) = all.abelian_invariants(g) {
        return Ok(Some(inv.to_string()));
    }
    let mut m = 0u32;
    let mut o = g.order();
    while o > 1 {
        o /= 3;
        m += 1;
    }
    let mut candidates: Vec<(Family, u32, i32)> =
        vec![(Family::E, 3, 1), (Family::GPrime, 4, 1), (Family::Wreath, 4, 1)];
    for eps in [1, -1] {
        candidates.push((Family::G, m, eps));
        candidates.push((Family::P, m + 1, eps));
    }
    for (f, k, eps) in candidates {
        let Ok(p) = make_group(f, k, eps) else { continue };
        if p.nominal_order() != g.order() as u128 {
            continue;
        }
        let h = PcGroup::new(p)?;
        if isomorphic(g, &h)?.isomorphic {
            return Ok(Some(h.name().to_string()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(f: Family, n: u32, eps: i32) -> PcGroup {
        PcGroup::new(make_group(f, n, eps).unwrap()).unwrap()
    }

    #[test]
    fn g4_plus_and_minus_differ() {
        let r = isomorphic(&grp(Family::G, 4, 1), &grp(Family::G, 4, -1)).unwrap();
        assert!(!r.isomorphic);
    }

    #[test]
    fn self_isomorphism_is_identity() {
        let g = grp(Family::G, 5, -1);
        let r = isomorphic(&g, &g).unwrap();
        assert!(r.isomorphic);
        assert_eq!(r.images.unwrap(), g.generators());
    }

    #[test]
    fn witness_is_verified() {
        let a = grp(Family::P, 4, 1);
        let b = grp(Family::E, 0, 1);
        let r = isomorphic(&a, &b).unwrap();
        assert!(r.isomorphic);
        assert!(verify_isomorphism(&a, &b, &r.images.unwrap()).unwrap());
    }

    #[test]
    fn rank_over_f3() {
        assert_eq!(rank_mod3(&[vec![1, 2], vec![2, 1]]), 1);
        assert_eq!(rank_mod3(&[vec![1, 0], vec![1, 1]]), 2);
    }
}
