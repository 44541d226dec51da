use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

use super::group::{PcGroup, ENUMERATION_BOUND};
use super::presentation::{PcPresentation, Word};
use crate::error::{Error, Result};

/// Minimal interface of a group whose elements can be multiplied and compared.
pub trait GroupOps {
    type Elem: Clone + Eq + Hash + Debug;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn commutator(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let ab = self.mul(a, b);
        self.mul(&self.mul(&self.inv(a), &self.inv(b)), &ab)
    }

    fn conjugate(&self, x: &Self::Elem, g: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(&self.inv(g), x), g)
    }

    fn power(&self, x: &Self::Elem, e: u64) -> Self::Elem {
        (0..e).fold(self.identity(), |acc, _| self.mul(&acc, x))
    }
}

/// Elements of `⟨gens⟩` in breadth-first order from the identity.
pub fn closure<G: GroupOps>(g: &G, gens: &[G::Elem]) -> Result<Vec<G::Elem>> {
    let mut seen: HashSet<G::Elem> = HashSet::new();
    let mut out = vec![g.identity()];
    seen.insert(g.identity());
    let mut queue: VecDeque<G::Elem> = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = g.mul(&x, s);
            if seen.insert(y.clone()) {
                if out.len() as u64 >= ENUMERATION_BOUND {
                    return Err(Error::TooLarge { order: out.len() as u64 + 1, bound: ENUMERATION_BOUND });
                }
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(out)
}

/// Normal closure of `gens` under conjugation by `ambient`; returns the
/// enlarged generating set and the elements.
pub fn normal_closure<G: GroupOps>(
    g: &G,
    ambient: &[G::Elem],
    gens: &[G::Elem],
) -> Result<(Vec<G::Elem>, Vec<G::Elem>)> {
    let mut gens: Vec<G::Elem> = gens.iter().filter(|x| **x != g.identity()).cloned().collect();
    loop {
        let elems = closure(g, &gens)?;
        let set: HashSet<&G::Elem> = elems.iter().collect();
        let mut extra = Vec::new();
        for x in &gens {
            for a in ambient {
                let y = g.conjugate(x, a);
                if !set.contains(&y) && !extra.contains(&y) {
                    extra.push(y);
                }
            }
        }
        if extra.is_empty() {
            return Ok((gens, elems));
        }
        gens.extend(extra);
    }
}

/// A pc-presentation computed from a black-box group, with the group
/// elements chosen as pc generators.
#[derive(Clone, Debug)]
pub struct BlackboxPc<E> {
    pub presentation: PcPresentation,
    pub generators: Vec<E>,
    pub layers: Vec<usize>,
}

/// Pc-presentation with relative orders 3 refining the lower exponent-3
/// central series of `⟨gens⟩`.
pub fn pc_from_blackbox<G: GroupOps>(g: &G, gens: &[G::Elem], name: &str) -> Result<BlackboxPc<G::Elem>> {
    let all = closure(g, gens)?;
    let order = all.len();
    let mut tmp = order;
    while tmp % 3 == 0 {
        tmp /= 3;
    }
    if tmp != 1 && order != 1 {
        return Err(Error::BadParameter(format!("group of order {order} is not a 3-group")));
    }
    let ambient: Vec<G::Elem> = gens.to_vec();
    let mut layer_gens: Vec<G::Elem> = ambient.iter().filter(|x| **x != g.identity()).cloned().collect();
    let mut current: HashSet<G::Elem> = all.iter().cloned().collect();
    let mut pcgens: Vec<G::Elem> = Vec::new();
    let mut layers = Vec::new();
    let mut layer = 0;
    while current.len() > 1 {
        let mut next_seed = Vec::new();
        for x in &layer_gens {
            next_seed.push(g.power(x, 3));
            for a in &ambient {
                next_seed.push(g.commutator(x, a));
            }
        }
        let (next_gens, next_elems) = normal_closure(g, &ambient, &next_seed)?;
        if next_elems.len() == current.len() {
            return Err(Error::BadParameter("group is not a 3-group (central series stalls)".into()));
        }
        // basis of current / next, chosen greedily among the layer generators
        let mut span_gens = next_gens.clone();
        let mut span: HashSet<G::Elem> = next_elems.iter().cloned().collect();
        for x in &layer_gens {
            if !span.contains(x) {
                pcgens.push(x.clone());
                layers.push(layer);
                span_gens.push(x.clone());
                span = closure(g, &span_gens)?.into_iter().collect();
            }
        }
        debug_assert_eq!(span.len(), current.len());
        layer_gens = next_gens;
        current = next_elems.into_iter().collect();
        layer += 1;
    }

    let m = pcgens.len();
    if 3usize.pow(m as u32) != order {
        return Err(Error::Inconsistent(format!("{m} pc generators for a group of order {order}")));
    }
    let mut exps: HashMap<G::Elem, Vec<u8>> = HashMap::with_capacity(order);
    let mut stack: Vec<(usize, G::Elem, Vec<u8>)> = vec![(0, g.identity(), Vec::new())];
    while let Some((i, prefix, e)) = stack.pop() {
        if i == m {
            if exps.insert(prefix, e).is_some() {
                return Err(Error::Inconsistent("normal forms are not unique".into()));
            }
            continue;
        }
        let mut x = prefix;
        for k in 0..3u8 {
            let mut e2 = e.clone();
            e2.push(k);
            stack.push((i + 1, x.clone(), e2));
            x = g.mul(&x, &pcgens[i]);
        }
    }
    let to_word = |x: &G::Elem| -> Word {
        exps[x].iter().enumerate().filter(|(_, &e)| e > 0).map(|(j, &e)| (j, e as i64)).collect()
    };
    let names: Vec<String> = (1..=m).map(|i| format!("g{i}")).collect();
    let gen_specs: Vec<(&str, u64)> = names.iter().map(|n| (n.as_str(), 3)).collect();
    let mut pres = PcPresentation::new(name, &gen_specs)?;
    for i in 0..m {
        pres.put_power(i, to_word(&g.power(&pcgens[i], 3)))?;
        for j in i + 1..m {
            pres.put_commutator(j, i, to_word(&g.commutator(&pcgens[j], &pcgens[i])))?;
        }
    }
    Ok(BlackboxPc { presentation: pres, generators: pcgens, layers })
}

/// Subgroup of a pc group given by generators.
pub fn subgroup_presentation(g: &PcGroup, gens: &[u32], name: &str) -> Result<PcPresentation> {
    Ok(pc_from_blackbox(g, gens, name)?.presentation)
}

/// `G / N` for a normal subgroup `N` given by its elements; cosets are
/// represented by their smallest element.
pub struct Quotient<'a> {
    group: &'a PcGroup,
    canon: Vec<u32>,
}

impl<'a> Quotient<'a> {
    pub fn new(group: &'a PcGroup, normal: &[u32]) -> Self {
        let mut canon = vec![u32::MAX; group.order()];
        for x in group.elements() {
            if canon[x as usize] != u32::MAX {
                continue;
            }
            let coset: Vec<u32> = normal.iter().map(|&n| group.mul(x, n)).collect();
            let rep = *coset.iter().min().expect("normal subgroup is nonempty");
            for y in coset {
                canon[y as usize] = rep;
            }
        }
        Quotient { group, canon }
    }

    pub fn project(&self, x: u32) -> u32 {
        self.canon[x as usize]
    }
}

impl GroupOps for Quotient<'_> {
    type Elem = u32;

    fn identity(&self) -> u32 {
        self.canon[0]
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.canon[self.group.mul(*a, *b) as usize]
    }

    fn inv(&self, a: &u32) -> u32 {
        self.canon[self.group.inv(*a) as usize]
    }
}

pub fn quotient_presentation(g: &PcGroup, normal: &[u32], name: &str) -> Result<PcPresentation> {
    let q = Quotient::new(g, normal);
    let gens: Vec<u32> = g.generators().iter().map(|&x| q.project(x)).collect();
    Ok(pc_from_blackbox(&q, &gens, name)?.presentation)
}
