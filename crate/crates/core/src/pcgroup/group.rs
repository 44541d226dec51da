use super::blackbox::GroupOps;
use super::presentation::{PcPresentation, Word};
use crate::error::{Error, Result};

/// Largest group order that is enumerated (3⁷).
pub const ENUMERATION_BOUND: u64 = 2187;

/// A consistent pc-presentation together with its full multiplication table.
///
/// Elements are indexed by their normal-form exponent vectors read in mixed
/// radix with `g₁` most significant, so the identity is `0` and the subgroup
/// `⟨g_i, …, g_k⟩` occupies an initial segment of indices.
#[derive(Clone, Debug)]
pub struct PcGroup {
    pres: PcPresentation,
    strides: Vec<usize>,
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
}

fn inverses(table: &[u32], n: usize) -> Vec<u32> {
    let mut inv = vec![0u32; n];
    for x in 0..n {
        let row = &table[x * n..(x + 1) * n];
        inv[x] = row.iter().position(|&z| z == 0).expect("group table has an identity") as u32;
    }
    inv
}

/// Multiplication inside `⟨g_{i+1}, …⟩` while building level `i`.
struct Level<'a> {
    table: &'a [u32],
    inverse: Vec<u32>,
    size: usize,
}

impl Level<'_> {
    fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.size + b as usize]
    }

    fn pow(&self, x: u32, e: i64) -> u32 {
        let base = if e < 0 { self.inverse[x as usize] } else { x };
        (0..e.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    fn eval(&self, w: &Word, strides: &[usize]) -> u32 {
        w.iter().fold(0, |acc, &(g, e)| self.mul(acc, self.pow(strides[g] as u32, e)))
    }
}

impl PcGroup {
    pub fn new(pres: PcPresentation) -> Result<Self> {
        pres.validate()?;
        let nominal = pres.nominal_order();
        if nominal > ENUMERATION_BOUND as u128 {
            return Err(Error::TooLarge {
                order: u64::try_from(nominal).unwrap_or(u64::MAX),
                bound: ENUMERATION_BOUND,
            });
        }
        let k = pres.ngens();
        let mut strides = vec![1usize; k];
        for i in (0..k.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * pres.rel_orders[i + 1] as usize;
        }
        let order = if k == 0 { 1 } else { strides[0] * pres.rel_orders[0] as usize };

        let mut table: Vec<u32> = vec![0];
        let mut size = 1usize;
        for i in (0..k).rev() {
            let r = pres.rel_orders[i] as usize;
            let lvl = Level { inverse: inverses(&table, size), table: &table, size };
            let p = lvl.eval(&pres.powers[i], &strides);
            let images: Vec<u32> = (i + 1..k)
                .map(|j| lvl.mul(strides[j] as u32, lvl.eval(&pres.commutator(j, i).to_vec(), &strides)))
                .collect();
            let mut conj = vec![0u32; size];
            for (x, slot) in conj.iter_mut().enumerate() {
                let mut acc = 0u32;
                let mut rest = x;
                for j in i + 1..k {
                    let e = rest / strides[j];
                    rest %= strides[j];
                    acc = lvl.mul(acc, lvl.pow(images[j - i - 1], e as i64));
                }
                *slot = acc;
            }
            let name = &pres.names[i];
            for x in 0..size {
                for y in 0..size {
                    let xy = lvl.mul(x as u32, y as u32);
                    if conj[xy as usize] != lvl.mul(conj[x], conj[y]) {
                        return Err(Error::Inconsistent(format!("conjugation by `{name}` is not a homomorphism")));
                    }
                }
            }
            if conj[p as usize] != p {
                return Err(Error::Inconsistent(format!("conjugation by `{name}` moves `{name}^{r}`")));
            }
            let mut powers_of_conj: Vec<Vec<u32>> = vec![(0..size as u32).collect()];
            for b in 1..=r {
                let prev = &powers_of_conj[b - 1];
                powers_of_conj.push(prev.iter().map(|&x| conj[x as usize]).collect());
            }
            let p_inv = lvl.inverse[p as usize];
            for x in 0..size as u32 {
                if powers_of_conj[r][x as usize] != lvl.mul(lvl.mul(p_inv, x), p) {
                    return Err(Error::Inconsistent(format!(
                        "conjugation by `{name}`^{r} differs from conjugation by its power relation"
                    )));
                }
            }
            let new_size = size * r;
            let mut next = vec![0u32; new_size * new_size];
            for x in 0..new_size {
                let (a, xr) = (x / size, x % size);
                for y in 0..new_size {
                    let (b, yr) = (y / size, y % size);
                    let c = powers_of_conj[b][xr];
                    let mut t = lvl.mul(c, yr as u32);
                    let mut s = a + b;
                    if s >= r {
                        s -= r;
                        t = lvl.mul(p, t);
                    }
                    next[x * new_size + y] = (s * size) as u32 + t;
                }
            }
            table = next;
            size = new_size;
        }
        debug_assert_eq!(size, order);
        let inverse = inverses(&table, order);
        Ok(PcGroup { pres, strides, order, table, inverse })
    }

    pub fn presentation(&self) -> &PcPresentation {
        &self.pres
    }

    pub fn name(&self) -> &str {
        &self.pres.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order as u32
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub fn pow(&self, x: u32, e: i64) -> u32 {
        let ord = self.element_order(x) as i64;
        let e = e.rem_euclid(ord);
        (0..e).fold(0, |acc, _| self.mul(acc, x))
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    pub fn commutator(&self, x: u32, y: u32) -> u32 {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    /// `x^g = g⁻¹ x g`.
    pub fn conjugate(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn element_order(&self, x: u32) -> u64 {
        let mut y = x;
        let mut n = 1;
        while y != 0 {
            y = self.mul(y, x);
            n += 1;
        }
        n
    }

    pub fn generator(&self, i: usize) -> u32 {
        self.strides[i] as u32
    }

    pub fn generators(&self) -> Vec<u32> {
        (0..self.pres.ngens()).map(|i| self.generator(i)).collect()
    }

    pub fn exponents(&self, x: u32) -> Vec<u64> {
        let mut rest = x as usize;
        self.strides
            .iter()
            .map(|&s| {
                let e = rest / s;
                rest %= s;
                e as u64
            })
            .collect()
    }

    pub fn from_exponents(&self, e: &[u64]) -> Result<u32> {
        if e.len() != self.strides.len() {
            return Err(Error::BadParameter("exponent vector has the wrong length".into()));
        }
        let mut x = 0usize;
        for ((&ei, &s), &r) in e.iter().zip(&self.strides).zip(&self.pres.rel_orders) {
            if ei >= r {
                return Err(Error::BadParameter(format!("exponent {ei} out of range 0..{r}")));
            }
            x += ei as usize * s;
        }
        Ok(x as u32)
    }

    pub fn eval_word(&self, w: &[(usize, i64)]) -> u32 {
        w.iter().fold(0, |acc, &(g, e)| self.mul(acc, self.pow(self.generator(g), e)))
    }

    /// Normal form `A*B^2*C` (or `1`).
    pub fn format_element(&self, x: u32) -> String {
        let parts: Vec<String> = self
            .exponents(x)
            .iter()
            .zip(&self.pres.names)
            .filter(|(e, _)| **e > 0)
            .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl GroupOps for PcGroup {
    type Elem = u32;

    fn identity(&self) -> u32 {
        0
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        PcGroup::mul(self, *a, *b)
    }

    fn inv(&self, a: &u32) -> u32 {
        PcGroup::inv(self, *a)
    }
}
