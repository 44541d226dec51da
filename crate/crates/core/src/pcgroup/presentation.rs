use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

/// A product of generator powers `g_{i₁}^{e₁} g_{i₂}^{e₂} ⋯` (not necessarily collected).
pub type Word = Vec<(usize, i64)>;

/// Inverse of a word.
pub fn word_inverse(w: &[(usize, i64)]) -> Word {
    w.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

/// `[x, y] = x⁻¹ y⁻¹ x y`.
pub fn word_commutator(x: &[(usize, i64)], y: &[(usize, i64)]) -> Word {
    let mut w = word_inverse(x);
    w.extend(word_inverse(y));
    w.extend_from_slice(x);
    w.extend_from_slice(y);
    w
}

/// Merges adjacent powers of the same generator and drops zero exponents.
pub fn word_simplify(w: &[(usize, i64)]) -> Word {
    let mut out: Word = Vec::new();
    for &(g, e) in w {
        if e == 0 {
            continue;
        }
        match out.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, e)),
        }
    }
    out
}

/// A power-commutator presentation of a finite 3-group.
///
/// Generators `g₁, …, g_k` carry relative orders that are powers of 3.
/// `g_i^{r_i}` equals `powers[i]` and `[g_j, g_i]` (for `i < j`) equals
/// `commutators[(j, i)]`; both words may only involve generators after `g_i`.
/// Missing entries mean the trivial word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PcPresentation {
    pub name: String,
    pub names: Vec<String>,
    pub rel_orders: Vec<u64>,
    pub powers: Vec<Word>,
    pub commutators: BTreeMap<(usize, usize), Word>,
}

fn is_power_of_three(mut r: u64) -> bool {
    if r < 3 {
        return false;
    }
    while r.is_multiple_of(3) {
        r /= 3;
    }
    r == 1
}

impl PcPresentation {
    pub fn new(name: impl Into<String>, gens: &[(&str, u64)]) -> Result<Self> {
        let p = PcPresentation {
            name: name.into(),
            names: gens.iter().map(|(n, _)| n.to_string()).collect(),
            rel_orders: gens.iter().map(|&(_, r)| r).collect(),
            powers: vec![Vec::new(); gens.len()],
            commutators: BTreeMap::new(),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn idx(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownIdentifier { name: name.to_string(), line: 0, col: 0 })
    }

    /// Parses a tiny word syntax used by the builtin families: `B^-3 C`.
    pub fn word(&self, text: &str) -> Result<Word> {
        let mut w = Vec::new();
        for tok in text.split_whitespace() {
            let (g, e) = match tok.split_once('^') {
                Some((g, e)) => {
                    (g, e.parse::<i64>().map_err(|_| Error::BadParameter(format!("bad exponent in `{tok}`")))?)
                }
                None => (tok, 1),
            };
            w.push((self.idx(g)?, e));
        }
        Ok(w)
    }

    pub fn set_power(&mut self, g: &str, rhs: &str) -> Result<()> {
        let i = self.idx(g)?;
        self.powers[i] = self.word(rhs)?;
        self.validate()
    }

    /// Sets `[a, b] = rhs` where `a` comes after `b`.
    pub fn set_commutator(&mut self, a: &str, b: &str, rhs: &str) -> Result<()> {
        let (j, i) = (self.idx(a)?, self.idx(b)?);
        let w = self.word(rhs)?;
        self.put_commutator(j, i, w)
    }

    pub fn put_commutator(&mut self, j: usize, i: usize, w: Word) -> Result<()> {
        if j <= i {
            return Err(Error::BadParameter(format!(
                "commutator [{}, {}] must list the later generator first",
                self.names[j], self.names[i]
            )));
        }
        let w = word_simplify(&w);
        if w.is_empty() {
            self.commutators.remove(&(j, i));
        } else {
            self.commutators.insert((j, i), w);
        }
        self.validate()
    }

    pub fn put_power(&mut self, i: usize, w: Word) -> Result<()> {
        self.powers[i] = word_simplify(&w);
        self.validate()
    }

    pub fn commutator(&self, j: usize, i: usize) -> &[(usize, i64)] {
        self.commutators.get(&(j, i)).map_or(&[], |w| w.as_slice())
    }

    /// Product of the relative orders.
    pub fn nominal_order(&self) -> u128 {
        self.rel_orders.iter().map(|&r| r as u128).product()
    }

    pub fn validate(&self) -> Result<()> {
        for (n, &r) in self.names.iter().zip(&self.rel_orders) {
            if !is_power_of_three(r) {
                return Err(Error::BadParameter(format!("relative order of `{n}` is {r}, not a power of 3")));
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for n in &self.names {
            if !seen.insert(n) {
                return Err(Error::BadParameter(format!("duplicate generator `{n}`")));
            }
        }
        for (i, w) in self.powers.iter().enumerate() {
            if let Some(&(g, _)) = w.iter().find(|&&(g, _)| g <= i) {
                return Err(Error::Inconsistent(format!(
                    "power relation of `{}` involves `{}`",
                    self.names[i], self.names[g]
                )));
            }
        }
        for (&(j, i), w) in &self.commutators {
            if let Some(&(g, _)) = w.iter().find(|&&(g, _)| g <= i) {
                return Err(Error::Inconsistent(format!(
                    "commutator [{}, {}] involves `{}`",
                    self.names[j], self.names[i], self.names[g]
                )));
            }
        }
        Ok(())
    }

    pub fn format_word(&self, w: &[(usize, i64)]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.iter()
            .map(|&(g, e)| if e == 1 { self.names[g].clone() } else { format!("{}^{}", self.names[g], e) })
            .collect::<Vec<_>>()
            .join("*")
    }
}
