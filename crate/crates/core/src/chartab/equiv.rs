use std::collections::HashMap;

use super::cyclotomic::Cyc;
use super::table::CharacterTable;

fn lifted(t: &CharacterTable, level: u32) -> Vec<Vec<Cyc>> {
    t.characters.iter().map(|r| r.iter().map(|v| v.lift(level)).collect()).collect()
}

fn column_signature(rows: &[Vec<Cyc>], j: usize) -> Vec<Cyc> {
    let mut s: Vec<Cyc> = rows.iter().map(|r| r[j].clone()).collect();
    s.sort();
    s
}

fn prefix_multiset(rows: &[Vec<Cyc>], cols: &[usize]) -> HashMap<Vec<Cyc>, usize> {
    let mut m = HashMap::new();
    for r in rows {
        *m.entry(cols.iter().map(|&j| r[j].clone()).collect()).or_insert(0) += 1;
    }
    m
}

/// Whether the tables agree after permuting rows and permuting columns by a
/// bijection that preserves class sizes.
pub fn tables_equivalent(t1: &CharacterTable, t2: &CharacterTable) -> bool {
    equivalent(t1, t2, false)
}

/// As [`tables_equivalent`], with the column bijection also commuting with the cube map.
pub fn tables_equivalent_with_power_maps(t1: &CharacterTable, t2: &CharacterTable) -> bool {
    equivalent(t1, t2, true)
}

fn equivalent(t1: &CharacterTable, t2: &CharacterTable, power_maps: bool) -> bool {
    if t1.order != t2.order || t1.num_classes() != t2.num_classes() {
        return false;
    }
    let level = t1.level.max(t2.level);
    let (r1, r2) = (lifted(t1, level), lifted(t2, level));
    let k = t1.num_classes();
    let sig1: Vec<Vec<Cyc>> = (0..k).map(|j| column_signature(&r1, j)).collect();
    let sig2: Vec<Vec<Cyc>> = (0..k).map(|j| column_signature(&r2, j)).collect();
    let cands: Vec<Vec<usize>> = (0..k)
        .map(|j| (0..k).filter(|&i| t1.classes[j].size == t2.classes[i].size && sig1[j] == sig2[i]).collect())
        .collect();
    if cands.iter().any(Vec::is_empty) {
        return false;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&j| cands[j].len());

    let mut pi = vec![usize::MAX; k];
    let mut used = vec![false; k];
    search(t1, t2, &r1, &r2, &cands, &order, power_maps, 0, &mut pi, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn search(
    t1: &CharacterTable,
    t2: &CharacterTable,
    r1: &[Vec<Cyc>],
    r2: &[Vec<Cyc>],
    cands: &[Vec<usize>],
    order: &[usize],
    power_maps: bool,
    depth: usize,
    pi: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let j = order[depth];
    for &i in &cands[j] {
        if used[i] {
            continue;
        }
        pi[j] = i;
        used[i] = true;
        let cube_ok = !power_maps
            || order[..=depth].iter().all(|&a| {
                let b = t1.classes[a].cube;
                pi[b] == usize::MAX || pi[b] == t2.classes[pi[a]].cube
            });
        let cols1: Vec<usize> = order[..=depth].to_vec();
        let cols2: Vec<usize> = cols1.iter().map(|&a| pi[a]).collect();
        if cube_ok
            && prefix_multiset(r1, &cols1) == prefix_multiset(r2, &cols2)
            && search(t1, t2, r1, r2, cands, order, power_maps, depth + 1, pi, used)
        {
            return true;
        }
        pi[j] = usize::MAX;
        used[i] = false;
    }
    false
}

/// The value `η(2 + η^{ε·3^{n-3}})` for `η = ζ^a`, `ζ` a primitive `3^{n-2}`-th root.
pub fn family_entry(n: u32, eps: i32, a: i64) -> Cyc {
    let level = n - 2;
    let eta = Cyc::zeta_pow(level, a);
    let shifted = Cyc::zeta_pow(level, a * eps as i64 * 3i64.pow(n - 3));
    eta.mul(&Cyc::integer(level, 2).add(&shifted))
}

/// Whether some entry of `t` equals `η(2 + η^{ε·3^{n-3}})` for a primitive `3^{n-2}`-th root `η`.
pub fn has_entry(t: &CharacterTable, n: u32, eps: i32) -> bool {
    let m = 3i64.pow(n - 2);
    (1..m).filter(|a| a % 3 != 0).any(|a| t.has_value(&family_entry(n, eps, a)))
}
