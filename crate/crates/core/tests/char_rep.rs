use pgcoh::chartab::*;
use pgcoh::pcgroup::*;
use proptest::prelude::*;

fn grp(f: Family, n: u32, eps: i32) -> PcGroup {
    PcGroup::new(make_group(f, n, eps).unwrap()).unwrap()
}

fn table(f: Family, n: u32, eps: i32) -> CharacterTable {
    CharacterTable::new(&grp(f, n, eps)).unwrap()
}

fn failing(r: &RepRingReport) -> Vec<&str> {
    r.relations.iter().filter(|c| !c.holds).map(|c| c.relation.as_str()).collect()
}

#[test]
fn representation_ring_relations_order_81() {
    for eps in [1, -1] {
        let r = verify_rep_ring_relations(4, eps).unwrap();
        assert!(r.verified && failing(&r).is_empty(), "eps={eps} {:?}", failing(&r));
    }
}

#[test]
fn chi_has_trivial_determinant() {
    for n in [4, 5] {
        for eps in [1, -1] {
            let r = verify_rep_ring_relations(n, eps).unwrap();
            assert!(r.supplementary.iter().all(|c| c.holds), "n={n} eps={eps}");
        }
    }
    let r = verify_rep_ring_relations(5, 1).unwrap();
    assert_eq!(failing(&r), vec!["Λ^3(χ) = ψ^3"]);
}

#[test]
fn order_729_ring_relations() {
    let r = verify_rep_ring_relations(6, -1).unwrap();
    let bad = failing(&r);
    assert!(bad.iter().all(|s| s.contains('χ') && s.starts_with('Λ')), "{bad:?}");
    assert!(r.supplementary.iter().all(|c| c.holds));
}

#[test]
fn twisted_relations_hold_mod_three() {
    let r = verify_rep_ring_relations(5, -1).unwrap();
    assert_eq!(r.twist.len(), 1);
    assert!(r.twist[0].holds_mod_3, "{:?}", r.twist[0].relations);
    let r = verify_rep_ring_relations(5, 1).unwrap();
    assert!(!r.twist[0].holds_mod_3);
}

#[test]
fn xi_times_dual_at_identity() {
    let t = table(Family::G, 4, 1);
    let r = verify_rep_ring_relations(4, 1).unwrap();
    let xi = &t.characters[r.assignment.xi];
    let p = t.mul(xi, &t.dual(xi));
    assert_eq!(t.degree(&p), 9);
    assert_eq!(t.degree(xi), 3);
}

#[test]
fn entries_separate_the_family() {
    for n in [4, 5] {
        for eps in [1, -1] {
            let t = table(Family::G, n, eps);
            assert!(has_entry(&t, n, eps), "n={n} eps={eps}");
            assert!(!has_entry(&t, n, -eps), "n={n} eps={eps}");
        }
    }
}

#[test]
fn class_sizes_agree_but_tables_differ() {
    for n in [4, 5] {
        let (p, m) = (table(Family::G, n, 1), table(Family::G, n, -1));
        let sizes = |t: &CharacterTable| {
            let mut s: Vec<usize> = t.classes.iter().map(|c| c.size).collect();
            s.sort();
            s
        };
        assert_eq!(sizes(&p), sizes(&m));
        assert!(!tables_equivalent(&p, &m), "n={n}");
    }
}

#[test]
fn induction_restriction_adjunction() {
    for eps in [1, -1] {
        let g = grp(Family::G, 5, eps);
        let t = CharacterTable::new(&g).unwrap();
        let b = g.generator(1);
        let m = maximal_subgroups(&g).unwrap().into_iter().map(|m| m.subgroup).find(|s| s.contains(b)).unwrap();
        for phi in cyclic_homs(&g, &m.generators, t.level) {
            let phi: Vec<Cyc> = m.elements.iter().map(|&x| Cyc::zeta_pow(t.level, phi[x as usize] as i64)).collect();
            let ind = induce(&t, &g, &m, &phi);
            for chi in &t.characters {
                let lhs = t.inner(&ind, chi).unwrap();
                let rhs = subgroup_inner(&g, &m, &phi, &t.restrict(chi, &m)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn lambda_values_from_the_relations() {
    let t = table(Family::G, 4, 1);
    let r = verify_rep_ring_relations(4, 1).unwrap();
    let xi = &t.characters[r.assignment.xi];
    let l3 = t.decompose(&t.lambda3(xi).unwrap()).unwrap();
    assert_eq!(l3.iter().sum::<i64>(), 1);
    let l2 = t.decompose(&t.lambda2(xi).unwrap()).unwrap();
    assert_eq!(l2.iter().filter(|&&k| k != 0).count(), 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn lambda2_is_additive(a in proptest::collection::vec(0i64..2, 17), b in proptest::collection::vec(0i64..2, 17)) {
        let t = table(Family::G, 4, -1);
        let (x, y) = (t.compose(&a), t.compose(&b));
        let lhs = t.lambda2(&t.add(&x, &y)).unwrap();
        let rhs = t.sum(&[&t.lambda2(&x).unwrap(), &t.mul(&x, &y), &t.lambda2(&y).unwrap()]);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn products_of_genuine_characters_are_genuine(i in 0usize..17, j in 0usize..17) {
        let t = table(Family::G, 4, 1);
        let p = t.mul(&t.characters[i], &t.characters[j]);
        let d = t.decompose(&p).unwrap();
        prop_assert!(d.iter().all(|&k| k >= 0));
        prop_assert_eq!(t.degree(&p), t.degree(&t.characters[i]) * t.degree(&t.characters[j]));
    }
}
