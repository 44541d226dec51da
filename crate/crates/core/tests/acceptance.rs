//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.

use std::process::ExitCode;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use pgcoh::chartab::{has_entry, tables_equivalent, verify_rep_ring_relations, CharacterTable};
use pgcoh::dsl::{
    builtin_group, builtin_map, builtin_ring, parse_group, parse_poly, parse_ring, print_group, print_ring,
    restriction_to_m, restriction_to_p,
};
use pgcoh::graded::{mult_kernel, GradedRing, Order3Action, RingMap};
use pgcoh::linalg::{smith_normal_form, AbelianInvariants, IntMatrix};
use pgcoh::pcgroup::{
    center, exponent, intersection, isomorphic, kernel_of_circle_hom, make_group, maximal_subgroups, CircleHom, Family,
    PcGroup, Subgroup,
};
use pgcoh::pipeline::{exactness_bookkeeping, gysin_segment};
use proptest::prelude::*;
use proptest::test_runner::{TestCaseError, TestRunner};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ring(spec: &str, bound: u32) -> Result<GradedRing, String> {
    Ok(GradedRing::with_bound(builtin_ring(spec).map_err(|e| e.to_string())?.0, bound))
}

fn grp(f: Family, n: u32, eps: i32) -> Result<PcGroup, String> {
    PcGroup::new(make_group(f, n, eps).map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

fn iso(a: &PcGroup, b: &PcGroup) -> Result<bool, String> {
    Ok(isomorphic(a, b).map_err(|e| e.to_string())?.isomorphic)
}

fn order81_gysin_table() -> Check {
    let r = ring("thm10.G", 8)?;
    let order = |xi: &str, m: u32| -> Result<Option<BigInt>, String> {
        let x = parse_poly(r.presentation(), xi).map_err(|e| e.to_string())?;
        Ok(gysin_segment(&r, &x, m).map_err(|e| e.to_string())?.total_order)
    };
    let rows: [(&str, u32, u64); 9] = [
        ("delta1 - beta", 3, 3),
        ("delta1 + beta", 3, 9),
        ("delta1 + beta + alpha", 3, 3),
        ("delta1", 3, 3),
        ("delta1 - beta", 4, 27),
        ("delta1 + beta + alpha", 4, 27),
        ("delta1", 4, 81),
        ("delta1 - beta", 5, 3),
        ("delta1 + beta + alpha", 5, 1),
    ];
    for (xi, m, want) in rows {
        let got = order(xi, m)?;
        ensure(got == Some(BigInt::from(want)), || format!("H^{m} for xi = {xi}: got {got:?}, want {want}"))?;
    }
    Ok(())
}

fn multiplication_kernels_in_degree_four() -> Check {
    let r = ring("thm10.G", 8)?;
    let p = |t: &str| parse_poly(r.presentation(), t).map_err(|e| e.to_string());
    let k = mult_kernel(&r, &p("delta1 - beta")?, 4).map_err(|e| e.to_string())?;
    ensure(k.group.order() == Some(BigInt::from(3)), || format!("kernel of delta1 - beta is {}", k.group))?;
    let gen = p("delta1*beta + alpha^2")?;
    ensure(!r.is_zero(&gen).map_err(|e| e.to_string())?, || "delta1*beta + alpha^2 vanishes".into())?;
    let v = r.piece(4).map_err(|e| e.to_string())?.vector(&gen).map_err(|e| e.to_string())?;
    ensure(k.lattice.contains(&v), || "delta1*beta + alpha^2 is not in the kernel".into())?;
    let k2 = mult_kernel(&r, &p("delta1 + beta + alpha")?, 4).map_err(|e| e.to_string())?;
    ensure(k2.group.is_trivial(), || format!("kernel of delta1 + beta + alpha is {}", k2.group))
}

fn primed_map_is_an_isomorphism() -> Check {
    for n in [5, 6] {
        let (m, _) = builtin_map(&format!("cor14({n})")).map_err(|e| e.to_string())?;
        let src = GradedRing::with_bound(m.source().clone(), 12);
        let dst = GradedRing::with_bound(m.target().clone(), 12);
        let v = m.verify(&dst).map_err(|e| e.to_string())?;
        ensure(v.passes, || format!("n = {n}: some relation does not map to zero"))?;
        ensure(m.is_bijective(&src, &dst, 12).map_err(|e| e.to_string())?, || {
            format!("n = {n}: not bijective to degree 12")
        })?;
    }
    Ok(())
}

/// Coefficients of `(t⁶ − t⁴ + t²) / ((1 − t⁶)(1 − t²))` by long division of power series.
fn series_oracle(max: usize) -> Vec<i64> {
    let mut num = vec![0i64; max + 1];
    for (e, c) in [(2, 1), (4, -1), (6, 1)] {
        num[e] = c;
    }
    // denominator 1 − t² − t⁶ + t⁸
    let mut den = vec![0i64; max + 1];
    for (e, c) in [(0, 1), (2, -1), (6, -1), (8, 1)] {
        if e <= max {
            den[e] = c;
        }
    }
    let mut q = vec![0i64; max + 1];
    for k in 0..=max {
        let acc: i64 = (1..=k).map(|i| den[i] * q[k - i]).sum();
        q[k] = num[k] - acc;
    }
    q
}

fn h1_of_the_y_action() -> Check {
    let r = ring("thm6.P", 14)?;
    let pres = r.presentation().clone();
    let img = parse_poly(&pres, "gamma - alpha").map_err(|e| e.to_string())?;
    let map = RingMap::from_named(pres.clone(), pres, &[("gamma", img)]).map_err(|e| e.to_string())?;
    let act = Order3Action::new(map, &r).map_err(|e| e.to_string())?;
    let expected = series_oracle(12);
    for d in 0..=12u32 {
        let h1 = act.h1_c3(&r, d).map_err(|e| e.to_string())?.group;
        let elementary = h1.free_rank() == 0 && h1.torsion().iter().all(|t| *t == BigInt::from(3));
        ensure(elementary, || format!("degree {d}: H^1 = {h1} is not an F3-vector space"))?;
        let dim = h1.torsion().len() as i64;
        ensure(dim == expected[d as usize], || {
            format!("degree {d}: dimension {dim}, series {}", expected[d as usize])
        })?;
    }
    Ok(())
}

fn restriction_maps_verify() -> Check {
    for (name, m) in [("M", restriction_to_m()), ("P", restriction_to_p())] {
        let m = m.map_err(|e| e.to_string())?;
        let target = GradedRing::with_bound(m.target().clone(), 14);
        let v = m.verify(&target).map_err(|e| e.to_string())?;
        ensure(v.passes, || format!("restriction to {name} fails"))?;
    }
    Ok(())
}

fn representation_ring_relations() -> Check {
    let mut bad = Vec::new();
    for n in [4, 5] {
        for eps in [1, -1] {
            let r = verify_rep_ring_relations(n, eps).map_err(|e| e.to_string())?;
            for c in r.relations.iter().filter(|c| !c.holds) {
                bad.push(format!("(n,eps) = ({n},{eps}): {}", c.relation));
            }
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))
}

fn character_separation() -> Check {
    let table =
        |f, n, e| -> Result<CharacterTable, String> { CharacterTable::new(&grp(f, n, e)?).map_err(|e| e.to_string()) };
    let (p, m, gp) = (table(Family::G, 4, 1)?, table(Family::G, 4, -1)?, table(Family::GPrime, 4, 1)?);
    ensure(!tables_equivalent(&p, &m), || "G(4,1) and G(4,-1) tables agree".into())?;
    ensure(tables_equivalent(&gp, &m), || "G'(4) and G(4,-1) tables differ".into())?;
    for n in [4, 5] {
        for eps in [1, -1] {
            let t = table(Family::G, n, eps)?;
            ensure(has_entry(&t, n, eps) && !has_entry(&t, n, -eps), || format!("entry test fails for G({n},{eps})"))?;
        }
    }
    Ok(())
}

fn max_element_order(g: &PcGroup, s: &Subgroup) -> u64 {
    g.elements().filter(|&x| s.contains(x)).map(|x| g.element_order(x)).max().unwrap_or(1)
}

fn group_invariants() -> Check {
    for n in [4u32, 5] {
        for eps in [1, -1] {
            let g = grp(Family::G, n, eps)?;
            let z = center(&g).map_err(|e| e.to_string())?;
            ensure(z.order() == Some(BigInt::from(3u64.pow(n - 3))), || format!("G({n},{eps}): centre {z}"))?;
            let maxes = maximal_subgroups(&g).map_err(|e| e.to_string())?;
            ensure(maxes.len() == 4, || format!("G({n},{eps}): {} maximal subgroups", maxes.len()))?;
            let (a, b) = (g.generator(0), g.generator(1));
            let p = grp(Family::P, n, eps)?;
            for m in &maxes {
                let h = PcGroup::new(m.subgroup.presentation(&g, "H").map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                if m.subgroup.contains(b) {
                    let inv = m.subgroup.abelian_invariants(&g).map(|i| i.to_string());
                    let want = format!("C3 + C{}", 3u64.pow(n - 2));
                    ensure(inv.as_deref() == Some(want.as_str()), || format!("G({n},{eps}): M is {inv:?}"))?;
                } else if m.subgroup.contains(a) {
                    ensure(iso(&h, &p)?, || format!("G({n},{eps}): the subgroup containing A is not P"))?;
                } else if n == 4 && eps == -1 {
                    ensure(iso(&h, &p)? && exponent(&h) == 3, || "G(4,-1): AB subgroup is not P(4,-1)".into())?;
                } else {
                    let cyclic_index_3 = max_element_order(&g, &m.subgroup) * 3 == m.subgroup.order() as u64;
                    ensure(!m.subgroup.is_abelian(&g) && cyclic_index_3, || {
                        format!("G({n},{eps}): AB subgroup is not non-abelian metacyclic")
                    })?;
                }
            }
            let subs: Vec<Subgroup> = maxes.into_iter().map(|m| m.subgroup).collect();
            let nn = intersection(&g, &subs).map_err(|e| e.to_string())?;
            let inv = nn.abelian_invariants(&g).map(|i| i.to_string());
            let want = if n == 4 { "C3 + C3".to_string() } else { format!("C3 + C{}", 3u64.pow(n - 3)) };
            ensure(inv.as_deref() == Some(want.as_str()), || format!("G({n},{eps}): N is {inv:?}"))?;
        }
        let c = 3i64.pow(n - 4);
        let mut cases =
            vec![(CircleHom::new(c, 0, -1), grp(Family::G, n, 1)?), (CircleHom::new(c, 0, 1), grp(Family::G, n, -1)?)];
        if n == 4 {
            cases.push((CircleHom::new(1, 1, 1), grp(Family::GPrime, 4, 1)?));
            cases.push((CircleHom::new(1, 0, 0), grp(Family::Wreath, 4, 1)?));
        }
        for (h, want) in cases {
            let k = PcGroup::new(kernel_of_circle_hom(&h).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            ensure(iso(&k, &want)?, || format!("kernel of {h} has the wrong type"))?;
        }
    }
    Ok(())
}

fn run_property<S: Strategy>(name: &str, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Check {
    let mut runner =
        TestRunner::new(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() });
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn property_suites() -> Check {
    run_property("Smith form", proptest::collection::vec(proptest::collection::vec(-9i64..10, 3), 1..5), |rows| {
        let a = IntMatrix::from_rows(&rows);
        let f = smith_normal_form(&a);
        prop_assert_eq!(&(&f.u * &a) * &f.v, f.s.clone());
        prop_assert!(f.u.is_unimodular() && f.v.is_unimodular());
        let d = f.diagonal();
        for w in d.windows(2) {
            prop_assert!(w[1].is_zero() || w[1].is_multiple_of(&w[0]));
        }
        Ok(())
    })?;
    run_property("abelian group algebra", (2u64..60, 2u64..60), |(m, n)| {
        let c = |k: u64| AbelianInvariants::from_cyclic_orders(0, &[BigInt::from(k)]);
        let g = BigInt::from(m.gcd(&n));
        prop_assert_eq!(c(m).tensor(&c(n)), c(n).tensor(&c(m)));
        prop_assert_eq!(c(m).tor(&c(n)).order(), Some(g.clone()));
        prop_assert_eq!(c(m).tensor(&c(n)).order(), Some(g));
        Ok(())
    })?;
    let r = ring("thm10.G", 10)?;
    let pres = r.presentation();
    let mono = |exps: &[u32], c: i64| {
        let mut p = pres.constant(c);
        for (name, &e) in pres.names().iter().zip(exps) {
            p = pres.mul(&p, &pres.pow(&pres.gen(name).expect("generator"), e));
        }
        p
    };
    let exps = || proptest::collection::vec(0u32..2, pres.ngens());
    run_property("graded commutativity", (exps(), exps()), |(ex, ey)| {
        let (x, y) = (mono(&ex, 1), mono(&ey, 1));
        let xy = pres.mul(&x, &y);
        if pres.degree_of(&xy).is_none_or(|d| d > r.bound()) {
            return Ok(());
        }
        let odd = |p| pres.degree_of(p).is_some_and(|d| d % 2 == 1);
        let sign = BigInt::from(if odd(&x) && odd(&y) { -1 } else { 1 });
        prop_assert!(r.is_zero(&xy.sub(&pres.mul(&y, &x).scale(&sign))).unwrap());
        Ok(())
    })?;
    run_property("exactness bookkeeping", (-2i64..3, -2i64..3, -9i64..10), |(a, b, c)| {
        let x = pres
            .gen("delta1")
            .unwrap()
            .scale(&BigInt::from(c))
            .add(&pres.gen("alpha").unwrap().scale(&BigInt::from(a)))
            .add(&pres.gen("beta").unwrap().scale(&BigInt::from(b)));
        for check in exactness_bookkeeping(&r, &x, 7).unwrap() {
            prop_assert!(check.consistent, "{:?}", check);
        }
        Ok(())
    })?;
    run_property("polynomial round trip", (exps(), -4i64..5), |(e, c)| {
        let p = mono(&e, c);
        prop_assert_eq!(parse_poly(pres, &pres.format(&p)).unwrap(), p);
        Ok(())
    })?;
    run_property(
        "presentation round trip",
        prop::sample::select(vec!["prop4.M", "thm6.P", "thm10.G", "lemma8.gr", "thm13.G(5,-1)"]),
        |spec| {
            let text = print_ring(&builtin_ring(spec).unwrap().0);
            prop_assert_eq!(print_ring(&parse_ring(&text).unwrap()), text);
            Ok(())
        },
    )?;
    run_property("group round trip", prop::sample::select(vec!["G(4,1)", "G'(4)", "E", "P(5,1)"]), |spec| {
        let text = print_group(&builtin_group(spec).unwrap().0);
        prop_assert_eq!(print_group(&parse_group(&text).unwrap()), text);
        Ok(())
    })
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("order-81 Gysin table", order81_gysin_table),
        ("multiplication kernels on H^4", multiplication_kernels_in_degree_four),
        ("primed map is a ring isomorphism to degree 12 (n = 5, 6)", primed_map_is_an_isomorphism),
        ("H^1 of the order-3 action matches the Poincaré series", h1_of_the_y_action),
        ("restriction maps respect all relations", restriction_maps_verify),
        ("representation-ring relations for n = 4, 5", representation_ring_relations),
        ("character-table separation", character_separation),
        ("group-theory invariants and circle kernels", group_invariants),
        ("property suites", property_suites),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {}: PASS  {name}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
