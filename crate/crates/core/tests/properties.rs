use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use pgcoh::dsl::{builtin_group, builtin_ring, parse_group, parse_poly, parse_ring, print_group, print_ring};
use pgcoh::graded::{GradedRing, Poly};
use pgcoh::linalg::{smith_normal_form, AbelianInvariants, IntMatrix};
use pgcoh::pcgroup::{isomorphic, PcGroup};
use proptest::prelude::*;
use std::sync::OnceLock;

fn g_tilde() -> &'static GradedRing {
    static R: OnceLock<GradedRing> = OnceLock::new();
    R.get_or_init(|| GradedRing::with_bound(builtin_ring("thm10.G").unwrap().0, 12))
}

fn matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-12i64..13, c), r)
            .prop_map(|rows| IntMatrix::from_rows(&rows))
    })
}

fn cyclic(orders: &[u64]) -> AbelianInvariants {
    AbelianInvariants::from_cyclic_orders(0, &orders.iter().map(|&o| BigInt::from(o)).collect::<Vec<_>>())
}

/// A product of generators of `G̃` given by exponent choices, with a coefficient.
fn monomial(r: &GradedRing, exps: &[u32], c: i64) -> Poly {
    let pres = r.presentation();
    let mut p = pres.constant(c);
    for (name, &e) in pres.names().iter().zip(exps) {
        p = pres.mul(&p, &pres.pow(&pres.gen(name).unwrap(), e));
    }
    p
}

fn small_monomial() -> impl Strategy<Value = (Vec<u32>, i64)> {
    (proptest::collection::vec(0u32..2, 6), -4i64..5)
}

fn degree_ok(r: &GradedRing, p: &Poly) -> bool {
    r.presentation().degree_of(p).is_some_and(|d| d <= r.bound())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_is_a_unimodular_diagonalization(a in matrix()) {
        let f = smith_normal_form(&a);
        prop_assert_eq!(&(&f.u * &a) * &f.v, f.s.clone());
        prop_assert!(f.u.is_unimodular() && f.v.is_unimodular());
        let d = f.diagonal();
        for w in d.windows(2) {
            prop_assert!(w[1].is_zero() || w[1].is_multiple_of(&w[0]));
        }
        prop_assert!(d.iter().all(|x| *x >= BigInt::zero()));
    }

    #[test]
    fn smith_form_ignores_row_order(a in matrix()) {
        let rev: Vec<usize> = (0..a.rows()).rev().collect();
        prop_assert_eq!(smith_normal_form(&a).diagonal(), smith_normal_form(&a.select_rows(&rev)).diagonal());
        prop_assert_eq!(smith_normal_form(&a).rank(), smith_normal_form(&a.transpose()).rank());
    }

    #[test]
    fn abelian_group_laws(a in proptest::collection::vec(2u64..30, 0..3), b in proptest::collection::vec(2u64..30, 0..3)) {
        let (x, y) = (cyclic(&a), cyclic(&b));
        prop_assert_eq!(x.tensor(&y), y.tensor(&x));
        prop_assert_eq!(x.tor(&y), y.tor(&x));
        prop_assert_eq!(x.tensor(&y), x.tor(&y));
        prop_assert_eq!(x.direct_sum(&y).order(), Some(x.order().unwrap() * y.order().unwrap()));
        let z = AbelianInvariants::from_cyclic_orders(1, &[]);
        prop_assert_eq!(x.tensor(&z), x.clone());
        prop_assert!(x.tor(&z).is_trivial());
    }

    #[test]
    fn tor_of_cyclic_groups_is_cyclic_of_the_gcd(m in 2u64..200, n in 2u64..200) {
        let g = m.gcd(&n);
        let expect = if g == 1 { AbelianInvariants::trivial() } else { cyclic(&[g]) };
        prop_assert_eq!(cyclic(&[m]).tor(&cyclic(&[n])), expect);
    }

    #[test]
    fn products_commute_up_to_the_graded_sign((ex, cx) in small_monomial(), (ey, cy) in small_monomial()) {
        let r = g_tilde();
        let pres = r.presentation();
        let (x, y) = (monomial(r, &ex, cx), monomial(r, &ey, cy));
        let xy = pres.mul(&x, &y);
        prop_assume!(degree_ok(r, &xy));
        let (dx, dy) = (pres.degree_of(&x).unwrap(), pres.degree_of(&y).unwrap());
        let sign = if dx % 2 == 1 && dy % 2 == 1 { -1 } else { 1 };
        let diff = xy.sub(&pres.mul(&y, &x).scale(&BigInt::from(sign)));
        prop_assert!(r.is_zero(&diff).unwrap());
        if dx % 2 == 1 {
            prop_assert!(r.is_zero(&pres.mul(&x, &x).scale(&BigInt::from(2))).unwrap());
        }
    }

    #[test]
    fn relations_generate_an_ideal(i in 0usize..20, (e, c) in small_monomial()) {
        let r = g_tilde();
        let pres = r.presentation();
        let rel = &pres.relations()[i % pres.relations().len()];
        let p = pres.mul(&monomial(r, &e, c), rel);
        prop_assume!(!p.is_zero() && degree_ok(r, &p));
        prop_assert!(r.is_zero(&p).unwrap());
    }

    #[test]
    fn polynomials_survive_printing_and_parsing(terms in proptest::collection::vec(small_monomial(), 1..4)) {
        let r = g_tilde();
        let pres = r.presentation();
        let p = terms.iter().fold(Poly::zero(), |acc, (e, c)| acc.add(&monomial(r, e, *c)));
        let text = pres.format(&p);
        prop_assert_eq!(parse_poly(pres, &text).unwrap(), p, "{}", text);
    }

    #[test]
    fn group_presentations_survive_printing_and_parsing(
        spec in prop::sample::select(vec!["G(4,1)", "G(4,-1)", "G'(4)", "E", "wreath", "G(5,1)", "P(5,-1)", "M(5)"])
    ) {
        let (pres, _) = builtin_group(spec).unwrap();
        let text = print_group(&pres);
        let back = parse_group(&text).unwrap();
        prop_assert_eq!(print_group(&back), text);
        let (a, b) = (PcGroup::new(pres).unwrap(), PcGroup::new(back).unwrap());
        prop_assert!(isomorphic(&a, &b).unwrap().isomorphic);
    }

    #[test]
    fn ring_presentations_survive_printing_and_parsing(
        spec in prop::sample::select(vec!["prop4.M", "thm6.P", "thm6.Pfin(5)", "thm10.G", "thm10.G-stated", "lemma8.gr", "thm13.G(5,-1)", "thm13.G(6,1)"])
    ) {
        let (pres, _) = builtin_ring(spec).unwrap();
        let text = print_ring(&pres);
        let back = parse_ring(&text).unwrap();
        prop_assert_eq!(print_ring(&back), text);
        prop_assert_eq!(back.relations(), pres.relations());
    }
}
