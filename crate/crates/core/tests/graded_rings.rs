use num_bigint::BigInt;
use pgcoh::dsl::builtin_ring;
use pgcoh::graded::{mult_kernel, GradedRing, Order3Action, Poly, RingMap, RingPresentation};

fn ring(spec: &str) -> GradedRing {
    GradedRing::with_bound(builtin_ring(spec).unwrap().0, 16)
}

fn p(r: &RingPresentation, text: &str) -> Poly {
    let mut acc = Poly::zero();
    for (coeff, word) in text.split('+').map(|t| {
        let t = t.trim();
        let (c, w) = match t.split_once('*') {
            Some((c, w)) if c.parse::<i64>().is_ok() => (c.parse::<i64>().unwrap(), w),
            _ => (1, t),
        };
        (c, w.to_string())
    }) {
        let mut term = r.constant(coeff);
        for g in word.split('*') {
            let (name, e) = match g.split_once('^') {
                Some((n, e)) => (n, e.parse().unwrap()),
                None => (g, 1),
            };
            term = r.mul(&term, &r.pow(&r.gen(name).unwrap(), e));
        }
        acc = acc.add(&term);
    }
    acc
}

fn structure(r: &GradedRing, d: u32) -> String {
    r.piece(d).unwrap().group.to_string()
}

#[test]
fn g_tilde_low_degrees() {
    let r = ring("thm10.G");
    assert_eq!(structure(&r, 0), "Z");
    assert_eq!(structure(&r, 1), "0");
    assert_eq!(structure(&r, 2), "Z + C3 + C3");
    assert_eq!(structure(&r, 3), "C3");
    assert_eq!(structure(&r, 4), "Z + C3 + C3 + C3 + C3");
    assert_eq!(structure(&r, 5), "C3");
    assert_eq!(structure(&r, 6), "Z + C3 + C3 + C3 + C3 + C3 + C3");
    let pres = r.presentation();
    let mu = pres.gen("mu").unwrap();
    assert!(!r.is_zero(&mu).unwrap());
    let beta_mu = p(pres, "beta*mu");
    assert!(!r.is_zero(&beta_mu).unwrap());
}

#[test]
fn kernels_of_multiplication_on_g_tilde() {
    let r = ring("thm10.G");
    let pres = r.presentation();
    let k = mult_kernel(&r, &p(pres, "delta1 + -1*beta"), 4).unwrap();
    assert_eq!(k.group.order(), Some(BigInt::from(3)));
    let target = p(pres, "delta1*beta + alpha^2");
    let piece = r.piece(4).unwrap();
    assert!(k.lattice.contains(&piece.vector(&target).unwrap()));
    assert!(mult_kernel(&r, &p(pres, "delta1 + beta + alpha"), 4).unwrap().group.is_trivial());
    assert_eq!(mult_kernel(&r, &p(pres, "delta1 + beta"), 2).unwrap().group.order(), Some(BigInt::from(3)));
    assert!(mult_kernel(&r, &pres.one(), 4).unwrap().group.is_trivial());
}

#[test]
fn y_action_h1_matches_series() {
    let r = ring("thm6.P");
    let pres = r.presentation().clone();
    let g = pres.gen("gamma").unwrap().sub(&pres.gen("alpha").unwrap());
    let map = RingMap::from_named(pres.clone(), pres, &[("gamma", g)]).unwrap();
    let act = Order3Action::new(map, &r).unwrap();
    // (t^6 - t^4 + t^2) / ((1 - t^6)(1 - t^2)) up to t^12
    let expected = [0, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 2];
    for d in 0..=12u32 {
        let h1 = act.h1_c3(&r, d).unwrap();
        assert!(h1.group.torsion().iter().all(|t| t == &BigInt::from(3)), "degree {d}: {}", h1.group);
        assert_eq!(h1.group.free_rank(), 0);
        assert_eq!(h1.group.torsion().len(), expected[d as usize], "degree {d}");
    }
}

#[test]
fn thm13_reduce_examples() {
    let r = ring("thm13.G(5,1)");
    let pres = r.presentation();
    assert!(r.is_zero(&p(pres, "3*delta2 + -4*delta1^2")).unwrap());
    assert!(r.is_zero(&Poly::zero()).unwrap());
    let rp = ring("thm6.P");
    assert!(rp.is_zero(&p(rp.presentation(), "alpha*delta1")).unwrap());
}
