//! Fixed points and H^1(C3, -) for an order-3 ring automorphism.

use pgcoh::dsl::{builtin_ring, parse_poly};
use pgcoh::graded::{GradedRing, Order3Action, RingMap};

fn main() -> pgcoh::Result<()> {
    let (pres, _) = builtin_ring("thm6.P")?;
    let r = GradedRing::new(pres.clone());
    let image = parse_poly(&pres, "gamma - alpha")?;
    let act = Order3Action::new(RingMap::from_named(pres.clone(), pres, &[("gamma", image)])?, &r)?;
    for d in 0..=12 {
        println!(
            "degree {d:>2}: fixed {:<24} H^1 {}",
            act.fixed_subgroup(&r, d)?.group.to_string(),
            act.h1_c3(&r, d)?.group
        );
    }
    Ok(())
}
