//! Cohomology of circle kernels from the Gysin sequence.

use pgcoh::dsl::{builtin_ring, parse_poly};
use pgcoh::graded::GradedRing;
use pgcoh::pipeline::gysin_series;

fn main() -> pgcoh::Result<()> {
    let r = GradedRing::new(builtin_ring("thm10.G")?.0);
    for (group, xi) in [("G(4,1)", "delta1 - beta"), ("G(4,-1)", "delta1 + beta"), ("G'(4)", "delta1 + beta + alpha")] {
        println!("{group}, Euler class {xi}");
        for s in gysin_series(&r, &parse_poly(r.presentation(), xi)?, 7)? {
            let h = s.structure().map_or_else(
                || format!("order {} (extension undetermined)", s.total_order.clone().unwrap()),
                |g| g.to_string(),
            );
            println!("  H^{} = {h}   [{} by {}]", s.degree, s.coker_part, s.ker_part);
        }
    }
    Ok(())
}
