//! Restriction from the Lie group ring to its two subgroup rings.

use pgcoh::dsl::{restriction_to_m, restriction_to_p};
use pgcoh::graded::GradedRing;

fn main() -> pgcoh::Result<()> {
    for map in [restriction_to_m()?, restriction_to_p()?] {
        let target = GradedRing::new(map.target().clone());
        let v = map.verify(&target)?;
        println!("{} -> {}: respects relations: {}", map.source().name(), map.target().name(), v.passes);
    }
    Ok(())
}
