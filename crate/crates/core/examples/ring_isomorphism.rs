//! The primed generators identify the cohomology rings of G(n,1) and G(n,-1).

use pgcoh::dsl::primed_map;
use pgcoh::graded::GradedRing;

fn main() -> pgcoh::Result<()> {
    for n in [5, 6] {
        let map = primed_map(n)?;
        let src = GradedRing::with_bound(map.source().clone(), 12);
        let dst = GradedRing::with_bound(map.target().clone(), 12);
        let v = map.verify(&dst)?;
        println!("n = {n}: {} relations, all map to zero: {}", v.relations.len(), v.passes);
        for row in map.bijective_report(&src, &dst, 12)? {
            println!("  degree {:>2}: {:?} ({} -> {})", row.degree, row.verdict, row.source, row.target);
        }
    }
    Ok(())
}
