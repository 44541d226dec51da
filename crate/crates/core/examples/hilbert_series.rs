//! Graded pieces of a presented cohomology ring.

use pgcoh::dsl::builtin_ring;
use pgcoh::graded::GradedRing;

fn main() -> pgcoh::Result<()> {
    for spec in ["thm10.G", "thm13.G(5,1)"] {
        let (pres, prov) = builtin_ring(spec)?;
        println!("{spec}: {}", prov.encodes);
        let r = GradedRing::new(pres);
        for d in 0..=8 {
            let piece = r.piece(d)?;
            println!("  H^{d} = {}", piece.group);
        }
    }
    Ok(())
}
