//! Representation-ring and λ-operation relations checked on character tables.

use pgcoh::chartab::verify_rep_ring_relations;

fn main() -> pgcoh::Result<()> {
    for (n, eps) in [(4, 1), (4, -1), (5, 1)] {
        let r = verify_rep_ring_relations(n, eps)?;
        println!("{} (verified: {})", r.group, r.verified);
        for c in r.relations.iter().chain(&r.supplementary) {
            println!("  {:<40} {}", c.relation, if c.holds { "holds" } else { "FAILS" });
        }
        for t in &r.twist {
            println!("  twisted relations mod 3: {}", t.holds_mod_3);
        }
    }
    Ok(())
}
