//! Parsing a ring presentation from text and reducing elements in it.

use pgcoh::dsl::{parse_poly, parse_ring, print_ring};
use pgcoh::graded::GradedRing;

const TEXT: &str = "ring toy {
  gen x deg 2, y deg 2, u deg 3;
  rel 3*x, 9*y, x^2 = 3*y^2, u*x;
}
";

fn main() -> pgcoh::Result<()> {
    let pres = parse_ring(TEXT)?;
    print!("{}", print_ring(&pres));
    let r = GradedRing::with_bound(pres, 10);
    for d in 0..=6 {
        println!("degree {d}: {}", r.piece(d)?.group);
    }
    let p = parse_poly(r.presentation(), "x^2 - 3*y^2 + 3*x*y")?;
    println!("x^2 - 3*y^2 + 3*x*y is zero: {}", r.is_zero(&p)?);
    Ok(())
}
