//! Integral cohomology of finite abelian groups via Künneth.

use num_bigint::BigInt;
use pgcoh::pipeline::abelian_cohomology;

fn main() -> pgcoh::Result<()> {
    for orders in [vec![81u64], vec![27, 3], vec![3, 3, 3, 3]] {
        let big: Vec<BigInt> = orders.iter().map(|&o| BigInt::from(o)).collect();
        println!("{orders:?}");
        for (m, h) in abelian_cohomology(&big, 6)?.iter().enumerate() {
            println!("  H^{m} = {h}");
        }
    }
    Ok(())
}
