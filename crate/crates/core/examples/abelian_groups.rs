//! Tensor products and Tor of finitely generated abelian groups.

use num_bigint::BigInt;
use pgcoh::linalg::AbelianInvariants;

fn main() {
    let g = AbelianInvariants::from_cyclic_orders(1, &[BigInt::from(3), BigInt::from(27)]);
    let h = AbelianInvariants::from_cyclic_orders(0, &[BigInt::from(9)]);
    println!("G = {g}, H = {h}");
    println!("G ⊕ H   = {}", g.direct_sum(&h));
    println!("G ⊗ H   = {}", g.tensor(&h));
    println!("Tor(G,H) = {}", g.tor(&h));
    println!("primary parts of G: {:?}", g.primary_parts().iter().map(|p| p.to_string()).collect::<Vec<_>>());
}
