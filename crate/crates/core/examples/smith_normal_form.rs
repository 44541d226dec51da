//! Smith normal form of an integer matrix and the abelian group it presents.

use pgcoh::linalg::{cokernel, smith_normal_form, IntMatrix};

fn main() {
    let a = IntMatrix::from_rows(&[vec![6, 4, 10], vec![3, 9, 12], vec![2, 2, 2]]);
    let f = smith_normal_form(&a);
    println!("A =\n{a}");
    println!("U·A·V =\n{}", f.s);
    println!("invariant factors: {:?}", f.invariant_factors().iter().map(|d| d.to_string()).collect::<Vec<_>>());
    println!("coker A = {}", cokernel(&a));
}
