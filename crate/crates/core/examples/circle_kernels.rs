//! Finite subgroups of the Lie group as kernels of homomorphisms to the circle.

use pgcoh::pcgroup::{identify, kernel_of_circle_hom, CircleHom, PcGroup};

fn main() -> pgcoh::Result<()> {
    for text in ["delta1 - beta", "delta1 + beta", "delta1 + beta + alpha", "delta1", "3*delta1 - beta"] {
        let h = CircleHom::parse(text)?;
        let k = PcGroup::new(kernel_of_circle_hom(&h)?)?;
        let name = identify(&k)?.unwrap_or_else(|| "unnamed".into());
        println!("ker({h}): order {}, {name}", k.order());
    }
    Ok(())
}
