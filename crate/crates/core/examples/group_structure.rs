//! Center, maximal subgroups and identification for the groups G(n,±1).

use pgcoh::pcgroup::{center, exponent, identify, isomorphic, make_group, maximal_subgroups, Family, PcGroup};

fn main() -> pgcoh::Result<()> {
    for n in [4, 5] {
        for eps in [1, -1] {
            let g = PcGroup::new(make_group(Family::G, n, eps)?)?;
            println!("{}: order {}, exponent {}, centre {}", g.name(), g.order(), exponent(&g), center(&g)?);
            for m in maximal_subgroups(&g)? {
                let h = PcGroup::new(m.subgroup.presentation(&g, "H")?)?;
                let name = identify(&h)?.unwrap_or_else(|| "unnamed".into());
                println!("  maximal subgroup {:?}: order {}, {name}", m.functional, h.order());
            }
        }
        let p = PcGroup::new(make_group(Family::G, n, 1)?)?;
        let m = PcGroup::new(make_group(Family::G, n, -1)?)?;
        println!("G({n},1) ≅ G({n},-1)? {}", isomorphic(&p, &m)?.isomorphic);
    }
    Ok(())
}
