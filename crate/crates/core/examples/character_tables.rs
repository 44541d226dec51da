//! Exact character tables and the entry that tells G(n,1) from G(n,-1).

use pgcoh::chartab::{has_entry, tables_equivalent, tables_equivalent_with_power_maps, CharacterTable};
use pgcoh::pcgroup::{make_group, Family, PcGroup};

fn table(f: Family, n: u32, eps: i32) -> pgcoh::Result<CharacterTable> {
    CharacterTable::new(&PcGroup::new(make_group(f, n, eps)?)?)
}

fn main() -> pgcoh::Result<()> {
    let t = table(Family::G, 4, 1)?;
    println!("{}: {} classes, degrees {:?}", t.group, t.num_classes(), t.degrees());
    for (c, chi) in t.characters.iter().enumerate().skip(9).take(2) {
        println!("  χ{c} = [{}]", chi.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "));
    }
    let (m, gp) = (table(Family::G, 4, -1)?, table(Family::GPrime, 4, 1)?);
    println!("G(4,1) ~ G(4,-1): {}", tables_equivalent(&t, &m));
    println!(
        "G'(4) ~ G(4,-1): {} (with cube maps: {})",
        tables_equivalent(&gp, &m),
        tables_equivalent_with_power_maps(&gp, &m)
    );
    for n in [4, 5] {
        for eps in [1, -1] {
            let t = table(Family::G, n, eps)?;
            println!(
                "G({n},{eps}) has the ε=+1 entry: {}, the ε=-1 entry: {}",
                has_entry(&t, n, 1),
                has_entry(&t, n, -1)
            );
        }
    }
    Ok(())
}
