//! Separating the groups of order 81 by their low-degree cohomology.

use pgcoh::pipeline::{distinguish, order81_targets, ORDER81_NOT_COMPUTED};

fn main() -> pgcoh::Result<()> {
    let d = distinguish(&order81_targets(), 6)?;
    for (i, f) in d.fingerprints.iter().enumerate() {
        let row: Vec<String> =
            f.entries.iter().map(|e| e.order.as_ref().map_or("Z".into(), |o| o.to_string())).collect();
        let sep = d.fingerprints[..i].iter().filter_map(|g| g.separating_degree(f)).max();
        println!("{:<14} {}   (last separating degree from earlier rows: {sep:?})", f.label, row.join(" "));
    }
    println!("all distinct: {}", d.all_distinct);
    println!("not computed: {}", ORDER81_NOT_COMPUTED.join("; "));
    print!("{}", d.to_csv().lines().take(4).collect::<Vec<_>>().join("\n"));
    println!();
    Ok(())
}
