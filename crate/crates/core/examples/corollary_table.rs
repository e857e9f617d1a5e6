//! 28·mu along a = (-3,-3,1), b = (1,4r+1,4r+1).
//!
//! ```text
//! cargo run --example corollary_table -- -5 20
//! ```

use std::collections::BTreeSet;

use exotic7::invariants::NON_MILNOR_CLASSES;
use exotic7::search::CorollaryTable;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut argv = std::env::args().skip(1).map(|s| s.parse::<i64>());
    let lo = argv.next().transpose()?.unwrap_or(-5);
    let hi = argv.next().transpose()?.unwrap_or(20);

    let r: Vec<i64> = (lo..=hi).collect();
    let targets: BTreeSet<u8> = NON_MILNOR_CLASSES.into_iter().collect();
    let table = CorollaryTable::build(&r, Some(&targets))?;

    println!("{:>5} {:>8} {:>6}", "r", "mu", "28mu");
    for row in &table.rows {
        let mark = if targets.contains(&row.oriented_class) { "*" } else { "" };
        println!("{:>5} {:>8} {:>6}{mark}", row.r, row.mu.to_string(), row.oriented_class);
    }
    println!();
    for (class, r) in table.class_coverage.iter().filter(|(c, _)| targets.contains(c)) {
        println!("class {class:>2} first at r = {r}");
    }
    if !table.missing_targets.is_empty() {
        println!("missing: {:?}", table.missing_targets);
    }
    Ok(())
}
