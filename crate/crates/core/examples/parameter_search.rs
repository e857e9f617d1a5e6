//! Parallel scan for homotopy spheres in a parameter box.
//!
//! ```text
//! cargo run --release --example parameter_search -- 4
//! ```

use exotic7::invariants::NON_MILNOR_CLASSES;
use exotic7::search::{run_search, ParamRange, SearchSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let jobs = std::env::args().nth(1).map(|s| s.parse()).transpose()?;

    let mut spec = SearchSpec::new(
        [ParamRange::single(-3), ParamRange::new(-15, 15), ParamRange::new(-15, 15)],
        [ParamRange::single(1), ParamRange::new(-15, 61), ParamRange::new(-15, 61)],
    );
    spec.filter.require_sphere = true;
    spec.filter.target_classes = Some(NON_MILNOR_CLASSES.into_iter().collect());
    spec.limit = 20;

    let res = run_search(&spec, jobs)?;
    let s = &res.stats;
    println!(
        "scanned {} valid {} spheres {} matched {}",
        s.scanned, s.valid, s.spheres, s.matched
    );
    for e in &res.entries {
        println!("{}  mu = {}  class {}", e.params, e.mu.as_ref().unwrap(), e.oriented_class.unwrap());
    }
    println!();
    for (class, p) in &res.class_coverage {
        println!("class {class:>2}: {p}");
    }
    if !res.missing_targets.is_empty() {
        println!("not found: {:?}", res.missing_targets);
    }
    Ok(())
}
