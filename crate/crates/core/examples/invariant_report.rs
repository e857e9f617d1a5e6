//! Full invariant report for one manifold M_{a,b}.
//!
//! ```text
//! cargo run --example invariant_report -- -3,-3,1 1,5,5
//! ```

use exotic7::{validate, InvariantReport};

fn triple(s: &str) -> Result<[i64; 3], Box<dyn std::error::Error>> {
    let v: Vec<i64> = s.split(',').map(|t| t.trim().parse()).collect::<Result<_, _>>()?;
    v.try_into().map_err(|_| format!("`{s}` is not a triple").into())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut argv = std::env::args().skip(1);
    let a = triple(&argv.next().unwrap_or_else(|| "-3,-3,1".into()))?;
    let b = triple(&argv.next().unwrap_or_else(|| "1,5,5".into()))?;

    let params = validate(a, b)?;
    let r = InvariantReport::compute(&params)?;

    println!("{params}");
    println!("n = {}, m = {}", r.n, r.m);
    for (k, g) in r.cohomology.groups.iter().enumerate() {
        println!("  H^{k} = {g}");
    }
    let cn = &r.characteristic_numbers;
    println!("p1(TB) = {}, e(TB) = {}, e(W) = {}", cn.p1_tb, cn.e_tb, cn.e_w);
    println!("p1(W)/2 = {}, p1(TB+W)/2 = {}", cn.half_p1_w, cn.half_p1_tb_plus_w);
    println!("D(a) = {}, D(b) = {}", r.dedekind_a, r.dedekind_b);

    let Some(mu) = &r.mu else {
        println!("n = 0: mu undefined");
        return Ok(());
    };
    println!("mu = {mu}");
    if let Some(d) = &r.decomposition {
        println!(
            "  eta {} + small {} - pont {} = {}",
            d.eta_term,
            d.very_small_eigenvalue_term,
            d.pontrjagin_term,
            d.combined()
        );
    }
    if let Some(c) = &r.classification {
        match c.oriented_class {
            Some(k) => println!(
                "homotopy sphere, class {k} mod 28{}",
                if c.is_non_milnor_class { " (not a Milnor sphere)" } else { "" }
            ),
            None => println!("not a homotopy sphere"),
        }
    }
    Ok(())
}
