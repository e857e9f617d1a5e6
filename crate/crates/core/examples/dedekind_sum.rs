//! Generalized Dedekind sums, exact and numeric.
//!
//! ```text
//! cargo run --example dedekind_sum -- -3 4 -2 4
//! ```

use exotic7::{dedekind_sum_exact, dedekind_sum_numeric, q3_closed_form, DedekindArgs};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let [q, p1, p2, p3] = match args.as_slice() {
        [q, p1, p2, p3] => [*q, *p1, *p2, *p3],
        [] => [-3, 4, -2, 4],
        _ => return Err("usage: dedekind_sum Q P1 P2 P3".into()),
    };

    let d = DedekindArgs::new(q, p1, p2, p3)?;
    let exact = dedekind_sum_exact(&d)?;
    let numeric = dedekind_sum_numeric(&d, 128)?;
    println!("D({q}; {p1}, {p2}, {p3}) = {exact}");
    println!("numeric            = {numeric:.17}");
    println!("|exact - numeric|  = {:e}", (exact.to_f64() - numeric).abs());

    if q == -3 {
        if let Ok(closed) = q3_closed_form([p1, p2, p3]) {
            println!("q = -3 closed form = {closed}");
        }
    }

    println!();
    for q in [5, 7, 11, 13] {
        let d = DedekindArgs::new(q, 1, 1, 1)?;
        println!("D({q}; 1, 1, 1) = {}", dedekind_sum_exact(&d)?);
    }
    Ok(())
}
