//! Exact arithmetic in Q(zeta_N).
//!
//! ```text
//! cargo run --example cyclotomic_arithmetic -- 12
//! ```

use exotic7::{cyclotomic_polynomial, CyclotomicField, Rational};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(12);
    let field = CyclotomicField::new(n)?;
    println!("Phi_{n}(x) = {}", cyclotomic_polynomial(n));
    println!("[Q(zeta_{n}) : Q] = {}", field.degree());

    let zeta = field.root_power(1);
    let s = &zeta - &field.root_power(-1);
    let s_inv = s.invert()?;
    println!("zeta - zeta^-1       = {}", s.as_polynomial());
    println!("(zeta - zeta^-1)^-1  = {}", s_inv.as_polynomial());
    println!("product              = {}", (&s * &s_inv).as_polynomial());

    // 2 cos(2 pi / n) squared, pulled back to Q when it is rational
    let c = &zeta + &field.root_power(-1);
    let c2 = &c * &c;
    match c2.extract_rational() {
        Ok(r) => println!("(2cos(2pi/{n}))^2 = {r}"),
        Err(_) => println!("(2cos(2pi/{n}))^2 is irrational: {}", c2.as_polynomial()),
    }
    let v = c2.numeric_value(128)?;
    println!("numerically          = {:.15}", v.re);

    let half = field.from_rational(&Rational::new(1, 2));
    println!("zeta/2               = {}", (&zeta * &half).as_polynomial());
    Ok(())
}
