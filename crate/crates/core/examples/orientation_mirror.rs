//! Swapping a and b reverses orientation: mu(a,b) + mu(b,a) is 0 mod 1.

use exotic7::{eells_kuiper, validate, Rational};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pairs = [
        ([-3, -3, 1], [1, 5, 5]),
        ([1, -3, 1], [1, 1, 1]),
        ([5, 1, -3], [1, 9, 5]),
        ([-3, 9, 13], [1, 5, 9]),
    ];
    for (a, b) in pairs {
        let p = validate(a, b)?;
        let (mu, mu_bar) = match (eells_kuiper(&p), eells_kuiper(&p.mirrored())) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(e), _) | (_, Err(e)) => {
                println!("{p}: {e}");
                continue;
            }
        };
        let sum = (&mu + &mu_bar).mod_one();
        println!("{p}: mu = {mu}, mirrored = {mu_bar}, sum mod 1 = {sum}");
        assert_eq!(sum, Rational::zero());
    }
    Ok(())
}
