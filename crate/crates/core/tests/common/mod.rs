#![allow(dead_code)]

use exotic7::{validate, DedekindArgs, ManifoldParams};
use num_integer::Integer;
use rand::Rng;

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Uniform value `≡ 1 (mod 4)` with `|v| ≤ bound`.
pub fn one_mod_four<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    let lo = (-bound + 3).div_euclid(4);
    let hi = (bound - 1).div_euclid(4);
    4 * rng.gen_range(lo..=hi) + 1
}

pub fn random_triple<R: Rng>(rng: &mut R, bound: i64) -> [i64; 3] {
    loop {
        let c = [
            one_mod_four(rng, bound),
            one_mod_four(rng, bound),
            one_mod_four(rng, bound),
        ];
        if gcd(c[0], c[1] + c[2]) == 1 && gcd(c[0], c[1] - c[2]) == 1 {
            return c;
        }
    }
}

pub fn random_params<R: Rng>(rng: &mut R, bound: i64) -> ManifoldParams {
    validate(random_triple(rng, bound), random_triple(rng, bound)).expect("sampler emits valid triples")
}

/// `q` with `2 ≤ |q| ≤ max_q` (sign random) and each `p_i` prime to `q`
/// with `|p_i| ≤ p_bound`.
pub fn random_dedekind_args<R: Rng>(rng: &mut R, max_q: i64, p_bound: i64) -> (i64, [i64; 3]) {
    let q = rng.gen_range(2..=max_q) * if rng.gen() { 1 } else { -1 };
    let mut p = [0; 3];
    for slot in &mut p {
        *slot = loop {
            let v = rng.gen_range(-p_bound..=p_bound);
            if gcd(v, q) == 1 {
                break v;
            }
        };
    }
    (q, p)
}

pub fn args(q: i64, p: [i64; 3]) -> DedekindArgs {
    DedekindArgs::new(q, p[0], p[1], p[2]).expect("valid Dedekind arguments")
}

/// Straight f64 transcription of the defining trigonometric sum.
pub fn dedekind_f64(q: i64, p: [i64; 3]) -> f64 {
    let pi = std::f64::consts::PI;
    let mut total = 0.0;
    for l in 1..q.abs() {
        let x: Vec<f64> = p.iter().map(|&pi_| pi * (pi_ * l) as f64 / q as f64).collect();
        for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            let num = 14.0 * x[i].cos() + x[j].cos() * x[k].cos();
            let den = x[i].sin().powi(2) * x[j].sin() * x[k].sin();
            total += p[i] as f64 * num / den;
        }
    }
    total / (448.0 * (q * q) as f64)
}

/// `28μ mod 28` on `a = (−3,−3,1)`, `b = (1,4r+1,4r+1)`, reduced by hand:
/// `n = −1`, `m = 4r² + 2r + 1`, `D(a) = −1/28`, `D(b) = 0`, so
/// `28μ = 9(m² − 1)/8 = 9r(2r+1)(2r²+r+1)/2`.
pub fn corollary_class(r: i64) -> u8 {
    let r = r as i128;
    let v = 9 * r * (2 * r + 1) * (2 * r * r + r + 1) / 2;
    v.rem_euclid(28) as u8
}
