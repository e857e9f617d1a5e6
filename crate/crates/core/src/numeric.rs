//! Multi-precision floating helpers shared by the numeric oracles.
//!
//! Everything here is deliberately separate from the exact cyclotomic path:
//! angles are reduced in exact integer arithmetic and then evaluated with
//! `astro-float` at the requested precision.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;

use crate::rational::Rational;

const RM: RoundingMode = RoundingMode::ToEven;

/// Extra bits carried past the caller's precision to absorb rounding in
/// sums and products.
pub(crate) const GUARD_BITS: usize = 32;

pub(crate) struct Precise {
    bits: usize,
    consts: Consts,
    pi: BigFloat,
}

impl Precise {
    pub fn new(bits: usize) -> Self {
        let bits = bits + GUARD_BITS;
        let mut consts = Consts::new().expect("astro-float constant cache");
        let pi = consts.pi(bits, RM);
        Precise { bits, consts, pi }
    }

    pub fn int(&self, v: i64) -> BigFloat {
        BigFloat::from_i64(v, self.bits)
    }

    pub fn big_int(&mut self, v: &BigInt) -> BigFloat {
        BigFloat::parse(&v.to_string(), Radix::Dec, self.bits, RM, &mut self.consts)
    }

    pub fn rational(&mut self, r: &Rational) -> BigFloat {
        let n = self.big_int(r.numer());
        let d = self.big_int(r.denom());
        self.div(&n, &d)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.bits, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.bits, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.bits, RM)
    }

    /// `(cos(π·num/den), sin(π·num/den))` with `num` reduced modulo `2·den`
    /// in integers before any rounding happens.
    pub fn cos_sin_pi(&mut self, num: i64, den: i64) -> (BigFloat, BigFloat) {
        debug_assert!(den > 0);
        let reduced = num.rem_euclid(2 * den);
        let angle = self.div(&self.mul(&self.pi, &self.int(reduced)), &self.int(den));
        let c = angle.cos(self.bits, RM, &mut self.consts);
        let s = angle.sin(self.bits, RM, &mut self.consts);
        (c, s)
    }

    /// Pairwise summation; with guard bits this keeps the accumulated
    /// rounding at `O(log n)` ulps.
    pub fn sum(&self, terms: &[BigFloat]) -> BigFloat {
        match terms.len() {
            0 => self.int(0),
            1 => terms[0].clone(),
            n => {
                let (lo, hi) = terms.split_at(n / 2);
                self.add(&self.sum(lo), &self.sum(hi))
            }
        }
    }
}

pub(crate) fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    x.to_string().parse().unwrap_or(f64::NAN)
}
