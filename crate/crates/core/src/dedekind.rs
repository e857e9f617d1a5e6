//! Generalized Dedekind sums
//!
//! ```text
//! D(q; p1, p2, p3) = 1/(2^6·7·q²) · Σ_{l=1}^{|q|-1} Σ_{cyclic (i,j,k)}
//!     p_i (14 cos(p_i π l/q) + cos(p_j π l/q) cos(p_k π l/q))
//!         / (sin²(p_i π l/q) sin(p_j π l/q) sin(p_k π l/q))
//! ```
//!
//! for `gcd(q, p_i) = 1`.
//!
//! The exact path works in ℚ(ζ) with ζ = e^{iπ/|q|}, i.e. the cyclotomic
//! field of index `2|q|`. Writing `s(m) = ζ^m − ζ^{−m} = 2i·sin(mπ/|q|)`,
//! the four sine factors of each term multiply to `s_i² s_j s_k / 16`, so the
//! imaginary unit cancels inside the field (for odd `q`, `i ∉ ℚ(ζ_{2|q|})`).
//! Flipping the sign of `q` flips all four sines and leaves the cosines
//! alone, so the exact path evaluates at `|q|`; the numeric path keeps the
//! signed `q` and is used to check that normalization.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use thiserror::Error;

use crate::cyclotomic::{CyclotomicElement, CyclotomicError, CyclotomicField};
use crate::invariants::ParamTriple;
use crate::numeric::{self, Precise};
use crate::rational::Rational;

/// Largest `|q|` accepted by the exact evaluator. The cyclotomic field has
/// index `2|q|` and degree up to `|q|`; beyond this the exact sum is not
/// practical.
pub const MAX_EXACT_MODULUS: i64 = 512;

/// Smallest mantissa accepted by [`dedekind_sum_numeric`].
pub const MIN_NUMERIC_PRECISION: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DedekindError {
    #[error("invalid Dedekind sum arguments: {0}")]
    InvalidArgs(ArgsViolation),
    #[error("internal consistency failure: exact Dedekind sum is not rational ({0})")]
    InternalNotRational(CyclotomicError),
    #[error("numeric precision of {0} bits is below the {MIN_NUMERIC_PRECISION}-bit minimum")]
    PrecisionTooLow(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArgsViolation {
    #[error("q must be nonzero")]
    ZeroModulus,
    #[error("gcd(q, p{slot}) = gcd({q}, {p}) = {gcd}, expected 1")]
    NotCoprime { q: i64, p: i64, slot: usize, gcd: i64 },
    #[error("sin({p}·π·{l}/{q}) vanishes")]
    VanishingSine { q: i64, p: i64, l: i64 },
    #[error("|q| = {0} exceeds the exact evaluator limit {MAX_EXACT_MODULUS}")]
    ModulusTooLarge(i64),
    #[error("closed form needs even arguments, got {0}")]
    OddArgument(i64),
    #[error("closed form needs halves prime to 3, got {0}")]
    HalfDivisibleByThree(i64),
}

impl From<ArgsViolation> for DedekindError {
    fn from(v: ArgsViolation) -> Self {
        DedekindError::InvalidArgs(v)
    }
}

/// Arguments `(q; p1, p2, p3)` with `q ≠ 0` and every `p_i` prime to `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DedekindArgs {
    q: i64,
    p: [i64; 3],
}

impl DedekindArgs {
    pub fn new(q: i64, p1: i64, p2: i64, p3: i64) -> Result<Self, DedekindError> {
        if q == 0 {
            return Err(ArgsViolation::ZeroModulus.into());
        }
        let p = [p1, p2, p3];
        for (slot, &pi) in p.iter().enumerate() {
            let gcd = q.gcd(&pi);
            if gcd != 1 {
                return Err(ArgsViolation::NotCoprime {
                    q,
                    p: pi,
                    slot: slot + 1,
                    gcd,
                }
                .into());
            }
        }
        Ok(DedekindArgs { q, p })
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn p(&self) -> [i64; 3] {
        self.p
    }
}

const CYCLIC: [(usize, usize, usize); 3] = [(0, 1, 2), (1, 2, 0), (2, 0, 1)];

/// Cosines and inverted sine differences in ℚ(ζ_{2Q}), shared by every sum
/// with modulus `±Q`.
struct TrigTable {
    field: CyclotomicField,
    q: i64,
    /// `(ζ^k + ζ^{−k}) / 2 = cos(kπ/Q)` for `k` in `0..2Q`.
    cos: Vec<CyclotomicElement>,
    /// `1 / (ζ^k − ζ^{−k})`, filled on first use.
    inv_sine: Vec<OnceLock<CyclotomicElement>>,
}

impl TrigTable {
    fn build(q: i64) -> Self {
        let n = 2 * q;
        let field = CyclotomicField::new(n as u32).expect("positive index");
        let half = Rational::new(1, 2);
        let cos = (0..n)
            .map(|k| (&field.root_power(k) + &field.root_power(-k)).scale(&half))
            .collect();
        let inv_sine = (0..n).map(|_| OnceLock::new()).collect();
        TrigTable {
            field,
            q,
            cos,
            inv_sine,
        }
    }

    fn shared(q: i64) -> Arc<TrigTable> {
        static CACHE: OnceLock<RwLock<HashMap<i64, Arc<TrigTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.read().expect("trig cache poisoned").get(&q) {
            return t.clone();
        }
        let table = Arc::new(TrigTable::build(q));
        cache
            .write()
            .expect("trig cache poisoned")
            .entry(q)
            .or_insert(table)
            .clone()
    }

    fn residue(&self, m: i64, l: i64) -> usize {
        ((m as i128 * l as i128).rem_euclid(2 * self.q as i128)) as usize
    }

    fn inv_sine(&self, k: usize) -> &CyclotomicElement {
        self.inv_sine[k].get_or_init(|| {
            let s = &self.field.root_power(k as i64) - &self.field.root_power(-(k as i64));
            s.invert().expect("caller checked the sine is nonzero")
        })
    }
}

/// Exact value of the generalized Dedekind sum, certified rational.
pub fn dedekind_sum_exact(args: &DedekindArgs) -> Result<Rational, DedekindError> {
    let q = args.q.abs();
    if q == 1 {
        return Ok(Rational::zero());
    }
    if q > MAX_EXACT_MODULUS {
        return Err(ArgsViolation::ModulusTooLarge(q).into());
    }
    let table = TrigTable::shared(q);
    let field = &table.field;
    let sixteen = Rational::from(16);
    let fourteen = Rational::from(14);
    let mut total = field.zero();
    for l in 1..q {
        let k = args.p.map(|p| table.residue(p, l));
        for (slot, &ki) in k.iter().enumerate() {
            if ki as i64 % q == 0 {
                return Err(ArgsViolation::VanishingSine {
                    q: args.q,
                    p: args.p[slot],
                    l,
                }
                .into());
            }
        }
        let inv = k.map(|ki| table.inv_sine(ki));
        let cos = k.map(|ki| &table.cos[ki]);
        // Σ_cyc p_i (14 c_i + c_j c_k) / s_i, then divide once by s_1 s_2 s_3
        let mut inner = field.zero();
        for (i, j, kk) in CYCLIC {
            let numer = &cos[i].scale(&fourteen) + &(cos[j] * cos[kk]);
            let piece = (&numer * inv[i]).scale(&Rational::from(args.p[i]));
            inner = &inner + &piece;
        }
        let denom_inv = &(inv[0] * inv[1]) * inv[2];
        total = &total + &(&inner * &denom_inv).scale(&sixteen);
    }
    let sum = total
        .extract_rational()
        .map_err(DedekindError::InternalNotRational)?;
    Ok(sum * prefactor(q))
}

fn prefactor(q: i64) -> Rational {
    Rational::new(1, 64 * 7 * (q as i128) * (q as i128))
}

/// Floating evaluation of the defining sum with the signed `q`, at
/// `precision` mantissa bits (plus guard bits) and pairwise summation.
/// Only meant as an oracle for [`dedekind_sum_exact`].
pub fn dedekind_sum_numeric(args: &DedekindArgs, precision: usize) -> Result<f64, DedekindError> {
    if precision < MIN_NUMERIC_PRECISION {
        return Err(DedekindError::PrecisionTooLow(precision));
    }
    let q = args.q;
    if q.abs() == 1 {
        return Ok(0.0);
    }
    let mut hp = Precise::new(precision);
    let mut trig = HashMap::new();
    let mut terms = Vec::with_capacity(3 * (q.unsigned_abs() as usize));
    let fourteen = hp.int(14);
    for l in 1..q.abs() {
        // angle p·π·l/q with the sign of q moved into the numerator
        let cs: Vec<_> = args
            .p
            .iter()
            .map(|&p| {
                let num = (p as i128 * l as i128 * q.signum() as i128).rem_euclid(2 * q.abs() as i128) as i64;
                trig.entry(num)
                    .or_insert_with(|| hp.cos_sin_pi(num, q.abs()))
                    .clone()
            })
            .collect();
        for (i, j, k) in CYCLIC {
            let (ci, si) = &cs[i];
            let (cj, sj) = &cs[j];
            let (ck, sk) = &cs[k];
            let numer = hp.add(&hp.mul(&fourteen, ci), &hp.mul(cj, ck));
            let denom = hp.mul(&hp.mul(&hp.mul(si, si), sj), sk);
            let term = hp.mul(&hp.int(args.p[i]), &hp.div(&numer, &denom));
            terms.push(term);
        }
    }
    let total = hp.sum(&terms);
    let scale = hp.mul(&hp.int(64 * 7), &hp.mul(&hp.int(q), &hp.int(q)));
    Ok(numeric::to_f64(&hp.div(&total, &scale)))
}

/// Closed form of `D(−3; P1, P2, P3)` for even arguments whose halves are
/// prime to 3:
///
/// ```text
/// 1/84 · Σ_cyc (−1)^{(h_j h_k mod 3)} h_i,   h = P/2
/// ```
pub fn q3_closed_form(args: [i64; 3]) -> Result<Rational, DedekindError> {
    let mut halves = [0i64; 3];
    for (h, &big) in halves.iter_mut().zip(&args) {
        if big % 2 != 0 {
            return Err(ArgsViolation::OddArgument(big).into());
        }
        *h = big / 2;
        if *h % 3 == 0 {
            return Err(ArgsViolation::HalfDivisibleByThree(big).into());
        }
    }
    let sum: i64 = CYCLIC
        .iter()
        .map(|&(i, j, k)| {
            let sign = if (halves[j] * halves[k]).rem_euclid(3) == 1 { -1 } else { 1 };
            sign * halves[i]
        })
        .sum();
    Ok(Rational::new(sum, 84))
}

/// `D(c) = D(c1; 4, c3 + c2, c3 − c2)` for a parameter triple.
pub fn triple_dedekind_sum(c: &ParamTriple) -> Result<Rational, DedekindError> {
    let [c1, c2, c3] = c.values();
    dedekind_sum_exact(&DedekindArgs::new(c1, 4, c3 + c2, c3 - c2)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(q: i64, p: [i64; 3]) -> Rational {
        dedekind_sum_exact(&DedekindArgs::new(q, p[0], p[1], p[2]).unwrap()).unwrap()
    }

    #[test]
    fn q_one_vanishes() {
        assert_eq!(exact(1, [4, 2, 4]), Rational::zero());
        assert_eq!(exact(-1, [0, 7, -9]), Rational::zero());
    }

    #[test]
    fn q_minus_three_example() {
        assert_eq!(exact(-3, [4, -2, 4]), Rational::new(-1, 28));
        assert_eq!(exact(3, [4, -2, 4]), Rational::new(-1, 28));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(q3_closed_form([4, -2, 4]).unwrap(), Rational::new(-1, 28));
        assert_eq!(q3_closed_form([2, 2, 2]).unwrap(), Rational::new(-1, 28));
        assert_eq!(q3_closed_form([4, 4, 4]).unwrap(), Rational::new(-1, 14));
        assert_eq!(
            q3_closed_form([3, 2, 2]),
            Err(DedekindError::InvalidArgs(ArgsViolation::OddArgument(3)))
        );
        assert_eq!(
            q3_closed_form([6, 2, 2]),
            Err(DedekindError::InvalidArgs(ArgsViolation::HalfDivisibleByThree(6)))
        );
    }

    #[test]
    fn argument_validation() {
        assert_eq!(
            DedekindArgs::new(0, 1, 1, 1),
            Err(DedekindError::InvalidArgs(ArgsViolation::ZeroModulus))
        );
        assert_eq!(
            DedekindArgs::new(4, 2, 1, 1),
            Err(DedekindError::InvalidArgs(ArgsViolation::NotCoprime {
                q: 4,
                p: 2,
                slot: 1,
                gcd: 2
            }))
        );
        assert!(DedekindArgs::new(5, 1, 10, 1).is_err());
    }

    #[test]
    fn too_large_modulus_is_rejected() {
        let args = DedekindArgs::new(MAX_EXACT_MODULUS + 1, 1, 1, 1).unwrap();
        assert!(matches!(
            dedekind_sum_exact(&args),
            Err(DedekindError::InvalidArgs(ArgsViolation::ModulusTooLarge(_)))
        ));
    }

    #[test]
    fn numeric_matches_exact_examples() {
        let args = DedekindArgs::new(-3, 4, -2, 4).unwrap();
        let v = dedekind_sum_numeric(&args, 64).unwrap();
        assert!((v + 1.0 / 28.0).abs() < 1e-12);
        let args = DedekindArgs::new(5, 4, 2, 2).unwrap();
        let v = dedekind_sum_numeric(&args, 64).unwrap();
        assert!((v - dedekind_sum_exact(&args).unwrap().to_f64()).abs() < 1e-9);
        assert_eq!(
            dedekind_sum_numeric(&DedekindArgs::new(1, 2, 3, 4).unwrap(), 64).unwrap(),
            0.0
        );
        assert_eq!(
            dedekind_sum_numeric(&args, 53),
            Err(DedekindError::PrecisionTooLow(53))
        );
    }

    #[test]
    fn triple_sums() {
        let t = |a, b, c| ParamTriple::new(a, b, c).unwrap();
        assert_eq!(triple_dedekind_sum(&t(1, 5, 9)).unwrap(), Rational::zero());
        assert_eq!(triple_dedekind_sum(&t(-3, -3, 1)).unwrap(), Rational::new(-1, 28));
        assert_eq!(triple_dedekind_sum(&t(-3, -3, 13)).unwrap(), Rational::new(-5, 28));
    }
}
