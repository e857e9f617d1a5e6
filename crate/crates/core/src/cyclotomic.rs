//! Exact arithmetic in the cyclotomic field ℚ(ζ_N), ζ = e^{2πi/N}.
//!
//! Elements are residues modulo the N-th cyclotomic polynomial Φ_N, stored
//! as an integer coefficient vector of length φ(N) over one positive common
//! denominator. Normalization (content and denominator coprime) makes the
//! representation canonical, so equality is coefficient equality.
//!
//! Cyclotomic polynomials and fields are memoized per process; both caches
//! are read-mostly and lock only on first construction of an index.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::numeric::{self, Precise};
use crate::poly::RationalPolynomial;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclotomicError {
    #[error("cyclotomic index must be at least 1")]
    ZeroIndex,
    #[error("operands live in different fields: Q(zeta_{left}) and Q(zeta_{right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("element is not rational: coefficient of zeta^{power} is {coefficient}")]
    NotRational { power: usize, coefficient: Rational },
    #[error("numeric precision of {requested} bits is below the 53-bit minimum")]
    PrecisionTooLow { requested: usize },
}

fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient by trial factorization.
pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn phi_cache() -> &'static RwLock<HashMap<u32, RationalPolynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, RationalPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The n-th cyclotomic polynomial Φ_n, computed as `x^n − 1` divided by Φ_d
/// for every proper divisor `d` of `n`.
///
/// Panics if `n == 0`.
pub fn cyclotomic_polynomial(n: u32) -> RationalPolynomial {
    assert!(n >= 1, "cyclotomic index must be at least 1");
    if let Some(p) = phi_cache().read().expect("phi cache poisoned").get(&n) {
        return p.clone();
    }
    let mut acc = RationalPolynomial::monomial(n as usize)
        .sub(&RationalPolynomial::constant(Rational::one()));
    for d in divisors(n).into_iter().filter(|&d| d != n) {
        let (quot, rem) = acc
            .div_rem(&cyclotomic_polynomial(d))
            .expect("cyclotomic polynomials are nonzero");
        debug_assert!(rem.is_zero());
        acc = quot;
    }
    phi_cache()
        .write()
        .expect("phi cache poisoned")
        .entry(n)
        .or_insert(acc)
        .clone()
}

struct FieldData {
    index: u32,
    degree: usize,
    modulus: RationalPolynomial,
    /// Φ_N coefficients, lowest first, length `degree + 1`, monic.
    phi: Vec<BigInt>,
    /// `x^e mod Φ_N` for `e` in `0..N`.
    powers: Vec<Vec<BigInt>>,
}

/// ℚ(ζ_N). Cheap to clone; all clones of one index share the same data.
#[derive(Clone)]
pub struct CyclotomicField(Arc<FieldData>);

fn field_cache() -> &'static RwLock<HashMap<u32, CyclotomicField>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, CyclotomicField>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

impl CyclotomicField {
    pub fn new(index: u32) -> Result<Self, CyclotomicError> {
        if index == 0 {
            return Err(CyclotomicError::ZeroIndex);
        }
        if let Some(f) = field_cache().read().expect("field cache poisoned").get(&index) {
            return Ok(f.clone());
        }
        let field = CyclotomicField(Arc::new(FieldData::build(index)));
        Ok(field_cache()
            .write()
            .expect("field cache poisoned")
            .entry(index)
            .or_insert(field)
            .clone())
    }

    pub fn index(&self) -> u32 {
        self.0.index
    }

    /// φ(N), the dimension over ℚ.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn modulus(&self) -> &RationalPolynomial {
        &self.0.modulus
    }

    pub fn zero(&self) -> CyclotomicElement {
        CyclotomicElement {
            field: self.clone(),
            num: vec![BigInt::zero(); self.degree()],
            den: BigInt::one(),
        }
    }

    pub fn one(&self) -> CyclotomicElement {
        self.from_rational(&Rational::one())
    }

    pub fn from_rational(&self, r: &Rational) -> CyclotomicElement {
        let mut num = vec![BigInt::zero(); self.degree()];
        num[0] = r.numer().clone();
        CyclotomicElement {
            field: self.clone(),
            num,
            den: r.denom().clone(),
        }
    }

    /// ζ^k with `k` taken modulo N.
    pub fn root_power(&self, k: i64) -> CyclotomicElement {
        let e = k.rem_euclid(self.index() as i64) as usize;
        CyclotomicElement {
            field: self.clone(),
            num: self.0.powers[e].clone(),
            den: BigInt::one(),
        }
    }

    /// Residue of an arbitrary rational polynomial in ζ.
    pub fn from_polynomial(&self, p: &RationalPolynomial) -> CyclotomicElement {
        let (_, rem) = p.div_rem(self.modulus()).expect("modulus is nonzero");
        let den = rem
            .coefficients()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut num = vec![BigInt::zero(); self.degree()];
        for (slot, c) in num.iter_mut().zip(rem.coefficients()) {
            *slot = c.numer() * (&den / c.denom());
        }
        CyclotomicElement::normalized(self.clone(), num, den)
    }

    fn same(&self, other: &CyclotomicField) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.index() == other.index()
    }
}

impl FieldData {
    fn build(index: u32) -> Self {
        let modulus = cyclotomic_polynomial(index);
        let degree = modulus.degree().expect("nonzero modulus");
        let phi: Vec<BigInt> = modulus
            .coefficients()
            .iter()
            .map(|c| c.to_integer().expect("cyclotomic polynomials are integral"))
            .collect();
        let mut powers = Vec::with_capacity(index as usize);
        let mut cur = vec![BigInt::zero(); degree];
        cur[0] = BigInt::one();
        for _ in 0..index {
            powers.push(cur.clone());
            // multiply by x, then fold the x^degree term back through Φ_N
            let top = cur.pop().expect("degree >= 1");
            cur.insert(0, BigInt::zero());
            if !top.is_zero() {
                for (c, p) in cur.iter_mut().zip(&phi) {
                    *c -= &top * p;
                }
            }
        }
        FieldData {
            index,
            degree,
            modulus,
            phi,
            powers,
        }
    }
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.index())
    }
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for CyclotomicField {}

/// An element of ℚ(ζ_N): `Σ num[k]·ζ^k / den`, `k < φ(N)`.
#[derive(Clone)]
pub struct CyclotomicElement {
    field: CyclotomicField,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CyclotomicElement {
    fn normalized(field: CyclotomicField, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        if num.iter().all(Zero::is_zero) {
            return CyclotomicElement {
                field,
                num,
                den: BigInt::one(),
            };
        }
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|c| *c = -&*c);
        }
        let g = num.iter().fold(den.clone(), |g, c| g.gcd(c));
        if !g.is_one() {
            num.iter_mut().for_each(|c| *c /= &g);
            den /= &g;
        }
        CyclotomicElement { field, num, den }
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    /// Coefficients of the reduced representative, lowest power first,
    /// always of length φ(N).
    pub fn coefficients(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn as_polynomial(&self) -> RationalPolynomial {
        RationalPolynomial::new(self.coefficients())
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) -> Result<(), CyclotomicError> {
        if self.field.same(&other.field) {
            Ok(())
        } else {
            Err(CyclotomicError::FieldMismatch {
                left: self.field.index(),
                right: other.field.index(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, CyclotomicError> {
        self.check(other)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, CyclotomicError> {
        self.check(other)?;
        Ok(self.combine(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, CyclotomicError> {
        self.check(other)?;
        Ok(self.product(other))
    }

    fn combine(&self, other: &Self, subtract: bool) -> Self {
        let (num, den) = if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if subtract { a - b } else { a + b })
                .collect();
            (num, self.den.clone())
        } else {
            let den = self.den.lcm(&other.den);
            let fa = &den / &self.den;
            let fb = &den / &other.den;
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let (x, y) = (a * &fa, b * &fb);
                    if subtract {
                        x - y
                    } else {
                        x + y
                    }
                })
                .collect();
            (num, den)
        };
        Self::normalized(self.field.clone(), num, den)
    }

    fn product(&self, other: &Self) -> Self {
        let d = self.field.degree();
        let mut wide = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        let phi = &self.field.0.phi;
        for k in (d..wide.len()).rev() {
            let top = std::mem::take(&mut wide[k]);
            if top.is_zero() {
                continue;
            }
            for j in 0..d {
                if !phi[j].is_zero() {
                    wide[k - d + j] -= &top * &phi[j];
                }
            }
        }
        wide.truncate(d);
        Self::normalized(self.field.clone(), wide, &self.den * &other.den)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Self::normalized(self.field.clone(), num, &self.den * r.denom())
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// representative and Φ_N over ℚ. Φ_N is irreducible, so every nonzero
    /// residue is a unit.
    pub fn invert(&self) -> Result<Self, CyclotomicError> {
        if self.is_zero() {
            return Err(CyclotomicError::ZeroInverse);
        }
        let mut r0 = self.field.modulus().clone();
        let mut r1 = self.as_polynomial();
        let mut t0 = RationalPolynomial::zero();
        let mut t1 = RationalPolynomial::constant(Rational::one());
        while r1.degree().expect("remainder stays nonzero for a unit") > 0 {
            // keep r1 monic so intermediate coefficients stay small
            let lead = r1.leading().and_then(Rational::recip).expect("nonzero lead");
            r1 = r1.scale(&lead);
            t1 = t1.scale(&lead);
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t);
            assert!(!r1.is_zero(), "Phi_N shares a factor with a nonzero residue");
        }
        let c = r1.coeff(0).recip().expect("nonzero constant remainder");
        let inv = self.field.from_polynomial(&t1.scale(&c));
        debug_assert!(self.product(&inv) == self.field.one());
        Ok(inv)
    }

    /// The rational value of an element lying in ℚ ⊂ ℚ(ζ_N).
    pub fn extract_rational(&self) -> Result<Rational, CyclotomicError> {
        if let Some((power, c)) = self.num.iter().enumerate().skip(1).find(|(_, c)| !c.is_zero()) {
            return Err(CyclotomicError::NotRational {
                power,
                coefficient: Rational::new(c.clone(), self.den.clone()),
            });
        }
        Ok(Rational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Floating evaluation at ζ = e^{2πi/N}.
    ///
    /// Terms are computed with `precision` plus 32 guard bits and summed
    /// pairwise, so before the final rounding to `f64` the absolute error is
    /// at most `2^(−precision + ⌈log₂ φ(N)⌉)` times the largest coefficient
    /// magnitude. The returned `Complex64` adds one `f64` rounding on top.
    pub fn numeric_value(&self, precision: usize) -> Result<Complex64, CyclotomicError> {
        if precision < 53 {
            return Err(CyclotomicError::PrecisionTooLow {
                requested: precision,
            });
        }
        let mut hp = Precise::new(precision);
        let n = self.field.index() as i64;
        let mut re = Vec::new();
        let mut im = Vec::new();
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (cos, sin) = hp.cos_sin_pi(2 * k as i64, n);
            let coeff = hp.rational(&Rational::new(c.clone(), self.den.clone()));
            re.push(hp.mul(&coeff, &cos));
            im.push(hp.mul(&coeff, &sin));
        }
        Ok(Complex64::new(
            numeric::to_f64(&hp.sum(&re)),
            numeric::to_f64(&hp.sum(&im)),
        ))
    }
}

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.same(&other.field) && self.den == other.den && self.num == other.num
    }
}

impl Eq for CyclotomicElement {}

impl fmt::Debug for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] in {:?}", self.as_polynomial(), self.field)
    }
}

// Operator forms panic on a field mismatch; use the `try_*` methods when the
// operands may come from different fields.
impl Add for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn add(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self.try_add(rhs).expect("cyclotomic field mismatch")
    }
}

impl Sub for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn sub(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self.try_sub(rhs).expect("cyclotomic field mismatch")
    }
}

impl Mul for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn mul(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self.try_mul(rhs).expect("cyclotomic field mismatch")
    }
}

impl Neg for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn neg(self) -> CyclotomicElement {
        CyclotomicElement {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CyclotomicElement {
    type Output = CyclotomicElement;
    fn neg(self) -> CyclotomicElement {
        -&self
    }
}
