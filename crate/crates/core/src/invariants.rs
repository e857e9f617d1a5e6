//! Invariants of the 2-connected 7-manifolds `M_{a,b}`.
//!
//! A manifold is fixed by two integer triples `a = (a1, a2, a3)` and
//! `b = (b1, b2, b3)`, all entries `≡ 1 (mod 4)`, with
//! `gcd(c1, c2 ± c3) = 1` for both triples (the condition for the diagonal
//! `S³` to act freely). From them:
//!
//! * `n = det[[a1², b1²], [a2² − a3², b2² − b3²]] / 8`; `H⁴` is cyclic of
//!   order `|n|` when `n ≠ 0`, and `H³ = H⁴ = Z` when `n = 0`;
//! * `m = det[[a1², b1²], [a2² + a3² + 8, b2² + b3² + 8]] / (8 a1² b1²)`;
//! * for `n ≠ 0` the Eells-Kuiper invariant
//!   `μ = (|n| − a1² b1² m²) / (2⁵·7·n) + D(a) − D(b)  (mod 1)`,
//!   with `D` the generalized Dedekind sum of [`crate::dedekind`].
//!
//! `|n| = 1` means `M` is a homotopy sphere and then `28μ` is its oriented
//! diffeomorphism class in `Z/28`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::dedekind::{self, DedekindError};
use crate::rational::Rational;

/// `28μ` of the eight exotic 7-spheres that are not `S³`-bundles over `S⁴`.
pub const NON_MILNOR_CLASSES: [u8; 8] = [2, 5, 9, 12, 16, 19, 23, 26];

/// Entries must satisfy `|c| ≤ MAX_PARAMETER` so every determinant fits in
/// an `i128`.
pub const MAX_PARAMETER: i64 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "b")]
    B,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "a",
            Side::B => "b",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("{side}{index} = {value} is not congruent to 1 mod 4")]
    Congruence { side: Side, index: usize, value: i64 },
    #[error("gcd({side}1, {side}2 {op} {side}3) = gcd({c1}, {combined}) = {gcd}, expected 1")]
    Gcd {
        side: Side,
        op: char,
        c1: i64,
        combined: i64,
        gcd: i64,
    },
    #[error("{side}{index} = {value} exceeds the supported magnitude {MAX_PARAMETER}")]
    Magnitude { side: Side, index: usize, value: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("invalid parameters: {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error("n = 0: the Eells-Kuiper formula requires n != 0")]
    NZero,
    #[error("internal consistency failure: determinant {0} is not divisible by 8")]
    NonIntegralN(i128),
    #[error("internal consistency failure: |n| = 1 but 28*mu = {0} is not an integer")]
    NonIntegralMu28(Rational),
    #[error(transparent)]
    Dedekind(#[from] DedekindError),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

impl InvariantError {
    /// Failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            InvariantError::NonIntegralN(_)
                | InvariantError::NonIntegralMu28(_)
                | InvariantError::Dedekind(DedekindError::InternalNotRational(_))
        )
    }
}

/// One validated triple `(c1, c2, c3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamTriple([i64; 3]);

impl ParamTriple {
    pub fn new(c1: i64, c2: i64, c3: i64) -> Result<Self, InvariantError> {
        let v = triple_violations(Side::A, [c1, c2, c3]);
        if v.is_empty() {
            Ok(ParamTriple([c1, c2, c3]))
        } else {
            Err(InvariantError::Invalid(v))
        }
    }

    pub fn c1(&self) -> i64 {
        self.0[0]
    }

    pub fn c2(&self) -> i64 {
        self.0[1]
    }

    pub fn c3(&self) -> i64 {
        self.0[2]
    }

    pub fn values(&self) -> [i64; 3] {
        self.0
    }
}

impl Serialize for ParamTriple {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl fmt::Display for ParamTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

fn triple_violations(side: Side, c: [i64; 3]) -> Vec<Violation> {
    use num_integer::Integer;
    let mut out = Vec::new();
    for (i, &v) in c.iter().enumerate() {
        if v.abs() > MAX_PARAMETER {
            out.push(Violation::Magnitude {
                side,
                index: i + 1,
                value: v,
            });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for (i, &v) in c.iter().enumerate() {
        if v.rem_euclid(4) != 1 {
            out.push(Violation::Congruence {
                side,
                index: i + 1,
                value: v,
            });
        }
    }
    for (op, combined) in [('+', c[1] + c[2]), ('-', c[1] - c[2])] {
        let gcd = c[0].gcd(&combined);
        if gcd != 1 {
            out.push(Violation::Gcd {
                side,
                op,
                c1: c[0],
                combined,
                gcd,
            });
        }
    }
    out
}

/// A validated pair `(a, b)` determining `M_{a,b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ManifoldParams {
    pub a: ParamTriple,
    pub b: ParamTriple,
}

impl ManifoldParams {
    /// The same manifold with the roles of `a` and `b` exchanged, which
    /// carries the opposite orientation.
    pub fn mirrored(&self) -> Self {
        ManifoldParams {
            a: self.b,
            b: self.a,
        }
    }
}

impl fmt::Display for ManifoldParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a = {}, b = {}", self.a, self.b)
    }
}

/// Checks both triples and reports every violated condition.
pub fn validate(a: [i64; 3], b: [i64; 3]) -> Result<ManifoldParams, InvariantError> {
    let mut v = triple_violations(Side::A, a);
    v.extend(triple_violations(Side::B, b));
    if !v.is_empty() {
        return Err(InvariantError::Invalid(v));
    }
    Ok(ManifoldParams {
        a: ParamTriple(a),
        b: ParamTriple(b),
    })
}

fn sq(x: i64) -> i128 {
    (x as i128) * (x as i128)
}

/// `det[[a1², b1²], [row_a, row_b]]`.
fn det(p: &ManifoldParams, row_a: i128, row_b: i128) -> i128 {
    sq(p.a.c1()) * row_b - sq(p.b.c1()) * row_a
}

fn a1b1_sq(p: &ManifoldParams) -> BigInt {
    BigInt::from(sq(p.a.c1())) * BigInt::from(sq(p.b.c1()))
}

pub fn n_invariant(p: &ManifoldParams) -> Result<i128, InvariantError> {
    let d = det(
        p,
        sq(p.a.c2()) - sq(p.a.c3()),
        sq(p.b.c2()) - sq(p.b.c3()),
    );
    if d % 8 != 0 {
        return Err(InvariantError::NonIntegralN(d));
    }
    Ok(d / 8)
}

pub fn m_invariant(p: &ManifoldParams) -> Rational {
    let d = det(
        p,
        sq(p.a.c2()) + sq(p.a.c3()) + 8,
        sq(p.b.c2()) + sq(p.b.c3()) + 8,
    );
    Rational::new(d, a1b1_sq(p) * 8u32)
}

/// Abelian group descriptor, serialized as `"0"`, `"Z"`, `"Z/k"`, `"Z+Z/k"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AbelianGroup {
    Trivial,
    Integers,
    Cyclic(u128),
    IntegersPlusCyclic(u128),
}

impl AbelianGroup {
    /// `Z/k`, with `Z/1` collapsed to the trivial group.
    pub fn cyclic(order: u128) -> Self {
        if order <= 1 {
            AbelianGroup::Trivial
        } else {
            AbelianGroup::Cyclic(order)
        }
    }

    /// Order of a finite group, `None` when infinite.
    pub fn order(&self) -> Option<u128> {
        match self {
            AbelianGroup::Trivial => Some(1),
            AbelianGroup::Cyclic(k) => Some(*k),
            _ => None,
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbelianGroup::Trivial => write!(f, "0"),
            AbelianGroup::Integers => write!(f, "Z"),
            AbelianGroup::Cyclic(k) => write!(f, "Z/{k}"),
            AbelianGroup::IntegersPlusCyclic(k) => write!(f, "Z+Z/{k}"),
        }
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Integral cohomology `H⁰ … H⁷`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub groups: [AbelianGroup; 8],
}

impl CohomologyReport {
    pub fn h(&self, degree: usize) -> AbelianGroup {
        self.groups[degree]
    }
}

pub fn cohomology(p: &ManifoldParams) -> Result<CohomologyReport, InvariantError> {
    use AbelianGroup::*;
    let n = n_invariant(p)?;
    let (h3, h4) = if n == 0 {
        (Integers, Integers)
    } else {
        (Trivial, AbelianGroup::cyclic(n.unsigned_abs()))
    };
    Ok(CohomologyReport {
        groups: [Integers, Trivial, Trivial, h3, h4, Trivial, Trivial, Integers],
    })
}

/// One singular stratum `RP²` of the orbifold base (there is one per triple).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SingularStratum {
    /// Order of the cyclic isotropy group along the stratum, `|c1|`.
    pub isotropy_order: u64,
    /// The normal cone angle is `2π / cone_angle_denominator`.
    pub cone_angle_denominator: u64,
    /// Number of twisted sectors `S² × {s}`, `s = 1, …, (|c1| − 1)/2`.
    pub twisted_sector_count: u64,
    /// Multiplicity of each twisted sector in the inertia orbifold.
    pub multiplicity: u64,
    /// The isotropy acts on the fiber by `(ξ, q) ↦ ξ^{c2} q ξ^{−c3}`.
    pub fiber_action_exponents: (i64, i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrbifoldReport {
    /// The base is the smooth `S⁴` exactly when `a1 = b1 = 1`.
    pub base_smooth: bool,
    pub a: SingularStratum,
    pub b: SingularStratum,
}

fn stratum(c: &ParamTriple) -> SingularStratum {
    let order = c.c1().unsigned_abs();
    SingularStratum {
        isotropy_order: order,
        cone_angle_denominator: order,
        twisted_sector_count: (order - 1) / 2,
        multiplicity: order,
        fiber_action_exponents: (c.c2(), c.c3()),
    }
}

pub fn orbifold_report(p: &ManifoldParams) -> OrbifoldReport {
    OrbifoldReport {
        base_smooth: p.a.c1() == 1 && p.b.c1() == 1,
        a: stratum(&p.a),
        b: stratum(&p.b),
    }
}

/// Orbifold characteristic numbers of the base `B` and the rank-4 bundle
/// `W` whose unit sphere bundle is `M`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacteristicNumbers {
    /// `∫ p1(TB) = 2/b1² − 2/a1²`
    pub p1_tb: Rational,
    /// `∫ e(TB) = 1/a1 − 1/b1`
    pub e_tb: Rational,
    /// `∫ e(W) = n / (a1² b1²)`
    pub e_w: Rational,
    /// `∫ p1(W)/2`
    pub half_p1_w: Rational,
    /// `∫ p1(TB ⊕ W)/2`, equal to `m`
    pub half_p1_tb_plus_w: Rational,
}

pub fn characteristic_numbers(p: &ManifoldParams) -> CharacteristicNumbers {
    let a1 = p.a.c1();
    let b1 = p.b.c1();
    let scale: BigInt = a1b1_sq(p) * 8;
    let p1_tb = Rational::new(2, sq(b1)) - Rational::new(2, sq(a1));
    let e_tb = Rational::new(1, a1) - Rational::new(1, b1);
    let e_w = Rational::new(
        det(p, sq(p.a.c2()) - sq(p.a.c3()), sq(p.b.c2()) - sq(p.b.c3())),
        scale.clone(),
    );
    let half_p1_w = Rational::new(
        det(p, sq(p.a.c2()) + sq(p.a.c3()), sq(p.b.c2()) + sq(p.b.c3())),
        scale,
    );
    let half_p1_tb_plus_w = &p1_tb * &Rational::new(1, 2) + &half_p1_w;
    CharacteristicNumbers {
        p1_tb,
        e_tb,
        e_w,
        half_p1_w,
        half_p1_tb_plus_w,
    }
}

/// `(D(a), D(b))`.
pub fn dedekind_pair(p: &ManifoldParams) -> Result<(Rational, Rational), InvariantError> {
    Ok((
        dedekind::triple_dedekind_sum(&p.a)?,
        dedekind::triple_dedekind_sum(&p.b)?,
    ))
}

fn nonzero_n(p: &ManifoldParams) -> Result<i128, InvariantError> {
    match n_invariant(p)? {
        0 => Err(InvariantError::NZero),
        n => Ok(n),
    }
}

/// `(|n| − a1² b1² m²) / (2⁵·7·n) + D(a) − D(b)` before reduction mod 1.
pub fn eells_kuiper_unreduced(
    p: &ManifoldParams,
    d_a: &Rational,
    d_b: &Rational,
) -> Result<Rational, InvariantError> {
    let n = nonzero_n(p)?;
    let m = m_invariant(p);
    let head = Rational::from(n.abs()) - Rational::from(a1b1_sq(p)) * &m * &m;
    Ok(head / Rational::from(32 * 7 * n) + d_a - d_b)
}

/// `μ ∈ [0, 1)` from precomputed Dedekind sums.
pub fn eells_kuiper_from_sums(
    p: &ManifoldParams,
    d_a: &Rational,
    d_b: &Rational,
) -> Result<Rational, InvariantError> {
    Ok(eells_kuiper_unreduced(p, d_a, d_b)?.mod_one())
}

/// The Eells-Kuiper invariant, reduced into `[0, 1)`. Errors with
/// [`InvariantError::NZero`] when `n = 0`.
pub fn eells_kuiper(p: &ManifoldParams) -> Result<Rational, InvariantError> {
    nonzero_n(p)?;
    let (d_a, d_b) = dedekind_pair(p)?;
    eells_kuiper_from_sums(p, &d_a, &d_b)
}

/// The three adiabatic-limit contributions whose signed sum
/// `eta + very_small − pontrjagin` is the unreduced μ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EkDecomposition {
    /// `(4 a1² b1² m² / n − n / (a1² b1²)) / (2⁷·7)`
    pub pontrjagin_term: Rational,
    /// `−n / (2⁷·7·a1² b1²) + D(a) − D(b)`
    pub eta_term: Rational,
    /// `|n| / (2⁵·7·n)`, i.e. `±1/224`
    pub very_small_eigenvalue_term: Rational,
}

impl EkDecomposition {
    pub fn combined(&self) -> Rational {
        &self.eta_term + &self.very_small_eigenvalue_term - &self.pontrjagin_term
    }
}

pub fn ek_decomposition_from_sums(
    p: &ManifoldParams,
    d_a: &Rational,
    d_b: &Rational,
) -> Result<EkDecomposition, InvariantError> {
    let n = nonzero_n(p)?;
    let m = m_invariant(p);
    let ab = Rational::from(a1b1_sq(p));
    let n_r = Rational::from(n);
    let c = Rational::new(1, 128 * 7);
    let pontrjagin_term =
        &c * &(Rational::from(4) * &ab * &m * &m / &n_r - &n_r / &ab);
    let eta_term = -(&c * &(&n_r / &ab)) + d_a - d_b;
    let very_small_eigenvalue_term = Rational::new(n.signum(), 32 * 7);
    Ok(EkDecomposition {
        pontrjagin_term,
        eta_term,
        very_small_eigenvalue_term,
    })
}

pub fn ek_decomposition(p: &ManifoldParams) -> Result<EkDecomposition, InvariantError> {
    nonzero_n(p)?;
    let (d_a, d_b) = dedekind_pair(p)?;
    ek_decomposition_from_sums(p, &d_a, &d_b)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphereClassification {
    pub is_homotopy_sphere: bool,
    pub mu: Rational,
    /// `28μ`, present when it is an integer.
    pub mu28: Option<i64>,
    /// Oriented diffeomorphism class in `Z/28`; homotopy spheres only.
    pub oriented_class: Option<u8>,
    pub is_standard: bool,
    pub is_non_milnor_class: bool,
    /// `min(k, 28 − k)`, the class up to orientation.
    pub unoriented_class: Option<u8>,
}

/// Classification from `n` and a reduced `μ`.
pub fn classify_mu(n: i128, mu: &Rational) -> Result<SphereClassification, InvariantError> {
    if n == 0 {
        return Err(InvariantError::NZero);
    }
    let scaled = mu * &Rational::from(28);
    let mu28 = scaled.to_integer().and_then(|k| k.to_i64());
    let is_homotopy_sphere = n.abs() == 1;
    if !is_homotopy_sphere {
        return Ok(SphereClassification {
            is_homotopy_sphere,
            mu: mu.clone(),
            mu28,
            oriented_class: None,
            is_standard: false,
            is_non_milnor_class: false,
            unoriented_class: None,
        });
    }
    let k = mu28.ok_or(InvariantError::NonIntegralMu28(scaled))?;
    let class = k.rem_euclid(28) as u8;
    Ok(SphereClassification {
        is_homotopy_sphere,
        mu: mu.clone(),
        mu28: Some(k),
        oriented_class: Some(class),
        is_standard: class == 0,
        is_non_milnor_class: NON_MILNOR_CLASSES.contains(&class),
        unoriented_class: Some(class.min(28 - class)),
    })
}

pub fn classify(p: &ManifoldParams) -> Result<SphereClassification, InvariantError> {
    let n = nonzero_n(p)?;
    classify_mu(n, &eells_kuiper(p)?)
}

/// Every invariant of one manifold. μ-dependent parts are `None` when
/// `n = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub params: ManifoldParams,
    pub n: i128,
    pub m: Rational,
    pub cohomology: CohomologyReport,
    pub orbifold: OrbifoldReport,
    pub characteristic_numbers: CharacteristicNumbers,
    pub dedekind_a: Rational,
    pub dedekind_b: Rational,
    pub mu: Option<Rational>,
    pub mu28: Option<i64>,
    pub decomposition: Option<EkDecomposition>,
    pub classification: Option<SphereClassification>,
}

impl InvariantReport {
    pub fn compute(p: &ManifoldParams) -> Result<Self, InvariantError> {
        let n = n_invariant(p)?;
        let (dedekind_a, dedekind_b) = dedekind_pair(p)?;
        let (mu, decomposition, classification) = if n == 0 {
            (None, None, None)
        } else {
            let mu = eells_kuiper_from_sums(p, &dedekind_a, &dedekind_b)?;
            let dec = ek_decomposition_from_sums(p, &dedekind_a, &dedekind_b)?;
            let class = classify_mu(n, &mu)?;
            (Some(mu), Some(dec), Some(class))
        };
        Ok(InvariantReport {
            params: *p,
            n,
            m: m_invariant(p),
            cohomology: cohomology(p)?,
            orbifold: orbifold_report(p),
            characteristic_numbers: characteristic_numbers(p),
            mu28: classification.as_ref().and_then(|c| c.mu28),
            dedekind_a,
            dedekind_b,
            mu,
            decomposition,
            classification,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: [i64; 3], b: [i64; 3]) -> ManifoldParams {
        validate(a, b).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(validate([1, 1, 1], [1, 1, 1]).is_ok());
        let InvariantError::Invalid(v) = validate([3, 1, 1], [1, 1, 1]).unwrap_err() else {
            panic!("expected violations");
        };
        assert_eq!(
            v[0],
            Violation::Congruence {
                side: Side::A,
                index: 1,
                value: 3
            }
        );
        let err = validate([5, 1, -11], [1, 1, 1]).unwrap_err();
        assert_eq!(
            err,
            InvariantError::Invalid(vec![Violation::Gcd {
                side: Side::A,
                op: '+',
                c1: 5,
                combined: -10,
                gcd: 5
            }])
        );
        assert_eq!(
            err.to_string(),
            "invalid parameters: gcd(a1, a2 + a3) = gcd(5, -10) = 5, expected 1"
        );
    }

    #[test]
    fn validation_reports_every_violation() {
        let InvariantError::Invalid(v) = validate([3, 2, 1], [5, 1, 9]).unwrap_err() else {
            panic!("expected violations");
        };
        // a1, a2 congruence and gcd(3, 2 + 1); b: gcd(5, 1 - 9)
        assert_eq!(v.len(), 4);
        assert!(v.iter().any(|x| matches!(x, Violation::Gcd { side: Side::B, .. })));
    }

    #[test]
    fn n_examples() {
        assert_eq!(n_invariant(&params([5, 1, 5], [5, 1, 5])).unwrap(), 0);
        assert_eq!(n_invariant(&params([-3, -3, 1], [1, 5, 5])).unwrap(), -1);
        assert_eq!(n_invariant(&params([1, -3, 1], [1, 13, 5])).unwrap(), 17);
    }

    #[test]
    fn m_examples() {
        assert_eq!(m_invariant(&params([5, 1, 5], [5, 1, 5])), Rational::zero());
        assert_eq!(m_invariant(&params([-3, -3, 1], [1, 5, 5])), Rational::from(7));
        assert_eq!(m_invariant(&params([1, -3, 1], [1, 5, 5])), Rational::from(5));
    }

    #[test]
    fn cohomology_examples() {
        let c = cohomology(&params([1, 1, 1], [1, 1, 1])).unwrap();
        assert_eq!(c.h(3), AbelianGroup::Integers);
        assert_eq!(c.h(4), AbelianGroup::Integers);
        let c = cohomology(&params([-3, -3, 1], [1, 5, 5])).unwrap();
        assert_eq!(c.h(3), AbelianGroup::Trivial);
        assert_eq!(c.h(4), AbelianGroup::Trivial);
        let c = cohomology(&params([1, -3, 1], [1, 13, 5])).unwrap();
        assert_eq!(c.h(4).to_string(), "Z/17");
        for d in [1, 2, 5, 6] {
            assert_eq!(c.h(d), AbelianGroup::Trivial);
        }
        assert_eq!(c.h(0), AbelianGroup::Integers);
        assert_eq!(c.h(7), AbelianGroup::Integers);
    }

    #[test]
    fn orbifold_examples() {
        let r = orbifold_report(&params([1, 1, 1], [1, 5, 5]));
        assert!(r.base_smooth);
        assert_eq!(r.a.twisted_sector_count, 0);
        assert_eq!(r.b.twisted_sector_count, 0);
        let r = orbifold_report(&params([-3, -3, 1], [5, 1, 5]));
        assert!(!r.base_smooth);
        assert_eq!(r.a.isotropy_order, 3);
        assert_eq!(r.a.cone_angle_denominator, 3);
        assert_eq!(r.a.twisted_sector_count, 1);
        assert_eq!(r.a.multiplicity, 3);
        assert_eq!(r.a.fiber_action_exponents, (-3, 1));
        assert_eq!(r.b.twisted_sector_count, 2);
        assert_eq!(r.b.cone_angle_denominator, 5);
        assert_eq!(r.b.multiplicity, 5);
    }

    #[test]
    fn characteristic_number_examples() {
        let c = characteristic_numbers(&params([1, 5, 1], [1, 1, 1]));
        assert_eq!(c.p1_tb, Rational::zero());
        assert_eq!(c.e_tb, Rational::zero());
        let p = params([-3, -3, 1], [1, 5, 5]);
        let c = characteristic_numbers(&p);
        assert_eq!(c.p1_tb, Rational::new(16, 9));
        assert_eq!(c.e_tb, Rational::new(-4, 3));
        assert_eq!(c.e_w, Rational::new(-1, 9));
        assert_eq!(c.half_p1_tb_plus_w, m_invariant(&p));
    }

    #[test]
    fn mu_examples() {
        assert_eq!(eells_kuiper(&params([1, -3, 1], [1, 1, 1])).unwrap(), Rational::zero());
        assert_eq!(
            eells_kuiper(&params([-3, -3, 1], [1, 5, 5])).unwrap(),
            Rational::new(13, 14)
        );
        assert_eq!(
            eells_kuiper(&params([1, -3, 1], [1, 5, 5])).unwrap(),
            Rational::new(3, 28)
        );
        assert_eq!(
            eells_kuiper(&params([1, 1, 1], [1, 1, 1])),
            Err(InvariantError::NZero)
        );
    }

    #[test]
    fn decomposition_example() {
        let d = ek_decomposition(&params([1, -3, 1], [1, 1, 1])).unwrap();
        assert_eq!(d.pontrjagin_term, Rational::new(-3, 896));
        assert_eq!(d.eta_term, Rational::new(1, 896));
        assert_eq!(d.very_small_eigenvalue_term, Rational::new(-4, 896));
        assert_eq!(d.combined(), Rational::zero());
        let d = ek_decomposition(&params([1, -3, 1], [1, 13, 5])).unwrap();
        assert_eq!(d.very_small_eigenvalue_term, Rational::new(1, 224));
    }

    #[test]
    fn classification_examples() {
        let c = classify(&params([1, -3, 1], [1, 1, 1])).unwrap();
        assert!(c.is_homotopy_sphere && c.is_standard);
        assert_eq!(c.oriented_class, Some(0));
        let c = classify(&params([-3, -3, 1], [1, 5, 5])).unwrap();
        assert_eq!(c.oriented_class, Some(26));
        assert!(c.is_non_milnor_class);
        assert_eq!(c.unoriented_class, Some(2));
        let c = classify(&params([1, -3, 1], [1, 5, 5])).unwrap();
        assert_eq!(c.oriented_class, Some(3));
        assert!(!c.is_non_milnor_class && !c.is_standard);
        let c = classify(&params([1, -3, 1], [1, 13, 5])).unwrap();
        assert!(!c.is_homotopy_sphere);
        assert_eq!(c.oriented_class, None);
        assert!(!c.is_standard);
    }

    #[test]
    fn non_integral_mu28_is_fatal_for_spheres() {
        assert_eq!(
            classify_mu(1, &Rational::new(1, 3)),
            Err(InvariantError::NonIntegralMu28(Rational::new(28, 3)))
        );
        assert!(classify_mu(5, &Rational::new(1, 3)).is_ok());
    }

    #[test]
    fn report_for_zero_n_has_no_mu() {
        let r = InvariantReport::compute(&params([1, 1, 1], [1, 1, 1])).unwrap();
        assert_eq!(r.n, 0);
        assert!(r.mu.is_none() && r.decomposition.is_none() && r.classification.is_none());
    }
}
