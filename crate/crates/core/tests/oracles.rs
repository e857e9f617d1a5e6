mod common;

use common::*;
use exotic7::invariants::{characteristic_numbers, AbelianGroup};
use exotic7::search::corollary_table;
use exotic7::{
    cyclotomic_polynomial, dedekind_sum_exact, eells_kuiper, n_invariant, q3_closed_form,
    triple_dedekind_sum, validate, Rational, RationalPolynomial,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn exact_matches_naive_float_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        let (q, p) = random_dedekind_args(&mut rng, 25, 60);
        let exact = dedekind_sum_exact(&args(q, p)).unwrap().to_f64();
        let naive = dedekind_f64(q, p);
        let tol = 1e-8 * naive.abs().max(1.0);
        assert!((exact - naive).abs() < tol, "q={q} p={p:?}: {exact} vs {naive}");
    }
}

#[test]
fn q_minus_three_examples() {
    // D(-3; 4, -2, 4) from the worked example
    assert_eq!(dedekind_sum_exact(&args(-3, [4, -2, 4])).unwrap(), Rational::new(-1, 28));
    assert_eq!(q3_closed_form([4, -2, 4]).unwrap(), Rational::new(-1, 28));
    assert_eq!(dedekind_sum_exact(&args(3, [4, -2, 4])).unwrap(), Rational::new(-1, 28));
}

#[test]
fn closed_form_matches_by_hand() {
    // h = (1, 1, 1): every h_j h_k ≡ 1, so 1/84 · (−3)
    assert_eq!(q3_closed_form([2, 2, 2]).unwrap(), Rational::new(-1, 28));
    // h = (1, 2, 4): products 8, 4, 2 mod 3 = 2, 1, 2 → (+1) + (−2) + (+4)
    assert_eq!(q3_closed_form([2, 4, 8]).unwrap(), Rational::new(3, 84));
}

fn mobius(n: u32) -> i32 {
    let (mut n, mut k, mut sign) = (n, 2, 1);
    while k * k <= n {
        if n % k == 0 {
            n /= k;
            if n % k == 0 {
                return 0;
            }
            sign = -sign;
        }
        k += 1;
    }
    if n > 1 {
        -sign
    } else {
        sign
    }
}

/// `Φ_n = Π_{d | n} (x^d − 1)^{μ(n/d)}`, multiplying the positive factors
/// and dividing out the negative ones.
fn cyclotomic_by_mobius(n: u32) -> RationalPolynomial {
    let binomial = |d: u32| {
        RationalPolynomial::monomial(d as usize).sub(&RationalPolynomial::constant(Rational::one()))
    };
    let divs: Vec<u32> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut num = RationalPolynomial::constant(Rational::one());
    let mut den = RationalPolynomial::constant(Rational::one());
    for &d in &divs {
        match mobius(n / d) {
            1 => num = num.mul(&binomial(d)),
            -1 => den = den.mul(&binomial(d)),
            _ => {}
        }
    }
    let (quot, rem) = num.div_rem(&den).unwrap();
    assert!(rem.is_zero());
    quot
}

#[test]
fn cyclotomic_polynomials_by_mobius() {
    for n in 1..=120 {
        assert_eq!(cyclotomic_polynomial(n), cyclotomic_by_mobius(n), "Phi_{n}");
    }
    assert_eq!(cyclotomic_polynomial(6).to_string(), "x^2 - x + 1");
}

#[test]
fn corollary_family_matches_hand_reduction() {
    let r: Vec<i64> = (-40..=40).collect();
    for row in corollary_table(&r).unwrap() {
        assert_eq!(row.oriented_class, corollary_class(row.r), "r = {}", row.r);
    }
    for (r, class) in [(-3, 16), (-1, 9), (1, 26), (2, 19), (4, 2), (8, 12), (11, 23), (15, 5)] {
        assert_eq!(corollary_class(r), class);
    }
}

#[test]
fn worked_manifold_values() {
    let p = validate([-3, -3, 1], [1, 5, 5]).unwrap();
    assert_eq!(n_invariant(&p).unwrap(), -1);
    assert_eq!(eells_kuiper(&p).unwrap(), Rational::new(13, 14));
    assert_eq!(triple_dedekind_sum(&p.a).unwrap(), Rational::new(-1, 28));

    let witness = validate([1, -3, 1], [1, 1, 1]).unwrap();
    assert_eq!(n_invariant(&witness).unwrap(), -1);
    assert_eq!(eells_kuiper(&witness).unwrap(), Rational::zero());
}

#[test]
fn h4_order_is_abs_n() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let p = random_params(&mut rng, 41);
        let n = n_invariant(&p).unwrap();
        let h4 = exotic7::cohomology(&p).unwrap().h(4);
        if n == 0 {
            assert_eq!(h4, AbelianGroup::Integers);
        } else {
            assert_eq!(h4.order(), Some(n.unsigned_abs()));
        }
    }
}

#[test]
fn characteristic_numbers_recomputed() {
    let p = validate([-3, -3, 1], [1, 5, 5]).unwrap();
    let c = characteristic_numbers(&p);
    // a1² = 9, b1² = 1
    assert_eq!(c.p1_tb, Rational::new(2, 1) - Rational::new(2, 9));
    assert_eq!(c.e_tb, Rational::new(-1, 3) - Rational::one());
    assert_eq!(c.e_w, Rational::new(-1, 9));
    assert_eq!(c.half_p1_tb_plus_w, Rational::from(7));
}
