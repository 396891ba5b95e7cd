use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use qnewton::poly::{gcd_zpoly, q_binom, q_factorial, q_int, LaurentPoly, RatFunc, ZPoly};

fn zpoly() -> impl Strategy<Value = ZPoly> {
    prop::collection::vec(-9i64..=9, 0..6).prop_map(ZPoly::from_coeffs)
}

fn nonzero() -> impl Strategy<Value = ZPoly> {
    zpoly().prop_filter("nonzero", |p| !p.is_zero())
}

/// Dense ascending coefficients over Q, trailing zeros trimmed.
fn to_q(p: &ZPoly) -> Vec<BigRational> {
    let n = p.degree().map_or(0, |d| d as usize + 1);
    (0..n).map(|e| BigRational::from_integer(p.coeff(e as u32))).collect()
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Remainder of `a` by `b` over Q (schoolbook).
fn rem_q(mut a: Vec<BigRational>, b: &[BigRational]) -> Vec<BigRational> {
    trim(&mut a);
    while a.len() >= b.len() {
        let shift = a.len() - b.len();
        let factor = a.last().unwrap() / b.last().unwrap();
        for (i, c) in b.iter().enumerate() {
            a[i + shift] = &a[i + shift] - &factor * c;
        }
        trim(&mut a);
    }
    a
}

/// Monic gcd over Q by the plain Euclidean algorithm.
fn gcd_q(a: &ZPoly, b: &ZPoly) -> Vec<BigRational> {
    let (mut x, mut y) = (to_q(a), to_q(b));
    while !y.is_empty() {
        let r = rem_q(x, &y);
        x = y;
        y = r;
    }
    if let Some(lc) = x.last().cloned() {
        for c in &mut x {
            *c = &*c / &lc;
        }
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in zpoly(), b in zpoly(), c in zpoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &ZPoly::one(), a.clone());
        prop_assert_eq!(-(-a.clone()), a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in zpoly(), b in nonzero()) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn inexact_division_is_an_error(a in zpoly(), b in nonzero()) {
        prop_assume!(b.degree() != Some(0) || b.coeff(0).abs() != BigInt::one());
        // a b + 1 leaves remainder 1 (or a non-multiple constant) modulo b
        prop_assert!((&(&a * &b) + &ZPoly::one()).div_exact(&b).is_err());
    }

    #[test]
    fn gcd_matches_rational_euclid(a in zpoly(), b in zpoly(), c in nonzero()) {
        // force a nontrivial common factor
        let (a, b) = (&a * &c, &b * &c);
        let g = gcd_zpoly(&a, &b);
        let oracle = gcd_q(&a, &b);
        if a.is_zero() && b.is_zero() {
            prop_assert!(g.is_zero());
        } else {
            let lc = BigRational::from_integer(g.leading_coeff());
            let monic: Vec<BigRational> = to_q(&g).iter().map(|x| x / &lc).collect();
            prop_assert_eq!(monic, oracle);
            prop_assert!(g.leading_coeff().is_positive());
            prop_assert_eq!(g.content(), a.content().gcd(&b.content()));
            if !a.is_zero() { prop_assert!(a.div_exact(&g).is_ok()); }
            if !b.is_zero() { prop_assert!(b.div_exact(&g).is_ok()); }
        }
    }

    #[test]
    fn ratfunc_field_operations(a in zpoly(), b in nonzero(), c in zpoly(), d in nonzero()) {
        let x = RatFunc::new(a, b).unwrap();
        let y = RatFunc::new(c, d).unwrap();
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(&x * &y, &y * &x);
        if !y.is_zero() {
            prop_assert_eq!((&x * &y).checked_div(&y).unwrap(), x.clone());
            prop_assert_eq!(&y * &y.inv().unwrap(), RatFunc::one());
        }
        // normal form: positive leading denominator coefficient
        prop_assert!(x.denom().leading_coeff().is_positive());
    }

    #[test]
    fn laurent_inversion_is_involutive(a in zpoly(), s in -5i64..=5) {
        let l = LaurentPoly::from(&a).shift(s);
        let (z, e) = l.split_monomial();
        prop_assert_eq!(LaurentPoly::from(&z).shift(e), l);
        // q -> 1/q twice
        let back = LaurentPoly::from_terms(a.invert_variable().terms().map(|(e, c)| (-e, c.clone())));
        prop_assert_eq!(back, LaurentPoly::from(&a));
    }

    #[test]
    fn q_binomial_symmetry_and_positivity(n in 0i64..10, k in 0i64..10) {
        prop_assume!(k <= n);
        let b = q_binom(n, k).unwrap();
        prop_assert_eq!(&b, &q_binom(n, n - k).unwrap());
        prop_assert!(b.terms().all(|(_, c)| c.is_positive()));
        prop_assert_eq!(b.degree(), Some(((n - k) * k) as u32));
        // Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
        if n >= 1 && k >= 1 && k < n {
            let rhs = &q_binom(n - 1, k - 1).unwrap() + &q_binom(n - 1, k).unwrap().shift(k as u32);
            prop_assert_eq!(b.clone(), rhs);
        }
        // the product formula
        let num = q_factorial(n as u32);
        let den = &q_factorial(k as u32) * &q_factorial((n - k) as u32);
        prop_assert_eq!(num.div_exact(&den).unwrap(), b);
    }

    #[test]
    fn q_integer_recurrence(n in -12i64..12) {
        // [n+1] = 1 + q [n], also for negative n
        let lhs = q_int(n + 1);
        let rhs = &LaurentPoly::monomial(1, 0) + &q_int(n).shift(1);
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn q_binomial_row_sums_at_one() {
    for n in 0..12i64 {
        let total: BigInt = (0..=n).map(|k| q_binom(n, k).unwrap().eval_one()).sum();
        assert_eq!(total, BigInt::from(1u64 << n));
    }
}

#[test]
fn q_binomial_domain() {
    assert!(q_binom(3, 4).is_err());
    assert!(q_binom(-1, 0).is_err());
    assert!(q_binom(3, -1).is_err());
}
