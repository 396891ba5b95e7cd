//! q-integers, q-factorials and q-binomial coefficients.

use num_bigint::BigInt;

use super::{LaurentPoly, ZPoly};
use crate::error::{Error, Result};

/// `[n]_q = (1 - q^n) / (1 - q)` for any integer `n`.
///
/// For `n >= 0` this is `1 + q + ... + q^(n-1)`; for negative arguments
/// `[-n]_q = -q^(-n) [n]_q`, which has only negative exponents.
pub fn q_int(n: i64) -> LaurentPoly {
    if n >= 0 {
        LaurentPoly::from_terms((0..n).map(|e| (e, BigInt::from(1))))
    } else {
        LaurentPoly::from_terms((n..0).map(|e| (e, BigInt::from(-1))))
    }
}

fn q_int_poly(n: u32) -> ZPoly {
    ZPoly::from_coeffs(std::iter::repeat_n(1, n as usize))
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: u32) -> ZPoly {
    (1..=n).fold(ZPoly::one(), |acc, i| &acc * &q_int_poly(i))
}

/// Gaussian binomial `[n choose k]_q` for `n >= k >= 0`.
pub fn q_binom(n: i64, k: i64) -> Result<ZPoly> {
    if k < 0 || n < k {
        return Err(Error::Domain { n, k });
    }
    let (n, k) = (n as u32, k as u32);
    let k = k.min(n - k);
    // [n]_q [n-1]_q ... [n-k+1]_q / [k]_q!
    let num = (n - k + 1..=n).fold(ZPoly::one(), |acc, i| &acc * &q_int_poly(i));
    Ok(num
        .div_exact(&q_factorial(k))
        .expect("q-binomial coefficients are polynomials"))
}
