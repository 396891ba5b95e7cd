use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::render::write_univariate;
use super::{forward_binop, RatFunc, ZPoly};

/// Integer Laurent polynomial in `q` (negative exponents allowed).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::from_terms([(exp, c.into())])
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Returns `(p, s)` with `self = q^s * p`, `p` an ordinary polynomial
    /// not divisible by `q`.
    pub fn split_monomial(&self) -> (ZPoly, i64) {
        let s = self.min_exp().unwrap_or(0);
        let p = ZPoly::from_terms(self.terms().map(|(e, c)| ((e - s) as u32, c.clone())));
        (p, s)
    }

    /// Converts to an ordinary polynomial if no negative exponent occurs.
    pub fn to_zpoly(&self) -> Option<ZPoly> {
        if self.min_exp().is_some_and(|e| e < 0) {
            return None;
        }
        Some(ZPoly::from_terms(self.terms().map(|(e, c)| (e as u32, c.clone()))))
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        let (p, s) = self.split_monomial();
        if s >= 0 {
            RatFunc::from(p.shift(s as u32))
        } else {
            RatFunc::new(p, ZPoly::monomial(1, (-s) as u32)).expect("monomial denominator is nonzero")
        }
    }
}

impl From<&ZPoly> for LaurentPoly {
    fn from(p: &ZPoly) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| (i64::from(e), c.clone())))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_univariate(f, self.terms().rev(), true)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

forward_binop!(LaurentPoly, Add, add);
forward_binop!(LaurentPoly, Sub, sub);
forward_binop!(LaurentPoly, Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_and_ratfunc() {
        // -q^-2 - q^-1 = -(1 + q) / q^2
        let l = LaurentPoly::from_terms([(-2, BigInt::from(-1)), (-1, BigInt::from(-1))]);
        let (p, s) = l.split_monomial();
        assert_eq!(s, -2);
        assert_eq!(p, ZPoly::from_coeffs([-1, -1]));
        let r = l.to_ratfunc();
        assert_eq!(r.numer(), &ZPoly::from_coeffs([-1, -1]));
        assert_eq!(r.denom(), &ZPoly::monomial(1, 2));
        assert_eq!(l.to_string(), "-q^-1 - q^-2");
    }

    #[test]
    fn product_cancels_exponents() {
        let a = LaurentPoly::monomial(2, -3);
        let b = LaurentPoly::monomial(3, 3);
        assert_eq!((&a * &b).to_zpoly(), Some(ZPoly::constant(6)));
    }
}
