use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::forward_binop;
use super::render::write_univariate;
use crate::error::{Error, Result};

/// Integer polynomial in `q`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`
    pub fn monomial(c: impl Into<BigInt>, exp: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// Builds from ascending coefficients: `[1, 2, 1]` is `1 + 2q + q^2`.
    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in coeffs.into_iter().enumerate() {
            p.add_term(e as u32, c.into());
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: u32, c: BigInt) {
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

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(One::is_one)
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Largest exponent with a nonzero coefficient; `None` for the zero
    /// polynomial (the `-inf` convention).
    pub fn q_max(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Smallest exponent with a nonzero coefficient; `None` for the zero
    /// polynomial (the `+inf` convention).
    pub fn q_min(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn degree(&self) -> Option<u32> {
        self.q_max()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.values().next_back().cloned().unwrap_or_default()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: u32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut last = match self.q_max() {
            Some(d) => d,
            None => return acc,
        };
        for (e, c) in self.coeffs.iter().rev() {
            for _ in *e..last {
                acc *= q;
            }
            acc += c;
            last = *e;
        }
        for _ in 0..last {
            acc *= q;
        }
        acc
    }

    /// Sum of coefficients, i.e. the value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c).expect("content divides every coefficient")
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut coeffs = BTreeMap::new();
        for (&e, v) in &self.coeffs {
            let (q, r) = v.div_rem(c);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            coeffs.insert(e, q);
        }
        Ok(Self { coeffs })
    }

    /// Quotient in `Z[q]`; fails unless `divisor` divides `self` exactly.
    pub fn div_exact(&self, divisor: &ZPoly) -> Result<Self> {
        let (quot, rem) = self.div_rem_z(divisor)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Long division that stays in `Z[q]`. Fails with `InexactDivision` as
    /// soon as a quotient coefficient is not an integer.
    fn div_rem_z(&self, divisor: &ZPoly) -> Result<(Self, Self)> {
        let d_deg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let d_lc = divisor.leading_coeff();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let (c, r) = rem.leading_coeff().div_rem(&d_lc);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            let shift = r_deg - d_deg;
            rem = &rem - &divisor.shift(shift).scale(&c);
            quot.add_term(shift, c);
        }
        Ok((quot, rem))
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`, computed
    /// without leaving `Z[q]`.
    pub fn pseudo_rem(&self, b: &ZPoly) -> Result<Self> {
        let b_deg = b.degree().ok_or(Error::DivisionByZero)?;
        let Some(a_deg) = self.degree() else {
            return Ok(Self::zero());
        };
        if a_deg < b_deg {
            return Ok(self.clone());
        }
        let lc = b.leading_coeff();
        let mut rem = self.clone();
        let mut steps = a_deg - b_deg + 1;
        while let Some(r_deg) = rem.degree() {
            if r_deg < b_deg {
                break;
            }
            let r_lc = rem.leading_coeff();
            rem = &rem.scale(&lc) - &b.shift(r_deg - b_deg).scale(&r_lc);
            steps -= 1;
        }
        for _ in 0..steps {
            rem = rem.scale(&lc);
        }
        Ok(rem)
    }

    /// Sets `q -> 1/q`, giving a Laurent polynomial.
    pub fn invert_variable(&self) -> super::LaurentPoly {
        super::LaurentPoly::from_terms(self.terms().map(|(e, c)| (-i64::from(e), c.clone())))
    }

    /// Compact rendering without spaces, as used inside bivariate output.
    pub fn to_compact_string(&self) -> String {
        let mut s = String::new();
        write_univariate(&mut s, self.terms().rev().map(|(e, c)| (i64::from(e), c)), false)
            .expect("writing to a String cannot fail");
        s
    }
}

impl fmt::Display for ZPoly {
    /// Descending exponents: `q^2 + 2*q + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_univariate(f, self.terms().rev().map(|(e, c)| (i64::from(e), c)), true)
    }
}

impl Add<&ZPoly> for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub<&ZPoly> for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul<&ZPoly> for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        let mut out = ZPoly::zero();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        -&self
    }
}

forward_binop!(ZPoly, Add, add);
forward_binop!(ZPoly, Sub, sub);
forward_binop!(ZPoly, Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> ZPoly {
        ZPoly::from_coeffs(c.iter().copied())
    }

    #[test]
    fn zero_conventions() {
        let z = ZPoly::zero();
        assert_eq!(z.q_max(), None);
        assert_eq!(z.q_min(), None);
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn no_stored_zeros() {
        let a = p(&[1, 1]);
        let b = p(&[-1, -1]);
        assert!((a + b).is_zero());
        assert_eq!(p(&[0, 0, 3]).num_terms(), 1);
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[1, 2, 1]).to_string(), "q^2 + 2*q + 1");
        assert_eq!(p(&[0, -1, 0, 1]).to_string(), "q^3 - q");
        assert_eq!(p(&[1, 1]).to_compact_string(), "q+1");
        assert_eq!(p(&[-2]).to_string(), "-2");
    }

    #[test]
    fn exact_division() {
        let f = p(&[-1, 0, 1]);
        assert_eq!(f.div_exact(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(f.div_exact(&p(&[0, 1])), Err(Error::InexactDivision));
        assert_eq!(p(&[1, 1]).div_exact(&p(&[0, 2])), Err(Error::InexactDivision));
        assert_eq!(f.div_exact(&ZPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn pseudo_remainder_identity() {
        // prem(a, b) = lc(b)^(da-db+1) a - Q b for some Q
        let a = p(&[3, 0, 1, 5]);
        let b = p(&[1, 2]);
        let r = a.pseudo_rem(&b).unwrap();
        assert!(r.degree().unwrap_or(0) < 1);
        let scaled = a.scale(&BigInt::from(8));
        assert!((scaled - r).div_exact(&b).is_ok());
    }

    #[test]
    fn evaluation() {
        let f = p(&[1, 0, 3]);
        assert_eq!(f.eval(&BigInt::from(2)), BigInt::from(13));
        assert_eq!(f.eval_one(), BigInt::from(4));
        assert_eq!(ZPoly::monomial(1, 3).eval(&BigInt::from(2)), BigInt::from(8));
    }

    #[test]
    fn primitive_part_normalizes_sign() {
        assert_eq!(p(&[-2, 0, -4]).primitive_part(), p(&[1, 0, 2]));
        assert_eq!(p(&[6, 9]).content(), BigInt::from(3));
    }
}
