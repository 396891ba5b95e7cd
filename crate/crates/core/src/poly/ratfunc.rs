use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::Signed;

use super::{forward_binop, gcd_zpoly, LaurentPoly, ZPoly};
use crate::error::{Error, Result};

/// Element of `Q(q)` stored as a reduced quotient of integer polynomials.
///
/// Normal form: numerator and denominator are coprime in `Q[q]`, their
/// integer contents are coprime, and the denominator has a positive leading
/// coefficient. Zero is `0/1`. Each value has exactly one such
/// representation, so `==` is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: ZPoly,
    den: ZPoly,
}

impl RatFunc {
    pub fn new(num: ZPoly, den: ZPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: ZPoly, den: ZPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd_zpoly(&num, &den).primitive_part();
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let mut c = num.content().gcd(&den.content());
        if den.leading_coeff().is_negative() {
            c = -c;
        }
        if c != num_bigint::BigInt::from(1) {
            num = num.div_scalar_exact(&c).expect("content divides");
            den = den.div_scalar_exact(&c).expect("content divides");
        }
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self {
            num: ZPoly::zero(),
            den: ZPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(ZPoly::one())
    }

    pub fn numer(&self) -> &ZPoly {
        &self.num
    }

    pub fn denom(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }
}

impl From<ZPoly> for RatFunc {
    fn from(p: ZPoly) -> Self {
        Self {
            num: p,
            den: ZPoly::one(),
        }
    }
}

impl From<&LaurentPoly> for RatFunc {
    fn from(p: &LaurentPoly) -> Self {
        p.to_ratfunc()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalized(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_binop!(RatFunc, Add, add);
forward_binop!(RatFunc, Sub, sub);
forward_binop!(RatFunc, Mul, mul);
