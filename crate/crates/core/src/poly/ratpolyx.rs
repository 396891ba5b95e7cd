use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::{forward_binop, gcd_zpoly, BivarPoly, RatFunc, ZPoly};

/// Polynomial in `x` with coefficients in `Q(q)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RatPolyX {
    // coeffs[k] is the coefficient of x^k; the last entry is never zero
    coeffs: Vec<RatFunc>,
}

impl RatPolyX {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: RatFunc) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![RatFunc::zero(), RatFunc::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<RatFunc>) -> Self {
        while coeffs.last().is_some_and(RatFunc::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RatFunc {
        self.coeffs.get(k).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation at an element of `Q(q)`.
    pub fn eval(&self, at: &RatFunc) -> RatFunc {
        self.coeffs
            .iter()
            .rev()
            .fold(RatFunc::zero(), |acc, c| &(&acc * at) + c)
    }

    /// Writes `self = N / D` with `N` in `Z[q, x]` and `D` the least common
    /// multiple of the coefficient denominators.
    pub fn common_denominator(&self) -> (BivarPoly, ZPoly) {
        let mut den = ZPoly::one();
        for c in &self.coeffs {
            let g = gcd_zpoly(&den, c.denom()).primitive_part();
            den = &den * &c.denom().div_exact(&g).expect("gcd divides");
        }
        let slices = self.coeffs.iter().map(|c| {
            let cofactor = den.div_exact(c.denom()).expect("lcm is a multiple");
            c.numer() * &cofactor
        });
        (BivarPoly::from_slices(slices.collect::<Vec<_>>()), den)
    }
}

impl fmt::Display for RatPolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            match k {
                0 => write!(f, "[{c}]")?,
                1 => write!(f, "[{c}]*x")?,
                _ => write!(f, "[{c}]*x^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl Add<&RatPolyX> for &RatPolyX {
    type Output = RatPolyX;
    fn add(self, rhs: &RatPolyX) -> RatPolyX {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPolyX::from_coeffs((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub<&RatPolyX> for &RatPolyX {
    type Output = RatPolyX;
    fn sub(self, rhs: &RatPolyX) -> RatPolyX {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPolyX::from_coeffs((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul<&RatPolyX> for &RatPolyX {
    type Output = RatPolyX;
    fn mul(self, rhs: &RatPolyX) -> RatPolyX {
        if self.is_zero() || rhs.is_zero() {
            return RatPolyX::zero();
        }
        let mut out = vec![RatFunc::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        RatPolyX::from_coeffs(out)
    }
}

forward_binop!(RatPolyX, Add, add);
forward_binop!(RatPolyX, Sub, sub);
forward_binop!(RatPolyX, Mul, mul);
