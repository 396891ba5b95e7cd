use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::render::{write_abs_monomial, write_sign};
use super::{forward_binop, RatFunc, RatPolyX, ZPoly};
use crate::error::{Error, Result};

/// Integer polynomial in `(q, x)`.
///
/// Keys are ordered by `x`-degree first and `q`-degree second, so the last
/// entry is the leading term under that order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_slices([ZPoly::one()])
    }

    /// `slices[k]` becomes the coefficient of `x^k`.
    pub fn from_slices<I: IntoIterator<Item = ZPoly>>(slices: I) -> Self {
        let mut out = Self::zero();
        for (k, s) in slices.into_iter().enumerate() {
            for (e, c) in s.terms() {
                out.add_term(e, k as u32, c.clone());
            }
        }
        out
    }

    pub fn add_term(&mut self, q_exp: u32, x_exp: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (x_exp, q_exp);
        let slot = self.coeffs.entry(key).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, q_exp: u32, x_exp: u32) -> BigInt {
        self.coeffs.get(&(x_exp, q_exp)).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `(q_exp, x_exp, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&(x, q), c)| (q, x, c))
    }

    /// Support points `(q_exp, x_exp)`.
    pub fn support(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.keys().map(|&(x, q)| (i64::from(q), i64::from(x)))
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().map(|&(x, _)| x)
    }

    /// `[x^k] f` as a polynomial in `q`.
    pub fn slice(&self, k: u32) -> ZPoly {
        ZPoly::from_terms(
            self.coeffs
                .range((k, 0)..=(k, u32::MAX))
                .map(|(&(_, q), c)| (q, c.clone())),
        )
    }

    /// All slices `[x^0] f ..= [x^deg] f`.
    pub fn slices(&self) -> Vec<ZPoly> {
        match self.x_degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|k| self.slice(k)).collect(),
        }
    }

    /// Leading term under the (x-degree, q-degree) order.
    pub fn leading_term(&self) -> Option<(u32, u32, &BigInt)> {
        self.coeffs.iter().next_back().map(|(&(x, q), c)| (q, x, c))
    }

    pub fn mul_zpoly(&self, d: &ZPoly) -> Self {
        let mut out = Self::zero();
        for (&(x, q), c) in &self.coeffs {
            for (e, dc) in d.terms() {
                out.add_term(q + e, x, c * dc);
            }
        }
        out
    }

    /// Multiply by `q^k`.
    pub fn shift_q(&self, k: u32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&(x, q), c)| ((x, q + k), c.clone())).collect(),
        }
    }

    /// Slice-wise exact quotient by a polynomial in `q`.
    pub fn exact_div(&self, d: &ZPoly) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let slices = self
            .slices()
            .iter()
            .map(|s| s.div_exact(d))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_slices(slices))
    }

    /// Coefficientwise `f / den` as an element of `Q(q)[x]`.
    pub fn over(&self, den: &ZPoly) -> Result<RatPolyX> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.slices()
            .into_iter()
            .map(|s| RatFunc::new(s, den.clone()))
            .collect::<Result<Vec<_>>>()
            .map(RatPolyX::from_coeffs)
    }

    pub fn eval_q_one(&self) -> Vec<BigInt> {
        self.slices().iter().map(ZPoly::eval_one).collect()
    }
}

impl fmt::Display for BivarPoly {
    /// Descending `x`-degree; multi-term coefficients are parenthesized in
    /// compact form: `(q^3+q^2)*x^2 + (2*q^2+2*q)*x + (q+1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.x_degree() else {
            return f.write_str("0");
        };
        let mut first = true;
        for k in (0..=deg).rev() {
            let slice = self.slice(k);
            if slice.is_zero() {
                continue;
            }
            let x_part = match k {
                0 => None,
                1 => Some("x".to_string()),
                k => Some(format!("x^{k}")),
            };
            if slice.num_terms() == 1 {
                let (e, c) = slice.terms().next().expect("one term");
                write_sign(f, c.is_negative(), first, true)?;
                write_abs_monomial(f, c, i64::from(e), x_part.as_deref())?;
            } else {
                write_sign(f, false, first, true)?;
                write!(f, "({})", slice.to_compact_string())?;
                if let Some(x) = x_part {
                    write!(f, "*{x}")?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl Add<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (q, x, c) in rhs.terms() {
            out.add_term(q, x, c.clone());
        }
        out
    }
}

impl Sub<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (q, x, c) in rhs.terms() {
            out.add_term(q, x, -c);
        }
        out
    }
}

impl Mul<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (qa, xa, ca) in self.terms() {
            for (qb, xb, cb) in rhs.terms() {
                out.add_term(qa + qb, xa + xb, ca * cb);
            }
        }
        out
    }
}

forward_binop!(BivarPoly, Add, add);
forward_binop!(BivarPoly, Sub, sub);
forward_binop!(BivarPoly, Mul, mul);
