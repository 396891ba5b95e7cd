//! Canonical text form: descending exponents, `*` for products, `^` for
//! powers. Top-level terms are joined with ` + `/` - `; the compact form
//! used inside bivariate coefficients drops the spaces.

use std::fmt::{self, Write};

use num_bigint::BigInt;
use num_traits::{One, Signed};

/// Writes `|c| * q^e` (the sign is handled by the caller). `tail` is an
/// extra factor such as `x^2` appended with `*`.
pub(crate) fn write_abs_monomial<W: Write>(
    w: &mut W,
    c: &BigInt,
    exp: i64,
    tail: Option<&str>,
) -> fmt::Result {
    let abs = c.abs();
    let mut factors: Vec<String> = Vec::new();
    match exp {
        0 => {}
        1 => factors.push("q".into()),
        e => factors.push(format!("q^{e}")),
    }
    if let Some(t) = tail {
        factors.push(t.to_string());
    }
    if factors.is_empty() {
        return write!(w, "{abs}");
    }
    if !abs.is_one() {
        write!(w, "{abs}*")?;
    }
    write!(w, "{}", factors.join("*"))
}

/// Terms must arrive in the order they should be printed.
pub(crate) fn write_univariate<'a, W, I>(w: &mut W, terms: I, spaced: bool) -> fmt::Result
where
    W: Write,
    I: IntoIterator<Item = (i64, &'a BigInt)>,
{
    let mut first = true;
    for (e, c) in terms {
        write_sign(w, c.is_negative(), first, spaced)?;
        write_abs_monomial(w, c, e, None)?;
        first = false;
    }
    if first {
        w.write_char('0')?;
    }
    Ok(())
}

pub(crate) fn write_sign<W: Write>(w: &mut W, negative: bool, first: bool, spaced: bool) -> fmt::Result {
    match (first, negative, spaced) {
        (true, true, _) => w.write_char('-'),
        (true, false, _) => Ok(()),
        (false, true, true) => w.write_str(" - "),
        (false, false, true) => w.write_str(" + "),
        (false, true, false) => w.write_char('-'),
        (false, false, false) => w.write_char('+'),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials() {
        let mut s = String::new();
        write_abs_monomial(&mut s, &BigInt::from(-3), 2, Some("x")).unwrap();
        assert_eq!(s, "3*q^2*x");
        s.clear();
        write_abs_monomial(&mut s, &BigInt::from(1), 0, Some("x^2")).unwrap();
        assert_eq!(s, "x^2");
        s.clear();
        write_abs_monomial(&mut s, &BigInt::from(1), -2, None).unwrap();
        assert_eq!(s, "q^-2");
    }
}
