use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{BivarPoly, ZPoly};
use crate::error::{Error, Result};

/// Greatest common divisor in `Z[q]`, normalized to a positive leading
/// coefficient.
///
/// The primitive parts go through a subresultant remainder sequence, which
/// keeps every intermediate in `Z[q]` with controlled coefficient growth;
/// the gcd of the integer contents is multiplied back at the end.
pub fn gcd_zpoly(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() {
        return normalize_sign(b);
    }
    if b.is_zero() {
        return normalize_sign(a);
    }
    let content = a.content().gcd(&b.content());
    let (mut f, mut g) = (a.primitive_part(), b.primitive_part());
    if f.degree() < g.degree() {
        std::mem::swap(&mut f, &mut g);
    }
    let core = subresultant_prs(f, g);
    core.primitive_part().scale(&content)
}

fn normalize_sign(p: &ZPoly) -> ZPoly {
    if p.leading_coeff().is_negative() {
        -p
    } else {
        p.clone()
    }
}

/// Last nonzero element of the subresultant PRS of `f` and `g`
/// (`deg f >= deg g`, both nonzero).
fn subresultant_prs(mut f: ZPoly, mut g: ZPoly) -> ZPoly {
    let mut lead = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let df = f.degree().expect("nonzero");
        let dg = g.degree().expect("nonzero");
        let delta = df - dg;
        let r = f.pseudo_rem(&g).expect("g is nonzero");
        let Some(dr) = r.degree() else {
            return g;
        };
        if dr == 0 {
            return ZPoly::one();
        }
        let divisor = &lead * num_traits::pow(h.clone(), delta as usize);
        f = g;
        g = r
            .div_scalar_exact(&divisor)
            .expect("subresultant coefficients are integral");
        lead = f.leading_coeff();
        // h <- lead^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            let num = num_traits::pow(lead.clone(), delta as usize);
            let den = num_traits::pow(h.clone(), delta as usize - 1);
            let (quo, rem) = num.div_rem(&den);
            debug_assert!(rem.is_zero());
            quo
        };
    }
}

/// Gcd over `x`-degrees of the univariate slices `[x^k] f`.
pub fn content_q(f: &BivarPoly) -> Result<ZPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut acc = ZPoly::zero();
    for k in 0..=f.x_degree().expect("nonzero") {
        let slice = f.slice(k);
        if slice.is_zero() {
            continue;
        }
        acc = gcd_zpoly(&acc, &slice);
        if acc.is_one() {
            break;
        }
    }
    Ok(acc)
}
