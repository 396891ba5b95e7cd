//! Exact polynomial arithmetic over the integers and over `Q(q)`.
//!
//! Every type here stores its coefficients sparsely and never keeps an
//! explicit zero, so structural equality is mathematical equality.

mod bivar;
mod gcd;
mod interp;
mod laurent;
mod qnum;
mod ratfunc;
mod ratpolyx;
mod render;
mod zpoly;

pub use bivar::BivarPoly;
pub use gcd::{content_q, gcd_zpoly};
pub use interp::{interpolate_at_q_integers, lagrange_interpolate};
pub use laurent::LaurentPoly;
pub use qnum::{q_binom, q_factorial, q_int};
pub use ratfunc::RatFunc;
pub use ratpolyx::RatPolyX;
pub use zpoly::ZPoly;

/// Forwards `Op<&T> for &T` to the owned and mixed operand combinations.
macro_rules! forward_binop {
    ($t:ty, $tr:ident, $method:ident) => {
        impl std::ops::$tr<$t> for $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                std::ops::$tr::$method(&self, &rhs)
            }
        }
        impl std::ops::$tr<&$t> for $t {
            type Output = $t;
            fn $method(self, rhs: &$t) -> $t {
                std::ops::$tr::$method(&self, rhs)
            }
        }
        impl std::ops::$tr<$t> for &$t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                std::ops::$tr::$method(self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binop;
