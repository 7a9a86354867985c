//! Exact rational scalars.
//!
//! Every coefficient in this crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. There is no
//! floating point anywhere in the library.

use num::BigInt;

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rational = num::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `p/q` from machine integers. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses the wire format for rationals: `"p/q"` or `"p"` in decimal.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::InvalidInput(format!("bad rational {s:?}: {e}")))
}

/// Formats a rational in the wire format: `"p/q"`, or `"p"` when q = 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}
