use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Error;

/// Exact coefficient field for every polynomial in the crate.
pub type Rational = BigRational;

/// Shorthand for `num / den`.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let trimmed = text.trim();
    Rational::from_str(trimmed).map_err(|e| Error::Parse(format!("bad rational {trimmed:?}: {e}")))
}

/// Canonical `"p/q"` rendering (`"p"` when the denominator is one).
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}
