//! Exact rational scalars.
//!
//! Every numeric quantity in this crate that is not a lattice coordinate is a
//! [`Rational`]: an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. Wrapping `num_rational::BigRational` gives exact
//! `+ - * /`, `floor`/`ceil`, and a total order for free; the helpers here
//! cover construction and parsing in the `p/q` syntax used on the command
//! line.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Builds `numer/denom`, reducing to lowest terms.
///
/// Panics if `denom` is zero, like `BigRational::new`.
pub fn rational<N, D>(numer: N, denom: D) -> Rational
where
    N: Into<BigInt>,
    D: Into<BigInt>,
{
    Rational::new(numer.into(), denom.into())
}

/// The integer `k` as a rational.
pub fn rational_int<N: Into<BigInt>>(k: N) -> Rational {
    Rational::from_integer(k.into())
}

/// Parses `P/Q` or a bare integer `P`; used for `-c` and interval endpoints.
pub fn parse_rational(text: &str) -> Result<Rational> {
    text.trim().parse::<Rational>().map_err(|_| {
        Error::Parse(format!(
            "`{}` is not a rational number (use P or P/Q)",
            text
        ))
    })
}

/// Exact floor of a rational as an integer.
pub fn floor_int(value: &Rational) -> BigInt {
    value.floor().to_integer()
}
