//! Exact polynomial arithmetic for `J_P` and its one-variable slices.

mod bivariate;
mod univariate;

pub use bivariate::{xy1_power, BivariatePolynomial};
pub use univariate::{SupportReport, UnivariateRationalPolynomial, Variable};

use num_bigint::BigInt;
use num_traits::One;

/// Exact rational numbers in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Parses `p/q` or an integer.
pub fn parse_rational(text: &str) -> crate::Result<Rational> {
    text.trim()
        .parse::<Rational>()
        .map_err(|_| crate::Error::InvalidArgument(format!("`{text}` is not a rational number")))
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub(crate) fn rational_pow(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}
