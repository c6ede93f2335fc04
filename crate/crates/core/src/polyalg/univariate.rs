use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variable {
    X,
    Y,
}

impl Variable {
    pub fn name(self) -> &'static str {
        match self {
            Variable::X => "x",
            Variable::Y => "y",
        }
    }
}

/// A one-variable polynomial with exact rational coefficients; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnivariateRationalPolynomial {
    var: Variable,
    coeffs: BTreeMap<u32, Rational>,
}

/// Support of a slice and whether it is an integer interval.
///
/// The zero polynomial has empty support and counts as interpolating; `zero`
/// flags that case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportReport {
    pub support: Vec<u32>,
    pub interpolating: bool,
    pub zero: bool,
}

impl UnivariateRationalPolynomial {
    pub fn zero(var: Variable) -> Self {
        Self {
            var,
            coeffs: BTreeMap::new(),
        }
    }

    /// Collects `(degree, coeff)` pairs, summing repeated degrees.
    pub fn from_terms(var: Variable, terms: impl IntoIterator<Item = (u32, Rational)>) -> Self {
        let mut p = Self::zero(var);
        for (d, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = p.coeffs.entry(d).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                p.coeffs.remove(&d);
            }
        }
        p
    }

    pub fn from_integers(var: Variable, coeffs: &[i64]) -> Self {
        Self::from_terms(
            var,
            coeffs
                .iter()
                .enumerate()
                .map(|(d, &c)| (d as u32, Rational::from_integer(c.into()))),
        )
    }

    pub fn var(&self) -> Variable {
        self.var
    }

    pub fn coeff(&self, degree: u32) -> Rational {
        self.coeffs.get(&degree).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Ascending `(degree, coeff)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn support(&self) -> Vec<u32> {
        self.coeffs.keys().copied().collect()
    }

    pub fn support_report(&self) -> SupportReport {
        let support = self.support();
        let interpolating = match (support.first(), support.last()) {
            (Some(&lo), Some(&hi)) => (hi - lo + 1) as usize == support.len(),
            _ => true,
        };
        SupportReport {
            zero: support.is_empty(),
            support,
            interpolating,
        }
    }

    pub fn is_interpolating(&self) -> bool {
        self.support_report().interpolating
    }

    /// `z^n p(1/z)`: coefficient `k` moves to degree `n - k`.
    pub fn reverse(&self, n: u32) -> Result<Self> {
        if let Some(d) = self.degree().filter(|&d| d > n) {
            return Err(Error::InvalidArgument(format!(
                "cannot reverse a degree-{d} polynomial at degree {n}"
            )));
        }
        Ok(Self {
            var: self.var,
            coeffs: self.coeffs.iter().map(|(&d, c)| (n - d, c.clone())).collect(),
        })
    }

    pub fn evaluate(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let top = self.degree().unwrap_or(0);
        for d in (0..=top).rev() {
            acc = acc * at + self.coeff(d);
        }
        acc
    }

    /// `(degree, "p/q")` pairs; integers print without a denominator.
    pub fn to_pairs(&self) -> Vec<(u32, String)> {
        self.coeffs.iter().map(|(&d, c)| (d, c.to_string())).collect()
    }
}

/// Descending degree, e.g. `x^3 - 8/27` or `2*y^2 + 1/2*y`.
impl fmt::Display for UnivariateRationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let var = self.var.name();
        for (k, (&d, c)) in self.coeffs.iter().rev().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let power = match d {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{d}"),
            };
            match (mag.is_one(), power.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (true, false) => write!(f, "{power}")?,
                (false, false) => write!(f, "{mag}*{power}")?,
            }
        }
        Ok(())
    }
}
