use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::univariate::{UnivariateRationalPolynomial, Variable};
use super::{rational_pow, Rational};
use crate::error::{Error, Result};

/// A polynomial in `x, y` with arbitrary-precision integer coefficients.
///
/// Terms are keyed by `(deg_x, deg_y)`; zero coefficients are never stored,
/// so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(deg_x: u32, deg_y: u32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(deg_x, deg_y, c.into());
        p
    }

    /// Collects `(deg_x, deg_y, coeff)` triples, summing repeated keys.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (dx, dy, c) in terms {
            p.add_term(dx, dy, c.into());
        }
        p
    }

    pub fn add_term(&mut self, deg_x: u32, deg_y: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((deg_x, deg_y)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(deg_x, deg_y));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, deg_x: u32, deg_y: u32) -> BigInt {
        self.terms.get(&(deg_x, deg_y)).cloned().unwrap_or_default()
    }

    /// Terms sorted by `(deg_x, deg_y)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(dx, dy), c)| (dx, dy, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximal total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(dx, dy)| dx + dy).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(dx, _)| dx).max()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `p(y, x)`.
    pub fn swap_xy(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(dx, dy), c)| ((dy, dx), c.clone()))
                .collect(),
        }
    }

    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(dx, dy), c)| {
                rational_pow(x, dx) * rational_pow(y, dy) * Rational::from_integer(c.clone())
            })
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    /// `p(x, t)` as a polynomial in `x`.
    pub fn specialize_y(&self, t: &Rational) -> UnivariateRationalPolynomial {
        UnivariateRationalPolynomial::from_terms(
            Variable::X,
            self.terms
                .iter()
                .map(|(&(dx, dy), c)| (dx, rational_pow(t, dy) * Rational::from_integer(c.clone()))),
        )
    }

    /// `p(t, y)` as a polynomial in `y`.
    pub fn specialize_x(&self, t: &Rational) -> UnivariateRationalPolynomial {
        UnivariateRationalPolynomial::from_terms(
            Variable::Y,
            self.terms
                .iter()
                .map(|(&(dx, dy), c)| (dy, rational_pow(t, dx) * Rational::from_integer(c.clone()))),
        )
    }

    /// Exact quotient by `x + y - 1`.
    ///
    /// Synthetic division in `x` over `Z[y]` at the root `x = 1 - y`; the
    /// divisor is monic in `x`, so the quotient has integer coefficients.
    /// A nonzero remainder (a polynomial in `y`) is an error.
    pub fn divide_exact_xy1(&self) -> Result<Self> {
        let Some(deg) = self.degree_x() else {
            return Ok(Self::zero());
        };
        // columns[dx] is the coefficient of x^dx as a dense polynomial in y
        let mut columns: Vec<Vec<BigInt>> = vec![Vec::new(); deg as usize + 1];
        for (&(dx, dy), c) in &self.terms {
            let col = &mut columns[dx as usize];
            if col.len() <= dy as usize {
                col.resize(dy as usize + 1, BigInt::zero());
            }
            col[dy as usize] = c.clone();
        }
        let mut quotient = Self::zero();
        let mut carry: Vec<BigInt> = Vec::new();
        for dx in (0..=deg as usize).rev() {
            // next = columns[dx] + (1 - y) * carry
            let mut next = columns[dx].clone();
            let shifted_len = if carry.is_empty() { 0 } else { carry.len() + 1 };
            if next.len() < shifted_len {
                next.resize(shifted_len, BigInt::zero());
            }
            for (dy, c) in carry.iter().enumerate() {
                next[dy] += c;
                next[dy + 1] -= c;
            }
            if dx == 0 {
                if next.iter().any(|c| !c.is_zero()) {
                    let rem = Self::from_terms(
                        next.into_iter().enumerate().map(|(dy, c)| (0, dy as u32, c)),
                    );
                    return Err(Error::NotDivisible {
                        remainder: rem.to_string(),
                    });
                }
            } else {
                for (dy, c) in next.iter().enumerate() {
                    quotient.add_term(dx as u32 - 1, dy as u32, c.clone());
                }
            }
            carry = next;
        }
        Ok(quotient)
    }

    /// Sorted `(deg_x, deg_y, coeff)` triples.
    pub fn to_triples(&self) -> Vec<(u32, u32, BigInt)> {
        self.terms
            .iter()
            .map(|(&(dx, dy), c)| (dx, dy, c.clone()))
            .collect()
    }

    /// Terms in display order: descending total degree, then descending
    /// `x`-degree.
    fn display_order(&self) -> Vec<(u32, u32, &BigInt)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by_key(|t| std::cmp::Reverse((t.0 + t.1, t.0)));
        v
    }

    pub fn poly_add(&self, other: &Self) -> Self {
        self + other
    }

    pub fn poly_mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// `(x + y - 1)^k` by the trinomial expansion
/// `Σ k!/(a! b! c!) x^a y^b (-1)^c`.
pub fn xy1_power(k: u32) -> BivariatePolynomial {
    let mut p = BivariatePolynomial::zero();
    for a in 0..=k {
        let ca = binomial(k, a);
        for b in 0..=k - a {
            let c = k - a - b;
            let mut coeff = &ca * binomial(k - a, b);
            if c % 2 == 1 {
                coeff = -coeff;
            }
            p.add_term(a, b, coeff);
        }
    }
    p
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

impl<'a> Add<&'a BivariatePolynomial> for &'a BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(dx, dy), c) in &rhs.terms {
            out.add_term(dx, dy, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BivariatePolynomial> for &'a BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(dx, dy), c) in &rhs.terms {
            out.add_term(dx, dy, -c);
        }
        out
    }
}

impl<'a> Mul<&'a BivariatePolynomial> for &'a BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(ax, ay), a) in &self.terms {
            for (&(bx, by), b) in &rhs.terms {
                out.add_term(ax + bx, ay + by, a * b);
            }
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(self) -> BivariatePolynomial {
        self.scale(&-BigInt::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BivariatePolynomial {
            type Output = BivariatePolynomial;

            fn $m(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(self) -> BivariatePolynomial {
        -&self
    }
}

impl std::iter::Sum for BivariatePolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

/// Human-readable form such as `x^3 + 3*x^2*y - y`.
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (dx, dy, c)) in self.display_order().into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            if !mag.is_one() || (dx == 0 && dy == 0) {
                factors.push(mag.to_string());
            }
            for (var, d) in [("x", dx), ("y", dy)] {
                match d {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{d}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
