//! The polymatroid Tutte polynomial and its relatives.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::basis::{enumerate_bases_limited, tight_sets, ActivityProfile, BasisVector};
use crate::error::Result;
use crate::polyalg::{
    rational, rational_pow, xy1_power, BivariatePolynomial, Rational,
    UnivariateRationalPolynomial,
};
use crate::polycore::{MatroidOracle, Polymatroid};
use crate::report::CheckReport;

#[derive(Debug, Clone, Default)]
pub struct JpOptions {
    /// Maximum number of bases to enumerate.
    pub budget: Option<usize>,
    /// Keep the per-basis activity terms.
    pub log_terms: bool,
}

/// One summand `x^oi y^oe (x+y-1)^ie` of `J_P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisTerm {
    pub basis: BasisVector,
    pub profile: ActivityProfile,
}

impl BasisTerm {
    /// JSON-lines record with 1-based element names.
    pub fn to_json(&self) -> Value {
        json!({
            "basis": self.basis,
            "internal": self.profile.internal.elements_one_based(),
            "external": self.profile.external.elements_one_based(),
            "oi": self.profile.oi,
            "oe": self.profile.oe,
            "ie": self.profile.ie,
        })
    }
}

#[derive(Debug, Clone)]
pub struct JpResult {
    pub polynomial: BivariatePolynomial,
    pub basis_count: usize,
    /// Empty unless [`JpOptions::log_terms`] was set.
    pub terms: Vec<BasisTerm>,
}

/// `J_P(x, y) = Σ_{a∈PB} x^oi(a) y^oe(a) (x+y-1)^ie(a)`.
pub fn jp_polynomial(p: &Polymatroid) -> Result<BivariatePolynomial> {
    Ok(jp_polynomial_with(p, &JpOptions::default())?.polynomial)
}

pub fn jp_polynomial_with(p: &Polymatroid, options: &JpOptions) -> Result<JpResult> {
    let bases = enumerate_bases_limited(p, options.budget)?;
    let mut profiles = Vec::with_capacity(bases.len());
    for b in &bases {
        profiles.push(tight_sets(p, b)?.activity());
    }
    let polynomial = jp_from_profiles(&profiles);
    let terms = if options.log_terms {
        bases
            .into_iter()
            .zip(&profiles)
            .map(|(basis, &profile)| BasisTerm { basis, profile })
            .collect()
    } else {
        Vec::new()
    };
    Ok(JpResult {
        polynomial,
        basis_count: profiles.len(),
        terms,
    })
}

/// Sums the activity monomials, grouping bases with equal `(oi, oe, ie)`.
pub fn jp_from_profiles<'a, I>(profiles: I) -> BivariatePolynomial
where
    I: IntoIterator<Item = &'a ActivityProfile>,
{
    let mut counts: BTreeMap<(usize, usize, usize), u64> = BTreeMap::new();
    for prof in profiles {
        *counts.entry((prof.oi, prof.oe, prof.ie)).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|((oi, oe, ie), count)| {
            let mono = BivariatePolynomial::monomial(oi as u32, oe as u32, BigInt::from(count));
            &mono * &xy1_power(ie as u32)
        })
        .sum()
}

/// `I(x)` with `J(x, 1) = x^n I(1/x)`.
pub fn interior_polynomial(p: &Polymatroid) -> Result<UnivariateRationalPolynomial> {
    interior_from_jp(&jp_polynomial(p)?, p.n())
}

/// `X(y)` with `J(1, y) = y^n X(1/y)`.
pub fn exterior_polynomial(p: &Polymatroid) -> Result<UnivariateRationalPolynomial> {
    exterior_from_jp(&jp_polynomial(p)?, p.n())
}

pub fn interior_from_jp(j: &BivariatePolynomial, n: usize) -> Result<UnivariateRationalPolynomial> {
    j.specialize_y(&rational(1, 1)).reverse(n as u32)
}

pub fn exterior_from_jp(j: &BivariatePolynomial, n: usize) -> Result<UnivariateRationalPolynomial> {
    j.specialize_x(&rational(1, 1)).reverse(n as u32)
}

/// The Cameron–Fink invariant `J_P / (x + y - 1)`.
pub fn cameron_fink(p: &Polymatroid) -> Result<BivariatePolynomial> {
    jp_polynomial(p)?.divide_exact_xy1()
}

/// Classical Tutte polynomial by deletion–contraction on rank tables.
pub fn matroid_tutte(m: &MatroidOracle) -> BivariatePolynomial {
    tutte_rec(m.rank().values())
}

/// `table` is a rank table on `log2(len)` elements; the last element is
/// removed at each step.
fn tutte_rec(table: &[i64]) -> BivariatePolynomial {
    if table.len() == 1 {
        return BivariatePolynomial::one();
    }
    let half = table.len() / 2;
    let e = half; // mask of the last element
    let deletion = &table[..half];
    let contraction: Vec<i64> = (0..half).map(|s| table[s | e] - table[e]).collect();
    let full = table.len() - 1;
    if table[e] == 0 {
        // loop
        &BivariatePolynomial::y() * &tutte_rec(deletion)
    } else if table[full] - table[full & !e] == 1 {
        // coloop
        &BivariatePolynomial::x() * &tutte_rec(&contraction)
    } else {
        &tutte_rec(deletion) + &tutte_rec(&contraction)
    }
}

/// Sample points used by [`reduction_identity_check`]: `x ∈ {1..n+2}`,
/// `y ∈ {-1..-(n+2)}`. Both sides have degree at most `n` in each variable,
/// so agreement on this grid is an identity.
fn reduction_grid(n: usize) -> Vec<(Rational, Rational)> {
    let k = n as i64 + 2;
    (1..=k)
        .flat_map(|i| (1..=k).map(move |j| (rational(i, 1), rational(-j, 1))))
        .collect()
}

/// Compares `J_{P(M)}(x, y)` against `x^(n-d) y^d T_M((x+y-1)/y, (x+y-1)/x)`
/// pointwise on a grid avoiding `x = 0` and `y = 0`.
pub fn reduction_identity_check(m: &MatroidOracle, instance_id: &str) -> Result<CheckReport> {
    let start = Instant::now();
    let n = m.n();
    let d = m.rank_of_matroid() as u32;
    let j = jp_polynomial(&m.to_polymatroid())?;
    let t = matroid_tutte(m);
    let one = rational(1, 1);
    for (x, y) in reduction_grid(n) {
        let lhs = j.evaluate(&x, &y);
        let s = &x + &y - &one;
        let rhs = rational_pow(&x, n as u32 - d)
            * rational_pow(&y, d)
            * t.evaluate(&(&s / &y), &(&s / &x));
        if lhs != rhs {
            let witness = json!({
                "x": x.to_string(),
                "y": y.to_string(),
                "jp": lhs.to_string(),
                "tutte_side": rhs.to_string(),
            });
            return Ok(CheckReport::fail("matroid-reduction", instance_id, witness)
                .timed(start.elapsed()));
        }
    }
    Ok(CheckReport::pass("matroid-reduction", instance_id).timed(start.elapsed()))
}
