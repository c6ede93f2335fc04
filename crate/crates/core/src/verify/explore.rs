use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polyalg::{BivariatePolynomial, Rational, Variable};
use crate::polycore::Polymatroid;
use crate::tutte::jp_polynomial;

/// A slice `J(x, t)` or `J(t, y)` whose support is not an interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpolationFailure {
    pub t: Rational,
    /// The variable substituted by `t`.
    pub fixed: Variable,
    pub support: Vec<u32>,
    pub slice: String,
}

impl InterpolationFailure {
    pub fn to_json(&self) -> Value {
        json!({
            "t": self.t.to_string(),
            "fixed": self.fixed.name(),
            "support": self.support,
            "slice": self.slice,
        })
    }
}

/// The grid `t_min, t_min + step, ..` up to `t_max` inclusive.
pub fn rational_grid(t_min: &Rational, t_max: &Rational, step: &Rational) -> Result<Vec<Rational>> {
    if *step <= Rational::zero() {
        return Err(Error::InvalidArgument(format!("step must be positive, got {step}")));
    }
    let mut out = Vec::new();
    let mut t = t_min.clone();
    while t <= *t_max {
        out.push(t.clone());
        t += step;
    }
    Ok(out)
}

/// Scans both slice families over a rational grid and returns every
/// non-interpolating slice, ordered by `t` and then by the fixed variable
/// (`y` first).
pub fn explore_t(
    p: &Polymatroid,
    t_min: &Rational,
    t_max: &Rational,
    step: &Rational,
) -> Result<Vec<InterpolationFailure>> {
    let grid = rational_grid(t_min, t_max, step)?;
    Ok(explore_grid(&jp_polynomial(p)?, &grid))
}

pub fn explore_grid(j: &BivariatePolynomial, grid: &[Rational]) -> Vec<InterpolationFailure> {
    let mut out = Vec::new();
    for t in grid {
        for fixed in [Variable::Y, Variable::X] {
            let s = match fixed {
                Variable::Y => j.specialize_y(t),
                Variable::X => j.specialize_x(t),
            };
            let report = s.support_report();
            if !report.interpolating {
                out.push(InterpolationFailure {
                    t: t.clone(),
                    fixed,
                    support: report.support,
                    slice: s.to_string(),
                });
            }
        }
    }
    out
}
