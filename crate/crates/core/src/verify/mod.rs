//! Executable versions of the structural theorems: each check runs over a
//! single instance and returns a [`CheckReport`].

mod checks;
pub mod corpus;
mod explore;
mod random;

use std::fmt;
use std::str::FromStr;

pub use checks::{
    box_scan_bases, check_activity_lemmas, check_divisibility, check_duality,
    check_hypergraph_corollaries, check_interpolating, check_invariance, check_oracle_equivalence,
    check_subtop_coefficients, check_top_coefficient, subtop_formulas,
};
pub use explore::{explore_grid, explore_t, rational_grid, InterpolationFailure};
pub use random::{
    random_connected_hypergraph, random_hypergraph, random_polymatroid, GeneratorKind,
    InstanceSpec, MAX_RANDOM_GROUND,
};

use crate::error::{Error, Result};
use crate::polyalg::{rational, Rational};
use crate::polycore::{Hypergraph, Polymatroid, RankSpec};
use crate::report::CheckReport;
use crate::tutte::{jp_polynomial_with, JpOptions};

/// Groups of checks selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    /// Duality, divisibility and invariance.
    Duality,
    /// Top and sub-top coefficients.
    Coeffs,
    Interp,
    /// Activity lemmas and oracle equivalence.
    Lemmas,
    Hypergraph,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::All,
        Suite::Duality,
        Suite::Coeffs,
        Suite::Interp,
        Suite::Lemmas,
        Suite::Hypergraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Duality => "duality",
            Suite::Coeffs => "coeffs",
            Suite::Interp => "interp",
            Suite::Lemmas => "lemmas",
            Suite::Hypergraph => "hypergraph",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Slice values for the interpolation check; all must be at least 1.
    pub ts: Vec<Rational>,
    pub invariance_seed: u64,
    pub invariance_trials: usize,
    /// Instances with more bases skip the activity lemmas.
    pub lemma_basis_limit: usize,
    /// Largest box volume for the brute-force enumeration oracle.
    pub box_volume_limit: u64,
    /// Cap on enumerated bases; exceeding it is an error.
    pub budget: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            ts: (6..=24).map(|k| rational(k, 6)).collect(),
            invariance_seed: 0,
            invariance_trials: 5,
            lemma_basis_limit: 5000,
            box_volume_limit: 1_000_000,
            budget: None,
        }
    }
}

/// Hypergraph recorded in an instance's provenance, if any.
pub fn provenance_hypergraph(p: &Polymatroid) -> Option<Hypergraph> {
    match p.provenance() {
        RankSpec::Hypergraph { vertices, edges } => Hypergraph::new(*vertices, edges.clone()).ok(),
        _ => None,
    }
}

/// Runs the checks of `suite` on one instance, in a fixed order.
///
/// The hypergraph corollaries only apply to instances built from a
/// hypergraph; for other instances that suite yields no reports.
pub fn run_suite(
    p: &Polymatroid,
    id: &str,
    suite: Suite,
    options: &VerifyOptions,
) -> Result<Vec<CheckReport>> {
    if let Some(t) = options.ts.iter().find(|t| **t < Rational::from_integer(1.into())) {
        return Err(Error::InvalidArgument(format!("slice value {t} is below 1")));
    }
    let jp_options = JpOptions {
        budget: options.budget,
        log_terms: false,
    };
    let j = jp_polynomial_with(p, &jp_options)?.polynomial;
    let mut out = Vec::new();
    if suite.includes(Suite::Coeffs) {
        out.push(checks::top_coefficient_with(&j, p.n(), id));
        out.push(checks::subtop_with(&j, p, id));
    }
    if suite.includes(Suite::Interp) {
        out.push(checks::interpolating_with(&j, id, &options.ts, true));
    }
    if suite.includes(Suite::Duality) {
        out.push(checks::duality_with(&j, p, id)?);
        out.push(checks::divisibility_with(&j, id));
        out.push(checks::invariance_with(
            &j,
            p,
            id,
            options.invariance_seed,
            options.invariance_trials,
        )?);
    }
    if suite.includes(Suite::Lemmas) {
        out.push(check_activity_lemmas(p, id, options.lemma_basis_limit)?);
        out.push(check_oracle_equivalence(
            p,
            id,
            options.budget,
            options.box_volume_limit,
        )?);
    }
    if suite.includes(Suite::Hypergraph) {
        if let Some(h) = provenance_hypergraph(p) {
            out.push(check_hypergraph_corollaries(&h, id)?);
        }
    }
    Ok(out)
}
