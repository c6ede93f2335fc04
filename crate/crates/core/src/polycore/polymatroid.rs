use super::{validate_rank_function, RankFunction, RankSpec, SubsetMask};
use crate::error::{Error, Result};

/// A validated (generalized) integer polymatroid.
///
/// The rank table is submodular with `f(∅) = 0`. Monotonicity is recorded on
/// the rank function but not required, so duals and translates are valid.
/// The provenance is the construction recipe, in instance-file form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polymatroid {
    rank: RankFunction,
    provenance: RankSpec,
}

impl Polymatroid {
    /// Validates `rank` and records it as an explicit table.
    pub fn new(rank: RankFunction) -> Result<Self> {
        let provenance = RankSpec::Explicit {
            values: rank.values().to_vec(),
        };
        Self::with_provenance(rank, provenance)
    }

    pub fn with_provenance(rank: RankFunction, provenance: RankSpec) -> Result<Self> {
        if rank.n() == 0 {
            return Err(Error::InvalidRank(
                "a polymatroid needs a non-empty ground set".into(),
            ));
        }
        let report = validate_rank_function(&rank);
        if !report.is_polymatroid() {
            let v = report.witnesses[0];
            return Err(Error::InvalidRank(format!(
                "{:?} fails on ({}, {})",
                v.axiom, v.first, v.second
            )));
        }
        Ok(Self { rank, provenance })
    }

    /// Shorthand for an explicit table.
    pub fn from_values(n: usize, values: Vec<i64>) -> Result<Self> {
        Self::new(RankFunction::new(n, values)?)
    }

    pub fn rank(&self) -> &RankFunction {
        &self.rank
    }

    pub fn provenance(&self) -> &RankSpec {
        &self.provenance
    }

    pub fn n(&self) -> usize {
        self.rank.n()
    }

    #[inline]
    pub fn f(&self, set: SubsetMask) -> i64 {
        self.rank.get(set)
    }

    pub fn is_monotone(&self) -> bool {
        self.rank.is_monotone()
    }
}
