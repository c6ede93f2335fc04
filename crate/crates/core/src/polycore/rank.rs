use serde::Serialize;

use super::{SubsetMask, MAX_GROUND};
use crate::error::{Error, Result};

/// A total integer-valued set function on `2^[n]`, stored as a table.
///
/// The table is not required to be submodular; [`validate_rank_function`]
/// reports on the axioms and [`super::Polymatroid::new`] enforces them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankFunction {
    n: usize,
    values: Vec<i64>,
    monotone: bool,
}

impl RankFunction {
    pub fn new(n: usize, values: Vec<i64>) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::GroundSize(n));
        }
        let expected = 1usize << n;
        if values.len() != expected {
            return Err(Error::TableLength {
                n,
                expected,
                got: values.len(),
            });
        }
        let monotone = is_monotone(n, &values);
        Ok(Self {
            n,
            values,
            monotone,
        })
    }

    pub fn from_fn(n: usize, f: impl FnMut(SubsetMask) -> i64) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::GroundSize(n));
        }
        Self::new(n, SubsetMask::all(n).map(f).collect())
    }

    /// Ground set size.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    #[inline]
    pub fn get(&self, set: SubsetMask) -> i64 {
        self.values[set.index()]
    }

    /// `f([n])`.
    pub fn total(&self) -> i64 {
        self.values[self.values.len() - 1]
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    pub fn is_monotone(&self) -> bool {
        self.monotone
    }
}

fn is_monotone(n: usize, values: &[i64]) -> bool {
    SubsetMask::all(n).all(|s| {
        (0..n)
            .filter(|&i| !s.contains(i))
            .all(|i| values[s.index()] <= values[s.with(i).index()])
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    ZeroAtEmpty,
    Submodular,
    Monotone,
}

/// A failed axiom together with the pair of subsets that witnesses it.
///
/// For submodularity the pair is `(I, J)` with `f(I) + f(J) < f(I∪J) + f(I∩J)`;
/// for monotonicity it is `(I, J)` with `I ⊂ J` and `f(I) > f(J)`; for the
/// empty-set axiom both entries are `∅`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub first: SubsetMask,
    pub second: SubsetMask,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub submodular: bool,
    pub zero_at_empty: bool,
    pub monotone: bool,
    pub witnesses: Vec<Violation>,
}

impl ValidationReport {
    /// Submodular with `f(∅) = 0`: a (generalized) integer polymatroid.
    pub fn is_polymatroid(&self) -> bool {
        self.submodular && self.zero_at_empty
    }
}

/// Checks `f(∅) = 0`, submodularity and monotonicity, collecting every
/// violation.
///
/// Submodularity is tested through the local exchange form
/// `f(S+i) + f(S+j) >= f(S+i+j) + f(S)` for `i, j ∉ S`, which is equivalent
/// to the pairwise inequality over all `I, J`. Monotonicity is likewise tested
/// on single-element extensions.
pub fn validate_rank_function(rf: &RankFunction) -> ValidationReport {
    let n = rf.n();
    let mut report = ValidationReport {
        submodular: true,
        zero_at_empty: true,
        monotone: true,
        witnesses: Vec::new(),
    };
    if rf.get(SubsetMask::EMPTY) != 0 {
        report.zero_at_empty = false;
        report.witnesses.push(Violation {
            axiom: Axiom::ZeroAtEmpty,
            first: SubsetMask::EMPTY,
            second: SubsetMask::EMPTY,
        });
    }
    for s in SubsetMask::all(n) {
        let fs = rf.get(s);
        for i in (0..n).filter(|&i| !s.contains(i)) {
            let si = s.with(i);
            if fs > rf.get(si) {
                report.monotone = false;
                report.witnesses.push(Violation {
                    axiom: Axiom::Monotone,
                    first: s,
                    second: si,
                });
            }
            for j in (i + 1..n).filter(|&j| !s.contains(j)) {
                let sj = s.with(j);
                if rf.get(si) + rf.get(sj) < rf.get(si.with(j)) + fs {
                    report.submodular = false;
                    report.witnesses.push(Violation {
                        axiom: Axiom::Submodular,
                        first: si,
                        second: sj,
                    });
                }
            }
        }
    }
    report
}
