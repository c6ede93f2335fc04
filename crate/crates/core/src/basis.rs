//! Lattice bases of the base polytope, tight sets and basis activities.

use std::fmt;
use std::ops::Deref;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polycore::{Polymatroid, SubsetMask};

/// An integer point `a` with `a(I) <= f(I)` for all `I` and `a([n]) = f([n])`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct BasisVector(pub Vec<i64>);

impl Deref for BasisVector {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for BasisVector {
    fn from(v: Vec<i64>) -> Self {
        BasisVector(v)
    }
}

impl BasisVector {
    /// `a + e_i - e_j`.
    pub fn exchanged(&self, i: usize, j: usize) -> BasisVector {
        let mut v = self.0.clone();
        v[i] += 1;
        v[j] -= 1;
        BasisVector(v)
    }
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `sums[I] = Σ_{i∈I} x_i` for every subset.
pub(crate) fn subset_sums(x: &[i64]) -> Vec<i64> {
    let mut sums = vec![0i64; 1 << x.len()];
    for mask in 1..sums.len() {
        let low = mask.trailing_zeros() as usize;
        sums[mask] = sums[mask & (mask - 1)] + x[low];
    }
    sums
}

/// Membership in `PB` by the full system of `2^n` inequalities.
pub fn is_basis(p: &Polymatroid, x: &[i64]) -> bool {
    if x.len() != p.n() {
        return false;
    }
    let sums = subset_sums(x);
    let values = p.rank().values();
    sums[sums.len() - 1] == p.rank().total() && sums.iter().zip(values).all(|(s, f)| s <= f)
}

/// Per-coordinate range `[f([n]) - f([n] \ {i}), f({i})]` containing every basis.
pub fn coordinate_bounds(p: &Polymatroid) -> Vec<(i64, i64)> {
    let n = p.n();
    let full = SubsetMask::full(n);
    (0..n)
        .map(|i| {
            (
                p.rank().total() - p.f(full.without(i)),
                p.f(SubsetMask::singleton(i)),
            )
        })
        .collect()
}

/// All integer bases in lexicographic order.
pub fn enumerate_bases(p: &Polymatroid) -> Vec<BasisVector> {
    enumerate_bases_limited(p, None).expect("no budget was set")
}

/// As [`enumerate_bases`], failing once more than `limit` bases are found.
///
/// Depth-first over coordinates `1..n`. When coordinate `k` is fixed, every
/// subset `T` of the prefix `{1..k}` containing `k` must satisfy
/// `f([n]) - f([n] \ T) <= a(T) <= f(T)`; the last coordinate is forced by
/// the total.
pub fn enumerate_bases_limited(p: &Polymatroid, limit: Option<usize>) -> Result<Vec<BasisVector>> {
    let mut search = Search {
        values: p.rank().values(),
        total: p.rank().total(),
        n: p.n(),
        bounds: coordinate_bounds(p),
        sums: vec![0; 1 << p.n()],
        current: vec![0; p.n()],
        out: Vec::new(),
        limit,
    };
    search.descend(0)?;
    if search.out.is_empty() {
        return Err(Error::Invariant(
            "a submodular rank function produced an empty basis set".into(),
        ));
    }
    Ok(search.out)
}

struct Search<'a> {
    values: &'a [i64],
    total: i64,
    n: usize,
    bounds: Vec<(i64, i64)>,
    sums: Vec<i64>,
    current: Vec<i64>,
    out: Vec<BasisVector>,
    limit: Option<usize>,
}

impl Search<'_> {
    fn descend(&mut self, k: usize) -> Result<()> {
        if k == self.n {
            if self.limit.is_some_and(|l| self.out.len() >= l) {
                return Err(Error::BudgetExceeded {
                    what: "enumerating bases",
                    limit: self.limit.unwrap_or_default(),
                });
            }
            self.out.push(BasisVector(self.current.clone()));
            return Ok(());
        }
        let (mut lo, mut hi) = self.bounds[k];
        if k + 1 == self.n {
            let forced = self.total - self.sums[(1 << k) - 1];
            if forced < lo || forced > hi {
                return Ok(());
            }
            (lo, hi) = (forced, forced);
        }
        for v in lo..=hi {
            if self.place(k, v) {
                self.current[k] = v;
                self.descend(k + 1)?;
            }
        }
        Ok(())
    }

    /// Writes sums for all prefix subsets containing `k` and checks both
    /// bounds; returns false on the first violation.
    fn place(&mut self, k: usize, v: i64) -> bool {
        let bit = 1usize << k;
        let full = (1usize << self.n) - 1;
        for m in 0..bit {
            let t = m | bit;
            let s = self.sums[m] + v;
            if s > self.values[t] || s < self.total - self.values[full & !t] {
                return false;
            }
            self.sums[t] = s;
        }
        true
    }
}

/// The tight sets `{I : a(I) = f(I)}` of a basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightFamily {
    n: usize,
    member: Vec<bool>,
    sets: Vec<SubsetMask>,
}

impl TightFamily {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, set: SubsetMask) -> bool {
        self.member[set.index()]
    }

    /// Tight sets in increasing mask order.
    pub fn sets(&self) -> &[SubsetMask] {
        &self.sets
    }

    /// First pair `(I, J)` whose union or intersection is not tight.
    pub fn closure_violation(&self) -> Option<(SubsetMask, SubsetMask)> {
        for (k, &i) in self.sets.iter().enumerate() {
            for &j in &self.sets[k + 1..] {
                if !self.contains(i.union(j)) || !self.contains(i.intersection(j)) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Union of all tight sets avoiding `i`; tight itself by lattice closure.
    pub fn max_avoiding(&self, i: usize) -> SubsetMask {
        self.sets
            .iter()
            .filter(|s| !s.contains(i))
            .fold(SubsetMask::EMPTY, |acc, &s| acc.union(s))
    }

    /// `a + e_i - e_j ∈ PB` iff no tight set contains `i` and avoids `j`.
    pub fn exchange_feasible(&self, i: usize, j: usize) -> bool {
        !self.sets.iter().any(|s| s.contains(i) && !s.contains(j))
    }

    /// Activities from the tight-set characterization: `i` is internally
    /// active iff a tight set contains `{1..i-1}` and avoids `i`, and
    /// externally active iff some tight set has minimum `i`.
    pub fn activity(&self) -> ActivityProfile {
        let mut internal = SubsetMask::EMPTY;
        let mut external = SubsetMask::EMPTY;
        for i in 0..self.n {
            if SubsetMask::prefix(i).is_subset_of(self.max_avoiding(i)) {
                internal = internal.with(i);
            }
        }
        for s in &self.sets {
            if let Some(i) = s.min_element() {
                external = external.with(i);
            }
        }
        ActivityProfile::new(internal, external)
    }
}

/// Tight family of `a`, verified to be closed under union and intersection.
pub fn tight_sets(p: &Polymatroid, a: &[i64]) -> Result<TightFamily> {
    if !is_basis(p, a) {
        return Err(Error::InvalidArgument(format!(
            "{} is not a basis",
            BasisVector(a.to_vec())
        )));
    }
    let family = tight_family_unchecked(p, a);
    if let Some((i, j)) = family.closure_violation() {
        return Err(Error::Invariant(format!(
            "tight sets {i} and {j} of {} are not closed under union and intersection",
            BasisVector(a.to_vec())
        )));
    }
    Ok(family)
}

pub(crate) fn tight_family_unchecked(p: &Polymatroid, a: &[i64]) -> TightFamily {
    let sums = subset_sums(a);
    let member: Vec<bool> = sums
        .iter()
        .zip(p.rank().values())
        .map(|(s, f)| s == f)
        .collect();
    let sets = member
        .iter()
        .enumerate()
        .filter(|(_, &t)| t)
        .map(|(m, _)| SubsetMask(m as u32))
        .collect();
    TightFamily {
        n: p.n(),
        member,
        sets,
    }
}

/// Whether `a + e_i - e_j` is a basis, decided from the tight sets of `a`.
pub fn is_exchange_feasible(p: &Polymatroid, a: &[i64], i: usize, j: usize) -> Result<bool> {
    if i == j || i >= p.n() || j >= p.n() {
        return Err(Error::InvalidArgument(format!(
            "exchange needs two distinct elements, got {} and {}",
            i + 1,
            j + 1
        )));
    }
    Ok(tight_sets(p, a)?.exchange_feasible(i, j))
}

/// `Int(a)`, `Ext(a)` and the derived counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ActivityProfile {
    pub internal: SubsetMask,
    pub external: SubsetMask,
    pub oi: usize,
    pub oe: usize,
    pub ie: usize,
    pub iota: usize,
    pub epsilon: usize,
}

impl ActivityProfile {
    pub fn new(internal: SubsetMask, external: SubsetMask) -> Self {
        let both = internal.intersection(external);
        Self {
            internal,
            external,
            oi: internal.len() - both.len(),
            oe: external.len() - both.len(),
            ie: both.len(),
            iota: internal.len(),
            epsilon: external.len(),
        }
    }
}

/// Activities straight from the definition: `i` is internally active when
/// `a - e_i + e_j ∉ PB` for every `j < i`, externally active when
/// `a + e_i - e_j ∉ PB` for every `j < i`.
pub fn activity_direct(p: &Polymatroid, a: &[i64]) -> Result<ActivityProfile> {
    if !is_basis(p, a) {
        return Err(Error::InvalidArgument(format!(
            "{} is not a basis",
            BasisVector(a.to_vec())
        )));
    }
    let a = BasisVector(a.to_vec());
    let mut internal = SubsetMask::EMPTY;
    let mut external = SubsetMask::EMPTY;
    for i in 0..p.n() {
        if (0..i).all(|j| !is_basis(p, &a.exchanged(j, i))) {
            internal = internal.with(i);
        }
        if (0..i).all(|j| !is_basis(p, &a.exchanged(i, j))) {
            external = external.with(i);
        }
    }
    Ok(ActivityProfile::new(internal, external))
}

/// Activities through the tight-set lattice; one family scan per basis.
pub fn activity_tight(p: &Polymatroid, a: &[i64]) -> Result<ActivityProfile> {
    Ok(tight_sets(p, a)?.activity())
}

/// The greedy basis `a_k = f([k]) - f([k-1])`, the lexicographic maximum of `PB`.
pub fn lex_max_basis(p: &Polymatroid) -> Result<BasisVector> {
    let a: Vec<i64> = (0..p.n())
        .map(|k| p.f(SubsetMask::prefix(k + 1)) - p.f(SubsetMask::prefix(k)))
        .collect();
    if !is_basis(p, &a) {
        return Err(Error::Invariant(format!(
            "greedy vector {} is not a basis",
            BasisVector(a)
        )));
    }
    let profile = activity_tight(p, &a)?;
    if profile.iota != p.n() {
        return Err(Error::Invariant(format!(
            "lexicographically maximal basis has internal activity {} < {}",
            profile.iota,
            p.n()
        )));
    }
    Ok(BasisVector(a))
}
