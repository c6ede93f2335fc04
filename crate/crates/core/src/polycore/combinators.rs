//! Closure operations on polymatroids. Each returns a freshly validated
//! instance whose provenance records the operation.

use super::{Polymatroid, RankFunction, RankSpec, SubsetMask};
use crate::error::{Error, Result};

/// The dual `-P`, with rank `f'(I) = f([n] \ I) - f([n])`.
///
/// Its bases are exactly the negated bases of `p`.
pub fn dual_polymatroid(p: &Polymatroid) -> Polymatroid {
    let n = p.n();
    let total = p.rank().total();
    let rank = RankFunction::from_fn(n, |s| p.f(s.complement(n)) - total)
        .expect("same ground size");
    let provenance = RankSpec::Dual {
        of: Box::new(p.provenance().clone()),
    };
    Polymatroid::with_provenance(rank, provenance).expect("dual of a submodular function")
}

/// Shifts every basis by `by`: `f'(I) = f(I) + Σ_{i∈I} by_i`.
pub fn translate_rank(p: &Polymatroid, by: &[i64]) -> Result<Polymatroid> {
    let n = p.n();
    if by.len() != n {
        return Err(Error::InvalidArgument(format!(
            "translation vector has length {}, expected {n}",
            by.len()
        )));
    }
    let rank = RankFunction::from_fn(n, |s| p.f(s) + s.elements().map(|i| by[i]).sum::<i64>())?;
    let provenance = RankSpec::Translate {
        of: Box::new(p.provenance().clone()),
        by: by.to_vec(),
    };
    Polymatroid::with_provenance(rank, provenance)
}

/// Relabels element `i` as `perm[i]` (0-based): `f'(σ(I)) = f(I)`.
pub fn permute_rank(p: &Polymatroid, perm: &[usize]) -> Result<Polymatroid> {
    let n = p.n();
    let mut inverse = vec![usize::MAX; n];
    if perm.len() != n {
        return Err(Error::InvalidArgument(format!(
            "permutation has length {}, expected {n}",
            perm.len()
        )));
    }
    for (i, &image) in perm.iter().enumerate() {
        if image >= n || inverse[image] != usize::MAX {
            return Err(Error::InvalidArgument(format!(
                "{:?} is not a permutation of the ground set",
                perm.iter().map(|k| k + 1).collect::<Vec<_>>()
            )));
        }
        inverse[image] = i;
    }
    let rank = RankFunction::from_fn(n, |s| {
        p.f(SubsetMask::from_elements(s.elements().map(|j| inverse[j])))
    })?;
    let provenance = RankSpec::Permute {
        of: Box::new(p.provenance().clone()),
        perm: perm.iter().map(|k| k + 1).collect(),
    };
    Polymatroid::with_provenance(rank, provenance)
}

/// Pointwise sum of rank functions on a common ground set.
pub fn sum_ranks(ps: &[Polymatroid]) -> Result<Polymatroid> {
    let first = ps
        .first()
        .ok_or_else(|| Error::InvalidArgument("sum of an empty list".into()))?;
    let n = first.n();
    if let Some(bad) = ps.iter().find(|p| p.n() != n) {
        return Err(Error::InvalidArgument(format!(
            "sum mixes ground sizes {n} and {}",
            bad.n()
        )));
    }
    let rank = RankFunction::from_fn(n, |s| ps.iter().map(|p| p.f(s)).sum())?;
    let provenance = RankSpec::Sum {
        of: ps.iter().map(|p| p.provenance().clone()).collect(),
    };
    Polymatroid::with_provenance(rank, provenance)
}

/// `min(f, c)` on non-empty sets; requires a monotone `f` and `c >= 0`.
pub fn truncate_rank(p: &Polymatroid, c: i64) -> Result<Polymatroid> {
    if c < 0 {
        return Err(Error::InvalidArgument(format!("truncation level {c} is negative")));
    }
    if !p.is_monotone() {
        return Err(Error::InvalidArgument(
            "truncation needs a monotone rank function".into(),
        ));
    }
    let rank = RankFunction::from_fn(p.n(), |s| if s.is_empty() { 0 } else { p.f(s).min(c) })?;
    let provenance = RankSpec::Truncate {
        of: Box::new(p.provenance().clone()),
        c,
    };
    Polymatroid::with_provenance(rank, provenance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rank_from_uniform_matroid;

    fn worked() -> Polymatroid {
        Polymatroid::from_values(3, vec![0, 2, 2, 3, 1, 3, 3, 3]).unwrap()
    }

    fn set(elements: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(elements.iter().map(|i| i - 1))
    }

    #[test]
    fn dual_of_worked() {
        let d = dual_polymatroid(&worked());
        assert_eq!(d.f(set(&[1])), 0);
        assert_eq!(d.f(set(&[1, 2])), -2);
        assert_eq!(d.f(set(&[1, 2, 3])), -3);
        assert_eq!(d.rank().total(), -worked().rank().total());
        assert!(!d.is_monotone());
    }

    #[test]
    fn dual_is_an_involution() {
        let p = worked();
        assert_eq!(dual_polymatroid(&dual_polymatroid(&p)).rank(), p.rank());
    }

    #[test]
    fn translate_worked() {
        let t = translate_rank(&worked(), &[1, 1, 1]).unwrap();
        assert_eq!(t.rank().total(), 6);
        assert_eq!(t.f(set(&[1])), 3);
        assert!(translate_rank(&worked(), &[1, 1]).is_err());
    }

    #[test]
    fn permute_worked_swapping_one_and_three() {
        let q = permute_rank(&worked(), &[2, 1, 0]).unwrap();
        assert_eq!(q.f(set(&[1])), 1);
        assert_eq!(q.f(set(&[3])), 2);
        assert!(permute_rank(&worked(), &[0, 0, 1]).is_err());
        assert!(permute_rank(&worked(), &[0, 1, 3]).is_err());
    }

    #[test]
    fn sum_of_uniform_with_itself() {
        let u = rank_from_uniform_matroid(4, 2).unwrap().to_polymatroid();
        let s = sum_ranks(&[u.clone(), u]).unwrap();
        assert_eq!(s.f(set(&[1])), 2);
        assert_eq!(s.rank().total(), 4);
        assert!(sum_ranks(&[]).is_err());
        assert!(sum_ranks(&[worked(), s]).is_err());
    }

    #[test]
    fn truncation() {
        let t = truncate_rank(&worked(), 2).unwrap();
        assert_eq!(t.f(set(&[1, 2, 3])), 2);
        assert_eq!(t.f(set(&[3])), 1);
        assert_eq!(t.f(SubsetMask::EMPTY), 0);
        assert!(truncate_rank(&worked(), -1).is_err());
        assert!(truncate_rank(&dual_polymatroid(&worked()), 1).is_err());
    }
}
