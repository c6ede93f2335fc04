use std::fmt;

/// A subset of the ground set `[n]`, stored as a bitmask.
///
/// Bit `i` is set when the 0-based element `i` (the user-facing element
/// `i + 1`) belongs to the subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n < 32);
        SubsetMask((1u32 << n) - 1)
    }

    pub fn singleton(i: usize) -> Self {
        SubsetMask(1 << i)
    }

    /// The prefix `{0, .., k-1}`, i.e. `[k]` in 1-based notation.
    pub fn prefix(k: usize) -> Self {
        Self::full(k)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        SubsetMask(elements.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        SubsetMask(self.0 | (1 << i))
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        SubsetMask(self.0 & !(1 << i))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        SubsetMask(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        SubsetMask(self.0 & other.0)
    }

    #[inline]
    pub fn complement(self, n: usize) -> Self {
        SubsetMask(!self.0 & Self::full(n).0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest element, if any.
    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    pub fn elements_one_based(self) -> Vec<usize> {
        self.elements().map(|i| i + 1).collect()
    }

    /// All subsets of `[n]` in increasing mask order.
    pub fn all(n: usize) -> impl Iterator<Item = SubsetMask> {
        (0..1u32 << n).map(SubsetMask)
    }
}

/// Formats with 1-based element names, e.g. `{1,3}`.
impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.elements().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let a = SubsetMask::from_elements([0, 2]);
        let b = SubsetMask::from_elements([1, 2]);
        assert_eq!(a.union(b), SubsetMask(0b111));
        assert_eq!(a.intersection(b), SubsetMask(0b100));
        assert_eq!(a.complement(4), SubsetMask(0b1010));
        assert_eq!(a.min_element(), Some(0));
        assert_eq!(SubsetMask::EMPTY.min_element(), None);
        assert_eq!(a.elements().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(a.to_string(), "{1,3}");
        assert_eq!(SubsetMask::EMPTY.to_string(), "{}");
        assert!(SubsetMask::prefix(2).is_subset_of(SubsetMask::full(3)));
    }
}
