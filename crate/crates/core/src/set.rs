//! Bitmask element sets over a ground set of at most 64 elements.

use std::fmt;

/// Maximum number of elements a ground set may carry.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of `{0, .., 63}` stored as a machine word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementSet(pub u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(e: usize) -> Self {
        ElementSet(1u64 << e)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(Self::EMPTY, |s, e| s.with(e))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    #[inline]
    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | 1u64 << e)
    }

    #[inline]
    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1u64 << e))
    }

    #[inline]
    pub fn union(self, o: Self) -> Self {
        ElementSet(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: Self) -> Self {
        ElementSet(self.0 & o.0)
    }

    #[inline]
    pub fn difference(self, o: Self) -> Self {
        ElementSet(self.0 & !o.0)
    }

    #[inline]
    pub fn symmetric_difference(self, o: Self) -> Self {
        ElementSet(self.0 ^ o.0)
    }

    #[inline]
    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    #[inline]
    pub fn is_proper_subset(self, o: Self) -> bool {
        self.is_subset(o) && self != o
    }

    #[inline]
    pub fn is_disjoint(self, o: Self) -> bool {
        self.0 & o.0 == 0
    }

    /// Neither set contains the other.
    #[inline]
    pub fn is_incomparable(self, o: Self) -> bool {
        !self.is_subset(o) && !o.is_subset(self)
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, starting from the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Subsets of `self` with exactly `k` members, in increasing bitmask order.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = ElementSet> {
        let members = self.to_vec();
        let n = members.len();
        Combinations::new(n, k).map(move |c| {
            ElementSet(
                ElementSet(c)
                    .iter()
                    .fold(0u64, |acc, i| acc | 1u64 << members[i]),
            )
        })
    }

    /// Reindex `self ∩ keep` onto `{0, .., |keep|-1}`, preserving order.
    pub fn compress(self, keep: ElementSet) -> ElementSet {
        let mut out = 0u64;
        for (i, e) in keep.iter().enumerate() {
            if self.contains(e) {
                out |= 1u64 << i;
            }
        }
        ElementSet(out)
    }

    /// Inverse of [`compress`](Self::compress): position `i` maps to the `i`-th member of `keep`.
    pub fn expand(self, keep: ElementSet) -> ElementSet {
        let mut out = 0u64;
        for (i, e) in keep.iter().enumerate() {
            if self.contains(i) {
                out |= 1u64 << e;
            }
        }
        ElementSet(out)
    }

    /// Image under an index map.
    pub fn map(self, perm: &[usize]) -> ElementSet {
        self.iter().map(|e| perm[e]).collect()
    }

    /// Sort key giving the canonical order: by size, then by sorted member list.
    pub fn canonical_key(self) -> (usize, Vec<usize>) {
        (self.len(), self.to_vec())
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self::from_indices(iter)
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Iterator over set members in increasing order.
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Iterator over all submasks of a mask.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;
    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        // next submask in increasing order
        let nxt = (cur | !self.mask).wrapping_add(1) & self.mask;
        self.next = if nxt == 0 { None } else { Some(nxt) };
        Some(ElementSet(cur))
    }
}

/// `k`-subsets of `{0, .., n-1}` as bitmasks in increasing numeric order (Gosper's hack).
pub struct Combinations {
    cur: u64,
    limit: u64,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n <= 63, "combinations support at most 63 positions");
        if k > n {
            return Combinations {
                cur: 0,
                limit: 0,
                done: true,
            };
        }
        let cur = if k == 0 { 0 } else { (1u64 << k) - 1 };
        Combinations {
            cur,
            limit: 1u64 << n,
            done: false,
        }
    }
}

impl Iterator for Combinations {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let out = self.cur;
        if out == 0 {
            self.done = true;
            return Some(0);
        }
        let c = out & out.wrapping_neg();
        let r = out + c;
        let nxt = (((r ^ out) >> 2) / c) | r;
        if nxt >= self.limit || r == 0 {
            self.done = true;
        } else {
            self.cur = nxt;
        }
        Some(out)
    }
}

/// Binomial coefficient, saturating.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_count_and_order() {
        let all: Vec<u64> = Combinations::new(6, 3).collect();
        assert_eq!(all.len(), 20);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|m| m.count_ones() == 3));
        assert_eq!(Combinations::new(4, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(Combinations::new(3, 4).count(), 0);
        assert_eq!(Combinations::new(5, 5).collect::<Vec<_>>(), vec![31]);
    }

    #[test]
    fn subsets_enumerates_every_submask_once() {
        let s = ElementSet::from_indices([1, 4, 6]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
        let mut uniq = subs.clone();
        uniq.sort();
        uniq.dedup();
        assert_eq!(uniq.len(), 8);
        assert_eq!(ElementSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn sized_subsets_of_sparse_set() {
        let s = ElementSet::from_indices([0, 3, 5, 9]);
        let v: Vec<_> = s.subsets_of_size(2).collect();
        assert_eq!(v.len(), 6);
        assert!(v.iter().all(|x| x.len() == 2 && x.is_subset(s)));
    }

    #[test]
    fn basic_algebra() {
        let a = ElementSet::from_indices([0, 1, 2]);
        let b = ElementSet::from_indices([2, 3]);
        assert_eq!(a.union(b).len(), 4);
        assert_eq!(a.intersection(b), ElementSet::singleton(2));
        assert_eq!(a.difference(b), ElementSet::from_indices([0, 1]));
        assert!(a.is_incomparable(b));
        assert_eq!(ElementSet::full(64).len(), 64);
        assert_eq!(binomial(14, 7), 3432);
    }

    #[test]
    fn compress_expand_roundtrip() {
        let keep = ElementSet::from_indices([1, 3, 4, 7]);
        let s = ElementSet::from_indices([0, 3, 7]);
        assert_eq!(s.compress(keep), ElementSet::from_indices([1, 3]));
        assert_eq!(s.compress(keep).expand(keep), s.intersection(keep));
    }
}
