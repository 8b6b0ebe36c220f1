use std::fmt;

use super::EdgeId;

/// A set of edge ids of one tree, stored as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        EdgeSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(e: EdgeId) -> Self {
        EdgeSet(1 << e.0)
    }

    #[inline]
    pub fn insert(&mut self, e: EdgeId) {
        self.0 |= 1 << e.0;
    }

    #[inline]
    pub fn remove(&mut self, e: EdgeId) {
        self.0 &= !(1 << e.0);
    }

    #[inline]
    pub fn contains(self, e: EdgeId) -> bool {
        e.0 < 64 && self.0 >> e.0 & 1 == 1
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
    pub fn is_disjoint(self, other: EdgeSet) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn union(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & other.0)
    }

    #[inline]
    pub fn symmetric_difference(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 ^ other.0)
    }

    /// Parity of the number of members, `true` when odd.
    #[inline]
    pub fn is_odd(self) -> bool {
        self.0.count_ones() & 1 == 1
    }

    /// Iterates members in ascending id order.
    pub fn iter(self) -> impl Iterator<Item = EdgeId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(EdgeId(e))
        })
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        let mut s = EdgeSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|e| e.0)).finish()
    }
}
