use core::fmt;
use core::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

/// A set of vertex indices in `0..64`, stored as one machine word.
///
/// Bit `v` is set iff vertex `v` is a member. Iteration is in ascending index
/// order, which is what makes every enumeration in this crate deterministic.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    /// The empty set.
    pub const EMPTY: VertexSet = VertexSet(0);

    /// Wraps a raw bit mask.
    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// The raw bit mask.
    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`. `n` must be at most 64.
    #[inline]
    pub const fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    /// `{v}`.
    #[inline]
    pub const fn singleton(v: usize) -> Self {
        debug_assert!(v < 64);
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 &= !(1u64 << v);
    }

    /// Returns a copy with `v` added.
    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    /// Returns a copy with `v` removed.
    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    /// Cardinality.
    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Largest member, if any.
    #[inline]
    pub const fn last(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement within the universe `{0..n-1}`.
    #[inline]
    pub const fn complement_within(self, n: usize) -> Self {
        VertexSet(!self.0 & VertexSet::full(n).0)
    }

    /// Members in ascending order.
    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

/// Set difference.
impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}
