//! Faces as fixed-width vertex bitsets.

use std::cmp::Ordering;
use std::fmt;

/// Hard upper bound on the ground set width a [`Face`] can address.
pub const MAX_GROUND_SET: usize = 128;

/// Ground set width accepted by default constructors.
pub const DEFAULT_GROUND_SET_LIMIT: usize = 64;

/// A set of vertex indices into the ground set of some complex.
///
/// Faces order by cardinality first and then by their bit pattern read as an
/// integer, which is the enumeration order used everywhere in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u128);

impl Face {
    pub const EMPTY: Face = Face(0);

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        Face(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn singleton(index: usize) -> Self {
        debug_assert!(index < MAX_GROUND_SET);
        Face(1u128 << index)
    }

    /// The face `{0, 1, .., n-1}`.
    pub fn prefix(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND_SET);
        if n == MAX_GROUND_SET {
            Face(u128::MAX)
        } else {
            Face((1u128 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().fold(Face::EMPTY, |acc, i| acc.with(i))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Dimension `|F| - 1`; the empty face has dimension -1.
    #[inline]
    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    #[inline]
    pub fn contains(self, index: usize) -> bool {
        index < MAX_GROUND_SET && self.0 >> index & 1 == 1
    }

    #[inline]
    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    #[inline]
    pub fn with(self, index: usize) -> Face {
        Face(self.0 | 1u128 << index)
    }

    #[inline]
    pub fn without(self, index: usize) -> Face {
        Face(self.0 & !(1u128 << index))
    }

    /// Largest vertex index, if any.
    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    /// Vertex indices in increasing order.
    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    /// Every subset of this face, the face itself included.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(self.0),
        }
    }

    /// Subsets obtained by removing exactly one vertex.
    pub fn facets_of_boundary(self) -> impl Iterator<Item = Face> {
        self.iter().map(move |v| self.without(v))
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Face {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Face::from_indices(iter)
    }
}

#[derive(Clone)]
pub struct FaceIter(u128);

impl Iterator for FaceIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for FaceIter {}

/// Submask enumeration, from the full mask down to the empty set.
pub struct Subsets {
    mask: u128,
    next: Option<u128>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let current = self.next?;
        self.next = if current == 0 {
            None
        } else {
            Some((current - 1) & self.mask)
        };
        Some(Face(current))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_cardinality_then_bits() {
        let mut faces = vec![
            Face::from_indices([2]),
            Face::from_indices([0, 1]),
            Face::EMPTY,
            Face::from_indices([0]),
            Face::from_indices([0, 2]),
        ];
        faces.sort();
        assert_eq!(
            faces,
            vec![
                Face::EMPTY,
                Face::from_indices([0]),
                Face::from_indices([2]),
                Face::from_indices([0, 1]),
                Face::from_indices([0, 2]),
            ]
        );
    }

    #[test]
    fn subsets_cover_power_set() {
        let f = Face::from_indices([1, 4, 100]);
        let subs: Vec<_> = f.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset(f)));
        assert_eq!(subs.last(), Some(&Face::EMPTY));
    }

    #[test]
    fn high_indices() {
        let f = Face::singleton(127).with(0);
        assert_eq!(f.iter().collect::<Vec<_>>(), vec![0, 127]);
        assert_eq!(f.max_index(), Some(127));
        assert_eq!(Face::prefix(128).len(), 128);
        assert_eq!(Face::EMPTY.dim(), -1);
    }
}
