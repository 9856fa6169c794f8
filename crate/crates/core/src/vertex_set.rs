use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

/// Largest vertex count representable by a [`VertexSet`].
pub const MAX_VERTICES: usize = 128;

/// A set of vertices drawn from `0..MAX_VERTICES`, stored as a bitset.
///
/// The total order is lexicographic on the sorted member lists, so sorting a
/// slice of equal-size sets yields the usual lexicographic order of k-sets.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_VERTICES, "vertex {v} out of range");
        VertexSet(1u128 << v)
    }

    /// The prefix `{0, 1, ..., n-1}`.
    pub fn range(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "range {n} out of range");
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_VERTICES, "vertex {v} out of range");
        self.0 |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < MAX_VERTICES {
            self.0 &= !(1u128 << v);
        }
    }

    pub fn with(self, v: usize) -> Self {
        let mut s = self;
        s.insert(v);
        s
    }

    pub fn without(self, v: usize) -> Self {
        let mut s = self;
        s.remove(v);
        s
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `self` with exactly `size` members, in lexicographic order.
    pub fn subsets_of_size(self, size: usize) -> Vec<VertexSet> {
        let members = self.to_vec();
        let mut out = Vec::new();
        if size > members.len() {
            return out;
        }
        let m = members.len();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(idx.iter().map(|&i| members[i]).collect());
            let Some(i) = (0..size).rev().find(|&i| idx[i] != i + m - size) else {
                return out;
            };
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Both sorted member lists agree below the lowest differing element j.
        // Whoever holds j is smaller, unless the other list has already ended.
        let j = diff.trailing_zeros();
        let above = if j == 127 { 0 } else { u128::MAX << (j + 1) };
        if self.0 >> j & 1 == 1 {
            if other.0 & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
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

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl From<&[usize]> for VertexSet {
    fn from(vs: &[usize]) -> Self {
        vs.iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vs: [usize; N]) -> Self {
        vs.iter().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    fn bitxor(self, rhs: Self) -> Self {
        VertexSet(self.0 ^ rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.into()
    }

    #[test]
    fn lexicographic_order_on_equal_sizes() {
        let mut sets = vec![set(&[1, 2, 3]), set(&[0, 1, 3]), set(&[0, 2, 3]), set(&[0, 1, 2])];
        sets.sort();
        assert_eq!(sets, vec![set(&[0, 1, 2]), set(&[0, 1, 3]), set(&[0, 2, 3]), set(&[1, 2, 3])]);
    }

    #[test]
    fn prefix_sorts_first() {
        assert!(set(&[0, 1]) < set(&[0, 1, 2]));
        assert!(VertexSet::EMPTY < set(&[5]));
        assert!(set(&[0, 5]) < set(&[1]));
    }

    #[test]
    fn subsets_of_size_enumerates_binomially() {
        let s = VertexSet::range(5);
        let subs = s.subsets_of_size(2);
        assert_eq!(subs.len(), 10);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(s.subsets_of_size(0), vec![VertexSet::EMPTY]);
        assert_eq!(s.subsets_of_size(5), vec![s]);
        assert!(s.subsets_of_size(6).is_empty());
    }

    #[test]
    fn high_vertices() {
        let s = set(&[0, 127]);
        assert_eq!(s.max(), Some(127));
        assert_eq!(s.to_vec(), vec![0, 127]);
        assert!(set(&[127]) > set(&[0, 127]));
    }

    proptest! {
        #[test]
        fn order_matches_sorted_vectors(a in proptest::collection::btree_set(0usize..128, 0..6),
                                        b in proptest::collection::btree_set(0usize..128, 0..6)) {
            let va: Vec<usize> = a.iter().copied().collect();
            let vb: Vec<usize> = b.iter().copied().collect();
            let sa: VertexSet = va.iter().collect();
            let sb: VertexSet = vb.iter().collect();
            prop_assert_eq!(sa.cmp(&sb), va.cmp(&vb));
        }
    }
}
