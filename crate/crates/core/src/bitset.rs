use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest graph order supported by the single-word bitset representation.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices of a graph on at most [`MAX_VERTICES`] vertices, stored
/// as one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Largest member, if any.
    #[inline]
    pub const fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    /// Members in increasing order.
    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

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
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex {v} exceeds the supported maximum"
            )));
        }
        Ok(members.into_iter().collect())
    }
}

/// Iterates every `k`-subset of `universe` in increasing numeric order of
/// the underlying bit pattern (Gosper's hack over the compressed universe).
pub fn subsets_of_size(universe: VertexSet, k: usize) -> impl Iterator<Item = VertexSet> {
    let members = universe.to_vec();
    let m = members.len();
    let mut state: Option<u64> = if k > m {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(u64::MAX >> (64 - k))
    };
    let limit_bits = m as u32;
    std::iter::from_fn(move || {
        let cur = state?;
        state = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let next = (((r ^ cur) >> 2) / c) | r;
                if limit_bits < 64 && next >> limit_bits != 0 {
                    None
                } else {
                    Some(next)
                }
            }
        };
        let mut out = VertexSet::EMPTY;
        let mut bits = cur;
        while bits != 0 {
            out.insert(members[bits.trailing_zeros() as usize]);
            bits &= bits - 1;
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn subset_counts_match_binomials() {
        let universe: VertexSet = [1, 3, 4, 7, 9, 10].iter().collect();
        for k in 0..=7 {
            let subsets: Vec<_> = subsets_of_size(universe, k).collect();
            assert_eq!(subsets.len(), if k > 6 { 0 } else { binom(6, k) }, "k={k}");
            assert!(subsets
                .iter()
                .all(|s| s.len() == k && s.is_subset(universe)));
            let mut dedup = subsets.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), subsets.len());
        }
    }

    #[test]
    fn subsets_of_full_word() {
        assert_eq!(subsets_of_size(VertexSet::full(64), 64).count(), 1);
        assert_eq!(subsets_of_size(VertexSet::full(64), 63).count(), 64);
    }

    #[test]
    fn basic_set_algebra() {
        let a: VertexSet = [0, 2, 5].iter().collect();
        let b: VertexSet = [2, 3].iter().collect();
        assert_eq!(a.union(b).to_vec(), vec![0, 2, 3, 5]);
        assert_eq!(a.intersection(b).to_vec(), vec![2]);
        assert_eq!(a.difference(b).to_vec(), vec![0, 5]);
        assert_eq!(a.min(), Some(0));
        assert_eq!(a.max(), Some(5));
        assert_eq!(VertexSet::EMPTY.min(), None);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[0,2,5]");
    }
}
