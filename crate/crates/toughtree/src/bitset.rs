//! Fixed-capacity vertex sets packed into 64-bit words.
//!
//! All graphs in this crate have at most [`MAX_ORDER`] vertices, so a vertex
//! set is a small inline array of words and is `Copy`. Subset enumeration and
//! component search then reduce to word operations, with a natural fast path
//! (a single word) for graphs on at most 64 vertices.

/// Largest supported graph order.
pub const MAX_ORDER: usize = 512;

const WORDS: usize = MAX_ORDER / 64;

/// A set of vertices drawn from `0..MAX_ORDER`.
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    /// The empty set.
    pub const EMPTY: VertexSet = VertexSet { words: [0; WORDS] };

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        assert!(n <= MAX_ORDER);
        let mut words = [0u64; WORDS];
        let mut left = n;
        for w in words.iter_mut() {
            if left >= 64 {
                *w = u64::MAX;
                left -= 64;
            } else {
                *w = (1u64 << left) - 1;
                break;
            }
        }
        VertexSet { words }
    }

    pub fn singleton(v: usize) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        s.insert(v);
        s
    }

    pub fn from_slice(vs: &[usize]) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for &v in vs {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < MAX_ORDER);
        self.words[v >> 6] & (1u64 << (v & 63)) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_ORDER);
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_ORDER);
        self.words[v >> 6] &= !(1u64 << (v & 63));
    }

    /// Number of members.
    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    #[inline]
    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    /// Removes every member of `other`.
    #[inline]
    pub fn subtract(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Raw word, for single-word fast paths (`n <= 64` uses word 0 only).
    #[inline]
    pub fn word(&self, i: usize) -> u64 {
        self.words[i]
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Members<'_> {
        Members {
            set: self,
            word: 0,
            bits: self.words[0],
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Members<'a> {
    set: &'a VertexSet,
    word: usize,
    bits: u64,
}

impl Iterator for Members<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let b = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
            if self.word >= WORDS {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_membership() {
        let s = VertexSet::full(70);
        assert_eq!(s.len(), 70);
        assert!(s.contains(0));
        assert!(s.contains(69));
        assert!(!s.contains(70));
    }

    #[test]
    fn iter_matches_inserts() {
        let s = VertexSet::from_slice(&[3, 65, 200, 511]);
        assert_eq!(s.to_vec(), vec![3, 65, 200, 511]);
        assert_eq!(s.first(), Some(3));
    }

    #[test]
    fn set_algebra() {
        let mut a = VertexSet::from_slice(&[1, 2, 3]);
        let b = VertexSet::from_slice(&[3, 4]);
        assert!(a.intersects(&b));
        a.subtract(&b);
        assert_eq!(a.to_vec(), vec![1, 2]);
        a.union_with(&b);
        assert_eq!(a.to_vec(), vec![1, 2, 3, 4]);
        assert!(VertexSet::EMPTY.is_subset_of(&a));
    }
}
