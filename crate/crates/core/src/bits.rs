//! Growable bitmask used for every subset of a finite carrier.
//!
//! Trailing zero words are always trimmed, so equality, hashing and the
//! ordering below depend only on the set of members. Ordering is the numeric
//! order of the bitmask read as an unsigned integer, which is the canonical
//! order used for witnesses and sorted families.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SubsetBits {
    words: SmallVec<[u64; 4]>,
}

impl SubsetBits {
    pub fn new() -> Self {
        Self::default()
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words: SmallVec<[u64; 4]> = SmallVec::new();
        let whole = n / 64;
        let rest = n % 64;
        words.extend(std::iter::repeat_n(u64::MAX, whole));
        if rest > 0 {
            words.push((1u64 << rest) - 1);
        }
        Self { words }
    }

    pub fn singleton(i: usize) -> Self {
        let mut s = Self::new();
        s.insert(i);
        s
    }

    /// Low 64 members taken from a plain mask.
    pub fn from_u64(mask: u64) -> Self {
        let mut s = Self::new();
        s.words.push(mask);
        s.trim();
        s
    }

    /// The mask as a `u64`, when every member is below 64.
    pub fn as_u64(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w & (1u64 << (i % 64)) != 0)
    }

    pub fn insert(&mut self, i: usize) {
        let w = i / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1u64 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        if let Some(w) = self.words.get_mut(i / 64) {
            *w &= !(1u64 << (i % 64));
            self.trim();
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// One past the largest member (0 for the empty set).
    pub fn bound(&self) -> usize {
        match self.words.last() {
            None => 0,
            Some(w) => (self.words.len() - 1) * 64 + 64 - w.leading_zeros() as usize,
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len()
            && self
                .words
                .iter()
                .zip(other.words.iter())
                .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(short.words.iter()) {
            *w |= s;
        }
        Self { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = Self {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        };
        out.trim();
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(other.words.iter()) {
            *w &= !o;
        }
        out.trim();
        out
    }

    /// Complement relative to `{0, .., n-1}`.
    pub fn complement(&self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    pub fn union_with(&mut self, other: &Self) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (w, o) in self.words.iter_mut().zip(other.words.iter()) {
            *w |= o;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.words.truncate(other.words.len());
        for (w, o) in self.words.iter_mut().zip(other.words.iter()) {
            *w &= o;
        }
        self.trim();
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl FromIterator<usize> for SubsetBits {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl Ord for SubsetBits {
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for SubsetBits {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubsetBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
            self.current = *self.words.get(self.word)?;
        }
    }
}

impl<'a> IntoIterator for &'a SubsetBits {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_bound() {
        assert_eq!(SubsetBits::full(0), SubsetBits::new());
        assert_eq!(SubsetBits::full(70).len(), 70);
        assert_eq!(SubsetBits::full(70).bound(), 70);
        assert_eq!(SubsetBits::full(64).as_u64(), Some(u64::MAX));
    }

    #[test]
    fn remove_trims() {
        let mut s = SubsetBits::singleton(130);
        s.remove(130);
        assert_eq!(s, SubsetBits::new());
        assert!(s.is_empty());
    }

    #[test]
    fn ordering_is_numeric() {
        let a = SubsetBits::from_u64(0b100);
        let b = SubsetBits::from_u64(0b011);
        let c = SubsetBits::singleton(64);
        assert!(b < a);
        assert!(a < c);
        assert!(SubsetBits::new() < b);
    }

    fn arb_bits() -> impl Strategy<Value = SubsetBits> {
        proptest::collection::vec(0usize..200, 0..20).prop_map(|v| v.into_iter().collect())
    }

    proptest! {
        #[test]
        fn set_laws(a in arb_bits(), b in arb_bits()) {
            let u = a.union(&b);
            let i = a.intersection(&b);
            prop_assert!(a.is_subset(&u) && b.is_subset(&u));
            prop_assert!(i.is_subset(&a) && i.is_subset(&b));
            prop_assert_eq!(a.len() + b.len(), u.len() + i.len());
            prop_assert_eq!(a.difference(&b).is_empty(), a.is_subset(&b));
            prop_assert_eq!(i.is_empty(), a.is_disjoint(&b));
            let members: Vec<usize> = a.iter().collect();
            prop_assert_eq!(members.iter().copied().collect::<SubsetBits>(), a.clone());
            prop_assert!(members.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
