//! Growable bitset over element ids.

use std::fmt;

use smallvec::SmallVec;

/// A finite set of element ids stored as a bitset.
///
/// Trailing zero words are always trimmed so equality and hashing are structural.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ElemSet {
    words: SmallVec<[u64; 2]>,
}

impl ElemSet {
    pub fn new() -> Self {
        ElemSet::default()
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = ElemSet::new();
        let whole = n / 64;
        s.words.resize(whole, u64::MAX);
        if n % 64 != 0 {
            s.words.push((1u64 << (n % 64)) - 1);
        }
        s
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut s = ElemSet::new();
        s.words.push(mask);
        s.trim();
        s
    }

    /// The low 64 bits, if no element is 64 or larger.
    pub fn as_mask(&self) -> Option<u64> {
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

    pub fn insert(&mut self, e: usize) -> bool {
        let (w, b) = (e / 64, e % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !had
    }

    pub fn remove(&mut self, e: usize) -> bool {
        let (w, b) = (e / 64, e % 64);
        if w >= self.words.len() {
            return false;
        }
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        self.trim();
        had
    }

    pub fn contains(&self, e: usize) -> bool {
        let (w, b) = (e / 64, e % 64);
        w < self.words.len() && self.words[w] >> b & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn last(&self) -> Option<usize> {
        let w = self.words.len().checked_sub(1)?;
        Some(w * 64 + 63 - self.words[w].leading_zeros() as usize)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.clone();
        for (a, b) in out.words.iter_mut().zip(short.words.iter()) {
            *a |= *b;
        }
        out
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut out = ElemSet {
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

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a &= !*b;
        }
        out.trim();
        out
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= *b;
        }
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words.iter().enumerate().all(|(i, w)| {
            let o = other.words.get(i).copied().unwrap_or(0);
            w & !o == 0
        })
    }

    pub fn is_disjoint(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn with(&self, e: usize) -> ElemSet {
        let mut s = self.clone();
        s.insert(e);
        s
    }

    pub fn without(&self, e: usize) -> ElemSet {
        let mut s = self.clone();
        s.remove(e);
        s
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElemSet {
    /// Compares sorted id lists lexicographically.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + b);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::new();
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_ops() {
        let mut s = ElemSet::new();
        assert!(s.insert(3));
        assert!(!s.insert(3));
        s.insert(130);
        assert_eq!(s.to_vec(), vec![3, 130]);
        assert_eq!(s.last(), Some(130));
        assert!(s.remove(130));
        assert_eq!(s, ElemSet::from_mask(8));
        assert_eq!(s.as_mask(), Some(8));
        assert_eq!(ElemSet::full(65).len(), 65);
        assert_eq!(ElemSet::full(64).as_mask(), Some(u64::MAX));
    }

    proptest! {
        #[test]
        fn set_algebra(a in proptest::collection::btree_set(0usize..200, 0..30),
                       b in proptest::collection::btree_set(0usize..200, 0..30)) {
            let sa: ElemSet = a.iter().collect();
            let sb: ElemSet = b.iter().collect();
            let u: Vec<_> = a.union(&b).copied().collect();
            let i: Vec<_> = a.intersection(&b).copied().collect();
            let d: Vec<_> = a.difference(&b).copied().collect();
            prop_assert_eq!(sa.union(&sb).to_vec(), u);
            prop_assert_eq!(sa.intersection(&sb).to_vec(), i.clone());
            prop_assert_eq!(sa.difference(&sb).to_vec(), d);
            prop_assert_eq!(sa.is_disjoint(&sb), i.is_empty());
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
            prop_assert_eq!(sa.cmp(&sb), a.iter().cmp(b.iter()));
        }
    }
}
