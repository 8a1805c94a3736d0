//! Ground sets and fixed-width subsets.
//!
//! A subset is a bit vector over `{0, …, n−1}`, one `u64` word per 64
//! elements. Iteration is always in ascending element order; the greedy
//! solvers rely on that for their tie-breaking.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub type ElementId = usize;

const WORD: usize = 64;

/// A finite ground set `{0, …, n−1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("ground set must have at least one element".into()));
        }
        Ok(Self { n })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.n
    }

    pub fn empty_subset(&self) -> Subset {
        Subset::empty(self.n)
    }

    pub fn full_subset(&self) -> Subset {
        Subset::full(self.n)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    width: usize,
    words: Vec<u64>,
}

impl Subset {
    pub fn empty(width: usize) -> Self {
        Self { width, words: vec![0; width.div_ceil(WORD).max(1)] }
    }

    pub fn full(width: usize) -> Self {
        let mut s = Self::empty(width);
        for p in 0..width {
            s.insert(p);
        }
        s
    }

    pub fn singleton(width: usize, p: ElementId) -> Self {
        let mut s = Self::empty(width);
        s.insert(p);
        s
    }

    /// Builds a subset from the low `width` bits of `mask` (`width ≤ 64`).
    pub fn from_mask(width: usize, mask: u64) -> Self {
        debug_assert!(width <= WORD);
        let mut s = Self::empty(width);
        s.words[0] = if width == WORD { mask } else { mask & ((1u64 << width) - 1) };
        s
    }

    /// The low word as a mask. Only meaningful for `width ≤ 64`.
    pub fn mask(&self) -> u64 {
        self.words[0]
    }

    pub fn from_elements<I: IntoIterator<Item = ElementId>>(width: usize, elements: I) -> Result<Self> {
        let mut s = Self::empty(width);
        for p in elements {
            if p >= width {
                return Err(Error::ElementOutOfRange { element: p, size: width });
            }
            s.insert(p);
        }
        Ok(s)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn contains(&self, p: ElementId) -> bool {
        p < self.width && self.words[p / WORD] >> (p % WORD) & 1 == 1
    }

    pub fn insert(&mut self, p: ElementId) -> bool {
        assert!(p < self.width, "element {p} outside width {}", self.width);
        let had = self.contains(p);
        self.words[p / WORD] |= 1 << (p % WORD);
        !had
    }

    pub fn remove(&mut self, p: ElementId) -> bool {
        let had = self.contains(p);
        if had {
            self.words[p / WORD] &= !(1 << (p % WORD));
        }
        had
    }

    pub fn with(&self, p: ElementId) -> Self {
        let mut s = self.clone();
        s.insert(p);
        s
    }

    pub fn without(&self, p: ElementId) -> Self {
        let mut s = self.clone();
        s.remove(p);
        s
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & !b)
    }

    pub fn union_with(&mut self, other: &Self) {
        assert_eq!(self.width, other.width, "subset widths differ");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        assert_eq!(self.width, other.width, "subset widths differ");
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.width).filter(move |&p| self.contains(p))
    }

    pub fn to_vec(&self) -> Vec<ElementId> {
        self.iter().collect()
    }

    pub fn check_width(&self, expected: usize) -> Result<()> {
        if self.width == expected {
            Ok(())
        } else {
            Err(Error::GroundSetMismatch { expected, actual: self.width })
        }
    }

    fn zip(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.width, other.width, "subset widths differ");
        Self {
            width: self.width,
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| op(a, b)).collect(),
        }
    }
}

/// Lexicographic order of the ascending element lists, so `{0,3} < {1}` and `{0} < {0,1}`.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// All subsets of an `n`-element ground set in mask order (`n ≤ 30`).
pub fn all_subsets(n: usize) -> impl Iterator<Item = Subset> {
    assert!(n <= 30, "refusing to enumerate 2^{n} subsets");
    (0..1u64 << n).map(move |m| Subset::from_mask(n, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn set_algebra() {
        let a = Subset::from_elements(70, [0, 3, 65]).unwrap();
        let b = Subset::from_elements(70, [3, 4, 69]).unwrap();
        assert_eq!(a.union(&b).to_vec(), vec![0, 3, 4, 65, 69]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 65]);
        assert!(a.intersection(&b).is_subset_of(&a));
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(matches!(
            Subset::from_elements(4, [4]),
            Err(Error::ElementOutOfRange { element: 4, size: 4 })
        ));
        assert!(GroundSet::new(0).is_err());
    }

    #[test]
    fn lexicographic_order() {
        let s = |v: &[usize]| Subset::from_elements(5, v.iter().copied()).unwrap();
        assert!(s(&[]) < s(&[0]));
        assert!(s(&[0]) < s(&[0, 1]));
        assert!(s(&[0, 3]) < s(&[1]));
        assert!(s(&[1, 2]) < s(&[1, 3]));
    }

    #[test]
    fn mask_round_trip() {
        let s = Subset::from_mask(6, 0b101001);
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert_eq!(s.mask(), 0b101001);
        assert_eq!(all_subsets(4).count(), 16);
    }

    proptest! {
        #[test]
        fn union_and_difference_partition(a in prop::collection::vec(0usize..100, 0..20),
                                          b in prop::collection::vec(0usize..100, 0..20)) {
            let a = Subset::from_elements(100, a).unwrap();
            let b = Subset::from_elements(100, b).unwrap();
            let u = a.union(&b);
            prop_assert_eq!(u.len(), a.difference(&b).len() + b.len());
            prop_assert!(a.is_subset_of(&u) && b.is_subset_of(&u));
            prop_assert!(a.difference(&b).is_disjoint(&b));
        }
    }
}
