//! Fixed-width packed bit vectors used as GF(2) row vectors and vertex sets.

use std::cmp::Ordering;
use std::fmt;

/// A fixed-length bit vector packed into `u64` words.
///
/// Comparison is numeric: the bit with the highest index is the most
/// significant.  This gives a canonical total order on subsets that the
/// greedy packing and canonicalization routines rely on.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bits {
    nbits: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn new(nbits: usize) -> Self {
        Bits { nbits, words: vec![0; nbits.div_ceil(64)] }
    }

    pub fn from_indices(nbits: usize, idx: &[usize]) -> Self {
        let mut b = Bits::new(nbits);
        for &i in idx {
            b.set(i, true);
        }
        b
    }

    pub fn len(&self) -> usize {
        self.nbits
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.nbits);
        let mask = 1u64 << (i % 64);
        if v {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &Bits) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Bits) -> Bits {
        let mut r = self.clone();
        r.xor_assign(other);
        r
    }

    pub fn and(&self, other: &Bits) -> Bits {
        debug_assert_eq!(self.nbits, other.nbits);
        let mut r = self.clone();
        for (a, b) in r.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        r
    }

    pub fn or_assign(&mut self, other: &Bits) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Number of positions where the two vectors differ.
    pub fn xor_count(&self, other: &Bits) -> usize {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// True iff `self` is a subset of `other` viewed as index sets.
    pub fn is_subset(&self, other: &Bits) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Bits) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Iterate indices of set bits in increasing order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w0)| {
            std::iter::successors(
                if w0 == 0 { None } else { Some(w0) },
                |&w| {
                    let w = w & (w - 1); // clear lowest set bit
                    if w == 0 { None } else { Some(w) }
                },
            )
            .map(move |w| wi * 64 + w.trailing_zeros() as usize)
        })
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }
}

impl Ord for Bits {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Bits {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter_ones().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
