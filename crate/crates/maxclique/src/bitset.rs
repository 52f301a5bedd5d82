//! Fixed-capacity bit strings backed by word arrays.
//!
//! The solvers only need set, clear, test, in-place intersection,
//! complement, population count and lowest-set-bit, so a small purpose
//! built type beats a general bit-set library here. The word type is a
//! parameter (default `u64`) purely so tests can prove that observable
//! behaviour does not depend on the word size.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not};

/// An unsigned machine word usable as a bit-string limb.
pub trait Word:
    Copy + Eq + BitAnd<Output = Self> + BitOr<Output = Self> + Not<Output = Self>
{
    const BITS: usize;
    const ZERO: Self;
    fn bit(i: usize) -> Self;
    fn count_ones(self) -> usize;
    fn trailing_zeros(self) -> usize;
}

macro_rules! impl_word {
    ($($t:ty),*) => {$(
        impl Word for $t {
            const BITS: usize = <$t>::BITS as usize;
            const ZERO: Self = 0;
            fn bit(i: usize) -> Self {
                1 << i
            }
            fn count_ones(self) -> usize {
                <$t>::count_ones(self) as usize
            }
            fn trailing_zeros(self) -> usize {
                <$t>::trailing_zeros(self) as usize
            }
        }
    )*};
}

impl_word!(u8, u16, u32, u64);

/// A set over `0..capacity` stored as a bit string. Bits at or beyond
/// `capacity` are never set, so whole-word operations (intersection,
/// counting, scanning) need no per-call masking.
#[derive(Clone, PartialEq, Eq)]
pub struct BitString<W: Word = u64> {
    words: Vec<W>,
    capacity: usize,
}

impl<W: Word> BitString<W> {
    /// The empty set over `0..capacity`.
    pub fn new(capacity: usize) -> Self {
        BitString {
            words: vec![W::ZERO; capacity.div_ceil(W::BITS)],
            capacity,
        }
    }

    /// The full set `{0, .., capacity-1}`.
    pub fn full(capacity: usize) -> Self {
        let mut s = Self::new(capacity);
        for i in 0..capacity {
            s.set(i);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn set(&mut self, i: usize) {
        assert!(i < self.capacity);
        self.words[i / W::BITS] = self.words[i / W::BITS] | W::bit(i % W::BITS);
    }

    pub fn clear_bit(&mut self, i: usize) {
        assert!(i < self.capacity);
        self.words[i / W::BITS] = self.words[i / W::BITS] & !W::bit(i % W::BITS);
    }

    pub fn test(&self, i: usize) -> bool {
        assert!(i < self.capacity);
        self.words[i / W::BITS] & W::bit(i % W::BITS) != W::ZERO
    }

    /// In-place intersection. Both operands must share a capacity.
    pub fn and_assign(&mut self, other: &Self) {
        assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a = *a & *b;
        }
    }

    /// Complement within `0..capacity` (tail bits stay clear).
    pub fn complement(&self) -> Self {
        let mut out = Self::full(self.capacity);
        for (a, b) in out.words.iter_mut().zip(&self.words) {
            *a = *a & !*b;
        }
        out
    }

    pub fn cardinality(&self) -> usize {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == W::ZERO)
    }

    /// Index of the lowest set bit, if any.
    pub fn first_set(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != W::ZERO {
                return Some(wi * W::BITS + w.trailing_zeros());
            }
        }
        None
    }

    /// Ascending members, mostly for tests and debugging.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.capacity).filter(move |&i| self.test(i))
    }
}

impl<W: Word> fmt::Debug for BitString<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
