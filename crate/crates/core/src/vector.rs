use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

const WORD_BITS: usize = 64;

/// An `(n + 1)`-bit vector indexed `0..=n`.
///
/// Used both as the carrier vector π and the reduced spectrum γ. Bits are
/// packed into 64-bit words; bits past index `n` in the last word are always
/// zero, so derived equality is bitwise equality.
///
/// The textual form is a bit string with index 0 leftmost: `"0011001"` is
/// π_0 = 0, …, π_6 = 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ReducedVector {
    n: usize,
    words: Vec<u64>,
}

impl ReducedVector {
    /// All-zero vector for `n` variables (length `n + 1`).
    pub fn zeros(n: usize) -> Self {
        ReducedVector {
            n,
            words: vec![0; word_count(n + 1)],
        }
    }

    /// All-ones vector for `n` variables.
    pub fn ones(n: usize) -> Self {
        let mut v = ReducedVector {
            n,
            words: vec![u64::MAX; word_count(n + 1)],
        };
        v.clear_tail();
        v
    }

    /// Builds a vector from its bits, index 0 first. Fails on an empty slice.
    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyBitString);
        }
        let mut v = Self::zeros(bits.len() - 1);
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        Ok(v)
    }

    /// Indicator vector of `positions`. Positions must be `<= n`.
    pub fn from_positions(n: usize, positions: &[usize]) -> Result<Self> {
        let mut v = Self::zeros(n);
        for &p in positions {
            if p > n {
                return Err(Error::IndexOutOfRange { index: p, n });
            }
            v.set(p, true);
        }
        Ok(v)
    }

    /// Number of variables.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of bits, always `n + 1`.
    #[inline]
    pub fn len(&self) -> usize {
        self.n + 1
    }

    /// Never true: a reduced vector has at least one bit.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Bit `i`. Panics if `i > n`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i <= self.n,
            "bit index {} out of range for n = {}",
            i,
            self.n
        );
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    /// Sets bit `i`. Panics if `i > n`.
    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i <= self.n,
            "bit index {} out of range for n = {}",
            i,
            self.n
        );
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    /// Flips bit `i`. Panics if `i > n`.
    #[inline]
    pub fn toggle(&mut self, i: usize) {
        assert!(
            i <= self.n,
            "bit index {} out of range for n = {}",
            i,
            self.n
        );
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Number of set bits.
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Positions of set bits in ascending order.
    pub fn positions(&self) -> Positions<'_> {
        Positions {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Position of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.positions().next()
    }

    /// Bits as booleans, index 0 first.
    pub fn to_bits(&self) -> Vec<bool> {
        (0..=self.n).map(|i| self.get(i)).collect()
    }

    /// Bit string with index 0 leftmost.
    pub fn to_bit_string(&self) -> String {
        (0..=self.n)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }

    /// Packed storage words, least significant bit = index 0.
    pub fn as_words(&self) -> &[u64] {
        &self.words
    }

    fn clear_tail(&mut self) {
        let used = (self.n + 1) % WORD_BITS;
        if used != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << used) - 1;
            }
        }
    }
}

fn word_count(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// Iterator over set-bit positions of a [`ReducedVector`].
pub struct Positions<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Positions<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            self.current = *self.words.get(self.word_idx)?;
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

impl fmt::Display for ReducedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

impl fmt::Debug for ReducedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReducedVector(n={}, {})", self.n, self.to_bit_string())
    }
}

impl FromStr for ReducedVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyBitString);
        }
        let mut v = Self::zeros(s.chars().count() - 1);
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(Error::InvalidBit {
                        position: i,
                        found: other,
                    })
                }
            }
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_string_is_index_zero_leftmost() {
        let v: ReducedVector = "0011001".parse().unwrap();
        assert_eq!(v.n(), 6);
        assert!(!v.get(0));
        assert!(v.get(2) && v.get(3) && v.get(6));
        assert_eq!(v.positions().collect::<Vec<_>>(), [2, 3, 6]);
        assert_eq!(v.to_string(), "0011001");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert_eq!("".parse::<ReducedVector>(), Err(Error::EmptyBitString));
        assert_eq!(
            "01x".parse::<ReducedVector>(),
            Err(Error::InvalidBit {
                position: 2,
                found: 'x'
            })
        );
    }

    #[test]
    fn ones_clears_tail_across_word_boundary() {
        for n in [0, 62, 63, 64, 127, 200] {
            let v = ReducedVector::ones(n);
            assert_eq!(v.count_ones(), n + 1);
            let mut w = ReducedVector::zeros(n);
            for i in 0..=n {
                w.set(i, true);
            }
            assert_eq!(v, w);
        }
    }

    #[test]
    fn positions_span_words() {
        let v = ReducedVector::from_positions(200, &[0, 63, 64, 130, 200]).unwrap();
        assert_eq!(v.positions().collect::<Vec<_>>(), [0, 63, 64, 130, 200]);
        assert_eq!(v.first_one(), Some(0));
        assert_eq!(ReducedVector::zeros(70).first_one(), None);
    }

    #[test]
    fn from_positions_rejects_out_of_range() {
        assert_eq!(
            ReducedVector::from_positions(3, &[4]),
            Err(Error::IndexOutOfRange { index: 4, n: 3 })
        );
    }
}
