//! Parity of binomial coefficients by the bit-submask test.
//!
//! C(i, b) is odd iff every set bit of `b` is also set in `i`. The per-bit
//! comparison `x ∨ ¬y = 1` is the unit of cost; [`ParityCheckCounter`] tallies
//! it so that measured counts can be compared against the closed-form cost.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Largest row/column accepted by [`pascal_parity_oracle`].
pub const PASCAL_ORACLE_BOUND: usize = 512;

/// Number of binary digits of `x` (`⌊log2 x⌋ + 1`), with `bit_length(0) = 1`.
pub fn bit_length(x: usize) -> usize {
    if x == 0 {
        1
    } else {
        (usize::BITS - x.leading_zeros()) as usize
    }
}

/// Length used for cost accounting: `⌈log2 b⌉ + 1`, and 1 for `b = 0`.
///
/// This overstates the digit count when `b` is not a power of two
/// (`cost_bit_length(3) == 3`) but it is the unit the closed-form cost
/// `S_1 = (⌈log2 b⌉ + 1)(n − b)` is stated in.
pub fn cost_bit_length(b: usize) -> usize {
    if b == 0 {
        1
    } else {
        (usize::BITS - (b - 1).leading_zeros()) as usize + 1
    }
}

/// C(i, b) mod 2. Returns `false` when `i < b`.
#[inline]
pub fn binom_parity(i: usize, b: usize) -> bool {
    i & b == b
}

/// Operation tallies for one transform run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ParityCheckCounter {
    /// Per-bit comparisons `x ∨ ¬y`.
    pub primitive_checks: u64,
    /// XORs combining parities of several indices into one output bit.
    pub accumulation_xors: u64,
}

impl ParityCheckCounter {
    /// A zeroed counter.
    pub fn new() -> Self {
        Self::default()
    }

    /// Zeroes both tallies.
    pub fn reset(&mut self) {
        *self = Self::default();
    }

    /// `primitive_checks + accumulation_xors`.
    pub fn total(&self) -> u64 {
        self.primitive_checks + self.accumulation_xors
    }
}

/// [`binom_parity`], charging `cost_bit_length(b)` primitive checks.
///
/// The charge does not depend on where a bit-by-bit comparison would first
/// fail; the word-parallel test always decides all bits at once.
#[inline]
pub fn binom_parity_counted(i: usize, b: usize, counter: &mut ParityCheckCounter) -> bool {
    counter.primitive_checks += cost_bit_length(b) as u64;
    binom_parity(i, b)
}

/// Rows `0..=bound` of Pascal's triangle mod 2, built by the additive
/// recurrence `C(i, b) = C(i-1, b-1) + C(i-1, b)`.
#[derive(Debug, Clone)]
pub struct PascalParityTable {
    rows: Vec<Vec<bool>>,
}

impl PascalParityTable {
    /// Builds rows `0..=bound`.
    pub fn new(bound: usize) -> Self {
        let mut rows: Vec<Vec<bool>> = Vec::with_capacity(bound + 1);
        rows.push(vec![true]);
        for i in 1..=bound {
            let prev = &rows[i - 1];
            let mut row = vec![false; i + 1];
            row[0] = true;
            row[i] = true;
            for b in 1..i {
                row[b] = prev[b - 1] ^ prev[b];
            }
            rows.push(row);
        }
        PascalParityTable { rows }
    }

    /// Largest row held.
    pub fn bound(&self) -> usize {
        self.rows.len() - 1
    }

    /// C(i, b) mod 2; `false` for `b > i`. Panics if `i` exceeds the bound.
    pub fn get(&self, i: usize, b: usize) -> bool {
        self.rows[i].get(b).copied().unwrap_or(false)
    }
}

/// C(i, b) mod 2 from the Pascal recurrence, with no bit tricks.
///
/// Both arguments must be at most [`PASCAL_ORACLE_BOUND`]. Builds only the
/// rows it needs; use [`PascalParityTable`] for bulk queries.
pub fn pascal_parity_oracle(i: usize, b: usize) -> Result<bool> {
    let worst = i.max(b);
    if worst > PASCAL_ORACLE_BOUND {
        return Err(Error::OracleBoundExceeded {
            n: worst,
            bound: PASCAL_ORACLE_BOUND,
        });
    }
    if b > i {
        return Ok(false);
    }
    let mut row = vec![false; i + 1];
    row[0] = true;
    for r in 1..=i {
        for c in (1..=r).rev() {
            row[c] ^= row[c - 1];
        }
    }
    Ok(row[b])
}
