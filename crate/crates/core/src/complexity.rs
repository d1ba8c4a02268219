//! Cost model.
//!
//! Costs are counted in primitive per-bit comparisons plus accumulation
//! XORs. For an elementary function the comparisons have the closed form
//! `S_1 = (⌈log2 b⌉ + 1)(n − b)`; the transeunt triangle always spends
//! `n(n+1)/2` XORs. No closed form is claimed for multi-index sets; those are
//! measured.

use crate::lucas::{cost_bit_length, ParityCheckCounter};
use crate::transform::carrier_from_set;
use crate::{Error, Result};

/// `(⌈log2 b⌉ + 1)(n − b)`.
///
/// Undefined for `b = 0`; the error carries the cost the counter charges
/// there by convention (one check per entry, `n` in total).
pub fn s1_formula(n: usize, b: usize) -> Result<u64> {
    if b > n {
        return Err(Error::IndexOutOfRange { index: b, n });
    }
    if b == 0 {
        return Err(Error::UndefinedForZero {
            convention_cost: n as u64,
        });
    }
    Ok(cost_bit_length(b) as u64 * (n - b) as u64)
}

/// Transeunt triangle cost `n(n+1)/2`.
pub fn st_reference(n: usize) -> u64 {
    let n = n as u64;
    n * (n + 1) / 2
}

/// Op counts of one combinatorial run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Measurement {
    /// Counter snapshot after the run.
    pub ops: ParityCheckCounter,
    /// `S_1` for singleton sets with `b >= 1`.
    pub formula_ops: Option<u64>,
}

impl Measurement {
    /// `primitive_checks + accumulation_xors`.
    pub fn measured_ops(&self) -> u64 {
        self.ops.total()
    }
}

/// Runs [`carrier_from_set`] and returns its op counts.
///
/// For singletons the primitive checks must equal [`s1_formula`]; a
/// disagreement is reported as [`Error::CostMismatch`].
pub fn measure_combinatorial(n: usize, indices: &[usize]) -> Result<Measurement> {
    let run = carrier_from_set(n, indices)?;
    let formula_ops = match indices {
        [b] if *b > 0 => {
            let formula = s1_formula(n, *b)?;
            if run.ops.primitive_checks != formula {
                return Err(Error::CostMismatch {
                    measured: run.ops.primitive_checks,
                    formula,
                });
            }
            Some(formula)
        }
        _ => None,
    };
    Ok(Measurement {
        ops: run.ops,
        formula_ops,
    })
}
