//! Reference implementations for cross-checking the combinatorial method.
//!
//! [`triangle_transform`] is the transeunt triangle: repeated adjacent XORs,
//! `n(n+1)/2` of them. [`anf_oracle`] goes through the full `2^n` truth table
//! and a subset Möbius transform, so it shares nothing with the parity code.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, FunctionSpec, IndexKind, ReducedVector, Result};

/// Default largest `n` for the truth-table oracles.
pub const ORACLE_MAX_N: usize = 16;

/// Output of the transeunt triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleRun {
    /// The transformed vector.
    pub output: ReducedVector,
    /// Binary XORs executed; always `n(n+1)/2`.
    pub xor_ops: u64,
}

/// Transeunt triangle transform.
///
/// Level 0 is `v`; entry `j` of level `k+1` is `level_k[j] ^ level_k[j+1]`.
/// Output bit `k` is the leading entry of level `k`.
pub fn triangle_transform(v: &ReducedVector) -> TriangleRun {
    let n = v.n();
    let mut level: Vec<u8> = v.to_bits().into_iter().map(u8::from).collect();
    let mut output = ReducedVector::zeros(n);
    let mut xor_ops = 0u64;
    output.set(0, level[0] == 1);
    for k in 1..=n {
        let width = n + 1 - k;
        for j in 0..width {
            level[j] ^= level[j + 1];
        }
        xor_ops += width as u64;
        output.set(k, level[0] == 1);
    }
    TriangleRun { output, xor_ops }
}

/// Reduced spectrum γ of a function given by valued numbers, via the full
/// truth table.
///
/// Builds all `2^n` values, runs the subset Möbius transform over GF(2), and
/// checks that every ANF coefficient depends only on its monomial's degree.
pub fn anf_oracle(spec: &FunctionSpec) -> Result<ReducedVector> {
    anf_oracle_bounded(spec, ORACLE_MAX_N)
}

/// [`anf_oracle`] with an explicit bound on `n`.
pub fn anf_oracle_bounded(spec: &FunctionSpec, max_n: usize) -> Result<ReducedVector> {
    if spec.kind() != IndexKind::Valued {
        return Err(Error::WrongKind {
            expected: IndexKind::Valued,
        });
    }
    let n = spec.n();
    if n > max_n {
        return Err(Error::OracleBoundExceeded { n, bound: max_n });
    }
    let carrier = spec.to_vector();
    let size = 1usize << n;
    let mut table: Vec<u8> = (0..size)
        .map(|mask| u8::from(carrier.get(mask.count_ones() as usize)))
        .collect();

    let mut bit = 1;
    while bit < size {
        for mask in 0..size {
            if mask & bit != 0 {
                table[mask] ^= table[mask ^ bit];
            }
        }
        bit <<= 1;
    }

    // Degree d is first seen at mask 2^d - 1.
    let mut seen: Vec<Option<u8>> = vec![None; n + 1];
    for (mask, &coeff) in table.iter().enumerate() {
        let degree = mask.count_ones() as usize;
        match seen[degree] {
            None => seen[degree] = Some(coeff),
            Some(c) if c != coeff => return Err(Error::SymmetryViolation { mask }),
            Some(_) => {}
        }
    }
    let bits: Vec<bool> = seen.into_iter().map(|c| c == Some(1)).collect();
    ReducedVector::from_bits(&bits)
}

/// Evaluates the function with valued numbers `spec` on a full assignment:
/// 1 iff the number of ones is a valued number.
pub fn truth_table_eval_oracle(spec: &FunctionSpec, assignment: &[bool]) -> Result<bool> {
    if spec.kind() != IndexKind::Valued {
        return Err(Error::WrongKind {
            expected: IndexKind::Valued,
        });
    }
    if spec.n() > ORACLE_MAX_N {
        return Err(Error::OracleBoundExceeded {
            n: spec.n(),
            bound: ORACLE_MAX_N,
        });
    }
    if assignment.len() != spec.n() {
        return Err(Error::DimensionMismatch {
            expected: spec.n(),
            found: assignment.len(),
        });
    }
    let weight = assignment.iter().filter(|&&b| b).count();
    Ok(spec.indices().binary_search(&weight).is_ok())
}
