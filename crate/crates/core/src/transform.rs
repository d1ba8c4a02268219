//! The combinatorial method: carrier vector ↔ reduced spectrum.
//!
//! Both directions compute the same thing. For an index set `S` with
//! minimum `m`, output bit `i` is
//!
//! ```text
//!   0                               for i < m
//!   XOR_{s ∈ S, s <= i} C(i, s) mod 2   for i >= m
//! ```
//!
//! so bits below `m` are zero and bit `m` is one. Terms with `s > i` vanish
//! and are skipped without cost. Entry `i = m` has a single surviving term
//! and is not charged either; the charged work is `i = m+1 ..= n`.

use alloc::vec::Vec;

use crate::lucas::{binom_parity, binom_parity_counted, ParityCheckCounter};
use crate::spec::validate_indices;
use crate::{Error, ReducedVector, Result};

/// A computed π or γ together with the operations spent on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformResult {
    /// The output vector.
    pub vector: ReducedVector,
    /// Operation tallies of this run.
    pub ops: ParityCheckCounter,
}

/// π of the elementary function E_n^b (polynomial number `b`).
pub fn carrier_from_single(n: usize, b: usize) -> Result<TransformResult> {
    carrier_from_set(n, &[b])
}

/// π of E_n^{b_1,…,b_q} from its polynomial numbers.
pub fn carrier_from_set(n: usize, indices: &[usize]) -> Result<TransformResult> {
    validate_indices(n, indices)?;
    if indices.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    Ok(binomial_transform(n, indices))
}

/// γ of the elementary function F_n^a (valued number `a`).
pub fn spectrum_from_single(n: usize, a: usize) -> Result<TransformResult> {
    spectrum_from_set(n, &[a])
}

/// γ of F_n^{a_1,…,a_r} from its valued numbers.
///
/// Identical arithmetic to [`carrier_from_set`]: the mod-2 binomial matrix
/// is its own inverse.
pub fn spectrum_from_set(n: usize, indices: &[usize]) -> Result<TransformResult> {
    carrier_from_set(n, indices)
}

/// Transforms an arbitrary vector by treating its 1-positions as the index
/// set. The zero vector maps to itself at no cost.
pub fn transform_vector(v: &ReducedVector) -> TransformResult {
    let indices: Vec<usize> = v.positions().collect();
    if indices.is_empty() {
        return TransformResult {
            vector: ReducedVector::zeros(v.n()),
            ops: ParityCheckCounter::new(),
        };
    }
    binomial_transform(v.n(), &indices)
}

/// Core loop. `indices` is non-empty, strictly increasing and `<= n`.
fn binomial_transform(n: usize, indices: &[usize]) -> TransformResult {
    let mut counter = ParityCheckCounter::new();
    let mut out = ReducedVector::zeros(n);
    let first = indices[0];

    // Only C(first, first) survives here.
    let lead = indices
        .iter()
        .take_while(|&&s| s <= first)
        .fold(false, |acc, &s| acc ^ binom_parity(first, s));
    debug_assert!(lead);
    out.set(first, lead);

    // `live` = number of indices <= i; indices are sorted so it only grows.
    let mut live = 1;
    for i in first + 1..=n {
        while live < indices.len() && indices[live] <= i {
            live += 1;
        }
        let mut bit = false;
        for &s in &indices[..live] {
            bit ^= binom_parity_counted(i, s, &mut counter);
        }
        counter.accumulation_xors += (live - 1) as u64;
        if bit {
            out.set(i, true);
        }
    }

    TransformResult {
        vector: out,
        ops: counter,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> ReducedVector {
        s.parse().unwrap()
    }

    #[test]
    fn carrier_of_e6_2() {
        let r = carrier_from_single(6, 2).unwrap();
        assert_eq!(r.vector, bits("0011001"));
        // entry by entry: C(3,2) odd, C(4,2) even, C(5,2) even, C(6,2) odd
        assert_eq!(
            (3..=6).map(|i| r.vector.get(i)).collect::<Vec<_>>(),
            [true, false, false, true]
        );
        assert_eq!(r.ops.primitive_checks, 8);
        assert_eq!(r.ops.accumulation_xors, 0);
    }

    #[test]
    fn single_index_extremes() {
        for n in [0, 1, 5, 64, 130] {
            assert_eq!(
                carrier_from_single(n, 0).unwrap().vector,
                ReducedVector::ones(n)
            );
            let top = carrier_from_single(n, n).unwrap();
            assert_eq!(top.vector, ReducedVector::from_positions(n, &[n]).unwrap());
            assert_eq!(top.ops.total(), 0);
            assert_eq!(
                spectrum_from_single(n, 0).unwrap().vector,
                ReducedVector::ones(n)
            );
        }
    }

    #[test]
    fn carrier_of_e10_578() {
        let r = carrier_from_set(10, &[5, 7, 8]).unwrap();
        assert_eq!(r.vector, bits("00000100111"));
        // π_7 = C(7,5) ⊕ C(7,7) = 1 ⊕ 1
        assert!(binom_parity(7, 5) && binom_parity(7, 7));
        assert!(!r.vector.get(7));
    }

    #[test]
    fn carrier_of_e7_23() {
        // (0,0,1,1,0,0,0,0) is the indicator of the valued numbers {2,3}, not
        // the carrier of E_7^{2,3}; the transform of {2,3} is the same in
        // both directions.
        let indicator = crate::FunctionSpec::valued(7, &[2, 3]).unwrap().to_vector();
        assert_eq!(indicator, bits("00110000"));
        assert_eq!(
            carrier_from_set(7, &[2, 3]).unwrap().vector,
            bits("00100010")
        );
    }

    #[test]
    fn spectrum_of_f7_23() {
        let r = spectrum_from_set(7, &[2, 3]).unwrap();
        assert_eq!(r.vector, bits("00100010"));
        // γ_6 = C(6,2) ⊕ C(6,3) = 1 ⊕ 0
        assert!(binom_parity(6, 2) && !binom_parity(6, 3));
        assert!(r.vector.get(6));
        assert_eq!(
            spectrum_from_set(9, &[9]).unwrap().vector.to_string(),
            "0000000001"
        );
    }

    #[test]
    fn spectrum_of_f6_2_matches_carrier_formula() {
        assert_eq!(spectrum_from_single(6, 2).unwrap().vector, bits("0011001"));
    }

    #[test]
    fn skipped_terms_are_not_charged() {
        // n = 10, {2,3,4}: b=2 over i=3..10, b=3 over i=3..10, b=4 over i=4..10
        let r = carrier_from_set(10, &[2, 3, 4]).unwrap();
        assert_eq!(r.ops.primitive_checks, 8 * 2 + 8 * 3 + 7 * 3);
        assert_eq!(r.ops.accumulation_xors, 1 + 7 * 2);
    }

    #[test]
    fn errors() {
        assert_eq!(
            carrier_from_single(3, 4),
            Err(Error::IndexOutOfRange { index: 4, n: 3 })
        );
        assert_eq!(carrier_from_set(3, &[]), Err(Error::EmptyIndexSet));
        assert_eq!(
            spectrum_from_set(8, &[4, 2]),
            Err(Error::NotStrictlyIncreasing { position: 1 })
        );
    }

    #[test]
    fn transform_vector_matches_set_form() {
        assert_eq!(transform_vector(&bits("0010000")).vector, bits("0011001"));
        assert_eq!(transform_vector(&bits("00000")).vector, bits("00000"));
        let v = bits("01101001011");
        assert_eq!(
            transform_vector(&v),
            carrier_from_set(10, &v.positions().collect::<Vec<_>>()).unwrap()
        );
    }
}
