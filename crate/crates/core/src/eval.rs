//! Evaluating the two reduced forms, and expanding a spectrum into monomials.

use alloc::vec::Vec;
use core::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::lucas::binom_parity;
use crate::{Assignment, Error, ReducedVector, Result};

fn check_dims(v: &ReducedVector, x: &Assignment) -> Result<()> {
    if v.n() != x.n() {
        return Err(Error::DimensionMismatch {
            expected: v.n(),
            found: x.n(),
        });
    }
    Ok(())
}

/// Value of the function with carrier vector `pi` at `x`: simply `π_w`.
pub fn eval_carrier(pi: &ReducedVector, x: &Assignment) -> Result<bool> {
    check_dims(pi, x)?;
    Ok(pi.get(x.weight()))
}

/// Value of the function with reduced spectrum `gamma` at `x`.
///
/// On a weight-`w` input exactly C(w, i) monomials of degree `i` are 1, so
/// the result is `XOR_i γ_i · (C(w, i) mod 2)`.
pub fn eval_spectrum(gamma: &ReducedVector, x: &Assignment) -> Result<bool> {
    check_dims(gamma, x)?;
    let w = x.weight();
    Ok(gamma
        .positions()
        .take_while(|&i| i <= w)
        .fold(false, |acc, i| acc ^ binom_parity(w, i)))
}

/// Exact number of monomials in the ANF with reduced spectrum `gamma`,
/// `Σ_{γ_i = 1} C(n, i)`.
pub fn anf_term_count(gamma: &ReducedVector) -> BigUint {
    let n = gamma.n();
    let Some(last) = gamma.positions().last() else {
        return BigUint::zero();
    };
    let mut total = BigUint::zero();
    let mut binom = BigUint::from(1u32);
    for i in 0..=last {
        if gamma.get(i) {
            total += &binom;
        }
        binom = binom * (n - i) / (i + 1);
    }
    total
}

/// Explicit monomial expansion of a reduced spectrum.
///
/// Each term is a sorted list of 0-based variable indices; the empty term is
/// the constant 1. Terms are ordered by degree, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnfTermList {
    n: usize,
    terms: Vec<Vec<usize>>,
}

impl AnfTermList {
    /// Number of variables.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The monomials.
    pub fn terms(&self) -> &[Vec<usize>] {
        &self.terms
    }

    /// Number of monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero polynomial.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluates the polynomial on a full assignment `(x_1, …, x_n)`.
    pub fn evaluate(&self, bits: &[bool]) -> Result<bool> {
        if bits.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: bits.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .filter(|t| t.iter().all(|&v| bits[v]))
            .count()
            % 2
            == 1)
    }
}

impl fmt::Display for AnfTermList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, term) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" ^ ")?;
            }
            if term.is_empty() {
                f.write_str("1")?;
            }
            for (j, v) in term.iter().enumerate() {
                if j > 0 {
                    f.write_str("*")?;
                }
                write!(f, "x{}", v + 1)?;
            }
        }
        Ok(())
    }
}

/// Expands `gamma` into every monomial of every E_n^i with γ_i = 1.
///
/// Fails with [`Error::TermLimitExceeded`], reporting the exact count, if
/// more than `term_limit` terms would be produced.
pub fn anf_terms(gamma: &ReducedVector, term_limit: usize) -> Result<AnfTermList> {
    let count = anf_term_count(gamma);
    if count.to_usize().is_none_or(|c| c > term_limit) {
        return Err(Error::TermLimitExceeded {
            count,
            limit: term_limit,
        });
    }
    let n = gamma.n();
    let terms = gamma
        .positions()
        .flat_map(|degree| (0..n).combinations(degree))
        .collect();
    Ok(AnfTermList { n, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn bits(s: &str) -> ReducedVector {
        s.parse().unwrap()
    }

    fn w(n: usize, weight: usize) -> Assignment {
        Assignment::new(n, weight).unwrap()
    }

    #[test]
    fn eval_carrier_examples() {
        assert_eq!(eval_carrier(&bits("0010000"), &w(6, 2)), Ok(true));
        assert_eq!(eval_carrier(&bits("0011001"), &w(6, 6)), Ok(true));
        assert_eq!(eval_carrier(&bits("0011001"), &w(6, 4)), Ok(false));
        assert_eq!(
            eval_carrier(&bits("0011001"), &w(5, 1)),
            Err(Error::DimensionMismatch {
                expected: 6,
                found: 5
            })
        );
    }

    #[test]
    fn eval_spectrum_examples() {
        assert_eq!(eval_spectrum(&bits("0010000"), &w(6, 6)), Ok(true));
        let one = bits("1000000");
        for k in 0..=6 {
            assert_eq!(eval_spectrum(&one, &w(6, k)), Ok(true));
        }
        // F_7^{2,3} at weight 4 is 0
        assert_eq!(eval_spectrum(&bits("00100010"), &w(7, 4)), Ok(false));
        assert_eq!(eval_spectrum(&bits("00100010"), &w(7, 3)), Ok(true));
    }

    #[test]
    fn anf_terms_examples() {
        let t = anf_terms(&bits("0010000"), 100).unwrap();
        assert_eq!(t.len(), 15);
        assert!(t.terms().iter().all(|m| m.len() == 2));
        assert_eq!(t.terms()[0], [0, 1]);

        let t = anf_terms(&bits("1000000"), 1).unwrap();
        assert_eq!(t.terms(), &[Vec::<usize>::new()]);
        assert_eq!(t.to_string(), "1");

        assert_eq!(anf_terms(&bits("00100010"), 28).unwrap().len(), 28);
        assert_eq!(anf_terms(&bits("0000"), 1).unwrap().to_string(), "0");
        assert_eq!(
            anf_terms(&bits("011"), 10).unwrap().to_string(),
            "x1 ^ x2 ^ x1*x2"
        );
    }

    #[test]
    fn term_limit_reports_exact_count() {
        assert_eq!(
            anf_terms(&bits("00100010"), 27),
            Err(Error::TermLimitExceeded {
                count: BigUint::from(28u32),
                limit: 27
            })
        );
        // 2^200 terms: never materialized
        let all = ReducedVector::ones(200);
        match anf_terms(&all, 1000) {
            Err(Error::TermLimitExceeded { count, .. }) => {
                assert_eq!(count, BigUint::from(1u32) << 200usize)
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
