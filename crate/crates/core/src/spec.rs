use alloc::vec::Vec;
use core::fmt;

use crate::{Error, ReducedVector, Result};

/// Which reading an index set carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum IndexKind {
    /// Valued numbers A(F): the input weights on which the function is 1.
    /// The matching vector is the carrier vector π.
    Valued,
    /// Polynomial numbers B(E): the monomial degrees present in the ANF.
    /// The matching vector is the reduced spectrum γ.
    Polynomial,
}

impl IndexKind {
    /// The other reading.
    pub fn dual(self) -> Self {
        match self {
            IndexKind::Valued => IndexKind::Polynomial,
            IndexKind::Polynomial => IndexKind::Valued,
        }
    }

    /// Lowercase tag used in text and structured records.
    pub fn as_str(self) -> &'static str {
        match self {
            IndexKind::Valued => "valued",
            IndexKind::Polynomial => "polynomial",
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A symmetric function given by `n` and a strictly increasing index set.
///
/// The empty index set denotes the constant-0 function.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawSpec"))]
pub struct FunctionSpec {
    n: usize,
    indices: Vec<usize>,
    kind: IndexKind,
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct RawSpec {
    n: usize,
    indices: Vec<usize>,
    kind: IndexKind,
}

#[cfg(feature = "serde")]
impl TryFrom<RawSpec> for FunctionSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        FunctionSpec::new(raw.n, raw.indices, raw.kind)
    }
}

impl FunctionSpec {
    /// Validates and builds a spec.
    pub fn new(n: usize, indices: Vec<usize>, kind: IndexKind) -> Result<Self> {
        validate_indices(n, &indices)?;
        Ok(FunctionSpec { n, indices, kind })
    }

    /// Shorthand for valued numbers A(F).
    pub fn valued(n: usize, indices: &[usize]) -> Result<Self> {
        Self::new(n, indices.to_vec(), IndexKind::Valued)
    }

    /// Shorthand for polynomial numbers B(E).
    pub fn polynomial(n: usize, indices: &[usize]) -> Result<Self> {
        Self::new(n, indices.to_vec(), IndexKind::Polynomial)
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The index set, strictly increasing.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// How the indices are read.
    pub fn kind(&self) -> IndexKind {
        self.kind
    }

    /// True for the constant-0 function.
    pub fn is_zero(&self) -> bool {
        self.indices.is_empty()
    }

    /// Indicator vector of the index set: bit `i` is 1 iff `i` is an index.
    pub fn to_vector(&self) -> ReducedVector {
        let mut v = ReducedVector::zeros(self.n);
        for &i in &self.indices {
            v.set(i, true);
        }
        v
    }

    /// Inverse of [`FunctionSpec::to_vector`].
    pub fn from_vector(v: &ReducedVector, kind: IndexKind) -> Self {
        FunctionSpec {
            n: v.n(),
            indices: v.positions().collect(),
            kind,
        }
    }
}

/// Checks that `indices` is strictly increasing and bounded by `n`.
pub(crate) fn validate_indices(n: usize, indices: &[usize]) -> Result<()> {
    for (pos, &i) in indices.iter().enumerate() {
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        if pos > 0 && indices[pos - 1] >= i {
            return Err(Error::NotStrictlyIncreasing { position: pos });
        }
    }
    Ok(())
}

/// An input to an `n`-variable symmetric function, reduced to its weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Assignment {
    n: usize,
    weight: usize,
}

impl Assignment {
    /// An assignment with `weight` ones among `n` variables.
    pub fn new(n: usize, weight: usize) -> Result<Self> {
        if weight > n {
            return Err(Error::WeightOutOfRange { weight, n });
        }
        Ok(Assignment { n, weight })
    }

    /// Reduces a full assignment `(x_1, …, x_n)` to its weight.
    pub fn from_bits(bits: &[bool]) -> Self {
        Assignment {
            n: bits.len(),
            weight: bits.iter().filter(|&&b| b).count(),
        }
    }

    /// Reduces the low `n` bits of `mask` (bit `j` is `x_{j+1}`). Requires `n <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64, "from_mask supports at most 64 variables");
        let masked = if n == 64 {
            mask
        } else {
            mask & ((1u64 << n) - 1)
        };
        Assignment {
            n,
            weight: masked.count_ones() as usize,
        }
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of variables set to 1.
    pub fn weight(&self) -> usize {
        self.weight
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn vector_from_spec_examples() {
        let v = FunctionSpec::polynomial(6, &[2]).unwrap().to_vector();
        assert_eq!(v.to_string(), "0010000");
        let v = FunctionSpec::polynomial(10, &[5, 7, 8])
            .unwrap()
            .to_vector();
        assert_eq!(v.to_string(), "00000101100");
        let v = FunctionSpec::valued(3, &[]).unwrap().to_vector();
        assert_eq!(v.to_string(), "0000");
    }

    #[test]
    fn spec_from_vector_examples() {
        let s = FunctionSpec::from_vector(&"0011001".parse().unwrap(), IndexKind::Valued);
        assert_eq!((s.n(), s.indices()), (6, &[2, 3, 6][..]));
        let s = FunctionSpec::from_vector(&"0000".parse().unwrap(), IndexKind::Valued);
        assert_eq!((s.n(), s.indices()), (3, &[][..]));
        assert!(s.is_zero());
        let s = FunctionSpec::from_vector(&"1".parse().unwrap(), IndexKind::Valued);
        assert_eq!((s.n(), s.indices()), (0, &[0][..]));
    }

    #[test]
    fn rejects_bad_index_sets() {
        assert_eq!(
            FunctionSpec::valued(3, &[1, 4]),
            Err(Error::IndexOutOfRange { index: 4, n: 3 })
        );
        assert_eq!(
            FunctionSpec::valued(5, &[3, 1]),
            Err(Error::NotStrictlyIncreasing { position: 1 })
        );
        assert_eq!(
            FunctionSpec::new(5, vec![2, 2], IndexKind::Polynomial),
            Err(Error::NotStrictlyIncreasing { position: 1 })
        );
    }

    #[test]
    fn assignment_reduces_to_weight() {
        let a = Assignment::from_bits(&[true, true, false, false, false, false]);
        assert_eq!((a.n(), a.weight()), (6, 2));
        assert_eq!(Assignment::from_mask(4, 0xff).weight(), 4);
        assert_eq!(Assignment::from_mask(64, u64::MAX).weight(), 64);
        assert_eq!(
            Assignment::new(3, 4),
            Err(Error::WeightOutOfRange { weight: 4, n: 3 })
        );
    }
}
