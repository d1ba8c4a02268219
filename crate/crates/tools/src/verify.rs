//! Three-way check: combinatorial method == transeunt triangle == truth-table
//! ANF oracle, plus the involution, over every non-empty index set for small
//! `n` and seeded random sets above that.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sbf_core::baseline::{anf_oracle, ORACLE_MAX_N};
use sbf_core::{
    spectrum_from_set, transform_vector, triangle_transform, FunctionSpec, ReducedVector,
};

use crate::{Result, ToolError};

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_n: usize,
    /// Every non-empty subset of `0..=n` is checked for `n` up to this.
    pub exhaustive_max_n: usize,
    /// Random sets per `n` above `exhaustive_max_n`.
    pub random_sets: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 12,
            exhaustive_max_n: 8,
            random_sets: 500,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub indices: Vec<usize>,
    pub combinatorial: ReducedVector,
    pub triangle: ReducedVector,
    pub oracle: ReducedVector,
    pub involution_ok: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub cases: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn check(n: usize, indices: Vec<usize>, report: &mut VerifyReport) -> Result<()> {
    let spec = FunctionSpec::valued(n, &indices)?;
    let input = spec.to_vector();
    let combinatorial = spectrum_from_set(n, &indices)?.vector;
    let triangle = triangle_transform(&input).output;
    let oracle = anf_oracle(&spec)?;
    let involution_ok = transform_vector(&combinatorial).vector == input;
    report.cases += 1;
    if combinatorial != triangle || combinatorial != oracle || !involution_ok {
        report.mismatches.push(Mismatch {
            n,
            indices,
            combinatorial,
            triangle,
            oracle,
            involution_ok,
        });
    }
    Ok(())
}

fn random_nonempty_subset(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    loop {
        let set: Vec<usize> = (0..=n).filter(|_| rng.random_bool(0.5)).collect();
        if !set.is_empty() {
            return set;
        }
    }
}

pub fn verify(config: &VerifyConfig) -> Result<VerifyReport> {
    if config.max_n > ORACLE_MAX_N {
        return Err(ToolError::Usage(format!(
            "--max-n {} exceeds the oracle bound of {ORACLE_MAX_N}",
            config.max_n
        )));
    }
    let mut report = VerifyReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for n in 0..=config.max_n {
        if n <= config.exhaustive_max_n {
            for mask in 1u64..(1 << (n + 1)) {
                let set = (0..=n).filter(|i| mask >> i & 1 == 1).collect();
                check(n, set, &mut report)?;
            }
        } else {
            for _ in 0..config.random_sets {
                let set = random_nonempty_subset(&mut rng, n);
                check(n, set, &mut report)?;
            }
        }
    }
    Ok(report)
}
