//! Operation-count benchmark: combinatorial method vs transeunt triangle.
//!
//! Op counts are deterministic and are the primary metric. Wall time is the
//! median over `repetitions` timed runs after `warmup` untimed ones.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sbf_core::complexity::{measure_combinatorial, st_reference};
use sbf_core::{carrier_from_set, triangle_transform, FunctionSpec};

use crate::format::{join_indices, parse_index_list};
use crate::{Result, ToolError};

pub const CSV_HEADER: [&str; 6] = [
    "n",
    "index_set",
    "method",
    "measured_ops",
    "formula_ops",
    "wall_time_ns",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Combinatorial,
    Triangle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Combinatorial => "combinatorial",
            Method::Triangle => "triangle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = ToolError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "combinatorial" => Ok(Method::Combinatorial),
            "triangle" => Ok(Method::Triangle),
            other => Err(ToolError::parse("method", other)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub n: usize,
    pub index_set: Vec<usize>,
    pub method: Method,
    pub measured_ops: u64,
    /// `S_1` for combinatorial singletons, `n(n+1)/2` for the triangle.
    pub formula_ops: Option<u64>,
    pub wall_time: Duration,
}

/// Where each configuration's index set comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexSets {
    /// The same set for every `n`.
    Fixed(Vec<usize>),
    /// `size` distinct indices drawn uniformly from `0..=n`.
    Random { size: usize },
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub ns: Vec<usize>,
    pub sets: IndexSets,
    pub repetitions: usize,
    pub warmup: usize,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            ns: (4..=12).map(|k| 1usize << k).collect(),
            sets: IndexSets::Fixed(vec![16]),
            repetitions: 5,
            warmup: 1,
            seed: 0,
        }
    }
}

fn median_time<T>(warmup: usize, reps: usize, mut f: impl FnMut() -> T) -> Duration {
    for _ in 0..warmup {
        std::hint::black_box(f());
    }
    let mut samples: Vec<Duration> = (0..reps.max(1))
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(f());
            start.elapsed()
        })
        .collect();
    samples.sort_unstable();
    samples[samples.len() / 2]
}

/// Runs both methods for every configured `n`. Two rows per `n`, the
/// combinatorial row first.
pub fn bench_suite(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut rows = Vec::with_capacity(config.ns.len() * 2);
    for &n in &config.ns {
        let indices = match &config.sets {
            IndexSets::Fixed(set) => set.clone(),
            IndexSets::Random { size } => {
                if *size == 0 || *size > n + 1 {
                    return Err(ToolError::Usage(format!(
                        "random set size {size} impossible for n = {n}"
                    )));
                }
                let mut set = sample(&mut rng, n + 1, *size).into_vec();
                set.sort_unstable();
                set
            }
        };
        rows.push(bench_combinatorial(n, &indices, config)?);
        rows.push(bench_triangle(n, &indices, config)?);
    }
    Ok(rows)
}

fn bench_combinatorial(n: usize, indices: &[usize], config: &BenchConfig) -> Result<BenchRow> {
    let m = measure_combinatorial(n, indices)?;
    let wall_time = median_time(config.warmup, config.repetitions, || {
        carrier_from_set(n, indices)
    });
    Ok(BenchRow {
        n,
        index_set: indices.to_vec(),
        method: Method::Combinatorial,
        measured_ops: m.measured_ops(),
        formula_ops: m.formula_ops,
        wall_time,
    })
}

fn bench_triangle(n: usize, indices: &[usize], config: &BenchConfig) -> Result<BenchRow> {
    let input = FunctionSpec::polynomial(n, indices)?.to_vector();
    let run = triangle_transform(&input);
    let wall_time = median_time(config.warmup, config.repetitions, || {
        triangle_transform(&input)
    });
    Ok(BenchRow {
        n,
        index_set: indices.to_vec(),
        method: Method::Triangle,
        measured_ops: run.xor_ops,
        formula_ops: Some(st_reference(n)),
        wall_time,
    })
}

/// CSV with header `n,index_set,method,measured_ops,formula_ops,wall_time_ns`.
/// Index sets are `;`-separated; an absent formula is an empty field.
pub fn emit_csv(rows: &[BenchRow]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            join_indices(&r.index_set, ";"),
            r.method.to_string(),
            r.measured_ops.to_string(),
            r.formula_ops.map(|f| f.to_string()).unwrap_or_default(),
            r.wall_time.as_nanos().to_string(),
        ])?;
    }
    w.into_inner().map_err(|e| ToolError::Io(e.into_error()))
}

pub fn parse_csv(bytes: &[u8]) -> Result<Vec<BenchRow>> {
    let mut r = csv::Reader::from_reader(bytes);
    let header = r.headers()?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(ToolError::parse("bench csv header", format!("{header:?}")));
    }
    let num = |s: &str, what: &'static str| -> Result<u64> {
        s.parse()
            .map_err(|e| ToolError::parse(what, format!("{s:?}: {e}")))
    };
    r.records()
        .map(|rec| {
            let rec = rec?;
            let field = |i: usize| rec.get(i).unwrap_or("");
            Ok(BenchRow {
                n: num(field(0), "n")? as usize,
                index_set: parse_index_list(&field(1).replace(';', ","))?,
                method: field(2).parse()?,
                measured_ops: num(field(3), "measured_ops")?,
                formula_ops: match field(4) {
                    "" => None,
                    s => Some(num(s, "formula_ops")?),
                },
                wall_time: Duration::from_nanos(num(field(5), "wall_time_ns")?),
            })
        })
        .collect()
}

/// `measured_ops(2n) / measured_ops(n)` for consecutive rows of `method`,
/// in row order.
pub fn doubling_ratios(rows: &[BenchRow], method: Method) -> Vec<(usize, f64)> {
    let picked: Vec<&BenchRow> = rows.iter().filter(|r| r.method == method).collect();
    picked
        .windows(2)
        .filter(|w| w[1].n == 2 * w[0].n && w[0].measured_ops > 0)
        .map(|w| (w[1].n, w[1].measured_ops as f64 / w[0].measured_ops as f64))
        .collect()
}
