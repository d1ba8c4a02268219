//! The `sbf` command line.
//!
//! Exit status: 0 on success, 1 on usage or input errors, 2 when `verify`
//! finds a disagreement between the implementations.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sbf_core::{
    anf_terms, eval_carrier, eval_spectrum, transform_vector, Assignment, FunctionSpec, IndexKind,
    ReducedVector,
};
use serde::Serialize;

use crate::bench::{bench_suite, emit_csv, BenchConfig, BenchRow, IndexSets};
use crate::format::{parse_index_list, read_spec, TransformRecord};
use crate::svg::emit_svg_plot;
use crate::table::{emit_table_csv, reproduce_table};
use crate::verify::{verify, VerifyConfig};
use crate::{Result, ToolError};

#[derive(Debug, Parser)]
#[command(
    name = "sbf",
    version,
    about = "Carrier vector / reduced Zhegalkin spectrum transforms for symmetric Boolean functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Carrier vector π from polynomial numbers (or from a spectrum γ)
    ToCarrier {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reduced spectrum γ from valued numbers (or from a carrier vector π)
    ToSpectrum {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Transform an arbitrary vector; the result is read the other way round
    Transform {
        #[command(flatten)]
        input: InputArgs,
        /// Reading of the input
        #[arg(long, value_enum, default_value_t = KindArg::Valued)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate a function on an input weight or a full assignment
    Eval {
        #[command(flatten)]
        input: InputArgs,
        /// Reading of the input (default: the record's kind, else valued)
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expand into explicit Zhegalkin monomials
    Anf {
        #[command(flatten)]
        input: InputArgs,
        /// Reading of the input (default: the record's kind, else polynomial)
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        #[arg(long, default_value_t = 10_000)]
        term_limit: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check combinatorial == triangle == truth-table oracle
    Verify {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 8)]
        exhaustive_max_n: usize,
        #[arg(long, default_value_t = 500)]
        random_sets: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Operation-count benchmark, CSV on stdout
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Number of variables
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    source: Source,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Comma-separated index set, e.g. 5,7,8
    #[arg(long)]
    indices: Option<String>,
    /// Bit string, index 0 leftmost, e.g. 0011001
    #[arg(long)]
    vector: Option<String>,
    /// JSON record {"n", "indices", "kind"}; `-` reads stdin
    #[arg(long)]
    spec: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct PointArgs {
    /// Number of variables set to 1
    #[arg(long)]
    weight: Option<usize>,
    /// Full assignment x_1..x_n as a bit string
    #[arg(long)]
    assignment: Option<String>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Comma-separated variable counts
    #[arg(long, default_value = "16,32,64,128,256,512,1024,2048,4096")]
    n: String,
    /// Single polynomial number (default 16)
    #[arg(long, conflicts_with_all = ["indices", "random_size"])]
    b: Option<usize>,
    /// Fixed polynomial-number set for every n
    #[arg(long, conflicts_with = "random_size")]
    indices: Option<String>,
    /// Draw this many random polynomial numbers per n
    #[arg(long)]
    random_size: Option<usize>,
    #[arg(long, default_value_t = 5)]
    reps: usize,
    #[arg(long, default_value_t = 1)]
    warmup: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Reproduce the published efficiency table instead (CSV only)
    #[arg(long, conflicts_with_all = ["b", "indices", "random_size", "svg", "format"])]
    table: bool,
    #[arg(long, value_enum, default_value_t = BenchFormat::Csv)]
    format: BenchFormat,
    /// Write the result here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a log-log SVG chart
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Valued,
    Polynomial,
}

impl From<KindArg> for IndexKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Valued => IndexKind::Valued,
            KindArg::Polynomial => IndexKind::Polynomial,
        }
    }
}

enum Outcome {
    Ok,
    VerifyFailed,
}

/// A resolved input: the vector and, when it came from a record, its kind.
struct Resolved {
    vector: ReducedVector,
    kind: Option<IndexKind>,
}

fn resolve(input: &InputArgs) -> Result<Resolved> {
    let s = &input.source;
    let (vector, kind) = if let Some(list) = &s.indices {
        let n = input
            .n
            .ok_or_else(|| ToolError::Usage("--n is required with --indices".into()))?;
        let spec = FunctionSpec::new(n, parse_index_list(list)?, IndexKind::Valued)?;
        (spec.to_vector(), None)
    } else if let Some(bits) = &s.vector {
        (bits.parse::<ReducedVector>()?, None)
    } else if let Some(path) = &s.spec {
        let spec = read_spec(path)?;
        (spec.to_vector(), Some(spec.kind()))
    } else {
        unreachable!("clap enforces one input source")
    };
    if let Some(n) = input.n {
        if n != vector.n() {
            return Err(ToolError::Usage(format!(
                "--n {n} does not match input with n = {}",
                vector.n()
            )));
        }
    }
    Ok(Resolved { vector, kind })
}

fn parse_assignment(s: &str) -> Result<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(ToolError::parse(
                "assignment",
                format!("unexpected {other:?}"),
            )),
        })
        .collect()
}

fn expect_kind(found: Option<IndexKind>, expected: IndexKind) -> Result<()> {
    match found {
        Some(k) if k != expected => Err(ToolError::Usage(format!(
            "record has kind {k}, this command expects {expected}"
        ))),
        _ => Ok(()),
    }
}

fn write_transform(
    out: &mut dyn Write,
    input: &ReducedVector,
    output_kind: IndexKind,
    format: Format,
) -> Result<()> {
    let result = transform_vector(input);
    match format {
        Format::Text => writeln!(out, "{}", result.vector)?,
        Format::Json => {
            let rec = TransformRecord::new(&result, output_kind);
            writeln!(out, "{}", serde_json::to_string(&rec)?)?
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct EvalRecord {
    n: usize,
    weight: usize,
    value: u8,
}

#[derive(Serialize)]
struct AnfRecord {
    n: usize,
    count: usize,
    /// 1-based variable numbers; `[]` is the constant 1
    terms: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct BenchRecord<'a> {
    n: usize,
    index_set: &'a [usize],
    method: &'static str,
    measured_ops: u64,
    formula_ops: Option<u64>,
    wall_time_ns: u128,
}

impl<'a> From<&'a BenchRow> for BenchRecord<'a> {
    fn from(r: &'a BenchRow) -> Self {
        BenchRecord {
            n: r.n,
            index_set: &r.index_set,
            method: r.method.as_str(),
            measured_ops: r.measured_ops,
            formula_ops: r.formula_ops,
            wall_time_ns: r.wall_time.as_nanos(),
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    match cli.command {
        Command::ToCarrier { input, format } => {
            let r = resolve(&input)?;
            expect_kind(r.kind, IndexKind::Polynomial)?;
            write_transform(out, &r.vector, IndexKind::Valued, format)?;
        }
        Command::ToSpectrum { input, format } => {
            let r = resolve(&input)?;
            expect_kind(r.kind, IndexKind::Valued)?;
            write_transform(out, &r.vector, IndexKind::Polynomial, format)?;
        }
        Command::Transform {
            input,
            kind,
            format,
        } => {
            let r = resolve(&input)?;
            let kind: IndexKind = kind.into();
            expect_kind(r.kind, kind)?;
            write_transform(out, &r.vector, kind.dual(), format)?;
        }
        Command::Eval {
            input,
            kind,
            point,
            format,
        } => {
            let r = resolve(&input)?;
            let kind = kind
                .map(IndexKind::from)
                .or(r.kind)
                .unwrap_or(IndexKind::Valued);
            let x = match (point.weight, &point.assignment) {
                (Some(w), _) => Assignment::new(r.vector.n(), w)?,
                (None, Some(bits)) => {
                    let x = Assignment::from_bits(&parse_assignment(bits)?);
                    if x.n() != r.vector.n() {
                        return Err(sbf_core::Error::DimensionMismatch {
                            expected: r.vector.n(),
                            found: x.n(),
                        }
                        .into());
                    }
                    x
                }
                (None, None) => unreachable!("clap enforces one evaluation point"),
            };
            let value = match kind {
                IndexKind::Valued => eval_carrier(&r.vector, &x)?,
                IndexKind::Polynomial => eval_spectrum(&r.vector, &x)?,
            };
            match format {
                Format::Text => writeln!(out, "{}", u8::from(value))?,
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&EvalRecord {
                        n: x.n(),
                        weight: x.weight(),
                        value: value.into(),
                    })?
                )?,
            }
        }
        Command::Anf {
            input,
            kind,
            term_limit,
            format,
        } => {
            let r = resolve(&input)?;
            let kind = kind
                .map(IndexKind::from)
                .or(r.kind)
                .unwrap_or(IndexKind::Polynomial);
            let gamma = match kind {
                IndexKind::Polynomial => r.vector,
                IndexKind::Valued => transform_vector(&r.vector).vector,
            };
            let terms = anf_terms(&gamma, term_limit)?;
            match format {
                Format::Text => writeln!(out, "{terms}")?,
                Format::Json => {
                    let rec = AnfRecord {
                        n: terms.n(),
                        count: terms.len(),
                        terms: terms
                            .terms()
                            .iter()
                            .map(|t| t.iter().map(|v| v + 1).collect())
                            .collect(),
                    };
                    writeln!(out, "{}", serde_json::to_string(&rec)?)?
                }
            }
        }
        Command::Verify {
            max_n,
            exhaustive_max_n,
            random_sets,
            seed,
        } => {
            let report = verify(&VerifyConfig {
                max_n,
                exhaustive_max_n,
                random_sets,
                seed,
            })?;
            if !report.passed() {
                for m in report.mismatches.iter().take(10) {
                    writeln!(
                        err,
                        "mismatch n={} set={:?}: combinatorial={} triangle={} oracle={} involution_ok={}",
                        m.n, m.indices, m.combinatorial, m.triangle, m.oracle, m.involution_ok
                    )?;
                }
                writeln!(
                    out,
                    "FAILED: {} of {} cases disagree",
                    report.mismatches.len(),
                    report.cases
                )?;
                return Ok(Outcome::VerifyFailed);
            }
            writeln!(
                out,
                "ok: {} cases, combinatorial == triangle == oracle",
                report.cases
            )?;
        }
        Command::Bench(args) => bench(args, out)?,
    }
    Ok(Outcome::Ok)
}

fn bench(args: BenchArgs, out: &mut dyn Write) -> Result<()> {
    let csv = if args.table {
        emit_table_csv(&reproduce_table()?)?
    } else {
        let sets = match (args.b, &args.indices, args.random_size) {
            (Some(b), _, _) => IndexSets::Fixed(vec![b]),
            (_, Some(list), _) => IndexSets::Fixed(parse_index_list(list)?),
            (_, _, Some(size)) => IndexSets::Random { size },
            _ => IndexSets::Fixed(vec![16]),
        };
        let config = BenchConfig {
            ns: parse_index_list(&args.n)?,
            sets,
            repetitions: args.reps,
            warmup: args.warmup,
            seed: args.seed,
        };
        let rows = bench_suite(&config)?;
        if let Some(path) = &args.svg {
            std::fs::write(path, emit_svg_plot(&rows)?)?;
        }
        match args.format {
            BenchFormat::Csv => emit_csv(&rows)?,
            BenchFormat::Json => {
                let records: Vec<BenchRecord> = rows.iter().map(BenchRecord::from).collect();
                let mut bytes = serde_json::to_vec(&records)?;
                bytes.push(b'\n');
                bytes
            }
        }
    };
    match &args.out {
        Some(path) => std::fs::write(path, csv)?,
        None => out.write_all(&csv)?,
    }
    Ok(())
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    1
                }
            };
        }
    };
    match dispatch(cli, out, err) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::VerifyFailed) => 2,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
