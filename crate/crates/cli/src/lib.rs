//! Command-line driver for the `xft` transforms: samples corpus or file
//! signals, runs the fast transform and writes plot-ready CSV or JSON.

pub mod args;
pub mod input;
pub mod report;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::time::Instant;

use clap::Parser;
use serde::Serialize;
use thiserror::Error;
use xft::{xft_forward, Complex64, ComplexSignal, SignalSpec, XftError};

pub use args::{Cli, Command, OutputFormat};
pub use input::load_signal;
pub use report::{compute, write_csv, write_json, ConventionChoice, Job, Source, TransformReport};

use args::{BenchArgs, ConventionArg, CorpusArgs, OutputArgs, TransformArgs};
use report::{fmt_f64, write_rows};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Numeric(#[from] XftError),

    #[error("{0}")]
    Usage(String),

    #[error("line {line}: {message}")]
    Input { line: u64, message: String },

    #[error("expected {expected} rows, found {actual}")]
    RowCount { expected: usize, actual: usize },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Output(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn category(&self) -> &'static str {
        match self {
            CliError::Numeric(e) => e.category(),
            CliError::Usage(_) => "usage",
            CliError::Input { .. } | CliError::RowCount { .. } => "input",
            CliError::Io { .. } | CliError::Output(_) | CliError::Json(_) | CliError::Csv(_) => {
                "io"
            }
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// Sizes the global rayon pool from `XFT_THREADS`, if set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("XFT_THREADS") else {
        return Ok(());
    };
    let threads = match value.trim().parse::<usize>() {
        Ok(t) if t > 0 => t,
        _ => {
            return Err(CliError::Usage(format!(
                "XFT_THREADS must be a positive integer, got '{value}'"
            )))
        }
    };
    // A pool that already exists keeps its size.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}

fn convention_choice(arg: Option<ConventionArg>) -> Result<ConventionChoice, CliError> {
    match arg {
        Some(c) => Ok(ConventionChoice::explicit(c.into())),
        None => ConventionChoice::resolved(),
    }
}

fn job_from_args(args: &TransformArgs, z: Option<Complex64>) -> Result<Job, CliError> {
    let source = match (&args.signal, &args.input) {
        (Some(kind), None) => Source::Corpus(SignalSpec::new(
            *kind,
            args.params.iter().cloned().collect(),
        )?),
        (None, Some(path)) => Source::File(path.clone()),
        _ => {
            return Err(CliError::Usage(
                "give exactly one of --signal and --input".into(),
            ))
        }
    };
    Ok(Job {
        source,
        n: args.n,
        z,
        compare: args.compare,
        convention: convention_choice(args.convention)?,
    })
}

/// Parses `argv` and computes the `fft`/`frft` report without writing it.
pub fn report_from_argv<I, T>(argv: I) -> Result<TransformReport, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError::Usage(e.to_string()))?;
    match &cli.command {
        Command::Fft(a) => compute(&job_from_args(a, None)?),
        Command::Frft(a) => compute(&job_from_args(
            &a.transform,
            Some(Complex64::from_polar(a.z_mod, a.z_arg)),
        )?),
        _ => Err(CliError::Usage("expected fft or frft".into())),
    }
}

fn open_output<'a>(
    out: &Option<std::path::PathBuf>,
    stdout: Box<dyn Write + 'a>,
) -> Result<Box<dyn Write + 'a>, CliError> {
    match out {
        Some(path) => {
            let file = File::create(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(stdout),
    }
}

/// Runs one parsed command, writing to `--out` or `stdout`.
pub fn run<W: Write>(cli: &Cli, stdout: W) -> Result<(), CliError> {
    let stdout: Box<dyn Write + '_> = Box::new(stdout);
    match &cli.command {
        Command::Fft(a) => emit_report(&compute(&job_from_args(a, None)?)?, &a.output, stdout),
        Command::Frft(a) => {
            let z = Complex64::from_polar(a.z_mod, a.z_arg);
            emit_report(
                &compute(&job_from_args(&a.transform, Some(z))?)?,
                &a.transform.output,
                stdout,
            )
        }
        Command::CorpusCheck(a) => emit_corpus(a, stdout),
        Command::Bench(a) => emit_bench(a, stdout),
    }
}

fn emit_report(
    report: &TransformReport,
    output: &OutputArgs,
    stdout: Box<dyn Write + '_>,
) -> Result<(), CliError> {
    let out = open_output(&output.out, stdout)?;
    match output.format {
        OutputFormat::Csv => write_csv(report, out),
        OutputFormat::Json => write_json(report, out),
    }
}

/// One corpus entry compared with its closed form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusRow {
    pub signal: String,
    pub z_re: f64,
    pub z_im: f64,
    pub n: usize,
    pub max_norm: f64,
    pub max_norm_real: f64,
    pub max_norm_imag: f64,
}

type CorpusEntry = (&'static str, Vec<(&'static str, f64)>, Option<Complex64>);

/// Every corpus signal that has a closed form: the `z = i` entries through
/// the standard transform, the `|z| = 1` entries at `z = exp(i phi)`.
pub fn corpus_check(
    n: usize,
    phi: f64,
    convention: &ConventionChoice,
) -> Result<Vec<CorpusRow>, CliError> {
    let boundary = Some(Complex64::from_polar(1.0, phi));
    let m = if n % 2 == 1 { 1.0 } else { 0.5 };
    let entries: [CorpusEntry; 6] = [
        ("chirp_cos", vec![], None),
        ("cauchy_exp", vec![], None),
        ("rect", vec![], None),
        ("harmonic", vec![("m", m)], None),
        ("gauss_beta", vec![("beta", 2.0)], boundary),
        ("constant_one", vec![], boundary),
    ];
    entries
        .into_iter()
        .map(|(name, params, z)| {
            let report = compute(&Job {
                source: Source::Corpus(SignalSpec::named(name, &params)?),
                n: Some(n),
                z,
                compare: true,
                convention: convention.clone(),
            })?;
            let s = &report.summary;
            Ok(CorpusRow {
                signal: report.metadata.source.clone(),
                z_re: report.metadata.z_re,
                z_im: report.metadata.z_im,
                n,
                max_norm: s.max_norm.unwrap_or_default(),
                max_norm_real: s.max_norm_real.unwrap_or_default(),
                max_norm_imag: s.max_norm_imag.unwrap_or_default(),
            })
        })
        .collect()
}

fn emit_corpus(a: &CorpusArgs, stdout: Box<dyn Write + '_>) -> Result<(), CliError> {
    let rows = corpus_check(a.n, a.z_arg, &convention_choice(a.convention)?)?;
    let out = open_output(&a.output.out, stdout)?;
    match a.output.format {
        OutputFormat::Json => write_json(&rows, out),
        OutputFormat::Csv => {
            let header = [
                "signal",
                "z_re",
                "z_im",
                "n",
                "max_norm",
                "max_norm_real",
                "max_norm_imag",
            ];
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.signal.clone(),
                        fmt_f64(r.z_re),
                        fmt_f64(r.z_im),
                        r.n.to_string(),
                        fmt_f64(r.max_norm),
                        fmt_f64(r.max_norm_real),
                        fmt_f64(r.max_norm_imag),
                    ]
                })
                .collect();
            write_rows(&header, &table, out)
        }
    }
}

/// Largest size `bench` accepts.
pub const MAX_BENCH_EXP: u32 = 24;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchTable {
    pub n: Vec<usize>,
    pub seconds: Vec<f64>,
}

/// Best-of-`repeats` wall time of `xft_forward` at `N = 2^k`, after one
/// untimed warm-up call per size.
pub fn bench(min_exp: u32, max_exp: u32, repeats: usize) -> Result<BenchTable, CliError> {
    if min_exp > max_exp || max_exp > MAX_BENCH_EXP {
        return Err(CliError::Usage(format!(
            "need min-exp <= max-exp <= {MAX_BENCH_EXP}, got {min_exp}..{max_exp}"
        )));
    }
    if repeats == 0 {
        return Err(CliError::Usage("repeats must be at least 1".into()));
    }
    let mut table = BenchTable {
        n: Vec::new(),
        seconds: Vec::new(),
    };
    for k in min_exp..=max_exp {
        let n = 1usize << k;
        let g = ComplexSignal::new(
            (0..n)
                .map(|j| Complex64::new((0.37 * j as f64).cos(), (0.11 * j as f64).sin()))
                .collect(),
        )?;
        xft_forward(&g)?;
        let mut best = f64::INFINITY;
        for _ in 0..repeats {
            let start = Instant::now();
            let out = xft_forward(&g)?;
            best = best.min(start.elapsed().as_secs_f64());
            std::hint::black_box(out);
        }
        table.n.push(n);
        table.seconds.push(best);
    }
    Ok(table)
}

fn emit_bench(a: &BenchArgs, stdout: Box<dyn Write + '_>) -> Result<(), CliError> {
    let table = bench(a.min_exp, a.max_exp, a.repeats)?;
    let out = open_output(&a.output.out, stdout)?;
    match a.output.format {
        OutputFormat::Json => write_json(&table, out),
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = table
                .n
                .iter()
                .zip(&table.seconds)
                .map(|(n, s)| vec![n.to_string(), fmt_f64(*s)])
                .collect();
            write_rows(&["n", "seconds"], &rows, out)
        }
    }
}
