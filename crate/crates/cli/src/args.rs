use std::path::PathBuf;

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use xft::{Convention, SignalKind};

#[derive(Debug, Parser)]
#[command(
    name = "xft",
    version,
    about = "Fast Hermite-grid Fourier and fractional Fourier transforms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Standard Fourier transform (z = i).
    Fft(TransformArgs),
    /// Fractional transform at z = z_mod * exp(i z_arg).
    Frft(FrftArgs),
    /// Compare every corpus signal with its closed-form transform.
    CorpusCheck(CorpusArgs),
    /// Time the fast transform for N = 2^k.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Paper,
    Namias,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Paper => Convention::Paper,
            ConventionArg::Namias => Convention::Namias,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,

    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["signal", "input"])))]
pub struct TransformArgs {
    /// Number of grid nodes (defaults to the row count with --input).
    #[arg(long, value_parser = parse_positive, required_unless_present = "input")]
    pub n: Option<usize>,

    /// Built-in corpus signal.
    #[arg(long, value_parser = signal_parser())]
    pub signal: Option<SignalKind>,

    /// Signal parameter, repeatable (b, beta, m, omega).
    #[arg(long = "param", value_name = "KEY=VALUE", value_parser = parse_param, requires = "signal")]
    pub params: Vec<(String, f64)>,

    /// CSV file with one column (real) or two columns (re, im).
    #[arg(long, conflicts_with_all = ["signal", "compare", "params"])]
    pub input: Option<PathBuf>,

    /// Add the closed-form reference and the error columns.
    #[arg(long)]
    pub compare: bool,

    /// Normalization of the reference values [default: resolved by the dense oracle].
    #[arg(long, value_enum)]
    pub convention: Option<ConventionArg>,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct FrftArgs {
    #[arg(long, default_value_t = 1.0)]
    pub z_mod: f64,

    /// Argument of z in radians.
    #[arg(long, allow_hyphen_values = true)]
    pub z_arg: f64,

    #[command(flatten)]
    pub transform: TransformArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CorpusArgs {
    #[arg(long, value_parser = parse_positive, default_value_t = 512)]
    pub n: usize,

    /// Argument of z for the entries with closed forms on |z| = 1.
    #[arg(long, allow_hyphen_values = true, default_value_t = 1.0)]
    pub z_arg: f64,

    #[arg(long, value_enum)]
    pub convention: Option<ConventionArg>,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 10)]
    pub min_exp: u32,

    #[arg(long, default_value_t = 19)]
    pub max_exp: u32,

    /// Timed runs per size; the minimum is reported.
    #[arg(long, value_parser = parse_positive, default_value_t = 3)]
    pub repeats: usize,

    #[command(flatten)]
    pub output: OutputArgs,
}

fn signal_parser() -> impl TypedValueParser<Value = SignalKind> {
    PossibleValuesParser::new(SignalKind::ALL.map(SignalKind::name))
        .map(|s| s.parse::<SignalKind>().expect("restricted to corpus names"))
}

fn parse_positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_param(s: &str) -> Result<(String, f64), String> {
    let (key, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected KEY=VALUE, got '{s}'"))?;
    let value: f64 = value
        .trim()
        .parse()
        .map_err(|_| format!("'{value}' is not a number"))?;
    Ok((key.trim().to_string(), value))
}
