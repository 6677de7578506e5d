//! The `commtrace` command line.
//!
//! Payloads go to stdout (or `--output`), diagnostics to stderr. Exit codes:
//! 0 success, 2 usage error, 3 domain or regime error, 1 anything else.

mod format;

pub use format::{decimal12, exact_with_decimal};

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{ExactRational, Partition, Staircase, TypeVector};
use crate::error::{Error, Result};
use crate::haar::{estimate_moments, EstimateConfig};
use crate::moments::{self, finite_commutator_average, FiniteGroup, MomentQuery};
use crate::repdims::{self, GroupFamily, GroupKind};
use crate::tableaux;

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 42;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "commtrace", version, about = "Exact and Monte Carlo moments of traces of commutator products")]
pub struct Cli {
    /// Write the payload here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Payload format. Without it, tableaux/dims/moments/finite print plain
    /// text, simulate prints JSON and report prints CSV.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Sampling threads (defaults to the available parallelism).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count up-down tableaux, or up-down staircase tableaux with --entries.
    Tableaux(TableauxArgs),
    /// Dimension of an irreducible representation.
    Dims(DimsArgs),
    /// Exact moment E[T^r conj(T)^s].
    Moments(MomentsArgs),
    /// Monte Carlo moment estimates.
    Simulate(SimulateArgs),
    /// Exact moments against their Gaussian limits over several n.
    Report(ReportArgs),
    /// Commutator averages of characters of a small finite group.
    Finite(FiniteArgs),
}

#[derive(Debug, Args)]
pub struct TableauxArgs {
    /// Comma-separated parts; "" is the empty partition.
    #[arg(long, allow_hyphen_values = true)]
    pub shape: Option<String>,
    #[arg(long)]
    pub r: Option<usize>,
    /// Maximum number of rows of every intermediate shape.
    #[arg(long)]
    pub height_bound: Option<usize>,
    /// Staircase height (defaults to the number of entries).
    #[arg(long)]
    pub height: Option<usize>,
    /// Staircase entries, e.g. "1,1,-1".
    #[arg(long, allow_hyphen_values = true)]
    pub entries: Option<String>,
    /// Staircase type vector, e.g. "-1,1,1,1,-1".
    #[arg(long = "type", allow_hyphen_values = true)]
    pub type_vector: Option<String>,
}

#[derive(Debug, Args)]
pub struct DimsArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub shape: Option<String>,
    /// Alias for --n with unitary staircases.
    #[arg(long)]
    pub height: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub entries: Option<String>,
}

#[derive(Debug, Args)]
pub struct MomentsArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long, default_value_t = 0)]
    pub s: usize,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = 4)]
    pub r_max: usize,
    #[arg(long, default_value_t = 0)]
    pub s_max: usize,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long, default_value_t = 0)]
    pub s: usize,
    /// Comma-separated values of n.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n_list: Vec<usize>,
    /// Add Monte Carlo estimates with this many samples per row.
    #[arg(long)]
    pub samples: Option<usize>,
}

#[derive(Debug, Args)]
pub struct FiniteArgs {
    /// s3 or q8.
    #[arg(long)]
    pub group: String,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) => EXIT_USAGE,
        Error::Domain(_) | Error::Regime(_) | Error::Refused(_) => EXIT_DOMAIN,
        _ => EXIT_FAILURE,
    }
}

/// Entry point for the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    execute(args, &mut io::stdout().lock(), &mut io::stderr().lock())
}

/// Parses `args` and runs the command, writing the payload to `stdout`
/// (unless `--output` is given) and diagnostics to `stderr`.
pub fn execute<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };

    let mut payload = Vec::new();
    let result = run(&cli, &mut payload, stderr).and_then(|()| match &cli.output {
        Some(path) => File::create(path)?.write_all(&payload).map_err(Error::from),
        None => stdout.write_all(&payload).map_err(Error::from),
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn parse_group(s: &str) -> Result<GroupKind> {
    s.parse()
}

fn family(kind: GroupKind, n: usize) -> Result<GroupFamily> {
    GroupFamily::new(kind, n)
}

fn to_usage(e: Error) -> Error {
    match e {
        Error::Domain(m) => Error::Parse(m),
        other => other,
    }
}

/// Runs an already parsed command line.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Tableaux(a) => cmd_tableaux(a, cli.format, out),
        Command::Dims(a) => cmd_dims(a, cli.format, out),
        Command::Moments(a) => cmd_moments(a, cli.format, out),
        Command::Simulate(a) => cmd_simulate(a, cli, out),
        Command::Report(a) => cmd_report(a, cli, out, err),
        Command::Finite(a) => cmd_finite(a, cli.format, out),
    }
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn write_csv<T: Serialize>(out: &mut dyn Write, rows: &[T]) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(true).from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct CountRow {
    shape: String,
    length: usize,
    height_bound: Option<usize>,
    #[serde(rename = "type")]
    type_vector: Option<String>,
    count: String,
}

pub fn cmd_tableaux(a: &TableauxArgs, format: Option<OutputFormat>, out: &mut dyn Write) -> Result<()> {
    let row = if let Some(entries) = &a.entries {
        let shape: Staircase = entries.parse()?;
        if let Some(h) = a.height {
            if h != shape.height() {
                return Err(Error::Parse(format!(
                    "--height {h} does not match {} entries",
                    shape.height()
                )));
            }
        }
        let ty: TypeVector = a
            .type_vector
            .as_deref()
            .ok_or_else(|| Error::Parse("--entries needs --type".into()))?
            .parse()?;
        CountRow {
            shape: shape.to_string(),
            length: ty.len(),
            height_bound: Some(shape.height()),
            type_vector: a.type_vector.clone(),
            count: tableaux::count_staircase(&shape, &ty).to_string(),
        }
    } else {
        let shape: Partition = a
            .shape
            .as_deref()
            .ok_or_else(|| Error::Parse("give --shape (or --entries with --type)".into()))?
            .parse()?;
        let r = a.r.ok_or_else(|| Error::Parse("--r is required with --shape".into()))?;
        let count = tableaux::count_updown(&shape, r, a.height_bound)?;
        CountRow {
            shape: shape.to_string(),
            length: r,
            height_bound: a.height_bound,
            type_vector: None,
            count: count.to_string(),
        }
    };
    match format {
        None => writeln!(out, "{}", row.count).map_err(Error::from),
        Some(OutputFormat::Json) => write_json(out, &row),
        Some(OutputFormat::Csv) => write_csv(out, &[row]),
    }
}

#[derive(Serialize)]
struct DimRow {
    group: String,
    n: usize,
    label: String,
    dimension: String,
}

pub fn cmd_dims(a: &DimsArgs, format: Option<OutputFormat>, out: &mut dyn Write) -> Result<()> {
    let kind = parse_group(&a.group)?;
    let (n, label, dim) = if kind == GroupKind::Unitary {
        let gamma: Staircase = a
            .entries
            .as_deref()
            .ok_or_else(|| Error::Parse("unitary dimensions need --entries".into()))?
            .parse()?;
        let n = a.n.or(a.height).unwrap_or(gamma.height());
        (n, gamma.to_string(), repdims::dim_unitary(&gamma, n)?)
    } else {
        let lambda: Partition = a.shape.as_deref().unwrap_or("").parse()?;
        let n = a.n.ok_or_else(|| Error::Parse("--n is required".into()))?;
        let fam = family(kind, n).map_err(to_usage)?;
        (n, lambda.to_string(), repdims::dim_partition(fam, &lambda)?)
    };
    let row = DimRow { group: kind.short_name().into(), n, label, dimension: dim.to_string() };
    match format {
        None => writeln!(out, "{}", row.dimension).map_err(Error::from),
        Some(OutputFormat::Json) => write_json(out, &row),
        Some(OutputFormat::Csv) => write_csv(out, &[row]),
    }
}

#[derive(Serialize)]
struct MomentRow {
    group: String,
    n: usize,
    k: usize,
    r: usize,
    s: usize,
    exact: ExactRational,
    decimal: String,
    term_count: usize,
}

pub fn cmd_moments(a: &MomentsArgs, format: Option<OutputFormat>, out: &mut dyn Write) -> Result<()> {
    let kind = parse_group(&a.group)?;
    let query = MomentQuery::new(family(kind, a.n).map_err(to_usage)?, a.k, a.r, a.s).map_err(to_usage)?;
    let sum = moments::exact_moment(&query)?;
    let row = MomentRow {
        group: kind.short_name().into(),
        n: a.n,
        k: a.k,
        r: a.r,
        s: a.s,
        decimal: decimal12(sum.value.to_f64()),
        exact: sum.value,
        term_count: sum.term_count,
    };
    match format {
        None => writeln!(out, "{} {}", row.exact, row.decimal).map_err(Error::from),
        Some(OutputFormat::Json) => write_json(out, &row),
        Some(OutputFormat::Csv) => write_csv(out, &[row]),
    }
}

fn workers(cli: &Cli) -> usize {
    cli.workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1)
}

pub fn cmd_simulate(a: &SimulateArgs, cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let kind = parse_group(&a.group)?;
    if a.samples == 0 || a.k == 0 {
        return Err(Error::Parse("--samples and --k must be positive".into()));
    }
    let config = EstimateConfig {
        group: family(kind, a.n).map_err(to_usage)?,
        k: a.k,
        r_max: a.r_max,
        s_max: a.s_max,
        sample_count: a.samples,
        seed: cli.seed,
        workers: workers(cli),
    };
    let result = estimate_moments(&config)?;
    match cli.format {
        None | Some(OutputFormat::Json) => write_json(out, &result),
        Some(OutputFormat::Csv) => write_csv(out, &result.moments),
    }
}

#[derive(Serialize)]
struct ReportRow {
    n: usize,
    exact: ExactRational,
    exact_decimal: String,
    limit: ExactRational,
    gap: ExactRational,
    gap_decimal: String,
    term_count: usize,
    empirical_re: Option<String>,
    empirical_im: Option<String>,
    stderr: Option<String>,
}

pub fn cmd_report(a: &ReportArgs, cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let kind = parse_group(&a.group)?;
    if a.k == 0 {
        return Err(Error::Parse("--k must be positive".into()));
    }
    let mut rows = Vec::new();
    for &n in &a.n_list {
        let report = family(kind, n)
            .and_then(|g| MomentQuery::new(g, a.k, a.r, a.s))
            .and_then(|q| moments::moment_report(&q));
        let report = match report {
            Ok(r) => r,
            Err(e @ (Error::Domain(_) | Error::Regime(_))) => {
                writeln!(err, "warning: skipping n = {n}: {e}")?;
                continue;
            }
            Err(e) => return Err(e),
        };
        let mut row = ReportRow {
            n,
            exact_decimal: decimal12(report.exact.to_f64()),
            gap_decimal: decimal12(report.gap.to_f64()),
            exact: report.exact,
            limit: report.limit,
            gap: report.gap,
            term_count: report.term_count,
            empirical_re: None,
            empirical_im: None,
            stderr: None,
        };
        if let Some(samples) = a.samples {
            let config = EstimateConfig {
                group: report.query.group,
                k: a.k,
                r_max: a.r,
                s_max: a.s,
                sample_count: samples,
                seed: cli.seed,
                workers: workers(cli),
            };
            let est = estimate_moments(&config)?;
            let m = est.get(a.r, a.s).expect("requested order is estimated");
            row.empirical_re = Some(decimal12(m.mean_re));
            row.empirical_im = Some(decimal12(m.mean_im));
            row.stderr = Some(decimal12(m.stderr));
        }
        rows.push(row);
    }
    match cli.format {
        None | Some(OutputFormat::Csv) => write_csv(out, &rows),
        Some(OutputFormat::Json) => write_json(out, &rows),
    }
}

#[derive(Serialize)]
struct FiniteRow {
    character: String,
    dimension: i64,
    average: ExactRational,
    expected: ExactRational,
    matches: bool,
}

pub fn cmd_finite(a: &FiniteArgs, format: Option<OutputFormat>, out: &mut dyn Write) -> Result<()> {
    let group = FiniteGroup::builtin(&a.group)?;
    if a.k == 0 {
        return Err(Error::Parse("--k must be positive".into()));
    }
    let rows = (0..group.characters.len())
        .map(|c| {
            let average = finite_commutator_average(&group, c, a.k)?;
            let d = group.dimension(c);
            let expected = ExactRational::new(1, num_bigint::BigInt::from(d).pow((2 * a.k - 1) as u32))?;
            Ok(FiniteRow {
                character: group.characters[c].label.clone(),
                dimension: d,
                matches: average == expected,
                average,
                expected,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    match format {
        None => {
            for row in &rows {
                writeln!(
                    out,
                    "{} d={} average={} expected={} {}",
                    row.character,
                    row.dimension,
                    row.average,
                    row.expected,
                    if row.matches { "ok" } else { "MISMATCH" }
                )?;
            }
            Ok(())
        }
        Some(OutputFormat::Json) => write_json(out, &rows),
        Some(OutputFormat::Csv) => write_csv(out, &rows),
    }
}
