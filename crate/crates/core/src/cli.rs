//! `oldsum` command line: `verify`, `wz` and `list`.

use std::ffi::OsString;
use std::io::{self, Write};
use std::num::NonZeroUsize;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::catalog::{self, default_ell_grid};
use crate::rational::Rational;
use crate::sweep::{run_sweep, Format, Selection, SweepConfig};
use crate::wz::{self, check_grid};

#[derive(Debug, Parser)]
#[command(
    name = "oldsum",
    version,
    about = "Exact verification of binomial sum identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify catalog identities over a parameter sweep.
    Verify(VerifyArgs),
    /// Check a WZ certificate on a residual grid and its row sums.
    Wz(WzArgs),
    /// List registered identities.
    List(ListArgs),
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated identity keys, or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    pub identity: Vec<String>,
    #[arg(long, default_value_t = 20)]
    pub n_max: u64,
    /// Comma-separated exact rationals `p/q` for the second parameter.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_rational)]
    pub ell: Vec<Rational>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub fail_fast: bool,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long)]
    pub jobs: Option<NonZeroUsize>,
}

#[derive(Debug, Args)]
pub struct WzArgs {
    #[arg(long, value_parser = wz_names())]
    pub certificate: String,
    #[arg(long, default_value_t = 20)]
    pub n_max: u64,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_rational)]
    pub ell: Vec<Rational>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

fn wz_names() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(wz::ALL_PAIRS.iter().map(|p| p.name))
}

#[derive(Debug, Args)]
pub struct ListArgs {
    #[arg(long, value_enum, default_value = "summary")]
    pub format: Format,
}

impl VerifyArgs {
    pub fn config(&self) -> SweepConfig {
        let default = SweepConfig::default();
        SweepConfig {
            identities: if self.identity.iter().any(|s| s == "all") {
                Selection::All
            } else {
                Selection::Named(self.identity.clone())
            },
            n_max: self.n_max,
            ell_grid: if self.ell.is_empty() {
                default.ell_grid
            } else {
                self.ell.clone()
            },
            format: self.format,
            fail_fast: self.fail_fast,
            jobs: self.jobs.unwrap_or(default.jobs),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match run(&cli, out, err) {
        Ok(code) => code,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    match &cli.command {
        Command::Verify(args) => cmd_verify(&args.config(), out, err),
        Command::Wz(args) => cmd_wz(args, out),
        Command::List(args) => cmd_list(args.format, out),
    }
}

pub fn cmd_verify(
    config: &SweepConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let outcome = match run_sweep(config) {
        Ok(o) => o,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(2);
        }
    };
    outcome.write(config.format, out)?;
    if outcome.all_skipped() {
        writeln!(
            err,
            "warning: every case was outside its identity's validity region"
        )?;
    }
    Ok(outcome.exit_code())
}

#[derive(Serialize)]
struct WzRow {
    certificate: &'static str,
    params: WzParams,
    residuals: usize,
    nonzero: usize,
    undefined: usize,
    row_sum: Option<Rational>,
    status: catalog::Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

#[derive(Serialize)]
struct WzParams {
    n: u64,
    ell: Rational,
}

pub fn cmd_wz(args: &WzArgs, out: &mut dyn Write) -> io::Result<i32> {
    let pair = wz::find_pair(&args.certificate).expect("clap restricts certificate names");
    let ells = if args.ell.is_empty() {
        default_ell_grid()
    } else {
        args.ell.clone()
    };
    let report = check_grid(&pair, args.n_max, &ells);

    let mut rows = Vec::new();
    for ell in &ells {
        for n in 0..=args.n_max {
            let points: Vec<_> = report
                .residuals
                .iter()
                .filter(|p| p.n == n && &p.ell == ell)
                .collect();
            let nonzero = points
                .iter()
                .filter(|p| matches!(&p.residual, Ok(r) if !r.is_zero()))
                .count();
            let undefined = points.iter().filter(|p| p.residual.is_err()).count();
            let sum = report.row_sums.iter().find(|s| s.n == n && &s.ell == ell);
            let (row_sum, sum_err) = match sum.map(|s| &s.sum) {
                Some(Ok(v)) => (Some(v.clone()), None),
                Some(Err(e)) => (None, Some(e.to_string())),
                None => (None, None),
            };
            let sum_ok = row_sum.as_ref().is_some_and(|v| v.is_one());
            let mut reason = sum_err;
            if reason.is_none() && !sum_ok {
                reason = Some("row sum differs from 1".into());
            }
            if nonzero > 0 {
                reason = Some(format!("{nonzero} nonzero residuals"));
            } else if undefined > 0 {
                reason = Some(format!("{undefined} undefined residuals"));
            }
            let status = if reason.is_none() {
                catalog::Status::Pass
            } else {
                catalog::Status::Fail
            };
            rows.push(WzRow {
                certificate: pair.name,
                params: WzParams {
                    n,
                    ell: ell.clone(),
                },
                residuals: points.len(),
                nonzero,
                undefined,
                row_sum,
                status,
                reason,
            });
        }
    }
    rows.sort_by(|a, b| (a.params.n, &a.params.ell).cmp(&(b.params.n, &b.params.ell)));

    match args.format {
        Format::Json => {
            for r in &rows {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
        }
        Format::Tsv => {
            writeln!(
                out,
                "certificate\tparams\tresiduals\tnonzero\tundefined\trow_sum\tstatus\treason"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "{}\tn={},ell={}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.certificate,
                    r.params.n,
                    r.params.ell,
                    r.residuals,
                    r.nonzero,
                    r.undefined,
                    r.row_sum
                        .as_ref()
                        .map(|v| v.to_string())
                        .unwrap_or_default(),
                    serde_json::to_value(r.status)
                        .unwrap()
                        .as_str()
                        .unwrap_or(""),
                    r.reason.as_deref().unwrap_or("")
                )?;
            }
        }
        Format::Summary => {
            let failed = rows
                .iter()
                .filter(|r| r.status == catalog::Status::Fail)
                .count();
            writeln!(out, "certificate  {}", pair.name)?;
            writeln!(out, "             {}", pair.description)?;
            writeln!(out, "residuals    {}", report.residuals.len())?;
            writeln!(out, "nonzero      {}", report.nonzero_residuals().count())?;
            writeln!(out, "undefined    {}", report.undefined_residuals().count())?;
            writeln!(out, "bad sums     {}", report.bad_row_sums().count())?;
            writeln!(
                out,
                "rows         {} pass, {} fail",
                rows.len() - failed,
                failed
            )?;
        }
    }
    Ok(if report.passed() { 0 } else { 1 })
}

#[derive(Serialize)]
struct ListEntry {
    name: &'static str,
    family: &'static str,
    params: Vec<&'static str>,
    description: &'static str,
}

pub fn cmd_list(format: Format, out: &mut dyn Write) -> io::Result<i32> {
    let entries: Vec<ListEntry> = catalog::catalog()
        .into_iter()
        .map(|i| {
            let mut params = vec!["n"];
            params.extend(i.space.rational_name());
            ListEntry {
                name: i.name,
                family: i.family,
                params,
                description: i.description,
            }
        })
        .collect();
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &entries)?;
            writeln!(out)?;
        }
        Format::Tsv => {
            writeln!(out, "name\tfamily\tparams\tdescription")?;
            for e in &entries {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    e.name,
                    e.family,
                    e.params.join(","),
                    e.description
                )?;
            }
        }
        Format::Summary => {
            let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
            for e in &entries {
                writeln!(out, "{:<width$}  [{}] {}", e.name, e.family, e.description)?;
            }
        }
    }
    Ok(0)
}
