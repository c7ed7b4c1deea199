//! Command-line front end: `expand`, `verify`, `oracle`, `list`.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails,
//! 2 on a usage or parameter error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::closedforms::{closed_form, theta, ClosedFormId};
use crate::doubleseries::{double_series, family_series, Family, FamilyId, SeriesId};
use crate::error::{Error, Result};
use crate::hyperg::lambert_theta;
use crate::partitions::{enumerate_representations, f1_partition_scan, representation_count};
use crate::registry::{Catalog, DEFAULT_ORDER_CAP};
use crate::series::LaurentSeries;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Default largest `n` for the brute-force oracle.
pub const ORACLE_CAP: i64 = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "qdouble",
    version,
    about = "Exact q-series expansion and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the coefficients of q^0..q^N of a series.
    Expand {
        /// f1, f2, g, theta, lambert, a, aprime, b, bprime, or a closed-form tag.
        #[arg(long)]
        series: String,
        /// Family or closed-form parameter.
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        order: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        max_order: i64,
    },
    /// Check registered identities.
    Verify {
        /// Identity id; `*` matches any run of characters.
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        id: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, allow_hyphen_values = true)]
        order: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Worker threads (defaults to the number of CPUs).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        max_order: i64,
    },
    /// Compare the brute-force representation count with the series.
    Oracle {
        #[arg(long)]
        series: String,
        #[arg(long, allow_hyphen_values = true)]
        max_n: i64,
        /// Also list the signed representations of this n.
        #[arg(long)]
        list_reps: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long, default_value_t = ORACLE_CAP)]
        max_oracle_n: i64,
    },
    /// Dump the identity catalog.
    List {
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let outcome = match cli.command {
        Command::Expand {
            series,
            m,
            order,
            format,
            max_order,
        } => expand(&series, m, order, format, max_order, out),
        Command::Verify {
            id,
            all,
            order,
            format,
            jobs,
            max_order,
        } => verify(
            id.as_deref().filter(|_| !all),
            order,
            format,
            jobs,
            max_order,
            out,
        ),
        Command::Oracle {
            series,
            max_n,
            list_reps,
            format,
            max_oracle_n,
        } => oracle(&series, max_n, list_reps, format, max_oracle_n, out),
        Command::List { format } => list(format, out),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<()> {
    writeln!(out, "{v}").map_err(|e| Error::InvalidParameter(format!("cannot write output: {e}")))
}

fn line(out: &mut dyn Write, s: impl std::fmt::Display) -> Result<()> {
    writeln!(out, "{s}").map_err(|e| Error::InvalidParameter(format!("cannot write output: {e}")))
}

fn check_order(order: i64, cap: i64) -> Result<()> {
    if order < 0 {
        return Err(Error::InvalidParameter(format!(
            "order must be nonnegative, got {order}"
        )));
    }
    if order > cap {
        return Err(Error::InvalidParameter(format!(
            "order {order} exceeds safety cap {cap} (raise it with --max-order)"
        )));
    }
    Ok(())
}

/// Resolves an `expand` series name to its expansion.
pub fn named_series(name: &str, m: Option<u32>, order: i64) -> Result<LaurentSeries> {
    let lower = name.to_ascii_lowercase();
    if let Ok(id) = lower.parse::<SeriesId>() {
        return Ok(double_series(id, order));
    }
    match lower.as_str() {
        "theta" => return theta(order),
        "lambert" => return Ok(lambert_theta(order)),
        _ => {}
    }
    if let Ok(fam) = lower.parse::<Family>() {
        let m = m.ok_or_else(|| Error::InvalidParameter(format!("family `{name}` needs --m")))?;
        return family_series(FamilyId::new(fam, m)?, order);
    }
    let id = ClosedFormId::parse(&lower, m)?;
    closed_form(id, order)
}

fn expand(
    name: &str,
    m: Option<u32>,
    order: i64,
    format: OutputFormat,
    cap: i64,
    out: &mut dyn Write,
) -> Result<i32> {
    check_order(order, cap)?;
    let s = named_series(name, m, order)?;
    let coeffs = s.coeffs_between(0, order)?;
    let strings: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    match format {
        OutputFormat::Json => emit(
            out,
            &json!({ "series": name, "order": order, "coeffs": strings }),
        )?,
        OutputFormat::Text => {
            if let Some(v) = s.valuation().filter(|&v| v < 0) {
                line(
                    out,
                    format!("note: principal part starts at q^{v}; showing q^0..q^{order}"),
                )?;
            }
            line(
                out,
                format!("{name} to order {order}: [{}]", strings.join(", ")),
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn verify(
    pattern: Option<&str>,
    order: Option<i64>,
    format: OutputFormat,
    jobs: Option<usize>,
    cap: i64,
    out: &mut dyn Write,
) -> Result<i32> {
    if let Some(o) = order {
        check_order(o, cap)?;
    }
    let catalog = Catalog::standard().with_order_cap(cap);
    let jobs = jobs
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
        .max(1);
    let summary = match pattern {
        Some(p) => {
            let s = catalog.verify_matching(p, order, jobs);
            if s.reports.is_empty() {
                return Err(Error::UnknownId(p.to_string()));
            }
            s
        }
        None => catalog.verify_all(order, jobs),
    };
    match format {
        OutputFormat::Json => emit(out, &summary.to_json())?,
        OutputFormat::Text => {
            for r in &summary.reports {
                line(out, r)?;
            }
            line(
                out,
                format!(
                    "{} passed, {} hard-failed, {} info-failed ({} total, {:.1}s)",
                    summary.passed(),
                    summary.hard_failed(),
                    summary.info_failed(),
                    summary.reports.len(),
                    summary.total_time.as_secs_f64()
                ),
            )?;
        }
    }
    Ok(if summary.hard_failure() {
        EXIT_FAIL
    } else {
        EXIT_OK
    })
}

fn oracle(
    name: &str,
    max_n: i64,
    list_reps: Option<u64>,
    format: OutputFormat,
    cap: i64,
    out: &mut dyn Write,
) -> Result<i32> {
    let id: SeriesId = name.parse()?;
    if max_n < 0 {
        return Err(Error::InvalidParameter(format!(
            "--max-n must be nonnegative, got {max_n}"
        )));
    }
    if max_n > cap {
        return Err(Error::InvalidParameter(format!(
            "--max-n {max_n} exceeds oracle cap {cap} (raise it with --max-oracle-n)"
        )));
    }
    if let Some(n) = list_reps {
        if n as i64 > cap {
            return Err(Error::InvalidParameter(format!(
                "--list-reps {n} exceeds oracle cap {cap}"
            )));
        }
    }
    let series = double_series(id, max_n);
    let mut rows = Vec::new();
    let mut all_match = true;
    for n in 1..=max_n {
        let count = representation_count(id, n as u64).value();
        let coeff = series.coeff(n)?;
        let scan = (id == SeriesId::F1).then(|| f1_partition_scan(n as u32).value());
        let ok = coeff == crate::series::int(count) && scan.is_none_or(|s| s == count);
        all_match &= ok;
        rows.push((n, count, coeff, scan, ok));
    }
    let reps = list_reps.map(|n| enumerate_representations(id, n));
    match format {
        OutputFormat::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(n, count, coeff, scan, ok)| {
                    json!({
                        "n": n,
                        "oracle": count.to_string(),
                        "coefficient": coeff.to_string(),
                        "scan": scan.map(|s| s.to_string()),
                        "match": ok,
                    })
                })
                .collect();
            let mut v = json!({ "series": id.name(), "max_n": max_n, "rows": rows });
            if let (Some(n), Some(reps)) = (list_reps, &reps) {
                v["representations"] = json!({
                    "n": n,
                    "items": reps.iter().map(|r| json!({
                        "sign": r.sign().to_string(),
                        "k": r.k,
                        "n": r.n,
                        "evens": r.evens,
                        "odds": r.odds,
                    })).collect::<Vec<_>>(),
                });
            }
            emit(out, &v)?;
        }
        OutputFormat::Text => {
            let scan_col = id == SeriesId::F1;
            line(
                out,
                format!(
                    "{:>4} {:>10} {:>12}{} match",
                    "n",
                    "oracle",
                    "coefficient",
                    if scan_col { "       scan" } else { "" }
                ),
            )?;
            for (n, count, coeff, scan, ok) in &rows {
                let scan = scan.map(|s| format!(" {s:>10}")).unwrap_or_default();
                line(
                    out,
                    format!(
                        "{n:>4} {count:>10} {:>12}{scan} {}",
                        coeff.to_string(),
                        if *ok { "yes" } else { "NO" }
                    ),
                )?;
            }
            if let (Some(n), Some(reps)) = (list_reps, &reps) {
                line(out, format!("representations of {n} ({}):", reps.len()))?;
                for r in reps {
                    line(out, format!("  {r}"))?;
                }
            }
        }
    }
    Ok(if all_match { EXIT_OK } else { EXIT_FAIL })
}

fn list(format: OutputFormat, out: &mut dyn Write) -> Result<i32> {
    let summaries = Catalog::standard().list();
    match format {
        OutputFormat::Json => emit(
            out,
            &Value::Array(summaries.iter().map(|s| s.to_json()).collect()),
        )?,
        OutputFormat::Text => {
            for s in &summaries {
                line(
                    out,
                    format!(
                        "{:<28} {:<4} {:>2} order {:>4}  {}",
                        s.id,
                        s.severity.to_string(),
                        s.relation.to_string(),
                        s.default_order,
                        s.anchor
                    ),
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}
