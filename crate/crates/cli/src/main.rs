//! `wrr`: run identity verifications, print count tables, series
//! expansions and single weights.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use wrr_core::identities::{self, Report, TheoremId};
use wrr_core::par::Execution;
use wrr_core::partitions::Partition;
use wrr_core::polyq::QSeries;
use wrr_core::weights::{weight, WeightKind};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "wrr",
    version,
    about = "Weighted Rogers-Ramanujan identity checker"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write to a file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Evaluate cases on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one identity (or `all`) up to a bound.
    Verify {
        id: String,
        /// Max n, q-order or L, depending on the identity; defaults per identity.
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Values for n = 0..=max-n: Q_k_i, A_k_i, D, SIGNED, W_<KIND>.
    Table {
        family: String,
        #[arg(long)]
        max_n: u32,
    },
    /// q-coefficients of a named generating function.
    Series {
        name: String,
        #[arg(long)]
        order: usize,
    },
    /// Weight of one partition, parts largest first, e.g. `7,4,2`.
    Weights {
        parts: String,
        #[arg(long)]
        kind: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Serialize)]
struct Row {
    n: usize,
    value: String,
}

#[derive(Serialize)]
struct Table {
    family: String,
    rows: Vec<Row>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, ok)) => {
            if let Err(e) = emit(&cli.output, &out) {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_MISMATCH)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn emit(path: &Option<PathBuf>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => File::create(p)?.write_all(text.as_bytes()),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn run(cli: &Cli) -> Result<(String, bool), String> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    match &cli.command {
        Command::Verify { id, max_n } => {
            let ids: Vec<TheoremId> = if id.eq_ignore_ascii_case("all") {
                TheoremId::ALL.to_vec()
            } else {
                vec![id.parse().map_err(|e| format!("{e}"))?]
            };
            let reports: Vec<Report> = ids
                .into_iter()
                .map(|t| identities::verify_with(t, max_n.unwrap_or(t.default_bound()), exec))
                .collect();
            let ok = reports.iter().all(|r| r.passed);
            Ok((
                render_reports(&reports, cli.format, id.eq_ignore_ascii_case("all")),
                ok,
            ))
        }
        Command::Table { family, max_n } => {
            let rows = table(family, *max_n)?;
            let t = Table {
                family: family.clone(),
                rows,
            };
            Ok((render_table(&t, cli.format), true))
        }
        Command::Series { name, order } => {
            let s = series(name, *order)?;
            let rows = s
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| Row {
                    n,
                    value: c.to_string(),
                })
                .collect();
            let t = Table {
                family: name.clone(),
                rows,
            };
            Ok((render_table(&t, cli.format), true))
        }
        Command::Weights { parts, kind } => {
            let kind: WeightKind = kind.parse().map_err(|e| format!("{e}"))?;
            let p = parse_partition(parts)?;
            let w = weight(&p, kind).map_err(|e| format!("{e}"))?;
            let out = match cli.format {
                Format::Json => {
                    let v = serde_json::json!({
                        "partition": p.parts(),
                        "kind": kind.name(),
                        "weight": w.to_string(),
                    });
                    format!("{v}\n")
                }
                _ => format!("{w}\n"),
            };
            Ok((out, true))
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| format!("malformed part {x:?} in {s:?}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| format!("{e}"))
}

/// Parses `PREFIX_k_i`.
fn pair(family: &str, prefix: &str) -> Option<(u32, u32)> {
    let rest = family.strip_prefix(prefix)?;
    let (k, i) = rest.split_once('_')?;
    Some((k.parse().ok()?, i.parse().ok()?))
}

fn table(family: &str, max_n: u32) -> Result<Vec<Row>, String> {
    let upper = family.to_ascii_uppercase();
    let err = |e: wrr_core::Error| e.to_string();
    let value: Box<dyn Fn(u32) -> Result<String, String>> = if upper == "D" {
        Box::new(|n| Ok(identities::distinct_count(n).to_string()))
    } else if upper == "SIGNED" {
        Box::new(|n| Ok(identities::signed_unrestricted(n).to_string()))
    } else if let Some((k, i)) = pair(&upper, "Q_") {
        Box::new(move |n| {
            identities::rank_count(n, k, i)
                .map(|v| v.to_string())
                .map_err(err)
        })
    } else if let Some((k, i)) = pair(&upper, "A_") {
        let gf = identities::modular_gf(k, i, max_n as usize).map_err(err)?;
        Box::new(move |n| Ok(gf.coeff(n as usize).to_string()))
    } else if let Some(kind) = upper.strip_prefix("W_") {
        let kind: WeightKind = kind.parse().map_err(err)?;
        if kind == WeightKind::OmegaSymbolic {
            Box::new(|n| Ok(identities::theorem1_lhs(n).to_string()))
        } else {
            Box::new(move |n| {
                identities::weighted_rr_sum(n, kind)
                    .map(|v| v.to_string())
                    .map_err(err)
            })
        }
    } else {
        return Err(format!("unknown table family {family:?}"));
    };
    (0..=max_n)
        .map(|n| {
            Ok(Row {
                n: n as usize,
                value: value(n)?,
            })
        })
        .collect()
}

fn series(name: &str, order: usize) -> Result<QSeries, String> {
    let upper = name.to_ascii_uppercase();
    let s = match upper.as_str() {
        "THREE_COLOR" => identities::theorem1_product(order),
        "THETA" => identities::theta_series(order),
        "JTP_PRODUCT" => identities::jtp_product(order),
        "KEY_LHS" => identities::key_identity_lhs(order, Execution::default()),
        "KEY_RHS" => identities::key_identity_rhs(order),
        "LEBESGUE_LHS" => identities::lebesgue_lhs(order),
        "LEBESGUE_RHS" => identities::lebesgue_rhs(order),
        "SIGNED_PRODUCT" => identities::signed_product(order),
        _ => match pair(&upper, "A_") {
            Some((k, i)) => identities::modular_gf(k, i, order).map_err(|e| e.to_string())?,
            None => return Err(format!("unknown series {name:?}")),
        },
    };
    Ok(s)
}

fn render_table(t: &Table, format: Format) -> String {
    match format {
        Format::Text => t
            .rows
            .iter()
            .map(|r| format!("{}: {}\n", r.n, r.value))
            .collect(),
        Format::Tsv => {
            let mut s = String::from("n\tvalue\n");
            for r in &t.rows {
                s.push_str(&format!("{}\t{}\n", r.n, r.value));
            }
            s
        }
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(t).expect("serializable")
        ),
    }
}

fn render_reports(reports: &[Report], format: Format, many: bool) -> String {
    match format {
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
        Format::Tsv => {
            let mut s = String::from("theorem\tindex\tlhs\trhs\tmatch\n");
            for r in reports {
                for c in &r.cases {
                    s.push_str(&format!(
                        "{}\t{}\t{}\t{}\t{}\n",
                        r.theorem, c.index, c.lhs, c.rhs, c.matched
                    ));
                }
            }
            s
        }
        Format::Json => {
            let v = if many {
                serde_json::to_string_pretty(reports)
            } else {
                serde_json::to_string_pretty(&reports[0])
            };
            format!("{}\n", v.expect("serializable"))
        }
    }
}
