//! The `fsikit` command line. [`run`] parses arguments, writes to the given
//! streams and returns the process exit code.

use std::io::Write;
use std::path::Path;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::class_algebra::{solution_count_sequence, Strategy};
use crate::error::{Error, Result};
use crate::group::{
    conjugacy_classes, enumerate_group_with_cap, parse_group_spec, squares_subgroup_index, ClassData, Group,
    SpecFormat, DEFAULT_ORDER_CAP, STANDARD_PRESETS,
};
use crate::indicators::{default_scan_bound, detect_negative_indicator, indicator_summary};
use crate::oracle::{fixture, fixture_for_preset, run_verification_suite, verify_group, VerificationReport};
use crate::recovery::recover;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "fsikit", version, about = "Frobenius-Schur indicators from solution counts")]
pub struct Cli {
    /// `preset:NAME[:PARAM]` or `file:PATH`.
    #[arg(long, global = true)]
    pub group: Option<String>,

    /// Format of a `file:` group.
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Gens)]
    pub input_format: InputFormat,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Largest group order to enumerate.
    #[arg(long, global = true, env = "FSIKIT_ORDER_CAP", default_value_t = DEFAULT_ORDER_CAP)]
    pub order_cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Gens,
    Multtable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order, number of classes, real classes and the index of the squares subgroup.
    Info,
    /// Prints s_k(1), ..., s_k(N).
    Ssequence {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, default_value = "class_algebra")]
        strategy: Strategy,
    },
    /// Recovers the multiset of weighted degrees, with polynomial and roots.
    Recover,
    /// Counts characters by indicator.
    Indicators,
    /// Looks for an odd n with s(n)*|G| < s(n+1).
    DetectNegative {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: Option<u64>,
    },
    /// Runs every cross-check on the group, or on all standard presets.
    Verify {
        #[arg(long)]
        suite: bool,
    },
    /// Times each counting strategy.
    Bench {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
    },
}

fn load_group(cli: &Cli) -> Result<(String, Group)> {
    let source = cli
        .group
        .as_deref()
        .ok_or_else(|| Error::InvalidParameter("--group is required".into()))?;
    let spec = if let Some(rest) = source.strip_prefix("preset:") {
        parse_group_spec(rest, SpecFormat::Preset)?
    } else if let Some(path) = source.strip_prefix("file:") {
        let text = std::fs::read_to_string(Path::new(path)).map_err(|e| Error::Io {
            path: path.to_string(),
            msg: e.to_string(),
        })?;
        let format = match cli.input_format {
            InputFormat::Gens => SpecFormat::Gens,
            InputFormat::Multtable => SpecFormat::MultTable,
        };
        parse_group_spec(&text, format)?.named(path)
    } else {
        return Err(Error::InvalidParameter(format!(
            "group source `{source}` must start with preset: or file:"
        )));
    };
    Ok((source.to_string(), enumerate_group_with_cap(&spec, cli.order_cap)?))
}

fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string(value).expect("serializable"))
}

#[derive(Serialize)]
struct InfoJson {
    order: usize,
    num_classes: usize,
    num_real_classes: usize,
    squares_index: usize,
}

#[derive(Serialize)]
struct SequenceJson {
    k: u64,
    strategy: &'static str,
    s_sequence: Vec<String>,
}

#[derive(Serialize)]
struct RecoverJson {
    order: usize,
    num_real_classes: usize,
    s_sequence: Vec<String>,
    power_sums: Vec<String>,
    polynomial: String,
    roots: Vec<String>,
    multiset: Vec<String>,
}

#[derive(Serialize)]
struct SummaryJson {
    plus: usize,
    minus: usize,
    zero: usize,
}

#[derive(Serialize)]
struct IndicatorsJson {
    num_classes: usize,
    num_real_classes: usize,
    summary: SummaryJson,
}

#[derive(Serialize)]
struct WitnessJson {
    n: usize,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct DetectJson {
    max_n: usize,
    witness: Option<WitnessJson>,
}

#[derive(Serialize)]
struct BenchJson {
    max_n: usize,
    s_sequence: Vec<String>,
    timings_ms: Vec<(String, f64)>,
}

enum Outcome {
    Done,
    VerifyFailed,
}

fn verify_loaded(label: &str, g: &Group, cd: &ClassData) -> Result<VerificationReport> {
    let fx = label
        .strip_prefix("preset:")
        .and_then(fixture_for_preset)
        .map(fixture)
        .transpose()?;
    Ok(verify_group(label, g, cd, fx.as_ref()))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    let json = cli.format == OutputFormat::Json;
    let io = |e: std::io::Error| Error::Io {
        path: "<stdout>".into(),
        msg: e.to_string(),
    };

    if let Command::Verify { suite: true } = cli.command {
        let report = run_verification_suite(STANDARD_PRESETS)?;
        return write_report(out, &report, json).map_err(io);
    }

    let (label, g) = load_group(cli)?;
    let cd = conjugacy_classes(&g);
    let order = g.order();

    match &cli.command {
        Command::Info => {
            let info = InfoJson {
                order,
                num_classes: cd.num_classes,
                num_real_classes: cd.num_real_classes,
                squares_index: squares_subgroup_index(&g),
            };
            if json {
                emit(out, &info).map_err(io)?;
            } else {
                writeln!(
                    out,
                    "group: {label}\norder: {}\nclasses: {}\nreal classes: {}\nsquares index: {}",
                    info.order, info.num_classes, info.num_real_classes, info.squares_index
                )
                .map_err(io)?;
            }
        }
        Command::Ssequence { max_n, k, strategy } => {
            let sc = solution_count_sequence(&g, &cd, *k, *max_n as usize, *strategy)?;
            if json {
                let body = SequenceJson {
                    k: *k,
                    strategy: strategy.as_str(),
                    s_sequence: strings(&sc.values),
                };
                emit(out, &body).map_err(io)?;
            } else {
                for (n, s) in sc.values.iter().enumerate() {
                    writeln!(out, "s({}) = {s}", n + 1).map_err(io)?;
                }
            }
        }
        Command::Recover => {
            let rec = recover(&g, &cd)?;
            if json {
                let body = RecoverJson {
                    order,
                    num_real_classes: rec.k_r,
                    s_sequence: strings(&rec.counts.values),
                    power_sums: strings(&rec.power_sums.p),
                    polynomial: rec.polynomial.to_string(),
                    roots: strings(&rec.roots),
                    multiset: strings(rec.multiset.entries()),
                };
                emit(out, &body).map_err(io)?;
            } else {
                writeln!(out, "k_r={}  multiset: {}", rec.k_r, rec.multiset).map_err(io)?;
                writeln!(out, "polynomial: {}", rec.polynomial).map_err(io)?;
                writeln!(out, "roots: {}", strings(&rec.roots).join(", ")).map_err(io)?;
            }
        }
        Command::Indicators => {
            let rec = recover(&g, &cd)?;
            let s = indicator_summary(&rec.multiset, &cd)?;
            if json {
                let body = IndicatorsJson {
                    num_classes: s.k_total,
                    num_real_classes: s.k_r,
                    summary: SummaryJson {
                        plus: s.plus,
                        minus: s.minus,
                        zero: s.zero,
                    },
                };
                emit(out, &body).map_err(io)?;
            } else {
                writeln!(out, "plus={}  minus={}  zero={}", s.plus, s.minus, s.zero).map_err(io)?;
            }
        }
        Command::DetectNegative { max_n } => {
            let max_n = max_n.map_or_else(|| default_scan_bound(cd.num_real_classes), |n| n as usize);
            let sc = solution_count_sequence(&g, &cd, 2, max_n + 1, Strategy::ClassAlgebra)?;
            let witness = detect_negative_indicator(&sc, order as u64, max_n)?;
            if json {
                let body = DetectJson {
                    max_n,
                    witness: witness.map(|w| WitnessJson {
                        n: w.n,
                        lhs: w.lhs.to_string(),
                        rhs: w.rhs.to_string(),
                    }),
                };
                emit(out, &body).map_err(io)?;
            } else {
                match witness {
                    Some(w) => writeln!(
                        out,
                        "witness n={}: s({})*|G| < s({})\n{} < {}",
                        w.n,
                        w.n,
                        w.n + 1,
                        w.lhs,
                        w.rhs
                    ),
                    None => writeln!(out, "no witness up to {max_n}"),
                }
                .map_err(io)?;
            }
        }
        Command::Verify { .. } => {
            let report = verify_loaded(&label, &g, &cd)?;
            return write_report(out, &report, json).map_err(io);
        }
        Command::Bench { max_n } => {
            let max_n = *max_n as usize;
            let mut timings: Vec<(String, Duration)> = Vec::new();
            let mut reference = None;
            for strategy in Strategy::ALL {
                let start = Instant::now();
                let sc = solution_count_sequence(&g, &cd, 2, max_n, strategy)?;
                timings.push((strategy.to_string(), start.elapsed()));
                match &reference {
                    None => reference = Some(sc),
                    Some(r) if *r == sc => {}
                    Some(_) => {
                        return Err(Error::inconsistent(format!(
                            "{strategy} disagrees with {}",
                            Strategy::ALL[0]
                        )))
                    }
                }
            }
            let sc = reference.expect("at least one strategy");
            if json {
                let body = BenchJson {
                    max_n,
                    s_sequence: strings(&sc.values),
                    timings_ms: timings
                        .iter()
                        .map(|(s, d)| (s.clone(), d.as_secs_f64() * 1e3))
                        .collect(),
                };
                emit(out, &body).map_err(io)?;
            } else {
                writeln!(out, "s(1..={max_n}) agree across strategies").map_err(io)?;
                for (s, d) in &timings {
                    writeln!(out, "{s:<14} {d:.2?}").map_err(io)?;
                }
            }
        }
    }
    Ok(Outcome::Done)
}

fn write_report(out: &mut dyn Write, report: &VerificationReport, json: bool) -> std::io::Result<Outcome> {
    if json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        writeln!(out, "{report}")?;
    }
    Ok(if report.passed() {
        Outcome::Done
    } else {
        Outcome::VerifyFailed
    })
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(&cli, out) {
        Ok(Outcome::Done) => EXIT_OK,
        Ok(Outcome::VerifyFailed) => EXIT_VERIFY_FAILED,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_input_error() {
                EXIT_INPUT
            } else {
                EXIT_INCONSISTENT
            }
        }
    }
}
