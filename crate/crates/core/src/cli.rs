//! Command-line front end. Every subcommand writes deterministic output:
//! JSON for decisions and enumerations, CSV for oracle traces, SVG for
//! atlases.
//!
//! Exit codes: 0 member (or success), 1 non-member, 2 usage or domain error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use crate::atlas::{build_atlas, render_svg, sporadic_points, AtlasWindow, FeatureKind};
use crate::classifier::{decide, kind_of, to_frames, Frame};
use crate::commutator::{period_trace, verify_nonneg, DilationPair};
use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::symmetry::PhiMap;

pub const EXIT_MEMBER: i32 = 0;
pub const EXIT_NON_MEMBER: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Parses an exact rational: optional sign, then `n` or `a/b`.
pub fn parse_rational(text: &str) -> Result<Rat> {
    text.parse()
}

fn parse_window(text: &str) -> Result<[Rat; 4]> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(Error::Parameter(format!("window `{text}` must be xmin,xmax,ymin,ymax")));
    }
    let mut out = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = parse_rational(part)?;
    }
    Ok(out)
}

/// Values of `r` for the `orbit` subcommand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RRange(pub Vec<u64>);

/// `a..b` (inclusive), `a,b,c`, or a single integer.
fn parse_r_range(text: &str) -> Result<RRange> {
    let bad = || Error::Parameter(format!("r range `{text}` must look like 1..4 or 1,2,3"));
    let number = |s: &str| s.trim().parse::<u64>().map_err(|_| bad());
    let values = if let Some((lo, hi)) = text.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        (number(lo)?..=number(hi)?).collect()
    } else {
        text.split(',').map(number).collect::<Result<Vec<_>>>()?
    };
    if values.is_empty() || values.contains(&0) {
        return Err(bad());
    }
    Ok(RRange(values))
}

#[derive(Debug, Parser)]
#[command(
    name = "floorcomm",
    version,
    about = "Exact decisions for ⌊α⌊βx⌋⌋ ≥ ⌊β⌊αx⌋⌋ with α, β < 0"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide membership; exit 0 if in S, 1 if not.
    Check {
        #[arg(allow_hyphen_values = true, value_parser = parse_rational)]
        alpha: Rat,
        #[arg(allow_hyphen_values = true, value_parser = parse_rational)]
        beta: Rat,
    },
    /// Same report as `check`, always exiting 0 on valid input.
    Classify {
        #[arg(allow_hyphen_values = true, value_parser = parse_rational)]
        alpha: Rat,
        #[arg(allow_hyphen_values = true, value_parser = parse_rational)]
        beta: Rat,
    },
    /// Exhaustive one-period scan with a CSV trace.
    Oracle {
        #[arg(allow_hyphen_values = true, value_parser = parse_rational)]
        alpha: Rat,
        #[arg(allow_hyphen_values = true, value_parser = parse_rational)]
        beta: Rat,
        /// Write the trace here instead of standard output.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Images of β₀ under Φ_p^r on the line α = −q/p.
    Orbit {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        beta0: Rat,
        /// `1..4`, `2,3,5` or a single value.
        #[arg(long, default_value = "1..4", value_parser = parse_r_range)]
        r: RRange,
    },
    /// Sporadic points on the line α = −q/p.
    Enumerate {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 8)]
        max_index: u64,
    },
    /// Enumerate a window of the solution set and render it.
    Atlas {
        #[arg(long, default_value = "primed")]
        frame: Frame,
        /// xmin,xmax,ymin,ymax
        #[arg(long, allow_hyphen_values = true, default_value = "0,8/5,0,6/5", value_parser = parse_window)]
        window: [Rat; 4],
        #[arg(long = "max-den", default_value_t = 8)]
        max_den: u64,
        #[arg(long = "max-index", default_value_t = 8)]
        max_index: u64,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn integer_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

#[derive(Serialize)]
struct OracleReport<'a> {
    holds: bool,
    counterexample: &'a Option<Rat>,
    min_value: Value,
    argmin: &'a Rat,
}

/// The JSON report shared by `check` and `classify`.
pub fn membership_report(alpha: &Rat, beta: &Rat) -> Result<(bool, Value)> {
    let pair = DilationPair::new(alpha.clone(), beta.clone())?;
    let decision = decide(alpha, beta)?;
    let oracle = verify_nonneg(&pair);
    if oracle.holds != decision.verdict.holds {
        return Err(Error::Inconsistent {
            alpha: Box::new(alpha.clone()),
            beta: Box::new(beta.clone()),
            detail: "witness search and period scan disagree".into(),
        });
    }
    let report = json!({
        "alpha": alpha,
        "beta": beta,
        "in_S": decision.verdict.holds,
        "kind": decision.kind(),
        "witnesses": decision.witnesses,
        "frames": to_frames(alpha, beta)?,
        "oracle": OracleReport {
            holds: oracle.holds,
            counterexample: &oracle.counterexample,
            min_value: integer_json(&oracle.min_value),
            argmin: &oracle.argmin,
        },
    });
    Ok((decision.verdict.holds, report))
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    writeln!(out, "{text}").map_err(io_error)
}

fn io_error(e: impl std::fmt::Display) -> Error {
    Error::Parameter(format!("i/o failure: {e}"))
}

fn write_trace(out: &mut dyn Write, pair: &DilationPair) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer
        .write_record([
            "x",
            "floor(βx)",
            "floor(α⌊βx⌋)",
            "floor(αx)",
            "floor(β⌊αx⌋)",
            "commutator",
        ])
        .map_err(io_error)?;
    for row in period_trace(pair) {
        writer
            .write_record([
                row.x.to_string(),
                row.floor_beta_x.to_string(),
                row.alpha_floor_beta_x.to_string(),
                row.floor_alpha_x.to_string(),
                row.beta_floor_alpha_x.to_string(),
                row.commutator.to_string(),
            ])
            .map_err(io_error)?;
    }
    writer.flush().map_err(io_error)
}

fn check_coprime(p: u64, q: u64) -> Result<()> {
    if p == 0 || q == 0 || p.gcd(&q) != 1 {
        return Err(Error::Parameter(format!(
            "p = {p} and q = {q} must be coprime positive integers"
        )));
    }
    Ok(())
}

/// Executes one command, writing its primary output to `out`. Returns the
/// process exit code; errors map to [`EXIT_USAGE`] in the binary.
pub fn run(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Check { alpha, beta } => {
            let (member, report) = membership_report(&alpha, &beta)?;
            write_json(out, &report)?;
            Ok(if member { EXIT_MEMBER } else { EXIT_NON_MEMBER })
        }
        Command::Classify { alpha, beta } => {
            let (_, report) = membership_report(&alpha, &beta)?;
            write_json(out, &report)?;
            Ok(EXIT_MEMBER)
        }
        Command::Oracle { alpha, beta, trace } => {
            let pair = DilationPair::new(alpha, beta)?;
            let verdict = verify_nonneg(&pair);
            match trace {
                Some(path) => {
                    let mut file = fs::File::create(&path).map_err(io_error)?;
                    write_trace(&mut file, &pair)?;
                    write_json(
                        out,
                        &json!({
                            "alpha": pair.alpha(),
                            "beta": pair.beta(),
                            "holds": verdict.holds,
                            "counterexample": verdict.counterexample,
                            "min_value": integer_json(&verdict.min_value),
                            "argmin": verdict.argmin,
                        }),
                    )?;
                }
                None => write_trace(out, &pair)?,
            }
            Ok(if verdict.holds { EXIT_MEMBER } else { EXIT_NON_MEMBER })
        }
        Command::Orbit { p, q, beta0, r } => {
            check_coprime(p, q)?;
            if !beta0.is_negative() {
                return Err(Error::NotNegative(beta0));
            }
            let alpha = -Rat::frac(q as i64, p as i64);
            let mut rows = Vec::new();
            for r in r.0 {
                let beta = PhiMap::new(p, r)?.apply(&beta0)?;
                let kind = kind_of(&alpha, &beta)?;
                rows.push(json!({ "r": r, "beta": beta, "kind_of": kind }));
            }
            write_json(out, &rows)?;
            Ok(EXIT_MEMBER)
        }
        Command::Enumerate { p, q, max_index } => {
            check_coprime(p, q)?;
            let points: Vec<Value> = sporadic_points(p, q, max_index)?
                .into_iter()
                .map(|(beta, witnesses)| json!({ "beta": beta, "witnesses": witnesses }))
                .collect();
            let alpha = -Rat::frac(q as i64, p as i64);
            write_json(out, &json!({ "alpha": alpha, "sporadic": points }))?;
            Ok(EXIT_MEMBER)
        }
        Command::Atlas {
            frame,
            window,
            max_den,
            max_index,
            svg,
            json: json_path,
        } => {
            let [xmin, xmax, ymin, ymax] = window;
            let window = AtlasWindow::new(frame, (xmin, xmax), (ymin, ymax), max_den, max_index)?;
            let features = build_atlas(&window)?;
            let document = json!({ "window": window, "features": features });
            if let Some(path) = &svg {
                fs::write(path, render_svg(&features, &window)).map_err(io_error)?;
            }
            if let Some(path) = &json_path {
                let text = serde_json::to_string_pretty(&document).expect("serializable");
                fs::write(path, text + "\n").map_err(io_error)?;
            }
            if svg.is_none() && json_path.is_none() {
                write_json(out, &document)?;
            } else {
                let count = |f: fn(&FeatureKind) -> bool| features.iter().filter(|x| f(&x.kind)).count();
                write_json(
                    out,
                    &json!({
                        "curves": count(|k| matches!(k, FeatureKind::CurveCaseI { .. })),
                        "segments": count(|k| matches!(k, FeatureKind::SegmentCaseII { .. })),
                        "sporadic": count(|k| matches!(k, FeatureKind::SporadicPoint { .. })),
                    }),
                )?;
            }
            Ok(EXIT_MEMBER)
        }
    }
}
