//! The `bsl` command line. Every subcommand prints a text report (or JSON
//! with `--json`) and reports whether its assertions held.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::cuspidal::{accelerate, convergents, geometric_length};
use crate::error::{Error, Result};
use crate::expansion::expansion;
use crate::harness::{check_classical_bounds, check_theorem, classical, render_ford, AlphaInput, TheoremConfig};
use crate::moebius::BoundaryPoint;
use crate::numeric::{Precision, Real};
use crate::parabolic::{default_window, enumerate_with, estimate_constants, EnumerationConfig};
use crate::polygon::{validate, GroupSource, LabelledPolygon};

#[derive(Debug, Parser)]
#[command(name = "bsl", version, about = "Bowen–Series coding and cusp approximation checks")]
pub struct Cli {
    /// Working precision in bits.
    #[arg(long, global = true, value_name = "BITS")]
    pub precision: Option<u32>,
    /// Comparison tolerance 2^-E (default: half the bits).
    #[arg(long, global = true, value_name = "E")]
    pub tolerance_exp: Option<u32>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GroupArg {
    /// `modular`, `golden-octagon`, or a group file.
    #[arg(long, short)]
    pub group: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a group description.
    Validate {
        #[command(flatten)]
        group: GroupArg,
    },
    /// Letters of the boundary expansion of α.
    Expand {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value_t = 40)]
        depth: usize,
    },
    /// Maximal cuspidal words of the expansion of α.
    Accelerate {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value_t = 20)]
        words: usize,
    },
    /// Convergents ζ_r of α with the bounds they must satisfy.
    Convergents {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value_t = 15)]
        rmax: usize,
    },
    /// Classical continued-fraction laws, in exact arithmetic.
    CheckClassical {
        #[arg(long, required = true, num_args = 1..)]
        alpha: Vec<String>,
        #[arg(long, default_value_t = 25)]
        n: usize,
        /// Largest denominator of the exhaustive scan.
        #[arg(long, default_value_t = classical::DEFAULT_SCAN)]
        scan: u64,
    },
    /// Both parts of the approximation theorem for a group.
    CheckTheorem {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, required = true, num_args = 1..)]
        alpha: Vec<String>,
        #[arg(long, default_value_t = 25)]
        rmax: usize,
        /// Default: 0.4 for the modular group, else an estimate from this run.
        #[arg(long)]
        eps: Option<String>,
        #[arg(long, default_value = "300")]
        qmax: String,
    },
    /// Parabolic points with denominator at most Q.
    Enumerate {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        qmax: String,
        /// `LO,HI` (default: hull of the finite vertices).
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// SVG of the horoballs at parabolic points.
    Render {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        qmax: String,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

impl Cli {
    fn precision_for(&self, source: Option<&GroupSource>) -> Result<Option<Precision>> {
        let base = match (self.precision, source) {
            (Some(bits), _) => Some(Precision::new(bits)),
            (None, Some(s)) if self.tolerance_exp.is_some() => Some(s.data(None)?.precision),
            (None, None) if self.tolerance_exp.is_some() => Some(Precision::default()),
            _ => None,
        };
        Ok(match (base, self.tolerance_exp) {
            (Some(p), Some(e)) => Some(p.with_tolerance_exp(e)),
            (p, _) => p,
        })
    }

    fn polygon(&self, g: &GroupArg) -> Result<(GroupSource, LabelledPolygon)> {
        let source = GroupSource::parse(&g.group)?;
        let p = source.build(self.precision_for(Some(&source))?)?;
        Ok((source, p))
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, json: bool, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    if json {
        serde_json::to_writer_pretty(&mut *out, value).map_err(|e| Error::InvalidInput(e.to_string()))?;
        writeln!(out)?;
    } else {
        writeln!(out, "{}", text())?;
    }
    Ok(())
}

fn parse_window(s: &str, bits: u32) -> Result<(Real, Real)> {
    let (lo, hi) = s
        .split_once(',')
        .ok_or_else(|| Error::parse("--window", "expected LO,HI"))?;
    let (lo, hi) = (Real::parse(lo, bits)?, Real::parse(hi, bits)?);
    if hi <= lo {
        return Err(Error::parse("--window", "LO must be below HI"));
    }
    Ok((lo, hi))
}

fn alpha_point(p: &LabelledPolygon, text: &str) -> Result<(AlphaInput, Real)> {
    let a = AlphaInput::parse(text)?;
    let x = a.to_real(p.bits());
    Ok((a, x))
}

#[derive(Serialize)]
struct ExpandOut {
    alpha: String,
    letters: Vec<String>,
    error_bound: String,
}

#[derive(Serialize)]
struct WordOut {
    start: usize,
    word: Vec<String>,
    side: Option<crate::cuspidal::Side>,
    length: String,
}

#[derive(Serialize)]
struct ConvergentOut {
    r: usize,
    word: Vec<String>,
    point: String,
    denominator: String,
    length: String,
    quality: Option<String>,
    lower: Option<String>,
    upper: Option<String>,
    ok: bool,
}

/// Runs one subcommand. `Ok(true)` iff every assertion it makes held.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let json = cli.json;
    match &cli.command {
        Command::Validate { group } => {
            let source = GroupSource::parse(&group.group)?;
            let data = source.data(cli.precision_for(Some(&source))?)?;
            let report = validate(&data);
            emit(out, json, &report, || report.to_string())?;
            Ok(report.passed())
        }
        Command::Expand { group, alpha, depth } => {
            let (_, p) = cli.polygon(group)?;
            let (a, x) = alpha_point(&p, alpha)?;
            let mut it = expansion(&p, &BoundaryPoint::from_real(&x));
            let letters = it.by_ref().take(*depth).collect::<Result<Vec<_>>>()?;
            let o = ExpandOut {
                alpha: a.label,
                letters: letters.iter().map(|&l| p.label(l).to_string()).collect(),
                error_bound: it.error_bound().to_decimal(6),
            };
            emit(out, json, &o, || format!("{} (error bound {})", o.letters.join(""), o.error_bound))?;
            Ok(true)
        }
        Command::Accelerate { group, alpha, words } => {
            let (_, p) = cli.polygon(group)?;
            let (_, x) = alpha_point(&p, alpha)?;
            let mut rows = Vec::new();
            for w in accelerate(&p, expansion(&p, &BoundaryPoint::from_real(&x))).take(*words) {
                let w = w?;
                rows.push(WordOut {
                    start: w.start,
                    word: w.word.labels(p.alphabet()),
                    side: w.side,
                    length: geometric_length(&p, &w)?.to_decimal(12),
                });
            }
            emit(out, json, &rows, || {
                rows.iter()
                    .map(|w| {
                        let side = w.side.map_or("-".to_string(), |s| format!("{s:?}"));
                        format!("{:>5}  {:<24} {side}  {}", w.start, w.word.join(""), w.length)
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            })?;
            Ok(true)
        }
        Command::Convergents { group, alpha, rmax } => {
            let (_, p) = cli.polygon(group)?;
            let (_, x) = alpha_point(&p, alpha)?;
            let slack = p.tau() * crate::harness::theorem::SLACK_TAUS;
            let two_mu = p.mu_max() * 2;
            let mut rows = Vec::new();
            for rec in convergents(&p, &BoundaryPoint::from_real(&x)).take(*rmax) {
                let rec = rec?;
                let q = rec.quality(&x);
                let (lower, upper, ok) = match (&q, rec.length.is_positive()) {
                    (Some(q), true) => {
                        let lo = (&rec.length + &two_mu).recip();
                        let hi = rec.length.recip();
                        let ok = *q >= &lo - &slack && *q <= &hi + &slack;
                        (Some(lo.to_decimal(10)), Some(hi.to_decimal(10)), ok)
                    }
                    _ => (None, None, true),
                };
                rows.push(ConvergentOut {
                    r: rec.index,
                    word: rec.word.word.labels(p.alphabet()),
                    point: rec.point.to_decimal(20),
                    denominator: rec.denominator.to_decimal(20),
                    length: rec.length.to_decimal(10),
                    quality: q.map(|q| q.to_decimal(10)),
                    lower,
                    upper,
                    ok,
                });
            }
            let passed = rows.iter().all(|r| r.ok);
            emit(out, json, &rows, || {
                let mut s = format!("{:>3}  {:<14} {:>22} {:>14} {:>10} {:>12}\n", "r", "W_r", "ζ_r", "D", "|W_r|", "D²|α-ζ|");
                for r in &rows {
                    s += &format!(
                        "{:>3}  {:<14} {:>22} {:>14} {:>10} {:>12}{}\n",
                        r.r,
                        r.word.join(""),
                        r.point,
                        r.denominator,
                        r.length,
                        r.quality.as_deref().unwrap_or("-"),
                        if r.ok { "" } else { "  FAIL" }
                    );
                }
                s.trim_end().to_string()
            })?;
            Ok(passed)
        }
        Command::CheckClassical { alpha, n, scan } => {
            let reports = alpha
                .iter()
                .map(|a| check_classical_bounds(&AlphaInput::parse(a)?, *n, *scan))
                .collect::<Result<Vec<_>>>()?;
            let passed = reports.iter().all(|r| r.passed);
            emit(out, json, &reports, || {
                reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n\n")
            })?;
            Ok(passed)
        }
        Command::CheckTheorem { group, alpha, rmax, eps, qmax } => {
            let source = GroupSource::parse(&group.group)?;
            let precision = cli.precision_for(Some(&source))?;
            let bits = source.data(precision)?.precision.bits;
            let alphas = alpha.iter().map(|a| AlphaInput::parse(a)).collect::<Result<Vec<_>>>()?;
            let q_max = Real::parse(qmax, bits)?;
            let epsilon = match eps {
                Some(e) => Real::parse(e, bits)?,
                None if source.is_modular() => Real::parse("0.4", bits)?,
                None => {
                    let p = source.build(precision)?;
                    let xs: Vec<Real> = alphas.iter().map(|a| a.to_real(bits)).collect();
                    estimate_constants(&p, &q_max, &xs)?
                        .eps0
                        .ok_or_else(|| Error::InvalidInput("no ε₀ estimate; pass --eps".into()))?
                }
            };
            let cfg = TheoremConfig { r_max: *rmax, epsilon, q_max, max_doublings: 2 };
            let report = check_theorem(&source, precision, &alphas, &cfg)?;
            emit(out, json, &report, || report.to_string())?;
            Ok(report.passed)
        }
        Command::Enumerate { group, qmax, window } => {
            let (_, p) = cli.polygon(group)?;
            let q = Real::parse(qmax, p.bits())?;
            let (lo, hi) = match window {
                Some(w) => parse_window(w, p.bits())?,
                None => default_window(&p),
            };
            let e = enumerate_with(&p, &EnumerationConfig::new(&p, q).window(lo, hi))?;
            if json {
                write!(out, "{}", e.to_json_lines(&p))?;
            } else {
                for pt in &e.points {
                    writeln!(
                        out,
                        "{:>24}  {:>12}  {}·{}",
                        pt.point.to_decimal(20),
                        pt.denominator.to_decimal(12),
                        pt.form.word.display(p.alphabet()),
                        p.vertex_ext(pt.form.vertex).to_decimal(8)
                    )?;
                }
                writeln!(out, "{} points, {} words visited", e.len(), e.nodes)?;
            }
            Ok(e.duplicates == 0)
        }
        Command::Render { group, qmax, window, output } => {
            let (_, p) = cli.polygon(group)?;
            let q = Real::parse(qmax, p.bits())?;
            let (lo, hi) = match window {
                Some(w) => parse_window(w, p.bits())?,
                None => default_window(&p),
            };
            let svg = render_ford(&p, &q, (&lo, &hi))?;
            match output {
                Some(path) => fs::write(path, svg)?,
                None => out.write_all(svg.as_bytes())?,
            }
            Ok(true)
        }
    }
}

/// Entry point for the binary: exit code 0 iff all assertions passed,
/// 1 if some failed, 2 on errors.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
