//! Command-line front end for the `boolcl` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::boolean::{boolean_convolve, boolean_power, clt_normalize};
use crate::error::{Error, Result};
use crate::experiments::{constants_for, geometric_grid, lemma_integral_checks, theorem1_experiment};
use crate::inversion::{levy_cauchy_bound, theorem2_bracket};
use crate::measure::{levy_distance, AtomicMeasure};
use crate::report;

pub const THREADS_ENV: &str = "BOOLCL_THREADS";

#[derive(Debug, Parser)]
#[command(name = "boolcl", version, about = "Boolean convolution, Cauchy-transform inversion and the Boolean CLT rate")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Boolean convolution of two measures.
    Convolve {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// n-fold Boolean power, optionally rescaled by 1/sqrt(n).
    Power {
        a: PathBuf,
        #[arg(short = 'n', long = "n")]
        n: u64,
        #[arg(long)]
        normalize: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Levy distance to the symmetric Bernoulli law along a geometric grid of n.
    Clt {
        a: PathBuf,
        #[arg(long, default_value_t = 16)]
        n_start: u64,
        #[arg(long, default_value_t = 1 << 20)]
        n_end: u64,
        #[arg(long, default_value_t = 2)]
        geometric: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        c_override: Option<f64>,
    },
    /// Certified bracket for the mass of [a, b] from the smoothed Cauchy transform.
    Invert {
        a: PathBuf,
        #[arg(short = 'a', allow_hyphen_values = true, value_parser = parse_extended)]
        lo: f64,
        #[arg(short = 'b', allow_hyphen_values = true, value_parser = parse_extended)]
        hi: f64,
        #[arg(short = 'y')]
        y: f64,
        #[arg(short = 'd', long = "delta")]
        delta: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact Levy distance between two measures.
    Levy {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, requires = "y")]
        via_cauchy: bool,
        #[arg(short = 'y')]
        y: Option<f64>,
    },
    /// alpha, K, C and n_min of a standardized measure.
    Constants { a: PathBuf },
    /// Smoothed tail and middle integrals of mu_n at y = 1/n.
    Lemmas {
        a: PathBuf,
        #[arg(short = 'n', long = "n")]
        n: u64,
    },
}

fn parse_extended(s: &str) -> std::result::Result<f64, String> {
    match s.trim().to_ascii_lowercase().as_str() {
        "inf" | "+inf" | "infinity" => Ok(f64::INFINITY),
        "-inf" | "-infinity" => Ok(f64::NEG_INFINITY),
        t => t.parse::<f64>().map_err(|e| e.to_string()).and_then(|v| {
            if v.is_nan() {
                Err("NaN is not an endpoint".into())
            } else {
                Ok(v)
            }
        }),
    }
}

fn read_measure(path: &Path) -> Result<AtomicMeasure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    AtomicMeasure::from_json_str(&text)
}

fn emit(output: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match output {
        Some(p) => std::fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn json_line<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)? + "\n")
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("{THREADS_ENV} must be a non-negative integer, got {raw:?}")))?;
    if n > 0 {
        // A pool may already exist when `run` is called repeatedly in-process.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<()> {
    configure_threads()?;
    match command {
        Command::Convolve { a, b, output } => {
            let r = boolean_convolve(&read_measure(&a)?, &read_measure(&b)?)?;
            emit(output.as_deref(), &(r.to_json_string() + "\n"), stdout)
        }
        Command::Power { a, n, normalize, output } => {
            let mu = read_measure(&a)?;
            let r = if normalize { clt_normalize(&mu, n)? } else { boolean_power(&mu, n)? };
            emit(output.as_deref(), &(r.to_json_string() + "\n"), stdout)
        }
        Command::Clt { a, n_start, n_end, geometric, output, svg, c_override } => {
            let grid = geometric_grid(n_start, n_end, geometric)?;
            let r = theorem1_experiment(&read_measure(&a)?, &grid, c_override)?;
            if let Some(p) = svg {
                std::fs::write(p, report::to_svg(&r))?;
            }
            match output {
                Some(p) => {
                    std::fs::write(p, report::to_csv(&r))?;
                    stdout.write_all(json_line(&report::summary(&r))?.as_bytes())?;
                }
                None => stdout.write_all(report::to_csv(&r).as_bytes())?,
            }
            Ok(())
        }
        Command::Invert { a, lo, hi, y, delta, output } => {
            let cert = theorem2_bracket(&read_measure(&a)?, lo, hi, y, delta)?;
            emit(output.as_deref(), &json_line(&cert)?, stdout)
        }
        Command::Levy { a, b, via_cauchy, y } => {
            let (mu, nu) = (read_measure(&a)?, read_measure(&b)?);
            let d = levy_distance(&mu, &nu)?;
            let value = match (via_cauchy, y) {
                (true, Some(y)) => {
                    let c = levy_cauchy_bound(&mu, &nu, y)?;
                    json!({ "d_lev": d, "y": y, "cauchy_bound": c.bound })
                }
                _ => json!({ "d_lev": d }),
            };
            stdout.write_all(json_line(&value)?.as_bytes())?;
            Ok(())
        }
        Command::Constants { a } => {
            let l = constants_for(&read_measure(&a)?)?;
            stdout.write_all(json_line(&l)?.as_bytes())?;
            Ok(())
        }
        Command::Lemmas { a, n } => {
            let mu = read_measure(&a)?;
            let l = constants_for(&mu)?;
            let r = lemma_integral_checks(&mu, n, &l)?;
            stdout.write_all(json_line(&r)?.as_bytes())?;
            Ok(())
        }
    }
}

fn error_json(kind: &str, message: &str) -> String {
    json!({ "error": { "kind": kind, "message": message } }).to_string()
}

/// Runs the CLI on `args` (program name first) and returns the exit status.
///
/// Validation failures exit with 2 and numerical failures with 1; both write
/// a single JSON object to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let _ = writeln!(stderr, "{}", error_json("usage", e.to_string().trim_end()));
            return 2;
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "{}", error_json(e.kind(), &e.to_string()));
            if e.is_validation() {
                2
            } else {
                1
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extended_reals() {
        assert_eq!(parse_extended("-inf").unwrap(), f64::NEG_INFINITY);
        assert_eq!(parse_extended("Inf").unwrap(), f64::INFINITY);
        assert_eq!(parse_extended("-0.5").unwrap(), -0.5);
        assert!(parse_extended("nan").is_err());
        assert!(parse_extended("x").is_err());
    }

    #[test]
    fn usage_errors_exit_two() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["boolcl", "power"], &mut out, &mut err), 2);
        let v: serde_json::Value = serde_json::from_slice(&err).unwrap();
        assert_eq!(v["error"]["kind"], "usage");
    }

    #[test]
    fn missing_file_is_validation() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["boolcl", "constants", "/nonexistent/m.json"], &mut out, &mut err), 2);
    }
}
