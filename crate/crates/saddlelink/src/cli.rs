//! The `saddlelink` command line.
//!
//! Exit codes: 0 success; 1 unreadable or invalid input, bad flags, render
//! failure; 2 genericity violation; 3 and 4 for `compare` verdicts "not
//! equivalent" and "boundary-indeterminate".

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use saddlelink_core::equivalence::{classify_params, Classification};
use saddlelink_core::foliation::PairParams;
use saddlelink_core::oracle::rr::rr_type_oracle;
use saddlelink_core::oracle::shooting::oracle_upsilon_cr;
use saddlelink_core::oracle::{count_tangency_directions_oracle, oracle_psi, oracle_upsilon, Tolerances};
use saddlelink_core::params::{morse_subset, prepare, NormalizedParams};
use saddlelink_core::tangency::canonical_rc;
use saddlelink_core::{equivalent, Error, RrType, Subset, Verdict};

use crate::report::{self, finite, ClassifyReport, CompareReport, OracleOut, ValidateReport, FORMAT_VERSION, TOOL};
use crate::spec_file::{read_spec, PairFile, SpecFile};
use crate::svg::RenderScene;
use crate::sweep::{self, GridFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_GENERICITY: i32 = 2;
pub const EXIT_NOT_EQUIVALENT: i32 = 3;
pub const EXIT_BOUNDARY: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "saddlelink", version, about = "Invariants and equivalence of 3D saddle connections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Subset, (TT), type and moduli of one connection, checked against the oracles.
    Classify {
        file: PathBuf,
        /// Unit-circle samples for the oracle cross-check.
        #[arg(long, default_value_t = 4096, value_parser = clap::value_parser!(u64).range(1000..))]
        samples: u64,
        /// Skip the oracle cross-check.
        #[arg(long)]
        no_oracle: bool,
        #[arg(long, env = "SADDLELINK_TOL", default_value_t = 1e-9, allow_negative_numbers = true)]
        tol: f64,
    },
    /// Decide whether two connections are topologically equivalent.
    Compare {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, env = "SADDLELINK_TOL", default_value_t = 1e-9, allow_negative_numbers = true)]
        tol: f64,
    },
    /// Closed forms against the oracles over a parameter grid.
    Sweep {
        grid: PathBuf,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// SVG portrait of the two foliations with their tangency lines.
    Render {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
        leaves: u64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        radius: f64,
        /// Shade the sector between the tangency lines used for the moduli.
        #[arg(long)]
        shade: bool,
    },
    /// List genericity violations.
    Validate { file: PathBuf },
}

fn shown(path: &Path) -> String {
    path.display().to_string()
}

/// Parse `args` (program name first) and run; reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Classify { file, samples, no_oracle, tol } => {
            classify(&file, (!no_oracle).then_some(samples as usize), tol, out)
        }
        Command::Compare { first, second, tol } => compare(&first, &second, tol, out),
        Command::Sweep { grid, jobs, seed } => run_sweep(&grid, jobs, seed, out),
        Command::Render { file, out: target, leaves, radius, shade } => {
            render(&file, &target, leaves as usize, radius, shade)
        }
        Command::Validate { file } => validate(&file, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "saddlelink: {message}");
            code
        }
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

fn io(e: std::io::Error) -> Failure {
    fail(EXIT_INPUT, format!("cannot write output: {e}"))
}

fn emit<T: serde::Serialize>(out: &mut dyn Write, record: &T) -> Result<(), Failure> {
    writeln!(out, "{}", report::line(record)).map_err(io)
}

fn check_tol(tol: f64) -> Result<f64, Failure> {
    if tol.is_finite() && tol >= 0.0 {
        Ok(tol)
    } else {
        Err(fail(EXIT_INPUT, "tolerance must be a finite nonnegative number"))
    }
}

enum Loaded {
    Ready(NormalizedParams, Classification),
    Violations(Subset, Vec<saddlelink_core::Violation>),
}

fn load(path: &Path) -> Result<Loaded, Failure> {
    let spec = read_spec(path).map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", shown(path))))?;
    match prepare(&spec) {
        Ok(params) => {
            let c = classify_params(&params).map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", shown(path))))?;
            Ok(Loaded::Ready(params, c))
        }
        Err(Error::GenericityViolation(v)) => {
            let subset = morse_subset(&spec).map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
            Ok(Loaded::Violations(subset, v))
        }
        Err(e) => Err(fail(EXIT_INPUT, format!("{}: {e}", shown(path)))),
    }
}

fn lambda_of_s(s: f64) -> f64 {
    s + (s * s + 1.0).sqrt()
}

/// Shooting value of the modulus the classification carries, if any.
fn oracle_modulus(p: &NormalizedParams, c: &Classification) -> Option<saddlelink_core::Result<(f64, f64)>> {
    let tol = Tolerances::default();
    match p.subset {
        Subset::TwoOneCC => {
            let closed = c.psi?.value;
            Some(oracle_psi(p.alpha?, p.beta?, p.lambda?, &tol).map(|o| (closed, o.value)))
        }
        Subset::TwoOneRC => {
            let closed = c.upsilon?.value;
            let (s, theta0) = canonical_rc(p.s?, p.theta0?);
            Some(oracle_upsilon(p.beta?, p.mu?, lambda_of_s(s), theta0, &tol).map(|o| (closed, o.value)))
        }
        Subset::TwoOneCR => {
            let closed = c.upsilon?.value;
            Some(oracle_upsilon_cr(p.alpha?, p.gamma?, p.lambda?, p.theta1?, &tol).map(|o| (closed, o.value)))
        }
        _ => None,
    }
}

fn cross_check(p: &NormalizedParams, c: &Classification, samples: usize) -> OracleOut {
    let mut out = OracleOut { samples, agrees: true, ..OracleOut::default() };
    let Some(pair) = PairParams::from_params(p) else {
        out.note = Some("no foliation pair for this subset".into());
        return out;
    };
    if let PairParams::Rr { frames, .. } = pair {
        match rr_type_oracle(&frames, samples) {
            Ok((kind, count)) => {
                out.count = Some(count);
                out.expected = Some(if c.rr_type == Some(RrType::I) { 0 } else { 4 });
                out.agrees = Some(kind) == c.rr_type;
            }
            Err(e) => out.note = Some(e.to_string()),
        }
        return out;
    }
    let Some(tt) = c.tt else { return out };
    if tt.boundary {
        out.note = Some("on the (TT) boundary; count not checked".into());
        return out;
    }
    let expected = if tt.in_tt { 0 } else { 4 };
    out.expected = Some(expected);
    match count_tangency_directions_oracle(&pair, samples) {
        Ok(count) => {
            out.count = Some(count);
            out.agrees = count == expected;
        }
        Err(e) => out.note = Some(e.to_string()),
    }
    match oracle_modulus(p, c) {
        Some(Ok((closed, shot))) => {
            out.modulus = finite(shot);
            out.max_deviation = finite((closed - shot).abs() / shot.abs().max(1.0));
        }
        Some(Err(e)) => out.note = Some(format!("modulus oracle: {e}")),
        None => {}
    }
    out
}

fn classify(path: &Path, samples: Option<usize>, tol: f64, out: &mut dyn Write) -> Result<i32, Failure> {
    let tol = check_tol(tol)?;
    let mut report = ClassifyReport {
        version: FORMAT_VERSION,
        command: "classify",
        input: shown(path),
        status: "ok",
        params: None,
        classification: None,
        violations: Vec::new(),
        oracle: None,
        tolerances: report::Tolerances::new(tol),
        tool: TOOL,
    };
    let code = match load(path)? {
        Loaded::Ready(params, c) => {
            report.params = Some((&params).into());
            report.oracle = samples.map(|n| cross_check(&params, &c, n));
            report.classification = Some((&c).into());
            EXIT_OK
        }
        Loaded::Violations(_, v) => {
            report.status = "genericity-violation";
            report.violations = v.iter().map(Into::into).collect();
            EXIT_GENERICITY
        }
    };
    emit(out, &report)?;
    Ok(code)
}

fn compare(first: &Path, second: &Path, tol: f64, out: &mut dyn Write) -> Result<i32, Failure> {
    let tol = check_tol(tol)?;
    let ready = |path: &Path| match load(path)? {
        Loaded::Ready(_, c) => Ok(c),
        Loaded::Violations(_, v) => {
            let names: Vec<&str> = v.iter().map(|v| v.name()).collect();
            Err(fail(EXIT_GENERICITY, format!("{}: genericity violated: {}", shown(path), names.join(", "))))
        }
    };
    let (a, b) = (ready(first)?, ready(second)?);
    let verdict = equivalent(&a, &b, tol).map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
    emit(out, &CompareReport::new([shown(first), shown(second)], [&a, &b], &verdict))?;
    Ok(match verdict.verdict {
        Verdict::Equivalent => EXIT_OK,
        Verdict::NotEquivalent => EXIT_NOT_EQUIVALENT,
        Verdict::BoundaryIndeterminate => EXIT_BOUNDARY,
    })
}

fn run_sweep(path: &Path, jobs: usize, seed: u64, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", shown(path))))?;
    let grid = GridFile::parse(&text).map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", shown(path))))?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| fail(EXIT_INPUT, format!("cannot start workers: {e}")))?;
    let (points, summary) = pool.install(|| sweep::run(&grid, seed));
    for p in &points {
        emit(out, p)?;
    }
    emit(out, &summary)?;
    Ok(EXIT_OK)
}

fn render_pair(path: &Path) -> Result<PairParams, Failure> {
    let bad = |e: &dyn std::fmt::Display| fail(EXIT_INPUT, format!("{}: {e}", shown(path)));
    let text = std::fs::read_to_string(path).map_err(|e| bad(&e))?;
    if let Some(pair) = PairFile::parse(&text) {
        return pair.and_then(PairFile::to_pair).map_err(|e| bad(&e));
    }
    let spec = SpecFile::parse(&text).and_then(|f| f.to_spec()).map_err(|e| bad(&e))?;
    let params = prepare(&spec).map_err(|e| bad(&e))?;
    PairParams::from_params(&params).ok_or_else(|| bad(&"only (2-1) connections have a foliation pair to draw"))
}

fn render(path: &Path, target: &Path, leaves: usize, radius: f64, shade: bool) -> Result<i32, Failure> {
    let pair = render_pair(path)?;
    let mut scene = RenderScene::new(pair, radius, leaves).map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
    scene.shade_sector = shade;
    let svg = scene.render().map_err(|e| fail(EXIT_INPUT, format!("render failed: {e}")))?;
    std::fs::write(target, svg).map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", shown(target))))?;
    Ok(EXIT_OK)
}

fn validate(path: &Path, out: &mut dyn Write) -> Result<i32, Failure> {
    let (subset, violations) = match load(path)? {
        Loaded::Ready(params, _) => (params.subset, Vec::new()),
        Loaded::Violations(subset, v) => (subset, v),
    };
    let report = ValidateReport {
        version: FORMAT_VERSION,
        command: "validate",
        input: shown(path),
        subset: subset.as_str(),
        violations: violations.iter().map(Into::into).collect(),
        tool: TOOL,
    };
    emit(out, &report)?;
    Ok(if violations.is_empty() { EXIT_OK } else { EXIT_GENERICITY })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["saddlelink"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn flag_errors_exit_one() {
        assert_eq!(call(&[]).0, EXIT_INPUT);
        assert_eq!(call(&["frobnicate"]).0, EXIT_INPUT);
        assert_eq!(call(&["render", "x.json", "--out", "x.svg", "--leaves", "0"]).0, EXIT_INPUT);
        assert_eq!(call(&["classify", "x.json", "--samples", "10"]).0, EXIT_INPUT);
        assert_eq!(call(&["--version"]).0, EXIT_OK);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn missing_file_exits_one() {
        let (code, out, err) = call(&["classify", "/nonexistent/spec.json"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(out.is_empty());
        assert!(err.starts_with("saddlelink: "));
    }
}
