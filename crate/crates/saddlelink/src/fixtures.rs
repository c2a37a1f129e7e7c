//! Plain-text table of golden holonomy ratios and moduli.
//!
//! Lines starting with `#` are comments. A record is a kind followed by
//! `name=value` fields; the last two fields are always `value` and `tol`:
//!
//! ```text
//! psi alpha=1 beta=-1 t=3.0833333333333335 value=-0.0612... tol=1e-10
//! ```
//!
//! | kind            | parameters                                          |
//! |-----------------|-----------------------------------------------------|
//! | `log_spiral`    | `alpha phi1 phi2 travel`                            |
//! | `pushed_spiral` | `beta lambda theta0 delta delta_prime travel`       |
//! | `real`          | `mu phi1 phi2`                                      |
//! | `psi`           | `alpha beta t`                                      |
//! | `upsilon`       | `beta mu s theta0`                                  |
//! | `upsilon_cr`    | `alpha gamma lambda theta1`                         |
//!
//! Ratios are homothety ratios (not logarithms). `value` comes from the ODE
//! oracle, `tol` is the oracle's relative tolerance.

use std::fmt;

use saddlelink_core::foliation::LinearField;
use saddlelink_core::holonomy::{
    log_spiral_holonomy_ratio, psi_modulus, pushed_spiral_holonomy_ratio, real_holonomy_ratio, upsilon_cr,
    upsilon_modulus, FrameRule, SectorFrame,
};
use saddlelink_core::linalg::{scale, unit};
use saddlelink_core::oracle::shooting::oracle_upsilon_cr;
use saddlelink_core::oracle::{holonomy_ode_oracle, oracle_psi, oracle_upsilon, Tolerances};
use saddlelink_core::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    LogSpiral,
    PushedSpiral,
    Real,
    Psi,
    Upsilon,
    UpsilonCr,
}

impl Kind {
    pub const ALL: [Kind; 6] =
        [Kind::LogSpiral, Kind::PushedSpiral, Kind::Real, Kind::Psi, Kind::Upsilon, Kind::UpsilonCr];

    pub fn name(&self) -> &'static str {
        match self {
            Kind::LogSpiral => "log_spiral",
            Kind::PushedSpiral => "pushed_spiral",
            Kind::Real => "real",
            Kind::Psi => "psi",
            Kind::Upsilon => "upsilon",
            Kind::UpsilonCr => "upsilon_cr",
        }
    }

    pub fn params(&self) -> &'static [&'static str] {
        match self {
            Kind::LogSpiral => &["alpha", "phi1", "phi2", "travel"],
            Kind::PushedSpiral => &["beta", "lambda", "theta0", "delta", "delta_prime", "travel"],
            Kind::Real => &["mu", "phi1", "phi2"],
            Kind::Psi => &["alpha", "beta", "t"],
            Kind::Upsilon => &["beta", "mu", "s", "theta0"],
            Kind::UpsilonCr => &["alpha", "gamma", "lambda", "theta1"],
        }
    }

    /// Whether the value is a holonomy ratio rather than a modulus.
    pub fn is_ratio(&self) -> bool {
        matches!(self, Kind::LogSpiral | Kind::PushedSpiral | Kind::Real)
    }

    fn parse(s: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Golden {
    pub kind: Kind,
    /// In the order of [`Kind::params`].
    pub params: Vec<f64>,
    pub value: f64,
    pub tol: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FixtureError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for FixtureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for FixtureError {}

impl fmt::Display for Golden {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.name())?;
        for (name, v) in self.kind.params().iter().zip(&self.params) {
            write!(f, " {name}={v:?}")?;
        }
        write!(f, " value={:?} tol={:?}", self.value, self.tol)
    }
}

pub fn parse(text: &str) -> std::result::Result<Vec<Golden>, FixtureError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let err = |message: String| FixtureError { line: i + 1, message };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let kind_name = tokens.next().unwrap_or_default();
        let kind = Kind::parse(kind_name).ok_or_else(|| err(format!("unknown kind `{kind_name}`")))?;
        let mut names: Vec<&str> = kind.params().to_vec();
        names.extend(["value", "tol"]);
        let mut values = Vec::with_capacity(names.len());
        for name in &names {
            let token = tokens.next().ok_or_else(|| err(format!("missing `{name}`")))?;
            let (key, v) = token.split_once('=').ok_or_else(|| err(format!("expected {name}=…")))?;
            if key != *name {
                return Err(err(format!("expected `{name}`, found `{key}`")));
            }
            let v: f64 = v.parse().map_err(|_| err(format!("bad number for `{name}`")))?;
            if !v.is_finite() {
                return Err(err(format!("`{name}` is not finite")));
            }
            values.push(v);
        }
        if tokens.next().is_some() {
            return Err(err("trailing fields".into()));
        }
        let tol = values.pop().unwrap_or_default();
        let value = values.pop().unwrap_or_default();
        out.push(Golden { kind, params: values, value, tol });
    }
    Ok(out)
}

/// The table with its header.
pub fn format(records: &[Golden], header: &str) -> String {
    let mut out = String::new();
    for line in header.lines() {
        out.push_str("# ");
        out.push_str(line);
        out.push('\n');
    }
    for kind in Kind::ALL {
        out.push_str(&format!("# {} {}\n", kind.name(), kind.params().join(" ")));
    }
    for r in records {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}

fn pushed_frame(p: &[f64]) -> SectorFrame {
    SectorFrame { delta: p[3], delta_prime: p[4], travel: p[5], rule: FrameRule::Cc }
}

/// The closed form for a record's parameters.
pub fn closed_form(kind: Kind, p: &[f64]) -> Result<f64> {
    Ok(match kind {
        Kind::LogSpiral => log_spiral_holonomy_ratio(p[0], p[1], p[2], p[3])?.value(),
        Kind::PushedSpiral => pushed_spiral_holonomy_ratio(p[0], p[1], p[2], &pushed_frame(p))?.value(),
        Kind::Real => real_holonomy_ratio(p[0], p[1], p[2])?.value(),
        Kind::Psi => psi_modulus(p[0], p[1], p[2])?,
        Kind::Upsilon => upsilon_modulus(p[0], p[1], p[2], p[3])?,
        Kind::UpsilonCr => upsilon_cr(p[0], p[1], p[2], p[3])?,
    })
}

/// Field and rays of a ratio record, for the shooting oracle.
pub fn ratio_setup(kind: Kind, p: &[f64]) -> Option<(LinearField, f64, f64)> {
    match kind {
        Kind::LogSpiral => Some((LinearField::logarithmic(p[0]), p[1], p[2])),
        Kind::PushedSpiral => Some((LinearField::complex(p[0], p[1], p[2]), p[3], p[4])),
        Kind::Real => Some((LinearField::real(p[0]), p[1], p[2])),
        _ => None,
    }
}

/// The oracle for a record's parameters; ratios start at radius `r0`.
pub fn oracle(kind: Kind, p: &[f64], r0: f64, tol: &Tolerances) -> Result<f64> {
    if let Some((field, from, to)) = ratio_setup(kind, p) {
        return Ok(holonomy_ode_oracle(&field, scale(unit(from), r0), to, tol)?.value());
    }
    let lambda_of_s = |s: f64| s + (s * s + 1.0).sqrt();
    Ok(match kind {
        Kind::Psi => {
            let t = p[2];
            oracle_psi(p[0], p[1], t + ((t - 1.0) * (t + 1.0)).sqrt(), tol)?.value
        }
        Kind::Upsilon => {
            if p[2] < 0.0 {
                return Err(Error::Domain("the shooting oracle takes s >= 0"));
            }
            oracle_upsilon(p[0], p[1], lambda_of_s(p[2]), p[3], tol)?.value
        }
        Kind::UpsilonCr => oracle_upsilon_cr(p[0], p[1], p[2], p[3], tol)?.value,
        _ => unreachable!("ratio kinds handled above"),
    })
}
