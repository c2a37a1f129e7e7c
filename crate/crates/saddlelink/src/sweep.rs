//! Parameter sweeps: closed-form verdicts against the oracles over a grid.
//!
//! Grid files are JSON:
//!
//! ```json
//! {
//!   "samples": 2000,
//!   "moduli": true,
//!   "grids": [
//!     { "subset": "cc", "alpha": {"from": 0.5, "to": 2.0, "steps": 10}, "beta": -1.0, "t": {"from": 1.0, "to": 6.0, "steps": 10} },
//!     { "subset": "rc", "beta": 1.0, "mu": 0.5, "s": {"from": 0.0, "to": 4.0, "steps": 9}, "theta0": 0.7 },
//!     { "subset": "cr", "alpha": 1.0, "gamma": 0.5, "s": 2.0, "theta1": {"from": -1.5, "to": 1.5, "steps": 7} },
//!     { "subset": "rr", "random": 20 }
//!   ]
//! }
//! ```
//!
//! An axis is a number or an inclusive `{from, to, steps}` range. Real-real
//! grids draw random frames from the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use saddlelink_core::foliation::PairParams;
use saddlelink_core::holonomy::{psi_modulus, upsilon_cr, upsilon_modulus};
use saddlelink_core::math::PI;
use saddlelink_core::oracle::rr::rr_type_oracle;
use saddlelink_core::oracle::shooting::oracle_upsilon_cr;
use saddlelink_core::oracle::{count_tangency_directions_oracle, oracle_psi, oracle_upsilon, Tolerances};
use saddlelink_core::params::FrameAngles;
use saddlelink_core::tangency::{frame_margin, is_tt_cc, is_tt_cr, is_tt_rc, rr_type};
use saddlelink_core::{Error, Result};

use crate::report::{finite, FORMAT_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum Axis {
    Value(f64),
    Range(Range),
}

#[derive(Clone, Copy, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Range {
    pub from: f64,
    pub to: f64,
    pub steps: usize,
}

impl Axis {
    pub fn values(&self) -> Vec<f64> {
        match *self {
            Axis::Value(v) => vec![v],
            Axis::Range(Range { from, steps: 1, .. }) => vec![from],
            Axis::Range(Range { from, to, steps }) => {
                (0..steps).map(|i| from + (to - from) * i as f64 / (steps - 1) as f64).collect()
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(tag = "subset", rename_all = "lowercase", deny_unknown_fields)]
pub enum Grid {
    Cc { alpha: Axis, beta: Axis, t: Axis },
    Rc { beta: Axis, mu: Axis, s: Axis, theta0: Axis },
    Cr { alpha: Axis, gamma: Axis, s: Axis, theta1: Axis },
    Rr { random: usize },
}

fn default_samples() -> usize {
    2000
}

fn default_moduli() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridFile {
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default = "default_moduli")]
    pub moduli: bool,
    #[serde(default)]
    pub grids: Vec<Grid>,
}

impl GridFile {
    pub fn parse(text: &str) -> std::result::Result<GridFile, String> {
        let file: GridFile = serde_json::from_str(text).map_err(|e| format!("malformed grid: {e}"))?;
        if file.samples < 1000 {
            return Err("samples must be at least 1000".into());
        }
        Ok(file)
    }
}

fn product(axes: &[&Axis]) -> Vec<Vec<f64>> {
    let mut out = vec![Vec::new()];
    for axis in axes {
        let values = axis.values();
        out = out
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(*v);
                    p
                })
            })
            .collect();
    }
    out
}

/// One grid point in the coordinates the closed forms take.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Point {
    Cc { alpha: f64, beta: f64, t: f64 },
    Rc { beta: f64, mu: f64, s: f64, theta0: f64 },
    Cr { alpha: f64, gamma: f64, s: f64, theta1: f64 },
    Rr { frames: FrameAngles },
}

/// Grid points in file order; random frames come from `seed`.
pub fn points(file: &GridFile, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for grid in &file.grids {
        match grid {
            Grid::Cc { alpha, beta, t } => out.extend(product(&[alpha, beta, t]).into_iter().map(|v| Point::Cc {
                alpha: v[0],
                beta: v[1],
                t: v[2],
            })),
            Grid::Rc { beta, mu, s, theta0 } => {
                out.extend(product(&[beta, mu, s, theta0]).into_iter().map(|v| Point::Rc {
                    beta: v[0],
                    mu: v[1],
                    s: v[2],
                    theta0: v[3],
                }))
            }
            Grid::Cr { alpha, gamma, s, theta1 } => {
                out.extend(product(&[alpha, gamma, s, theta1]).into_iter().map(|v| Point::Cr {
                    alpha: v[0],
                    gamma: v[1],
                    s: v[2],
                    theta1: v[3],
                }))
            }
            Grid::Rr { random } => {
                for _ in 0..*random {
                    let a: [f64; 4] = std::array::from_fn(|_| rng.gen_range(0.0..PI));
                    out.push(Point::Rr { frames: FrameAngles::new(a[0], a[1], a[2], a[3]) });
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Agree,
    Mismatch,
    Boundary,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointReport {
    pub version: u32,
    pub command: &'static str,
    pub index: usize,
    pub subset: &'static str,
    pub params: Vec<(&'static str, f64)>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub in_tt: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rr_type: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_modulus: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deviation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub version: u32,
    pub command: &'static str,
    pub seed: u64,
    pub samples: usize,
    pub points: usize,
    pub agree: usize,
    pub mismatch: usize,
    pub boundary: usize,
    pub errors: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_modulus_deviation: Option<f64>,
}

fn lambda_of_s(s: f64) -> f64 {
    s + (s * s + 1.0).sqrt()
}

fn lambda_of_t(t: f64) -> f64 {
    t + ((t - 1.0) * (t + 1.0)).sqrt()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

struct Outcome {
    subset: &'static str,
    params: Vec<(&'static str, f64)>,
    in_tt: Option<bool>,
    rr_type: Option<String>,
    count: Option<usize>,
    modulus: Option<(f64, f64)>,
    status: Status,
}

fn evaluate(point: &Point, samples: usize, moduli: bool) -> Result<Outcome> {
    let tol = Tolerances::default();
    let (subset, params, verdict, pair) = match *point {
        Point::Cc { alpha, beta, t } => (
            "(2-1)CC",
            vec![("alpha", alpha), ("beta", beta), ("t", t)],
            is_tt_cc(alpha, beta, t)?,
            PairParams::Cc { alpha, beta, lambda: lambda_of_t(t) },
        ),
        Point::Rc { beta, mu, s, theta0 } => (
            "(2-1)RC",
            vec![("beta", beta), ("mu", mu), ("s", s), ("theta0", theta0)],
            is_tt_rc(beta, mu, s, theta0)?,
            PairParams::Rc { beta, mu, lambda: lambda_of_s(s), theta0 },
        ),
        Point::Cr { alpha, gamma, s, theta1 } => {
            let lambda = lambda_of_s(s);
            (
                "(2-1)CR",
                vec![("alpha", alpha), ("gamma", gamma), ("s", s), ("theta1", theta1)],
                is_tt_cr(alpha, gamma, lambda, theta1)?,
                PairParams::Cr { alpha, gamma, lambda, theta1 },
            )
        }
        Point::Rr { frames } => {
            let params = vec![
                ("ws_p", frames.omega_s_p),
                ("wu_q", frames.omega_u_q),
                ("wss_p", frames.omega_ss_p),
                ("wuu_q", frames.omega_uu_q),
            ];
            let mut out = Outcome {
                subset: "(2-1)RR",
                params,
                in_tt: None,
                rr_type: None,
                count: None,
                modulus: None,
                status: Status::Agree,
            };
            if frame_margin(&frames) < 1e-6 {
                return Err(Error::FrameDegenerate);
            }
            let closed = rr_type(&frames)?;
            let (oracle, count) = rr_type_oracle(&frames, samples)?;
            out.rr_type = Some(closed.to_string());
            out.count = Some(count);
            out.status = if closed == oracle { Status::Agree } else { Status::Mismatch };
            return Ok(out);
        }
    };
    let mut out = Outcome {
        subset,
        params,
        in_tt: Some(verdict.in_tt),
        rr_type: None,
        count: None,
        modulus: None,
        status: Status::Agree,
    };
    if verdict.boundary {
        out.status = Status::Boundary;
        return Ok(out);
    }
    match count_tangency_directions_oracle(&pair, samples) {
        Ok(count) => {
            out.count = Some(count);
            let expected = if verdict.in_tt { 0 } else { 4 };
            if count != expected {
                out.status = Status::Mismatch;
            }
        }
        Err(Error::InconclusiveNearBoundary) => {
            out.status = Status::Boundary;
            return Ok(out);
        }
        Err(e) => return Err(e),
    }
    if moduli && !verdict.in_tt && out.status == Status::Agree {
        let pair_values = match *point {
            Point::Cc { alpha, beta, t } => {
                (psi_modulus(alpha, beta, t)?, oracle_psi(alpha, beta, lambda_of_t(t), &tol)?.value)
            }
            Point::Rc { beta, mu, s, theta0 } => {
                (upsilon_modulus(beta, mu, s, theta0)?, oracle_upsilon(beta, mu, lambda_of_s(s), theta0, &tol)?.value)
            }
            Point::Cr { alpha, gamma, s, theta1 } => {
                let lambda = lambda_of_s(s);
                (
                    upsilon_cr(alpha, gamma, lambda, theta1)?,
                    oracle_upsilon_cr(alpha, gamma, lambda, theta1, &tol)?.value,
                )
            }
            Point::Rr { .. } => unreachable!("handled above"),
        };
        out.modulus = Some(pair_values);
    }
    Ok(out)
}

/// Evaluate every point; the order of the output follows the grid, not the scheduler.
pub fn run(file: &GridFile, seed: u64) -> (Vec<PointReport>, Summary) {
    let pts = points(file, seed);
    let reports: Vec<PointReport> = pts
        .par_iter()
        .enumerate()
        .map(|(index, point)| {
            let mut r = PointReport {
                version: FORMAT_VERSION,
                command: "sweep",
                index,
                subset: "",
                params: Vec::new(),
                status: Status::Error,
                in_tt: None,
                rr_type: None,
                oracle_count: None,
                modulus: None,
                oracle_modulus: None,
                deviation: None,
                error: None,
            };
            match evaluate(point, file.samples, file.moduli) {
                Ok(o) => {
                    r.subset = o.subset;
                    r.params = o.params;
                    r.status = o.status;
                    r.in_tt = o.in_tt;
                    r.rr_type = o.rr_type;
                    r.oracle_count = o.count;
                    if let Some((closed, oracle)) = o.modulus {
                        r.modulus = finite(closed);
                        r.oracle_modulus = finite(oracle);
                        r.deviation = finite(rel(closed, oracle));
                    }
                }
                Err(e) => {
                    r.subset = match point {
                        Point::Cc { .. } => "(2-1)CC",
                        Point::Rc { .. } => "(2-1)RC",
                        Point::Cr { .. } => "(2-1)CR",
                        Point::Rr { .. } => "(2-1)RR",
                    };
                    r.error = Some(e.to_string());
                }
            }
            r
        })
        .collect();
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let max_dev =
        reports.iter().filter_map(|r| r.deviation).fold(None, |m: Option<f64>, d| Some(m.map_or(d, |m| m.max(d))));
    let summary = Summary {
        version: FORMAT_VERSION,
        command: "sweep-summary",
        seed,
        samples: file.samples,
        points: reports.len(),
        agree: count(Status::Agree),
        mismatch: count(Status::Mismatch),
        boundary: count(Status::Boundary),
        errors: count(Status::Error),
        max_modulus_deviation: max_dev,
    };
    (reports, summary)
}
