//! Connection-spec files: JSON objects with keys `p`, `q`, `transition` and `frames`.
//!
//! ```json
//! {
//!   "p": { "stable": [[-1.0, 2.0]], "unstable": [[1.0]] },
//!   "q": { "stable": [[-1.0]], "unstable": [[1.0, 1.0]] },
//!   "transition": [[1.0, 0.0], [0.0, 6.0]],
//!   "frames": { "ws_p": 0.0, "wu_q": 1.57, "wss_p": 0.78, "wuu_q": 1.04 }
//! }
//! ```
//!
//! An eigenvalue is `[re]` or `[re, im]`. A side of a saddle lists one real,
//! two reals, or one complex value (its conjugate may be listed as well).

use std::fmt;
use std::path::Path;

use saddlelink_core::foliation::PairParams;
use saddlelink_core::params::{EigenBlock, FrameAngles, SaddleData, TransitionMap};
use saddlelink_core::ConnectionSpec;
use serde::{Deserialize, Serialize};

#[derive(Debug)]
pub enum SpecError {
    Io(std::io::Error),
    Json(serde_json::Error),
    Invalid(String),
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::Io(e) => write!(f, "cannot read spec: {e}"),
            SpecError::Json(e) => write!(f, "malformed spec: {e}"),
            SpecError::Invalid(m) => write!(f, "invalid spec: {m}"),
        }
    }
}

impl std::error::Error for SpecError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            SpecError::Io(e) => Some(e),
            SpecError::Json(e) => Some(e),
            SpecError::Invalid(_) => None,
        }
    }
}

impl From<std::io::Error> for SpecError {
    fn from(e: std::io::Error) -> Self {
        SpecError::Io(e)
    }
}

impl From<serde_json::Error> for SpecError {
    fn from(e: serde_json::Error) -> Self {
        SpecError::Json(e)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SaddleFile {
    pub stable: Vec<Vec<f64>>,
    pub unstable: Vec<Vec<f64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FramesFile {
    pub ws_p: f64,
    pub wu_q: f64,
    pub wss_p: f64,
    pub wuu_q: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub p: SaddleFile,
    pub q: SaddleFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transition: Option<[[f64; 2]; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frames: Option<FramesFile>,
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, SpecError> {
    Err(SpecError::Invalid(msg.into()))
}

fn block(values: &[Vec<f64>], what: &str) -> Result<EigenBlock, SpecError> {
    for v in values {
        if v.iter().any(|x| !x.is_finite()) {
            return invalid(format!("{what}: eigenvalues must be finite"));
        }
    }
    let complex = |v: &Vec<f64>| v.len() == 2 && v[1] != 0.0;
    match values {
        [v] if v.len() == 1 || (v.len() == 2 && v[1] == 0.0) => Ok(EigenBlock::Real(v[0])),
        [v] if complex(v) => Ok(EigenBlock::Complex { re: v[0], im: v[1].abs() }),
        [a, b] if complex(a) && complex(b) => {
            if a[0] == b[0] && a[1] == -b[1] {
                Ok(EigenBlock::Complex { re: a[0], im: a[1].abs() })
            } else {
                invalid(format!("{what}: two complex values must be conjugate"))
            }
        }
        [a, b] if !complex(a) && !complex(b) && a.len() <= 2 && b.len() <= 2 => Ok(EigenBlock::RealPair(a[0], b[0])),
        [] => invalid(format!("{what}: no eigenvalues")),
        _ => invalid(format!("{what}: expected one real, two reals or one complex pair")),
    }
}

fn saddle(file: &SaddleFile, name: &str) -> Result<SaddleData, SpecError> {
    for v in file.stable.iter().chain(&file.unstable) {
        if v.is_empty() || v.len() > 2 {
            return invalid(format!("{name}: an eigenvalue is [re] or [re, im]"));
        }
    }
    let stable = block(&file.stable, &format!("{name}.stable"))?;
    let unstable = block(&file.unstable, &format!("{name}.unstable"))?;
    if stable.dim() + unstable.dim() != 3 {
        return invalid(format!("{name}: a saddle in dimension 3 has three eigenvalues"));
    }
    Ok(SaddleData::new(stable, unstable))
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<SpecFile, SpecError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<SpecFile, SpecError> {
        SpecFile::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_spec(&self) -> Result<ConnectionSpec, SpecError> {
        let transition = match self.transition {
            Some([[a, b], [c, d]]) => {
                if ![a, b, c, d].iter().all(|x| x.is_finite()) {
                    return invalid("transition entries must be finite");
                }
                Some(TransitionMap::new(a, b, c, d))
            }
            None => None,
        };
        let frames = match self.frames {
            Some(f) => {
                if ![f.ws_p, f.wu_q, f.wss_p, f.wuu_q].iter().all(|x| x.is_finite()) {
                    return invalid("frame angles must be finite");
                }
                Some(FrameAngles::new(f.ws_p, f.wu_q, f.wss_p, f.wuu_q))
            }
            None => None,
        };
        Ok(ConnectionSpec { p: saddle(&self.p, "p")?, q: saddle(&self.q, "q")?, transition, frames })
    }

    /// The file form of a spec, for writing fixtures.
    pub fn from_spec(spec: &ConnectionSpec) -> SpecFile {
        let side = |b: EigenBlock| match b {
            EigenBlock::Real(x) => vec![vec![x]],
            EigenBlock::RealPair(a, b) => vec![vec![a], vec![b]],
            EigenBlock::Complex { re, im } => vec![vec![re, im]],
        };
        let saddle = |s: &SaddleData| SaddleFile { stable: side(s.stable), unstable: side(s.unstable) };
        SpecFile {
            p: saddle(&spec.p),
            q: saddle(&spec.q),
            transition: spec.transition.map(|t| [[t.m11, t.m12], [t.m21, t.m22]]),
            frames: spec.frames.map(|f| FramesFile {
                ws_p: f.omega_s_p,
                wu_q: f.omega_u_q,
                wss_p: f.omega_ss_p,
                wuu_q: f.omega_uu_q,
            }),
        }
    }
}

pub fn read_spec(path: &Path) -> Result<ConnectionSpec, SpecError> {
    SpecFile::read(path)?.to_spec()
}

/// Foliation-pair parameters given directly, as `{"pair": {"subset": "cc", ...}}`.
#[derive(Clone, Copy, Debug, PartialEq, Deserialize)]
#[serde(tag = "subset", rename_all = "lowercase", deny_unknown_fields)]
pub enum PairFile {
    Cc { alpha: f64, beta: f64, lambda: f64 },
    Rc { beta: f64, mu: f64, lambda: f64, theta0: f64 },
    Cr { alpha: f64, gamma: f64, lambda: f64, theta1: f64 },
    Rr { ws_p: f64, wu_q: f64, wss_p: f64, wuu_q: f64, mu: f64, gamma: f64 },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairWrapper {
    pair: PairFile,
}

impl PairFile {
    /// `None` when the text is not a pair file at all; a spec file, say.
    pub fn parse(text: &str) -> Option<Result<PairFile, SpecError>> {
        let value: serde_json::Value = serde_json::from_str(text).ok()?;
        value.get("pair")?;
        Some(serde_json::from_value::<PairWrapper>(value).map(|w| w.pair).map_err(SpecError::from))
    }

    pub fn to_pair(self) -> Result<PairParams, SpecError> {
        let pair = match self {
            PairFile::Cc { alpha, beta, lambda } => PairParams::Cc { alpha, beta, lambda },
            PairFile::Rc { beta, mu, lambda, theta0 } => PairParams::Rc { beta, mu, lambda, theta0 },
            PairFile::Cr { alpha, gamma, lambda, theta1 } => PairParams::Cr { alpha, gamma, lambda, theta1 },
            PairFile::Rr { ws_p, wu_q, wss_p, wuu_q, mu, gamma } => {
                PairParams::Rr { frames: FrameAngles::new(ws_p, wu_q, wss_p, wuu_q), mu, gamma }
            }
        };
        let values: Vec<f64> = match pair {
            PairParams::Cc { alpha, beta, lambda } => vec![alpha, beta, lambda],
            PairParams::Rc { beta, mu, lambda, theta0 } => vec![beta, mu, lambda, theta0],
            PairParams::Cr { alpha, gamma, lambda, theta1 } => vec![alpha, gamma, lambda, theta1],
            PairParams::Rr { frames: f, mu, gamma } => {
                vec![f.omega_s_p, f.omega_u_q, f.omega_ss_p, f.omega_uu_q, mu, gamma]
            }
        };
        if values.iter().any(|x| !x.is_finite()) {
            return invalid("pair parameters must be finite");
        }
        Ok(pair)
    }
}
