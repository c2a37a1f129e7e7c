//! JSON-lines report records. Every record carries `version`; non-finite
//! numbers are dropped rather than written.

use saddlelink_core::equivalence::{Classification, Compared, EquivalenceVerdict, Modulus, ModulusArgs};
use saddlelink_core::params::{FrameAngles, NormalizedParams, Violation};
use saddlelink_core::{TtVerdict, TOL_BOUNDARY};
use serde::Serialize;

pub const FORMAT_VERSION: u32 = 1;

pub fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

fn finite_opt(x: Option<f64>) -> Option<f64> {
    x.and_then(finite)
}

#[derive(Debug, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

pub const TOOL: Tool = Tool { name: "saddlelink", version: env!("CARGO_PKG_VERSION") };

#[derive(Debug, Serialize)]
pub struct Tolerances {
    pub compare: f64,
    pub boundary: f64,
}

impl Tolerances {
    pub fn new(compare: f64) -> Self {
        Tolerances { compare, boundary: TOL_BOUNDARY }
    }
}

#[derive(Debug, Serialize)]
pub struct FramesOut {
    pub ws_p: f64,
    pub wu_q: f64,
    pub wss_p: f64,
    pub wuu_q: f64,
}

impl From<FrameAngles> for FramesOut {
    fn from(f: FrameAngles) -> Self {
        FramesOut { ws_p: f.omega_s_p, wu_q: f.omega_u_q, wss_p: f.omega_ss_p, wuu_q: f.omega_uu_q }
    }
}

#[derive(Debug, Serialize)]
pub struct ParamsOut {
    pub subset: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta1: Option<f64>,
    pub reflected: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frames: Option<FramesOut>,
}

impl From<&NormalizedParams> for ParamsOut {
    fn from(p: &NormalizedParams) -> Self {
        ParamsOut {
            subset: p.subset.as_str(),
            alpha: finite_opt(p.alpha),
            beta: finite_opt(p.beta),
            mu: finite_opt(p.mu),
            gamma: finite_opt(p.gamma),
            lambda: finite_opt(p.lambda),
            t: finite_opt(p.t),
            s: finite_opt(p.s),
            theta0: finite_opt(p.theta0),
            theta1: finite_opt(p.theta1),
            reflected: p.reflected,
            frames: p.frames.map(FramesOut::from),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TtOut {
    pub in_tt: bool,
    pub boundary: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<f64>,
}

impl From<TtVerdict> for TtOut {
    fn from(v: TtVerdict) -> Self {
        TtOut { in_tt: v.in_tt, boundary: v.boundary, witness: finite(v.witness) }
    }
}

#[derive(Debug, Serialize)]
pub struct ModulusOut {
    pub value: f64,
    pub at: Vec<(&'static str, f64)>,
}

impl ModulusOut {
    fn from(m: Modulus) -> Option<Self> {
        let at = match m.args {
            ModulusArgs::Psi { alpha, beta, t } => vec![("alpha", alpha), ("beta", beta), ("t", t)],
            ModulusArgs::Upsilon { beta, mu, s, theta0 } => {
                vec![("beta", beta), ("mu", mu), ("s", s), ("theta0", theta0)]
            }
        };
        Some(ModulusOut { value: finite(m.value)?, at })
    }
}

#[derive(Debug, Serialize)]
pub struct ClassificationOut {
    pub subset: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tt: Option<TtOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rr_type: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi: Option<ModulusOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upsilon: Option<ModulusOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_beta_ratio: Option<f64>,
}

impl From<&Classification> for ClassificationOut {
    fn from(c: &Classification) -> Self {
        ClassificationOut {
            subset: c.subset.as_str(),
            tt: c.tt.map(TtOut::from),
            rr_type: c.rr_type.map(|t| t.to_string()),
            psi: c.psi.and_then(ModulusOut::from),
            upsilon: c.upsilon.and_then(ModulusOut::from),
            alpha_beta_ratio: finite_opt(c.alpha_beta_ratio),
        }
    }
}

/// What the sampling and shooting oracles say about the same connection.
#[derive(Debug, Default, Serialize)]
pub struct OracleOut {
    pub samples: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<usize>,
    pub agrees: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_deviation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct ViolationOut {
    pub name: &'static str,
    pub detail: String,
}

impl From<&Violation> for ViolationOut {
    fn from(v: &Violation) -> Self {
        ViolationOut { name: v.name(), detail: v.to_string() }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub version: u32,
    pub command: &'static str,
    pub input: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationOut>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<ViolationOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleOut>,
    pub tolerances: Tolerances,
    pub tool: Tool,
}

#[derive(Debug, Serialize)]
pub struct ComparedOut {
    pub name: &'static str,
    pub left: f64,
    pub right: f64,
}

impl ComparedOut {
    fn from(c: &Compared) -> Option<Self> {
        Some(ComparedOut { name: c.name, left: finite(c.left)?, right: finite(c.right)? })
    }
}

#[derive(Debug, Serialize)]
pub struct CompareReport {
    pub version: u32,
    pub command: &'static str,
    pub inputs: [String; 2],
    pub classifications: [ClassificationOut; 2],
    pub verdict: &'static str,
    pub rule: String,
    pub compared: Vec<ComparedOut>,
    pub tolerances: Tolerances,
    pub tool: Tool,
}

impl CompareReport {
    pub fn new(inputs: [String; 2], c: [&Classification; 2], v: &EquivalenceVerdict) -> Self {
        CompareReport {
            version: FORMAT_VERSION,
            command: "compare",
            inputs,
            classifications: [c[0].into(), c[1].into()],
            verdict: v.verdict.as_str(),
            rule: v.rule.to_string(),
            compared: v.compared.iter().filter_map(ComparedOut::from).collect(),
            tolerances: Tolerances::new(v.tol),
            tool: TOOL,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ValidateReport {
    pub version: u32,
    pub command: &'static str,
    pub input: String,
    pub subset: &'static str,
    pub violations: Vec<ViolationOut>,
    pub tool: Tool,
}

/// One JSON line.
pub fn line<T: Serialize>(record: &T) -> String {
    serde_json::to_string(record).expect("report records serialize")
}
