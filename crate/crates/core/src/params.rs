//! Input model, normalization to the (α, β, μ, γ, λ, t, s, θ₀, θ₁) coordinates,
//! transition factorization and genericity checks.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::linalg::Mat2;
use crate::math::{abs, atan2, hypot, line_distance, wrap_line, wrap_rotation, FRAC_PI_2, PI};

/// Eigenvalues of one side (stable or unstable) of a saddle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EigenBlock {
    /// A single real eigenvalue.
    Real(f64),
    /// Two real eigenvalues of the same sign.
    RealPair(f64, f64),
    /// The conjugate pair `re ± i·im`, stored with `im > 0`.
    Complex { re: f64, im: f64 },
}

impl EigenBlock {
    pub fn complex(re: f64, im: f64) -> Result<Self> {
        if im == 0.0 || !im.is_finite() {
            return Err(Error::InvalidSpec("complex eigenvalue needs a nonzero imaginary part"));
        }
        Ok(EigenBlock::Complex { re, im: abs(im) })
    }

    pub fn dim(&self) -> usize {
        match self {
            EigenBlock::Real(_) => 1,
            _ => 2,
        }
    }

    pub fn is_complex(&self) -> bool {
        matches!(self, EigenBlock::Complex { .. })
    }

    fn real_parts(&self) -> [f64; 2] {
        match *self {
            EigenBlock::Real(x) => [x, x],
            EigenBlock::RealPair(a, b) => [a, b],
            EigenBlock::Complex { re, .. } => [re, re],
        }
    }

    fn is_finite(&self) -> bool {
        match *self {
            EigenBlock::Real(x) => x.is_finite(),
            EigenBlock::RealPair(a, b) => a.is_finite() && b.is_finite(),
            EigenBlock::Complex { re, im } => re.is_finite() && im.is_finite(),
        }
    }

    fn scaled(&self, k: f64) -> Self {
        match *self {
            EigenBlock::Real(x) => EigenBlock::Real(k * x),
            EigenBlock::RealPair(a, b) => EigenBlock::RealPair(k * a, k * b),
            EigenBlock::Complex { re, im } => EigenBlock::Complex { re: k * re, im: k * im },
        }
    }

    /// Weak over strong eigenvalue, in `(0, 1)`.
    fn weak_strong_ratio(&self) -> Result<Option<f64>> {
        match *self {
            EigenBlock::RealPair(a, b) => {
                let (a, b) = (abs(a), abs(b));
                if a == b {
                    return Err(Error::EqualEigenvalues);
                }
                Ok(Some(a.min(b) / a.max(b)))
            }
            _ => Ok(None),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SaddleData {
    pub stable: EigenBlock,
    pub unstable: EigenBlock,
}

impl SaddleData {
    pub fn new(stable: EigenBlock, unstable: EigenBlock) -> Self {
        SaddleData { stable, unstable }
    }

    /// Number of stable eigenvalues.
    pub fn morse_index(&self) -> usize {
        self.stable.dim()
    }

    /// Multiply every eigenvalue by `k > 0` (a time rescaling near the saddle).
    pub fn scaled(&self, k: f64) -> Self {
        SaddleData { stable: self.stable.scaled(k), unstable: self.unstable.scaled(k) }
    }

    fn check(&self) -> Result<()> {
        if !self.stable.is_finite() || !self.unstable.is_finite() {
            return Err(Error::InvalidSpec("eigenvalues must be finite"));
        }
        let parts = self.stable.real_parts().into_iter().chain(self.unstable.real_parts());
        if parts.clone().any(|x| x == 0.0) {
            return Err(Error::NonHyperbolic);
        }
        if self.stable.real_parts().iter().any(|&x| x > 0.0) {
            return Err(Error::InvalidSpec("stable eigenvalues need negative real parts"));
        }
        if self.unstable.real_parts().iter().any(|&x| x < 0.0) {
            return Err(Error::InvalidSpec("unstable eigenvalues need positive real parts"));
        }
        if self.stable.dim() + self.unstable.dim() != 3 {
            return Err(Error::InvalidSpec("a saddle in 3D has exactly three eigenvalues"));
        }
        Ok(())
    }
}

/// Differential of the transition map Σq → Σp, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransitionMap {
    pub m11: f64,
    pub m12: f64,
    pub m21: f64,
    pub m22: f64,
}

impl TransitionMap {
    pub fn new(m11: f64, m12: f64, m21: f64, m22: f64) -> Self {
        TransitionMap { m11, m12, m21, m22 }
    }

    pub fn identity() -> Self {
        TransitionMap::new(1.0, 0.0, 0.0, 1.0)
    }

    pub fn from_matrix(m: Mat2) -> Self {
        TransitionMap::new(m.a, m.b, m.c, m.d)
    }

    pub fn matrix(&self) -> Mat2 {
        Mat2::new(self.m11, self.m12, self.m21, self.m22)
    }
}

/// Traces of the invariant planes on the section, as points of ℝP(1).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrameAngles {
    pub omega_s_p: f64,
    pub omega_u_q: f64,
    pub omega_ss_p: f64,
    pub omega_uu_q: f64,
}

impl FrameAngles {
    /// Angles are reduced to `[0, π)`.
    pub fn new(omega_s_p: f64, omega_u_q: f64, omega_ss_p: f64, omega_uu_q: f64) -> Self {
        FrameAngles {
            omega_s_p: wrap_line(omega_s_p),
            omega_u_q: wrap_line(omega_u_q),
            omega_ss_p: wrap_line(omega_ss_p),
            omega_uu_q: wrap_line(omega_uu_q),
        }
    }

    pub fn rotated(&self, by: f64) -> Self {
        FrameAngles::new(self.omega_s_p + by, self.omega_u_q + by, self.omega_ss_p + by, self.omega_uu_q + by)
    }

    fn is_finite(&self) -> bool {
        [self.omega_s_p, self.omega_u_q, self.omega_ss_p, self.omega_uu_q].iter().all(|x| x.is_finite())
    }

    /// Pairs of slots that coincide although they must not.
    pub fn degeneracies(&self) -> Vec<(FrameSlot, FrameSlot)> {
        use FrameSlot::*;
        let value = |s: FrameSlot| match s {
            SP => self.omega_s_p,
            UQ => self.omega_u_q,
            SsP => self.omega_ss_p,
            UuQ => self.omega_uu_q,
        };
        [(SP, UQ), (SsP, SP), (SsP, UQ), (UuQ, SP), (UuQ, UQ), (SsP, UuQ)]
            .into_iter()
            .filter(|&(a, b)| line_distance(value(a), value(b)) <= FRAME_TOL)
            .collect()
    }
}

const FRAME_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrameSlot {
    SP,
    UQ,
    SsP,
    UuQ,
}

impl fmt::Display for FrameSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FrameSlot::SP => "ws_p",
            FrameSlot::UQ => "wu_q",
            FrameSlot::SsP => "wss_p",
            FrameSlot::UuQ => "wuu_q",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConnectionSpec {
    pub p: SaddleData,
    pub q: SaddleData,
    pub transition: Option<TransitionMap>,
    pub frames: Option<FrameAngles>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subset {
    OneTwo,
    OneOneReal,
    OneOneComplex,
    TwoTwoReal,
    TwoTwoComplex,
    TwoOneCC,
    TwoOneRC,
    TwoOneCR,
    TwoOneRR,
}

/// Subset up to the ℝ/ℂ subtags: the Morse indices of p and q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MorseClass {
    OneTwo,
    OneOne,
    TwoTwo,
    TwoOne,
}

impl Subset {
    pub const ALL: [Subset; 9] = [
        Subset::OneTwo,
        Subset::OneOneReal,
        Subset::OneOneComplex,
        Subset::TwoTwoReal,
        Subset::TwoTwoComplex,
        Subset::TwoOneCC,
        Subset::TwoOneRC,
        Subset::TwoOneCR,
        Subset::TwoOneRR,
    ];

    pub fn morse_class(&self) -> MorseClass {
        match self {
            Subset::OneTwo => MorseClass::OneTwo,
            Subset::OneOneReal | Subset::OneOneComplex => MorseClass::OneOne,
            Subset::TwoTwoReal | Subset::TwoTwoComplex => MorseClass::TwoTwo,
            _ => MorseClass::TwoOne,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Subset::OneTwo => "(1-2)",
            Subset::OneOneReal => "(1-1)R",
            Subset::OneOneComplex => "(1-1)C",
            Subset::TwoTwoReal => "(2-2)R",
            Subset::TwoTwoComplex => "(2-2)C",
            Subset::TwoOneCC => "(2-1)CC",
            Subset::TwoOneRC => "(2-1)RC",
            Subset::TwoOneCR => "(2-1)CR",
            Subset::TwoOneRR => "(2-1)RR",
        }
    }

    /// Whether the subset carries a (TT) verdict.
    pub fn has_one_complex_pair(&self) -> bool {
        matches!(self, Subset::TwoOneCC | Subset::TwoOneRC | Subset::TwoOneCR)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Subset tag from the Morse indices and the nature of the relevant eigenvalue pairs.
pub fn morse_subset(spec: &ConnectionSpec) -> Result<Subset> {
    spec.p.check()?;
    spec.q.check()?;
    let (p, q) = (&spec.p, &spec.q);
    Ok(match (p.morse_index(), q.morse_index()) {
        (1, 2) => Subset::OneTwo,
        (1, 1) if q.unstable.is_complex() => Subset::OneOneComplex,
        (1, 1) => Subset::OneOneReal,
        (2, 2) if p.stable.is_complex() => Subset::TwoTwoComplex,
        (2, 2) => Subset::TwoTwoReal,
        (2, 1) => match (p.stable.is_complex(), q.unstable.is_complex()) {
            (true, true) => Subset::TwoOneCC,
            (false, true) => Subset::TwoOneRC,
            (true, false) => Subset::TwoOneCR,
            (false, false) => Subset::TwoOneRR,
        },
        _ => return Err(Error::InvalidSpec("Morse index out of range")),
    })
}

/// Rotation-scaling factorization `T = scale · R(theta0) · diag(1, lambda) · R(theta1) · J`
/// with counter-clockwise rotations `R`, `J = diag(1, −1)` when `reflected`, identity otherwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransitionFactors {
    pub theta0: f64,
    pub lambda: f64,
    pub theta1: f64,
    pub scale: f64,
    pub reflected: bool,
}

impl TransitionFactors {
    pub fn matrix(&self) -> Mat2 {
        let m = Mat2::rotation(self.theta0)
            .mul(&Mat2::diag(1.0, self.lambda))
            .mul(&Mat2::rotation(self.theta1))
            .scaled(self.scale);
        if self.reflected {
            m.mul(&Mat2::diag(1.0, -1.0))
        } else {
            m
        }
    }
}

/// Factor `T` into rotations around a stretch along the second axis.
///
/// Canonical ranges: `theta1 ∈ (−π/2, π/2]`, `theta0 ∈ (−π, π]`. When the
/// singular values coincide the rotation is carried entirely by `theta0`.
pub fn factor_transition(t: &TransitionMap) -> Result<TransitionFactors> {
    let m = t.matrix();
    if !m.is_finite() {
        return Err(Error::InvalidSpec("transition entries must be finite"));
    }
    let det = m.det();
    if det == 0.0 || abs(det) <= 1e-300 * m.max_abs() * m.max_abs() {
        return Err(Error::Singular);
    }
    let reflected = det < 0.0;
    let m = if reflected { m.mul(&Mat2::diag(1.0, -1.0)) } else { m };

    // m = R(phi)·diag(q + r, q − r)·R(psi), q > r since det m > 0
    let e = (m.a + m.d) / 2.0;
    let f = (m.a - m.d) / 2.0;
    let g = (m.c + m.b) / 2.0;
    let h = (m.c - m.b) / 2.0;
    let q = hypot(e, h);
    let r = hypot(f, g);
    let a1 = atan2(g, f);
    let a2 = atan2(h, e);

    if r <= 4.0 * f64::EPSILON * q {
        return Ok(TransitionFactors { theta0: wrap_rotation(a2), lambda: 1.0, theta1: 0.0, scale: q, reflected });
    }
    let (sx, sy) = (q + r, q - r);
    let phi = (a2 + a1) / 2.0;
    let psi = (a2 - a1) / 2.0;
    // diag(sx, sy) = sy·R(π/2)·diag(1, sx/sy)·R(−π/2)
    let mut theta0 = phi + FRAC_PI_2;
    let mut theta1 = psi - FRAC_PI_2;
    // (theta0, theta1) and (theta0 − kπ, theta1 + kπ) give the same product
    let k = -crate::math::floor((theta1 + FRAC_PI_2) / PI);
    let k = if theta1 + k * PI <= -FRAC_PI_2 { k + 1.0 } else { k };
    theta1 += k * PI;
    theta0 -= k * PI;
    Ok(TransitionFactors { theta0: wrap_rotation(theta0), lambda: sx / sy, theta1, scale: sy, reflected })
}

/// Normalized coordinates of a connection. Fields not defined for the subset are `None`.
///
/// `theta0` and `theta1` are the clockwise angles of the rotations in the
/// normal form of the pair of characteristic foliations, i.e. the negated
/// angles of [`factor_transition`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormalizedParams {
    pub subset: Subset,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub mu: Option<f64>,
    pub gamma: Option<f64>,
    pub lambda: Option<f64>,
    pub t: Option<f64>,
    pub s: Option<f64>,
    pub theta0: Option<f64>,
    pub theta1: Option<f64>,
    /// The transition map reverses orientation; β carries the compensating sign.
    pub reflected: bool,
    pub frames: Option<FrameAngles>,
}

/// `(t, s)` from `λ ≥ 1`.
pub fn t_s(lambda: f64) -> (f64, f64) {
    let inv = 1.0 / lambda;
    ((lambda + inv) / 2.0, (lambda - inv) / 2.0)
}

pub fn normalize(spec: &ConnectionSpec) -> Result<NormalizedParams> {
    let subset = morse_subset(spec)?;
    let mut out = NormalizedParams {
        subset,
        alpha: None,
        beta: None,
        mu: None,
        gamma: None,
        lambda: None,
        t: None,
        s: None,
        theta0: None,
        theta1: None,
        reflected: false,
        frames: None,
    };
    let alpha = match spec.p.stable {
        EigenBlock::Complex { re, im } => Some(-re / im),
        _ => None,
    };
    let beta = match spec.q.unstable {
        EigenBlock::Complex { re, im } => Some(re / im),
        _ => None,
    };
    if alpha == Some(0.0) || beta == Some(0.0) {
        return Err(Error::ZeroRatio);
    }
    let uses_p = matches!(subset.morse_class(), MorseClass::TwoTwo | MorseClass::TwoOne);
    let uses_q = matches!(subset.morse_class(), MorseClass::OneOne | MorseClass::TwoOne);
    if uses_p {
        out.alpha = alpha;
        out.mu = spec.p.stable.weak_strong_ratio()?;
    }
    if uses_q {
        out.beta = beta;
        out.gamma = spec.q.unstable.weak_strong_ratio()?;
    }
    if subset.has_one_complex_pair() {
        let tm = spec.transition.ok_or(Error::MissingTransition)?;
        let f = factor_transition(&tm)?;
        let (t, s) = t_s(f.lambda);
        out.lambda = Some(f.lambda);
        out.t = Some(t);
        out.s = Some(s);
        out.reflected = f.reflected;
        if f.reflected {
            out.beta = out.beta.map(|b| -b);
        }
        match subset {
            Subset::TwoOneRC => out.theta0 = Some(wrap_rotation(-f.theta0)),
            Subset::TwoOneCR => out.theta1 = Some(wrap_rotation(-f.theta1)),
            _ => {}
        }
    }
    if subset == Subset::TwoOneRR {
        let frames = spec.frames.ok_or(Error::MissingFrames)?;
        if !frames.is_finite() {
            return Err(Error::InvalidSpec("frame angles must be finite"));
        }
        out.frames = Some(frames);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Violation {
    /// Assumption (1): a real stable pair at p or unstable pair at q is not split.
    EqualEigenvalues { saddle: char },
    /// Assumption (5).
    AlphaEqualsBeta { alpha: f64, beta: f64 },
    /// Assumption (6), and the strong traces must differ from each other.
    FrameDegenerate { first: FrameSlot, second: FrameSlot },
}

impl Violation {
    pub fn name(&self) -> &'static str {
        match self {
            Violation::EqualEigenvalues { .. } => "EqualEigenvalues",
            Violation::AlphaEqualsBeta { .. } => "AlphaEqualsBeta",
            Violation::FrameDegenerate { .. } => "FrameDegenerate",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EqualEigenvalues { saddle } => write!(f, "EqualEigenvalues({saddle})"),
            Violation::AlphaEqualsBeta { alpha, beta } => {
                write!(f, "AlphaEqualsBeta(alpha={alpha}, beta={beta})")
            }
            Violation::FrameDegenerate { first, second } => {
                write!(f, "FrameDegenerate({first}={second})")
            }
        }
    }
}

const RATIO_TOL: f64 = 1e-12;

/// Genericity conditions checkable from the input model.
pub fn validate_genericity(spec: &ConnectionSpec, params: &NormalizedParams) -> Vec<Violation> {
    let mut out = equal_pairs(spec);
    if params.subset == Subset::TwoOneCC {
        if let (Some(alpha), Some(beta)) = (params.alpha, params.beta) {
            if crate::math::close(alpha, beta, RATIO_TOL) {
                out.push(Violation::AlphaEqualsBeta { alpha, beta });
            }
        }
    }
    if params.subset == Subset::TwoOneRR {
        if let Some(frames) = params.frames.or(spec.frames) {
            out.extend(
                frames.degeneracies().into_iter().map(|(first, second)| Violation::FrameDegenerate { first, second }),
            );
        }
    }
    out
}

fn equal_pairs(spec: &ConnectionSpec) -> Vec<Violation> {
    let mut out = Vec::new();
    if let EigenBlock::RealPair(a, b) = spec.p.stable {
        if abs(a) == abs(b) {
            out.push(Violation::EqualEigenvalues { saddle: 'p' });
        }
    }
    if let EigenBlock::RealPair(a, b) = spec.q.unstable {
        if abs(a) == abs(b) {
            out.push(Violation::EqualEigenvalues { saddle: 'q' });
        }
    }
    out
}

/// Subset, normalization and genericity in one step; violations come back as
/// [`Error::GenericityViolation`].
pub fn prepare(spec: &ConnectionSpec) -> Result<NormalizedParams> {
    morse_subset(spec)?;
    let early = equal_pairs(spec);
    if !early.is_empty() {
        return Err(Error::GenericityViolation(early));
    }
    let params = normalize(spec)?;
    let violations = validate_genericity(spec, &params);
    if !violations.is_empty() {
        return Err(Error::GenericityViolation(violations));
    }
    Ok(params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::{cos, sin};

    fn spiral_saddle(re: f64, im: f64) -> SaddleData {
        SaddleData::new(EigenBlock::complex(re, im).unwrap(), EigenBlock::Real(1.0))
    }

    fn cc_spec() -> ConnectionSpec {
        ConnectionSpec {
            p: spiral_saddle(-1.0, 2.0),
            q: SaddleData::new(EigenBlock::Real(-1.0), EigenBlock::complex(1.0, 1.0).unwrap()),
            transition: Some(TransitionMap::identity()),
            frames: None,
        }
    }

    #[test]
    fn subset_tags() {
        assert_eq!(morse_subset(&cc_spec()).unwrap(), Subset::TwoOneCC);
        let mut rc = cc_spec();
        rc.p.stable = EigenBlock::RealPair(-1.0, -3.0);
        assert_eq!(morse_subset(&rc).unwrap(), Subset::TwoOneRC);
        let one_two = ConnectionSpec {
            p: SaddleData::new(EigenBlock::Real(-1.0), EigenBlock::RealPair(1.0, 2.0)),
            q: SaddleData::new(EigenBlock::RealPair(-1.0, -2.0), EigenBlock::Real(1.0)),
            transition: None,
            frames: None,
        };
        assert_eq!(morse_subset(&one_two).unwrap(), Subset::OneTwo);
        let one_one = ConnectionSpec {
            p: SaddleData::new(EigenBlock::Real(-1.0), EigenBlock::RealPair(1.0, 2.0)),
            q: SaddleData::new(EigenBlock::Real(-2.0), EigenBlock::complex(1.0, 3.0).unwrap()),
            transition: None,
            frames: None,
        };
        assert_eq!(morse_subset(&one_one).unwrap(), Subset::OneOneComplex);
    }

    #[test]
    fn zero_real_part_is_not_hyperbolic() {
        let mut spec = cc_spec();
        spec.q.stable = EigenBlock::Real(0.0);
        assert_eq!(morse_subset(&spec), Err(Error::NonHyperbolic));
    }

    #[test]
    fn alpha_and_mu() {
        let params = normalize(&cc_spec()).unwrap();
        assert_eq!(params.alpha, Some(0.5));
        assert_eq!(params.beta, Some(1.0));
        let mut rc = cc_spec();
        rc.p.stable = EigenBlock::RealPair(-1.0, -3.0);
        assert!((normalize(&rc).unwrap().mu.unwrap() - 1.0 / 3.0).abs() < 1e-15);
        rc.p.stable = EigenBlock::RealPair(-2.0, -2.0);
        assert_eq!(normalize(&rc), Err(Error::EqualEigenvalues));
    }

    #[test]
    fn conjugate_representative() {
        let mut spec = cc_spec();
        spec.p.stable = EigenBlock::complex(-1.0, -2.0).unwrap();
        assert_eq!(normalize(&spec).unwrap().alpha, Some(0.5));
    }

    #[test]
    fn identity_factors() {
        let f = factor_transition(&TransitionMap::identity()).unwrap();
        assert_eq!((f.theta0, f.lambda, f.theta1), (0.0, 1.0, 0.0));
    }

    #[test]
    fn diag_factors() {
        let f = factor_transition(&TransitionMap::new(3.0, 0.0, 0.0, 1.0)).unwrap();
        assert!((f.theta0 + FRAC_PI_2).abs() < 1e-15);
        assert!((f.lambda - 3.0).abs() < 1e-15);
        assert!((f.theta1 - FRAC_PI_2).abs() < 1e-15);
        assert!((f.scale - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rotation_factors() {
        for phi in [0.3, -2.0, 3.0, PI] {
            let (s, c) = (sin(phi), cos(phi));
            let f = factor_transition(&TransitionMap::new(c, -s, s, c)).unwrap();
            assert_eq!(f.lambda, 1.0);
            assert_eq!(f.theta1, 0.0);
            assert!(crate::math::abs(wrap_rotation(f.theta0 - phi)) < 1e-14, "{phi}");
        }
    }

    #[test]
    fn reflection_is_recorded() {
        let f = factor_transition(&TransitionMap::new(2.0, 0.3, 0.1, -1.0)).unwrap();
        assert!(f.reflected);
        let m = f.matrix();
        assert!((m.a - 2.0).abs() < 1e-14 && (m.d + 1.0).abs() < 1e-14);
        let mut spec = cc_spec();
        spec.transition = Some(TransitionMap::new(1.0, 0.0, 0.0, -2.0));
        let params = normalize(&spec).unwrap();
        assert!(params.reflected);
        assert_eq!(params.beta, Some(-1.0));
    }

    #[test]
    fn singular_transition() {
        assert_eq!(factor_transition(&TransitionMap::new(1.0, 2.0, 2.0, 4.0)), Err(Error::Singular));
    }

    #[test]
    fn genericity() {
        let mut spec = cc_spec();
        spec.q.unstable = EigenBlock::complex(-(-1.0), 2.0).unwrap();
        // α = 0.5 and β = 0.5
        let params = normalize(&spec).unwrap();
        assert_eq!(validate_genericity(&spec, &params), [Violation::AlphaEqualsBeta { alpha: 0.5, beta: 0.5 }]);
        let spec = cc_spec();
        assert!(validate_genericity(&spec, &normalize(&spec).unwrap()).is_empty());

        let rr = ConnectionSpec {
            p: SaddleData::new(EigenBlock::RealPair(-1.0, -2.0), EigenBlock::Real(1.0)),
            q: SaddleData::new(EigenBlock::Real(-1.0), EigenBlock::RealPair(1.0, 3.0)),
            transition: None,
            frames: Some(FrameAngles::new(0.0, FRAC_PI_2, 0.0, 1.0)),
        };
        let v = validate_genericity(&rr, &normalize(&rr).unwrap());
        assert_eq!(v, [Violation::FrameDegenerate { first: FrameSlot::SsP, second: FrameSlot::SP }]);
    }

    #[test]
    fn prepare_reports_equal_pairs() {
        let mut spec = cc_spec();
        spec.p.stable = EigenBlock::RealPair(-2.0, -2.0);
        assert_eq!(
            prepare(&spec),
            Err(Error::GenericityViolation(alloc::vec![Violation::EqualEigenvalues { saddle: 'p' }]))
        );
    }
}
