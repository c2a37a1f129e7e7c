//! Linear planar fields whose integral curves are the characteristic foliations,
//! and the normal forms of the four (2-1) foliation pairs.

use crate::error::{Error, Result};
use crate::linalg::{det2, Mat2, Vec2};
use crate::math::{abs, cos, sin};
use crate::params::{
    factor_transition, ConnectionSpec, EigenBlock, FrameAngles, NormalizedParams, SaddleData, Subset, TransitionMap,
};

/// A linear vector field `p ↦ A·p` on the plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearField {
    pub matrix: Mat2,
}

impl LinearField {
    pub fn new(matrix: Mat2) -> Self {
        LinearField { matrix }
    }

    /// `X_α = R + α·∂θ`, whose leaves are the spirals `r = r₀·e^{θ/α}`.
    pub fn logarithmic(alpha: f64) -> Self {
        LinearField::new(Mat2::new(1.0, -alpha, alpha, 1.0))
    }

    /// `Y_μ = x·∂x + μ·y·∂y`; the x-axis carries the strong direction when `μ < 1`.
    pub fn real(mu: f64) -> Self {
        LinearField::new(Mat2::diag(1.0, mu))
    }

    /// Spiral field `X_β` pushed forward by `R(−θ₀)·diag(1, λ)`.
    pub fn complex(beta: f64, lambda: f64, theta0: f64) -> Self {
        LinearField::logarithmic(beta).pushed(&complex_push(lambda, theta0))
    }

    /// Node with eigendirections at the given angles, rate 1 along `strong`, `weak_rate` along `weak`.
    pub fn node(weak: f64, strong: f64, weak_rate: f64) -> Result<Self> {
        let v = Mat2::new(cos(strong), cos(weak), sin(strong), sin(weak));
        let d = Mat2::diag(1.0, weak_rate);
        v.conjugate(&d).map(LinearField::new).ok_or(Error::FrameDegenerate)
    }

    /// Push-forward by an invertible linear map.
    pub fn pushed(&self, m: &Mat2) -> Self {
        let inv = m.inverse().expect("push-forward by a singular map");
        LinearField::new(m.mul(&self.matrix).mul(&inv))
    }

    #[inline]
    pub fn eval(&self, p: Vec2) -> Vec2 {
        self.matrix.apply(p)
    }

    /// `det(p, F(p))`: positive where leaves turn counter-clockwise in forward time.
    #[inline]
    pub fn angular_velocity(&self, p: Vec2) -> f64 {
        det2(p, self.eval(p))
    }
}

/// `R(−θ₀)·diag(1, λ)`: the map pushing the spiral foliation into its normal position.
pub fn complex_push(lambda: f64, theta0: f64) -> Mat2 {
    Mat2::rotation(-theta0).mul(&Mat2::diag(1.0, lambda))
}

/// `det(F(p), G(p))`, zero exactly where the two foliations are tangent.
#[inline]
pub fn cross(f: &LinearField, g: &LinearField, p: Vec2) -> f64 {
    det2(f.eval(p), g.eval(p))
}

/// Normal forms of the (2-1) pairs of characteristic foliations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PairParams {
    Cc { alpha: f64, beta: f64, lambda: f64 },
    Rc { beta: f64, mu: f64, lambda: f64, theta0: f64 },
    Cr { alpha: f64, gamma: f64, lambda: f64, theta1: f64 },
    Rr { frames: FrameAngles, mu: f64, gamma: f64 },
}

impl PairParams {
    pub fn from_params(p: &NormalizedParams) -> Option<Self> {
        Some(match p.subset {
            Subset::TwoOneCC => PairParams::Cc { alpha: p.alpha?, beta: p.beta?, lambda: p.lambda? },
            Subset::TwoOneRC => PairParams::Rc { beta: p.beta?, mu: p.mu?, lambda: p.lambda?, theta0: p.theta0? },
            Subset::TwoOneCR => {
                PairParams::Cr { alpha: p.alpha?, gamma: p.gamma?, lambda: p.lambda?, theta1: p.theta1? }
            }
            Subset::TwoOneRR => PairParams::Rr { frames: p.frames?, mu: p.mu?, gamma: p.gamma? },
            _ => return None,
        })
    }

    pub fn subset(&self) -> Subset {
        match self {
            PairParams::Cc { .. } => Subset::TwoOneCC,
            PairParams::Rc { .. } => Subset::TwoOneRC,
            PairParams::Cr { .. } => Subset::TwoOneCR,
            PairParams::Rr { .. } => Subset::TwoOneRR,
        }
    }

    /// The two foliations on the section: p's first, then q's transported one.
    pub fn fields(&self) -> Result<(LinearField, LinearField)> {
        Ok(match *self {
            PairParams::Cc { alpha, beta, lambda } => {
                (LinearField::logarithmic(alpha), LinearField::complex(beta, lambda, 0.0))
            }
            PairParams::Rc { beta, mu, lambda, theta0 } => {
                (LinearField::real(mu), LinearField::complex(beta, lambda, theta0))
            }
            PairParams::Cr { alpha, gamma, lambda, theta1 } => {
                (LinearField::complex(alpha, 1.0 / lambda, -theta1), LinearField::real(gamma))
            }
            PairParams::Rr { frames, mu, gamma } => (
                LinearField::node(frames.omega_s_p, frames.omega_ss_p, mu)?,
                LinearField::node(frames.omega_u_q, frames.omega_uu_q, gamma)?,
            ),
        })
    }

    /// A connection spec whose normalized parameters are `self`.
    ///
    /// Needs `α > 0` (p's stable pair fixes the sign) and `μ, γ ∈ (0, 1)`; a
    /// negative β is realized through an orientation-reversing transition.
    pub fn realize(&self) -> Result<ConnectionSpec> {
        let reflect = Mat2::diag(1.0, -1.0);
        let spiral_p = |alpha: f64| -> Result<SaddleData> {
            if !(alpha > 0.0) {
                return Err(Error::Domain("alpha must be positive to be realized"));
            }
            Ok(SaddleData::new(EigenBlock::complex(-alpha, 1.0)?, EigenBlock::Real(1.0)))
        };
        let spiral_q = |beta: f64| -> Result<SaddleData> {
            if beta == 0.0 {
                return Err(Error::ZeroArgument);
            }
            Ok(SaddleData::new(EigenBlock::Real(-1.0), EigenBlock::complex(abs(beta), 1.0)?))
        };
        let ratio = |x: f64| -> Result<f64> {
            if x > 0.0 && x < 1.0 {
                Ok(x)
            } else {
                Err(Error::Domain("eigenvalue ratio must lie in (0, 1)"))
            }
        };
        let node_p = |mu: f64| -> Result<SaddleData> {
            Ok(SaddleData::new(EigenBlock::RealPair(-1.0, -ratio(mu)?), EigenBlock::Real(1.0)))
        };
        let node_q = |gamma: f64| -> Result<SaddleData> {
            Ok(SaddleData::new(EigenBlock::Real(-1.0), EigenBlock::RealPair(1.0, ratio(gamma)?)))
        };
        let lambda_ok = |lambda: f64| -> Result<f64> {
            if lambda >= 1.0 && lambda.is_finite() {
                Ok(lambda)
            } else {
                Err(Error::Domain("lambda must be at least 1"))
            }
        };
        let spec =
            |p, q, m: Mat2, frames| ConnectionSpec { p, q, transition: Some(TransitionMap::from_matrix(m)), frames };
        Ok(match *self {
            PairParams::Cc { alpha, beta, lambda } => {
                let mut m = Mat2::diag(1.0, lambda_ok(lambda)?);
                if beta < 0.0 {
                    m = m.mul(&reflect);
                }
                spec(spiral_p(alpha)?, spiral_q(beta)?, m, None)
            }
            PairParams::Rc { beta, mu, lambda, theta0 } => {
                let mut m = complex_push(lambda_ok(lambda)?, theta0);
                if beta < 0.0 {
                    m = m.mul(&reflect);
                }
                spec(node_p(mu)?, spiral_q(beta)?, m, None)
            }
            PairParams::Cr { alpha, gamma, lambda, theta1 } => {
                let m = Mat2::diag(1.0, lambda_ok(lambda)?).mul(&Mat2::rotation(-theta1));
                spec(spiral_p(alpha)?, node_q(gamma)?, m, None)
            }
            PairParams::Rr { frames, mu, gamma } => spec(node_p(mu)?, node_q(gamma)?, Mat2::IDENTITY, Some(frames)),
        })
    }
}

/// The pair of foliations read straight from a spec: p's stable foliation and
/// q's unstable one pushed by the full transition map, without factorization.
pub fn spec_fields(spec: &ConnectionSpec) -> Result<(LinearField, LinearField)> {
    if let Some(frames) = spec.frames {
        if let (EigenBlock::RealPair(..), EigenBlock::RealPair(..)) = (spec.p.stable, spec.q.unstable) {
            let p = crate::params::normalize(spec)?;
            return PairParams::Rr { frames, mu: p.mu.unwrap_or(0.5), gamma: p.gamma.unwrap_or(0.5) }.fields();
        }
    }
    let side = |block: EigenBlock, sign: f64| -> Result<LinearField> {
        match block {
            EigenBlock::Complex { re, im } => Ok(LinearField::logarithmic(sign * re / im)),
            EigenBlock::RealPair(a, b) => {
                let (a, b) = (abs(a), abs(b));
                Ok(LinearField::real(a.min(b) / a.max(b)))
            }
            EigenBlock::Real(_) => Err(Error::InvalidSpec("one-dimensional block has no foliation")),
        }
    };
    let t = spec.transition.ok_or(Error::MissingTransition)?;
    factor_transition(&t)?;
    let f = side(spec.p.stable, -1.0)?;
    let g = side(spec.q.unstable, 1.0)?.pushed(&t.matrix());
    Ok((f, g))
}
