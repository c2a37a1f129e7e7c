//! Dormand–Prince 5(4) with step-size control and event location by bisection.

use crate::error::{Error, Result};
use crate::linalg::{norm, Vec2};
use crate::math::{abs, pow, sqrt};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    pub rtol: f64,
    pub atol: f64,
    /// Bound on the normalized event function at the located crossing.
    pub crossing: f64,
    pub max_steps: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { rtol: 1e-10, atol: 1e-14, crossing: 1e-12, max_steps: 1_000_000 }
    }
}

const A2: [f64; 1] = [1.0 / 5.0];
const A3: [f64; 2] = [3.0 / 40.0, 9.0 / 40.0];
const A4: [f64; 3] = [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0];
const A5: [f64; 4] = [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0];
const A6: [f64; 5] = [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0];
const B: [f64; 6] = [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0];
const E: [f64; 7] =
    [71.0 / 57600.0, 0.0, -71.0 / 16695.0, 71.0 / 1920.0, -17253.0 / 339200.0, 22.0 / 525.0, -1.0 / 40.0];

fn combo(y: Vec2, h: f64, coef: &[f64], k: &[Vec2]) -> Vec2 {
    let mut out = y;
    for (c, ki) in coef.iter().zip(k) {
        out[0] += h * c * ki[0];
        out[1] += h * c * ki[1];
    }
    out
}

/// One step of size `h` from `y` with `k1 = f(y)`; returns the 5th-order
/// solution and the embedded error estimate.
pub fn dopri_step<F: Fn(Vec2) -> Vec2>(f: &F, y: Vec2, k1: Vec2, h: f64) -> (Vec2, Vec2) {
    let mut k = [[0.0; 2]; 7];
    k[0] = k1;
    k[1] = f(combo(y, h, &A2, &k[..1]));
    k[2] = f(combo(y, h, &A3, &k[..2]));
    k[3] = f(combo(y, h, &A4, &k[..3]));
    k[4] = f(combo(y, h, &A5, &k[..4]));
    k[5] = f(combo(y, h, &A6, &k[..5]));
    let y5 = combo(y, h, &B, &k[..6]);
    k[6] = f(y5);
    let mut err = [0.0; 2];
    for (e, ki) in E.iter().zip(&k) {
        err[0] += h * e * ki[0];
        err[1] += h * e * ki[1];
    }
    (y5, err)
}

fn error_norm(y: Vec2, y_new: Vec2, err: Vec2, tol: &Tolerances) -> f64 {
    let mut acc = 0.0;
    for i in 0..2 {
        let scale = tol.atol + tol.rtol * abs(y[i]).max(abs(y_new[i]));
        acc += (err[i] / scale) * (err[i] / scale);
    }
    sqrt(acc / 2.0)
}

/// Integrate `y' = f(y)` from `y0` until `event(y)` becomes non-negative.
///
/// `event` must be negative at `y0`. `inside(y)` returning false aborts with
/// [`Error::NoCrossing`], as does exhausting the step budget.
pub fn shoot<F, G, H>(f: F, y0: Vec2, event: G, inside: H, tol: &Tolerances) -> Result<Vec2>
where
    F: Fn(Vec2) -> Vec2,
    G: Fn(Vec2) -> f64,
    H: Fn(Vec2) -> bool,
{
    let mut y = y0;
    let mut k1 = f(y);
    let rate = norm(k1) / norm(y).max(f64::MIN_POSITIVE);
    let mut h = 0.01 / rate.max(1.0);
    for _ in 0..tol.max_steps {
        let (y_new, err) = dopri_step(&f, y, k1, h);
        let e = error_norm(y, y_new, err, tol);
        if !e.is_finite() {
            return Err(Error::NoCrossing);
        }
        if e > 1.0 {
            h *= (0.9 * pow(e, -0.2)).max(0.2);
            continue;
        }
        if event(y_new) >= 0.0 {
            return Ok(refine(&f, y, k1, h, &event, tol));
        }
        if !inside(y_new) || !y_new[0].is_finite() || !y_new[1].is_finite() {
            return Err(Error::NoCrossing);
        }
        y = y_new;
        k1 = f(y);
        let grow = if e == 0.0 { 5.0 } else { (0.9 * pow(e, -0.2)).clamp(0.2, 5.0) };
        h *= grow;
    }
    Err(Error::NoCrossing)
}

fn refine<F, G>(f: &F, y: Vec2, k1: Vec2, h: f64, event: &G, tol: &Tolerances) -> Vec2
where
    F: Fn(Vec2) -> Vec2,
    G: Fn(Vec2) -> f64,
{
    let (mut lo, mut hi) = (0.0, h);
    let mut best = dopri_step(f, y, k1, h).0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let (ym, _) = dopri_step(f, y, k1, mid);
        let g = event(ym);
        best = ym;
        if abs(g) <= tol.crossing {
            break;
        }
        if g >= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= f64::EPSILON * abs(h) {
            break;
        }
    }
    best
}
