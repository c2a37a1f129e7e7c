//! Tangency directions from sign changes of `det(F(u), G(u))` on a circle.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::foliation::{cross, LinearField, PairParams};
use crate::linalg::{norm, scale, unit};
use crate::math::{abs, PI, TAU};

/// Radius of the sampling circle for real-real pairs.
pub const RR_RADIUS: f64 = 1e-2;
/// Normalized determinant below which a sign-free minimum is inconclusive.
pub const INCONCLUSIVE_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SignChanges {
    pub count: usize,
    /// Smallest normalized `|det|` seen, after refinement.
    pub min_abs: f64,
}

fn normalized(f: &LinearField, g: &LinearField, radius: f64, theta: f64) -> f64 {
    let p = scale(unit(theta), radius);
    let (fp, gp) = (f.eval(p), g.eval(p));
    cross(f, g, p) / (norm(fp) * norm(gp))
}

/// Extremum of `sign·d` on `[a, b]` by golden-section search; returns the smallest `sign·d`.
fn valley<D: Fn(f64) -> f64>(d: &D, sign: f64, mut a: f64, mut b: f64) -> f64 {
    let inv_phi = 0.618_033_988_749_894_8;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let (mut f1, mut f2) = (sign * d(x1), sign * d(x2));
    for _ in 0..80 {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = sign * d(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = sign * d(x2);
        }
    }
    f1.min(f2)
}

fn sample<D: Fn(f64) -> f64>(d: &D, from: f64, span: f64, n: usize) -> (Vec<f64>, Vec<f64>) {
    let step = span / n as f64;
    let thetas: Vec<f64> = (0..n).map(|i| from + (i as f64 + 0.5) * step).collect();
    let values = thetas.iter().map(|&t| d(t)).collect();
    (thetas, values)
}

fn positive(x: f64) -> bool {
    x >= 0.0
}

/// Sign changes of the normalized cross determinant around the full circle.
///
/// Samples that hide a pair of close zeros are caught by refining every
/// local minimum of `|det|` that shows no sign change.
pub fn count_sign_changes(f: &LinearField, g: &LinearField, n_samples: usize, radius: f64) -> Result<SignChanges> {
    if n_samples < 8 {
        return Err(Error::Domain("need at least 8 samples"));
    }
    let d = |theta: f64| normalized(f, g, radius, theta);
    let (thetas, values) = sample(&d, 0.0, TAU, n_samples);
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain("cross determinant is not finite on the circle"));
    }
    let n = values.len();
    let step = TAU / n as f64;
    let mut count = 0;
    let mut min_abs = f64::INFINITY;
    for i in 0..n {
        let (prev, cur, next) = (values[(i + n - 1) % n], values[i], values[(i + 1) % n]);
        // a sample sitting on a touching zero
        if abs(cur) < INCONCLUSIVE_TOL && positive(prev) == positive(next) {
            return Err(Error::InconclusiveNearBoundary);
        }
        if positive(cur) != positive(next) {
            count += 1;
        }
        min_abs = min_abs.min(abs(cur));
        let local_min = abs(cur) <= abs(prev) && abs(cur) <= abs(next);
        let same_sign = positive(prev) == positive(cur) && positive(cur) == positive(next);
        if local_min && same_sign {
            let sign = if positive(cur) { 1.0 } else { -1.0 };
            let lowest = valley(&d, sign, thetas[i] - step, thetas[i] + step);
            min_abs = min_abs.min(abs(lowest));
            if lowest <= -INCONCLUSIVE_TOL {
                count += 2;
            } else if lowest < INCONCLUSIVE_TOL {
                return Err(Error::InconclusiveNearBoundary);
            }
        }
    }
    Ok(SignChanges { count, min_abs })
}

/// Sign-change count for a foliation pair on the unit circle, or on the
/// small circle for real-real pairs.
pub fn count_tangency_directions_oracle(pair: &PairParams, n_samples: usize) -> Result<usize> {
    if n_samples < 1000 {
        return Err(Error::Domain("the oracle needs at least 1000 samples"));
    }
    let (f, g) = pair.fields()?;
    let radius = if matches!(pair, PairParams::Rr { .. }) { RR_RADIUS } else { 1.0 };
    Ok(count_sign_changes(&f, &g, n_samples, radius)?.count)
}

/// Tangency lines in `[0, π)`, each located to machine precision by bisection.
///
/// The cross determinant of linear fields is even, so half a turn suffices.
pub fn tangency_directions(f: &LinearField, g: &LinearField, n_samples: usize) -> Result<Vec<f64>> {
    let d = |theta: f64| normalized(f, g, 1.0, theta);
    let (thetas, values) = sample(&d, 0.0, PI, n_samples);
    let n = values.len();
    let step = PI / n as f64;
    let mut out = Vec::new();
    for i in 0..n {
        let (a, b) = (thetas[i], if i + 1 < n { thetas[i + 1] } else { thetas[0] + PI });
        let (da, db) = (values[i], if i + 1 < n { values[i + 1] } else { values[0] });
        if positive(da) != positive(db) {
            out.push(crate::math::wrap_line(bisect(&d, a, b, da)));
        }
        let prev = if i > 0 { values[i - 1] } else { values[n - 1] };
        let local_min = abs(da) <= abs(prev) && abs(da) <= abs(db);
        if local_min && positive(prev) == positive(da) && positive(da) == positive(db) {
            let sign = if positive(da) { 1.0 } else { -1.0 };
            if valley(&d, sign, a - step, a + step) < 0.0 {
                return Err(Error::InconclusiveNearBoundary);
            }
        }
    }
    out.sort_by(f64::total_cmp);
    Ok(out)
}

fn bisect<D: Fn(f64) -> f64>(d: &D, mut a: f64, mut b: f64, da: f64) -> f64 {
    let sa = positive(da);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        if positive(d(m)) == sa {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}
