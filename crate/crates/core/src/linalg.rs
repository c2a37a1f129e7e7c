//! Just enough 2×2 linear algebra for planar linear fields and section maps.

use crate::math::{abs, cos, hypot, sin, sqrt};

pub type Vec2 = [f64; 2];

#[inline]
pub fn det2(u: Vec2, v: Vec2) -> f64 {
    u[0] * v[1] - u[1] * v[0]
}

#[inline]
pub fn dot(u: Vec2, v: Vec2) -> f64 {
    u[0] * v[0] + u[1] * v[1]
}

#[inline]
pub fn norm(u: Vec2) -> f64 {
    hypot(u[0], u[1])
}

#[inline]
pub fn unit(angle: f64) -> Vec2 {
    [cos(angle), sin(angle)]
}

#[inline]
pub fn scale(u: Vec2, k: f64) -> Vec2 {
    [u[0] * k, u[1] * k]
}

/// Signed angle from `u` to `v` in `(−π, π]`.
pub fn signed_angle(u: Vec2, v: Vec2) -> f64 {
    crate::math::atan2(det2(u, v), dot(u, v))
}

/// Row-major 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2::new(1.0, 0.0, 0.0, 1.0);

    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2 { a, b, c, d }
    }

    pub const fn diag(x: f64, y: f64) -> Self {
        Mat2::new(x, 0.0, 0.0, y)
    }

    /// Counter-clockwise rotation.
    pub fn rotation(theta: f64) -> Self {
        let (s, c) = (sin(theta), cos(theta));
        Mat2::new(c, -s, s, c)
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(&self, v: Vec2) -> Vec2 {
        [self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1]]
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }

    pub fn scaled(&self, k: f64) -> Mat2 {
        Mat2::new(self.a * k, self.b * k, self.c * k, self.d * k)
    }

    pub fn inverse(&self) -> Option<Mat2> {
        let det = self.det();
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        Some(Mat2::new(self.d / det, -self.b / det, -self.c / det, self.a / det))
    }

    /// `self · m · self⁻¹`: the push-forward of the linear field `m`.
    pub fn conjugate(&self, m: &Mat2) -> Option<Mat2> {
        Some(self.mul(m).mul(&self.inverse()?))
    }

    pub fn frobenius(&self) -> f64 {
        sqrt(self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d)
    }

    pub fn max_abs(&self) -> f64 {
        abs(self.a).max(abs(self.b)).max(abs(self.c)).max(abs(self.d))
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.b.is_finite() && self.c.is_finite() && self.d.is_finite()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::FRAC_PI_2;

    #[test]
    fn rotation_is_counter_clockwise() {
        let v = Mat2::rotation(FRAC_PI_2).apply([1.0, 0.0]);
        assert!(v[0].abs() < 1e-15 && (v[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn conjugation_pushes_fields() {
        // diag(1, λ) pushes X_β = (x − βy, βx + y) to (x − βy/λ, λβx + y)
        let (beta, lambda) = (0.7, 3.0);
        let x = Mat2::new(1.0, -beta, beta, 1.0);
        let pushed = Mat2::diag(1.0, lambda).conjugate(&x).unwrap();
        assert!((pushed.b + beta / lambda).abs() < 1e-15);
        assert!((pushed.c - lambda * beta).abs() < 1e-15);
    }
}
