use std::ops::{Add, Mul, Neg, Sub};

/// Point or displacement on the ground plane (meters).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn from_polar(radius: f64, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Vec2::new(radius * c, radius * s)
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Euclidean projection onto the closed disk of radius `r` around the origin.
    pub fn clamp_to_disk(self, r: f64) -> Vec2 {
        let n = self.norm();
        if n > r {
            self * (r / n)
        } else {
            self
        }
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_projection() {
        let p = Vec2::new(3.0, 4.0);
        assert_eq!(p.clamp_to_disk(10.0), p);
        let q = p.clamp_to_disk(2.5);
        assert!((q.norm() - 2.5).abs() < 1e-12);
        assert!((q.y / q.x - 4.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn polar_roundtrip() {
        let p = Vec2::from_polar(2.0, std::f64::consts::FRAC_PI_2);
        assert!(p.x.abs() < 1e-15);
        assert!((p.y - 2.0).abs() < 1e-15);
    }
}
