// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Euclidean 3-vectors and points of the unit sphere.
//!
//! [`Vector3`] is an unconstrained triple used for intermediate sums and cross
//! products. [`UnitVector`] is a point of `S²`: its norm is checked once on
//! construction (tolerance [`UNIT_NORM_TOLERANCE`]) and never re-normalized by
//! later operations.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};

/// Allowed deviation of `‖v‖²` from 1 for a [`UnitVector`].
pub const UNIT_NORM_TOLERANCE: f64 = 1e-9;

/// Norm below which a vector sum is treated as zero.
pub const ZERO_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Vector3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vector3 {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0);
    pub const X: Self = Self::new(1.0, 0.0, 0.0);
    pub const Y: Self = Self::new(0.0, 1.0, 0.0);
    pub const Z: Self = Self::new(0.0, 0.0, 1.0);

    #[must_use]
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    #[must_use]
    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Right-handed cross product.
    #[must_use]
    pub fn cross(self, other: Self) -> Self {
        Self::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    #[must_use]
    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    #[must_use]
    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    #[must_use]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    #[must_use]
    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// Largest absolute component difference.
    #[must_use]
    pub fn max_abs_diff(self, other: Self) -> f64 {
        let d = self - other;
        d.x.abs().max(d.y.abs()).max(d.z.abs())
    }
}

impl From<[f64; 3]> for Vector3 {
    fn from(a: [f64; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }
}

impl From<Vector3> for [f64; 3] {
    fn from(v: Vector3) -> Self {
        v.to_array()
    }
}

impl Add for Vector3 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Vector3 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Vector3 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vector3 {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        Self::new(self.x * rhs, self.y * rhs, self.z * rhs)
    }
}

impl Mul<Vector3> for f64 {
    type Output = Vector3;
    fn mul(self, rhs: Vector3) -> Vector3 {
        rhs * self
    }
}

/// A point of the unit sphere `S²`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct UnitVector(Vector3);

impl UnitVector {
    /// Checks that `(x, y, z)` already has unit norm; does not rescale.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::try_from(Vector3::new(x, y, z))
    }

    /// Rescales a non-zero finite vector onto the sphere.
    pub fn normalize(v: Vector3) -> Result<Self> {
        if !v.is_finite() {
            return Err(Error::NonFinite);
        }
        let n = v.norm();
        if n <= ZERO_TOLERANCE {
            return Err(Error::ZeroVector);
        }
        Ok(Self(v * (1.0 / n)))
    }

    /// Wraps a vector that is unit by construction.
    pub(crate) fn from_unit_formula(v: Vector3) -> Self {
        debug_assert!(
            (v.norm_squared() - 1.0).abs() <= 1e-6,
            "formula produced non-unit vector {v:?}"
        );
        Self(v)
    }

    #[must_use]
    pub const fn as_vector(&self) -> Vector3 {
        self.0
    }

    #[must_use]
    pub fn x(&self) -> f64 {
        self.0.x
    }

    #[must_use]
    pub fn y(&self) -> f64 {
        self.0.y
    }

    #[must_use]
    pub fn z(&self) -> f64 {
        self.0.z
    }

    #[must_use]
    pub fn to_array(self) -> [f64; 3] {
        self.0.to_array()
    }

    #[must_use]
    pub fn dot(self, other: Self) -> f64 {
        self.0.dot(other.0)
    }
}

impl TryFrom<Vector3> for UnitVector {
    type Error = Error;

    fn try_from(v: Vector3) -> Result<Self> {
        if !v.is_finite() {
            return Err(Error::NonFinite);
        }
        let n2 = v.norm_squared();
        if (n2 - 1.0).abs() > UNIT_NORM_TOLERANCE {
            return Err(Error::NotUnit { norm: n2.sqrt() });
        }
        Ok(Self(v))
    }
}

impl TryFrom<[f64; 3]> for UnitVector {
    type Error = Error;

    fn try_from(a: [f64; 3]) -> Result<Self> {
        Self::try_from(Vector3::from(a))
    }
}

impl From<UnitVector> for Vector3 {
    fn from(u: UnitVector) -> Self {
        u.0
    }
}

impl From<UnitVector> for [f64; 3] {
    fn from(u: UnitVector) -> Self {
        u.to_array()
    }
}

pub fn dot(a: Vector3, b: Vector3) -> f64 {
    a.dot(b)
}

pub fn cross(a: Vector3, b: Vector3) -> Vector3 {
    a.cross(b)
}

/// Scalar triple product `⟨a, b × c⟩`.
pub fn triple(a: Vector3, b: Vector3, c: Vector3) -> f64 {
    a.dot(b.cross(c))
}

/// Great-circle distance in `[0, π]`.
pub fn spherical_distance(p: UnitVector, q: UnitVector) -> f64 {
    p.dot(q).clamp(-1.0, 1.0).acos()
}

/// Normalized vertex sum, the spherical centroid of three points.
pub fn barycentre(p0: UnitVector, p1: UnitVector, p2: UnitVector) -> Result<UnitVector> {
    let sum = p0.as_vector() + p1.as_vector() + p2.as_vector();
    if sum.norm() <= ZERO_TOLERANCE {
        return Err(Error::ZeroSum);
    }
    UnitVector::normalize(sum)
}
