// SPDX-License-Identifier: Apache-2.0 OR MIT

//! The Napoleonic quadric as an ellipsoid of revolution.
//!
//! The orthogonal change of coordinates
//!
//! ```text
//! X = (d0 + d1 + d2) / √3
//! Y = (-2 d0 + d1 + d2) / √6
//! Z = (-d1 + d2) / √2
//! ```
//!
//! turns `d0² + d1² + d2² + d0d1 + d0d2 + d1d2 = 2` into
//! `2X² + Y²/2 + Z²/2 = 2`. The symmetry axis `Y = Z = 0` is the diagonal of
//! equilateral triangles. Only the part of the ellipsoid inside `(0, √3)³`
//! where `χ² > 0` corresponds to actual triangles.

use crate::classify::condition_value;
use crate::error::{Error, Result};
use crate::triangle::{SideParameters, SphericalTriangle};
use crate::vector::{UnitVector, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

/// Samples closer than this to the diagonal `d0 = d1 = d2` are rejected.
pub const DIAGONAL_MARGIN: f64 = 1e-6;

/// Minimum `χ²` for side parameters to count as realizable.
pub const REALIZABILITY_TOLERANCE: f64 = 1e-12;

/// Maximum tolerated `|condition_value - 2|` for a sample.
pub const SAMPLE_CONDITION_TOLERANCE: f64 = 1e-12;

/// Consecutive rejections after which sampling gives up.
pub const MAX_CONSECUTIVE_REJECTIONS: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EllipsoidPoint {
    #[serde(rename = "X")]
    pub x: f64,
    #[serde(rename = "Y")]
    pub y: f64,
    #[serde(rename = "Z")]
    pub z: f64,
}

impl EllipsoidPoint {
    /// Point of the ellipsoid at polar angle `theta` from the `X` axis and
    /// azimuth `phi` around it.
    #[must_use]
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self {
            x: c,
            y: 2.0 * s * phi.cos(),
            z: 2.0 * s * phi.sin(),
        }
    }

    /// `2X² + Y²/2 + Z²/2`, equal to 2 on the ellipsoid.
    #[must_use]
    pub fn quadric_value(&self) -> f64 {
        2.0 * self.x * self.x + (self.y * self.y + self.z * self.z) / 2.0
    }

    /// Euclidean distance (in `d`-space) to the diagonal.
    #[must_use]
    pub fn distance_to_axis(&self) -> f64 {
        self.y.hypot(self.z)
    }

    /// Inverse rotation; no range check.
    #[must_use]
    pub fn to_components(&self) -> [f64; 3] {
        let (r3, r6, r2) = (3f64.sqrt(), 6f64.sqrt(), 2f64.sqrt());
        let base = self.x / r3 + self.y / r6;
        [
            self.x / r3 - 2.0 * self.y / r6,
            base - self.z / r2,
            base + self.z / r2,
        ]
    }
}

/// Forward rotation, defined for any triple.
#[must_use]
pub fn d_to_xyz(d: [f64; 3]) -> EllipsoidPoint {
    let [d0, d1, d2] = d;
    EllipsoidPoint {
        x: (d0 + d1 + d2) / 3f64.sqrt(),
        y: (-2.0 * d0 + d1 + d2) / 6f64.sqrt(),
        z: (d2 - d1) / 2f64.sqrt(),
    }
}

/// Inverse rotation; fails with `OutOfRange` outside `(0, √3)³`.
pub fn xyz_to_d(p: &EllipsoidPoint) -> Result<SideParameters> {
    SideParameters::try_from(p.to_components())
}

/// Coordinates of a point in the (non-orthogonal) basis `{p0, p1, p0 × p1}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisCoefficients {
    pub a0: f64,
    pub a1: f64,
    pub b: f64,
}

impl BasisCoefficients {
    /// Coefficients of `q`; `p0 ≠ ±p1`.
    #[must_use]
    pub fn of(q: Vector3, p0: Vector3, p1: Vector3) -> Self {
        let c = p0.dot(p1);
        let det = 1.0 - c * c;
        let (qa, qb) = (q.dot(p0), q.dot(p1));
        Self {
            a0: (qa - c * qb) / det,
            a1: (qb - c * qa) / det,
            b: q.dot(p0.cross(p1)) / det,
        }
    }

    #[must_use]
    pub fn compose(&self, p0: Vector3, p1: Vector3) -> Vector3 {
        self.a0 * p0 + self.a1 * p1 + self.b * p0.cross(p1)
    }

    /// `a0² + a1² + 2 a0 a1 c + b² (1 - c²)`, the squared norm of the composed
    /// vector when `⟨p0, p1⟩ = c`.
    #[must_use]
    pub fn norm_squared(&self, c: f64) -> f64 {
        self.a0 * self.a0
            + self.a1 * self.a1
            + 2.0 * self.a0 * self.a1 * c
            + self.b * self.b * (1.0 - c * c)
    }
}

/// A canonical triangle with the given side parameters: `p0 = e_x`, `p1` in
/// the upper half of the xy-plane, and `p2` on the positive side of `p0 × p1`.
pub fn realize(d: &SideParameters) -> Result<SphericalTriangle> {
    let chi_squared = d.chi_squared();
    if chi_squared <= REALIZABILITY_TOLERANCE {
        return Err(Error::Unrealizable { chi_squared });
    }
    let c = [0, 1, 2].map(|i| d.inner(i));
    for (index, &ci) in c.iter().enumerate() {
        if !(ci > -0.5 && ci < 1.0) {
            return Err(Error::OutOfRange {
                index,
                value: d.get(index),
            });
        }
    }
    let [c0, c1, c2] = c;
    let det = 1.0 - c2 * c2;
    let p0 = Vector3::X;
    let p1 = Vector3::new(c2, det.sqrt(), 0.0);
    let coeffs = BasisCoefficients {
        a0: (c1 - c2 * c0) / det,
        a1: (c0 - c2 * c1) / det,
        b: chi_squared.sqrt() / det,
    };
    let p2 = coeffs.compose(p0, p1);
    SphericalTriangle::new(
        UnitVector::try_from(p0)?,
        UnitVector::try_from(p1)?,
        UnitVector::try_from(p2)?,
    )
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleBatch {
    pub samples: Vec<SideParameters>,
    /// Angular draws consumed, accepted or not.
    pub attempts: u64,
}

impl SampleBatch {
    #[must_use]
    pub fn rejection_rate(&self) -> f64 {
        if self.attempts == 0 {
            return 0.0;
        }
        1.0 - self.samples.len() as f64 / self.attempts as f64
    }
}

fn admissible(p: &EllipsoidPoint) -> Option<SideParameters> {
    if p.distance_to_axis() <= DIAGONAL_MARGIN {
        return None;
    }
    let d = xyz_to_d(p).ok()?;
    if (condition_value(&d) - 2.0).abs() > SAMPLE_CONDITION_TOLERANCE {
        return None;
    }
    realize(&d).ok().map(|_| d)
}

/// Draws `count` non-equilateral realizable points of the Napoleonic quadric.
///
/// The polar and azimuthal angles are drawn uniformly (not area-uniform on
/// the ellipsoid), mapped to `(X, Y, Z)` and rotated back; points outside the
/// admissible region are rejected.
pub fn sample_napoleonic(count: usize, seed: u64) -> Result<SampleBatch> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(count);
    let mut attempts = 0u64;
    let mut streak = 0u64;
    while samples.len() < count {
        let theta = rng.random_range(0.0..PI);
        let phi = rng.random_range(0.0..TAU);
        attempts += 1;
        match admissible(&EllipsoidPoint::from_angles(theta, phi)) {
            Some(d) => {
                samples.push(d);
                streak = 0;
            }
            None => {
                streak += 1;
                if streak >= MAX_CONSECUTIVE_REJECTIONS {
                    return Err(Error::SeedExhausted { attempts: streak });
                }
            }
        }
    }
    Ok(SampleBatch { samples, attempts })
}

pub fn sample_napoleonic_d(count: usize, seed: u64) -> Result<Vec<SideParameters>> {
    sample_napoleonic(count, seed).map(|b| b.samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, Verdict, DEFAULT_TOLERANCE};
    use crate::napoleon::{napoleonise, SignVector};
    use crate::oracle::random_triangles;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn reference_point_lies_on_the_ellipsoid() {
        let r = 2f64.sqrt() / 5.0;
        let p = d_to_xyz([r, 2.0 * r, 3.0 * r]);
        assert_abs_diff_eq!(p.quadric_value(), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn diagonal_maps_to_the_axis() {
        let k = 1.0 / 3f64.sqrt();
        let p = d_to_xyz([k; 3]);
        assert_abs_diff_eq!(p.x, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.y, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.z, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn inverse_range_check() {
        let p = d_to_xyz([-0.1, 0.5, 0.5]);
        assert!(matches!(
            xyz_to_d(&p),
            Err(Error::OutOfRange { index: 0, .. })
        ));
    }

    #[test]
    fn samples_are_napoleonic() {
        let batch = sample_napoleonic(500, 7).unwrap();
        assert_eq!(batch.samples.len(), 500);
        assert!(batch.attempts >= 500);
        for d in &batch.samples {
            assert_abs_diff_eq!(condition_value(d), 2.0, epsilon = 1e-12);
            assert!(d_to_xyz(d.to_array()).distance_to_axis() > DIAGONAL_MARGIN);
            let t = realize(d).unwrap();
            assert_eq!(
                classify(&t, DEFAULT_TOLERANCE).verdict,
                Verdict::OutwardNapoleonic
            );
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(
            sample_napoleonic_d(100, 7).unwrap(),
            sample_napoleonic_d(100, 7).unwrap()
        );
        assert_ne!(
            sample_napoleonic_d(10, 7).unwrap(),
            sample_napoleonic_d(10, 8).unwrap()
        );
    }

    #[test]
    fn realize_reference_parameters() {
        let r = 2f64.sqrt() / 5.0;
        let t = realize(&SideParameters::new(r, 2.0 * r, 3.0 * r).unwrap()).unwrap();
        assert!(!t.swapped());
        let [p0, p1, p2] = t.vertices();
        assert_abs_diff_eq!(p1.dot(p2), -23.0 / 50.0, epsilon = 1e-14);
        assert_abs_diff_eq!(p0.dot(p2), -17.0 / 50.0, epsilon = 1e-14);
        assert_abs_diff_eq!(p0.dot(p1), -7.0 / 50.0, epsilon = 1e-14);
        assert!(p1.y() > 0.0);

        let k = 1.0 / 3f64.sqrt();
        let t = realize(&SideParameters::new(k, k, k).unwrap()).unwrap();
        for i in 0..3 {
            assert_abs_diff_eq!(t.opposite_inner(i), -1.0 / 3.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn realize_rejects_impossible_parameters() {
        let d = SideParameters::new(1.7, 1.7, 0.1).unwrap();
        assert!(matches!(realize(&d), Err(Error::Unrealizable { .. })));
    }

    #[test]
    fn realization_round_trip_and_congruent_napoleonisations() {
        for d in sample_napoleonic_d(1000, 19).unwrap() {
            let t = realize(&d).unwrap();
            let back = t.side_parameters();
            for i in 0..3 {
                assert_abs_diff_eq!(back.get(i), d.get(i), epsilon = 1e-10);
            }
            let n = napoleonise(&t, SignVector::OUTWARD).unwrap();
            for rr in n.inner_products() {
                assert_abs_diff_eq!(rr, -1.0 / 3.0, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn basis_coefficients_norm_identity() {
        for t in random_triangles(500, 37) {
            let [p0, p1, p2] = t.vertices().map(|p| p.as_vector());
            let coeffs = BasisCoefficients::of(p2, p0, p1);
            assert_abs_diff_eq!(coeffs.norm_squared(p0.dot(p1)), 1.0, epsilon = 1e-12);
            assert!(coeffs.compose(p0, p1).max_abs_diff(p2) < 1e-12);
            // b (1 - c²) = χ.
            assert_abs_diff_eq!(
                coeffs.b * (1.0 - p0.dot(p1).powi(2)),
                t.chi(),
                epsilon = 1e-12
            );
        }
    }

    fn side() -> impl Strategy<Value = f64> {
        1e-3..1.73f64
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn rotation_round_trip(d0 in side(), d1 in side(), d2 in side()) {
            let p = d_to_xyz([d0, d1, d2]);
            let back = p.to_components();
            for (x, y) in back.iter().zip([d0, d1, d2]) {
                prop_assert!((x - y).abs() < 1e-12);
            }
            let d = SideParameters::new(d0, d1, d2).unwrap();
            prop_assert!((p.quadric_value() - condition_value(&d)).abs() < 1e-12);
        }
    }
}
