// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Outward/inward Napoleonic classification from side parameters.
//!
//! A non-equilateral admissible triangle is never inward-Napoleonic, and is
//! outward-Napoleonic exactly when its side parameters lie on the quadric
//!
//! ```text
//! d0² + d1² + d2² + d0d1 + d0d2 + d1d2 = 2.
//! ```
//!
//! In that case every pairwise centroid inner product is `-1/3`, so the
//! Napoleonisation has side `π - arccos(1/3)`. Equilateral triangles are
//! both outward- and inward-Napoleonic and get their own verdict.

use crate::error::{Error, Result};
use crate::napoleon::{gamma, Sign};
use crate::triangle::{SideParameters, SphericalTriangle};
use serde::{Deserialize, Serialize};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Products below this magnitude leave the sign of ε undecided.
pub const INDETERMINATE_TOLERANCE: f64 = 1e-12;

/// Pairwise centroid inner product of every non-equilateral Napoleonic triangle.
pub const NAPOLEONIC_INNER_PRODUCT: f64 = -1.0 / 3.0;

/// Side length `π - arccos(1/3) = arccos(-1/3)` of those Napoleonisations.
#[must_use]
pub fn napoleonic_side() -> f64 {
    std::f64::consts::PI - (1.0f64 / 3.0).acos()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Equilateral,
    OutwardNapoleonic,
    NotNapoleonic,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub d: SideParameters,
    pub alpha: f64,
    pub chi: f64,
    pub gamma: f64,
    /// `d0² + d1² + d2² + d0d1 + d0d2 + d1d2`.
    pub condition_value: f64,
    /// `condition_value - 2`.
    pub condition_residual: f64,
    /// `d0² + d1² + d2² - d0d1 - d1d2 - d2d0`, zero exactly on the diagonal.
    pub equilateral_factor: f64,
    pub verdict: Verdict,
    pub predicted_rr: Option<f64>,
    pub predicted_side: Option<f64>,
    pub epsilon_sign: Option<Sign>,
    pub note: Option<String>,
}

#[must_use]
pub fn condition_value(d: &SideParameters) -> f64 {
    d.sum_squares() + d.pair_sum()
}

/// Half the sum of squared pairwise differences of the `d_i`.
#[must_use]
pub fn equilateral_factor(d: &SideParameters) -> f64 {
    let [a, b, c] = d.to_array();
    ((a - b).powi(2) + (b - c).powi(2) + (c - a).powi(2)) / 2.0
}

/// `α (d0 + d1 + d2 - d0d1d2) + ε χ (1 - d0d1 - d1d2 - d2d0)`.
///
/// For a non-equilateral triangle with uniform apex signs `ε`, this vanishes
/// exactly when the Napoleonisation is equilateral.
#[must_use]
pub fn napoleonic_equation_residual(d: &SideParameters, chi: f64, eps: Sign) -> f64 {
    d.alpha() * (d.sum() - d.product()) + eps.value() * chi * (1.0 - d.pair_sum())
}

/// The only sign for which [`napoleonic_equation_residual`] can vanish:
/// the sign of `(1 - Σd_i²)(1 - Σ_{i<j} d_i d_j)`.
pub fn epsilon_from_d(d: &SideParameters) -> Result<Sign> {
    let product = (1.0 - d.sum_squares()) * (1.0 - d.pair_sum());
    if product.abs() <= INDETERMINATE_TOLERANCE {
        return Err(Error::Indeterminate { product });
    }
    Ok(Sign::from_value(product))
}

/// `2χ - (d0 + d1 + d2 - d0d1d2)`, which vanishes on the Napoleonic quadric.
#[must_use]
pub fn chi_relation_check(d: &SideParameters, chi: f64) -> f64 {
    2.0 * chi - (d.sum() - d.product())
}

pub fn classify(t: &SphericalTriangle, tol: f64) -> ClassificationReport {
    classify_parameters(&t.side_parameters(), t.chi(), tol)
}

/// [`classify`] for bare side parameters; `chi` must be `+√χ²`.
pub fn classify_parameters(d: &SideParameters, chi: f64, tol: f64) -> ClassificationReport {
    // Positive on (0, √3)³ by AM-GM.
    debug_assert!(
        d.sum() - d.product() > 0.0,
        "d0 + d1 + d2 <= d0 d1 d2 at {d:?}"
    );

    let condition_value = condition_value(d);
    let condition_residual = condition_value - 2.0;
    let equilateral_factor = equilateral_factor(d);
    let verdict = if equilateral_factor < tol {
        Verdict::Equilateral
    } else if condition_residual.abs() < tol {
        Verdict::OutwardNapoleonic
    } else {
        Verdict::NotNapoleonic
    };
    let napoleonic = verdict == Verdict::OutwardNapoleonic;
    let note = match verdict {
        Verdict::Equilateral => Some("equilateral: both outward- and inward-Napoleonic".to_owned()),
        Verdict::OutwardNapoleonic => None,
        Verdict::NotNapoleonic => None,
    };
    ClassificationReport {
        d: *d,
        alpha: d.alpha(),
        chi,
        gamma: gamma(d),
        condition_value,
        condition_residual,
        equilateral_factor,
        verdict,
        predicted_rr: napoleonic.then_some(NAPOLEONIC_INNER_PRODUCT),
        predicted_side: napoleonic.then(napoleonic_side),
        epsilon_sign: if napoleonic {
            epsilon_from_d(d).ok()
        } else {
            None
        },
        note,
    }
}
