// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Brute-force reference constructions for cross-checking.
//!
//! Nothing here uses the closed-form apex or centroid formulas of
//! [`crate::napoleon`]. The apex is obtained by rotating `b` about the axis `a`
//! through the vertex angle of the equilateral triangle, taken from the
//! spherical law of cosines, and centroids are plain normalized vertex sums.

use crate::error::{Error, Result};
use crate::idx;
use crate::napoleon::{spread, Sign, SignVector};
use crate::triangle::{SphericalTriangle, DEGENERACY_TOLERANCE, WIDTH_MARGIN};
use crate::vector::{barycentre, UnitVector, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

/// Apex of the equilateral triangle on `a b`, by rotating `b` about `a`.
///
/// With side `θ`, `cos θ = ⟨a, b⟩`, the vertex angle `A` satisfies
/// `cos A = (cos θ - cos² θ) / sin² θ = cos θ / (1 + cos θ)`. Rotating by `+A`
/// moves `b` towards `a × b`, which is the `ε = +1` apex.
pub fn apex_by_rotation(a: UnitVector, b: UnitVector, eps: Sign) -> Result<UnitVector> {
    let (u, v) = (a.as_vector(), b.as_vector());
    if (u - v).norm() <= DEGENERACY_TOLERANCE || (u + v).norm() <= DEGENERACY_TOLERANCE {
        return Err(Error::Degenerate { i: 0, j: 1 });
    }
    let cos_side = u.dot(v);
    if cos_side <= -0.5 + WIDTH_MARGIN {
        return Err(Error::TooWide {
            i: 0,
            j: 1,
            inner: cos_side,
        });
    }
    let cos_angle = cos_side / (1.0 + cos_side);
    let sin_angle = eps.value() * (1.0 - cos_angle * cos_angle).max(0.0).sqrt();
    // Rodrigues: v cos A + (k × v) sin A + k ⟨k, v⟩ (1 - cos A), k = a.
    let rotated = v * cos_angle + u.cross(v) * sin_angle + u * (cos_side * (1.0 - cos_angle));
    UnitVector::normalize(rotated)
}

/// A Napoleonisation built only from [`apex_by_rotation`] and [`barycentre`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReferenceNapoleonisation {
    pub signs: SignVector,
    pub apexes: [UnitVector; 3],
    pub centroids: [UnitVector; 3],
    /// `[⟨r0, r1⟩, ⟨r1, r2⟩, ⟨r2, r0⟩]`.
    pub inner_products: [f64; 3],
    pub residual: f64,
}

pub fn reference_napoleonisation(
    t: &SphericalTriangle,
    s: SignVector,
) -> Result<ReferenceNapoleonisation> {
    let mut apexes = [t.vertex(0); 3];
    let mut centroids = [t.vertex(0); 3];
    for i in 0..3 {
        let (a, b) = (t.vertex(idx(i, 1)), t.vertex(idx(i, 2)));
        apexes[i] = apex_by_rotation(a, b, s.get(i))?;
        centroids[i] = barycentre(a, b, apexes[i])?;
    }
    let inner_products = [0, 1, 2].map(|i| centroids[i].dot(centroids[idx(i, 1)]));
    Ok(ReferenceNapoleonisation {
        signs: s,
        apexes,
        centroids,
        inner_products,
        residual: spread(inner_products),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchHit {
    pub signs: SignVector,
    pub residual: f64,
}

/// Residuals of all eight sign vectors, in [`SignVector::all`] order.
pub fn all_residuals(t: &SphericalTriangle) -> Result<Vec<SearchHit>> {
    SignVector::all()
        .into_iter()
        .map(|signs| {
            reference_napoleonisation(t, signs).map(|n| SearchHit {
                signs,
                residual: n.residual,
            })
        })
        .collect()
}

/// Sign vectors whose Napoleonisation of `t` is equilateral to within `tol`.
///
/// Mixed-sign hits are included; they are outside the scope of
/// [`crate::classify`] and are reported for exploration only.
pub fn search_equilateral(t: &SphericalTriangle, tol: f64) -> Result<Vec<SearchHit>> {
    Ok(all_residuals(t)?
        .into_iter()
        .filter(|h| h.residual < tol)
        .collect())
}

/// Uniform point of `S²` from a normalized Gaussian triple.
pub fn random_unit_vector<R: Rng + ?Sized>(rng: &mut R) -> UnitVector {
    loop {
        let v = Vector3::new(
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        );
        if let Ok(u) = UnitVector::normalize(v) {
            return u;
        }
    }
}

/// Valid triangles with independent uniform vertices, rejecting invalid triples.
pub fn random_triangle<R: Rng + ?Sized>(rng: &mut R) -> SphericalTriangle {
    loop {
        let p = [0; 3].map(|_| random_unit_vector(rng));
        if let Ok(t) = SphericalTriangle::from_vertices(p) {
            return t;
        }
    }
}

/// `count` seeded random triangles; the same seed gives the same list.
pub fn random_triangles(count: usize, seed: u64) -> Vec<SphericalTriangle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_triangle(&mut rng)).collect()
}
