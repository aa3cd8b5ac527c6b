// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Napoleonisations of spherical triangles.
//!
//! Equilateral spherical triangles are erected on the three edges of a
//! triangle on the unit sphere `S²`, and the triangle formed by their
//! centroids (the *Napoleonisation*) is examined. Unlike the planar case the
//! result is usually not equilateral. This crate provides:
//!
//! - [`vector`]: 3-vector and unit-sphere primitives,
//! - [`triangle`]: validated, orientation-normalized spherical triangles and
//!   their side parameters `d_i = √(1 + 2⟨p_{i+1}, p_{i+2}⟩)`,
//! - [`napoleon`]: apex and centroid constructions for any sign vector, and the
//!   closed form of the centroid inner products,
//! - [`classify`]: the outward/inward Napoleonic classification, driven by the
//!   quadric `d0² + d1² + d2² + d0d1 + d0d2 + d1d2 = 2`,
//! - [`ellipsoid`]: the same quadric as an ellipsoid of revolution, seeded
//!   sampling on it and realization of side parameters as triangles,
//! - [`algebra`]: exact rational polynomial arithmetic used to check the
//!   supporting polynomial identities,
//! - [`oracle`]: an independent brute-force construction used for
//!   cross-checking.
//!
//! Indices are taken mod 3 throughout: apex `q_i` and centroid `r_i` are built
//! on the edge `p_{i+1} p_{i+2}`, opposite `p_i`.

pub mod algebra;
pub mod classify;
pub mod ellipsoid;
mod error;
pub mod napoleon;
pub mod oracle;
pub mod triangle;
pub mod vector;

pub use classify::{classify, ClassificationReport, Verdict};
pub use ellipsoid::{realize, sample_napoleonic_d, EllipsoidPoint};
pub use error::{Error, ErrorKind, Result};
pub use napoleon::{napoleonise, NapoleonisationResult, Sign, SignVector};
pub use triangle::{SideParameters, SphericalTriangle};
pub use vector::{UnitVector, Vector3};

/// `i + k` reduced mod 3.
#[inline]
pub(crate) const fn idx(i: usize, k: usize) -> usize {
    (i + k) % 3
}

#[cfg(test)]
pub(crate) mod fixtures;
