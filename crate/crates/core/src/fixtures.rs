// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Reference triangles with known closed-form constructions.

use crate::vector::UnitVector;

fn unit(x: f64, y: f64, z: f64) -> UnitVector {
    UnitVector::new(x, y, z).expect("fixture vector is unit")
}

/// Non-isosceles outward-Napoleonic triangle with pairwise inner products
/// ⟨p0,p1⟩ = -7/50, ⟨p0,p2⟩ = -17/50, ⟨p1,p2⟩ = -23/50.
pub fn nonisosceles_vertices() -> [UnitVector; 3] {
    let s = 2451f64.sqrt();
    [
        unit(1.0, 0.0, 0.0),
        unit(-7.0 / 50.0, s / 50.0, 0.0),
        unit(
            -17.0 / 50.0,
            -423.0 * s / 40850.0,
            46.0 * 4902f64.sqrt() / 4085.0,
        ),
    ]
}

/// Outward apexes of [`nonisosceles_vertices`], `q_i` opposite `p_i`.
pub fn nonisosceles_apexes() -> [UnitVector; 3] {
    let s = 2451f64.sqrt();
    let r = (2.0f64 / 2451.0).sqrt();
    [
        unit(0.0, -23.0 / s, -31.0 * r),
        unit(-17.0 / 50.0, -1019.0 / (50.0 * s), -148.0 / 5.0 * r),
        unit(
            -7.0 / 50.0,
            -7.0 / 50.0 * (57.0f64 / 43.0).sqrt(),
            -3.0 / 5.0 * (114.0f64 / 43.0).sqrt(),
        ),
    ]
}

/// Outward centroids of [`nonisosceles_vertices`].
pub fn nonisosceles_centroids() -> [UnitVector; 3] {
    let r817 = (2.0f64 / 817.0).sqrt();
    [
        unit(
            -2.0 / 5.0 * 6f64.sqrt(),
            8.0 / 15.0 * r817,
            -17.0 / (3.0 * 817f64.sqrt()),
        ),
        unit(
            2.0 / 5.0 * (2.0f64 / 3.0).sqrt(),
            -286.0 / 15.0 * r817,
            -5.0 / (3.0 * 817f64.sqrt()),
        ),
        unit(
            6f64.sqrt() / 5.0,
            3.0 / 5.0 * (38.0f64 / 43.0).sqrt(),
            -(19.0f64 / 43.0).sqrt(),
        ),
    ]
}

/// Small scalene triangle whose raw labelling has negative triple product.
pub fn scalene_vertices() -> [UnitVector; 3] {
    [
        unit(1.0, 0.0, 0.0),
        unit(0.75, 0.25, 6f64.sqrt() / 4.0),
        unit(0.5, 0.5, 2f64.sqrt() / 2.0),
    ]
}

/// Equilateral triangle with all pairwise inner products -1/3.
pub fn tetrahedral_vertices() -> [UnitVector; 3] {
    let k = 1.0 / 3f64.sqrt();
    [unit(k, k, k), unit(k, -k, -k), unit(-k, k, -k)]
}
