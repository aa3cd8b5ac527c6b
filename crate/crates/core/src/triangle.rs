// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Admissible spherical triangles and their side parameters.
//!
//! A [`SphericalTriangle`] has pairwise distinct, non-antipodal, non-cogeodesic
//! vertices with every pairwise inner product strictly above `-1/2`, so that
//! an equilateral triangle with a well-defined interior can be erected on each
//! edge. Vertices are relabelled on construction (one swap of `p1` and `p2`)
//! so that `χ = ⟨p0, p1 × p2⟩ > 0`.

use crate::error::{Error, Result};
use crate::idx;
use crate::vector::{triple, UnitVector};
use serde::{Deserialize, Serialize};

/// Minimum `‖p_i ± p_j‖` and `|χ|` for a non-degenerate triangle.
pub const DEGENERACY_TOLERANCE: f64 = 1e-9;

/// Pairwise inner products at or below `-1/2 + WIDTH_MARGIN` are rejected.
pub const WIDTH_MARGIN: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "TriangleRepr")]
pub struct SphericalTriangle {
    vertices: [UnitVector; 3],
    chi: f64,
    /// Whether `p1` and `p2` were exchanged relative to the input order.
    swapped: bool,
}

#[derive(Deserialize)]
struct TriangleRepr {
    vertices: [UnitVector; 3],
    #[allow(dead_code)]
    chi: f64,
    swapped: bool,
}

impl TryFrom<TriangleRepr> for SphericalTriangle {
    type Error = String;

    fn try_from(r: TriangleRepr) -> std::result::Result<Self, String> {
        let [p0, p1, p2] = r.vertices;
        let t = Self::new(p0, p1, p2).map_err(|e| e.to_string())?;
        if t.swapped {
            return Err("serialized triangle is not orientation-normalized".into());
        }
        Ok(Self {
            swapped: r.swapped,
            ..t
        })
    }
}

impl SphericalTriangle {
    pub fn new(p0: UnitVector, p1: UnitVector, p2: UnitVector) -> Result<Self> {
        let p = [p0, p1, p2];
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            let (a, b) = (p[i].as_vector(), p[j].as_vector());
            if (a - b).norm() <= DEGENERACY_TOLERANCE || (a + b).norm() <= DEGENERACY_TOLERANCE {
                return Err(Error::Degenerate { i, j });
            }
        }
        let chi = triple(p0.into(), p1.into(), p2.into());
        if chi.abs() < DEGENERACY_TOLERANCE {
            return Err(Error::Cogeodesic { triple: chi });
        }
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            let inner = p[i].dot(p[j]);
            if inner <= -0.5 + WIDTH_MARGIN {
                return Err(Error::TooWide { i, j, inner });
            }
        }
        if chi > 0.0 {
            Ok(Self {
                vertices: p,
                chi,
                swapped: false,
            })
        } else {
            Ok(Self {
                vertices: [p0, p2, p1],
                chi: triple(p0.into(), p2.into(), p1.into()),
                swapped: true,
            })
        }
    }

    pub fn from_vertices(p: [UnitVector; 3]) -> Result<Self> {
        Self::new(p[0], p[1], p[2])
    }

    #[must_use]
    pub fn vertices(&self) -> [UnitVector; 3] {
        self.vertices
    }

    #[must_use]
    pub fn vertex(&self, i: usize) -> UnitVector {
        self.vertices[i % 3]
    }

    /// `⟨p0, p1 × p2⟩`, always positive.
    #[must_use]
    pub fn chi(&self) -> f64 {
        self.chi
    }

    #[must_use]
    pub fn swapped(&self) -> bool {
        self.swapped
    }

    /// Position in the caller's input of the vertex stored at `i`.
    #[must_use]
    pub fn input_index(&self, i: usize) -> usize {
        match (self.swapped, i % 3) {
            (true, 1) => 2,
            (true, 2) => 1,
            (_, k) => k,
        }
    }

    /// `⟨p_{i+1}, p_{i+2}⟩`, the cosine of the side opposite `p_i`.
    #[must_use]
    pub fn opposite_inner(&self, i: usize) -> f64 {
        self.vertex(idx(i, 1)).dot(self.vertex(idx(i, 2)))
    }

    #[must_use]
    pub fn side_parameters(&self) -> SideParameters {
        let d = [0, 1, 2].map(|i| (1.0 + 2.0 * self.opposite_inner(i)).sqrt());
        SideParameters(d)
    }
}

/// `d_i = √(1 + 2⟨p_{i+1}, p_{i+2}⟩)`, each in `(0, √3)`.
///
/// `d_i` is a monotone decreasing function of the length of the side opposite
/// `p_i`; the triangle is equilateral exactly when `d0 = d1 = d2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct SideParameters([f64; 3]);

impl SideParameters {
    pub fn new(d0: f64, d1: f64, d2: f64) -> Result<Self> {
        let upper = 3f64.sqrt();
        for (index, value) in [d0, d1, d2].into_iter().enumerate() {
            if !(value > 0.0 && value < upper) {
                return Err(Error::OutOfRange { index, value });
            }
        }
        Ok(Self([d0, d1, d2]))
    }

    #[must_use]
    pub fn get(&self, i: usize) -> f64 {
        self.0[i % 3]
    }

    #[must_use]
    pub fn to_array(self) -> [f64; 3] {
        self.0
    }

    /// The parameters with indices `(0, 1, 2)` replaced by `(k, k+1, k+2)`.
    #[must_use]
    pub fn rotated(&self, k: usize) -> Self {
        Self([0, 1, 2].map(|i| self.get(idx(i, k))))
    }

    #[must_use]
    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    #[must_use]
    pub fn product(&self) -> f64 {
        self.0.iter().product()
    }

    #[must_use]
    pub fn sum_squares(&self) -> f64 {
        self.0.iter().map(|d| d * d).sum()
    }

    /// `d0 d1 + d1 d2 + d2 d0`.
    #[must_use]
    pub fn pair_sum(&self) -> f64 {
        let [a, b, c] = self.0;
        a * b + b * c + c * a
    }

    /// Pairwise inner product `c_i = ⟨p_{i+1}, p_{i+2}⟩ = (d_i² - 1) / 2`.
    #[must_use]
    pub fn inner(&self, i: usize) -> f64 {
        let d = self.get(i);
        (d * d - 1.0) / 2.0
    }

    /// `α = (d0² + d1² + d2² - 1) / 2`, which equals `1 + Σ ⟨p_i, p_j⟩`.
    #[must_use]
    pub fn alpha(&self) -> f64 {
        (self.sum_squares() - 1.0) / 2.0
    }

    /// `χ²` as a polynomial in the side parameters:
    /// `4χ² = 2(1-α)(1+2α) + d0²d1² + d1²d2² + d2²d0² + d0²d1²d2²`.
    #[must_use]
    pub fn chi_squared(&self) -> f64 {
        let a = self.alpha();
        let [s0, s1, s2] = self.0.map(|d| d * d);
        (2.0 * (1.0 - a) * (1.0 + 2.0 * a) + s0 * s1 + s1 * s2 + s2 * s0 + s0 * s1 * s2) / 4.0
    }
}

impl TryFrom<[f64; 3]> for SideParameters {
    type Error = Error;

    fn try_from(d: [f64; 3]) -> Result<Self> {
        Self::new(d[0], d[1], d[2])
    }
}

impl From<SideParameters> for [f64; 3] {
    fn from(d: SideParameters) -> Self {
        d.0
    }
}
