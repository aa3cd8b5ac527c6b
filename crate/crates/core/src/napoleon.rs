// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Equilateral apexes, their centroids, and Napoleonisations.
//!
//! For an edge `a b` with `c = ⟨a, b⟩ > -1/2` there are exactly two points `q`
//! making `a b q` equilateral. Written in the basis `{a, b, a × b}`:
//!
//! ```text
//! q = (c (a + b) + ε √(1 + 2c) a × b) / (1 + c)
//! r = (√(1 + 2c) (a + b) + ε a × b) / (√3 (1 + c))      (normalized a + b + q)
//! ```
//!
//! `ε = +1` puts `q` on the side of `a × b`. For an oriented triangle
//! (`χ > 0`) and edge `p_{i+1} p_{i+2}` that is the side of `p_i`, i.e. the
//! apex points into the triangle; `ε = -1` points it outward.

use crate::error::{Error, Result};
use crate::idx;
use crate::triangle::{SideParameters, SphericalTriangle, DEGENERACY_TOLERANCE, WIDTH_MARGIN};
use crate::vector::UnitVector;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

/// Edges with `⟨a, b⟩` within this distance of `-1/2` are flagged as poorly
/// conditioned: the apex approaches the great circle through `a` and `b`.
pub const NEAR_BOUNDARY_BAND: f64 = 1e-6;

/// Centroids closer than this (Euclidean) are reported as coincident.
pub const COINCIDENCE_TOLERANCE: f64 = 1e-9;

/// `ε = ±1`, serialized as the integer `-1` or `1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    #[must_use]
    pub fn value(self) -> f64 {
        match self {
            Sign::Minus => -1.0,
            Sign::Plus => 1.0,
        }
    }

    #[must_use]
    pub fn from_value(v: f64) -> Self {
        if v < 0.0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;
    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            -1 => Ok(Sign::Minus),
            1 => Ok(Sign::Plus),
            _ => Err(format!("sign must be -1 or 1, got {v}")),
        }
    }
}

impl Neg for Sign {
    type Output = Self;
    fn neg(self) -> Self {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }
}

/// Apex directions `(ε0, ε1, ε2)`, one per edge.
///
/// Serialized as a three-character string of `+`/`-`, e.g. `"---"` for
/// [`SignVector::OUTWARD`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SignVector(pub [Sign; 3]);

impl SignVector {
    /// All apexes pointing away from the triangle interior.
    pub const OUTWARD: Self = Self([Sign::Minus; 3]);
    /// All apexes pointing towards the triangle interior.
    pub const INWARD: Self = Self([Sign::Plus; 3]);

    #[must_use]
    pub fn get(&self, i: usize) -> Sign {
        self.0[i % 3]
    }

    #[must_use]
    pub fn is_uniform(&self) -> bool {
        self.0[0] == self.0[1] && self.0[1] == self.0[2]
    }

    /// The eight sign vectors, in binary order from `"---"` to `"+++"`.
    #[must_use]
    pub fn all() -> [Self; 8] {
        std::array::from_fn(|n| {
            Self([2, 1, 0].map(|bit| {
                if n >> bit & 1 == 1 {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            }))
        })
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.0 {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseSignVectorError(String);

impl fmt::Display for ParseSignVectorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid sign vector {:?}: expected \"out\", \"in\" or three of +/-",
            self.0
        )
    }
}

impl std::error::Error for ParseSignVectorError {}

impl FromStr for SignVector {
    type Err = ParseSignVectorError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "out" | "outward" => return Ok(Self::OUTWARD),
            "in" | "inward" => return Ok(Self::INWARD),
            _ => {}
        }
        let signs: Vec<Sign> = s
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '\u{2212}' => Ok(Sign::Minus),
                _ => Err(ParseSignVectorError(s.to_owned())),
            })
            .collect::<std::result::Result<_, _>>()?;
        let signs: [Sign; 3] = signs
            .try_into()
            .map_err(|_| ParseSignVectorError(s.to_owned()))?;
        Ok(Self(signs))
    }
}

impl TryFrom<String> for SignVector {
    type Error = ParseSignVectorError;
    fn try_from(s: String) -> std::result::Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<SignVector> for String {
    fn from(s: SignVector) -> Self {
        s.to_string()
    }
}

fn check_edge(a: UnitVector, b: UnitVector) -> Result<f64> {
    let (u, v) = (a.as_vector(), b.as_vector());
    if (u - v).norm() <= DEGENERACY_TOLERANCE || (u + v).norm() <= DEGENERACY_TOLERANCE {
        return Err(Error::Degenerate { i: 0, j: 1 });
    }
    let c = a.dot(b);
    if c <= -0.5 + WIDTH_MARGIN {
        return Err(Error::TooWide {
            i: 0,
            j: 1,
            inner: c,
        });
    }
    Ok(c)
}

/// Third vertex of the equilateral triangle on edge `a b`.
pub fn apex(a: UnitVector, b: UnitVector, eps: Sign) -> Result<UnitVector> {
    let c = check_edge(a, b)?;
    let (u, v) = (a.as_vector(), b.as_vector());
    let q = (c * (u + v) + eps.value() * (1.0 + 2.0 * c).sqrt() * u.cross(v)) * (1.0 / (1.0 + c));
    Ok(UnitVector::from_unit_formula(q))
}

/// Centroid (normalized vertex sum) of the equilateral triangle `a b apex(a, b, eps)`.
pub fn edge_centroid(a: UnitVector, b: UnitVector, eps: Sign) -> Result<UnitVector> {
    let c = check_edge(a, b)?;
    let (u, v) = (a.as_vector(), b.as_vector());
    let r = ((1.0 + 2.0 * c).sqrt() * (u + v) + eps.value() * u.cross(v))
        * (1.0 / (3f64.sqrt() * (1.0 + c)));
    Ok(UnitVector::from_unit_formula(r))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NapoleonisationResult {
    pub signs: SignVector,
    /// `q_i`, opposite `p_i`.
    pub apexes: [UnitVector; 3],
    /// `r_i`, centroid of `q_i p_{i+1} p_{i+2}`.
    pub centroids: [UnitVector; 3],
    pub rr01: f64,
    pub rr12: f64,
    pub rr20: f64,
    /// Largest pairwise difference among `rr01`, `rr12`, `rr20`; zero iff equilateral.
    pub equilateral_residual: f64,
    /// Some edge has `⟨a, b⟩` within [`NEAR_BOUNDARY_BAND`] of `-1/2`.
    pub near_boundary: bool,
    pub coincident_centroids: bool,
}

impl NapoleonisationResult {
    /// `[rr01, rr12, rr20]`.
    #[must_use]
    pub fn inner_products(&self) -> [f64; 3] {
        [self.rr01, self.rr12, self.rr20]
    }

    /// Spherical side lengths `[d(r0, r1), d(r1, r2), d(r2, r0)]`.
    #[must_use]
    pub fn side_lengths(&self) -> [f64; 3] {
        self.inner_products().map(f64::acos)
    }

    #[must_use]
    pub fn is_equilateral(&self, tol: f64) -> bool {
        self.equilateral_residual < tol
    }
}

/// Maximum pairwise absolute difference of three values.
pub(crate) fn spread(v: [f64; 3]) -> f64 {
    (v[0] - v[1])
        .abs()
        .max((v[1] - v[2]).abs())
        .max((v[2] - v[0]).abs())
}

/// Builds all three apexes and centroids of `t` for the sign vector `s`.
pub fn napoleonise(t: &SphericalTriangle, s: SignVector) -> Result<NapoleonisationResult> {
    let edge = |i: usize| (t.vertex(idx(i, 1)), t.vertex(idx(i, 2)));
    let relabel = |i: usize, e: Error| match e {
        Error::Degenerate { .. } => Error::Degenerate {
            i: idx(i, 1),
            j: idx(i, 2),
        },
        Error::TooWide { inner, .. } => Error::TooWide {
            i: idx(i, 1),
            j: idx(i, 2),
            inner,
        },
        other => other,
    };
    let mut apexes = [t.vertex(0); 3];
    let mut centroids = [t.vertex(0); 3];
    for i in 0..3 {
        let (a, b) = edge(i);
        apexes[i] = apex(a, b, s.get(i)).map_err(|e| relabel(i, e))?;
        centroids[i] = edge_centroid(a, b, s.get(i)).map_err(|e| relabel(i, e))?;
    }
    let rr = [0, 1, 2].map(|i| centroids[i].dot(centroids[idx(i, 1)]).clamp(-1.0, 1.0));
    let near_boundary = (0..3).any(|i| t.opposite_inner(i) <= -0.5 + NEAR_BOUNDARY_BAND);
    let coincident_centroids = (0..3).all(|i| {
        (centroids[i].as_vector() - centroids[idx(i, 1)].as_vector()).norm() < COINCIDENCE_TOLERANCE
    });
    Ok(NapoleonisationResult {
        signs: s,
        apexes,
        centroids,
        rr01: rr[0],
        rr12: rr[1],
        rr20: rr[2],
        equilateral_residual: spread(rr),
        near_boundary,
        coincident_centroids,
    })
}

/// `γ = 3 (d0² + 1)(d1² + 1)(d2² + 1)`.
#[must_use]
pub fn gamma(d: &SideParameters) -> f64 {
    3.0 * d.to_array().iter().map(|x| x * x + 1.0).product::<f64>()
}

/// `⟨r_{i+2}, r_i⟩` from the side parameters alone:
///
/// ```text
/// γ ⟨r_{i+2}, r_i⟩ / (d_{i+1}² + 1)
///     = 4 (α d_{i+2} d_i + χ (ε_i d_{i+2} + ε_{i+2} d_i))
///       + ε_{i+2} ε_i ((d_{i+2}² - 1)(d_i² - 1) - 2 (d_{i+1}² - 1))
/// ```
///
/// `chi` must be the positive root of [`SideParameters::chi_squared`].
#[must_use]
pub fn centroid_inner_closed_form(d: &SideParameters, chi: f64, s: SignVector, i: usize) -> f64 {
    let (di, dj, dk) = (d.get(i), d.get(idx(i, 1)), d.get(idx(i, 2)));
    let (ei, ek) = (s.get(i).value(), s.get(idx(i, 2)).value());
    let bracket = 4.0 * (d.alpha() * dk * di + chi * (ei * dk + ek * di))
        + ek * ei * ((dk * dk - 1.0) * (di * di - 1.0) - 2.0 * (dj * dj - 1.0));
    (dj * dj + 1.0) * bracket / gamma(d)
}
