// SPDX-License-Identifier: Apache-2.0 OR MIT

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vector norm {norm} is not within tolerance of 1")]
    NotUnit { norm: f64 },
    #[error("vector has non-finite components")]
    NonFinite,
    #[error("cannot normalize a zero vector")]
    ZeroVector,
    #[error("vertex sum is zero, barycentre undefined")]
    ZeroSum,
    #[error("vertices {i} and {j} coincide or are antipodal")]
    Degenerate { i: usize, j: usize },
    #[error("vertices {i} and {j} have inner product {inner} <= -1/2, no equilateral triangle fits on the edge")]
    TooWide { i: usize, j: usize, inner: f64 },
    #[error("vertices are cogeodesic (triple product {triple})")]
    Cogeodesic { triple: f64 },
    #[error("side parameter {value} (index {index}) outside the open interval (0, √3)")]
    OutOfRange { index: usize, value: f64 },
    #[error("side parameters are not realizable on the sphere (χ² = {chi_squared})")]
    Unrealizable { chi_squared: f64 },
    #[error("sign of ε is indeterminate at this point (product {product})")]
    Indeterminate { product: f64 },
    #[error("rejection sampling failed {attempts} consecutive times")]
    SeedExhausted { attempts: u64 },
}

/// Machine-readable error category, as emitted by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ErrorKind {
    NotUnit,
    NonFinite,
    ZeroVector,
    ZeroSum,
    Degenerate,
    TooWide,
    Cogeodesic,
    OutOfRange,
    Unrealizable,
    Indeterminate,
    SeedExhausted,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::NotUnit { .. } => ErrorKind::NotUnit,
            Error::NonFinite => ErrorKind::NonFinite,
            Error::ZeroVector => ErrorKind::ZeroVector,
            Error::ZeroSum => ErrorKind::ZeroSum,
            Error::Degenerate { .. } => ErrorKind::Degenerate,
            Error::TooWide { .. } => ErrorKind::TooWide,
            Error::Cogeodesic { .. } => ErrorKind::Cogeodesic,
            Error::OutOfRange { .. } => ErrorKind::OutOfRange,
            Error::Unrealizable { .. } => ErrorKind::Unrealizable,
            Error::Indeterminate { .. } => ErrorKind::Indeterminate,
            Error::SeedExhausted { .. } => ErrorKind::SeedExhausted,
        }
    }
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
