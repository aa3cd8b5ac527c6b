// SPDX-License-Identifier: Apache-2.0 OR MIT

use napoleon_core::{realize, Error, SideParameters, SphericalTriangle, UnitVector, Vector3};
use serde::Deserialize;
use std::io::Read;
use std::path::Path;

/// Vertices whose norm differs from 1 by more than this produce a warning.
pub const NORMALIZATION_WARNING: f64 = 1e-6;

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or unparsable input; exit code 1.
    Malformed(String),
    /// Well-formed input rejected by the geometry; exit code 2.
    Invalid(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self::Invalid(e)
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawInput {
    Vertices { vertices: [[f64; 3]; 3] },
    Sides { d: [f64; 3] },
}

/// A validated triangle plus any ingestion warnings.
#[derive(Debug)]
pub struct Ingested {
    pub triangle: SphericalTriangle,
    pub warnings: Vec<String>,
}

/// Reads `path`, or standard input for `None` and `-`.
pub fn read_source(path: Option<&Path>) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => {
            text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Malformed(format!("{}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Malformed(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

pub fn parse(text: &str) -> Result<Ingested, CliError> {
    let raw: RawInput = serde_json::from_str(text).map_err(|e| {
        CliError::Malformed(format!(
            "expected {{\"vertices\": [[x,y,z],[x,y,z],[x,y,z]]}} or {{\"d\": [d0,d1,d2]}}: {e}"
        ))
    })?;
    let mut warnings = Vec::new();
    let triangle = match raw {
        RawInput::Vertices { vertices } => {
            let mut p = Vec::with_capacity(3);
            for (i, v) in vertices.into_iter().enumerate() {
                let v = Vector3::from(v);
                let u = UnitVector::normalize(v)?;
                let norm = v.norm();
                if (norm - 1.0).abs() > NORMALIZATION_WARNING {
                    warnings.push(format!("vertex {i} had norm {norm}; normalized"));
                }
                p.push(u);
            }
            SphericalTriangle::new(p[0], p[1], p[2])?
        }
        RawInput::Sides { d } => realize(&SideParameters::try_from(d)?)?,
    };
    if triangle.swapped() {
        warnings.push("input was clockwise; vertices 1 and 2 exchanged".to_owned());
    }
    Ok(Ingested { triangle, warnings })
}

pub fn load(path: Option<&Path>) -> Result<Ingested, CliError> {
    parse(&read_source(path)?)
}
