// SPDX-License-Identifier: Apache-2.0 OR MIT

//! `napoleon`: construct, classify, sample and verify Napoleonisations of
//! spherical triangles. Output formats are described in `FORMATS.md`.

mod input;

use clap::{Parser, Subcommand, ValueEnum};
use input::{load, CliError, Ingested};
use napoleon_core::algebra::{self, IdentityCheck};
use napoleon_core::ellipsoid::{d_to_xyz, sample_napoleonic, EllipsoidPoint};
use napoleon_core::oracle::{all_residuals, SearchHit};
use napoleon_core::vector::{barycentre, spherical_distance};
use napoleon_core::{
    classify, napoleonise, realize, ClassificationReport, NapoleonisationResult, SignVector,
    SphericalTriangle,
};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "napoleon",
    version,
    about = "Napoleonisations of spherical triangles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(clap::Args)]
struct Tolerance {
    /// Decision tolerance.
    #[arg(long, env = "NAPOLEON_TOL", default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Build the Napoleonisation of a triangle.
    Napoleonise {
        /// Input JSON file; standard input when absent or `-`.
        input: Option<PathBuf>,
        /// `out`, `in`, or three characters of `+`/`-`.
        #[arg(long, default_value = "out")]
        signs: SignVector,
        #[command(flatten)]
        tol: Tolerance,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Decide whether a triangle is outward-Napoleonic.
    Classify {
        input: Option<PathBuf>,
        #[command(flatten)]
        tol: Tolerance,
    },
    /// Draw side parameters from the Napoleonic ellipsoid.
    Sample {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also emit a realizing triangle for each sample.
        #[arg(long)]
        realize: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Check the polynomial identities exactly.
    VerifyIdentities {
        /// Perturb χ² by one before checking (sanity check of the checker).
        #[arg(long, hide = true)]
        mutate: bool,
    },
    /// Residuals of all eight sign vectors and those below the tolerance.
    Search {
        input: Option<PathBuf>,
        #[command(flatten)]
        tol: Tolerance,
    },
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: String,
    message: &'a str,
}

fn report_error(e: &CliError) -> ExitCode {
    let (kind, message, code) = match e {
        CliError::Malformed(m) => ("Malformed".to_owned(), m.clone(), 1),
        CliError::Invalid(err) => (err.kind().to_string(), err.to_string(), 2),
    };
    let line = serde_json::to_string(&ErrorReport {
        error: kind,
        message: &message,
    })
    .unwrap_or_else(|_| message.clone());
    eprintln!("{line}");
    ExitCode::from(code)
}

fn warn(warnings: &[String]) {
    for w in warnings {
        eprintln!("warning: {w}");
    }
}

fn emit_json<T: Serialize>(out: &mut impl Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)
        .map_err(|e| CliError::Malformed(e.to_string()))?;
    writeln!(out).map_err(io_error)
}

fn io_error(e: std::io::Error) -> CliError {
    CliError::Malformed(format!("output: {e}"))
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::Malformed(format!("output: {e}"))
}

#[derive(Serialize)]
struct NapoleoniseOutput<'a> {
    triangle: &'a SphericalTriangle,
    result: &'a NapoleonisationResult,
    /// Spherical distances `[d(r0, r1), d(r1, r2), d(r2, r0)]`.
    centroid_distances: [f64; 3],
    equilateral: bool,
    warnings: &'a [String],
}

#[derive(Serialize)]
struct PlotRow {
    kind: &'static str,
    index: usize,
    x: f64,
    y: f64,
    z: f64,
}

fn plot_rows(t: &SphericalTriangle, n: &NapoleonisationResult) -> Result<Vec<PlotRow>, CliError> {
    let mut rows = Vec::with_capacity(11);
    for (kind, points) in [("P", t.vertices()), ("Q", n.apexes), ("R", n.centroids)] {
        for (index, p) in points.iter().enumerate() {
            rows.push(PlotRow {
                kind,
                index,
                x: p.x(),
                y: p.y(),
                z: p.z(),
            });
        }
    }
    for (index, [a, b, c]) in [t.vertices(), n.centroids].into_iter().enumerate() {
        let g = barycentre(a, b, c)?;
        rows.push(PlotRow {
            kind: "barycentre",
            index,
            x: g.x(),
            y: g.y(),
            z: g.z(),
        });
    }
    Ok(rows)
}

fn cmd_napoleonise(
    ingested: &Ingested,
    signs: SignVector,
    tol: f64,
    format: Format,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let t = &ingested.triangle;
    let n = napoleonise(t, signs)?;
    match format {
        Format::Json => {
            let r = n.centroids;
            let output = NapoleoniseOutput {
                triangle: t,
                result: &n,
                centroid_distances: [0, 1, 2].map(|i| spherical_distance(r[i], r[(i + 1) % 3])),
                equilateral: n.is_equilateral(tol),
                warnings: &ingested.warnings,
            };
            emit_json(out, &output)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in plot_rows(t, &n)? {
                w.serialize(row).map_err(csv_error)?;
            }
            w.flush().map_err(io_error)
        }
    }
}

#[derive(Serialize)]
struct ClassifyOutput<'a> {
    report: &'a ClassificationReport,
    warnings: &'a [String],
}

#[derive(Serialize)]
struct SampleRecord {
    index: usize,
    d: [f64; 3],
    point: EllipsoidPoint,
    condition_value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<[[f64; 3]; 3]>,
}

#[derive(Serialize)]
struct SampleOutput {
    seed: u64,
    count: usize,
    attempts: u64,
    rejection_rate: f64,
    samples: Vec<SampleRecord>,
}

fn cmd_sample(
    count: usize,
    seed: u64,
    with_triangles: bool,
    format: Format,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let batch = sample_napoleonic(count, seed)?;
    let mut records = Vec::with_capacity(count);
    for (index, d) in batch.samples.iter().enumerate() {
        let vertices = if with_triangles {
            Some(realize(d)?.vertices().map(|p| p.to_array()))
        } else {
            None
        };
        records.push(SampleRecord {
            index,
            d: d.to_array(),
            point: d_to_xyz(d.to_array()),
            condition_value: napoleon_core::classify::condition_value(d),
            vertices,
        });
    }
    eprintln!(
        "info: {} samples from {} attempts (rejection rate {})",
        records.len(),
        batch.attempts,
        batch.rejection_rate()
    );
    match format {
        Format::Json => emit_json(
            out,
            &SampleOutput {
                seed,
                count,
                attempts: batch.attempts,
                rejection_rate: batch.rejection_rate(),
                samples: records,
            },
        ),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header: Vec<String> =
                ["index", "d0", "d1", "d2", "X", "Y", "Z", "condition_value"]
                    .map(String::from)
                    .to_vec();
            if with_triangles {
                for i in 0..3 {
                    header.extend(["x", "y", "z"].map(|c| format!("p{i}{c}")));
                }
            }
            w.write_record(&header).map_err(csv_error)?;
            for r in &records {
                let mut row = vec![r.index.to_string()];
                let tail = [r.point.x, r.point.y, r.point.z, r.condition_value];
                row.extend(r.d.iter().chain(&tail).map(f64::to_string));
                if let Some(v) = r.vertices {
                    row.extend(v.iter().flatten().map(f64::to_string));
                }
                w.write_record(&row).map_err(csv_error)?;
            }
            w.flush().map_err(io_error)
        }
    }
}

fn cmd_verify_identities(mutate: bool, out: &mut impl Write) -> Result<bool, CliError> {
    let mut checks: Vec<IdentityCheck> = algebra::verify_all();
    if mutate {
        let chi_sq = algebra::chi_squared_poly() + algebra::RationalPolynomial::integer(1);
        checks[0] = algebra::verify_factorisation_with(&chi_sq);
    }
    let mut all = true;
    for c in &checks {
        if c.holds {
            writeln!(out, "PASS {}", c.name).map_err(io_error)?;
        } else {
            all = false;
            writeln!(out, "FAIL {}: difference = {}", c.name, c.difference).map_err(io_error)?;
        }
    }
    Ok(all)
}

#[derive(Serialize)]
struct SearchOutput<'a> {
    tol: f64,
    hits: Vec<SearchHit>,
    residuals: &'a [SearchHit],
    warnings: &'a [String],
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Napoleonise {
            input,
            signs,
            tol,
            format,
        } => {
            let ingested = load(input.as_deref())?;
            warn(&ingested.warnings);
            cmd_napoleonise(&ingested, signs, tol.tol, format, &mut out)?;
        }
        Command::Classify { input, tol } => {
            let ingested = load(input.as_deref())?;
            warn(&ingested.warnings);
            let report = classify(&ingested.triangle, tol.tol);
            emit_json(
                &mut out,
                &ClassifyOutput {
                    report: &report,
                    warnings: &ingested.warnings,
                },
            )?;
        }
        Command::Sample {
            count,
            seed,
            realize,
            format,
        } => {
            cmd_sample(count, seed, realize, format, &mut out)?;
        }
        Command::VerifyIdentities { mutate } => {
            if !cmd_verify_identities(mutate, &mut out)? {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Search { input, tol } => {
            let ingested = load(input.as_deref())?;
            warn(&ingested.warnings);
            let residuals = all_residuals(&ingested.triangle)?;
            let hits = residuals
                .iter()
                .copied()
                .filter(|h| h.residual < tol.tol)
                .collect();
            emit_json(
                &mut out,
                &SearchOutput {
                    tol: tol.tol,
                    hits,
                    residuals: &residuals,
                    warnings: &ingested.warnings,
                },
            )?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => report_error(&e),
    }
}
