// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Acceptance criteria. Each prints one `criterion N: PASS|FAIL` line; the
//! process exits nonzero if any criterion fails.

use napoleon_core::classify::{condition_value, equilateral_factor};
use napoleon_core::napoleon::centroid_inner_closed_form;
use napoleon_core::oracle::{random_triangle, reference_napoleonisation};
use napoleon_core::vector::{barycentre, spherical_distance, triple};
use napoleon_core::{
    algebra, napoleonise, realize, sample_napoleonic_d, ErrorKind, SideParameters, SignVector,
    SphericalTriangle, UnitVector,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

const SEED: u64 = 0x5eed_2024;

type Criterion = (u32, fn() -> Outcome, Option<Duration>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn unit(x: f64, y: f64, z: f64) -> UnitVector {
    UnitVector::new(x, y, z).unwrap()
}

fn scalene() -> SphericalTriangle {
    SphericalTriangle::new(
        unit(1.0, 0.0, 0.0),
        unit(0.75, 0.25, 6f64.sqrt() / 4.0),
        unit(0.5, 0.5, 2f64.sqrt() / 2.0),
    )
    .unwrap()
}

fn nonisosceles() -> SphericalTriangle {
    let s = 2451f64.sqrt();
    SphericalTriangle::new(
        unit(1.0, 0.0, 0.0),
        unit(-7.0 / 50.0, s / 50.0, 0.0),
        unit(
            -17.0 / 50.0,
            -423.0 * s / 40850.0,
            46.0 * 4902f64.sqrt() / 4085.0,
        ),
    )
    .unwrap()
}

fn nonisosceles_apexes() -> [[f64; 3]; 3] {
    let s = 2451f64.sqrt();
    let r = (2.0f64 / 2451.0).sqrt();
    [
        [0.0, -23.0 / s, -31.0 * r],
        [-17.0 / 50.0, -1019.0 / (50.0 * s), -148.0 / 5.0 * r],
        [
            -7.0 / 50.0,
            -7.0 / 50.0 * (57.0f64 / 43.0).sqrt(),
            -3.0 / 5.0 * (114.0f64 / 43.0).sqrt(),
        ],
    ]
}

fn max_diff(a: [f64; 3], b: [f64; 3]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn sorted(mut v: [f64; 3]) -> [f64; 3] {
    v.sort_by(f64::total_cmp);
    v
}

fn centroid_distances(t: &SphericalTriangle, s: SignVector) -> [f64; 3] {
    let r = napoleonise(t, s).unwrap().centroids;
    [0, 1, 2].map(|i| spherical_distance(r[i], r[(i + 1) % 3]))
}

fn criterion_1() -> Outcome {
    let expected = sorted([0.474066, 0.490357, 0.448728]);
    let got = sorted(centroid_distances(&scalene(), SignVector::OUTWARD));
    let err = max_diff(got, expected);
    let inward = sorted(centroid_distances(&scalene(), SignVector::INWARD));
    Outcome {
        pass: err < 1e-5,
        detail: format!(
            "outward distances {got:?} vs {expected:?}, max error {err:.3e} (inward gives {inward:?}, error {:.3e})",
            max_diff(inward, expected)
        ),
    }
}

fn criterion_2() -> Outcome {
    let t = nonisosceles();
    let n = napoleonise(&t, SignVector::OUTWARD).unwrap();
    let apex_err = (0..3)
        .map(|i| max_diff(n.apexes[i].to_array(), nonisosceles_apexes()[i]))
        .fold(0.0, f64::max);
    let rr_err = n
        .inner_products()
        .iter()
        .map(|r| (r + 1.0 / 3.0).abs())
        .fold(0.0, f64::max);
    let [p0, p1, p2] = t.vertices();
    let bp = barycentre(p0, p1, p2).unwrap().to_array();
    let [r0, r1, r2] = n.centroids;
    let br = barycentre(r0, r1, r2).unwrap().to_array();
    let bary_err = max_diff(bp, [0.491354, 0.451198, 0.744978])
        .max(max_diff(br, [-0.163299, -0.352936, -0.921287]));
    Outcome {
        pass: apex_err < 1e-12 && rr_err < 1e-12 && bary_err < 1e-5,
        detail: format!(
            "apex error {apex_err:.3e}, rr error {rr_err:.3e}, barycentre error {bary_err:.3e}"
        ),
    }
}

fn criterion_3() -> Outcome {
    let samples = sample_napoleonic_d(10_000, SEED).unwrap();
    let (mut worst_residual, mut worst_rr, mut failures) = (0.0f64, 0.0f64, 0usize);
    for d in &samples {
        let Ok(t) = realize(d) else {
            failures += 1;
            continue;
        };
        let Ok(n) = napoleonise(&t, SignVector::OUTWARD) else {
            failures += 1;
            continue;
        };
        worst_residual = worst_residual.max(n.equilateral_residual);
        for rr in n.inner_products() {
            worst_rr = worst_rr.max((rr + 1.0 / 3.0).abs());
        }
    }
    Outcome {
        pass: failures == 0 && worst_residual < 1e-9 && worst_rr < 1e-9,
        detail: format!(
            "{} samples, max residual {worst_residual:.3e}, max |rr + 1/3| {worst_rr:.3e}, construction failures {failures}",
            samples.len()
        ),
    }
}

fn in_reverse_population(t: &SphericalTriangle) -> bool {
    let d = t.side_parameters();
    equilateral_factor(&d) > 1e-3 && (condition_value(&d) - 2.0).abs() > 1e-3
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut count, mut out_bad, mut in_bad) = (0usize, 0usize, 0usize);
    let (mut out_min, mut in_min) = (f64::INFINITY, f64::INFINITY);
    while count < 10_000 {
        let t = random_triangle(&mut rng);
        if !in_reverse_population(&t) {
            continue;
        }
        count += 1;
        let out = napoleonise(&t, SignVector::OUTWARD)
            .unwrap()
            .equilateral_residual;
        let inw = napoleonise(&t, SignVector::INWARD)
            .unwrap()
            .equilateral_residual;
        out_min = out_min.min(out);
        in_min = in_min.min(inw);
        out_bad += usize::from(out <= 1e-4);
        in_bad += usize::from(inw <= 1e-4);
    }
    Outcome {
        pass: out_bad == 0 && in_bad == 0,
        detail: format!(
            "{count} triangles; residual <= 1e-4: outward {out_bad} (min {out_min:.3e}), inward {in_bad} (min {in_min:.3e})"
        ),
    }
}

/// Moves `d` along the unit normal of the quadric by `offset`.
fn perturb(d: &SideParameters, offset: f64) -> Option<SideParameters> {
    let [a, b, c] = d.to_array();
    let g = [2.0 * a + b + c, 2.0 * b + a + c, 2.0 * c + a + b];
    let norm = g.iter().map(|x| x * x).sum::<f64>().sqrt();
    SideParameters::try_from([0, 1, 2].map(|i| d.get(i) + offset * g[i] / norm)).ok()
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    let pool = sample_napoleonic_d(20_000, SEED ^ 5).unwrap();
    let (mut count, mut near, mut bad, mut near_bad) = (0usize, 0usize, 0usize, 0usize);
    let mut in_min = f64::INFINITY;
    for d in &pool {
        if count == 1000 {
            break;
        }
        let magnitude = 10f64.powf(rng.random_range(-4.0..-2.0));
        let offset = if rng.random_bool(0.5) {
            magnitude
        } else {
            -magnitude
        };
        let Some(p) = perturb(d, offset) else {
            continue;
        };
        if equilateral_factor(&p) <= 1e-3 {
            continue;
        }
        let Ok(t) = realize(&p) else { continue };
        count += 1;
        let residual = napoleonise(&t, SignVector::INWARD)
            .unwrap()
            .equilateral_residual;
        let is_near = (condition_value(&p) - 2.0).abs() < 1e-3;
        near += usize::from(is_near);
        in_min = in_min.min(residual);
        if residual < 1e-4 {
            bad += 1;
            near_bad += usize::from(is_near);
        }
    }
    Outcome {
        pass: count == 1000 && bad == 0,
        detail: format!(
            "{count} perturbed samples ({near} with |condition residual| < 1e-3); inward residual < 1e-4: {bad} ({near_bad} near), min {in_min:.3e}"
        ),
    }
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    let (mut rr_err, mut chi_err) = (0.0f64, 0.0f64);
    for _ in 0..1000 {
        let t = random_triangle(&mut rng);
        let d = t.side_parameters();
        for s in SignVector::all() {
            let direct = reference_napoleonisation(&t, s).unwrap().inner_products;
            for i in 0..3 {
                let closed = centroid_inner_closed_form(&d, t.chi(), s, i);
                rr_err = rr_err.max((closed - direct[(i + 2) % 3]).abs());
            }
        }
        let [p0, p1, p2] = t.vertices().map(|p| p.as_vector());
        chi_err = chi_err.max((d.chi_squared() - triple(p0, p1, p2).powi(2)).abs());
    }
    Outcome {
        pass: rr_err < 1e-10 && chi_err < 1e-10,
        detail: format!("max inner-product error {rr_err:.3e}, max chi² error {chi_err:.3e}"),
    }
}

fn criterion_7() -> Outcome {
    let checks = algebra::verify_all();
    let failed: Vec<&str> = checks
        .iter()
        .filter(|c| !c.holds)
        .map(|c| c.name.as_str())
        .collect();
    Outcome {
        pass: failed.is_empty() && checks.len() == 6,
        detail: format!("{} identities checked, failed: {failed:?}", checks.len()),
    }
}

fn cli_error_kind(vertices: [[f64; 3]; 3]) -> (Option<i32>, String, bool) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_napoleon"))
        .arg("napoleonise")
        .env_remove("NAPOLEON_TOL")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let input = serde_json::json!({ "vertices": vertices }).to_string();
    std::io::Write::write_all(&mut child.stdin.take().unwrap(), input.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    let err: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap_or_default();
    let kind = err["error"].as_str().unwrap_or("").to_owned();
    let clean = o.stdout.is_empty() && !String::from_utf8_lossy(&o.stderr).contains("NaN");
    (o.status.code(), kind, clean)
}

fn criterion_8() -> Outcome {
    let s = 3f64.sqrt() / 2.0;
    let cases: [([[f64; 3]; 3], ErrorKind); 3] = [
        (
            [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [s, 0.5, 0.0]],
            ErrorKind::Cogeodesic,
        ),
        (
            [[1.0, 0.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 1.0]],
            ErrorKind::Degenerate,
        ),
        (
            [[1.0, 0.0, 0.0], [-0.5, s, 0.0], [0.0, 0.6, 0.8]],
            ErrorKind::TooWide,
        ),
    ];
    let mut problems = Vec::new();
    for (p, kind) in cases {
        let lib = std::panic::catch_unwind(|| {
            let [a, b, c] = p.map(|v| UnitVector::new(v[0], v[1], v[2]).unwrap());
            SphericalTriangle::new(a, b, c).map(|t| napoleonise(&t, SignVector::OUTWARD))
        });
        match lib {
            Ok(Err(e)) if e.kind() == kind => {}
            other => problems.push(format!("library {kind:?}: {other:?}")),
        }
        let (code, got, clean) = cli_error_kind(p);
        if code != Some(2) || got != kind.to_string() || !clean {
            problems.push(format!(
                "cli {kind:?}: exit {code:?}, kind {got:?}, clean {clean}"
            ));
        }
    }
    Outcome {
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            "Cogeodesic, Degenerate and TooWide reported with exit code 2".to_owned()
        } else {
            problems.join("; ")
        },
    }
}

fn main() {
    let criteria: [Criterion; 8] = [
        (1, criterion_1, Some(Duration::from_secs(1))),
        (2, criterion_2, Some(Duration::from_secs(1))),
        (3, criterion_3, Some(Duration::from_secs(30))),
        (4, criterion_4, Some(Duration::from_secs(60))),
        (5, criterion_5, None),
        (6, criterion_6, None),
        (7, criterion_7, Some(Duration::from_secs(1))),
        (8, criterion_8, None),
    ];
    let mut failed = 0;
    for (n, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed < l);
        let pass = outcome.pass && in_time;
        failed += usize::from(!pass);
        let timing = match limit {
            Some(l) => format!("{:.3}s, limit {}s", elapsed.as_secs_f64(), l.as_secs()),
            None => format!("{:.3}s", elapsed.as_secs_f64()),
        };
        println!(
            "criterion {n}: {} ({timing}) {}",
            if pass { "PASS" } else { "FAIL" },
            outcome.detail
        );
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
