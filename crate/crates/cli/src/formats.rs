//! Input parsing and output rendering. Text output rounds to 6 decimals
//! for reading; JSON and CSV keep full round-trip precision. All renderers
//! are deterministic: identical inputs give byte-identical output.

use crate::svg;
use crate::{Failure, Format};
use latcover::criteria::InequalityReport;
use latcover::geom::{ConvexPolygon, Point};
use latcover::lattice::{Certificate, CertifiedSweep, SweepReport};
use serde::Deserialize;
use serde_json::json;
use std::fmt::Write as _;
use std::path::Path;

#[derive(Deserialize)]
struct PolygonFile {
    vertices: Vec<[f64; 2]>,
}

/// Loads a polygon from a JSON file of the form
/// `{"vertices": [[x, y], ...]}`, counterclockwise.
pub fn load_polygon(path: &Path) -> Result<ConvexPolygon, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let file: PolygonFile = serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("malformed polygon file {}: {e}", path.display())))?;
    let pts = file.vertices.iter().map(|[x, y]| Point::new(*x, *y)).collect();
    Ok(ConvexPolygon::new(pts)?)
}

fn vertex_array(k: &ConvexPolygon) -> serde_json::Value {
    json!(k.vertices().iter().map(|v| [v.x, v.y]).collect::<Vec<_>>())
}

fn json_line(value: serde_json::Value) -> String {
    let mut s = value.to_string();
    s.push('\n');
    s
}

fn unsupported(cmd: &str, format: Format) -> Failure {
    let name = match format {
        Format::Text => "text",
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Svg => "svg",
    };
    Failure::usage(format!("`{cmd}` does not support --format {name}"))
}

pub fn render_zradius(
    sides: u32,
    z: f64,
    report: &SweepReport,
    format: Format,
) -> Result<String, Failure> {
    match format {
        Format::Text => Ok(format!(
            "{z:.6}\nclosed form: {z}\noracle sweep: {} angles, max radius {:.6} at angle {:.6} (non-rigorous confirmation)\n",
            report.angles.len(),
            report.max_radius,
            report.argmax_angle
        )),
        Format::Json => Ok(json_line(json!({
            "sides": sides,
            "critical_scale": z,
            "sweep_angles": report.angles.len(),
            "sweep_max_radius": report.max_radius,
            "argmax_angle": report.argmax_angle,
        }))),
        _ => Err(unsupported("zradius", format)),
    }
}

fn certificate_counts(report: &CertifiedSweep) -> Vec<(Certificate, usize)> {
    let order = [
        Certificate::DoublySymmetricCorner,
        Certificate::InradiusBall,
        Certificate::SteinerSquare,
        Certificate::BruteForce,
    ];
    order
        .iter()
        .map(|c| (*c, report.verdicts.iter().filter(|v| v.certificate == *c).count()))
        .filter(|(_, n)| *n > 0)
        .collect()
}

pub fn render_check(report: &CertifiedSweep, format: Format) -> Result<String, Failure> {
    let covers = report.covers_all();
    let (max_radius, argmax) = report.max_radius();
    let counts = certificate_counts(report);
    match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "covers: {covers}").unwrap();
            writeln!(out, "max radius bound: {max_radius:.6} at angle {argmax:.6}").unwrap();
            let list = counts
                .iter()
                .map(|(c, n)| format!("{} x{n}", c.name()))
                .collect::<Vec<_>>()
                .join(", ");
            writeln!(out, "certificates: {list}").unwrap();
            if let Some((angle, v)) = report.first_failure() {
                let w = v.witness.expect("failed verdicts carry a witness");
                writeln!(
                    out,
                    "first failure: angle {angle:.6}, radius {:.6}, witness ({:.6}, {:.6})",
                    v.radius, w.x, w.y
                )
                .unwrap();
            }
            Ok(out)
        }
        Format::Json => {
            let failure = report.first_failure().map(|(angle, v)| {
                let w = v.witness.expect("failed verdicts carry a witness");
                json!({"angle": angle, "radius": v.radius, "witness": [w.x, w.y]})
            });
            Ok(json_line(json!({
                "covers": covers,
                "max_radius": max_radius,
                "argmax_angle": argmax,
                "certificates": counts
                    .iter()
                    .map(|(c, n)| (c.name().to_string(), *n))
                    .collect::<std::collections::BTreeMap<_, _>>(),
                "first_failure": failure,
            })))
        }
        Format::Csv => {
            let mut out = String::from("angle,radius,certificate,covers\n");
            for (v, a) in report.verdicts.iter().zip(&report.angles) {
                writeln!(out, "{a},{},{},{}", v.radius, v.certificate.name(), v.covers).unwrap();
            }
            Ok(out)
        }
        Format::Svg => Err(unsupported("check", format)),
    }
}

pub fn render_sweep(report: &SweepReport, format: Format) -> Result<String, Failure> {
    match format {
        Format::Text => Ok(format!(
            "angles: {}\nmax radius: {:.6} at angle {:.6}\ncovering property (numerical): {}\n",
            report.angles.len(),
            report.max_radius,
            report.argmax_angle,
            report.has_covering_property()
        )),
        Format::Csv => {
            let mut out = String::from("angle,radius\n");
            for (a, r) in report.angles.iter().zip(&report.radii) {
                writeln!(out, "{a},{r}").unwrap();
            }
            Ok(out)
        }
        Format::Json => Ok(json_line(json!({
            "angles": report.angles,
            "radii": report.radii,
            "max_radius": report.max_radius,
            "argmax_angle": report.argmax_angle,
        }))),
        Format::Svg => Err(unsupported("sweep", format)),
    }
}

pub fn render_witness(
    theta: f64,
    found: Option<Point>,
    format: Format,
) -> Result<String, Failure> {
    match format {
        Format::Text => Ok(match found {
            Some(w) => format!("witness: ({:.6}, {:.6}) at angle {theta:.6}\n", w.x, w.y),
            None => "no witness found\n".to_string(),
        }),
        Format::Json => Ok(json_line(match found {
            Some(w) => json!({"found": true, "theta": theta, "point": [w.x, w.y]}),
            None => json!({"found": false, "theta": theta, "point": null}),
        })),
        _ => Err(unsupported("witness", format)),
    }
}

pub fn render_steiner(
    body: &ConvexPolygon,
    symmetral: &ConvexPolygon,
    format: Format,
) -> Result<String, Failure> {
    match format {
        Format::Text => {
            let mut out = String::new();
            for v in symmetral.vertices() {
                writeln!(out, "{} {}", v.x, v.y).unwrap();
            }
            Ok(out)
        }
        Format::Json => Ok(json_line(json!({
            "body": vertex_array(body),
            "symmetral": vertex_array(symmetral),
        }))),
        Format::Svg => Ok(svg::overlay(body, symmetral)),
        Format::Csv => Err(unsupported("steiner", format)),
    }
}

pub fn render_appendix(reports: &[InequalityReport], format: Format) -> Result<String, Failure> {
    match format {
        Format::Text => {
            let mut out = String::from("proposition  grid   worst margin  passed\n");
            for r in reports {
                writeln!(
                    out,
                    "{:<11}  {:<5}  {:>12.3e}  {}",
                    r.id.name(),
                    r.grid,
                    r.worst_margin,
                    r.passed
                )
                .unwrap();
            }
            Ok(out)
        }
        Format::Csv => {
            let mut out = String::from("proposition_id,grid_size,worst_margin,passed\n");
            for r in reports {
                writeln!(out, "{},{},{},{}", r.id.name(), r.grid, r.worst_margin, r.passed)
                    .unwrap();
            }
            Ok(out)
        }
        Format::Json => Ok(json_line(json!(reports
            .iter()
            .map(|r| json!({
                "proposition_id": r.id.name(),
                "grid_size": r.grid,
                "worst_margin": r.worst_margin,
                "passed": r.passed,
            }))
            .collect::<Vec<_>>()))),
        Format::Svg => Err(unsupported("appendix", format)),
    }
}
