//! Report, transform and CSV writers. Reals are rounded to 12 significant
//! digits so repeated runs produce byte-identical files.

use std::fs;
use std::path::{Path, PathBuf};

use radical_reparam::transforms::Piece;
use serde::Serialize;

use crate::config::Emit;
use crate::run::{PipelineOutput, Sample};
use crate::CliError;

pub const REPORT_FILE: &str = "report.json";
pub const TRANSFORM_FILE: &str = "transform.json";
pub const SAMPLES_FILE: &str = "samples_reparameterized.csv";
pub const ORIGINAL_SAMPLES_FILE: &str = "samples_original.csv";
pub const OMEGA_FILE: &str = "omega_profile.csv";

/// `x` rounded to 12 significant digits.
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

fn round_all(xs: &[f64]) -> Vec<f64> {
    xs.iter().copied().map(sig12).collect()
}

#[derive(Debug, Serialize)]
pub struct BreakpointOmegaJson {
    pub z: f64,
    pub left: f64,
    pub right: f64,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub u_p: f64,
    pub u_phi_star: f64,
    pub u_final: f64,
    #[serde(rename = "T")]
    pub t: Vec<f64>,
    pub multiplicities: Vec<u32>,
    #[serde(rename = "S")]
    pub s: Vec<f64>,
    #[serde(rename = "Z")]
    pub z: Vec<f64>,
    pub alpha: Vec<f64>,
    pub mu_p: f64,
    pub quadrature_error: f64,
    #[serde(rename = "L")]
    pub l: Vec<f64>,
    #[serde(rename = "A")]
    pub a: Vec<f64>,
    #[serde(rename = "B")]
    pub b: Vec<f64>,
    #[serde(rename = "C")]
    pub c: Vec<f64>,
    #[serde(rename = "M")]
    pub m: Vec<f64>,
    /// One-sided `ω_{p∘r}` at the interior breakpoints of `Z`.
    pub breakpoint_omega: Vec<BreakpointOmegaJson>,
}

impl Report {
    pub fn new(out: &PipelineOutput) -> Self {
        let r = &out.result;
        let opt = &r.optimization;
        Self {
            u_p: sig12(r.u_p()),
            u_phi_star: sig12(r.u_phi()),
            u_final: sig12(r.u_final()),
            t: round_all(r.partition.points()),
            multiplicities: r.partition.multiplicities().to_vec(),
            s: round_all(&opt.s_star),
            z: round_all(&opt.z_star),
            alpha: round_all(&opt.alpha_star),
            mu_p: sig12(r.original.mu),
            quadrature_error: sig12(r.quadrature_error()),
            l: round_all(&r.integrals.l),
            a: round_all(&r.integrals.a),
            b: round_all(&r.integrals.b),
            c: round_all(&r.integrals.c),
            m: round_all(&r.integrals.m),
            breakpoint_omega: out
                .breakpoint_omega
                .iter()
                .map(|b| BreakpointOmegaJson { z: sig12(b.z), left: sig12(b.left), right: sig12(b.right) })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Coefficients {
    pub offset: f64,
    pub scale: f64,
    pub numerator: [f64; 2],
    pub denominator: [f64; 2],
}

/// One piece of `r`: `t = offset + scale·((n₀ z + n₁)/(d₀ z + d₁))^{1/radical_index}`.
#[derive(Debug, Serialize)]
pub struct TransformPiece {
    pub domain: [f64; 2],
    pub range: [f64; 2],
    pub kind: &'static str,
    pub radical_index: u32,
    pub alpha: Option<f64>,
    pub coefficients: Coefficients,
    pub formula: String,
}

pub fn transform_pieces(out: &PipelineOutput) -> Vec<TransformPiece> {
    out.result
        .transform
        .pieces()
        .iter()
        .map(|piece| {
            let cf = piece.closed_form();
            let (d, r) = (piece.domain(), piece.range());
            let alpha = match piece {
                Piece::Moebius(m) => Some(sig12(m.alpha)),
                Piece::Composed(c) => Some(sig12(c.moebius.alpha)),
                Piece::Radical(_) => None,
            };
            let coefficients = Coefficients {
                offset: sig12(cf.offset),
                scale: sig12(cf.scale),
                numerator: [sig12(cf.numerator[0]), sig12(cf.numerator[1])],
                denominator: [sig12(cf.denominator[0]), sig12(cf.denominator[1])],
            };
            let formula = formula(&coefficients, cf.index);
            TransformPiece {
                domain: [sig12(d.0), sig12(d.1)],
                range: [sig12(r.0), sig12(r.1)],
                kind: if cf.index > 1 { "radical" } else { "moebius-affine" },
                radical_index: cf.index,
                alpha,
                coefficients,
                formula,
            }
        })
        .collect()
}

fn formula(c: &Coefficients, index: u32) -> String {
    let ratio = format!(
        "({} * z + {}) / ({} * z + {})",
        c.numerator[0], c.numerator[1], c.denominator[0], c.denominator[1]
    );
    let body = if index == 1 { format!("({ratio})") } else { format!("(({ratio})^(1/{index}))") };
    format!("{} + {} * {}", c.offset, c.scale, body)
}

fn write_samples(path: &Path, rows: &[Sample]) -> Result<(), CliError> {
    let io = |e: csv::Error| CliError::Io(format!("{}: {e}", path.display()));
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    let dim = rows.first().map_or(0, |r| r.point.len());
    let mut header = vec!["z".to_string(), "t".to_string()];
    header.extend((1..=dim).map(|i| format!("x{i}")));
    w.write_record(&header).map_err(io)?;
    for row in rows {
        let mut rec = vec![sig12(row.z).to_string(), sig12(row.t).to_string()];
        rec.extend(row.point.iter().map(|x| sig12(*x).to_string()));
        w.write_record(&rec).map_err(io)?;
    }
    w.flush().map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Writes the requested artifacts into `dir` and returns their paths.
pub fn write_outputs(out: &PipelineOutput, emit: impl IntoIterator<Item = Emit>, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    let mut written = Vec::new();
    for kind in emit {
        match kind {
            Emit::Report => {
                let path = dir.join(REPORT_FILE);
                write_json(&path, &Report::new(out))?;
                written.push(path);
            }
            Emit::Transform => {
                let path = dir.join(TRANSFORM_FILE);
                write_json(&path, &transform_pieces(out))?;
                written.push(path);
            }
            Emit::Samples => {
                let path = dir.join(SAMPLES_FILE);
                write_samples(&path, &out.samples)?;
                written.push(path);
                let path = dir.join(ORIGINAL_SAMPLES_FILE);
                write_samples(&path, &out.original_samples)?;
                written.push(path);
            }
            Emit::OmegaProfile => {
                let path = dir.join(OMEGA_FILE);
                let io = |e: csv::Error| CliError::Io(format!("{}: {e}", path.display()));
                let mut w = csv::Writer::from_path(&path).map_err(io)?;
                w.write_record(["x", "omega_p", "omega_reparameterized"]).map_err(io)?;
                for s in &out.omega_profile {
                    w.write_record([sig12(s.x), sig12(s.original), sig12(s.reparameterized)].map(|v| v.to_string()))
                        .map_err(io)?;
                }
                w.flush().map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                written.push(path);
            }
        }
    }
    Ok(written)
}
