use radical_reparam::transforms::{reparameterized_omega, reparameterized_omega_sided, Side};
use radical_reparam::{optimal_radical_transformation, ParametricCurve, PiecewiseTransform, PipelineOptions, Reparameterization};

use crate::config::JobConfig;
use crate::expr::parse_expression;
use crate::CliError;

/// One equi-spaced sample: parameter `z`, original parameter `t = r(z)`, point.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub z: f64,
    pub t: f64,
    pub point: Vec<f64>,
}

/// `ω_p(x)` and `ω_{p∘r}(x)` on the same grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaSample {
    pub x: f64,
    pub original: f64,
    pub reparameterized: f64,
}

/// Both one-sided values of `ω_{p∘r}` at an interior breakpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BreakpointOmega {
    pub z: f64,
    pub left: f64,
    pub right: f64,
}

#[derive(Debug, Clone)]
pub struct PipelineOutput {
    pub curve: ParametricCurve,
    pub result: Reparameterization,
    /// Equi-sampled `p ∘ r`.
    pub samples: Vec<Sample>,
    /// Equi-sampled `p`.
    pub original_samples: Vec<Sample>,
    pub omega_profile: Vec<OmegaSample>,
    pub breakpoint_omega: Vec<BreakpointOmega>,
}

pub fn parse_curve(cfg: &JobConfig) -> Result<ParametricCurve, CliError> {
    let coords = cfg
        .coordinates
        .iter()
        .enumerate()
        .map(|(i, src)| parse_expression(src).map_err(|e| CliError::Parse { coordinate: i + 1, source: e }))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ParametricCurve::new(coords)?)
}

pub fn run_pipeline(cfg: &JobConfig) -> Result<PipelineOutput, CliError> {
    cfg.validate()?;
    let curve = parse_curve(cfg)?;
    let options = PipelineOptions { tolerance: cfg.tolerance, extra_breakpoints: cfg.extra_breakpoints };
    let result = optimal_radical_transformation(&curve, options)?;
    let r = &result.transform;
    let samples = emit_samples(&curve, r, cfg.samples)?;
    let original_samples = emit_samples(&curve, &PiecewiseTransform::identity(), cfg.samples)?;
    let omega_profile = grid(cfg.samples)
        .map(|x| {
            Ok(OmegaSample {
                x,
                original: curve.evaluate_omega(x)?,
                reparameterized: reparameterized_omega(&curve, r, x)?,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let bp = r.breakpoints();
    let breakpoint_omega = bp[1..bp.len() - 1]
        .iter()
        .map(|&z| {
            Ok(BreakpointOmega {
                z,
                left: reparameterized_omega_sided(&curve, r, z, Side::Left)?,
                right: reparameterized_omega_sided(&curve, r, z, Side::Right)?,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(PipelineOutput { curve, result, samples, original_samples, omega_profile, breakpoint_omega })
}

/// `count` points `i/(count−1)`, with the last exactly 1.
fn grid(count: usize) -> impl Iterator<Item = f64> {
    let last = count - 1;
    (0..count).map(move |i| if i == last { 1.0 } else { i as f64 / last as f64 })
}

/// Rows `(z, r(z), p(r(z)))` on a uniform `z` grid of `count ≥ 2` points.
pub fn emit_samples(p: &ParametricCurve, r: &PiecewiseTransform, count: usize) -> Result<Vec<Sample>, CliError> {
    if count < 2 {
        return Err(CliError::Config(format!("samples must be at least 2, got {count}")));
    }
    grid(count)
        .map(|z| {
            let t = r.evaluate(z)?;
            Ok(Sample { z, t, point: p.point(t) })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic_job() -> JobConfig {
        JobConfig::new(vec!["t".into(), "t^3".into()])
    }

    #[test]
    fn cubic_pipeline() {
        let out = run_pipeline(&cubic_job()).unwrap();
        let r = &out.result;
        assert!((r.u_p() - 0.846).abs() < 5e-3);
        assert!((r.u_phi() - 0.932).abs() < 5e-3);
        assert!((r.u_final() - 0.997).abs() < 3e-3);
        assert_eq!(out.samples.len(), 200);
        assert_eq!(out.breakpoint_omega.len(), 1);
    }

    #[test]
    fn two_samples_hit_endpoints() {
        let cfg = cubic_job();
        let curve = parse_curve(&cfg).unwrap();
        let r = run_pipeline(&cfg).unwrap().result.transform;
        let rows = emit_samples(&curve, &r, 2).unwrap();
        assert_eq!(rows[0], Sample { z: 0.0, t: 0.0, point: vec![0.0, 0.0] });
        assert_eq!(rows[1], Sample { z: 1.0, t: 1.0, point: vec![1.0, 1.0] });
    }

    #[test]
    fn three_samples_middle_row() {
        let cfg = cubic_job();
        let curve = parse_curve(&cfg).unwrap();
        let r = run_pipeline(&cfg).unwrap().result.transform;
        let rows = emit_samples(&curve, &r, 3).unwrap();
        let t = r.evaluate(0.5).unwrap();
        assert_eq!(rows[1].t, t);
        assert!((rows[1].point[0] - t).abs() < 1e-15);
        assert!((rows[1].point[1] - t * t * t).abs() < 1e-15);
    }

    #[test]
    fn line_is_identity() {
        let out = run_pipeline(&JobConfig::new(vec!["t".into(), "2t + 1".into()])).unwrap();
        assert!(out.result.transform.is_identity());
        assert_eq!(out.result.u_final(), 1.0);
    }

    #[test]
    fn parse_error_names_coordinate() {
        let err = run_pipeline(&JobConfig::new(vec!["t".into(), "t^".into()])).unwrap_err();
        assert!(matches!(err, CliError::Parse { coordinate: 2, .. }));
        assert_eq!(err.exit_code(), 2);
    }
}
