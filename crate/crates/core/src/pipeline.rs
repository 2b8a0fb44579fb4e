//! End-to-end construction of `r = φ ∘ m` for a curve.

use alloc::vec;
use alloc::vec::Vec;

use crate::curve::{ParametricCurve, UniformityReport};
use crate::error::Result;
use crate::optimizer::{breakpoints_from_weights, optimal_alpha_z, piece_moments, OptimizationResult, PieceIntegrals};
use crate::partition::{build_partition_with, Partition};
use crate::transforms::{build_moebius, build_radical, compose, PiecewiseTransform};
use crate::DEFAULT_TOLERANCE;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PipelineOptions {
    /// Absolute quadrature tolerance for every integral.
    pub tolerance: f64,
    /// Equally spaced points added inside every piece of `T`.
    pub extra_breakpoints: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self { tolerance: DEFAULT_TOLERANCE, extra_breakpoints: 0 }
    }
}

#[derive(Clone, Debug)]
pub struct Reparameterization {
    /// `μ_p`, `σ_p²` and `u_p` of the input parameterization.
    pub original: UniformityReport,
    pub partition: Partition,
    pub integrals: PieceIntegrals,
    pub optimization: OptimizationResult,
    pub phi: PiecewiseTransform,
    pub moebius: PiecewiseTransform,
    /// `r = φ ∘ m`.
    pub transform: PiecewiseTransform,
}

impl Reparameterization {
    pub fn u_p(&self) -> f64 {
        self.original.uniformity
    }

    pub fn u_phi(&self) -> f64 {
        self.optimization.u_after_phi
    }

    pub fn u_final(&self) -> f64 {
        self.optimization.u_after_m
    }

    /// First-order bound on the quadrature error of the three uniformities.
    pub fn quadrature_error(&self) -> f64 {
        let mu = self.original.mu;
        if mu == 0.0 {
            return 0.0;
        }
        // δu/u ≈ 2δμ/μ + δη/η with δη ≤ (Σ√w)·Σ δw/√w ≤ (Σ√w)·ε/√min w
        let rel_mu = self.original.quad_error_bound / self.original.uniformity.max(f64::MIN_POSITIVE);
        let eps = self.integrals.error_bound;
        let rel = |w: &[f64], eta: f64| {
            let min = w.iter().copied().fold(f64::INFINITY, f64::min);
            let sum: f64 = w.iter().map(|x| num_traits::Float::sqrt(*x)).sum();
            sum * eps / num_traits::Float::sqrt(min) / eta
        };
        let phi = self.u_phi() * (rel_mu + rel(&self.integrals.l, self.optimization.eta_phi));
        let fin = self.u_final() * (rel_mu + rel(&self.integrals.m, self.optimization.eta_m));
        self.original.quad_error_bound.max(phi).max(fin)
    }
}

/// Partition, optimal `S`, `φ`, optimal `α` and `Z`, `m`, and `r = φ ∘ m`.
///
/// A straight line has `ω_p ≡ 0`; it gets the identity with all
/// uniformities equal to 1.
pub fn optimal_radical_transformation(p: &ParametricCurve, options: PipelineOptions) -> Result<Reparameterization> {
    let original = p.uniformity(options.tolerance)?;
    if p.is_line() {
        let partition = Partition::new(vec![0.0, 1.0], vec![0, 0])?;
        let unit = vec![0.0, 1.0];
        return Ok(Reparameterization {
            original,
            partition,
            integrals: PieceIntegrals {
                l: vec![0.0],
                a: vec![0.0],
                b: vec![0.0],
                c: vec![0.0],
                m: vec![0.0],
                error_bound: 0.0,
            },
            optimization: OptimizationResult {
                s_star: unit.clone(),
                z_star: unit,
                alpha_star: vec![0.5],
                u_after_phi: 1.0,
                u_after_m: 1.0,
                eta_phi: 0.0,
                eta_m: 0.0,
            },
            phi: PiecewiseTransform::identity(),
            moebius: PiecewiseTransform::identity(),
            transform: PiecewiseTransform::identity(),
        });
    }
    let partition = build_partition_with(p, options.extra_breakpoints)?;
    let moments = (0..partition.piece_count())
        .map(|i| piece_moments(p, &partition, i, options.tolerance))
        .collect::<Result<Vec<_>>>()?;
    let l: Vec<f64> = moments.iter().map(|m| m.l).collect();
    let s = breakpoints_from_weights(&l)?;
    let integrals = PieceIntegrals::from_moments(&moments, &s)?;
    let optimization = optimal_alpha_z(&integrals, &s, original.mu)?;
    let phi = build_radical(&partition, &s)?;
    let moebius = build_moebius(&s, &optimization.z_star, &optimization.alpha_star)?;
    let transform = compose(&phi, &moebius)?;
    Ok(Reparameterization { original, partition, integrals, optimization, phi, moebius, transform })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;

    #[test]
    fn running_example() {
        let p = ParametricCurve::new(vec![Polynomial::t().into(), Polynomial::from_ints(&[0, 0, 0, 1]).into()]).unwrap();
        let r = optimal_radical_transformation(&p, PipelineOptions::default()).unwrap();
        assert!((r.u_p() - 0.846).abs() < 5e-3);
        assert!((r.u_phi() - 0.932).abs() < 5e-3);
        assert!((r.u_final() - 0.997).abs() < 3e-3);
        assert!(r.quadrature_error() < 1e-6);
        assert_eq!(r.transform.pieces().len(), 2);
        assert_eq!(r.transform.evaluate(1.0).unwrap(), 1.0);
    }

    #[test]
    fn line_gets_identity() {
        let p = ParametricCurve::new(vec![Polynomial::t().into(), Polynomial::from_ints(&[1, 2]).into()]).unwrap();
        let r = optimal_radical_transformation(&p, PipelineOptions::default()).unwrap();
        assert!(r.transform.is_identity());
        assert_eq!((r.u_p(), r.u_phi(), r.u_final()), (1.0, 1.0, 1.0));
    }

    #[test]
    fn extra_breakpoints_do_not_hurt_much() {
        let p = ParametricCurve::new(vec![Polynomial::t().into(), Polynomial::from_ints(&[0, 0, 0, 1]).into()]).unwrap();
        let opts = PipelineOptions { extra_breakpoints: 2, ..PipelineOptions::default() };
        let r = optimal_radical_transformation(&p, opts).unwrap();
        assert_eq!(r.partition.piece_count(), 6);
        assert!(r.u_final() > 0.99);
    }
}
