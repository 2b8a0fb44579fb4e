//! Closed-form optimal breakpoints `S*`, Möbius parameters `α*` and `Z*`.
//!
//! On piece `i` with kernel `K(t) = Δt^{μ+1}/(μ+1) · ω_p²(t)/|t − t_z|^μ`
//! (or `Δt · ω_p²(t)` on plain pieces) and local radical parameter `s̃(t)`:
//!
//! * `L = ∫ K dt`, and `S*` puts `s_i` at the running share of `√L`;
//! * `A, B, C = (1/Δs) ∫ K · w(s̃) dt` for `w = (1−s̃)², 2s̃(1−s̃), s̃²`;
//! * `M = Δs (2√(AC) + B)`, `α* = 1/(1 + √(C/A))`, and `Z*` uses `√M`.
//!
//! The zero-adjacent kernels are evaluated as `Q(t)|t − t_z|^μ / (Σ X_i²)²`
//! with `F = (t − γ)^{2μ} Q + R`, which stays finite when `t_z` is irrational.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::curve::{AngularSpeedZero, ParametricCurve};
use crate::error::{Error, Result};
use crate::partition::{Partition, PieceKind};
use crate::quadrature::{integrate, integrate_with, Integral, Integrand, QuadratureConfig};

/// Largest relative Euclidean remainder accepted for a zero's cofactor.
pub const REMAINDER_LIMIT: f64 = 1e-20;

const ZERO_MATCH: f64 = 1e-9;

/// Weight applied to the piece kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightCase {
    /// `1`, giving `L`.
    Length,
    /// `(1 − s̃)²`.
    A,
    /// `2 s̃ (1 − s̃)`.
    B,
    /// `s̃²`.
    C,
}

impl WeightCase {
    pub const ALL: [WeightCase; 4] = [WeightCase::Length, WeightCase::A, WeightCase::B, WeightCase::C];

    #[inline]
    pub fn weight(self, s: f64) -> f64 {
        match self {
            WeightCase::Length => 1.0,
            WeightCase::A => (1.0 - s) * (1.0 - s),
            WeightCase::B => 2.0 * s * (1.0 - s),
            WeightCase::C => s * s,
        }
    }
}

/// Local radical parameter `s̃` as a function of `t̃ ∈ [0, 1]`.
#[inline]
fn local_s(kind: PieceKind, index: i32, u: f64) -> f64 {
    match kind {
        PieceKind::LeftZero => u.powi(index),
        PieceKind::RightZero => 1.0 - (1.0 - u).powi(index),
        PieceKind::Plain => u,
    }
}

/// `∫_{t_lo}^{t_hi} ω_p²/|t − t_z|^μ · w(s̃) dt` through the Euclidean
/// cofactor of `zero`, which must sit at `t_lo` or `t_hi`.
pub fn stable_piece_integral(
    p: &ParametricCurve,
    zero: &AngularSpeedZero,
    t_lo: f64,
    t_hi: f64,
    case: WeightCase,
    tol: f64,
) -> Result<Integral> {
    if zero.remainder_magnitude > REMAINDER_LIMIT {
        return Err(Error::IllConditionedRoot { root: zero.location(), remainder: zero.remainder_magnitude });
    }
    let kind = zero_side(zero.location(), t_lo, t_hi)?;
    let index = zero.order as i32 + 1;
    let dt = t_hi - t_lo;
    let f = Integrand::new(|t: f64| {
        let u = ((t - t_lo) / dt).clamp(0.0, 1.0);
        p.stable_ratio(zero, t) * case.weight(local_s(kind, index, u))
    });
    integrate(&f, t_lo, t_hi, tol)
}

/// The same integral as [`stable_piece_integral`] evaluated directly as
/// `ω_p²(t) / |t − t_z|^μ` with `t_z` rounded to `f64`.
pub fn naive_piece_integral(
    p: &ParametricCurve,
    zero_at: f64,
    order: u32,
    t_lo: f64,
    t_hi: f64,
    case: WeightCase,
    tol: f64,
    config: QuadratureConfig,
) -> Result<Integral> {
    let kind = zero_side(zero_at, t_lo, t_hi)?;
    let index = order as i32 + 1;
    let dt = t_hi - t_lo;
    let f = Integrand::new(|t: f64| {
        let u = ((t - t_lo) / dt).clamp(0.0, 1.0);
        p.omega_squared(t) / (t - zero_at).abs().powi(order as i32) * case.weight(local_s(kind, index, u))
    });
    integrate_with(&f, t_lo, t_hi, tol, config)
}

fn zero_side(at: f64, t_lo: f64, t_hi: f64) -> Result<PieceKind> {
    if (at - t_lo).abs() <= ZERO_MATCH {
        Ok(PieceKind::LeftZero)
    } else if (at - t_hi).abs() <= ZERO_MATCH {
        Ok(PieceKind::RightZero)
    } else {
        Err(Error::InvalidBreakpoints("zero is not an endpoint of the piece"))
    }
}

/// Kernel integrals of one piece that do not depend on `S`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PieceMoments {
    /// `L`.
    pub l: f64,
    /// `Δs·A`, `Δs·B`, `Δs·C`.
    pub weighted: [f64; 3],
    /// Sum of the quadrature error bounds of the four integrals.
    pub error_bound: f64,
}

impl PieceMoments {
    /// `M = 2√(Δs A · Δs C) + Δs B`, independent of `Δs`.
    pub fn m(&self) -> f64 {
        2.0 * (self.weighted[0] * self.weighted[2]).sqrt() + self.weighted[1]
    }
}

/// `L`, `Δs·A`, `Δs·B`, `Δs·C` for piece `i` of `t`.
pub fn piece_moments(p: &ParametricCurve, t: &Partition, i: usize, tol: f64) -> Result<PieceMoments> {
    let (t_lo, t_hi, kind, mu) = t.piece(i);
    let dt = t_hi - t_lo;
    let mut out = [0.0; 4];
    let mut error_bound = 0.0;
    match kind {
        PieceKind::Plain => {
            for (slot, case) in out.iter_mut().zip(WeightCase::ALL) {
                let f = Integrand::new(|x: f64| p.omega_squared(x) * case.weight(((x - t_lo) / dt).clamp(0.0, 1.0)));
                let r = integrate(&f, t_lo, t_hi, tol)?;
                *slot = dt * r.value;
                error_bound += dt * r.error_bound;
            }
        }
        PieceKind::LeftZero | PieceKind::RightZero => {
            let at = if kind == PieceKind::LeftZero { t_lo } else { t_hi };
            let zero = p
                .zero_near(at, ZERO_MATCH)
                .ok_or(Error::InvalidBreakpoints("zero-adjacent piece without a zero of the angular speed"))?;
            if zero.order != mu {
                return Err(Error::InvalidBreakpoints("breakpoint multiplicity disagrees with the curve"));
            }
            let scale = dt.powi(mu as i32 + 1) / (mu as f64 + 1.0);
            for (slot, case) in out.iter_mut().zip(WeightCase::ALL) {
                let r = stable_piece_integral(p, zero, t_lo, t_hi, case, tol)?;
                *slot = scale * r.value;
                error_bound += scale * r.error_bound;
            }
        }
    }
    if !(out[0] > 0.0) {
        return Err(Error::DegeneratePiece { index: i });
    }
    Ok(PieceMoments { l: out[0], weighted: [out[1], out[2], out[3]], error_bound })
}

/// `L_i` for piece `i`.
pub fn piece_l(p: &ParametricCurve, t: &Partition, i: usize, tol: f64) -> Result<f64> {
    piece_moments(p, t, i, tol).map(|m| m.l)
}

/// `(A_i, B_i, C_i)` for piece `i` given the breakpoints `s`.
pub fn piece_abc(p: &ParametricCurve, t: &Partition, s: &[f64], i: usize, tol: f64) -> Result<(f64, f64, f64)> {
    if s.len() != t.points().len() {
        return Err(Error::InvalidBreakpoints("S and T differ in length"));
    }
    let m = piece_moments(p, t, i, tol)?;
    let ds = s[i + 1] - s[i];
    Ok((m.weighted[0] / ds, m.weighted[1] / ds, m.weighted[2] / ds))
}

/// Breakpoints at the running share of `√w`: `x_i = Σ_{k<i} √w_k / Σ √w_k`.
pub fn breakpoints_from_weights(w: &[f64]) -> Result<Vec<f64>> {
    if let Some(i) = w.iter().position(|&x| !(x > 0.0) || !x.is_finite()) {
        return Err(Error::DegeneratePiece { index: i });
    }
    let roots: Vec<f64> = w.iter().map(|x| x.sqrt()).collect();
    let total: f64 = roots.iter().sum();
    let mut out = Vec::with_capacity(w.len() + 1);
    let mut acc = 0.0;
    out.push(0.0);
    for r in &roots[..roots.len().saturating_sub(1)] {
        acc += r;
        out.push(acc / total);
    }
    out.push(1.0);
    Ok(out)
}

/// `S*` for the partition `t`.
pub fn optimal_s(p: &ParametricCurve, t: &Partition, tol: f64) -> Result<Vec<f64>> {
    let l = (0..t.piece_count()).map(|i| piece_l(p, t, i, tol)).collect::<Result<Vec<_>>>()?;
    breakpoints_from_weights(&l)
}

/// Per-piece `L`, `A`, `B`, `C`, `M` for fixed `S`.
#[derive(Clone, Debug, PartialEq)]
pub struct PieceIntegrals {
    pub l: Vec<f64>,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub c: Vec<f64>,
    pub m: Vec<f64>,
    /// Total quadrature error bound over all `L`, `ΔsA`, `ΔsB`, `ΔsC`.
    pub error_bound: f64,
}

impl PieceIntegrals {
    pub fn from_moments(moments: &[PieceMoments], s: &[f64]) -> Result<Self> {
        if s.len() != moments.len() + 1 {
            return Err(Error::InvalidBreakpoints("S must have one more entry than there are pieces"));
        }
        let n = moments.len();
        let mut out = Self {
            l: Vec::with_capacity(n),
            a: Vec::with_capacity(n),
            b: Vec::with_capacity(n),
            c: Vec::with_capacity(n),
            m: Vec::with_capacity(n),
            error_bound: 0.0,
        };
        for (i, mo) in moments.iter().enumerate() {
            let ds = s[i + 1] - s[i];
            out.l.push(mo.l);
            out.a.push(mo.weighted[0] / ds);
            out.b.push(mo.weighted[1] / ds);
            out.c.push(mo.weighted[2] / ds);
            out.m.push(mo.m());
            out.error_bound += mo.error_bound;
        }
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.l.len()
    }

    pub fn is_empty(&self) -> bool {
        self.l.is_empty()
    }
}

/// All piece integrals for `t`, scaled by the breakpoints `s`.
pub fn piece_integrals(p: &ParametricCurve, t: &Partition, s: &[f64], tol: f64) -> Result<PieceIntegrals> {
    let moments = (0..t.piece_count()).map(|i| piece_moments(p, t, i, tol)).collect::<Result<Vec<_>>>()?;
    PieceIntegrals::from_moments(&moments, s)
}

#[derive(Clone, Debug, PartialEq)]
pub struct OptimizationResult {
    pub s_star: Vec<f64>,
    pub z_star: Vec<f64>,
    pub alpha_star: Vec<f64>,
    pub u_after_phi: f64,
    pub u_after_m: f64,
    /// `(Σ √L)²`.
    pub eta_phi: f64,
    /// `(Σ √M)²`.
    pub eta_m: f64,
}

/// `α*`, `Z*` and both uniformities from the piece integrals at `S = s`.
pub fn optimal_alpha_z(integrals: &PieceIntegrals, s: &[f64], mu_p: f64) -> Result<OptimizationResult> {
    if s.len() != integrals.len() + 1 {
        return Err(Error::InvalidBreakpoints("S must have one more entry than there are pieces"));
    }
    let mut alpha = Vec::with_capacity(integrals.len());
    for i in 0..integrals.len() {
        let (a, c) = (integrals.a[i], integrals.c[i]);
        if !(a > 0.0 && c > 0.0) {
            return Err(Error::DegeneratePiece { index: i });
        }
        alpha.push(1.0 / (1.0 + (c / a).sqrt()));
    }
    let z = breakpoints_from_weights(&integrals.m)?;
    let eta_phi = square_of_root_sum(&integrals.l);
    let eta_m = square_of_root_sum(&integrals.m);
    Ok(OptimizationResult {
        s_star: s.to_vec(),
        z_star: z,
        alpha_star: alpha,
        u_after_phi: mu_p * mu_p / eta_phi,
        u_after_m: mu_p * mu_p / eta_m,
        eta_phi,
        eta_m,
    })
}

fn square_of_root_sum(w: &[f64]) -> f64 {
    let s: f64 = w.iter().map(|x| x.sqrt()).sum();
    s * s
}

/// `∫₀¹ ω²_{p∘φ}` for arbitrary breakpoints `s`: `Σ L_i / Δs_i`.
pub fn eta_radical(l: &[f64], s: &[f64]) -> f64 {
    l.iter().zip(s.windows(2)).map(|(l, w)| l / (w[1] - w[0])).sum()
}

/// `∫₀¹ ω²_{p∘φ∘m}` for arbitrary `z` and `alpha` with `φ` fixed by `s`:
/// `Σ (Δs/Δz)·(x C + B + A/x)` with `x = α/(1 − α)`.
pub fn eta_moebius(integrals: &PieceIntegrals, s: &[f64], z: &[f64], alpha: &[f64]) -> f64 {
    (0..integrals.len())
        .map(|i| {
            let x = alpha[i] / (1.0 - alpha[i]);
            let ratio = (s[i + 1] - s[i]) / (z[i + 1] - z[i]);
            ratio * (x * integrals.c[i] + integrals.b[i] + integrals.a[i] / x)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rational, Polynomial};
    use alloc::vec;

    fn cubic() -> ParametricCurve {
        ParametricCurve::new(vec![Polynomial::t().into(), Polynomial::from_ints(&[0, 0, 0, 1]).into()]).unwrap()
    }

    fn cubic_partition() -> Partition {
        crate::partition::build_partition(&cubic()).unwrap()
    }

    #[test]
    fn running_example_l_and_s() {
        let p = cubic();
        let t = cubic_partition();
        let l0 = piece_l(&p, &t, 0, 1e-9).unwrap();
        let l1 = piece_l(&p, &t, 1, 1e-9).unwrap();
        assert!((l0 - 0.276).abs() < 5e-3 && (l0 - 0.27614995).abs() < 1e-7);
        assert!((l1 - 0.590).abs() < 5e-3 && (l1 - 0.59027958).abs() < 1e-7);
        let s = optimal_s(&p, &t, 1e-9).unwrap();
        assert_eq!(s.len(), 3);
        assert!((s[1] - 0.406).abs() < 1e-3);
    }

    #[test]
    fn running_example_abc_alpha_z() {
        let p = cubic();
        let t = cubic_partition();
        let s = optimal_s(&p, &t, 1e-9).unwrap();
        let ints = piece_integrals(&p, &t, &s, 1e-9).unwrap();
        let expected = [(0.258, 0.229, 0.193), (0.518, 0.317, 0.159)];
        for (i, (a, b, c)) in expected.into_iter().enumerate() {
            assert!((ints.a[i] - a).abs() < 5e-3, "A{i} = {}", ints.a[i]);
            assert!((ints.b[i] - b).abs() < 5e-3, "B{i} = {}", ints.b[i]);
            assert!((ints.c[i] - c).abs() < 5e-3, "C{i} = {}", ints.c[i]);
        }
        assert!((ints.m[0] - 0.274).abs() < 5e-3 && (ints.m[1] - 0.529).abs() < 5e-3);
        let opt = optimal_alpha_z(&ints, &s, 3.0f64.atan()).unwrap();
        assert!((opt.alpha_star[0] - 0.536).abs() < 5e-3);
        assert!((opt.alpha_star[1] - 0.643).abs() < 5e-3);
        assert!((opt.z_star[1] - 0.419).abs() < 1e-3);
        assert!((opt.u_after_phi - 0.932).abs() < 5e-3);
        assert!((opt.u_after_m - 0.997).abs() < 3e-3);
        assert!(opt.u_after_m >= opt.u_after_phi);
    }

    #[test]
    fn abc_sum_to_l_over_ds() {
        let p = cubic();
        let t = cubic_partition();
        let s = [0.0, 0.3, 1.0];
        let ints = piece_integrals(&p, &t, &s, 1e-10).unwrap();
        for i in 0..2 {
            let sum = ints.a[i] + ints.b[i] + ints.c[i];
            assert!((sum - ints.l[i] / (s[i + 1] - s[i])).abs() < 1e-9);
        }
    }

    #[test]
    fn parabola_plain_piece() {
        let p = ParametricCurve::new(vec![Polynomial::t().into(), Polynomial::from_ints(&[0, 0, 1]).into()]).unwrap();
        let t = Partition::new(vec![0.0, 1.0], vec![0, 0]).unwrap();
        let (a, b, c) = piece_abc(&p, &t, &[0.0, 1.0], 0, 1e-10).unwrap();
        // ∫₀¹ 4/(1+4t²)² dt = arctan 2 + 2/5
        let l = piece_l(&p, &t, 0, 1e-10).unwrap();
        let exact_l = 2.0f64.atan() + 0.4;
        assert!((l - exact_l).abs() < 1e-9, "{l} vs {exact_l}");
        assert!((a + b + c - l).abs() < 1e-9);
        assert!(a > c);
    }

    #[test]
    fn reversed_plain_piece_swaps_a_and_c() {
        // (t, t²) on [0,1] mirrored to (t, (1 − t)²)
        let y1 = Polynomial::from_ints(&[0, 0, 1]);
        let y2 = Polynomial::linear_root(&rational(1, 1)).pow(2);
        let t = Partition::new(vec![0.0, 1.0], vec![0, 0]).unwrap();
        let abc = |y: Polynomial| {
            let p = ParametricCurve::new(vec![Polynomial::t().into(), y.into()]).unwrap();
            piece_abc(&p, &t, &[0.0, 1.0], 0, 1e-11).unwrap()
        };
        let (a1, b1, c1) = abc(y1);
        let (a2, b2, c2) = abc(y2);
        assert!((a1 - c2).abs() < 1e-10 && (c1 - a2).abs() < 1e-10 && (b1 - b2).abs() < 1e-10);
    }

    #[test]
    fn stable_matches_naive_for_exact_root() {
        let p = cubic();
        let t = cubic_partition();
        let (lo, hi, _, _) = t.piece(0);
        let zero = &p.zeros()[0];
        for case in WeightCase::ALL {
            let st = stable_piece_integral(&p, zero, lo, hi, case, 1e-11).unwrap();
            let nv = naive_piece_integral(&p, 0.0, 1, lo, hi, case, 1e-11, QuadratureConfig::default()).unwrap();
            assert!((st.value - nv.value).abs() < 1e-8);
        }
    }

    #[test]
    fn zero_must_be_an_endpoint() {
        let p = cubic();
        let zero = &p.zeros()[0];
        assert!(matches!(
            stable_piece_integral(&p, zero, 0.2, 0.5, WeightCase::Length, 1e-9),
            Err(Error::InvalidBreakpoints(_))
        ));
    }

    #[test]
    fn breakpoint_weights() {
        assert_eq!(breakpoints_from_weights(&[2.0]).unwrap(), vec![0.0, 1.0]);
        assert_eq!(breakpoints_from_weights(&[0.3, 0.3]).unwrap(), vec![0.0, 0.5, 1.0]);
        assert!(matches!(breakpoints_from_weights(&[1.0, 0.0]), Err(Error::DegeneratePiece { index: 1 })));
    }

    #[test]
    fn symmetric_piece_gives_affine_moebius() {
        let ints = PieceIntegrals {
            l: vec![1.0],
            a: vec![0.3],
            b: vec![0.4],
            c: vec![0.3],
            m: vec![1.0],
            error_bound: 0.0,
        };
        let opt = optimal_alpha_z(&ints, &[0.0, 1.0], 1.0).unwrap();
        assert_eq!(opt.alpha_star, vec![0.5]);
        assert_eq!(opt.z_star, vec![0.0, 1.0]);
    }

    #[test]
    fn nonpositive_abc_rejected() {
        let ints = PieceIntegrals { l: vec![1.0], a: vec![0.0], b: vec![0.4], c: vec![0.3], m: vec![1.0], error_bound: 0.0 };
        assert!(matches!(optimal_alpha_z(&ints, &[0.0, 1.0], 1.0), Err(Error::DegeneratePiece { index: 0 })));
    }

    #[test]
    fn eta_closed_forms_at_optimum() {
        let p = cubic();
        let t = cubic_partition();
        let s = optimal_s(&p, &t, 1e-9).unwrap();
        let ints = piece_integrals(&p, &t, &s, 1e-9).unwrap();
        let opt = optimal_alpha_z(&ints, &s, 1.0).unwrap();
        assert!((eta_radical(&ints.l, &s) - opt.eta_phi).abs() < 1e-12);
        assert!((eta_moebius(&ints, &s, &opt.z_star, &opt.alpha_star) - opt.eta_m).abs() < 1e-12);
        // α = 1/2 and Z = S reproduce φ alone
        assert!((eta_moebius(&ints, &s, &s, &[0.5, 0.5]) - opt.eta_phi).abs() < 1e-12);
    }
}
