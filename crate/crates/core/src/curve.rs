//! Rational parametric curves and their angular speed.
//!
//! With `p'(t) = (X_1, …, X_n) / W` in lowest terms, the angular speed is
//! `ω_p = √F / Σ X_i²` where `F = Σ_{i<j} (X_i' X_j − X_j' X_i)²`. Everything
//! downstream works with `ω_p² = F / (Σ X_i²)²`, which is rational.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;
use num_traits::{One, Zero};

use crate::algebra::{
    euclidean_quotient, isolate_roots, FloatPoly, IsolatedRoot, Polynomial, RationalFunction,
};
use crate::error::{Error, Result};
use crate::quadrature::{integrate, Integrand};
use crate::{Rational, DEFAULT_ROOT_TOLERANCE};

/// Bits of precision for the root approximation used in Euclidean quotients.
const QUOTIENT_ROOT_BITS: u32 = 100;

/// A zero of `ω_p` in `[0, 1]` with its stabilised cofactor.
#[derive(Clone, Debug)]
pub struct AngularSpeedZero {
    /// Root of `F`; `root.multiplicity` is its multiplicity in `F`.
    pub root: IsolatedRoot,
    /// `mult(ω_p, t̃) = root.multiplicity / 2`.
    pub order: u32,
    /// `Q` in `F = (t − γ)^{2·order} Q + R`.
    pub quotient: Polynomial,
    quotient_f64: FloatPoly,
    /// `max|R| / max|F|` for the high-precision `γ` used.
    pub remainder_magnitude: f64,
}

impl AngularSpeedZero {
    pub fn location(&self) -> f64 {
        self.root.value
    }
}

/// `F`, `Σ X_i²`, the zero-free part `ζ` of `F` on `[0, 1]`, and the zeros.
#[derive(Clone, Debug)]
pub struct AngularSpeedData {
    pub f: Polynomial,
    pub denom: Polynomial,
    /// `F` with every square-free factor that vanishes in `[0, 1]` removed.
    pub zeta: Polynomial,
    pub zeros: Vec<AngularSpeedZero>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UniformityReport {
    /// `∫₀¹ ω`.
    pub mu: f64,
    /// `∫₀¹ (ω − μ)²`.
    pub sigma2: f64,
    /// `1 / (1 + σ²/μ²)`, or 1 when `μ = 0`.
    pub uniformity: f64,
    /// First-order bound on the error of `uniformity` from quadrature.
    pub quad_error_bound: f64,
}

impl UniformityReport {
    /// From `μ = ∫ω` and `∫ω²` with their absolute error bounds.
    pub fn from_moments(mu: f64, mu_err: f64, second: f64, second_err: f64) -> Self {
        if mu == 0.0 {
            return Self { mu, sigma2: 0.0, uniformity: 1.0, quad_error_bound: 0.0 };
        }
        let sigma2 = (second - mu * mu).max(0.0);
        let uniformity = (mu * mu / second).min(1.0);
        let quad_error_bound =
            2.0 * mu.abs() / second * mu_err + mu * mu / (second * second) * second_err;
        Self { mu, sigma2, uniformity, quad_error_bound }
    }
}

#[derive(Clone, Debug)]
pub struct ParametricCurve {
    coordinates: Vec<RationalFunction>,
    coords_f64: Vec<(FloatPoly, FloatPoly)>,
    hodograph: Vec<Polynomial>,
    hodograph_den: Polynomial,
    f: Polynomial,
    denom: Polynomial,
    f_f64: FloatPoly,
    denom_f64: FloatPoly,
    omega_sq: RationalFunction,
    profile: Option<AngularSpeedData>,
    root_tolerance: f64,
}

impl ParametricCurve {
    pub fn new(coordinates: Vec<RationalFunction>) -> Result<Self> {
        Self::with_root_tolerance(coordinates, DEFAULT_ROOT_TOLERANCE)
    }

    /// `root_tolerance` bounds the error of every reported root location.
    pub fn with_root_tolerance(coordinates: Vec<RationalFunction>, root_tolerance: f64) -> Result<Self> {
        if coordinates.len() < 2 {
            return Err(Error::InvalidCurve("at least two coordinates are required"));
        }
        let zero = Rational::zero();
        let one = Rational::one();
        for x in &coordinates {
            if let Some(r) = isolate_roots(x.denominator(), &zero, &one, root_tolerance)?.first() {
                return Err(singular_at(r));
            }
        }

        let derivs: Vec<RationalFunction> = coordinates.iter().map(RationalFunction::derivative).collect();
        let mut w = Polynomial::one();
        for d in &derivs {
            w = w.lcm(d.denominator());
        }
        let mut hodograph: Vec<Polynomial> = derivs
            .iter()
            .map(|d| d.numerator() * &w.exact_div(d.denominator()).expect("lcm is a multiple"))
            .collect();
        let g = hodograph.iter().fold(w.clone(), |g, x| g.gcd(x));
        if !g.is_constant() {
            for x in &mut hodograph {
                *x = x.exact_div(&g)?;
            }
            w = w.exact_div(&g)?;
        }

        let denom = hodograph.iter().fold(Polynomial::zero(), |acc, x| &acc + &(x * x));
        if denom.is_zero() {
            return Err(Error::SingularCurve { lo: 0.0, hi: 1.0 });
        }
        if let Some(r) = isolate_roots(&denom, &zero, &one, root_tolerance)?.first() {
            return Err(singular_at(r));
        }

        let dx: Vec<Polynomial> = hodograph.iter().map(Polynomial::derivative).collect();
        let mut f = Polynomial::zero();
        for i in 0..hodograph.len() {
            for j in i + 1..hodograph.len() {
                let minor = &(&dx[i] * &hodograph[j]) - &(&dx[j] * &hodograph[i]);
                f = &f + &(&minor * &minor);
            }
        }

        let omega_sq = RationalFunction::new(f.clone(), &denom * &denom)?;
        let profile = if f.is_zero() { None } else { Some(profile(&f, &denom, root_tolerance)?) };
        Ok(Self {
            coords_f64: coordinates.iter().map(|x| (x.numerator().to_f64(), x.denominator().to_f64())).collect(),
            coordinates,
            hodograph,
            hodograph_den: w,
            f_f64: f.to_f64(),
            denom_f64: denom.to_f64(),
            f,
            denom,
            omega_sq,
            profile,
            root_tolerance,
        })
    }

    /// Width bound of the root brackets used for this curve.
    pub fn root_tolerance(&self) -> f64 {
        self.root_tolerance
    }

    pub fn dimension(&self) -> usize {
        self.coordinates.len()
    }

    pub fn coordinates(&self) -> &[RationalFunction] {
        &self.coordinates
    }

    /// Reduced hodograph `(X_1, …, X_n)` and its common denominator `W`.
    pub fn hodograph(&self) -> (&[Polynomial], &Polynomial) {
        (&self.hodograph, &self.hodograph_den)
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    /// `Σ X_i²`.
    pub fn denom(&self) -> &Polynomial {
        &self.denom
    }

    pub fn point(&self, t: f64) -> Vec<f64> {
        self.coords_f64.iter().map(|(n, d)| n.eval(t) / d.eval(t)).collect()
    }

    pub fn is_line(&self) -> bool {
        self.profile.is_none()
    }

    /// `ω_p² = F / (Σ X_i²)²` in lowest terms.
    pub fn angular_speed_squared(&self) -> &RationalFunction {
        &self.omega_sq
    }

    #[inline]
    pub fn omega_squared(&self, t: f64) -> f64 {
        let d = self.denom_f64.eval(t);
        self.f_f64.eval(t).max(0.0) / (d * d)
    }

    #[inline]
    pub fn omega(&self, t: f64) -> f64 {
        self.f_f64.eval(t).max(0.0).sqrt() / self.denom_f64.eval(t)
    }

    /// Nonnegative angular speed at `t`.
    pub fn evaluate_omega(&self, t: f64) -> Result<f64> {
        let d = self.denom_f64.eval(t);
        if d == 0.0 || !d.is_finite() {
            return Err(Error::SingularCurve { lo: t, hi: t });
        }
        Ok(self.f_f64.eval(t).max(0.0).sqrt() / d.abs())
    }

    pub fn multiplicity_profile(&self) -> Result<&AngularSpeedData> {
        self.profile.as_ref().ok_or(Error::DegenerateLine)
    }

    /// Zeros of `ω_p` in `[0, 1]`, ascending (empty for lines).
    pub fn zeros(&self) -> &[AngularSpeedZero] {
        self.profile.as_ref().map_or(&[], |p| &p.zeros)
    }

    /// The zero of `ω_p` within `tol` of `t`, if any.
    pub fn zero_near(&self, t: f64, tol: f64) -> Option<&AngularSpeedZero> {
        self.zeros().iter().find(|z| (z.location() - t).abs() <= tol)
    }

    /// `ζ̃(t) = ω_p(t) / |t − t̃|^μ`, finite at `t = t̃`.
    #[inline]
    pub fn zeta_tilde(&self, zero: &AngularSpeedZero, t: f64) -> f64 {
        zero.quotient_f64.eval(t).max(0.0).sqrt() / self.denom_f64.eval(t)
    }

    /// `ω_p²(t) / |t − t̃|^μ` evaluated as `Q(t)·|t − t̃|^μ / H(t)`.
    #[inline]
    pub fn stable_ratio(&self, zero: &AngularSpeedZero, t: f64) -> f64 {
        let d = self.denom_f64.eval(t);
        zero.quotient_f64.eval(t) * (t - zero.location()).abs().powi(zero.order as i32) / (d * d)
    }

    /// `μ_p`, `σ_p²` and `u_p` by adaptive quadrature to absolute `tol`.
    pub fn uniformity(&self, tol: f64) -> Result<UniformityReport> {
        if self.is_line() {
            return Ok(UniformityReport::from_moments(0.0, 0.0, 0.0, 0.0));
        }
        // ω has kinks at odd-order zeros; integrate between them.
        let mut cuts: Vec<f64> = Vec::with_capacity(self.zeros().len() + 2);
        cuts.push(0.0);
        cuts.extend(self.zeros().iter().map(|z| z.location()).filter(|&t| t > 0.0 && t < 1.0));
        cuts.push(1.0);
        let pieces = (cuts.len() - 1) as f64;
        let omega = Integrand::new(|t| self.omega(t));
        let (mut mu, mut mu_err) = (0.0, 0.0);
        for w in cuts.windows(2) {
            let r = integrate(&omega, w[0], w[1], tol / pieces)?;
            mu += r.value;
            mu_err += r.error_bound;
        }
        let second = integrate(&Integrand::new(|t| self.omega_squared(t)), 0.0, 1.0, tol)?;
        Ok(UniformityReport::from_moments(mu, mu_err, second.value, second.error_bound))
    }
}

fn singular_at(r: &IsolatedRoot) -> Error {
    let (lo, hi) = r.bracket();
    Error::SingularCurve {
        lo: num_traits::ToPrimitive::to_f64(lo).unwrap_or(r.value),
        hi: num_traits::ToPrimitive::to_f64(hi).unwrap_or(r.value),
    }
}

fn profile(f: &Polynomial, denom: &Polynomial, root_tolerance: f64) -> Result<AngularSpeedData> {
    let roots = isolate_roots(f, &Rational::zero(), &Rational::one(), root_tolerance)?;
    let width = Rational::new(One::one(), num_bigint::BigInt::one() << QUOTIENT_ROOT_BITS);
    let scale = f.max_abs_coeff();
    let mut zeta = f.clone();
    let mut removed: Vec<&Polynomial> = Vec::new();
    let mut zeros = Vec::with_capacity(roots.len());
    for root in &roots {
        if root.multiplicity % 2 == 1 {
            return Err(Error::MalformedF { root: root.value, multiplicity: root.multiplicity });
        }
        if !removed.contains(&root.factor()) {
            zeta = zeta.exact_div(&root.factor().pow(root.multiplicity))?;
            removed.push(root.factor());
        }
    }
    for root in roots.iter() {
        let gamma = root.approximation(&width);
        let q = euclidean_quotient(f, &gamma, root.multiplicity);
        zeros.push(AngularSpeedZero {
            root: root.clone(),
            order: root.multiplicity / 2,
            quotient_f64: q.quotient.to_f64(),
            quotient: q.quotient,
            remainder_magnitude: q.remainder_magnitude / scale,
        });
    }
    Ok(AngularSpeedData { f: f.clone(), denom: denom.clone(), zeta, zeros })
}
