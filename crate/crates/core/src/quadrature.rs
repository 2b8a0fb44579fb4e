//! Adaptive 21-point Gauss–Kronrod integration.
//!
//! Segments are bisected largest-error-first until the summed error estimate
//! drops below the requested absolute tolerance. An integrand may declare an
//! algebraic endpoint singularity `|t - endpoint|^σ` with `σ ∈ (-1, 0)`; the
//! substitution `t - a = (b - a)·v^{1/(1+σ)}` then removes it before the
//! adaptive pass.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_626_368_060,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

// Gauss weights for the odd-indexed Kronrod nodes.
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoint {
    Lower,
    Upper,
}

/// Integrand behaves like `|t - endpoint|^exponent` near `endpoint`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EndpointBehavior {
    pub endpoint: Endpoint,
    pub exponent: f64,
}

pub struct Integrand<F> {
    evaluator: F,
    behavior: Option<EndpointBehavior>,
}

impl<F: Fn(f64) -> f64> Integrand<F> {
    pub fn new(evaluator: F) -> Self {
        Self { evaluator, behavior: None }
    }

    pub fn with_endpoint(mut self, endpoint: Endpoint, exponent: f64) -> Self {
        self.behavior = Some(EndpointBehavior { endpoint, exponent });
        self
    }

    pub fn behavior(&self) -> Option<EndpointBehavior> {
        self.behavior
    }

    pub fn eval(&self, t: f64) -> f64 {
        (self.evaluator)(t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error_bound: f64,
    pub evaluations: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureConfig {
    /// Maximum number of live segments before giving up.
    pub max_segments: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self { max_segments: 2000 }
    }
}

/// `∫_a^b f` to absolute tolerance `tol` with the default budget.
pub fn integrate<F: Fn(f64) -> f64>(f: &Integrand<F>, a: f64, b: f64, tol: f64) -> Result<Integral> {
    integrate_with(f, a, b, tol, QuadratureConfig::default())
}

pub fn integrate_with<F: Fn(f64) -> f64>(
    f: &Integrand<F>,
    a: f64,
    b: f64,
    tol: f64,
    config: QuadratureConfig,
) -> Result<Integral> {
    if a == b {
        return Ok(Integral { value: 0.0, error_bound: 0.0, evaluations: 0 });
    }
    if b < a {
        return integrate_with(f, b, a, tol, config).map(|r| Integral { value: -r.value, ..r });
    }
    match f.behavior {
        Some(EndpointBehavior { exponent, .. }) if exponent <= -1.0 || exponent.is_nan() => {
            Err(Error::NonIntegrable { exponent })
        }
        Some(EndpointBehavior { endpoint, exponent }) if exponent < 0.0 => {
            let k = 1.0 / (1.0 + exponent);
            let width = b - a;
            let g = |v: f64| {
                let jac = width * k * v.powf(k - 1.0);
                let t = match endpoint {
                    Endpoint::Lower => a + width * v.powf(k),
                    Endpoint::Upper => b - width * v.powf(k),
                };
                (f.evaluator)(t) * jac
            };
            adaptive(&g, 0.0, 1.0, tol, config)
        }
        _ => adaptive(&f.evaluator, a, b, tol, config),
    }
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

fn adaptive<G: Fn(f64) -> f64>(g: &G, a: f64, b: f64, tol: f64, config: QuadratureConfig) -> Result<Integral> {
    let mut evaluations = 0;
    let (value, error) = kronrod21(g, a, b, &mut evaluations);
    let mut segments = Vec::with_capacity(64);
    segments.push(Segment { a, b, value, error });
    loop {
        let (total, err) = sum_segments(&segments);
        if err <= tol {
            return Ok(Integral { value: total, error_bound: err, evaluations });
        }
        let worst = segments
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .map(|(i, _)| i)
            .expect("at least one segment");
        let seg = segments.swap_remove(worst);
        let mid = 0.5 * (seg.a + seg.b);
        let too_narrow = mid <= seg.a || mid >= seg.b || (seg.b - seg.a) < 64.0 * f64::EPSILON * seg.b.abs().max(seg.a.abs());
        if segments.len() + 2 > config.max_segments || too_narrow || !err.is_finite() {
            segments.push(seg);
            let (total, err) = sum_segments(&segments);
            return Err(Error::QuadratureError { estimate: total, error: err, evaluations });
        }
        let (v1, e1) = kronrod21(g, seg.a, mid, &mut evaluations);
        let (v2, e2) = kronrod21(g, mid, seg.b, &mut evaluations);
        segments.push(Segment { a: seg.a, b: mid, value: v1, error: e1 });
        segments.push(Segment { a: mid, b: seg.b, value: v2, error: e2 });
    }
}

fn sum_segments(segments: &[Segment]) -> (f64, f64) {
    // Fixed order keeps results bit-reproducible.
    let mut sorted: Vec<&Segment> = segments.iter().collect();
    sorted.sort_by(|x, y| x.a.total_cmp(&y.a));
    sorted.iter().fold((0.0, 0.0), |(v, e), s| (v + s.value, e + s.error))
}

/// One 21-point Kronrod panel with the QUADPACK error heuristic.
fn kronrod21<G: Fn(f64) -> f64>(g: &G, a: f64, b: f64, evaluations: &mut usize) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = g(center);
    let mut res_k = fc * WGK[10];
    let mut res_g = 0.0;
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let x = half * XGK[j];
        let f1 = g(center - x);
        let f2 = g(center + x);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    *evaluations += 21;
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = res_k * half;
    res_abs *= half.abs();
    res_asc *= half.abs();
    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    if !value.is_finite() {
        err = f64::INFINITY;
    }
    (value, err)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn running_example_mean() {
        let f = Integrand::new(|t: f64| 6.0 * t / (9.0 * t.powi(4) + 1.0));
        let r = integrate(&f, 0.0, 1.0, 1e-9).unwrap();
        assert!((r.value - 3.0f64.atan()).abs() < 1e-9);
        assert!((r.value - 1.249).abs() < 5e-3);
        assert!(r.error_bound <= 1e-9);
    }

    #[test]
    fn constant() {
        let r = integrate(&Integrand::new(|_| 1.0), 0.0, 1.0, 1e-9).unwrap();
        assert!((r.value - 1.0).abs() < 1e-15);
    }

    #[test]
    fn inverse_sqrt_with_declared_exponent() {
        let f = Integrand::new(|t: f64| 1.0 / t.sqrt()).with_endpoint(Endpoint::Lower, -0.5);
        let r = integrate(&f, 0.0, 1.0, 1e-9).unwrap();
        assert!((r.value - 2.0).abs() < 1e-9);
        assert!(r.evaluations <= 21 * 3);
    }

    #[test]
    fn upper_endpoint_singularity() {
        // ∫_0^1 (1 - t)^{-2/3} dt = 3
        let f = Integrand::new(|t: f64| (1.0 - t).powf(-2.0 / 3.0)).with_endpoint(Endpoint::Upper, -2.0 / 3.0);
        let r = integrate(&f, 0.0, 1.0, 1e-9).unwrap();
        assert!((r.value - 3.0).abs() < 1e-9);
    }

    #[test]
    fn non_integrable_rejected() {
        let f = Integrand::new(|t: f64| 1.0 / t).with_endpoint(Endpoint::Lower, -1.0);
        assert!(matches!(integrate(&f, 0.0, 1.0, 1e-9), Err(Error::NonIntegrable { .. })));
    }

    #[test]
    fn budget_exhaustion_reports_estimate() {
        let f = Integrand::new(|t: f64| 1.0 / t);
        let cfg = QuadratureConfig { max_segments: 50 };
        match integrate_with(&f, 0.0, 1.0, 1e-9, cfg) {
            Err(Error::QuadratureError { estimate, evaluations, .. }) => {
                assert!(estimate.is_finite() && estimate > 0.0);
                assert!(evaluations > 0);
            }
            other => panic!("expected QuadratureError, got {other:?}"),
        }
    }

    #[test]
    fn reversed_limits_negate() {
        let f = Integrand::new(|t: f64| t * t);
        let r = integrate(&f, 1.0, 0.0, 1e-12).unwrap();
        assert!((r.value + 1.0 / 3.0).abs() < 1e-14);
    }
}
