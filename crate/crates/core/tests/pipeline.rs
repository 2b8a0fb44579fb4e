mod common;

use radical_reparam::optimizer::{naive_piece_integral, stable_piece_integral, WeightCase};
use radical_reparam::quadrature::{integrate, Integrand, QuadratureConfig};
use radical_reparam::transforms::{reparameterized_omega_sided, Side};
use radical_reparam::{optimal_radical_transformation, Error, ParametricCurve, PipelineOptions, PiecewiseTransform, Rational};

use common::{cubic, planar, with_zeros, without_zeros};

fn direct_moments(p: &ParametricCurve, tr: &PiecewiseTransform) -> (f64, f64) {
    let bp = tr.breakpoints();
    let (mut first, mut second) = (0.0, 0.0);
    for i in 0..bp.len() - 1 {
        let w = |x: f64| {
            let side = if x >= bp[i + 1] { Side::Left } else { Side::Right };
            reparameterized_omega_sided(p, tr, x, side).unwrap()
        };
        first += integrate(&Integrand::new(w), bp[i], bp[i + 1], 1e-11).unwrap().value;
        second += integrate(&Integrand::new(|x| w(x).powi(2)), bp[i], bp[i + 1], 1e-11).unwrap().value;
    }
    (first, second)
}

#[test]
fn closed_form_uniformities_match_direct_quadrature() {
    for c in with_zeros().into_iter().chain(without_zeros()) {
        let r = optimal_radical_transformation(&c.curve, PipelineOptions::default()).unwrap();
        let (mu, eta) = direct_moments(&c.curve, &r.phi);
        assert!((mu * mu / eta - r.u_phi()).abs() < 1e-6, "{}", c.name);
        let (mu, eta) = direct_moments(&c.curve, &r.transform);
        assert!((mu * mu / eta - r.u_final()).abs() < 1e-6, "{}", c.name);
        assert!(r.quadrature_error() < 1e-6, "{}", c.name);
    }
}

#[test]
fn stable_and_naive_agree_for_exact_roots() {
    for c in with_zeros() {
        for zero in c.curve.zeros() {
            // Only roots that f64 represents exactly: otherwise the naive
            // integrand keeps a genuine pole next to the endpoint.
            match zero.root.exact() {
                Some(r) if Rational::from_float(zero.location()).as_ref() == Some(r) => {}
                _ => continue,
            }
            let t = zero.location();
            let pieces = [(t, 1.0), (0.0, t)];
            for (lo, hi) in pieces {
                if hi - lo < 1e-3 {
                    continue;
                }
                for case in WeightCase::ALL {
                    let stable = stable_piece_integral(&c.curve, zero, lo, hi, case, 1e-11).unwrap();
                    let naive = naive_piece_integral(&c.curve, t, zero.order, lo, hi, case, 1e-11, QuadratureConfig::default())
                        .unwrap();
                    assert!((stable.value - naive.value).abs() < 1e-8, "{} {case:?}", c.name);
                }
            }
        }
    }
}

#[test]
fn extra_breakpoints_do_not_hurt() {
    let p = cubic();
    let base = optimal_radical_transformation(&p, PipelineOptions::default()).unwrap();
    let opts = PipelineOptions { extra_breakpoints: 2, ..PipelineOptions::default() };
    let finer = optimal_radical_transformation(&p, opts).unwrap();
    assert_eq!(finer.partition.piece_count(), 3 * base.partition.piece_count());
    assert!(finer.u_phi() >= base.u_phi() - 1e-9);
    assert!(finer.u_final() >= base.u_final() - 1e-9);
    assert!(finer.u_final() > finer.u_p());
}

#[test]
fn lines_get_the_identity() {
    let line = planar(radical_reparam::Polynomial::from_ints(&[1, 2]));
    let r = optimal_radical_transformation(&line, PipelineOptions::default()).unwrap();
    assert!(r.transform.is_identity());
    assert_eq!((r.u_p(), r.u_phi(), r.u_final()), (1.0, 1.0, 1.0));
}

#[test]
fn singular_curves_are_rejected() {
    use radical_reparam::RationalFunction;
    let t2 = radical_reparam::Polynomial::from_ints(&[0, 0, 1]);
    let t3 = radical_reparam::Polynomial::from_ints(&[0, 0, 0, 1]);
    let err = ParametricCurve::new(vec![RationalFunction::from(t2), RationalFunction::from(t3)]);
    assert!(matches!(err, Err(Error::SingularCurve { .. })), "{err:?}");
}
