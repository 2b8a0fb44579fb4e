#![allow(dead_code)]

use radical_reparam::algebra::rational;
use radical_reparam::{ParametricCurve, Polynomial, Rational, RationalFunction};

pub struct CorpusCurve {
    pub name: &'static str,
    pub curve: ParametricCurve,
    /// Orders of the zeros of ω in [0, 1], ascending by location.
    pub zero_orders: Vec<u32>,
}

pub fn t() -> RationalFunction {
    Polynomial::t().into()
}

/// Polynomial from `(numerator, denominator)` coefficients, ascending.
pub fn poly(coeffs: &[(i64, i64)]) -> Polynomial {
    Polynomial::new(coeffs.iter().map(|&(n, d)| rational(n, d)).collect())
}

pub fn ints(coeffs: &[i64]) -> Polynomial {
    Polynomial::from_ints(coeffs)
}

fn shifted_power(root: Rational, k: u32) -> Polynomial {
    Polynomial::linear_root(&root).pow(k)
}

pub fn planar(y: impl Into<RationalFunction>) -> ParametricCurve {
    ParametricCurve::new(vec![t(), y.into()]).expect("regular corpus curve")
}

pub fn cubic() -> ParametricCurve {
    planar(ints(&[0, 0, 0, 1]))
}

/// `y'' = (2t² − 1)^k`: a zero of order `k` at `1/√2`.
pub fn irrational_zero(k: u32) -> ParametricCurve {
    let y = match k {
        1 => ints(&[0, 0, -3, 0, 1]),
        2 => poly(&[(0, 1), (0, 1), (1, 2), (0, 1), (-1, 3), (0, 1), (2, 15)]),
        3 => poly(&[(0, 1), (0, 1), (-1, 2), (0, 1), (1, 2), (0, 1), (-2, 5), (0, 1), (1, 7)]),
        _ => unreachable!("corpus covers orders 1 to 3"),
    };
    planar(y)
}

/// Curves whose angular speed vanishes somewhere in `[0, 1]`.
pub fn with_zeros() -> Vec<CorpusCurve> {
    let c = |name, curve, zero_orders: &[u32]| CorpusCurve { name, curve, zero_orders: zero_orders.to_vec() };
    vec![
        c("(t, t^3)", cubic(), &[1]),
        c("(t, t^4)", planar(ints(&[0, 0, 0, 0, 1])), &[2]),
        c("(t, t^5)", planar(ints(&[0, 0, 0, 0, 0, 1])), &[3]),
        c("(t, (t-2/5)^3)", planar(shifted_power(rational(2, 5), 3)), &[1]),
        c("(t, (t-1/2)^4)", planar(shifted_power(rational(1, 2), 4)), &[2]),
        c("(t, (t-1/3)^5)", planar(shifted_power(rational(1, 3), 5)), &[3]),
        c("(t, (t-1)^3)", planar(shifted_power(rational(1, 1), 3)), &[1]),
        c("(t, t^4-t^3)", planar(ints(&[0, 0, 0, -1, 1])), &[1, 1]),
        c("y''=2t^2-1", irrational_zero(1), &[1]),
        c("y''=(2t^2-1)^2", irrational_zero(2), &[2]),
        c("y''=(2t^2-1)^3", irrational_zero(3), &[3]),
        c(
            "(t, t^3, t^4)",
            ParametricCurve::new(vec![t(), ints(&[0, 0, 0, 1]).into(), ints(&[0, 0, 0, 0, 1]).into()]).unwrap(),
            &[1],
        ),
        c(
            "(t, t^3/(1+t))",
            planar(RationalFunction::new(ints(&[0, 0, 0, 1]), ints(&[1, 1])).unwrap()),
            &[1],
        ),
    ]
}

/// Regular curves with nowhere-vanishing angular speed.
pub fn without_zeros() -> Vec<CorpusCurve> {
    let circle = ParametricCurve::new(vec![
        RationalFunction::new(ints(&[1, 0, -1]), ints(&[1, 0, 1])).unwrap(),
        RationalFunction::new(ints(&[0, 2]), ints(&[1, 0, 1])).unwrap(),
    ])
    .unwrap();
    vec![
        CorpusCurve { name: "(t, t^2)", curve: planar(ints(&[0, 0, 1])), zero_orders: vec![] },
        CorpusCurve { name: "circle", curve: circle, zero_orders: vec![] },
        CorpusCurve { name: "(t, t^2 + t^3)", curve: planar(ints(&[0, 0, 1, 1])), zero_orders: vec![] },
    ]
}

/// Uniform grid of `n + 1` points on `[a, b]` with exact endpoints.
pub fn grid(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..=n).map(move |i| if i == n { b } else { a + (b - a) * i as f64 / n as f64 })
}
