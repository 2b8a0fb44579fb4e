use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Polynomial;
use crate::error::{Error, Result};
use crate::Rational;

/// `f = constant · ∏ factor^exponent` with monic, square-free, pairwise
/// coprime factors and strictly increasing exponents.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareFreeDecomposition {
    pub constant: Rational,
    pub factors: Vec<(Polynomial, u32)>,
}

impl SquareFreeDecomposition {
    pub fn expand(&self) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::constant(self.constant.clone()), |acc, (f, e)| &acc * &f.pow(*e))
    }
}

/// Yun's square-free decomposition over ℚ.
pub fn squarefree_decomposition(f: &Polynomial) -> Result<SquareFreeDecomposition> {
    let constant = f.leading().ok_or(Error::ZeroPolynomial)?.clone();
    let mut factors = Vec::new();
    if f.is_constant() {
        return Ok(SquareFreeDecomposition { constant, factors });
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0)?.monic();
    let mut d = &df.exact_div(&a0)?.scale(&constant.recip()) - &b.derivative();
    let mut exponent = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        if !a.is_constant() {
            factors.push((a.clone(), exponent));
        }
        b = b.exact_div(&a)?;
        let c = d.exact_div(&a)?;
        d = &c - &b.derivative();
        exponent += 1;
    }
    Ok(SquareFreeDecomposition { constant, factors })
}

/// A real root isolated in a rational bracket.
///
/// `lo <= root <= hi`, and `lo == hi` exactly when the root is rational and
/// was identified exactly. The bracket holds exactly one distinct root of the
/// source polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct IsolatedRoot {
    lo: Rational,
    hi: Rational,
    /// Binary approximation of the root.
    pub value: f64,
    /// Multiplicity of the root in the source polynomial.
    pub multiplicity: u32,
    /// Square-free polynomial having this root as a simple root.
    factor: Polynomial,
}

impl IsolatedRoot {
    pub fn bracket(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn exact(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    /// Square-free factor of the source polynomial that vanishes here.
    pub fn factor(&self) -> &Polynomial {
        &self.factor
    }

    /// Bisects the bracket until it is at most `width` wide.
    pub fn refined(&self, width: &Rational) -> IsolatedRoot {
        if self.exact().is_some() || &(&self.hi - &self.lo) <= width {
            return self.clone();
        }
        let mut out = refine_bracket(&self.factor, self.lo.clone(), self.hi.clone(), width);
        out.multiplicity = self.multiplicity;
        out
    }

    /// Rational within `width` of the root (the root itself when exact).
    pub fn approximation(&self, width: &Rational) -> Rational {
        let r = self.refined(width);
        midpoint(&r.lo, &r.hi)
    }
}

/// Sign of `p` just to the right (`side = 1`) or left (`side = -1`) of `x`.
fn one_sided_sign(p: &Polynomial, x: &Rational, side: i32) -> i32 {
    let mut q = p.clone();
    let mut flip = 1;
    while !q.is_zero() {
        let v = q.eval(x);
        if !v.is_zero() {
            return flip * if v.is_positive() { 1 } else { -1 };
        }
        q = q.derivative();
        flip *= side;
    }
    0
}

fn sign(v: &Rational) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

struct SturmChain(Vec<Polynomial>);

impl SturmChain {
    fn new(p: &Polynomial) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]).expect("chain entries are nonzero");
            if r.is_zero() {
                break;
            }
            let scale = r.leading().expect("nonzero").abs().recip();
            chain.push(-&r.scale(&scale));
        }
        Self(chain)
    }

    fn variations(&self, x: &Rational, side: i32) -> usize {
        let mut count = 0;
        let mut last = 0;
        for q in &self.0 {
            let s = one_sided_sign(q, x, side);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Distinct roots in the open interval `(lo, hi)`.
    fn count_open(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations(lo, 1) - self.variations(hi, -1)
    }
}

fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / Rational::from_integer(BigInt::from(2))
}

/// Simplest (smallest denominator) rational in `[lo, hi]`, `0 <= lo <= hi`.
fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    let c = lo.ceil();
    if &c <= hi {
        return c;
    }
    let n = lo.floor();
    let inner = simplest_between(&(hi - &n).recip(), &(lo - &n).recip());
    n + inner.recip()
}

fn exact_root(factor: &Polynomial, r: Rational, multiplicity: u32) -> IsolatedRoot {
    IsolatedRoot {
        value: r.to_f64().unwrap_or(f64::NAN),
        lo: r.clone(),
        hi: r,
        multiplicity,
        factor: factor.clone(),
    }
}

/// Shrinks an open bracket holding exactly one simple root of `p`.
fn refine_bracket(p: &Polynomial, mut lo: Rational, mut hi: Rational, width: &Rational) -> IsolatedRoot {
    let lo_sign = one_sided_sign(p, &lo, 1);
    while &(&hi - &lo) > width {
        let mid = midpoint(&lo, &hi);
        let s = sign(&p.eval(&mid));
        if s == 0 {
            return exact_root(p, mid, 1);
        }
        if s == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if !lo.is_negative() {
        let q = simplest_between(&lo, &hi);
        if p.eval(&q).is_zero() {
            return exact_root(p, q, 1);
        }
    }
    let value = midpoint(&lo, &hi).to_f64().unwrap_or(f64::NAN);
    IsolatedRoot { lo, hi, value, multiplicity: 1, factor: p.clone() }
}

/// Largest power of two not exceeding `tol`, as an exact rational.
fn dyadic_width(tol: f64) -> Rational {
    let tol = if tol.is_finite() && tol > 0.0 { tol.min(1.0) } else { 1e-12 };
    let mut w = Rational::one();
    let two = Rational::from_integer(BigInt::from(2));
    while w.to_f64().unwrap_or(0.0) > tol {
        w /= &two;
    }
    w
}

/// Roots of a square-free `p` inside `[a, b]`, unsorted.
fn isolate_squarefree(p: &Polynomial, a: &Rational, b: &Rational, width: &Rational) -> Vec<IsolatedRoot> {
    let mut roots = Vec::new();
    if p.is_constant() {
        return roots;
    }
    if p.eval(a).is_zero() {
        roots.push(exact_root(p, a.clone(), 1));
    }
    if a != b && p.eval(b).is_zero() {
        roots.push(exact_root(p, b.clone(), 1));
    }
    let chain = SturmChain::new(p);
    let mut stack = vec![(a.clone(), b.clone())];
    while let Some((lo, hi)) = stack.pop() {
        match chain.count_open(&lo, &hi) {
            0 => {}
            1 => roots.push(refine_bracket(p, lo, hi, width)),
            _ => {
                let mid = midpoint(&lo, &hi);
                if p.eval(&mid).is_zero() {
                    roots.push(exact_root(p, mid.clone(), 1));
                }
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    roots
}

/// Every distinct real root of `f` in `[a, b]` (endpoints included), sorted
/// ascending, with multiplicities and `value` within `tol` of the true root.
pub fn isolate_roots(f: &Polynomial, a: &Rational, b: &Rational, tol: f64) -> Result<Vec<IsolatedRoot>> {
    let sqf = squarefree_decomposition(f)?;
    let width = dyadic_width(tol);
    let mut roots = Vec::new();
    for (factor, exponent) in &sqf.factors {
        for mut r in isolate_squarefree(factor, a, b, &width) {
            r.multiplicity = *exponent;
            roots.push(r);
        }
    }
    roots.sort_by(|x, y| x.value.total_cmp(&y.value).then_with(|| x.lo.cmp(&y.lo)));
    Ok(roots)
}

/// Result of dividing `G` by `(t - γ)^power`.
#[derive(Clone, Debug, PartialEq)]
pub struct EuclideanQuotient {
    pub quotient: Polynomial,
    pub remainder: Polynomial,
    /// `max |remainder coefficient|`; zero when `γ` is an exact root of
    /// multiplicity at least `power`.
    pub remainder_magnitude: f64,
}

/// `G(t) = (t - γ)^power · Q(t, γ) + R(t, γ)`.
pub fn euclidean_quotient(g: &Polynomial, gamma: &Rational, power: u32) -> EuclideanQuotient {
    let divisor = Polynomial::linear_root(gamma).pow(power);
    let (quotient, remainder) = g.div_rem(&divisor).expect("divisor is monic");
    let remainder_magnitude = remainder.max_abs_coeff();
    EuclideanQuotient { quotient, remainder, remainder_magnitude }
}

/// Integer-coefficient helper used by tests and callers building exact inputs.
pub fn rational(n: i64, d: i64) -> Rational {
    let (n, d) = if d < 0 { (-n, -d) } else { (n, d) };
    let g = n.gcd(&d).max(1);
    Rational::new(BigInt::from(n / g), BigInt::from(d / g))
}
