//! Piecewise radical maps `φ`, piecewise Möbius maps `m` and `r = φ ∘ m`.
//!
//! Every transform is a strictly increasing bijection of `[0, 1]`. At an
//! interior breakpoint `evaluate` uses the piece to the right (the last piece
//! at `x = 1`); one-sided quantities take an explicit [`Side`].

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::curve::ParametricCurve;
use crate::error::{Error, Result};
use crate::partition::{Partition, PieceKind};

/// How far a zero of `ω_p` may sit from a piece endpoint and still be used
/// for the cancelled angular-speed form.
const ZERO_MATCH: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `x^{1/k}` with the exact square and cube roots where available.
fn root(x: f64, k: u32) -> f64 {
    match k {
        1 => x,
        2 => x.sqrt(),
        3 => x.cbrt(),
        _ => x.powf(1.0 / k as f64),
    }
}

/// One piece of `φ`, mapping `[s_lo, s_hi]` onto `[t_lo, t_hi]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadicalPiece {
    pub kind: PieceKind,
    pub t_lo: f64,
    pub t_hi: f64,
    pub s_lo: f64,
    pub s_hi: f64,
    /// `μ + 1` for zero-adjacent pieces, 1 for plain ones.
    pub radical_index: u32,
}

impl RadicalPiece {
    pub fn new(kind: PieceKind, t: (f64, f64), s: (f64, f64), radical_index: u32) -> Result<Self> {
        if !(t.0 < t.1) || !(s.0 < s.1) {
            return Err(Error::InvalidBreakpoints("piece bounds must be strictly increasing"));
        }
        if radical_index == 0 || (radical_index == 1) != (kind == PieceKind::Plain) {
            return Err(Error::InvalidBreakpoints("radical index must be 1 exactly on plain pieces"));
        }
        Ok(Self { kind, t_lo: t.0, t_hi: t.1, s_lo: s.0, s_hi: s.1, radical_index })
    }

    fn local(&self, s: f64) -> f64 {
        ((s - self.s_lo) / (self.s_hi - self.s_lo)).clamp(0.0, 1.0)
    }

    pub fn eval(&self, s: f64) -> f64 {
        if s <= self.s_lo {
            return self.t_lo;
        }
        if s >= self.s_hi {
            return self.t_hi;
        }
        let u = self.local(s);
        let dt = self.t_hi - self.t_lo;
        match self.kind {
            PieceKind::LeftZero => self.t_lo + dt * root(u, self.radical_index),
            PieceKind::RightZero => self.t_lo + dt * (1.0 - root(1.0 - u, self.radical_index)),
            PieceKind::Plain => self.t_lo + dt * u,
        }
    }

    /// `dφ/ds`; infinite at the zero-side endpoint when the index exceeds 1.
    pub fn derivative(&self, s: f64) -> f64 {
        let u = self.local(s);
        let k = self.radical_index as f64;
        let slope = (self.t_hi - self.t_lo) / (k * (self.s_hi - self.s_lo));
        match self.kind {
            PieceKind::LeftZero => slope * u.powf(1.0 / k - 1.0),
            PieceKind::RightZero => slope * (1.0 - u).powf(1.0 / k - 1.0),
            PieceKind::Plain => slope,
        }
    }

    pub fn inverse(&self, t: f64) -> f64 {
        if t <= self.t_lo {
            return self.s_lo;
        }
        if t >= self.t_hi {
            return self.s_hi;
        }
        let v = (t - self.t_lo) / (self.t_hi - self.t_lo);
        let k = self.radical_index as i32;
        let u = match self.kind {
            PieceKind::LeftZero => v.powi(k),
            PieceKind::RightZero => 1.0 - (1.0 - v).powi(k),
            PieceKind::Plain => v,
        };
        self.s_lo + (self.s_hi - self.s_lo) * u
    }
}

/// One piece of `m`, mapping `[z_lo, z_hi]` onto `[s_lo, s_hi]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MoebiusPiece {
    pub z_lo: f64,
    pub z_hi: f64,
    pub s_lo: f64,
    pub s_hi: f64,
    pub alpha: f64,
}

impl MoebiusPiece {
    pub fn new(z: (f64, f64), s: (f64, f64), alpha: f64, index: usize) -> Result<Self> {
        if !(z.0 < z.1) || !(s.0 < s.1) {
            return Err(Error::InvalidBreakpoints("piece bounds must be strictly increasing"));
        }
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::InvalidAlpha { index, alpha });
        }
        Ok(Self { z_lo: z.0, z_hi: z.1, s_lo: s.0, s_hi: s.1, alpha })
    }

    fn local(&self, z: f64) -> f64 {
        ((z - self.z_lo) / (self.z_hi - self.z_lo)).clamp(0.0, 1.0)
    }

    pub fn eval(&self, z: f64) -> f64 {
        if z <= self.z_lo {
            return self.s_lo;
        }
        if z >= self.z_hi {
            return self.s_hi;
        }
        let w = self.local(z);
        let a = self.alpha;
        let num = (1.0 - a) * w;
        self.s_lo + (self.s_hi - self.s_lo) * num / (num + a * (1.0 - w))
    }

    pub fn derivative(&self, z: f64) -> f64 {
        let w = self.local(z);
        let a = self.alpha;
        let den = (1.0 - a) * w + a * (1.0 - w);
        (self.s_hi - self.s_lo) / (self.z_hi - self.z_lo) * a * (1.0 - a) / (den * den)
    }

    pub fn inverse(&self, s: f64) -> f64 {
        if s <= self.s_lo {
            return self.z_lo;
        }
        if s >= self.s_hi {
            return self.z_hi;
        }
        let u = (s - self.s_lo) / (self.s_hi - self.s_lo);
        let a = self.alpha;
        let w = a * u / (a * u + (1.0 - a) * (1.0 - u));
        self.z_lo + (self.z_hi - self.z_lo) * w
    }

    /// `(a, b, c, d)` with `(m(z) − s_lo)/(s_hi − s_lo) = (a z + b)/(c z + d)`.
    pub fn local_coefficients(&self) -> [f64; 4] {
        let a = self.alpha;
        [1.0 - a, -(1.0 - a) * self.z_lo, 1.0 - 2.0 * a, a * self.z_hi - (1.0 - a) * self.z_lo]
    }
}

/// `φ_i ∘ m_i` on `[z_lo, z_hi]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComposedPiece {
    pub radical: RadicalPiece,
    pub moebius: MoebiusPiece,
}

/// `x ↦ offset + scale · ((a x + b)/(c x + d))^{1/index}` on one piece.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedForm {
    pub offset: f64,
    pub scale: f64,
    pub index: u32,
    pub numerator: [f64; 2],
    pub denominator: [f64; 2],
}

impl ClosedForm {
    pub fn eval(&self, x: f64) -> f64 {
        let inner = (self.numerator[0] * x + self.numerator[1]) / (self.denominator[0] * x + self.denominator[1]);
        self.offset + self.scale * root(inner.max(0.0), self.index)
    }
}

/// Inner fraction for a radical piece given the local parameter as `(a x + b)/(c x + d)`.
fn radical_closed_form(r: &RadicalPiece, local: [f64; 4]) -> ClosedForm {
    let [a, b, c, d] = local;
    let dt = r.t_hi - r.t_lo;
    match r.kind {
        PieceKind::RightZero => ClosedForm {
            offset: r.t_hi,
            scale: -dt,
            index: r.radical_index,
            numerator: [c - a, d - b],
            denominator: [c, d],
        },
        _ => ClosedForm { offset: r.t_lo, scale: dt, index: r.radical_index, numerator: [a, b], denominator: [c, d] },
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Piece {
    Radical(RadicalPiece),
    Moebius(MoebiusPiece),
    Composed(ComposedPiece),
}

impl Piece {
    pub fn domain(&self) -> (f64, f64) {
        match self {
            Piece::Radical(r) => (r.s_lo, r.s_hi),
            Piece::Moebius(m) => (m.z_lo, m.z_hi),
            Piece::Composed(c) => (c.moebius.z_lo, c.moebius.z_hi),
        }
    }

    pub fn range(&self) -> (f64, f64) {
        match self {
            Piece::Radical(r) => (r.t_lo, r.t_hi),
            Piece::Moebius(m) => (m.s_lo, m.s_hi),
            Piece::Composed(c) => (c.radical.t_lo, c.radical.t_hi),
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Piece::Radical(r) => r.eval(x),
            Piece::Moebius(m) => m.eval(x),
            Piece::Composed(c) => c.radical.eval(c.moebius.eval(x)),
        }
    }

    pub fn derivative(&self, x: f64) -> f64 {
        match self {
            Piece::Radical(r) => r.derivative(x),
            Piece::Moebius(m) => m.derivative(x),
            Piece::Composed(c) => c.radical.derivative(c.moebius.eval(x)) * c.moebius.derivative(x),
        }
    }

    pub fn inverse(&self, y: f64) -> f64 {
        match self {
            Piece::Radical(r) => r.inverse(y),
            Piece::Moebius(m) => m.inverse(y),
            Piece::Composed(c) => c.moebius.inverse(c.radical.inverse(y)),
        }
    }

    /// Radical index of the piece (1 for Möbius pieces).
    pub fn radical_index(&self) -> u32 {
        match self {
            Piece::Radical(r) => r.radical_index,
            Piece::Moebius(_) => 1,
            Piece::Composed(c) => c.radical.radical_index,
        }
    }

    pub fn closed_form(&self) -> ClosedForm {
        match self {
            Piece::Radical(r) => {
                let ds = r.s_hi - r.s_lo;
                radical_closed_form(r, [1.0 / ds, -r.s_lo / ds, 0.0, 1.0])
            }
            Piece::Moebius(m) => {
                let [a, b, c, d] = m.local_coefficients();
                ClosedForm { offset: m.s_lo, scale: m.s_hi - m.s_lo, index: 1, numerator: [a, b], denominator: [c, d] }
            }
            Piece::Composed(c) => radical_closed_form(&c.radical, c.moebius.local_coefficients()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PiecewiseTransform {
    pieces: Vec<Piece>,
    breakpoints: Vec<f64>,
}

impl PiecewiseTransform {
    /// Checks that domains tile `[0, 1]` and ranges tile `[0, 1]` in order.
    pub fn new(pieces: Vec<Piece>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::InvalidBreakpoints("a transform needs at least one piece"));
        }
        let mut breakpoints = Vec::with_capacity(pieces.len() + 1);
        breakpoints.push(pieces[0].domain().0);
        let mut range_end = pieces[0].range().0;
        for (i, piece) in pieces.iter().enumerate() {
            let (d, r) = (piece.domain(), piece.range());
            if d.0 != breakpoints[i] || !(d.0 < d.1) {
                return Err(Error::InvalidBreakpoints("piece domains must tile [0, 1]"));
            }
            if r.0 != range_end || !(r.0 < r.1) {
                return Err(Error::PieceMismatch { index: i });
            }
            breakpoints.push(d.1);
            range_end = r.1;
        }
        if breakpoints[0] != 0.0 || breakpoints[pieces.len()] != 1.0 {
            return Err(Error::InvalidBreakpoints("piece domains must tile [0, 1]"));
        }
        if pieces[0].range().0 != 0.0 || range_end != 1.0 {
            return Err(Error::PieceMismatch { index: 0 });
        }
        Ok(Self { pieces, breakpoints })
    }

    pub fn identity() -> Self {
        let piece = RadicalPiece::new(PieceKind::Plain, (0.0, 1.0), (0.0, 1.0), 1).expect("valid");
        Self { pieces: alloc::vec![Piece::Radical(piece)], breakpoints: alloc::vec![0.0, 1.0] }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn is_identity(&self) -> bool {
        match self.pieces.as_slice() {
            [Piece::Radical(r)] => r.kind == PieceKind::Plain,
            [Piece::Moebius(m)] => m.alpha == 0.5,
            _ => false,
        }
    }

    /// Index of the piece used at `x` from the given side.
    pub fn piece_index(&self, x: f64, side: Side) -> Result<usize> {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::DomainError { x });
        }
        let inner = &self.breakpoints[1..];
        let i = match side {
            Side::Right => inner.partition_point(|&b| b <= x),
            Side::Left => inner.partition_point(|&b| b < x),
        };
        Ok(i.min(self.pieces.len() - 1))
    }

    pub fn evaluate(&self, x: f64) -> Result<f64> {
        let i = self.piece_index(x, Side::Right)?;
        Ok(self.pieces[i].eval(x))
    }

    pub fn evaluate_derivative(&self, x: f64, side: Side) -> Result<f64> {
        let i = self.piece_index(x, side)?;
        let d = self.pieces[i].derivative(x);
        if d.is_finite() {
            Ok(d)
        } else {
            Err(Error::SingularDerivative { x })
        }
    }

    pub fn inverse(&self, y: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&y) {
            return Err(Error::DomainError { x: y });
        }
        let i = self.pieces.partition_point(|p| p.range().1 <= y).min(self.pieces.len() - 1);
        Ok(self.pieces[i].inverse(y))
    }
}

/// `φ` mapping `S` onto the breakpoints of `T`.
pub fn build_radical(t: &Partition, s: &[f64]) -> Result<PiecewiseTransform> {
    check_breakpoints(s, t.points().len())?;
    let pieces = (0..t.piece_count())
        .map(|i| {
            let (t_lo, t_hi, kind, mu) = t.piece(i);
            RadicalPiece::new(kind, (t_lo, t_hi), (s[i], s[i + 1]), mu + 1).map(Piece::Radical)
        })
        .collect::<Result<Vec<_>>>()?;
    PiecewiseTransform::new(pieces)
}

/// `m` mapping `Z` onto `S` with one shape parameter per piece.
pub fn build_moebius(s: &[f64], z: &[f64], alpha: &[f64]) -> Result<PiecewiseTransform> {
    check_breakpoints(s, s.len())?;
    check_breakpoints(z, s.len())?;
    if alpha.len() + 1 != s.len() {
        return Err(Error::InvalidBreakpoints("one alpha per piece is required"));
    }
    let pieces = alpha
        .iter()
        .enumerate()
        .map(|(i, &a)| MoebiusPiece::new((z[i], z[i + 1]), (s[i], s[i + 1]), a, i).map(Piece::Moebius))
        .collect::<Result<Vec<_>>>()?;
    PiecewiseTransform::new(pieces)
}

fn check_breakpoints(b: &[f64], len: usize) -> Result<()> {
    if b.len() != len || b.len() < 2 {
        return Err(Error::InvalidBreakpoints("breakpoint sequence has the wrong length"));
    }
    if b[0] != 0.0 || b[b.len() - 1] != 1.0 {
        return Err(Error::InvalidBreakpoints("breakpoints must start at 0 and end at 1"));
    }
    if b.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidBreakpoints("breakpoints must be strictly increasing"));
    }
    Ok(())
}

/// `r = φ ∘ m`, piece by piece.
pub fn compose(phi: &PiecewiseTransform, m: &PiecewiseTransform) -> Result<PiecewiseTransform> {
    if phi.is_identity() {
        return Ok(m.clone());
    }
    if m.is_identity() {
        return Ok(phi.clone());
    }
    if phi.pieces.len() != m.pieces.len() {
        return Err(Error::PieceMismatch { index: phi.pieces.len().min(m.pieces.len()) });
    }
    let pieces = phi
        .pieces
        .iter()
        .zip(&m.pieces)
        .enumerate()
        .map(|(i, pair)| match pair {
            (Piece::Radical(radical), Piece::Moebius(moebius))
                if moebius.s_lo == radical.s_lo && moebius.s_hi == radical.s_hi =>
            {
                Ok(Piece::Composed(ComposedPiece { radical: *radical, moebius: *moebius }))
            }
            _ => Err(Error::PieceMismatch { index: i }),
        })
        .collect::<Result<Vec<_>>>()?;
    PiecewiseTransform::new(pieces)
}

/// Angular speed of `p ∘ tr` at `x` (right-hand value at breakpoints).
pub fn reparameterized_omega(p: &ParametricCurve, tr: &PiecewiseTransform, x: f64) -> Result<f64> {
    reparameterized_omega_sided(p, tr, x, Side::Right)
}

/// One-sided angular speed of `p ∘ tr`. Radical pieces use the cancelled
/// form `Δt^{μ+1}/(kΔs) · ζ̃(φ(s)) · s̃^{(μ+1)/k − 1}`, finite at the zero.
pub fn reparameterized_omega_sided(p: &ParametricCurve, tr: &PiecewiseTransform, x: f64, side: Side) -> Result<f64> {
    let i = tr.piece_index(x, side)?;
    Ok(match &tr.pieces[i] {
        Piece::Radical(r) => radical_omega(p, r, x),
        Piece::Moebius(m) => p.omega(m.eval(x)) * m.derivative(x),
        Piece::Composed(c) => radical_omega(p, &c.radical, c.moebius.eval(x)) * c.moebius.derivative(x),
    })
}

fn radical_omega(p: &ParametricCurve, r: &RadicalPiece, s: f64) -> f64 {
    let t = r.eval(s);
    let (anchor, u) = match r.kind {
        PieceKind::Plain => return p.omega(t) * r.derivative(s),
        PieceKind::LeftZero => (r.t_lo, r.local(s)),
        PieceKind::RightZero => (r.t_hi, 1.0 - r.local(s)),
    };
    let Some(zero) = p.zero_near(anchor, ZERO_MATCH) else {
        return p.omega(t) * r.derivative(s);
    };
    let k = r.radical_index as f64;
    let mu1 = zero.order as f64 + 1.0;
    let dt = r.t_hi - r.t_lo;
    let exponent = mu1 / k - 1.0;
    let tail = if exponent == 0.0 { 1.0 } else { u.powf(exponent) };
    dt.powf(mu1) / (k * (r.s_hi - r.s_lo)) * p.zeta_tilde(zero, t) * tail
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rational, Polynomial};
    use alloc::vec;

    fn cubic() -> ParametricCurve {
        ParametricCurve::new(vec![Polynomial::t().into(), Polynomial::from_ints(&[0, 0, 0, 1]).into()]).unwrap()
    }

    fn cubic_r() -> (PiecewiseTransform, PiecewiseTransform, PiecewiseTransform) {
        let t = Partition::new(vec![0.0, 0.4386913376508308, 1.0], vec![1, 0, 0]).unwrap();
        let s = [0.0, 0.40616883, 1.0];
        let z = [0.0, 0.41855554, 1.0];
        let phi = build_radical(&t, &s).unwrap();
        let m = build_moebius(&s, &z, &[0.53589838, 0.64320728]).unwrap();
        let r = compose(&phi, &m).unwrap();
        (phi, m, r)
    }

    #[test]
    fn single_piece_square_root() {
        let t = Partition::new(vec![0.0, 1.0], vec![1, 0]).unwrap();
        let phi = build_radical(&t, &[0.0, 1.0]).unwrap();
        assert_eq!(phi.evaluate(0.25).unwrap(), 0.5);
        assert!((phi.evaluate_derivative(0.25, Side::Right).unwrap() - 1.0).abs() < 1e-15);
        assert!(matches!(phi.evaluate_derivative(0.0, Side::Right), Err(Error::SingularDerivative { .. })));
        let p = cubic();
        for i in 0..=20 {
            let s = i as f64 / 20.0;
            let w = reparameterized_omega(&p, &phi, s).unwrap();
            assert!((w - 3.0 / (9.0 * s * s + 1.0)).abs() < 1e-12, "s = {s}");
        }
    }

    #[test]
    fn plain_identity() {
        let t = Partition::new(vec![0.0, 1.0], vec![0, 0]).unwrap();
        let phi = build_radical(&t, &[0.0, 1.0]).unwrap();
        assert!(phi.is_identity());
        assert_eq!(phi.evaluate(0.37).unwrap(), 0.37);
        assert_eq!(PiecewiseTransform::identity().evaluate(0.37).unwrap(), 0.37);
    }

    #[test]
    fn running_example_phi_pieces() {
        let (phi, _, _) = cubic_r();
        let s = 0.2;
        assert!((phi.evaluate(s).unwrap() - 0.688 * s.sqrt()).abs() < 2e-3);
        let s = 0.7;
        assert!((phi.evaluate(s).unwrap() - (0.055 + 0.945 * s)).abs() < 2e-3);
    }

    #[test]
    fn moebius_midpoint_and_affine() {
        let m = build_moebius(&[0.0, 1.0], &[0.0, 1.0], &[0.536]).unwrap();
        assert!((m.evaluate(0.5).unwrap() - 0.464).abs() < 1e-12);
        let a = build_moebius(&[0.0, 0.3, 1.0], &[0.0, 0.6, 1.0], &[0.5, 0.5]).unwrap();
        assert!((a.evaluate(0.3).unwrap() - 0.15).abs() < 1e-15);
        assert!((a.evaluate(0.8).unwrap() - 0.65).abs() < 1e-15);
        let d = a.pieces()[0].derivative(0.0);
        assert!((d - 0.5).abs() < 1e-15);
    }

    #[test]
    fn moebius_derivative_at_left_end() {
        let m = MoebiusPiece::new((0.2, 0.7), (0.1, 0.4), 0.3, 0).unwrap();
        assert!((m.derivative(0.2) - 0.3 / 0.5 * 0.7 / 0.3).abs() < 1e-14);
    }

    #[test]
    fn invalid_inputs() {
        let t = Partition::new(vec![0.0, 0.5, 1.0], vec![1, 0, 0]).unwrap();
        assert!(matches!(build_radical(&t, &[0.0, 1.0]), Err(Error::InvalidBreakpoints(_))));
        assert!(matches!(build_radical(&t, &[0.0, 0.7, 0.6]), Err(Error::InvalidBreakpoints(_))));
        assert!(matches!(
            build_moebius(&[0.0, 1.0], &[0.0, 1.0], &[1.0]),
            Err(Error::InvalidAlpha { index: 0, .. })
        ));
        assert!(matches!(
            build_moebius(&[0.0, 1.0], &[0.0, 1.0], &[0.0]),
            Err(Error::InvalidAlpha { .. })
        ));
        let phi = build_radical(&t, &[0.0, 0.5, 1.0]).unwrap();
        let m = build_moebius(&[0.0, 0.4, 1.0], &[0.0, 0.5, 1.0], &[0.3, 0.6]).unwrap();
        assert!(matches!(compose(&phi, &m), Err(Error::PieceMismatch { index: 0 })));
        assert!(matches!(phi.evaluate(1.5), Err(Error::DomainError { .. })));
        assert!(matches!(phi.evaluate(-0.1), Err(Error::DomainError { .. })));
    }

    #[test]
    fn composed_running_example() {
        let (_, m, r) = cubic_r();
        assert_eq!(r.evaluate(0.0).unwrap(), 0.0);
        assert_eq!(r.evaluate(1.0).unwrap(), 1.0);
        assert!((r.evaluate(0.419).unwrap() - 0.4387).abs() < 2e-3);
        assert!((m.evaluate(0.419).unwrap() - 0.406).abs() < 1e-3);
        for &z in &[0.05, 0.2, 0.35] {
            let shown = 0.462 * (-z / (0.172 * z - 0.536)).sqrt();
            assert!((r.evaluate(z).unwrap() - shown).abs() < 3e-3, "z = {z}");
        }
        let w0 = reparameterized_omega(&cubic(), &r, 0.0).unwrap();
        assert!((w0 - 0.781 / 0.655).abs() < 5e-3);
    }

    #[test]
    fn composition_with_identity() {
        let (phi, m, _) = cubic_r();
        assert_eq!(compose(&PiecewiseTransform::identity(), &m).unwrap(), m);
        assert_eq!(compose(&phi, &PiecewiseTransform::identity()).unwrap(), phi);
    }

    #[test]
    fn closed_forms_match_evaluation() {
        let (phi, m, r) = cubic_r();
        let t = Partition::new(vec![0.0, 0.3, 1.0], vec![0, 2, 0]).unwrap();
        let right = build_radical(&t, &[0.0, 0.45, 1.0]).unwrap();
        for tr in [&phi, &m, &r, &right] {
            for i in 0..=50 {
                let x = i as f64 / 50.0;
                let j = tr.piece_index(x, Side::Right).unwrap();
                let cf = tr.pieces()[j].closed_form();
                assert!((cf.eval(x) - tr.evaluate(x).unwrap()).abs() < 1e-12, "x = {x}");
            }
        }
    }

    #[test]
    fn one_sided_breakpoint_values() {
        let (_, _, r) = cubic_r();
        let p = cubic();
        let z1 = r.breakpoints()[1];
        let left = reparameterized_omega_sided(&p, &r, z1, Side::Left).unwrap();
        let right = reparameterized_omega_sided(&p, &r, z1, Side::Right).unwrap();
        assert!(left > 0.0 && right > 0.0);
        assert_eq!(right, reparameterized_omega(&p, &r, z1).unwrap());
        assert!((r.pieces()[0].eval(z1) - r.pieces()[1].eval(z1)).abs() < 1e-12);
    }

    #[test]
    fn inverse_round_trip() {
        let (phi, m, r) = cubic_r();
        for tr in [&phi, &m, &r] {
            for i in 0..=100 {
                let x = i as f64 / 100.0;
                let y = tr.evaluate(x).unwrap();
                assert!((tr.inverse(y).unwrap() - x).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn right_zero_cancelled_form() {
        // (t, (t - 1)^3): zero of order 1 at t = 1
        let y = Polynomial::linear_root(&rational(1, 1)).pow(3);
        let p = ParametricCurve::new(vec![Polynomial::t().into(), y.into()]).unwrap();
        let t = Partition::new(vec![0.0, 1.0], vec![0, 1]).unwrap();
        let phi = build_radical(&t, &[0.0, 1.0]).unwrap();
        for i in 0..=10 {
            let s = i as f64 / 10.0;
            // mirror image of the cubic with φ(s) = √s
            let expected = 3.0 / (9.0 * (1.0 - s) * (1.0 - s) + 1.0);
            assert!((reparameterized_omega(&p, &phi, s).unwrap() - expected).abs() < 1e-12);
        }
    }
}
