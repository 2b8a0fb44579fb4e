//! Breakpoint sequence `T`: zeros and local extrema of `ω_p` plus `0` and `1`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{isolate_roots, Polynomial};
use crate::curve::ParametricCurve;
use crate::error::{Error, Result};
use crate::Rational;

/// Candidate points closer than this are the same breakpoint.
const MERGE_DISTANCE: f64 = 1e-10;

/// Which end of a piece, if any, is a zero of `ω_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PieceKind {
    LeftZero,
    RightZero,
    Plain,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Partition {
    points: Vec<f64>,
    multiplicities: Vec<u32>,
    kinds: Vec<PieceKind>,
}

impl Partition {
    /// Validates ordering, the exact `0`/`1` endpoints and that no piece has a
    /// zero of `ω_p` at both ends. `multiplicities[i]` is `mult(ω_p, t_i)`.
    pub fn new(points: Vec<f64>, multiplicities: Vec<u32>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidBreakpoints("a partition needs at least two points"));
        }
        if points.len() != multiplicities.len() {
            return Err(Error::InvalidBreakpoints("one multiplicity per breakpoint is required"));
        }
        if points[0] != 0.0 || points[points.len() - 1] != 1.0 {
            return Err(Error::InvalidBreakpoints("partition must start at 0 and end at 1"));
        }
        if points.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidBreakpoints("breakpoints must be strictly increasing"));
        }
        let mut kinds = Vec::with_capacity(points.len() - 1);
        for w in multiplicities.windows(2) {
            kinds.push(match (w[0] > 0, w[1] > 0) {
                (true, true) => {
                    return Err(Error::InvalidBreakpoints("two adjacent breakpoints are both zeros"))
                }
                (true, false) => PieceKind::LeftZero,
                (false, true) => PieceKind::RightZero,
                (false, false) => PieceKind::Plain,
            });
        }
        Ok(Self { points, multiplicities, kinds })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn kinds(&self) -> &[PieceKind] {
        &self.kinds
    }

    pub fn piece_count(&self) -> usize {
        self.kinds.len()
    }

    /// `(t_lo, t_hi, kind, μ)` where `μ` is the order of the adjacent zero
    /// (0 for plain pieces).
    pub fn piece(&self, i: usize) -> (f64, f64, PieceKind, u32) {
        let kind = self.kinds[i];
        let mu = match kind {
            PieceKind::LeftZero => self.multiplicities[i],
            PieceKind::RightZero => self.multiplicities[i + 1],
            PieceKind::Plain => 0,
        };
        (self.points[i], self.points[i + 1], kind, mu)
    }

    /// Splits every piece into `extra + 1` equal parts. Inserted points are
    /// not zeros, so zero-adjacent pieces stay zero-adjacent.
    pub fn with_extra_breakpoints(&self, extra: usize) -> Self {
        if extra == 0 {
            return self.clone();
        }
        let mut points = Vec::with_capacity(self.piece_count() * (extra + 1) + 1);
        let mut multiplicities = Vec::with_capacity(points.capacity());
        for i in 0..self.piece_count() {
            let (a, b) = (self.points[i], self.points[i + 1]);
            points.push(a);
            multiplicities.push(self.multiplicities[i]);
            for k in 1..=extra {
                points.push(a + (b - a) * k as f64 / (extra + 1) as f64);
                multiplicities.push(0);
            }
        }
        points.push(1.0);
        multiplicities.push(*self.multiplicities.last().expect("nonempty"));
        Self::new(points, multiplicities).expect("subdivision keeps partition invariants")
    }
}

/// Numerator of `d(ω_p²)/dt = (F'·D − 2F·D') / D³` with `D = Σ X_i²`.
///
/// Its roots in `(0, 1)` are the interior zeros of `ω_p` (multiplicity `2μ − 1`)
/// together with the critical points of `ω_p`.
pub fn omega_prime_numerator(p: &ParametricCurve) -> Result<Polynomial> {
    if p.is_line() {
        return Err(Error::DegenerateLine);
    }
    let (f, d) = (p.f(), p.denom());
    Ok(&(&f.derivative() * d) - &(&f.scale(&Rational::from_integer(2.into())) * &d.derivative()))
}

/// `T` from the zeros and extrema of `ω_p`.
pub fn build_partition(p: &ParametricCurve) -> Result<Partition> {
    build_partition_with(p, 0)
}

/// [`build_partition`] followed by [`Partition::with_extra_breakpoints`].
pub fn build_partition_with(p: &ParametricCurve, extra: usize) -> Result<Partition> {
    let numerator = omega_prime_numerator(p)?;
    let mut candidates: Vec<(f64, u32)> = p.zeros().iter().map(|z| (z.location(), z.order)).collect();
    if !numerator.is_zero() {
        let crit = isolate_roots(&numerator, &Rational::zero(), &Rational::one(), p.root_tolerance())?;
        candidates.extend(crit.iter().map(|r| (r.value, 0)));
    }
    candidates.push((0.0, 0));
    candidates.push((1.0, 0));
    candidates.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut points: Vec<f64> = Vec::with_capacity(candidates.len());
    let mut mults: Vec<u32> = Vec::with_capacity(candidates.len());
    for (t, m) in candidates {
        let t = t.clamp(0.0, 1.0);
        match points.last() {
            Some(&last) if t - last <= MERGE_DISTANCE => {
                let k = mults.len() - 1;
                mults[k] = mults[k].max(m);
            }
            _ => {
                points.push(t);
                mults.push(m);
            }
        }
    }
    // Snap the merged end clusters onto the exact endpoints.
    points[0] = 0.0;
    let n = points.len();
    if n >= 2 && 1.0 - points[n - 2] <= MERGE_DISTANCE {
        let m = mults[n - 1].max(mults[n - 2]);
        points.truncate(n - 1);
        mults.truncate(n - 1);
        mults[n - 2] = m;
    }
    let last = points.len() - 1;
    points[last] = 1.0;

    // Rolle guarantees an extremum between two zeros; guard anyway.
    let mut i = 0;
    while i + 1 < points.len() {
        if mults[i] > 0 && mults[i + 1] > 0 {
            points.insert(i + 1, 0.5 * (points[i] + points[i + 1]));
            mults.insert(i + 1, 0);
        }
        i += 1;
    }
    Ok(Partition::new(points, mults)?.with_extra_breakpoints(extra))
}
