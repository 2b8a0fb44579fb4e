//! Piecewise radical reparameterization of rational parametric curves.
//!
//! A rational curve whose angular speed vanishes somewhere on `[0, 1]` cannot
//! be made uniform by any rational change of parameter, because the angular
//! speed of `p ∘ r` is `(ω_p ∘ r) · r'` and a bounded `r'` keeps the zeros.
//! This crate builds a piecewise *radical* transformation `φ` that cancels
//! those zeros, chooses its breakpoints optimally, and then composes it with
//! an optimal piecewise Möbius transformation `m`, yielding `r = φ ∘ m`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is a pure function of
//! immutable values:
//!
//! * [`algebra`]: exact polynomials over ℚ, square-free decomposition, real root
//!   isolation with multiplicities, Euclidean quotients.
//! * [`curve`]: the curve, its angular speed `ω_p`, zero multiplicities and
//!   the uniformity `u_p`.
//! * [`quadrature`]: adaptive Gauss–Kronrod integration with endpoint
//!   singularity removal.
//! * [`partition`]: the breakpoint sequence `T` (zeros and extrema of `ω_p`).
//! * [`transforms`]: radical, Möbius and composed piecewise maps.
//! * [`optimizer`]: closed-form optimal `S`, `α` and `Z`.
//! * [`pipeline`]: the end-to-end driver.
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod curve;
mod error;
pub mod optimizer;
pub mod partition;
pub mod pipeline;
pub mod quadrature;
pub mod transforms;

pub use algebra::{IsolatedRoot, Polynomial, RationalFunction};
pub use curve::{AngularSpeedData, ParametricCurve, UniformityReport};
pub use error::{Error, Result};
pub use optimizer::{OptimizationResult, PieceIntegrals};
pub use partition::{Partition, PieceKind};
pub use pipeline::{optimal_radical_transformation, PipelineOptions, Reparameterization};
pub use transforms::PiecewiseTransform;

/// Exact rational number used for all polynomial coefficients.
pub type Rational = num_rational::BigRational;

/// Default quadrature tolerance (absolute).
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Default width of the root brackets behind [`IsolatedRoot::value`].
pub const DEFAULT_ROOT_TOLERANCE: f64 = 1e-12;
