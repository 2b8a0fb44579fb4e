use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An operation that needs a nonzero polynomial received zero.
    ZeroPolynomial,
    /// The curve has a pole or a vanishing hodograph inside `[lo, hi] ⊂ [0, 1]`.
    SingularCurve { lo: f64, hi: f64 },
    /// A real root of `F` inside `[0, 1]` has odd multiplicity.
    MalformedF { root: f64, multiplicity: u32 },
    /// The angular speed vanishes identically (the curve is a straight line).
    DegenerateLine,
    /// Adaptive quadrature ran out of budget; carries the best estimate.
    QuadratureError { estimate: f64, error: f64, evaluations: usize },
    /// A declared endpoint exponent at or below `-1`.
    NonIntegrable { exponent: f64 },
    /// A root approximation leaves a Euclidean remainder above the allowed size.
    IllConditionedRoot { root: f64, remainder: f64 },
    InvalidCurve(&'static str),
    InvalidBreakpoints(&'static str),
    InvalidAlpha { index: usize, alpha: f64 },
    PieceMismatch { index: usize },
    DomainError { x: f64 },
    SingularDerivative { x: f64 },
    DegeneratePiece { index: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPolynomial => f.write_str("ZeroPolynomial: operation undefined for the zero polynomial"),
            Error::SingularCurve { lo, hi } => {
                write!(f, "SingularCurve: curve is not regular in [{lo}, {hi}]")
            }
            Error::MalformedF { root, multiplicity } => write!(
                f,
                "MalformedF: root {root} of F has odd multiplicity {multiplicity}"
            ),
            Error::DegenerateLine => f.write_str("DegenerateLine: angular speed is identically zero"),
            Error::QuadratureError { estimate, error, evaluations } => write!(
                f,
                "QuadratureError: no convergence after {evaluations} evaluations \
                 (estimate {estimate}, error {error})"
            ),
            Error::NonIntegrable { exponent } => {
                write!(f, "NonIntegrable: endpoint exponent {exponent} is not above -1")
            }
            Error::IllConditionedRoot { root, remainder } => write!(
                f,
                "IllConditionedRoot: root approximation {root} leaves remainder {remainder}"
            ),
            Error::InvalidCurve(why) => write!(f, "InvalidCurve: {why}"),
            Error::InvalidBreakpoints(why) => write!(f, "InvalidBreakpoints: {why}"),
            Error::InvalidAlpha { index, alpha } => {
                write!(f, "InvalidAlpha: alpha[{index}] = {alpha} is outside (0, 1)")
            }
            Error::PieceMismatch { index } => {
                write!(f, "PieceMismatch: piece {index} ranges do not line up")
            }
            Error::DomainError { x } => write!(f, "DomainError: {x} is outside [0, 1]"),
            Error::SingularDerivative { x } => {
                write!(f, "SingularDerivative: derivative is unbounded at {x}")
            }
            Error::DegeneratePiece { index } => {
                write!(f, "DegeneratePiece: piece {index} has a nonpositive integral")
            }
        }
    }
}

impl core::error::Error for Error {}
