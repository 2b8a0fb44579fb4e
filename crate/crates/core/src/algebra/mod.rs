//! Exact univariate algebra over ℚ.

mod poly;
mod rational_fn;
mod roots;

pub use poly::{FloatPoly, Polynomial};
pub use rational_fn::RationalFunction;
pub use roots::{
    euclidean_quotient, isolate_roots, rational, squarefree_decomposition, EuclideanQuotient,
    IsolatedRoot, SquareFreeDecomposition,
};

/// `d f / dt`.
pub fn differentiate(f: &Polynomial) -> Polynomial {
    f.derivative()
}
