//! Exact scalar arithmetic, sparse matrices, linear solvers and subalgebras.

mod matrix;
mod poly;
mod scalar;
mod solve;
mod span;
mod subalgebra;

pub use matrix::{bracket, nilpotent_exp, trace_form, GroupElement, SquareMatrix};
pub use poly::Poly;
pub use scalar::{format_scalar, parse_scalar, q, Ring, Scalar};
pub use solve::{rank, solve_linear, AffineSolution};
pub use span::{SparseVec, Span};
pub use subalgebra::{solvable_radical, subalgebra_closure, Subalgebra};
