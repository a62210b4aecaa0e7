//! Exact construction and verification of Yang–Baxter solutions for `sl(n)`.
//!
//! Everything is computed over the rationals (or polynomials in a formal
//! parameter `t` with rational coefficients), so every identity checked by
//! this crate is checked exactly.
//!
//! * [`exact`]: scalars, sparse matrices, linear solvers, subalgebras.
//! * [`tensor`]: sparse tensors on `gl(n)^{⊗2}` / `gl(n)^{⊗3}`, the
//!   Yang–Baxter bracket, CYBE / MCYBE predicates and the JSON format.
//! * [`bd`]: admissible triples and the `γ + β + α` assembly of MCYBE solutions.
//! * [`boundary`]: nilpotent orbit expansions, boundary solutions, carriers,
//!   parabolics, cohomology and the string machinery.
//! * [`qybe`]: Kronecker matrices and quantum Yang–Baxter verification.

pub mod bd;
pub mod boundary;
pub mod error;
pub mod exact;
pub mod exec;
pub mod qybe;
pub mod report;
pub mod tensor;

pub use error::{Error, Result};
pub use exact::{Poly, Ring, Scalar, SquareMatrix};
pub use tensor::{Tensor2, Tensor3};
