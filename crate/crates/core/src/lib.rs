//! Exact symbolic calculus for polynomial Poisson structures on ℝⁿ.
//!
//! The crate computes the Picard Lie algebra `pic = H¹(π♯)` of a
//! homogeneous polynomial Poisson bivector as the first cohomology of the
//! mapping cone of `π♯ : (Ω•, d) → (𝔛•, d_π)`, one weight slice at a time,
//! with exact rational linear algebra throughout.
//!
//! - [`polyalg`]: polynomials over ℚ, multivectors, forms, the text grammar.
//! - [`calculus`]: Schouten bracket, `d`, Lie derivatives, `d_π`, `π♯`,
//!   the Koszul bracket, Jacobi and Euler checks.
//! - [`gauge`]: gauge transformations, the group of (affine map, closed
//!   2-form) pairs, its Lie algebra and the ideal of exact pairs.
//! - [`cohomology`]: weight-graded slices, ranks, `pic` and the long exact
//!   sequence checks.
//! - [`liealg`]: linear Poisson structures and an independent
//!   Chevalley–Eilenberg oracle.

pub mod calculus;
pub mod cohomology;
pub mod error;
pub mod gauge;
pub mod liealg;
pub mod linalg;
pub mod polyalg;

pub use error::{Error, Result};
