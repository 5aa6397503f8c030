//! Linear Poisson structures on `𝔤*`, a small library of Lie algebras, and
//! a Chevalley–Eilenberg cohomology oracle.

mod ce;
mod constants;

pub use ce::{ce_cohomology, ce_differential, CeModule};
pub use constants::{builtin, linear_poisson, StructureConstants, BUILTIN_NAMES};

use crate::cohomology::GradedPoisson;
use crate::error::Result;

/// The linear structure of `c` graded with `p = 1`, even when all brackets
/// vanish.
pub fn linear_graded(c: &StructureConstants) -> Result<GradedPoisson> {
    GradedPoisson::with_degree(linear_poisson(c), 1)
}
