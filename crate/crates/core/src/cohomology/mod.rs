//! Weight-graded slices of the de Rham, Lichnerowicz, basic and
//! mapping-cone complexes, and the Picard Lie algebra `pic = H¹(cone)`.
//!
//! For `π` with coefficients of common degree `p`, a `k`-form with
//! coefficients of degree `d` has weight `d + k` and a `k`-vector has
//! weight `d + k(1 − p)`. `d`, `d_π` and `π♯` preserve weight, so each
//! complex splits into finite slices. Results are polynomial slices, not
//! smooth cohomology.

mod basis;
mod complex;
mod pic;

pub use basis::{
    enumerate_basis, slice_size, BasisElement, Cochain, ComplexKind, GradedPoisson, Part,
    SliceBasis, WeightGrading,
};
pub use complex::{
    basic_cohomology_dim, basic_forms, cohomology_dims, differential_matrix, verify_d_squared,
    CohomologyReport, ComplexSlice, SliceOptions, SliceResult,
};
pub use pic::{class_is_trivial, les_consistency, les_report, pic_dims, LesReport, PicSlice};
