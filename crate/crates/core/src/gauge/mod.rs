//! Gauge transformations, the group of (affine map, closed 2-form) pairs
//! preserving a Poisson structure, and its infinitesimal counterpart.
//!
//! Diffeomorphisms are restricted to affine maps, which act polynomially on
//! polynomial tensors.

mod affine;
mod group;
mod infinitesimal;
mod transform;

pub use affine::AffineMap;
pub use group::{gauge_compose, is_member, GaugeElement};
pub use infinitesimal::{
    ideal_bracket_potential, ideal_embed, inf_bracket, inf_pair_check, is_basic, InfGaugePair,
};
pub use transform::{
    flat, gauge_determinant, gauge_transform, invert_bivector, invert_form, poly_determinant,
    poly_mat_inverse, poly_mat_mul, sharp_matrix, PolyMatrix,
};
