//! Exact polynomial algebra: rationals, sparse polynomials, the text
//! grammar, and alternating tensors for multivectors and forms.

mod monomial;
mod parse;
mod poisson;
mod polynomial;
pub mod rational;
mod tensor;

pub use monomial::{monomial_count, Monomial};
pub use parse::{parse_poly, validate_var_names};
pub use poisson::{JacobiStatus, PoissonStructure};
pub use polynomial::Polynomial;
pub use rational::{format_rational, parse_rational, Rational};
pub use tensor::{
    contract_form, contract_vector, pairing, sort_with_sign, AltTensor, Covectors, Form, Indices,
    Multivector, TensorKind, Vectors,
};
