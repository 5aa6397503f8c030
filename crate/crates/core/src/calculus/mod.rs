//! Bracket calculus on polynomial multivectors and forms.
//!
//! Every sign-sensitive formula reads from [`CONVENTION`]; the property
//! tests in this module and in `tests/identities.rs` pin the identities the
//! conventions must satisfy.

mod bracket;
mod convention;

pub use bracket::{lie_derivative, schouten, LieDerivative};
pub use convention::{cone_map_sign, SignConvention, CONVENTION};

use crate::error::{check_dim, Error, Result};
use crate::polyalg::{pairing, Form, Multivector, Polynomial, PoissonStructure};

/// Exterior derivative.
pub fn de_rham_d(omega: &Form) -> Form {
    let n = omega.dim();
    let mut out = Form::zero(n, omega.grade() + 1);
    for (idx, c) in omega.components() {
        for j in 0..n {
            if idx.contains(&j) {
                continue;
            }
            let dc = c.partial_derivative(j);
            if dc.is_zero() {
                continue;
            }
            let mut key = Vec::with_capacity(idx.len() + 1);
            key.push(j);
            key.extend_from_slice(idx);
            out = &out + &Form::basis(n, &key, dc);
        }
    }
    out
}

/// `π^{ij}` as a full antisymmetric matrix of functions.
pub fn bivector_matrix(pi: &Multivector) -> Vec<Vec<Polynomial>> {
    assert_eq!(pi.grade(), 2);
    let n = pi.dim();
    let mut m = vec![vec![Polynomial::zero(n); n]; n];
    for (idx, c) in pi.components() {
        let (i, j) = (idx[0], idx[1]);
        m[i][j] = c.clone();
        m[j][i] = -c;
    }
    m
}

/// Images `π♯(dx_i)` of the coordinate 1-forms.
pub fn sharp_of_coordinates(pi: &Multivector) -> Vec<Multivector> {
    bivector_matrix(pi)
        .into_iter()
        .map(Multivector::from_components)
        .collect()
}

/// The anchor `π♯` extended multiplicatively to k-forms; identity on functions.
pub fn sharp(pi: &PoissonStructure, omega: &Form) -> Result<Multivector> {
    sharp_bivector(pi.bivector(), omega)
}

/// [`sharp`] for a bare bivector (no Jacobi requirement).
pub fn sharp_bivector(pi: &Multivector, omega: &Form) -> Result<Multivector> {
    check_dim(pi.dim(), omega.dim())?;
    let images = sharp_of_coordinates(pi);
    Ok(sharp_with(&images, omega))
}

pub(crate) fn sharp_with(images: &[Multivector], omega: &Form) -> Multivector {
    let n = omega.dim();
    let mut out = Multivector::zero(n, omega.grade());
    'terms: for (idx, c) in omega.components() {
        let mut acc = Multivector::scalar(c.clone());
        for &i in idx {
            acc = acc.wedge_unchecked(&images[i]);
            if acc.is_zero() {
                continue 'terms;
            }
        }
        out = &out + &acc;
    }
    out
}

/// Hamiltonian vector field `X_f = π♯(df)`.
pub fn hamiltonian(pi: &PoissonStructure, f: &Polynomial) -> Result<Multivector> {
    sharp(pi, &de_rham_d(&Form::scalar(f.clone())))
}

/// `π(α, β) = ⟨β, π♯α⟩` for 1-forms.
pub fn evaluate_bivector(pi: &PoissonStructure, alpha: &Form, beta: &Form) -> Result<Polynomial> {
    pairing(beta, &sharp(pi, alpha)?)
}

/// Lichnerowicz differential `d_π V = [π, V]`.
pub fn lichnerowicz_d(pi: &PoissonStructure, v: &Multivector) -> Result<Multivector> {
    pi.require_verified()?;
    check_dim(pi.dim(), v.dim())?;
    Ok(bracket::schouten_unchecked(pi.bivector(), v))
}

/// Koszul bracket `[η₁,η₂]_π = L_{π♯η₁}η₂ − L_{π♯η₂}η₁ − d(π(η₁,η₂))`.
pub fn koszul_bracket(pi: &PoissonStructure, eta1: &Form, eta2: &Form) -> Result<Form> {
    pi.require_verified()?;
    for eta in [eta1, eta2] {
        check_dim(pi.dim(), eta.dim())?;
        if eta.grade() != 1 {
            return Err(Error::InvalidGrade("Koszul bracket takes 1-forms".into()));
        }
    }
    let x1 = sharp(pi, eta1)?;
    let x2 = sharp(pi, eta2)?;
    let l1 = lie_derivative(&x1, eta2)?;
    let l2 = lie_derivative(&x2, eta1)?;
    let pi12 = pairing(eta2, &x1)?;
    Ok(&(&l1 - &l2) - &de_rham_d(&Form::scalar(pi12)))
}

/// `true` iff `[π,π]` is the zero 3-vector.
pub fn jacobi_check(pi: &Multivector) -> bool {
    assert_eq!(pi.grade(), 2, "jacobi_check expects a bivector");
    bracket::schouten_unchecked(pi, pi).is_zero()
}

/// The obstruction `[π,π]`.
pub fn jacobiator(pi: &Multivector) -> Multivector {
    bracket::schouten_unchecked(pi, pi)
}

/// Euler vector field `Σ x_i ∂_i`.
pub fn euler_field(n: usize) -> Multivector {
    Multivector::from_components((0..n).map(|i| Polynomial::var(n, i)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// `L_E π = s·π`.
    Weight(i64),
    NotHomogeneous,
}

/// Homogeneity of `π` under the Euler field: `s = p − 2` for coefficients of
/// common degree `p`, and `s = 0` for `π = 0`.
pub fn euler_homogeneity(pi: &PoissonStructure) -> Homogeneity {
    let b = pi.bivector();
    if b.is_zero() {
        return Homogeneity::Weight(0);
    }
    let Some(p) = b.homogeneous_degree() else {
        return Homogeneity::NotHomogeneous;
    };
    let s = i64::from(p) - 2;
    let lie = bracket::schouten_unchecked(&euler_field(b.dim()), b);
    debug_assert_eq!(lie, b.scale(&crate::polyalg::rational::int(s)));
    Homogeneity::Weight(s)
}
