use crate::calculus::{
    de_rham_d, lie_derivative, schouten, sharp_bivector, sharp_of_coordinates,
};
use crate::error::{check_dim, Error, Result};
use crate::polyalg::{contract_vector, Form, Multivector, PoissonStructure};

/// An element `(Z, β)` of `𝔛¹ ⋉ Ω²`; membership in `𝔤_π` is checked by
/// [`inf_pair_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfGaugePair {
    pub z: Multivector,
    pub beta: Form,
}

impl InfGaugePair {
    pub fn new(z: Multivector, beta: Form) -> Result<Self> {
        check_dim(z.dim(), beta.dim())?;
        if z.grade() != 1 || beta.grade() != 2 {
            return Err(Error::InvalidGrade(format!(
                "expected (vector field, 2-form), got grades ({}, {})",
                z.grade(),
                beta.grade()
            )));
        }
        Ok(InfGaugePair { z, beta })
    }

    pub fn zero(n: usize) -> Self {
        InfGaugePair {
            z: Multivector::zero(n, 1),
            beta: Form::zero(n, 2),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.z.is_zero() && self.beta.is_zero()
    }
}

impl std::ops::Sub for &InfGaugePair {
    type Output = InfGaugePair;
    fn sub(self, rhs: &InfGaugePair) -> InfGaugePair {
        InfGaugePair {
            z: &self.z - &rhs.z,
            beta: &self.beta - &rhs.beta,
        }
    }
}

impl std::ops::Add for &InfGaugePair {
    type Output = InfGaugePair;
    fn add(self, rhs: &InfGaugePair) -> InfGaugePair {
        InfGaugePair {
            z: &self.z + &rhs.z,
            beta: &self.beta + &rhs.beta,
        }
    }
}

/// `dβ = 0` and `L_Z π = π♯β`.
pub fn inf_pair_check(z: &Multivector, beta: &Form, pi: &PoissonStructure) -> bool {
    if z.grade() != 1 || beta.grade() != 2 || z.dim() != pi.dim() || beta.dim() != pi.dim() {
        return false;
    }
    if !de_rham_d(beta).is_zero() {
        return false;
    }
    let lie = schouten(z, pi.bivector()).expect("shapes checked");
    let image = sharp_bivector(pi.bivector(), beta).expect("shapes checked");
    lie == image
}

impl InfGaugePair {
    pub fn check(&self, pi: &PoissonStructure) -> bool {
        inf_pair_check(&self.z, &self.beta, pi)
    }
}

/// `[(Z₁,β₁),(Z₂,β₂)] = ([Z₁,Z₂], L_{Z₁}β₂ − L_{Z₂}β₁)`.
pub fn inf_bracket(
    p1: &InfGaugePair,
    p2: &InfGaugePair,
    pi: &PoissonStructure,
) -> Result<InfGaugePair> {
    for (name, p) in [("first", p1), ("second", p2)] {
        if !p.check(pi) {
            return Err(Error::InvalidPair(format!("{name} argument")));
        }
    }
    Ok(bracket_unchecked(p1, p2))
}

pub(crate) fn bracket_unchecked(p1: &InfGaugePair, p2: &InfGaugePair) -> InfGaugePair {
    let z = schouten(&p1.z, &p2.z).expect("vector fields");
    let beta = &lie_derivative(&p1.z, &p2.beta).expect("vector field")
        - &lie_derivative(&p2.z, &p1.beta).expect("vector field");
    InfGaugePair { z, beta }
}

/// `η ↦ (π♯η, dη)`, the ideal `ℑ ⊆ 𝔤_π`.
pub fn ideal_embed(eta: &Form, pi: &PoissonStructure) -> Result<InfGaugePair> {
    check_dim(pi.dim(), eta.dim())?;
    if eta.grade() != 1 {
        return Err(Error::InvalidGrade(format!("expected a 1-form, got grade {}", eta.grade())));
    }
    Ok(InfGaugePair {
        z: sharp_bivector(pi.bivector(), eta)?,
        beta: de_rham_d(eta),
    })
}

/// The 1-form `L_Z η − i_{π♯η} β` whose image under [`ideal_embed`] is
/// `[(Z,β), (π♯η, dη)]`.
pub fn ideal_bracket_potential(p: &InfGaugePair, eta: &Form, pi: &PoissonStructure) -> Result<Form> {
    let x = sharp_bivector(pi.bivector(), eta)?;
    Ok(&lie_derivative(&p.z, eta)? - &contract_vector(&x, &p.beta)?)
}

/// Grade 2: `i_{X_{x_i}} t = 0` for every coordinate. Grade 1: additionally
/// `L_{X_{x_i}} t = 0`. Closedness is not tested.
pub fn is_basic(t: &Form, pi: &PoissonStructure) -> Result<bool> {
    check_dim(pi.dim(), t.dim())?;
    if !(1..=2).contains(&t.grade()) {
        return Err(Error::InvalidGrade(format!(
            "basic forms are tested in grades 1 and 2, got {}",
            t.grade()
        )));
    }
    for x in sharp_of_coordinates(pi.bivector()) {
        if !contract_vector(&x, t)?.is_zero() {
            return Ok(false);
        }
        if t.grade() == 1 && !lie_derivative(&x, t)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::euler_field;
    use crate::polyalg::{parse_poly, Polynomial};

    fn p(s: &str, n: usize) -> Polynomial {
        let names = ["x", "y", "z"];
        parse_poly(s, n, &names[..n]).unwrap()
    }

    fn so3() -> PoissonStructure {
        PoissonStructure::verified(Multivector::from_entries(
            3,
            2,
            [
                (vec![0, 1], p("z", 3)),
                (vec![1, 2], p("x", 3)),
                (vec![2, 0], p("y", 3)),
            ],
        ))
        .unwrap()
    }

    #[test]
    fn pair_check_examples() {
        let pi = so3();
        let zero = InfGaugePair::zero(3);
        assert!(zero.check(&pi));
        assert!(!inf_pair_check(&euler_field(3), &Form::zero(3, 2), &pi));
        let eta = Form::from_components(vec![p("x*y", 3), p("z", 3), p("1", 3)]);
        assert!(ideal_embed(&eta, &pi).unwrap().check(&pi));
    }

    #[test]
    fn ideal_examples() {
        let pi = so3();
        assert!(ideal_embed(&Form::zero(3, 1), &pi).unwrap().is_zero());
        let dx = Form::basis(3, &[0], p("1", 3));
        let got = ideal_embed(&dx, &pi).unwrap();
        assert_eq!(got.z, Multivector::from_components(vec![p("0", 3), p("z", 3), p("-y", 3)]));
        assert!(got.beta.is_zero());
    }

    #[test]
    fn bracket_examples() {
        let pi = PoissonStructure::zero(2);
        let z = Multivector::from_components(vec![p("y", 2), p("0", 2)]);
        let beta = Form::basis(2, &[0, 1], p("x", 2));
        let a = InfGaugePair::new(z.clone(), Form::zero(2, 2)).unwrap();
        let b = InfGaugePair::new(Multivector::zero(2, 1), beta.clone()).unwrap();
        let r = inf_bracket(&a, &b, &pi).unwrap();
        assert!(r.z.is_zero());
        assert_eq!(r.beta, lie_derivative(&z, &beta).unwrap());
        assert!(inf_bracket(&a, &a, &pi).unwrap().is_zero());
    }

    #[test]
    fn basic_examples() {
        let pi = PoissonStructure::verified(Multivector::basis(3, &[0, 1], p("1", 3))).unwrap();
        assert!(is_basic(&Form::basis(3, &[2], p("1", 3)), &pi).unwrap());
        assert!(!is_basic(&Form::basis(3, &[0], p("1", 3)), &pi).unwrap());
        assert!(is_basic(&Form::basis(3, &[2], p("z^2", 3)), &pi).unwrap());
        assert!(!is_basic(&Form::basis(3, &[2], p("x", 3)), &pi).unwrap());
        let sym = PoissonStructure::verified(Multivector::basis(2, &[0, 1], p("1", 2))).unwrap();
        assert!(!is_basic(&Form::basis(2, &[0, 1], p("1", 2)), &sym).unwrap());
    }
}
