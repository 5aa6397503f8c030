use crate::error::{check_dim, Error, Result};
use crate::polyalg::{contract_vector, AltTensor, Form, Multivector, Vectors};

/// Right odd derivative `∂ᵣ/∂ξ_i` of a multivector.
fn odd_derivative(p: &Multivector, i: usize) -> Multivector {
    let k = p.grade();
    let mut out = Multivector::zero(p.dim(), k.saturating_sub(1));
    if k == 0 {
        return out;
    }
    for (idx, c) in p.components() {
        if let Some(s) = idx.iter().position(|&j| j == i) {
            let mut rest = idx.clone();
            rest.remove(s);
            let sign_neg = (k - 1 - s) % 2 == 1;
            out.add_component(rest, if sign_neg { -c } else { c.clone() });
        }
    }
    out
}

/// Schouten–Nijenhuis bracket of a `p`-vector and a `q`-vector.
pub fn schouten(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    check_dim(a.dim(), b.dim())?;
    let (p, q) = (a.grade(), b.grade());
    if p + q == 0 {
        return Err(Error::InvalidGrade("Schouten bracket of two functions".into()));
    }
    Ok(schouten_unchecked(a, b))
}

pub(crate) fn schouten_unchecked(a: &Multivector, b: &Multivector) -> Multivector {
    let (p, q) = (a.grade(), b.grade());
    let n = a.dim();
    let mut out = Multivector::zero(n, p + q - 1);
    // (−1)^{(p−1)(q−1)} is −1 exactly when p and q are both even
    let sym_neg = p % 2 == 0 && q % 2 == 0;
    for i in 0..n {
        if p > 0 {
            let da = odd_derivative(a, i);
            if !da.is_zero() {
                out = &out + &da.wedge_unchecked(&b.partial_derivative(i));
            }
        }
        if q > 0 {
            let db = odd_derivative(b, i);
            if !db.is_zero() {
                let t = db.wedge_unchecked(&a.partial_derivative(i));
                out = if sym_neg { &out + &t } else { &out - &t };
            }
        }
    }
    out
}

/// Tensors that admit a Lie derivative along a vector field.
pub trait LieDerivative: Sized {
    fn lie_derivative_along(&self, x: &Multivector) -> Result<Self>;
}

impl LieDerivative for AltTensor<Vectors> {
    /// `L_X t = [X, t]`.
    fn lie_derivative_along(&self, x: &Multivector) -> Result<Self> {
        require_vector_field(x)?;
        schouten(x, self)
    }
}

impl LieDerivative for Form {
    /// Cartan: `L_X ω = d i_X ω + i_X dω`.
    fn lie_derivative_along(&self, x: &Multivector) -> Result<Self> {
        require_vector_field(x)?;
        check_dim(self.dim(), x.dim())?;
        let tail = contract_vector(x, &super::de_rham_d(self))?;
        if self.grade() == 0 {
            return Ok(tail);
        }
        let head = super::de_rham_d(&contract_vector(x, self)?);
        Ok(&head + &tail)
    }
}

/// `L_X t` for a multivector or a form `t`.
pub fn lie_derivative<T: LieDerivative>(x: &Multivector, t: &T) -> Result<T> {
    t.lie_derivative_along(x)
}

fn require_vector_field(x: &Multivector) -> Result<()> {
    if x.grade() == 1 {
        Ok(())
    } else {
        Err(Error::InvalidGrade(format!(
            "Lie derivative along a grade-{} multivector",
            x.grade()
        )))
    }
}
