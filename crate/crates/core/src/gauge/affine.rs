use num_traits::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::polyalg::{AltTensor, Form, Multivector, Polynomial, Rational, TensorKind};

/// `φ(x) = A x + b` with `A` invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    matrix: Vec<Vec<Rational>>,
    translation: Vec<Rational>,
}

impl AffineMap {
    pub fn new(matrix: Vec<Vec<Rational>>, translation: Vec<Rational>) -> Result<Self> {
        let n = matrix.len();
        for row in &matrix {
            check_dim(n, row.len())?;
        }
        check_dim(n, translation.len())?;
        if determinant(&matrix).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(AffineMap {
            matrix,
            translation,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::linear(identity_matrix(n)).expect("identity is invertible")
    }

    /// `x ↦ A x`.
    pub fn linear(matrix: Vec<Vec<Rational>>) -> Result<Self> {
        let n = matrix.len();
        Self::new(matrix, vec![Rational::zero(); n])
    }

    pub fn translation_by(b: Vec<Rational>) -> Self {
        Self::new(identity_matrix(b.len()), b).expect("identity is invertible")
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn translation(&self) -> &[Rational] {
        &self.translation
    }

    pub fn determinant(&self) -> Rational {
        determinant(&self.matrix)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim())
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.matrix
            .iter()
            .zip(&self.translation)
            .map(|(row, b)| row.iter().zip(x).fold(b.clone(), |acc, (a, xi)| acc + a * xi))
            .collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineMap) -> Result<AffineMap> {
        check_dim(self.dim(), other.dim())?;
        let matrix = mat_mul(&self.matrix, &other.matrix);
        let translation = self.apply(&other.translation);
        Ok(AffineMap {
            matrix,
            translation,
        })
    }

    pub fn inverse(&self) -> AffineMap {
        let inv = mat_inverse(&self.matrix).expect("affine maps hold invertible matrices");
        let tb: Vec<Rational> = inv
            .iter()
            .map(|row| -row.iter().zip(&self.translation).fold(Rational::zero(), |a, (m, b)| a + m * b))
            .collect();
        AffineMap {
            matrix: inv,
            translation: tb,
        }
    }

    /// Component functions `φ_i(x)`.
    pub fn coordinate_images(&self) -> Vec<Polynomial> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut p = Polynomial::constant(n, self.translation[i].clone());
                for j in 0..n {
                    p += &Polynomial::var(n, j).scale(&self.matrix[i][j]);
                }
                p
            })
            .collect()
    }

    /// `f ∘ φ`.
    pub fn pullback_function(&self, f: &Polynomial) -> Polynomial {
        f.substitute(&self.coordinate_images())
    }

    /// `φ*ω`: coefficients composed with `φ`, `dx_i ↦ Σ_j A_ij dx_j`.
    pub fn pullback_form(&self, omega: &Form) -> Result<Form> {
        check_dim(self.dim(), omega.dim())?;
        let images = self.coordinate_images();
        let frame: Vec<Form> = self
            .matrix
            .iter()
            .map(|row| Form::from_components(row.iter().map(|a| Polynomial::constant(self.dim(), a.clone())).collect()))
            .collect();
        Ok(transport(omega, &frame, |c| c.substitute(&images)))
    }

    /// `φ_*ω = (φ⁻¹)*ω`.
    pub fn pushforward_form(&self, omega: &Form) -> Result<Form> {
        self.inverse().pullback_form(omega)
    }

    /// `φ_*V`: coefficients composed with `φ⁻¹`, `∂_j ↦ Σ_i A_ij ∂_i`.
    /// On bivectors this is `Π ↦ A Π(φ⁻¹ y) Aᵀ`.
    pub fn pushforward_multivector(&self, v: &Multivector) -> Result<Multivector> {
        check_dim(self.dim(), v.dim())?;
        let n = self.dim();
        let back = self.inverse().coordinate_images();
        let frame: Vec<Multivector> = (0..n)
            .map(|j| {
                Multivector::from_components(
                    (0..n)
                        .map(|i| Polynomial::constant(n, self.matrix[i][j].clone()))
                        .collect(),
                )
            })
            .collect();
        Ok(transport(v, &frame, |c| c.substitute(&back)))
    }

    pub fn pullback_multivector(&self, v: &Multivector) -> Result<Multivector> {
        self.inverse().pushforward_multivector(v)
    }
}

/// Rewrites each basis element `e_I` as the wedge of `frame[i]`, `i ∈ I`,
/// with coefficients mapped by `coeff`.
fn transport<K: TensorKind>(
    t: &AltTensor<K>,
    frame: &[AltTensor<K>],
    coeff: impl Fn(&Polynomial) -> Polynomial,
) -> AltTensor<K> {
    let mut out = AltTensor::zero(t.dim(), t.grade());
    'terms: for (idx, c) in t.components() {
        let mut acc = AltTensor::scalar(coeff(c));
        for &i in idx {
            acc = acc.wedge_unchecked(&frame[i]);
            if acc.is_zero() {
                continue 'terms;
            }
        }
        out = &out + &acc;
    }
    out
}

pub(crate) fn identity_matrix(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Gauss–Jordan inverse; `None` when singular.
fn mat_inverse(a: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(identity_matrix(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let prow = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&prow) {
                    *x = &*x - &f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

fn determinant(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            m.swap(col, piv);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let f = &m[r][col] / &p;
                let prow = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&prow) {
                    *x = &*x - &f * y;
                }
            }
        }
    }
    det
}
