//! Alternating tensors with polynomial coefficients: multivector fields and
//! differential forms.
//!
//! Both kinds share one representation. A grade-`k` tensor maps strictly
//! increasing index tuples `(i_1 < ... < i_k)` to nonzero polynomials; the
//! tuple stands for `∂_{i_1}∧…∧∂_{i_k}` or `dx_{i_1}∧…∧dx_{i_k}`. The kind is
//! a type parameter, so mixing vectors and forms is a compile error.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use num_traits::One;

use super::polynomial::Polynomial;
use super::rational::Rational;
use crate::error::{check_dim, Error, Result};

pub trait TensorKind: Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    /// Symbol printed for a basis direction, e.g. `d` for `dx`.
    const SYMBOL: &'static str;
    const NAME: &'static str;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vectors;
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covectors;

impl TensorKind for Vectors {
    const SYMBOL: &'static str = "∂";
    const NAME: &'static str = "multivector";
}

impl TensorKind for Covectors {
    const SYMBOL: &'static str = "d";
    const NAME: &'static str = "form";
}

pub type Indices = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltTensor<K: TensorKind> {
    dim: usize,
    grade: usize,
    coeffs: BTreeMap<Indices, Polynomial>,
    _kind: PhantomData<K>,
}

pub type Multivector = AltTensor<Vectors>;
pub type Form = AltTensor<Covectors>;

/// Sorts `idx` in place and returns the permutation sign, or `None` when an
/// index repeats.
pub fn sort_with_sign(idx: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

impl<K: TensorKind> AltTensor<K> {
    pub fn zero(dim: usize, grade: usize) -> Self {
        AltTensor {
            dim,
            grade,
            coeffs: BTreeMap::new(),
            _kind: PhantomData,
        }
    }

    /// Grade-0 tensor holding a single function.
    pub fn scalar(f: Polynomial) -> Self {
        let mut t = Self::zero(f.nvars(), 0);
        t.add_component(Vec::new(), f);
        t
    }

    /// `coeff · e_{i_1}∧…∧e_{i_k}` for indices in any order; repeated
    /// indices give zero, and the sorting sign is applied to `coeff`.
    pub fn basis(dim: usize, indices: &[usize], coeff: Polynomial) -> Self {
        assert!(indices.iter().all(|&i| i < dim), "basis index out of range");
        assert_eq!(coeff.nvars(), dim);
        let mut idx = indices.to_vec();
        let mut t = Self::zero(dim, idx.len());
        if let Some(sign) = sort_with_sign(&mut idx) {
            let c = if sign < 0 { -&coeff } else { coeff };
            t.add_component(idx, c);
        }
        t
    }

    /// Grade-1 tensor from its `n` component functions.
    pub fn from_components(components: Vec<Polynomial>) -> Self {
        let dim = components.len();
        let mut t = Self::zero(dim, 1);
        for (i, c) in components.into_iter().enumerate() {
            assert_eq!(c.nvars(), dim);
            t.add_component(vec![i], c);
        }
        t
    }

    /// Builds from `(indices, coefficient)` pairs with arbitrary index order.
    pub fn from_entries<I>(dim: usize, grade: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (Indices, Polynomial)>,
    {
        let mut t = Self::zero(dim, grade);
        for (idx, c) in entries {
            assert_eq!(idx.len(), grade, "entry grade mismatch");
            t = &t + &Self::basis(dim, &idx, c);
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Stored components in ascending index order.
    pub fn components(&self) -> impl Iterator<Item = (&Indices, &Polynomial)> {
        self.coeffs.iter()
    }

    /// Coefficient on a strictly increasing index tuple.
    pub fn coeff(&self, idx: &[usize]) -> Polynomial {
        self.coeffs
            .get(idx)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.dim))
    }

    /// The function of a grade-0 tensor.
    pub fn as_scalar(&self) -> Polynomial {
        assert_eq!(self.grade, 0, "as_scalar on a grade-{} tensor", self.grade);
        self.coeff(&[])
    }

    /// Component `i` of a grade-1 tensor.
    pub fn component(&self, i: usize) -> Polynomial {
        assert_eq!(self.grade, 1);
        self.coeff(&[i])
    }

    pub(crate) fn add_component(&mut self, idx: Indices, c: Polynomial) {
        debug_assert!(idx.windows(2).all(|w| w[0] < w[1]));
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(idx) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(s))
    }

    pub fn mul_function(&self, f: &Polynomial) -> Self {
        self.map_coeffs(|c| c * f)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        let mut out = Self::zero(self.dim, self.grade);
        for (idx, c) in &self.coeffs {
            out.add_component(idx.clone(), f(c));
        }
        out
    }

    /// Componentwise `∂/∂x_i` of the coefficients.
    pub fn partial_derivative(&self, i: usize) -> Self {
        self.map_coeffs(|c| c.partial_derivative(i))
    }

    /// Common total degree of all coefficients, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.coeffs.values().map(Polynomial::homogeneous_degree);
        let first = degs.next()??;
        degs.all(|d| d == Some(first)).then_some(first)
    }

    /// Largest coefficient degree, `-1` for zero.
    pub fn degree(&self) -> i64 {
        self.coeffs.values().map(Polynomial::degree).max().unwrap_or(-1)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(self + other)
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        check_dim(self.dim, other.dim)?;
        if self.grade != other.grade {
            return Err(Error::InvalidGrade(format!(
                "cannot add grade {} and grade {}",
                self.grade, other.grade
            )));
        }
        Ok(())
    }

    /// Exterior product. Grades above the dimension give canonical zero.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        Ok(self.wedge_unchecked(other))
    }

    pub(crate) fn wedge_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.dim, self.grade + other.grade);
        for (ia, ca) in &self.coeffs {
            for (ib, cb) in &other.coeffs {
                let mut idx: Indices = ia.iter().chain(ib).copied().collect();
                if let Some(sign) = sort_with_sign(&mut idx) {
                    let prod = ca * cb;
                    out.add_component(idx, if sign < 0 { -&prod } else { prod });
                }
            }
        }
        out
    }

    /// Interior product with a grade-1 tensor of the dual kind, inserted in
    /// the first slot: `i(e_{i_1}∧…∧e_{i_k}) = Σ_s (−1)^{s−1} ⟨·, e_{i_s}⟩ e_{i_1}∧…ê_{i_s}…`.
    pub fn contract_with(&self, pairing: &[Polynomial]) -> Result<Self> {
        check_dim(self.dim, pairing.len())?;
        if self.grade == 0 {
            return Err(Error::InvalidGrade("contraction of a grade-0 tensor".into()));
        }
        let mut out = Self::zero(self.dim, self.grade - 1);
        for (idx, c) in &self.coeffs {
            for (s, &i) in idx.iter().enumerate() {
                if pairing[i].is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(s);
                let term = c * &pairing[i];
                out.add_component(rest, if s % 2 == 1 { -&term } else { term });
            }
        }
        Ok(out)
    }

    /// Canonical text: `[[i,…], "poly"]` pairs with 1-based indices.
    pub fn to_string_with<S: AsRef<str>>(&self, names: &[S]) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(idx, c)| {
                let dirs: Vec<String> = idx
                    .iter()
                    .map(|&i| format!("{}{}", K::SYMBOL, names[i].as_ref()))
                    .collect();
                let basis = if dirs.is_empty() { "1".into() } else { dirs.join("∧") };
                format!("({})·{}", c.to_string_with(names), basis)
            })
            .collect();
        parts.join(" + ")
    }
}

impl<K: TensorKind> fmt::Display for AltTensor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.dim).map(|i| format!("x{i}")).collect();
        f.write_str(&self.to_string_with(&names))
    }
}

impl<K: TensorKind> std::ops::Add for &AltTensor<K> {
    type Output = AltTensor<K>;
    fn add(self, rhs: &AltTensor<K>) -> AltTensor<K> {
        assert_eq!(self.dim, rhs.dim, "tensor dimension mismatch");
        assert_eq!(self.grade, rhs.grade, "tensor grade mismatch");
        let mut out = self.clone();
        for (idx, c) in &rhs.coeffs {
            out.add_component(idx.clone(), c.clone());
        }
        out
    }
}

impl<K: TensorKind> std::ops::Sub for &AltTensor<K> {
    type Output = AltTensor<K>;
    fn sub(self, rhs: &AltTensor<K>) -> AltTensor<K> {
        self + &(-rhs)
    }
}

impl<K: TensorKind> std::ops::Neg for &AltTensor<K> {
    type Output = AltTensor<K>;
    fn neg(self) -> AltTensor<K> {
        self.scale(&-Rational::one())
    }
}

impl<K: TensorKind> std::ops::Add for AltTensor<K> {
    type Output = AltTensor<K>;
    fn add(self, rhs: AltTensor<K>) -> AltTensor<K> {
        &self + &rhs
    }
}

impl<K: TensorKind> std::ops::Sub for AltTensor<K> {
    type Output = AltTensor<K>;
    fn sub(self, rhs: AltTensor<K>) -> AltTensor<K> {
        &self - &rhs
    }
}

impl<K: TensorKind> std::ops::Neg for AltTensor<K> {
    type Output = AltTensor<K>;
    fn neg(self) -> AltTensor<K> {
        -&self
    }
}

/// `i_α V` for a 1-form `α` and a multivector `V`.
pub fn contract_form(alpha: &Form, v: &Multivector) -> Result<Multivector> {
    grade_one(alpha.grade())?;
    check_dim(v.dim(), alpha.dim())?;
    v.contract_with(&grade_one_components(alpha))
}

/// `i_X ω` for a vector field `X` and a form `ω`.
pub fn contract_vector(x: &Multivector, omega: &Form) -> Result<Form> {
    grade_one(x.grade())?;
    check_dim(omega.dim(), x.dim())?;
    omega.contract_with(&grade_one_components(x))
}

/// `⟨α, X⟩` as a function.
pub fn pairing(alpha: &Form, x: &Multivector) -> Result<Polynomial> {
    Ok(contract_vector(x, alpha)?.as_scalar())
}

fn grade_one(k: usize) -> Result<()> {
    if k == 1 {
        Ok(())
    } else {
        Err(Error::InvalidGrade(format!("expected a grade-1 argument, got grade {k}")))
    }
}

pub(crate) fn grade_one_components<K: TensorKind>(t: &AltTensor<K>) -> Vec<Polynomial> {
    (0..t.dim()).map(|i| t.coeff(&[i])).collect()
}
