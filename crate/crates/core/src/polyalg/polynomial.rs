//! Sparse multivariate polynomials over ℚ.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::rational::{format_rational, Rational};
use crate::error::{check_dim, Result};

/// A polynomial in `n` variables with exact rational coefficients.
///
/// Terms are keyed by exponent multi-index; zero coefficients are never
/// stored, so structural equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    /// The coordinate function `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        Self::monomial(Monomial::var(nvars, i), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    /// Builds from `(exponents, coefficient)` pairs; repeated keys accumulate.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "multi-index length must equal the dimension");
            p.add_term(Monomial::from_exponents(e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Constant term when the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Maximum total degree, `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .next_back()
            .map_or(-1, |m| i64::from(m.degree()))
    }

    /// `Some(d)` when every term has total degree `d`; `None` for mixed
    /// degrees and for the zero polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.nvars(), self.nvars);
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_scaled(&mut self, other: &Polynomial, s: &Rational) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * s);
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.nvars, other.nvars)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.nvars, other.nvars)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.nvars, other.nvars)?;
        Ok(self * other)
    }

    pub fn scale(&self, s: &Rational) -> Polynomial {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `∂/∂x_i` (0-based).
    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if let Some((e, lowered)) = m.lower(i) {
                out.add_term(lowered, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Substitutes `x_i ↦ images[i]`. The images share a dimension, which
    /// may differ from `self`'s.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images.first().map_or(0, Polynomial::nvars);
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(target), p.clone()])
            .collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            let v = m
                .exponents()
                .iter()
                .zip(point)
                .fold(c.clone(), |v, (&e, x)| v * num_traits::pow(x.clone(), e as usize));
            acc + v
        })
    }

    /// Canonical text with default variable names `x1..xn`.
    pub fn to_canonical_string(&self) -> String {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        self.to_string_with(&names)
    }

    /// Canonical serialization: terms in descending graded-lex order,
    /// coefficients as `num/den`, and `*` between every factor so the
    /// output parses back under the polynomial grammar.
    pub fn to_string_with<S: AsRef<str>>(&self, names: &[S]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .zip(names)
                .filter(|(e, _)| **e > 0)
                .map(|(&e, name)| {
                    if e == 1 {
                        name.as_ref().to_string()
                    } else {
                        format!("{}^{}", name.as_ref(), e)
                    }
                })
                .collect();
            if factors.is_empty() {
                out.push_str(&format_rational(&abs));
            } else {
                if !abs.is_one() {
                    out.push_str(&format_rational(&abs));
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

fn assert_same(a: &Polynomial, b: &Polynomial) {
    assert_eq!(
        a.nvars, b.nvars,
        "polynomial dimension mismatch ({} vs {})",
        a.nvars, b.nvars
    );
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_same(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_same(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_same(self, rhs);
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::ops::AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert_same(self, rhs);
        self.add_scaled(rhs, &Rational::one());
    }
}

impl std::ops::SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        assert_same(self, rhs);
        self.add_scaled(rhs, &-Rational::one());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rational::{int, ratio};

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn power_rule() {
        let p = x(1, 0).pow(2);
        assert_eq!(p.partial_derivative(0), x(1, 0).scale(&int(2)));
    }

    #[test]
    fn difference_of_squares() {
        let (a, b) = (x(2, 0), x(2, 1));
        let lhs = &(&a + &b) * &(&a - &b);
        let rhs = &a.pow(2) - &b.pow(2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn additive_inverse_is_zero() {
        let p = Polynomial::from_terms(3, [(vec![1, 2, 0], ratio(3, 7)), (vec![0, 0, 0], int(-2))]);
        assert!((&p + &p.scale(&int(-1))).is_zero());
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(Polynomial::zero(2).degree(), -1);
        assert_eq!(Polynomial::one(2).degree(), 0);
        assert_eq!(Polynomial::zero(2).homogeneous_degree(), None);
    }

    #[test]
    fn canonical_serialization() {
        let p = Polynomial::from_terms(3, [(vec![1, 1, 0], int(1)), (vec![0, 0, 1], int(-3))]);
        assert_eq!(p.to_string_with(&["x", "y", "z"]), "x*y - 3*z");
        let q = Polynomial::from_terms(2, [(vec![0, 2], ratio(1, 4)), (vec![0, 0], int(-1))]);
        assert_eq!(q.to_string_with(&["x", "y"]), "1/4*y^2 - 1");
        assert_eq!(Polynomial::zero(2).to_canonical_string(), "0");
    }

    #[test]
    fn mismatched_dimensions_are_rejected() {
        assert!(x(2, 0).checked_add(&x(3, 0)).is_err());
        assert!(x(2, 0).checked_mul(&x(3, 0)).is_err());
    }

    #[test]
    fn substitution_composes() {
        // p(x, y) = x*y, substitute x -> x + 1, y -> 2y
        let p = &x(2, 0) * &x(2, 1);
        let img = [&x(2, 0) + &Polynomial::one(2), x(2, 1).scale(&int(2))];
        let q = p.substitute(&img);
        let expect = &(&x(2, 0) * &x(2, 1)).scale(&int(2)) + &x(2, 1).scale(&int(2));
        assert_eq!(q, expect);
    }
}
