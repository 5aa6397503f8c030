use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::polyalg::{
    monomial_count, Form, Indices, Monomial, Multivector, PoissonStructure, Polynomial, Rational,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComplexKind {
    DeRham,
    Lichnerowicz,
    Cone,
    Basic,
}

impl ComplexKind {
    pub fn name(self) -> &'static str {
        match self {
            ComplexKind::DeRham => "derham",
            ComplexKind::Lichnerowicz => "lichnerowicz",
            ComplexKind::Cone => "cone",
            ComplexKind::Basic => "basic",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "derham" => ComplexKind::DeRham,
            "lichnerowicz" => ComplexKind::Lichnerowicz,
            "cone" => ComplexKind::Cone,
            "basic" => ComplexKind::Basic,
            _ => return None,
        })
    }

    pub(crate) fn needs_poisson(self) -> bool {
        !matches!(self, ComplexKind::DeRham)
    }
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `w_Ω(k,d) = d + k` and `w_𝔛(k,d) = d + k(1 − p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightGrading {
    pub p: u32,
}

impl WeightGrading {
    pub fn form_weight(&self, k: usize, d: u32) -> i64 {
        i64::from(d) + k as i64
    }

    pub fn vector_weight(&self, k: usize, d: u32) -> i64 {
        i64::from(d) + k as i64 * (1 - i64::from(self.p))
    }

    /// Coefficient degree of weight-`w` k-forms, if non-negative.
    pub fn form_degree(&self, k: usize, w: i64) -> Option<u32> {
        u32::try_from(w - k as i64).ok()
    }

    pub fn vector_degree(&self, k: usize, w: i64) -> Option<u32> {
        u32::try_from(w - k as i64 * (1 - i64::from(self.p))).ok()
    }
}

/// A Poisson structure with the weight grading its cohomology slices use.
#[derive(Debug, Clone)]
pub struct GradedPoisson {
    pi: PoissonStructure,
    p: Option<u32>,
}

impl GradedPoisson {
    /// Infers `p` from the coefficients; the zero bivector gets `p = 0`.
    /// Runs the Jacobi check so later operations see a definite verdict.
    pub fn new(pi: PoissonStructure) -> Self {
        pi.check();
        let b = pi.bivector();
        let p = if b.is_zero() { Some(0) } else { b.homogeneous_degree() };
        GradedPoisson { pi, p }
    }

    /// Fixes `p` explicitly, e.g. `p = 1` for a linear structure that
    /// happens to vanish.
    pub fn with_degree(pi: PoissonStructure, p: u32) -> Result<Self> {
        pi.check();
        let b = pi.bivector();
        if !b.is_zero() && b.homogeneous_degree() != Some(p) {
            return Err(Error::NotHomogeneous);
        }
        Ok(GradedPoisson { pi, p: Some(p) })
    }

    pub fn poisson(&self) -> &PoissonStructure {
        &self.pi
    }

    pub fn dim(&self) -> usize {
        self.pi.dim()
    }

    pub fn degree(&self) -> Option<u32> {
        self.p
    }

    pub fn grading(&self) -> Result<WeightGrading> {
        self.p.map(|p| WeightGrading { p }).ok_or(Error::NotHomogeneous)
    }

    /// Grading for complexes that only involve `d`: any `p` gives the same
    /// form weights.
    pub(crate) fn form_grading(&self) -> WeightGrading {
        WeightGrading { p: self.p.unwrap_or(0) }
    }

    pub(crate) fn require(&self, complex: ComplexKind) -> Result<WeightGrading> {
        if complex.needs_poisson() {
            let g = self.grading()?;
            self.pi.require_verified()?;
            Ok(g)
        } else {
            Ok(self.form_grading())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    Form,
    Vector,
}

/// One monomial cochain `x^m e_I` in a form or multivector component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisElement {
    pub part: Part,
    pub indices: Indices,
    pub monomial: Monomial,
}

/// A cochain decoded from slice coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    pub form: Option<Form>,
    pub vector: Option<Multivector>,
}

/// Ordered basis of one `(complex, k, w)` slice: the form component first,
/// then the multivector component; within each, index tuples in
/// lexicographic order and monomials in descending graded-lex order.
#[derive(Debug, Clone)]
pub struct SliceBasis {
    dim: usize,
    form_grade: Option<usize>,
    vector_grade: Option<usize>,
    elems: Vec<BasisElement>,
    index: HashMap<BasisElement, usize>,
}

fn index_tuples(n: usize, k: usize) -> Vec<Indices> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Indices, out: &mut Vec<Indices>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(n, k, 0, &mut Vec::new(), &mut out);
    }
    out
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

impl SliceBasis {
    fn new(dim: usize, form: Option<(usize, Option<u32>)>, vector: Option<(usize, Option<u32>)>) -> Self {
        let mut elems = Vec::new();
        for (part, spec) in [(Part::Form, form), (Part::Vector, vector)] {
            if let Some((k, Some(d))) = spec {
                let monos = Monomial::all_of_degree(dim, d);
                for idx in index_tuples(dim, k) {
                    for m in &monos {
                        elems.push(BasisElement {
                            part,
                            indices: idx.clone(),
                            monomial: m.clone(),
                        });
                    }
                }
            }
        }
        let index = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        SliceBasis {
            dim,
            form_grade: form.map(|f| f.0),
            vector_grade: vector.map(|v| v.0),
            elems,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[BasisElement] {
        &self.elems
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn form_grade(&self) -> Option<usize> {
        self.form_grade
    }

    pub fn vector_grade(&self) -> Option<usize> {
        self.vector_grade
    }

    fn encode_part<'a>(
        &self,
        part: Part,
        comps: impl Iterator<Item = (&'a Indices, &'a Polynomial)>,
        out: &mut Vec<(usize, Rational)>,
    ) -> Result<()> {
        for (idx, c) in comps {
            for (m, q) in c.terms() {
                let key = BasisElement {
                    part,
                    indices: idx.clone(),
                    monomial: m.clone(),
                };
                match self.index.get(&key) {
                    Some(&i) => out.push((i, q.clone())),
                    None => {
                        return Err(Error::Internal(format!(
                            "term {m:?} on {idx:?} lies outside the weight slice"
                        )))
                    }
                }
            }
        }
        Ok(())
    }

    /// Coordinates of `(form, vector)`; either part may be absent. Terms
    /// outside the slice are an error, which is how weight preservation is
    /// asserted.
    pub fn encode(&self, form: Option<&Form>, vector: Option<&Multivector>) -> Result<SparseVec> {
        let mut out = Vec::new();
        if let Some(f) = form {
            if Some(f.grade()) != self.form_grade && !f.is_zero() {
                return Err(Error::Internal("form grade does not match the slice".into()));
            }
            self.encode_part(Part::Form, f.components(), &mut out)?;
        }
        if let Some(v) = vector {
            if Some(v.grade()) != self.vector_grade && !v.is_zero() {
                return Err(Error::Internal("multivector grade does not match the slice".into()));
            }
            self.encode_part(Part::Vector, v.components(), &mut out)?;
        }
        out.sort_by_key(|(i, _)| *i);
        Ok(out)
    }

    pub fn decode(&self, v: &SparseVec) -> Cochain {
        let n = self.dim;
        let mut form = self.form_grade.map(|k| Form::zero(n, k));
        let mut vector = self.vector_grade.map(|k| Multivector::zero(n, k));
        for (i, q) in v {
            if q.is_zero() {
                continue;
            }
            let e = &self.elems[*i];
            let c = Polynomial::monomial(e.monomial.clone(), q.clone());
            match e.part {
                Part::Form => {
                    let f = form.as_mut().expect("form part present");
                    *f = &*f + &Form::basis(n, &e.indices, c);
                }
                Part::Vector => {
                    let x = vector.as_mut().expect("vector part present");
                    *x = &*x + &Multivector::basis(n, &e.indices, c);
                }
            }
        }
        Cochain { form, vector }
    }

    /// The tensor for basis element `i`.
    pub(crate) fn element_tensor(&self, i: usize) -> (Option<Form>, Option<Multivector>) {
        let e = &self.elems[i];
        let c = Polynomial::monomial(e.monomial.clone(), Rational::from_integer(1.into()));
        match e.part {
            Part::Form => (Some(Form::basis(self.dim, &e.indices, c)), None),
            Part::Vector => (None, Some(Multivector::basis(self.dim, &e.indices, c))),
        }
    }
}

fn grade_of(k: i64, n: usize) -> Option<usize> {
    usize::try_from(k).ok().filter(|&k| k <= n)
}

/// Predicted slice size without building it.
pub fn slice_size(complex: ComplexKind, k: i64, w: i64, gp: &GradedPoisson) -> Result<usize> {
    let g = gp.require(complex)?;
    let n = gp.dim();
    let forms = |k: i64| {
        grade_of(k, n)
            .and_then(|k| g.form_degree(k, w).map(|d| binomial(n, k) * monomial_count(n, d)))
            .unwrap_or(0)
    };
    let vectors = |k: i64| {
        grade_of(k, n)
            .and_then(|k| g.vector_degree(k, w).map(|d| binomial(n, k) * monomial_count(n, d)))
            .unwrap_or(0)
    };
    Ok(match complex {
        ComplexKind::DeRham | ComplexKind::Basic => forms(k),
        ComplexKind::Lichnerowicz => vectors(k),
        ComplexKind::Cone => forms(k + 1) + vectors(k),
    })
}

/// All monomial `k`-cochains of weight `w`.
pub fn enumerate_basis(complex: ComplexKind, k: i64, w: i64, gp: &GradedPoisson) -> Result<SliceBasis> {
    let g = gp.require(complex)?;
    let n = gp.dim();
    let form = |k: i64| grade_of(k, n).map(|k| (k, g.form_degree(k, w)));
    let vector = |k: i64| grade_of(k, n).map(|k| (k, g.vector_degree(k, w)));
    Ok(match complex {
        ComplexKind::DeRham | ComplexKind::Basic => SliceBasis::new(n, form(k), None),
        ComplexKind::Lichnerowicz => SliceBasis::new(n, None, vector(k)),
        ComplexKind::Cone => SliceBasis::new(n, form(k + 1), vector(k)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::parse_poly;

    fn linear_so3() -> GradedPoisson {
        let p = |s: &str| parse_poly(s, 3, &["x", "y", "z"]).unwrap();
        let pi = PoissonStructure::verified(Multivector::from_entries(
            3,
            2,
            [(vec![0, 1], p("z")), (vec![1, 2], p("x")), (vec![2, 0], p("y"))],
        ))
        .unwrap();
        GradedPoisson::new(pi)
    }

    #[test]
    fn de_rham_one_forms_of_weight_one() {
        let gp = GradedPoisson::new(PoissonStructure::zero(2));
        let b = enumerate_basis(ComplexKind::DeRham, 1, 1, &gp).unwrap();
        assert_eq!(b.len(), 2);
        let dx = Form::basis(2, &[0], Polynomial::one(2));
        assert_eq!(b.decode(&b.encode(Some(&dx), None).unwrap()).form.unwrap(), dx);
    }

    #[test]
    fn lichnerowicz_counts_for_linear() {
        let gp = linear_so3();
        for d in 0..4 {
            let b = enumerate_basis(ComplexKind::Lichnerowicz, 1, d, &gp).unwrap();
            assert_eq!(b.len(), 3 * monomial_count(3, d as u32));
            assert_eq!(slice_size(ComplexKind::Lichnerowicz, 1, d, &gp).unwrap(), b.len());
        }
    }

    #[test]
    fn cone_count_on_plane() {
        let pi = PoissonStructure::zero(2);
        let gp = GradedPoisson::with_degree(pi, 1).unwrap();
        let b = enumerate_basis(ComplexKind::Cone, 1, 2, &gp).unwrap();
        assert_eq!(b.len(), 7);
        assert_eq!(b.elements()[0].part, Part::Form);
    }

    #[test]
    fn cone_below_zero() {
        let gp = linear_so3();
        let b = enumerate_basis(ComplexKind::Cone, -1, 2, &gp).unwrap();
        assert_eq!(b.len(), monomial_count(3, 2));
        assert_eq!(b.vector_grade(), None);
    }

    #[test]
    fn non_homogeneous_limits_complexes() {
        let p = parse_poly("1 + x", 2, &["x", "y"]).unwrap();
        let pi = PoissonStructure::verified(Multivector::basis(2, &[0, 1], p)).unwrap();
        let gp = GradedPoisson::new(pi);
        assert!(enumerate_basis(ComplexKind::DeRham, 1, 2, &gp).is_ok());
        assert_eq!(
            enumerate_basis(ComplexKind::Cone, 1, 2, &gp).unwrap_err(),
            Error::NotHomogeneous
        );
    }
}
