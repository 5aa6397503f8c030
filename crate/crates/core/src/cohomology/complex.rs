use std::collections::HashMap;

use rayon::prelude::*;

use super::basis::{enumerate_basis, slice_size, Cochain, ComplexKind, GradedPoisson, SliceBasis};
use crate::calculus::{cone_map_sign, de_rham_d, lie_derivative, sharp, sharp_of_coordinates};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix, SparseVec};
use crate::polyalg::{contract_vector, rational::int, Form, Multivector, Rational};

/// One `(complex, k, w)` slice with the matrix of its outgoing differential.
#[derive(Debug, Clone)]
pub struct ComplexSlice {
    pub complex: ComplexKind,
    pub k: i64,
    pub w: i64,
    pub basis: SliceBasis,
    pub target: SliceBasis,
    /// Columns are images of `basis` in `target` coordinates.
    pub matrix: Matrix,
}

/// Applies the differential of `complex` to one cochain.
fn apply_differential(
    complex: ComplexKind,
    gp: &GradedPoisson,
    form: Option<&Form>,
    vector: Option<&Multivector>,
) -> (Option<Form>, Option<Multivector>) {
    let pi = gp.poisson();
    let lich = |v: &Multivector| crate::calculus::lichnerowicz_d(pi, v).expect("verified");
    match complex {
        ComplexKind::DeRham | ComplexKind::Basic => (form.map(de_rham_d), None),
        ComplexKind::Lichnerowicz => (None, vector.map(lich)),
        ComplexKind::Cone => {
            // d(a, b) = (da, Φ(a) − d_π b)
            let mut out_form = None;
            let mut out_vec = None;
            if let Some(a) = form {
                out_form = Some(de_rham_d(a));
                let phi = sharp(pi, a).expect("dimensions agree");
                out_vec = Some(phi.scale(&int(cone_map_sign(a.grade()).into())));
            }
            if let Some(b) = vector {
                let db = -&lich(b);
                out_vec = Some(match out_vec {
                    Some(v) => &v + &db,
                    None => db,
                });
            }
            (out_form, out_vec)
        }
    }
}

/// The matrix of the differential from the `(k, w)` slice into `(k+1, w)`.
pub fn differential_matrix(complex: ComplexKind, k: i64, w: i64, gp: &GradedPoisson) -> Result<ComplexSlice> {
    let basis = enumerate_basis(complex, k, w, gp)?;
    let target = enumerate_basis(complex, k + 1, w, gp)?;
    let cols = (0..basis.len())
        .map(|i| {
            let (f, v) = basis.element_tensor(i);
            let (df, dv) = apply_differential(complex, gp, f.as_ref(), v.as_ref());
            target.encode(df.as_ref(), dv.as_ref())
        })
        .collect::<Result<Vec<SparseVec>>>()?;
    let matrix = Matrix::from_columns(target.len(), cols);
    Ok(ComplexSlice {
        complex,
        k,
        w,
        basis,
        target,
        matrix,
    })
}

/// `D_{k+1} · D_k = 0` at the matrix level.
pub fn verify_d_squared(complex: ComplexKind, k: i64, w: i64, gp: &GradedPoisson) -> Result<bool> {
    let a = differential_matrix(complex, k, w, gp)?;
    let b = differential_matrix(complex, k + 1, w, gp)?;
    Ok(b.matrix.mul(&a.matrix).is_zero())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SliceOptions {
    pub witnesses: bool,
    pub max_slice_dim: usize,
}

impl Default for SliceOptions {
    fn default() -> Self {
        SliceOptions {
            witnesses: false,
            max_slice_dim: 5000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceResult {
    pub complex: ComplexKind,
    pub k: i64,
    pub w: i64,
    pub dim_cochains: usize,
    pub dim_kernel: usize,
    /// Rank of the incoming differential.
    pub dim_image: usize,
    pub dim_h: usize,
    pub representatives: Option<Vec<Cochain>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CohomologyReport {
    /// Sorted by `(complex, k, w)`.
    pub entries: Vec<SliceResult>,
}

impl CohomologyReport {
    pub fn get(&self, complex: ComplexKind, k: i64, w: i64) -> Option<&SliceResult> {
        self.entries
            .iter()
            .find(|e| e.complex == complex && e.k == k && e.w == w)
    }

    pub fn dim(&self, complex: ComplexKind, k: i64, w: i64) -> Option<usize> {
        self.get(complex, k, w).map(|e| e.dim_h)
    }
}

fn check_cap(complex: ComplexKind, k: i64, w: i64, gp: &GradedPoisson, cap: usize) -> Result<()> {
    for kk in [k - 1, k, k + 1] {
        let dim = slice_size(complex, kk, w, gp)?;
        if dim > cap {
            return Err(Error::SliceTooLarge { dim, cap });
        }
    }
    Ok(())
}

/// Cocycle basis, coboundary matrix and slice data at `(k, w)`.
pub(crate) struct SliceCohomology {
    pub basis: SliceBasis,
    pub cocycles: Vec<SparseVec>,
    pub coboundaries: Matrix,
    pub incoming_rank: usize,
}

impl SliceCohomology {
    pub fn dim_h(&self) -> usize {
        self.cocycles.len() - self.incoming_rank
    }

    /// Classes completing the coboundaries to the cocycles, each reduced
    /// against the coboundaries and the classes before it.
    pub fn representatives(&self) -> Result<Vec<SparseVec>> {
        let mut ech = Echelon::new();
        for j in 0..self.coboundaries.ncols() {
            ech.insert(self.coboundaries.column(j));
        }
        let mut reps = Vec::new();
        for z in &self.cocycles {
            let r = ech.reduce(z);
            if !r.is_empty() {
                ech.insert(&r);
                reps.push(r);
            }
        }
        if reps.len() != self.dim_h() {
            return Err(Error::Internal(format!(
                "found {} representatives for a class space of dimension {}",
                reps.len(),
                self.dim_h()
            )));
        }
        Ok(reps)
    }
}

pub(crate) fn slice_cohomology(complex: ComplexKind, k: i64, w: i64, gp: &GradedPoisson) -> Result<SliceCohomology> {
    let outgoing = differential_matrix(complex, k, w, gp)?;
    let incoming = differential_matrix(complex, k - 1, w, gp)?;
    let cocycles = outgoing.matrix.nullspace();
    let incoming_rank = incoming.matrix.rank();
    if incoming_rank > cocycles.len() {
        return Err(Error::Internal(format!(
            "image of rank {incoming_rank} exceeds kernel of dimension {}",
            cocycles.len()
        )));
    }
    Ok(SliceCohomology {
        basis: outgoing.basis,
        cocycles,
        coboundaries: incoming.matrix,
        incoming_rank,
    })
}

fn compute_slice(complex: ComplexKind, k: i64, w: i64, gp: &GradedPoisson, opts: SliceOptions) -> Result<SliceResult> {
    check_cap(complex, k, w, gp, opts.max_slice_dim)?;
    if complex == ComplexKind::Basic {
        let b = basic_slice(gp, k, w)?;
        return Ok(SliceResult {
            complex,
            k,
            w,
            dim_cochains: b.dim_cochains,
            dim_kernel: b.dim_kernel,
            dim_image: b.dim_image,
            dim_h: b.dim_kernel - b.dim_image,
            representatives: None,
        });
    }
    let s = slice_cohomology(complex, k, w, gp)?;
    let representatives = if opts.witnesses {
        Some(s.representatives()?.iter().map(|r| s.basis.decode(r)).collect())
    } else {
        None
    };
    Ok(SliceResult {
        complex,
        k,
        w,
        dim_cochains: s.basis.len(),
        dim_kernel: s.cocycles.len(),
        dim_image: s.incoming_rank,
        dim_h: s.dim_h(),
        representatives,
    })
}

/// Cohomology dimensions over a rectangle of `(k, w)`. Slices are computed
/// in parallel and merged in key order.
pub fn cohomology_dims(
    complex: ComplexKind,
    k_range: std::ops::RangeInclusive<i64>,
    w_range: std::ops::RangeInclusive<i64>,
    gp: &GradedPoisson,
    opts: SliceOptions,
) -> Result<CohomologyReport> {
    gp.require(complex)?;
    let keys: Vec<(i64, i64)> = k_range
        .flat_map(|k| w_range.clone().map(move |w| (k, w)))
        .collect();
    let entries = keys
        .par_iter()
        .map(|&(k, w)| compute_slice(complex, k, w, gp, opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(CohomologyReport { entries })
}

struct BasicSlice {
    dim_cochains: usize,
    dim_kernel: usize,
    dim_image: usize,
}

/// Basis (in de Rham slice coordinates) of basic `k`-forms of weight `w`:
/// grade 0 are Casimirs, grade 2 satisfy `i_{X_{x_i}} t = 0`, grade 1
/// additionally `L_{X_{x_i}} t = 0`.
pub fn basic_forms(gp: &GradedPoisson, k: i64, w: i64) -> Result<Vec<SparseVec>> {
    gp.require(ComplexKind::Basic)?;
    let basis = enumerate_basis(ComplexKind::Basic, k, w, gp)?;
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    if !(0..=2).contains(&k) {
        return Err(Error::Unsupported(format!("basic forms are computed in grades 0..=2, not {k}")));
    }
    let hams = sharp_of_coordinates(gp.poisson().bivector());
    let mut keys: HashMap<(usize, bool, Vec<usize>, crate::polyalg::Monomial), usize> = HashMap::new();
    let mut cols = Vec::with_capacity(basis.len());
    for i in 0..basis.len() {
        let t = basis.element_tensor(i).0.expect("forms");
        let mut col: Vec<(usize, Rational)> = Vec::new();
        let mut push = |block: usize, lie: bool, f: &Form| {
            for (idx, c) in f.components() {
                for (m, q) in c.terms() {
                    let next = keys.len();
                    let row = *keys.entry((block, lie, idx.clone(), m.clone())).or_insert(next);
                    col.push((row, q.clone()));
                }
            }
        };
        for (j, x) in hams.iter().enumerate() {
            if k == 0 {
                push(j, false, &contract_vector(x, &de_rham_d(&t))?);
            } else {
                push(j, false, &contract_vector(x, &t)?);
                if k == 1 {
                    push(j, true, &lie_derivative(x, &t)?);
                }
            }
        }
        col.sort_by_key(|(r, _)| *r);
        let mut merged: Vec<(usize, Rational)> = Vec::with_capacity(col.len());
        for (r, q) in col {
            match merged.last_mut() {
                Some((lr, lq)) if *lr == r => *lq += q,
                _ => merged.push((r, q)),
            }
        }
        merged.retain(|(_, q)| !num_traits::Zero::is_zero(q));
        cols.push(merged);
    }
    let constraints = Matrix::from_columns(keys.len(), cols);
    Ok(constraints.nullspace())
}

fn basic_slice(gp: &GradedPoisson, k: i64, w: i64) -> Result<BasicSlice> {
    let here = basic_forms(gp, k, w)?;
    let below = if k >= 1 { basic_forms(gp, k - 1, w)? } else { Vec::new() };
    let d_here = differential_matrix(ComplexKind::DeRham, k, w, gp)?.matrix;
    let d_below = differential_matrix(ComplexKind::DeRham, k - 1, w, gp)?.matrix;
    let image_here = Matrix::from_columns(d_here.nrows(), here.iter().map(|v| d_here.apply(v)).collect());
    let image_below = Matrix::from_columns(d_below.nrows(), below.iter().map(|v| d_below.apply(v)).collect());
    let dim_kernel = here.len() - image_here.rank();
    let dim_image = image_below.rank();
    if dim_image > dim_kernel {
        return Err(Error::Internal("basic image exceeds basic cocycles".into()));
    }
    Ok(BasicSlice {
        dim_cochains: here.len(),
        dim_kernel,
        dim_image,
    })
}

/// `dim H^k_bas` at weight `w` for `k ∈ {1, 2}`: closed basic k-forms
/// modulo `d` of basic (k−1)-forms.
pub fn basic_cohomology_dim(gp: &GradedPoisson, k: i64, w: i64) -> Result<usize> {
    if !(1..=2).contains(&k) {
        return Err(Error::Unsupported(format!("basic cohomology is offered for k = 1, 2, not {k}")));
    }
    let b = basic_slice(gp, k, w)?;
    Ok(b.dim_kernel - b.dim_image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{parse_poly, PoissonStructure, Polynomial};

    fn gp_from(n: usize, entries: &[(usize, usize, &str)]) -> GradedPoisson {
        let names = ["x", "y", "z", "w"];
        let pi = Multivector::from_entries(
            n,
            2,
            entries
                .iter()
                .map(|&(i, j, s)| (vec![i, j], parse_poly(s, n, &names[..n]).unwrap())),
        );
        GradedPoisson::new(PoissonStructure::verified(pi).unwrap())
    }

    #[test]
    fn de_rham_on_the_line() {
        let gp = GradedPoisson::new(PoissonStructure::unchecked(Multivector::zero(1, 2)).unwrap());
        let r = cohomology_dims(ComplexKind::DeRham, 0..=1, 0..=3, &gp, SliceOptions::default()).unwrap();
        assert_eq!(r.dim(ComplexKind::DeRham, 0, 0), Some(1));
        for w in 1..=3 {
            assert_eq!(r.dim(ComplexKind::DeRham, 0, w), Some(0));
            assert_eq!(r.dim(ComplexKind::DeRham, 1, w), Some(0));
        }
    }

    #[test]
    fn cone_differential_on_pure_parts() {
        let gp = gp_from(3, &[(0, 1, "z"), (1, 2, "x"), (2, 0, "y")]);
        let s = differential_matrix(ComplexKind::Cone, 0, 1, &gp).unwrap();
        let b = &s.basis;
        // (η, 0) ↦ (dη, π♯η) for η = dx
        let dx = Form::basis(3, &[0], Polynomial::one(3));
        let v = b.encode(Some(&dx), None).unwrap();
        let img = s.target.decode(&s.matrix.apply(&v));
        assert!(img.form.unwrap().is_zero());
        assert_eq!(img.vector.unwrap(), sharp(gp.poisson(), &dx).unwrap());
        // (0, f) ↦ (0, −d_π f)
        let f = Multivector::scalar(parse_poly("x", 3, &["x", "y", "z"]).unwrap());
        let s1 = differential_matrix(ComplexKind::Cone, 0, 1, &gp).unwrap();
        let v = s1.basis.encode(None, Some(&f)).unwrap();
        let img = s1.target.decode(&s1.matrix.apply(&v));
        let want = -&crate::calculus::lichnerowicz_d(gp.poisson(), &f).unwrap();
        assert_eq!(img.vector.unwrap(), want);
    }

    #[test]
    fn d_squared_vanishes() {
        let gp = gp_from(3, &[(0, 1, "z"), (1, 2, "x"), (2, 0, "y")]);
        for c in [ComplexKind::DeRham, ComplexKind::Lichnerowicz, ComplexKind::Cone] {
            for k in -1..=2 {
                for w in 0..=3 {
                    assert!(verify_d_squared(c, k, w, &gp).unwrap(), "{c} k={k} w={w}");
                }
            }
        }
    }

    #[test]
    fn symplectic_plane_cone_vanishes() {
        let gp = gp_from(2, &[(0, 1, "1")]);
        let r = cohomology_dims(ComplexKind::Cone, 1..=1, 0..=5, &gp, SliceOptions::default()).unwrap();
        assert!(r.entries.iter().all(|e| e.dim_h == 0));
    }

    #[test]
    fn zero_poisson_plane() {
        let gp = GradedPoisson::new(PoissonStructure::zero(2));
        let r = cohomology_dims(ComplexKind::Cone, 1..=1, 1..=4, &gp, SliceOptions::default()).unwrap();
        for d in 0..=3 {
            assert_eq!(r.dim(ComplexKind::Cone, 1, d + 1), Some(2 * (d as usize + 1)));
        }
    }

    #[test]
    fn so3_casimirs_and_first_cohomology() {
        let gp = gp_from(3, &[(0, 1, "z"), (1, 2, "x"), (2, 0, "y")]);
        let r = cohomology_dims(ComplexKind::Lichnerowicz, 0..=1, 0..=4, &gp, SliceOptions::default()).unwrap();
        let h0: Vec<usize> = (0..=4).map(|d| r.dim(ComplexKind::Lichnerowicz, 0, d).unwrap()).collect();
        assert_eq!(h0, vec![1, 0, 1, 0, 1]);
        assert!((0..=4).all(|d| r.dim(ComplexKind::Lichnerowicz, 1, d) == Some(0)));
    }

    #[test]
    fn witnesses_are_cocycles() {
        let gp = gp_from(3, &[(0, 1, "z"), (1, 2, "x"), (2, 0, "y")]);
        let opts = SliceOptions {
            witnesses: true,
            ..SliceOptions::default()
        };
        let r = cohomology_dims(ComplexKind::Lichnerowicz, 0..=0, 2..=2, &gp, opts).unwrap();
        let reps = r.entries[0].representatives.as_ref().unwrap();
        assert_eq!(reps.len(), 1);
        let f = reps[0].vector.as_ref().unwrap().as_scalar();
        let c = f.coeff(&crate::polyalg::Monomial::from_exponents(vec![2, 0, 0]));
        assert_eq!(f.scale(&c.recip()), parse_poly("x^2 + y^2 + z^2", 3, &["x", "y", "z"]).unwrap());
    }

    #[test]
    fn basic_cohomology_examples() {
        let sym = gp_from(2, &[(0, 1, "1")]);
        for w in 0..=3 {
            for k in 1..=2 {
                assert_eq!(basic_cohomology_dim(&sym, k, w).unwrap(), 0);
            }
            assert!(basic_forms(&sym, 1, w).unwrap().is_empty());
            assert!(basic_forms(&sym, 2, w).unwrap().is_empty());
        }
        // ∂x∧∂y on ℝ³: dz is basic, but it is d of the Casimir z
        let leaves = gp_from(3, &[(0, 1, "1")]);
        assert_eq!(basic_forms(&leaves, 1, 1).unwrap().len(), 1);
        assert_eq!(basic_forms(&leaves, 0, 1).unwrap().len(), 1);
        assert_eq!(basic_cohomology_dim(&leaves, 1, 1).unwrap(), 0);
        assert_eq!(basic_cohomology_dim(&leaves, 2, 2).unwrap(), 0);
        let zero = GradedPoisson::new(PoissonStructure::zero(2));
        for w in 1..=3 {
            assert_eq!(basic_cohomology_dim(&zero, 1, w).unwrap(), 0);
            assert_eq!(basic_cohomology_dim(&zero, 2, w).unwrap(), 0);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let gp = GradedPoisson::new(PoissonStructure::zero(3));
        let opts = SliceOptions {
            witnesses: false,
            max_slice_dim: 10,
        };
        let err = cohomology_dims(ComplexKind::Cone, 1..=1, 4..=4, &gp, opts).unwrap_err();
        assert!(matches!(err, Error::SliceTooLarge { .. }));
    }
}
