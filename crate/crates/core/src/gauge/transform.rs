use std::collections::HashMap;

use num_traits::Zero;

use crate::calculus::{bivector_matrix, de_rham_d};
use crate::error::{check_dim, Error, Result};
use crate::polyalg::{Form, Multivector, PoissonStructure, Polynomial};

pub type PolyMatrix = Vec<Vec<Polynomial>>;

/// `B♭` in the coordinate frame: column `j` holds `i_{∂_j} B`, so
/// `m[i][j] = B_{ji}`.
pub fn flat(b: &Form) -> Result<PolyMatrix> {
    require_two_form(b)?;
    let n = b.dim();
    let mut m = vec![vec![Polynomial::zero(n); n]; n];
    for (idx, c) in b.components() {
        let (a, bb) = (idx[0], idx[1]);
        m[bb][a] = c.clone();
        m[a][bb] = -c;
    }
    Ok(m)
}

/// `π♯` in the coordinate frame: column `i` holds `π♯(dx_i)`, so
/// `m[j][i] = π^{ij}`.
pub fn sharp_matrix(pi: &Multivector) -> PolyMatrix {
    transpose(&bivector_matrix(pi))
}

fn transpose(m: &PolyMatrix) -> PolyMatrix {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i].clone()).collect()).collect()
}

pub fn poly_mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let n = a.len();
    let nv = a.first().and_then(|r| r.first()).map_or(0, Polynomial::nvars);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = Polynomial::zero(nv);
                    for k in 0..n {
                        if !a[i][k].is_zero() && !b[k][j].is_zero() {
                            acc += &(&a[i][k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Determinant by cofactor expansion along rows, memoized on the set of
/// remaining columns. Division-free, so exact over polynomials.
pub fn poly_determinant(m: &PolyMatrix) -> Polynomial {
    let n = m.len();
    let nv = m.first().and_then(|r| r.first()).map_or(0, Polynomial::nvars);
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    minor(m, &rows, &cols, nv)
}

fn minor(m: &PolyMatrix, rows: &[usize], cols: &[usize], nv: usize) -> Polynomial {
    let mut memo: HashMap<u64, Polynomial> = HashMap::new();
    let full: u64 = (1u64 << cols.len()) - 1;
    expand(m, rows, cols, 0, full, nv, &mut memo)
}

fn expand(
    m: &PolyMatrix,
    rows: &[usize],
    cols: &[usize],
    r: usize,
    mask: u64,
    nv: usize,
    memo: &mut HashMap<u64, Polynomial>,
) -> Polynomial {
    if r == rows.len() {
        return Polynomial::one(nv);
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let mut acc = Polynomial::zero(nv);
    let mut sign_neg = false;
    for (ci, &c) in cols.iter().enumerate() {
        if mask & (1 << ci) == 0 {
            continue;
        }
        let e = &m[rows[r]][c];
        if !e.is_zero() {
            let sub = expand(m, rows, cols, r + 1, mask & !(1 << ci), nv, memo);
            let t = e * &sub;
            if sign_neg {
                acc -= &t;
            } else {
                acc += &t;
            }
        }
        sign_neg = !sign_neg;
    }
    memo.insert(mask, acc.clone());
    acc
}

/// Inverse of a polynomial matrix whose determinant is a nonzero constant,
/// via the adjugate.
pub fn poly_mat_inverse(m: &PolyMatrix) -> Result<PolyMatrix> {
    let n = m.len();
    let nv = m.first().and_then(|r| r.first()).map_or(0, Polynomial::nvars);
    let det = poly_determinant(m);
    let c = match det.as_constant() {
        Some(c) if !c.is_zero() => c,
        _ => {
            return Err(Error::NotInvertible {
                det: det.to_canonical_string(),
            })
        }
    };
    let inv_c = c.recip();
    let mut out = vec![vec![Polynomial::zero(nv); n]; n];
    for i in 0..n {
        for j in 0..n {
            // adj[i][j] = (−1)^{i+j} · minor with row j and column i removed
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&k| k != i).collect();
            let cof = minor(m, &rows, &cols, nv);
            let v = cof.scale(&inv_c);
            out[i][j] = if (i + j) % 2 == 1 { -&v } else { v };
        }
    }
    Ok(out)
}

fn require_two_form(b: &Form) -> Result<()> {
    if b.grade() == 2 {
        Ok(())
    } else {
        Err(Error::InvalidGrade(format!("expected a 2-form, got grade {}", b.grade())))
    }
}

/// `det(I + B♭∘π♯)` as a polynomial.
pub fn gauge_determinant(pi: &Multivector, b: &Form) -> Result<Polynomial> {
    check_dim(pi.dim(), b.dim())?;
    Ok(poly_determinant(&gauge_operator(pi, b)?))
}

fn gauge_operator(pi: &Multivector, b: &Form) -> Result<PolyMatrix> {
    let n = pi.dim();
    let mut t = poly_mat_mul(&flat(b)?, &sharp_matrix(pi));
    for (i, row) in t.iter_mut().enumerate() {
        row[i] += &Polynomial::one(n);
    }
    Ok(t)
}

/// `π_B` with `(π_B)♯ = π♯∘(I + B♭∘π♯)⁻¹`, defined when `dB = 0` and the
/// determinant is a nonzero constant.
pub fn gauge_transform(pi: &PoissonStructure, b: &Form) -> Result<PoissonStructure> {
    check_dim(pi.dim(), b.dim())?;
    require_two_form(b)?;
    if !de_rham_d(b).is_zero() {
        return Err(Error::NotClosed);
    }
    let bivector = gauge_bivector(pi.bivector(), b)?;
    let out = PoissonStructure::unchecked(bivector)?;
    if pi.check() && !out.check() {
        return Err(Error::Internal("gauge transform of a Poisson bivector failed Jacobi".into()));
    }
    Ok(out)
}

fn gauge_bivector(pi: &Multivector, b: &Form) -> Result<Multivector> {
    let n = pi.dim();
    let t_inv = poly_mat_inverse(&gauge_operator(pi, b)?)?;
    let sh = poly_mat_mul(&sharp_matrix(pi), &t_inv);
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            entries.push((vec![i, j], sh[j][i].clone()));
        }
    }
    let out = Multivector::from_entries(n, 2, entries);
    debug_assert!((0..n).all(|i| sh[i][i].is_zero()));
    Ok(out)
}

/// The 2-form `ω` with `ω♭ = (π♯)⁻¹`; needs a constant nonzero Pfaffian².
pub fn invert_bivector(pi: &Multivector) -> Result<Form> {
    let n = pi.dim();
    let inv = poly_mat_inverse(&sharp_matrix(pi))?;
    // inv is ω♭, whose entry [i][j] is ω_{ji}
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            entries.push((vec![i, j], inv[j][i].clone()));
        }
    }
    Ok(Form::from_entries(n, 2, entries))
}

/// The bivector `π` with `π♯ = (ω♭)⁻¹`.
pub fn invert_form(omega: &Form) -> Result<Multivector> {
    let n = omega.dim();
    let inv = poly_mat_inverse(&flat(omega)?)?;
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            entries.push((vec![i, j], inv[j][i].clone()));
        }
    }
    Ok(Multivector::from_entries(n, 2, entries))
}
