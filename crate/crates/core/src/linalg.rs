//! Exact sparse linear algebra over ℚ.
//!
//! Vectors are sorted `(index, value)` lists. Elimination runs on integer
//! rows: every incoming rational vector is cleared of denominators and
//! divided by its content, and each elimination step
//! `r ← p·r − c·pivot` is followed by the same normalization. This keeps
//! entries small without ever forming fractions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyalg::{rational::common_denominator, Rational};

pub type SparseVec = Vec<(usize, Rational)>;
type IntVec = Vec<(usize, BigInt)>;

/// Column-major sparse matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl Matrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Matrix {
            nrows,
            cols: vec![Vec::new(); ncols],
        }
    }

    /// Columns must be sorted by row index and free of explicit zeros.
    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> Self {
        for c in &cols {
            debug_assert!(c.windows(2).all(|w| w[0].0 < w[1].0));
            debug_assert!(c.iter().all(|(i, v)| *i < nrows && !v.is_zero()));
        }
        Matrix { nrows, cols }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let cols = (0..ncols)
            .map(|j| {
                (0..nrows)
                    .filter(|&i| !rows[i][j].is_zero())
                    .map(|i| (i, rows[i][j].clone()))
                    .collect()
            })
            .collect();
        Matrix { nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        match self.cols[j].binary_search_by_key(&i, |(r, _)| *r) {
            Ok(p) => self.cols[j][p].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn transpose(&self) -> Matrix {
        let mut rows: Vec<SparseVec> = vec![Vec::new(); self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c {
                rows[*i].push((j, v.clone()));
            }
        }
        Matrix {
            nrows: self.ncols(),
            cols: rows,
        }
    }

    /// Sparse matrix-vector product.
    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (j, xj) in x {
            for (i, a) in &self.cols[*j] {
                *acc.entry(*i).or_insert_with(Rational::zero) += a * xj;
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// `self · other`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ncols(), other.nrows, "matrix shape mismatch");
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        Matrix {
            nrows: self.nrows,
            cols,
        }
    }

    pub fn rank(&self) -> usize {
        // Column rank equals row rank; eliminate the shorter vectors.
        if self.nrows < self.ncols() {
            return self.transpose().rank();
        }
        let mut ech = Echelon::new();
        for v in &self.cols {
            ech.insert(v);
        }
        ech.rank()
    }

    /// Basis of `{x : A x = 0}`, one vector per free column, in column order.
    pub fn nullspace(&self) -> Vec<SparseVec> {
        let rows = self.transpose();
        let mut ech = Echelon::new();
        for r in &rows.cols {
            ech.insert(r);
        }
        let rref = ech.reduced();
        let pivots: BTreeMap<usize, &IntVec> = rref.iter().map(|r| (r[0].0, r)).collect();
        let mut out = Vec::new();
        for f in 0..self.ncols() {
            if pivots.contains_key(&f) {
                continue;
            }
            let mut v: SparseVec = vec![(f, Rational::one())];
            for (&p, row) in &pivots {
                if let Ok(pos) = row.binary_search_by_key(&f, |(c, _)| *c) {
                    let lead = &row[0].1;
                    v.push((p, -Rational::new(row[pos].1.clone(), lead.clone())));
                }
            }
            v.sort_by_key(|(i, _)| *i);
            out.push(v);
        }
        out
    }

    /// Some `x` with `A x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &SparseVec) -> Option<SparseVec> {
        let n = self.ncols();
        let mut aug = self.clone();
        aug.cols.push(b.clone());
        let rows = aug.transpose();
        let mut ech = Echelon::new();
        for r in &rows.cols {
            ech.insert(r);
        }
        let rref = ech.reduced();
        let mut x = Vec::new();
        for row in &rref {
            let (p, lead) = &row[0];
            if *p == n {
                return None;
            }
            if let Ok(pos) = row.binary_search_by_key(&n, |(c, _)| *c) {
                x.push((*p, Rational::new(row[pos].1.clone(), lead.clone())));
            }
        }
        x.sort_by_key(|(i, _)| *i);
        Some(x)
    }
}

/// Incrementally built row echelon form over ℤ with primitive rows.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, IntVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts `v`; returns `true` when it was independent of the rows so far.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce_int(to_primitive(v));
        match r.first() {
            None => false,
            Some((lead, _)) => {
                self.rows.insert(*lead, r);
                true
            }
        }
    }

    /// Fully reduces `v` against the current rows and returns the
    /// primitive remainder with positive leading entry (empty when `v` lies
    /// in the span).
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let r = self.reduce_int(to_primitive(v));
        r.into_iter()
            .map(|(i, c)| (i, Rational::from_integer(c)))
            .collect()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_int(to_primitive(v)).is_empty()
    }

    fn reduce_int(&self, mut r: IntVec) -> IntVec {
        let mut k = 0;
        while k < r.len() {
            let col = r[k].0;
            if let Some(pivot) = self.rows.get(&col) {
                let c = r[k].1.clone();
                let p = pivot[0].1.clone();
                let g = c.gcd(&p);
                r = combine(&r, &(&p / &g), pivot, &(&c / &g));
                make_primitive(&mut r);
                // entries before k are untouched; the one at k vanished
                continue;
            }
            k += 1;
        }
        if let Some((_, lead)) = r.first() {
            if lead.is_negative() {
                for (_, c) in r.iter_mut() {
                    *c = -&*c;
                }
            }
        }
        r
    }

    /// Reduced row echelon form (integer rows, pivot columns cleared above
    /// and below), ordered by pivot column.
    fn reduced(&self) -> Vec<IntVec> {
        let mut rows: Vec<IntVec> = self.rows.values().cloned().collect();
        for i in (0..rows.len()).rev() {
            let (pc, pv) = rows[i][0].clone();
            for j in 0..i {
                if let Ok(pos) = rows[j].binary_search_by_key(&pc, |(c, _)| *c) {
                    let c = rows[j][pos].1.clone();
                    let g = c.gcd(&pv);
                    let mut r = combine(&rows[j], &(&pv / &g), &rows[i], &(&c / &g));
                    make_primitive(&mut r);
                    if r[0].1.is_negative() {
                        for (_, x) in r.iter_mut() {
                            *x = -&*x;
                        }
                    }
                    rows[j] = r;
                }
            }
        }
        rows
    }
}

/// `ca·a − cb·b`.
fn combine(a: &IntVec, ca: &BigInt, b: &IntVec, cb: &BigInt) -> IntVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push((a[i].0, ca * &a[i].1));
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(cb * &b[j].1)));
            j += 1;
        } else {
            let v = ca * &a[i].1 - cb * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn to_primitive(v: &SparseVec) -> IntVec {
    let den = common_denominator(v.iter().map(|(_, c)| c));
    let mut r: IntVec = v
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (*i, (c * Rational::from_integer(den.clone())).to_integer()))
        .collect();
    make_primitive(&mut r);
    r
}

fn make_primitive(r: &mut IntVec) {
    let mut g = BigInt::zero();
    for (_, c) in r.iter() {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    for (_, c) in r.iter_mut() {
        *c = &*c / &g;
    }
}

/// Dense view of a sparse vector of length `n`.
pub fn to_dense(v: &SparseVec, n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rational::{int, ratio};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]).rank(), 3);
        assert_eq!(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).rank(), 2);
        assert_eq!(Matrix::zero(3, 4).rank(), 0);
    }

    #[test]
    fn nullspace_vectors_are_killed() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 7, 9]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.apply(v).is_empty());
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[2, 0], &[0, 3], &[1, 1]]);
        let b = vec![(0, int(1)), (1, int(1)), (2, ratio(5, 6))];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.apply(&x), b);
        let bad = vec![(0, int(1)), (1, int(1)), (2, int(7))];
        assert!(a.solve(&bad).is_none());
    }

    #[test]
    fn echelon_reduce_is_canonical() {
        let mut e = Echelon::new();
        assert!(e.insert(&vec![(0, int(2)), (1, int(4))]));
        assert!(!e.insert(&vec![(0, ratio(1, 3)), (1, ratio(2, 3))]));
        let r = e.reduce(&vec![(0, int(-3)), (1, int(1))]);
        assert_eq!(r, vec![(1, int(1))]);
        assert!(e.contains(&vec![(0, int(5)), (1, int(10))]));
    }

    #[test]
    fn product_and_transpose() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), m(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), m(&[&[1, 3], &[2, 4]]));
        assert_eq!(a.entry(1, 0), int(3));
    }
}
