//! Chevalley–Eilenberg cohomology `H^k(𝔤, S^d𝔤)`, built directly from
//! structure constants.
//!
//! Polynomial functions of degree `d` on `𝔤*` form `S^d𝔤`; `𝔤` acts on them
//! by the adjoint action extended as a derivation. The cochains are
//! alternating maps `Λ^k𝔤 → S^d𝔤`. Nothing here goes through the bracket
//! calculus, so agreement with the Lichnerowicz slices of the linear
//! Poisson structure is a genuine cross-check.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::constants::StructureConstants;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseVec};
use crate::polyalg::Rational;

/// A basis monomial of `S^d𝔤`: a sorted multiset of generator indices.
type Word = Vec<usize>;

/// `S^d𝔤` with the action matrices `ρ(e_i)`.
#[derive(Debug, Clone)]
pub struct CeModule {
    degree: usize,
    basis: Vec<Word>,
    action: Vec<Matrix>,
}

fn multisets(n: usize, d: usize) -> Vec<Word> {
    fn rec(n: usize, d: usize, start: usize, cur: &mut Word, out: &mut Vec<Word>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, d, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, 0, &mut Vec::new(), &mut out);
    out
}

fn to_sparse(acc: BTreeMap<usize, Rational>) -> SparseVec {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl CeModule {
    pub fn new(c: &StructureConstants, degree: usize) -> Self {
        let n = c.dim();
        let basis = multisets(n, degree);
        let index: HashMap<Word, usize> = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let action = (0..n)
            .map(|i| {
                let cols = basis
                    .iter()
                    .map(|word| {
                        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                        // e_i acts on each factor x_j by x_j ↦ Σ_k c_ij^k x_k
                        for s in 0..word.len() {
                            for k in 0..n {
                                let coef = c.get(i, word[s], k);
                                if coef.is_zero() {
                                    continue;
                                }
                                let mut w = word.clone();
                                w[s] = k;
                                w.sort_unstable();
                                *acc.entry(index[&w]).or_insert_with(Rational::zero) += coef;
                            }
                        }
                        to_sparse(acc)
                    })
                    .collect();
                Matrix::from_columns(basis.len(), cols)
            })
            .collect();
        CeModule {
            degree,
            basis,
            action,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// `ρ([e_i, e_j]) = ρ(e_i)ρ(e_j) − ρ(e_j)ρ(e_i)` for all `i, j`.
    pub fn verify_bracket_relations(&self, c: &StructureConstants) -> bool {
        let n = c.dim();
        let dim = self.dim();
        for i in 0..n {
            for j in 0..n {
                for col in 0..dim {
                    let v: SparseVec = vec![(col, Rational::from_integer(1.into()))];
                    let a = self.action[i].apply(&self.action[j].apply(&v));
                    let b = self.action[j].apply(&self.action[i].apply(&v));
                    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                    for (r, q) in a {
                        *acc.entry(r).or_insert_with(Rational::zero) += q;
                    }
                    for (r, q) in b {
                        *acc.entry(r).or_insert_with(Rational::zero) -= q;
                    }
                    for k in 0..n {
                        let ck = c.get(i, j, k);
                        if ck.is_zero() {
                            continue;
                        }
                        for (r, q) in self.action[k].apply(&v) {
                            *acc.entry(r).or_insert_with(Rational::zero) -= ck * q;
                        }
                    }
                    if acc.values().any(|q| !q.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[cfg(test)]
    fn word_index(&self, w: &[usize]) -> usize {
        self.basis.iter().position(|b| b == w).unwrap()
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
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

/// Sign of the permutation sorting `seq`, or 0 if an entry repeats.
fn sort_sign(seq: &mut [usize]) -> i32 {
    let mut sign = 1;
    for i in 0..seq.len() {
        for j in 0..seq.len() - 1 - i {
            if seq[j] > seq[j + 1] {
                seq.swap(j, j + 1);
                sign = -sign;
            } else if seq[j] == seq[j + 1] {
                return 0;
            }
        }
    }
    if seq.windows(2).any(|w| w[0] == w[1]) {
        0
    } else {
        sign
    }
}

/// Matrix of `d : C^k → C^{k+1}` on `Hom(Λ^k𝔤, V)`. Cochain coordinates
/// are indexed by `(subset, module basis)` with subsets in lexicographic
/// order.
///
/// `(dω)(x_0,…,x_k) = Σ_s (−1)^s ρ(x_s) ω(…x̂_s…)
///                    + Σ_{s<t} (−1)^{s+t} ω([x_s,x_t], …x̂_s…x̂_t…)`
pub fn ce_differential(c: &StructureConstants, module: &CeModule, k: usize) -> Matrix {
    let n = c.dim();
    let vd = module.dim();
    let src = subsets(n, k);
    let tgt = subsets(n, k + 1);
    let src_index: HashMap<&Vec<usize>, usize> = src.iter().enumerate().map(|(i, s)| (s, i)).collect();
    // Row blocks of the image for each source subset, by linearity in v.
    let mut cols: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); src.len() * vd];
    for (ti, big) in tgt.iter().enumerate() {
        // first sum
        for s in 0..big.len() {
            let mut rest = big.clone();
            let xs = rest.remove(s);
            if let Some(&si) = src_index.get(&rest) {
                let sign = if s % 2 == 0 { 1 } else { -1 };
                for v in 0..vd {
                    let img = module.action(xs).column(v);
                    for (r, q) in img {
                        let e = cols[si * vd + v].entry(ti * vd + r).or_insert_with(Rational::zero);
                        *e += q * Rational::from_integer(sign.into());
                    }
                }
            }
        }
        // second sum
        for s in 0..big.len() {
            for t in s + 1..big.len() {
                let mut rest: Vec<usize> = big.clone();
                rest.remove(t);
                rest.remove(s);
                let sign_st: i32 = if (s + t) % 2 == 0 { 1 } else { -1 };
                for m in 0..n {
                    let cm = c.get(big[s], big[t], m);
                    if cm.is_zero() {
                        continue;
                    }
                    let mut seq = Vec::with_capacity(k);
                    seq.push(m);
                    seq.extend_from_slice(&rest);
                    let perm = sort_sign(&mut seq);
                    if perm == 0 {
                        continue;
                    }
                    let si = src_index[&seq];
                    let f = cm * Rational::from_integer((sign_st * perm).into());
                    for v in 0..vd {
                        let e = cols[si * vd + v].entry(ti * vd + v).or_insert_with(Rational::zero);
                        *e += &f;
                    }
                }
            }
        }
    }
    Matrix::from_columns(tgt.len() * vd, cols.into_iter().map(to_sparse).collect())
}

/// `dim H^k(𝔤, S^d𝔤)`.
pub fn ce_cohomology(c: &StructureConstants, k: usize, d: usize) -> Result<usize> {
    c.check_jacobi()?;
    let module = CeModule::new(c, d);
    if !module.verify_bracket_relations(c) {
        return Err(Error::Internal("module action fails the bracket relations".into()));
    }
    let n = c.dim();
    let cochains = subsets(n, k).len() * module.dim();
    let out_rank = ce_differential(c, &module, k).rank();
    let in_rank = if k == 0 { 0 } else { ce_differential(c, &module, k - 1).rank() };
    cochains
        .checked_sub(out_rank + in_rank)
        .ok_or_else(|| Error::Internal("CE ranks exceed the cochain dimension".into()))
}
