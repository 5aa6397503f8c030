//! Seeded random inputs shared by the integration tests.
#![allow(dead_code)]

use poisson_pic::cohomology::{differential_matrix, ComplexKind, GradedPoisson};
use poisson_pic::gauge::InfGaugePair;
use poisson_pic::liealg::{builtin, linear_poisson};
use poisson_pic::polyalg::{
    monomial_count, rational::ratio, Form, Monomial, Multivector, PoissonStructure, Polynomial,
    Rational,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut TestRng) -> Rational {
    let num = rng.gen_range(-5..=5);
    let den = rng.gen_range(1..=3);
    ratio(num, den)
}

pub fn nonzero_rational(rng: &mut TestRng) -> Rational {
    loop {
        let q = rational(rng);
        if q != ratio(0, 1) {
            return q;
        }
    }
}

/// Sparse polynomial with up to `terms` monomials of degree ≤ `max_deg`.
pub fn poly(rng: &mut TestRng, n: usize, max_deg: u32, terms: usize) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for _ in 0..rng.gen_range(0..=terms) {
        let d = rng.gen_range(0..=max_deg);
        let monos = Monomial::all_of_degree(n, d);
        debug_assert_eq!(monos.len(), monomial_count(n, d));
        let m = monos.choose(rng).unwrap().clone();
        p += &Polynomial::monomial(m, rational(rng));
    }
    p
}

/// Polynomial in the variables listed in `vars` only.
pub fn poly_in(rng: &mut TestRng, n: usize, vars: &[usize], max_deg: u32, terms: usize) -> Polynomial {
    let sub = poly(rng, vars.len(), max_deg, terms);
    let images: Vec<Polynomial> = vars.iter().map(|&i| Polynomial::var(n, i)).collect();
    if vars.is_empty() {
        return Polynomial::constant(n, sub.as_constant().unwrap_or_else(|| ratio(0, 1)));
    }
    sub.substitute(&images)
}

fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
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
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}

pub fn form(rng: &mut TestRng, n: usize, k: usize, max_deg: u32) -> Form {
    let entries: Vec<_> = tuples(n, k)
        .into_iter()
        .map(|idx| (idx, poly(rng, n, max_deg, 3)))
        .collect();
    Form::from_entries(n, k, entries)
}

pub fn multivector(rng: &mut TestRng, n: usize, k: usize, max_deg: u32) -> Multivector {
    let entries: Vec<_> = tuples(n, k)
        .into_iter()
        .map(|idx| (idx, poly(rng, n, max_deg, 3)))
        .collect();
    Multivector::from_entries(n, k, entries)
}

/// Closed 2-form `dη`.
pub fn exact_two_form(rng: &mut TestRng, n: usize, max_deg: u32) -> Form {
    poisson_pic::calculus::de_rham_d(&form(rng, n, 1, max_deg))
}

pub fn constant_bivector(rng: &mut TestRng, n: usize) -> Multivector {
    let entries: Vec<_> = tuples(n, 2)
        .into_iter()
        .map(|idx| (idx, Polynomial::constant(n, rational(rng))))
        .collect();
    Multivector::from_entries(n, 2, entries)
}

/// A Poisson bivector with coefficients of degree ≤ 3 from one of several
/// families that satisfy Jacobi by construction.
pub fn poisson(rng: &mut TestRng, n: usize) -> PoissonStructure {
    assert!((2..=4).contains(&n));
    let family = rng.gen_range(0..5);
    let bivector = match (family, n) {
        (0, _) => constant_bivector(rng, n),
        (1, _) => {
            // rank-two: f ∂_i∧∂_j
            let mut pair: Vec<usize> = (0..n).collect();
            pair.shuffle(rng);
            let f = poly(rng, n, 3, 3);
            Multivector::basis(n, &[pair[0], pair[1]], f)
        }
        (2, 3) => {
            // {x_i, x_j} = ε_ijk ∂_k C
            let c = poly(rng, 3, 4, 3);
            Multivector::from_entries(
                3,
                2,
                [
                    (vec![0, 1], c.partial_derivative(2)),
                    (vec![1, 2], c.partial_derivative(0)),
                    (vec![2, 0], c.partial_derivative(1)),
                ],
            )
        }
        (2, 4) => {
            let f = poly_in(rng, 4, &[0, 1], 3, 3);
            let g = poly_in(rng, 4, &[2, 3], 3, 3);
            Multivector::from_entries(4, 2, [(vec![0, 1], f), (vec![2, 3], g)])
        }
        (3, 2) => linear_poisson(&builtin("aff1").unwrap()).bivector().clone(),
        (3, 3) => {
            let name = ["so3", "sl2", "heisenberg3", "se2"].choose(rng).unwrap();
            linear_poisson(&builtin(name).unwrap()).bivector().clone()
        }
        (4, _) if n >= 3 => {
            // f(x_3) ∂_1∧∂_2
            let f = poly_in(rng, n, &[2], 3, 3);
            Multivector::basis(n, &[0, 1], f)
        }
        _ => {
            let f = poly(rng, n, 3, 2);
            Multivector::basis(n, &[0, 1], f)
        }
    };
    PoissonStructure::verified(bivector).expect("generator families satisfy Jacobi")
}

/// Homogeneous Poisson structure (for graded cohomology).
pub fn homogeneous_poisson(rng: &mut TestRng) -> PoissonStructure {
    match rng.gen_range(0..4) {
        0 => {
            let n = rng.gen_range(2..=4);
            PoissonStructure::verified(constant_bivector(rng, n)).unwrap()
        }
        1 => {
            let name = ["so3", "sl2", "heisenberg3", "se2", "aff1"].choose(rng).unwrap();
            linear_poisson(&builtin(name).unwrap())
        }
        2 => {
            let d = rng.gen_range(1..=2);
            let m = Monomial::all_of_degree(3, d);
            let f = Polynomial::monomial(m.choose(rng).unwrap().clone(), nonzero_rational(rng));
            PoissonStructure::verified(Multivector::basis(3, &[0, 1], f)).unwrap()
        }
        _ => PoissonStructure::zero(rng.gen_range(2..=3)),
    }
}

/// Random rational rotation in SO(3) by the Cayley transform.
pub fn rotation(rng: &mut TestRng) -> Vec<Vec<Rational>> {
    let (a, b, c) = (rational(rng), rational(rng), rational(rng));
    // R = (I − S)⁻¹(I + S) for skew S with entries (a, b, c)
    let one = ratio(1, 1);
    let zero = ratio(0, 1);
    let s = [
        [zero.clone(), -c.clone(), b.clone()],
        [c.clone(), zero.clone(), -a.clone()],
        [-b.clone(), a.clone(), zero.clone()],
    ];
    let id = |i: usize, j: usize| if i == j { one.clone() } else { zero.clone() };
    let minus: Vec<Vec<Rational>> = (0..3).map(|i| (0..3).map(|j| id(i, j) - &s[i][j]).collect()).collect();
    let plus: Vec<Vec<Rational>> = (0..3).map(|i| (0..3).map(|j| id(i, j) + &s[i][j]).collect()).collect();
    let inv = invert3(&minus);
    (0..3)
        .map(|i| {
            (0..3)
                .map(|j| (0..3).fold(zero.clone(), |acc, k| acc + &inv[i][k] * &plus[k][j]))
                .collect()
        })
        .collect()
}

fn invert3(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let c = |r: usize, s: usize| {
        let rows: Vec<usize> = (0..3).filter(|&x| x != r).collect();
        let cols: Vec<usize> = (0..3).filter(|&x| x != s).collect();
        &m[rows[0]][cols[0]] * &m[rows[1]][cols[1]] - &m[rows[0]][cols[1]] * &m[rows[1]][cols[0]]
    };
    let det = (0..3).fold(ratio(0, 1), |acc, j| {
        let t = &m[0][j] * c(0, j);
        if j % 2 == 0 { acc + t } else { acc - t }
    });
    (0..3)
        .map(|i| {
            (0..3)
                .map(|j| {
                    let v = c(j, i) / &det;
                    if (i + j) % 2 == 0 { v } else { -v }
                })
                .collect()
        })
        .collect()
}

/// Random invertible rational matrix.
pub fn invertible_matrix(rng: &mut TestRng, n: usize) -> Vec<Vec<Rational>> {
    loop {
        let m: Vec<Vec<Rational>> = (0..n).map(|_| (0..n).map(|_| rational(rng)).collect()).collect();
        if poisson_pic::gauge::AffineMap::linear(m.clone()).is_ok() {
            return m;
        }
    }
}

pub fn vector(rng: &mut TestRng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| rational(rng)).collect()
}

/// Random element of `𝔤_π` at weight `w`: a rational combination of a
/// basis of cone 1-cocycles.
pub fn algebra_member(rng: &mut TestRng, gp: &GradedPoisson, w: i64) -> InfGaugePair {
    let n = gp.dim();
    let slice = differential_matrix(ComplexKind::Cone, 1, w, gp).unwrap();
    let kernel = slice.matrix.nullspace();
    let mut acc: std::collections::BTreeMap<usize, Rational> = Default::default();
    for v in &kernel {
        let c = rational(rng);
        for (i, q) in v {
            *acc.entry(*i).or_insert_with(|| ratio(0, 1)) += &c * q;
        }
    }
    let v: Vec<(usize, Rational)> = acc.into_iter().filter(|(_, q)| *q != ratio(0, 1)).collect();
    let c = slice.basis.decode(&v);
    InfGaugePair::new(
        c.vector.unwrap_or_else(|| Multivector::zero(n, 1)),
        c.form.unwrap_or_else(|| Form::zero(n, 2)),
    )
    .unwrap()
}
