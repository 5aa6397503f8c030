mod common;

use common::*;
use poisson_pic::calculus::jacobi_check;
use poisson_pic::cohomology::{cohomology_dims, ComplexKind, SliceOptions};
use poisson_pic::gauge::AffineMap;
use poisson_pic::liealg::{builtin, ce_cohomology, ce_differential, linear_graded, linear_poisson, CeModule, StructureConstants};
use poisson_pic::polyalg::Rational;
use poisson_pic::Error;
use proptest::prelude::*;
use rand::Rng;

const NAMES: [&str; 5] = ["so3", "sl2", "heisenberg3", "aff1", "se2"];

/// Structure constants of `c` in the basis `e'_i = Σ_a A_ai e_a`.
fn change_basis(c: &StructureConstants, a: &[Vec<Rational>]) -> StructureConstants {
    let n = c.dim();
    let inv = AffineMap::linear(a.to_vec()).unwrap().inverse();
    let inv = inv.matrix();
    let zero = || Rational::from_integer(0.into());
    let mut out = vec![vec![vec![zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for m in 0..n {
                let mut s = zero();
                for x in 0..n {
                    for y in 0..n {
                        s += &a[x][i] * &a[y][j] * c.get(x, y, m);
                    }
                }
                for k in 0..n {
                    out[i][j][k] += &s * &inv[k][m];
                }
            }
        }
    }
    StructureConstants::new(out).unwrap()
}

fn random_constants(rng: &mut TestRng, n: usize) -> StructureConstants {
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut terms = Vec::new();
            for k in 0..n {
                if rng.gen_bool(0.4) {
                    terms.push((k, rational(rng)));
                }
            }
            brackets.push((i, j, terms));
        }
    }
    StructureConstants::from_brackets(n, brackets).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn jacobi_verdicts_agree(seed in any::<u64>(), n in 2usize..=4) {
        let c = random_constants(&mut rng(seed), n);
        prop_assert_eq!(c.jacobi_holds(), jacobi_check(linear_poisson(&c).bivector()));
    }

    #[test]
    fn ce_cohomology_is_basis_independent(seed in any::<u64>(), k in 0usize..=3, d in 0usize..=2) {
        let mut r = rng(seed);
        let c = builtin(NAMES[r.gen_range(0..NAMES.len())]).unwrap();
        let a = invertible_matrix(&mut r, c.dim());
        let c2 = change_basis(&c, &a);
        prop_assert!(c2.jacobi_holds());
        let m = CeModule::new(&c2, d);
        prop_assert!(m.verify_bracket_relations(&c2));
        prop_assert!(ce_differential(&c2, &m, k + 1).mul(&ce_differential(&c2, &m, k)).is_zero());
        prop_assert_eq!(ce_cohomology(&c2, k, d).unwrap(), ce_cohomology(&c, k, d).unwrap());
    }

    #[test]
    fn perturbed_constants_are_refused(seed in any::<u64>()) {
        let mut r = rng(seed);
        // so3 with one bracket nudged: [e1, e2] = e3 + t e1
        let t = nonzero_rational(&mut r);
        let one = Rational::from_integer(1.into());
        let c = StructureConstants::from_brackets(
            3,
            [(0, 1, vec![(2, one.clone()), (0, t)]), (1, 2, vec![(0, one.clone())]), (0, 2, vec![(1, -one)])],
        )
        .unwrap();
        prop_assert!(!c.jacobi_holds());
        prop_assert_eq!(ce_cohomology(&c, 1, 0), Err(Error::JacobiViolation));
        prop_assert!(!jacobi_check(linear_poisson(&c).bivector()));
    }
}

#[test]
fn linear_structures_agree_with_ce_in_top_degree() {
    for name in NAMES {
        let c = builtin(name).unwrap();
        let gp = linear_graded(&c).unwrap();
        let report = cohomology_dims(ComplexKind::Lichnerowicz, 3..=3, 0..=2, &gp, SliceOptions::default());
        let report = report.unwrap();
        for d in 0..=2 {
            let want = if c.dim() >= 3 { ce_cohomology(&c, 3, d as usize).unwrap() } else { 0 };
            assert_eq!(report.dim(ComplexKind::Lichnerowicz, 3, d), Some(want), "{name} d={d}");
        }
    }
}
