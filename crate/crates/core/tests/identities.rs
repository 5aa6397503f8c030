mod common;

use common::*;
use poisson_pic::calculus::{
    de_rham_d, evaluate_bivector, hamiltonian, koszul_bracket, lichnerowicz_d, lie_derivative,
    schouten, sharp, CONVENTION,
};
use poisson_pic::gauge::ideal_embed;
use poisson_pic::polyalg::{rational::int, Form, Multivector};
use proptest::prelude::*;

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 { 1 } else { -1 }
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 200,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn de_rham_squares_to_zero(seed in any::<u64>(), n in 1usize..=4, k in 0usize..=2) {
        let mut r = rng(seed);
        let w = form(&mut r, n, k.min(n), 3);
        prop_assert!(de_rham_d(&de_rham_d(&w)).is_zero());
    }

    #[test]
    fn lichnerowicz_squares_to_zero(seed in any::<u64>(), n in 2usize..=4, k in 0usize..=2) {
        let mut r = rng(seed);
        let pi = poisson(&mut r, n);
        let v = multivector(&mut r, n, k, 2);
        let once = lichnerowicz_d(&pi, &v).unwrap();
        prop_assert!(lichnerowicz_d(&pi, &once).unwrap().is_zero());
    }

    #[test]
    fn schouten_graded_antisymmetry(seed in any::<u64>(), n in 2usize..=4, p in 1usize..=2, q in 0usize..=2) {
        let mut r = rng(seed);
        let a = multivector(&mut r, n, p, 2);
        let b = multivector(&mut r, n, q, 2);
        let ab = schouten(&a, &b).unwrap();
        let ba = schouten(&b, &a).unwrap();
        let e = (p as i64 - 1) * (q as i64 - 1);
        prop_assert_eq!(ab, ba.scale(&int(-sign(e))));
    }

    #[test]
    fn schouten_leibniz(seed in any::<u64>(), n in 2usize..=4, p in 1usize..=2, q in 0usize..=1, s in 0usize..=1) {
        let mut r = rng(seed);
        let a = multivector(&mut r, n, p, 2);
        let b = multivector(&mut r, n, q, 2);
        let c = multivector(&mut r, n, s, 2);
        prop_assume!(q + s > 0);
        let lhs = schouten(&a, &b.wedge(&c).unwrap()).unwrap();
        let ab = schouten(&a, &b).unwrap();
        let ac = schouten(&a, &c).unwrap();
        let rhs = &ab.wedge(&c).unwrap() + &b.wedge(&ac).unwrap().scale(&int(sign(((p - 1) * q) as i64)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn schouten_graded_jacobi(seed in any::<u64>(), n in 2usize..=4, p in 1usize..=2, q in 1usize..=2, s in 1usize..=2) {
        let mut r = rng(seed);
        let a = multivector(&mut r, n, p, 2);
        let b = multivector(&mut r, n, q, 2);
        let c = multivector(&mut r, n, s, 2);
        let br = |x: &Multivector, y: &Multivector| schouten(x, y).unwrap();
        let t1 = br(&a, &br(&b, &c)).scale(&int(sign(((p - 1) * (s - 1)) as i64)));
        let t2 = br(&b, &br(&c, &a)).scale(&int(sign(((q - 1) * (p - 1)) as i64)));
        let t3 = br(&c, &br(&a, &b)).scale(&int(sign(((s - 1) * (q - 1)) as i64)));
        prop_assert!((&(&t1 + &t2) + &t3).is_zero());
    }

    #[test]
    fn sharp_intertwines_differentials(seed in any::<u64>(), n in 2usize..=4, k in 0usize..=2) {
        let mut r = rng(seed);
        let pi = poisson(&mut r, n);
        let a = form(&mut r, n, k, 2);
        let lhs = sharp(&pi, &de_rham_d(&a)).unwrap();
        let rhs = lichnerowicz_d(&pi, &sharp(&pi, &a).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs.scale(&int(CONVENTION.chain_map_sign.into())));
    }

    #[test]
    fn koszul_maps_to_lie_bracket(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = rng(seed);
        let pi = poisson(&mut r, n);
        let a = form(&mut r, n, 1, 2);
        let b = form(&mut r, n, 1, 2);
        let k = koszul_bracket(&pi, &a, &b).unwrap();
        let lhs = sharp(&pi, &k).unwrap();
        let rhs = schouten(&sharp(&pi, &a).unwrap(), &sharp(&pi, &b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn differential_of_koszul_bracket(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = rng(seed);
        let pi = poisson(&mut r, n);
        let a = form(&mut r, n, 1, 2);
        let b = form(&mut r, n, 1, 2);
        let lhs = de_rham_d(&koszul_bracket(&pi, &a, &b).unwrap());
        let la = lie_derivative(&sharp(&pi, &a).unwrap(), &de_rham_d(&b)).unwrap();
        let lb = lie_derivative(&sharp(&pi, &b).unwrap(), &de_rham_d(&a)).unwrap();
        prop_assert_eq!(lhs, &la - &lb);
    }

    #[test]
    fn koszul_on_exact_forms(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = rng(seed);
        let pi = poisson(&mut r, n);
        let f = Form::scalar(poly(&mut r, n, 3, 3));
        let g = Form::scalar(poly(&mut r, n, 3, 3));
        let (df, dg) = (de_rham_d(&f), de_rham_d(&g));
        let bracket = evaluate_bivector(&pi, &df, &dg).unwrap();
        prop_assert_eq!(koszul_bracket(&pi, &df, &dg).unwrap(), de_rham_d(&Form::scalar(bracket.clone())));
        // {f, g} = X_f(g)
        let xf = hamiltonian(&pi, &f.as_scalar()).unwrap();
        prop_assert_eq!(lie_derivative(&xf, &g).unwrap().as_scalar(), bracket);
    }

    #[test]
    fn hamiltonian_flow_of_one_forms(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = rng(seed);
        let pi = poisson(&mut r, n);
        let eta = form(&mut r, n, 1, 2);
        let x = sharp(&pi, &eta).unwrap();
        let lhs = lie_derivative(&x, pi.bivector()).unwrap();
        prop_assert_eq!(&lhs, &sharp(&pi, &de_rham_d(&eta)).unwrap());
        prop_assert!(ideal_embed(&eta, &pi).unwrap().check(&pi));
    }
}
