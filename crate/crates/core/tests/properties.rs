use std::sync::Arc;

use freediv::poly::{dehomogenize, euler_residual, homogenize, multivariate_gcd};
use freediv::{parse_poly, Ideal, Monomial, Polynomial, Rational, Ring};
use proptest::prelude::*;

fn ring() -> Arc<Ring> {
    Ring::degrevlex(["x", "y", "z"]).unwrap()
}

fn build(r: &Arc<Ring>, terms: &[([u32; 3], i64)]) -> Polynomial {
    Polynomial::from_terms(
        r,
        terms.iter().map(|(e, c)| (Monomial::from_exponents(e), Rational::from_integer((*c).into()))).collect::<Vec<_>>(),
    )
}

fn poly_strategy(max_deg: u32, max_terms: usize) -> impl Strategy<Value = Vec<([u32; 3], i64)>> {
    prop::collection::vec(([0..=max_deg, 0..=max_deg, 0..=max_deg].prop_map(|e| e), -6i64..=6), 0..=max_terms)
}

fn nonconstant(terms: Vec<([u32; 3], i64)>) -> Option<Polynomial> {
    let p = build(&ring(), &terms);
    (!p.is_constant()).then_some(p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in poly_strategy(3, 4), b in poly_strategy(3, 4), c in poly_strategy(3, 4)) {
        let r = ring();
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn print_then_parse(a in poly_strategy(4, 6), q in 1i64..=5) {
        let r = ring();
        let p = build(&r, &a).scale(&Rational::new(1.into(), q.into()));
        prop_assert_eq!(parse_poly(&p.to_string(), &r).unwrap(), p);
    }

    #[test]
    fn weighted_euler_identity(coeffs in prop::collection::vec(-5i64..=5, 6)) {
        // Monomials of weighted degree 12 for weights (2, 3, 4).
        let mons = [[6, 0, 0], [0, 4, 0], [0, 0, 3], [3, 2, 0], [2, 0, 2], [1, 2, 1]];
        let r = ring();
        let f = build(&r, &mons.iter().copied().zip(coeffs).collect::<Vec<_>>());
        let w: Vec<Rational> = [2, 3, 4].iter().map(|k| Rational::new((*k).into(), 12.into())).collect();
        prop_assert!(euler_residual(&f, &w).is_zero());
    }

    #[test]
    fn homogenize_round_trip(a in poly_strategy(3, 5)) {
        let f = build(&ring(), &a);
        prop_assume!(!f.is_zero());
        let big = homogenize(&f, "t").unwrap();
        prop_assert!(big.is_homogeneous());
        let back = dehomogenize(&big, 3).unwrap();
        prop_assert_eq!(back.to_string(), f.to_string());
    }

    #[test]
    fn gcd_divides_both(a in poly_strategy(2, 3), b in poly_strategy(2, 3), c in poly_strategy(2, 3)) {
        let r = ring();
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let (ac, bc) = (&a * &c, &b * &c);
        let g = multivariate_gcd(&ac, &bc).unwrap();
        prop_assert!(ac.exact_div(&g).is_ok());
        prop_assert!(bc.exact_div(&g).is_ok());
        prop_assert!(g.exact_div(&c).is_ok());
    }

    #[test]
    fn groebner_basis_ignores_generator_order(
        gens in prop::collection::vec(poly_strategy(2, 3), 2..=3),
        scale in 1i64..=4,
    ) {
        let gens: Vec<Polynomial> = gens.into_iter().filter_map(nonconstant).collect();
        prop_assume!(gens.len() >= 2);
        let r = ring();
        let a = Ideal::new(&r, gens.clone());
        let mut rev: Vec<Polynomial> = gens.iter().rev().map(|g| g.scale_int(scale)).collect();
        rev.push(&gens[0] * &gens[1]);
        let b = Ideal::new(&r, rev);
        prop_assert_eq!(a.groebner_basis().unwrap(), b.groebner_basis().unwrap());
    }

    #[test]
    fn lift_recombines(
        gens in prop::collection::vec(poly_strategy(2, 3), 2..=3),
        mults in prop::collection::vec(poly_strategy(1, 2), 3),
    ) {
        let gens: Vec<Polynomial> = gens.into_iter().filter_map(nonconstant).collect();
        prop_assume!(!gens.is_empty());
        let r = ring();
        let ideal = Ideal::new(&r, gens.clone());
        let h = gens.iter().zip(&mults).fold(Polynomial::zero(&r), |acc, (g, m)| &acc + &(&build(&r, m) * g));
        prop_assert!(ideal.contains(&h).unwrap());
        let coeffs = ideal.lift(&h).unwrap().expect("member");
        let back = coeffs.iter().zip(&gens).fold(Polynomial::zero(&r), |acc, (c, g)| &acc + &(c * g));
        prop_assert_eq!(back, h);
    }
}
