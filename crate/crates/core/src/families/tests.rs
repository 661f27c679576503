use super::sweeps::*;
use super::*;
use crate::poly::{weighted_weights, WeightClass};

fn annihilates(f: &Polynomial, col: &[Polynomial]) -> bool {
    let grad = f.gradient();
    let mut acc = Polynomial::zero(f.ring());
    for (a, g) in col.iter().zip(&grad) {
        acc = &acc + &(a * g);
    }
    acc.is_zero()
}

#[test]
fn quintic_constructor() {
    let m = quintic_plus(5, &[int(1), int(1), int(1), int(1)]).unwrap();
    let r = m.polynomial.ring().clone();
    assert_eq!(m.polynomial, parse_poly("y^4*z+x^5+x^2*y^3+x*y^4+y^5", &r).unwrap());
    assert_eq!(m.spec.expected.syzygy_degrees, Some(vec![2, 2]));
    assert_eq!(m.spec.expected.linear_type, Some(true));
    let six = quintic_plus(6, &[int(1), int(1), int(0), int(0)]).unwrap();
    assert_eq!(six.spec.expected.linear_type, Some(false));
    assert!(quintic_plus(5, &[int(0), int(1), int(1), int(1)]).is_err());
    assert!(quintic_plus(4, &[int(1), int(1), int(1), int(1)]).is_err());
}

#[test]
fn addition_constructor() {
    let m = addition(3, &[1, 1], &[1]).unwrap();
    let r = m.polynomial.ring().clone();
    assert_eq!(m.polynomial, parse_poly("x1^2*x2-x1*x3^2", &r).unwrap());
    assert!(addition(3, &[2, 0], &[1]).is_err());
    assert!(addition(4, &[1, 1, 2], &[1, 1]).is_err());
    for m in addition_instances().unwrap() {
        let cols = addition_linear_syzygies(&m).unwrap();
        assert_eq!(cols.len(), m.polynomial.ring().arity() - 2);
        assert!(cols.iter().all(|c| annihilates(&m.polynomial, c)));
    }
}

#[test]
fn cusp_with_tangent_is_addition() {
    let m = cusp_with_tangent(2, 5).unwrap();
    let r = m.polynomial.ring().clone();
    assert_eq!(m.polynomial, parse_poly("(x1^2*x2^3-x3^5)*x1", &r).unwrap());
    assert!(cusp_with_tangent(5, 5).is_err());
}

#[test]
fn addition2_constructor() {
    for m in addition2_instances().unwrap() {
        let [s0, s1] = addition2_syzygies(&m).unwrap();
        assert!(annihilates(&m.polynomial, &s0));
        assert!(annihilates(&m.polynomial, &s1));
        assert_eq!(m.spec.expected.free, Some(true));
    }
    let preset = addition2_boundary_preset().unwrap();
    let r = preset.polynomial.ring().clone();
    assert_eq!(preset.polynomial, parse_poly("(x3^2-x2*x1)*x1", &r).unwrap());
    assert_eq!(preset.spec.expected.strength, Strength::Observed);
    let hr = Ring::degrevlex(["x1", "x2"]).unwrap();
    let bad = parse_poly("x1^2*x2", &hr).unwrap();
    assert!(addition2(4, 4, 1, &bad).is_err());
    let wrong_degree = parse_poly("x1*x2", &hr).unwrap();
    assert!(addition2(4, 4, 1, &wrong_degree).is_err());
}

#[test]
fn binary_weights_and_cases() {
    for (p, q, s, c) in binary_instances(7) {
        let m = binary_wh(p, q, s, &c).unwrap();
        let WeightClass::WeightedHomogeneous(w) = weighted_weights(&m.polynomial) else {
            panic!("not weighted homogeneous: {}", m.polynomial);
        };
        assert_eq!(w.integer, vec![p as u64, q as u64], "{}", m.polynomial);
        let case = binary_case(p, q, s, &m.polynomial);
        assert_eq!(case == 1, divisible_by_axis(&m.polynomial), "{}", m.polynomial);
    }
    for (p, q, s) in BINARY_TRIPLES {
        let m = binary_wh(p, q, s, &BinaryCoefficients::ones(s)).unwrap();
        assert_eq!(m.spec.params["case"], "2");
    }
    assert!(binary_wh(2, 4, 1, &BinaryCoefficients::ones(1)).is_err());
    let homog = binary_wh(1, 1, 3, &BinaryCoefficients::ones(3)).unwrap();
    assert_eq!(homog.spec.params["case"], "none");
}

#[test]
fn resolution_templates() {
    let six = three_vars_betti(1, 6);
    assert_eq!(six.shifts(1), vec![5, 5, 5]);
    assert_eq!(six.shifts(2), vec![6, 9]);
    let c = cone_betti(3);
    assert_eq!(c.shifts(1), vec![3, 3, 3]);
    assert_eq!(c.shifts(2), vec![4, 5]);
    let m = binary_wh(3, 2, 1, &BinaryCoefficients { cx: int(-1), cy: int(1), middle: vec![] }).unwrap();
    let b = expected_resolution(&m.spec).unwrap();
    assert_eq!(b.shifts(2), vec![3, 4, 4]);
    assert_eq!(b.shifts(3), vec![5]);
    assert!(expected_resolution(&named_example("cn1").unwrap().spec).is_err());
}

#[test]
fn cone_preconditions() {
    assert!(cone_of_binary_wh(3, 2, 1, &BinaryCoefficients::ones(1)).is_ok());
    // x + y^2 is smooth at the origin
    assert!(cone_of_binary_wh(1, 2, 1, &BinaryCoefficients::ones(1)).is_err());
}

#[test]
fn named_tags() {
    for tag in NAMED_TAGS.iter().filter(|t| **t != "cayley") {
        named_example(tag).unwrap();
    }
    assert!(matches!(named_example("cayley"), Err(Error::Precondition(_))));
    assert!(matches!(named_example("nope"), Err(Error::Precondition(_))));
    assert_eq!(named_example("cn1_homogenized").unwrap().polynomial.ring().arity(), 4);
}

#[test]
fn random_coefficients_are_seeded() {
    assert_eq!(random_coefficients(5, 3), random_coefficients(5, 3));
    assert!(random_coefficients(20, 1).iter().all(|c| !c.is_zero()));
}

#[test]
fn undecided_verdicts_are_unchecked_not_mismatched() {
    use crate::divisor::{analyze, AnalyzeOptions};
    let m = named_example("cn2").unwrap();
    let report = analyze(&m.polynomial, AnalyzeOptions::default()).unwrap();
    assert_eq!(report.linear_type.verdict, Verdict::NotComputed);
    assert!(compare(&m.spec.expected, &report).is_empty());
    assert_eq!(unchecked(&m.spec.expected, &report), vec!["linear_type", "syzygetic"]);

    let mut wrong = m.spec.expected.clone();
    wrong.free = Some(false);
    let d = compare(&wrong, &report);
    assert_eq!(d.len(), 1);
    assert_eq!(d[0].field, "free");
}
