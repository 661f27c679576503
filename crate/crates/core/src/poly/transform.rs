//! Degree bookkeeping transformations: homogenization, dehomogenization and cones.

use std::sync::Arc;

use num_traits::One;

use super::{Monomial, PolyError, Polynomial, Rational, Ring, TermOrder};

/// Homogenizes `f` with a new last variable `newvar`, returning a polynomial of
/// degree `deg f` in the extended ring.
pub fn homogenize(f: &Polynomial, newvar: &str) -> Result<Polynomial, PolyError> {
    let d = f.degree().ok_or(PolyError::ZeroPolynomial)?;
    let ring = f.ring().extended(&[newvar], TermOrder::Degrevlex)?;
    let n = f.ring().arity();
    let terms = f.terms().iter().map(|(m, c)| {
        let mut e: Vec<u32> = m.exponents().collect();
        e.push(d - m.degree());
        debug_assert_eq!(e.len(), n + 1);
        (Monomial::from_exponents(&e), c.clone())
    });
    Ok(Polynomial::from_terms(&ring, terms))
}

/// Sets variable `var` to one and drops it from the ring.
pub fn dehomogenize(f: &Polynomial, var: usize) -> Result<Polynomial, PolyError> {
    let src = f.ring();
    if var >= src.arity() {
        return Err(PolyError::IndexOutOfRange(var));
    }
    let names: Vec<&String> = src.variables().iter().enumerate().filter(|(i, _)| *i != var).map(|(_, v)| v).collect();
    if names.is_empty() {
        return Err(PolyError::EmptyRing);
    }
    let ring = Ring::new(names.into_iter().cloned(), TermOrder::Degrevlex)?;
    let g = f.substitute(var, &Rational::one());
    let map: Vec<Option<usize>> = (0..src.arity())
        .map(|i| match i.cmp(&var) {
            std::cmp::Ordering::Less => Some(i),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(i - 1),
        })
        .collect();
    Ok(g.map_into(&ring, &map))
}

/// `t * homogenize(f, t)`.
pub fn cone(f: &Polynomial, newvar: &str) -> Result<Polynomial, PolyError> {
    let big_f = homogenize(f, newvar)?;
    let ring: &Arc<Ring> = big_f.ring();
    let t = Polynomial::variable(ring, ring.arity() - 1);
    Ok(&t * &big_f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn homogenize_cusp() {
        let r = Ring::degrevlex(["x", "y"]).unwrap();
        let f = parse_poly("y^3-x^2", &r).unwrap();
        let big_f = homogenize(&f, "z").unwrap();
        let r3 = big_f.ring().clone();
        assert_eq!(big_f, parse_poly("y^3-x^2*z", &r3).unwrap());
        assert!(big_f.is_homogeneous());
        assert_eq!(dehomogenize(&big_f, 2).unwrap(), f);
    }

    #[test]
    fn homogenize_keeps_homogeneous_input() {
        let r = Ring::degrevlex(["x", "y"]).unwrap();
        let f = parse_poly("x^2+x*y", &r).unwrap();
        let big_f = homogenize(&f, "t").unwrap();
        assert_eq!(big_f.to_string(), "x^2+x*y");
        assert_eq!(big_f.ring().arity(), 3);
    }

    #[test]
    fn homogenize_cn2() {
        let r = Ring::degrevlex(["x", "y", "z"]).unwrap();
        let f = parse_poly("x*y*(x+y)*(x+y*z)", &r).unwrap();
        let big_f = homogenize(&f, "t").unwrap();
        let r4 = big_f.ring().clone();
        assert_eq!(big_f, parse_poly("x*y*(x+y)*(x*t+y*z)", &r4).unwrap());
    }

    #[test]
    fn collision_is_an_error() {
        let r = Ring::degrevlex(["x", "y"]).unwrap();
        let f = parse_poly("y^3-x^2", &r).unwrap();
        assert!(matches!(homogenize(&f, "x"), Err(PolyError::VariableCollision(_))));
        assert!(matches!(cone(&f, "y"), Err(PolyError::VariableCollision(_))));
    }

    #[test]
    fn cone_of_cusp() {
        let r = Ring::degrevlex(["x", "y"]).unwrap();
        let f = parse_poly("y^3-x^2", &r).unwrap();
        let g = cone(&f, "z").unwrap();
        let r3 = g.ring().clone();
        assert_eq!(g, parse_poly("y^3*z-x^2*z^2", &r3).unwrap());
        assert_eq!(g.degree(), Some(f.degree().unwrap() + 1));
    }
}
