use super::{PolyError, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::Ideal;

/// Monic gcd computed as `f*g / lcm`, where `<lcm> = <f> ∩ <g>`.
pub fn multivariate_gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.ring() != g.ring() {
        return Err(PolyError::RingMismatch.into());
    }
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Err(Error::Precondition("gcd(0, 0) is undefined".into())),
        (true, false) => return Ok(g.monic()),
        (false, true) => return Ok(f.monic()),
        _ => {}
    }
    if f.is_constant() || g.is_constant() {
        return Ok(Polynomial::one(f.ring()));
    }
    let ring = f.ring();
    let inter = Ideal::new(ring, vec![f.clone()]).intersect(&Ideal::new(ring, vec![g.clone()]))?;
    let basis = inter.groebner_basis()?;
    if basis.len() != 1 {
        return Err(Error::Invariant(format!("intersection of principal ideals has {} basis elements", basis.len())));
    }
    Ok((f * g).exact_div(&basis[0])?.monic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Ring};

    #[test]
    fn gcd_examples() {
        let r = Ring::degrevlex(["x", "y", "z"]).unwrap();
        let p = |s: &str| parse_poly(s, &r).unwrap();
        assert_eq!(multivariate_gcd(&p("x^2*y"), &p("x*y^2")).unwrap(), p("x*y"));
        assert_eq!(multivariate_gcd(&p("2*x+4"), &p("0")).unwrap(), p("x+2"));
        assert_eq!(multivariate_gcd(&p("(x+y)*(x-z)^2"), &p("(x-z)*(y+z)")).unwrap(), p("x-z"));
        assert!(multivariate_gcd(&p("0"), &p("0")).is_err());
    }
}
