//! Gradient ideals, reducedness and freeness of divisors.

mod report;

use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::modsyz::{minimal_free_resolution, syzygies, BettiData, Column, GradedFree, GradedMatrix, Grading};
use crate::poly::{homogenize, weighted_weights, Polynomial, Rational, Ring, WeightClass};
use crate::verdict::Verdict;

pub use report::{analyze, AnalyzeOptions, CramerSummary, DivisorReport, GradientSummary, LinearTypeSummary, WeightSummary};

/// The ideal of all partial derivatives (zero partials included, so generator `i` is `f_{x_i}`).
pub fn gradient_ideal(f: &Polynomial) -> Result<Ideal> {
    if f.is_constant() {
        return Err(Error::Precondition("gradient ideal of a constant".into()));
    }
    Ok(Ideal::new(f.ring(), f.gradient()))
}

/// Reducedness in characteristic zero: `codim <f, grad f> >= 2`.
pub fn is_reduced(f: &Polynomial) -> Result<bool> {
    if f.is_constant() {
        return Err(Error::Precondition("reducedness of a constant".into()));
    }
    let mut gens = vec![f.clone()];
    gens.extend(f.gradient());
    Ok(Ideal::new(f.ring(), gens).codimension()? >= 2)
}

/// The grading in which the gradient ideal of `f` is homogeneous: standard for forms,
/// integer weights for weighted homogeneous input, none otherwise.
pub fn natural_grading(f: &Polynomial) -> Grading {
    if f.is_homogeneous() {
        return Grading::standard(f.ring());
    }
    match weighted_weights(f) {
        WeightClass::WeightedHomogeneous(w) => Grading::Weighted(w.integer.iter().map(|&x| x as u32).collect()),
        _ => Grading::Ungraded,
    }
}

/// Degree shifts of the partials `f_{x_i}` in the grading.
pub fn gradient_shifts(f: &Polynomial, grading: &Grading) -> Vec<i64> {
    let n = f.ring().arity();
    match grading {
        Grading::Weighted(w) => {
            let d = f.weighted_degree(w).unwrap_or(0) as i64;
            w.iter().map(|&wi| d - wi as i64).collect()
        }
        Grading::Ungraded => vec![0; n],
    }
}

#[derive(Clone, Debug)]
pub struct FreenessCheck {
    pub verdict: Verdict,
    pub codim: i64,
    pub smooth: bool,
    /// Minimal syzygies of the full gradient vector; `n x (n-1)` when free.
    pub syzygy_matrix: GradedMatrix,
    /// Betti table of `R/J`, for graded input with a proper gradient ideal.
    pub betti: Option<BettiData>,
    pub grading: Grading,
    pub note: Option<String>,
}

/// Minimal generating syzygies of the gradient of `f`, as a matrix with one row per variable.
pub fn gradient_syzygies(f: &Polynomial, grading: &Grading) -> Result<GradedMatrix> {
    let ring = f.ring();
    let shifts = gradient_shifts(f, grading);
    let cols: Vec<Column> = f.gradient().into_iter().map(|g| vec![g]).collect();
    let syz = syzygies(ring, &cols, &[0], grading)?;
    Ok(GradedMatrix::from_columns(ring, GradedFree::new(shifts), &syz, grading))
}

/// Freeness as perfection of codimension 2 of the gradient ideal.
///
/// Graded input is decided by the length of the minimal resolution and cross-checked
/// against the number of minimal syzygies. Ungraded input is free when the syzygy
/// module has `n - 1` generators and inconclusive otherwise.
pub fn is_free(f: &Polynomial) -> Result<FreenessCheck> {
    let n = f.ring().arity();
    if n < 2 {
        return Err(Error::Precondition("freeness needs at least two variables".into()));
    }
    if !is_reduced(f)? {
        return Err(Error::Precondition("input is not reduced".into()));
    }
    let j = gradient_ideal(f)?;
    let grading = natural_grading(f);
    let syz = gradient_syzygies(f, &grading)?;
    let count = syz.cols();
    let codim = j.codimension()?;
    if j.is_unit()? {
        let note = Some("gradient ideal is the unit ideal".to_string());
        return Ok(FreenessCheck { verdict: Verdict::True, codim, smooth: false, syzygy_matrix: syz, betti: None, grading, note });
    }
    let smooth = codim == n as i64 && n >= 3;
    let by_count = count == n - 1;
    if !grading.is_graded() {
        let verdict = if codim != 2 {
            Verdict::False
        } else if by_count {
            Verdict::True
        } else {
            Verdict::Inconclusive
        };
        let note = (verdict == Verdict::Inconclusive)
            .then(|| format!("ungraded input with {count} irredundant syzygies"));
        return Ok(FreenessCheck { verdict, codim, smooth, syzygy_matrix: syz, betti: None, grading, note });
    }
    let res = minimal_free_resolution(&j, &grading)?;
    let betti = res.betti();
    let free = codim == 2 && res.length() == 2;
    if free != (by_count && codim == 2) {
        return Err(Error::Invariant(format!(
            "resolution length {} disagrees with {count} minimal syzygies",
            res.length()
        )));
    }
    let note = smooth.then(|| "smooth: gradient ideal has codimension n".to_string());
    Ok(FreenessCheck { verdict: free.into(), codim, smooth, syzygy_matrix: syz, betti: Some(betti), grading, note })
}

/// For weighted homogeneous, non-homogeneous `f` of degree `d` with weights `a`, the vector
/// `((d a_1 - 1) x_1, ..., (d a_n - 1) x_n, -t)` annihilating the gradient of the homogenization.
/// Returns the homogenization and the vector after checking the identity.
pub fn lin_syzygy_of_homogenization(f: &Polynomial, newvar: &str) -> Result<(Polynomial, Column)> {
    if f.is_homogeneous() {
        return Err(Error::Precondition("input is already homogeneous".into()));
    }
    let WeightClass::WeightedHomogeneous(w) = weighted_weights(f) else {
        return Err(Error::Precondition("input is not weighted homogeneous".into()));
    };
    let d = Rational::from_integer(f.degree().expect("nonzero").into());
    let big = homogenize(f, newvar)?;
    let ring: &Arc<Ring> = big.ring();
    let n = f.ring().arity();
    let mut v: Column = (0..n)
        .map(|i| Polynomial::variable(ring, i).scale(&(&d * &w.rational[i] - Rational::one())))
        .collect();
    v.push(-Polynomial::variable(ring, n));
    let grad = big.gradient();
    let mut acc = Polynomial::zero(ring);
    for (a, g) in v.iter().zip(&grad) {
        acc = &acc + &(a * g);
    }
    if !acc.is_zero() {
        return Err(Error::Invariant("linear syzygy of the homogenization does not annihilate the gradient".into()));
    }
    Ok((big, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn xyz() -> Arc<Ring> {
        Ring::degrevlex(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn reducedness() {
        let r = xyz();
        assert!(!is_reduced(&parse_poly("x^2*y", &r).unwrap()).unwrap());
        assert!(is_reduced(&parse_poly("x*y*z*(x+y+z)", &r).unwrap()).unwrap());
        let r2 = Ring::degrevlex(["x", "y"]).unwrap();
        assert!(is_reduced(&parse_poly("(x+y)^2-(x+y)", &r2).unwrap()).unwrap());
    }

    #[test]
    fn freeness_examples() {
        let r = xyz();
        let arr2 = is_free(&parse_poly("x*y*z*(x+y)*(x+z)*(y+z)", &r).unwrap()).unwrap();
        assert_eq!(arr2.verdict, Verdict::False);
        assert_eq!(arr2.betti.unwrap().length(), 3);
        let quintic = is_free(&parse_poly("y^4*z+x^5+x^2*y^3+x*y^4+y^5", &r).unwrap()).unwrap();
        assert_eq!(quintic.verdict, Verdict::True);
        assert_eq!(quintic.syzygy_matrix.cols(), 2);
        let cusp = is_free(&parse_poly("y^2*z-x^3", &r).unwrap()).unwrap();
        assert_eq!(cusp.verdict, Verdict::False);
        let line = is_free(&parse_poly("x", &r).unwrap()).unwrap();
        assert_eq!(line.verdict, Verdict::True);
        let conic = is_free(&parse_poly("x^2+y*z", &r).unwrap()).unwrap();
        assert!(conic.smooth);
        assert_eq!(conic.verdict, Verdict::False);
    }

    #[test]
    fn ungraded_free_divisor() {
        let r = xyz();
        let c = is_free(&parse_poly("x*y*(x+y)*(x+y*z)", &r).unwrap()).unwrap();
        assert_eq!(c.grading, Grading::Ungraded);
        assert_eq!(c.verdict, Verdict::True);
    }

    #[test]
    fn linear_syzygy_of_cusp() {
        let r = Ring::degrevlex(["x", "y"]).unwrap();
        let (big, v) = lin_syzygy_of_homogenization(&parse_poly("y^3-x^2", &r).unwrap(), "z").unwrap();
        let p = |s: &str| parse_poly(s, big.ring()).unwrap();
        assert_eq!(v, vec![p("1/2*x"), p("0"), p("-z")]);
    }
}
