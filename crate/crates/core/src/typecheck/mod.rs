//! Symmetric and Rees algebras of ideals: linear type, syzygetic and Koszul tests.

use std::sync::Arc;

use serde::Serialize;

use crate::divisor::{gradient_ideal, gradient_shifts, is_free, natural_grading};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg::minors;
use crate::modsyz::{
    koszul_syzygies, minimal_columns, submodule_intersect, syzygies, Column, GradedFree, GradedMatrix, Grading,
    Submodule,
};
use crate::poly::{weighted_weights, Polynomial, Ring, TermOrder, WeightClass};
use crate::verdict::Verdict;

/// `R[T_1..T_m]` together with the T-linear forms of the syzygies of `f_1..f_m`.
#[derive(Clone, Debug)]
pub struct BlowupPresentation {
    pub base: Arc<Ring>,
    pub extended: Arc<Ring>,
    pub generators: Vec<Polynomial>,
    pub syzygy_matrix: GradedMatrix,
    /// One T-linear form per minimal syzygy column.
    pub symmetric: Vec<Polynomial>,
    pub grading: Grading,
}

impl BlowupPresentation {
    pub fn t_variable(&self, i: usize) -> Polynomial {
        Polynomial::variable(&self.extended, self.base.arity() + i)
    }

    pub fn symmetric_ideal(&self) -> Ideal {
        Ideal::new(&self.extended, self.symmetric.clone())
    }

    /// T-degree of a T-homogeneous polynomial of the extended ring.
    pub fn t_degree(&self, p: &Polynomial) -> u32 {
        let n = self.base.arity();
        p.terms().first().map(|(m, _)| (n..self.extended.arity()).map(|i| m.exponent(i)).sum()).unwrap_or(0)
    }

    /// Degree in the base variables (x-degree) of a bihomogeneous polynomial.
    pub fn r_degree(&self, p: &Polynomial) -> u32 {
        let n = self.base.arity();
        p.terms().first().map(|(m, _)| (0..n).map(|i| m.exponent(i)).sum()).unwrap_or(0)
    }

    /// `sum_i c_i T_i` for a column `c` over the base ring.
    pub fn linear_form(&self, col: &[Polynomial]) -> Polynomial {
        let embed: Vec<Option<usize>> = (0..self.base.arity()).map(Some).collect();
        let mut acc = Polynomial::zero(&self.extended);
        for (i, c) in col.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(&c.map_into(&self.extended, &embed) * &self.t_variable(i));
            }
        }
        acc
    }
}

/// Extends `base` by fresh variables `T1..Tm` (degrevlex).
pub fn extended_ring(base: &Arc<Ring>, m: usize) -> Result<Arc<Ring>> {
    let names: Vec<String> = (1..=m).map(|i| base.fresh_name(&format!("T{i}"))).collect();
    Ok(base.extended(&names, TermOrder::Degrevlex)?)
}

fn grading_of(ideal: &Ideal) -> Grading {
    let std = Grading::standard(ideal.ring());
    if ideal.generators().iter().all(|g| g.is_zero() || std.is_homogeneous(g)) {
        std
    } else {
        Grading::Ungraded
    }
}

/// Symmetric algebra presentation of an ideal, using a minimal (or irredundant) generating set.
pub fn symmetric_ideal(ideal: &Ideal) -> Result<BlowupPresentation> {
    symmetric_ideal_graded(ideal, &grading_of(ideal))
}

pub fn symmetric_ideal_graded(ideal: &Ideal, grading: &Grading) -> Result<BlowupPresentation> {
    let base = ideal.ring().clone();
    let cols: Vec<Column> = ideal.generators().iter().map(|g| vec![g.clone()]).collect();
    let gens: Vec<Polynomial> = minimal_columns(&base, &[0], cols, grading)?.into_iter().map(|c| c[0].clone()).collect();
    let gen_cols: Vec<Column> = gens.iter().map(|g| vec![g.clone()]).collect();
    let shifts: Vec<i64> = gens.iter().map(|g| grading.degree(g).unwrap_or(0)).collect();
    let syz = syzygies(&base, &gen_cols, &[0], grading)?;
    let matrix = GradedMatrix::from_columns(&base, GradedFree::new(shifts), &syz, grading);
    let extended = extended_ring(&base, gens.len())?;
    let mut pres = BlowupPresentation {
        base,
        extended,
        generators: gens,
        syzygy_matrix: matrix,
        symmetric: Vec::new(),
        grading: grading.clone(),
    };
    pres.symmetric = syz.iter().map(|c| pres.linear_form(c)).collect();
    Ok(pres)
}

/// Rees ideal: eliminate `u` from `<T_i - u f_i>`. Generators are returned in the extended ring.
pub fn rees_ideal(pres: &BlowupPresentation, degree_cap: Option<u32>) -> Result<Ideal> {
    let ext = &pres.extended;
    let u = ext.fresh_name("u");
    let mut names = vec![u];
    names.extend(ext.variables().iter().cloned());
    let big = Ring::new(names, TermOrder::Block(1))?;
    let n = pres.base.arity();
    let up_base: Vec<Option<usize>> = (0..n).map(|i| Some(i + 1)).collect();
    let uvar = Polynomial::variable(&big, 0);
    let gens: Vec<Polynomial> = pres
        .generators
        .iter()
        .enumerate()
        .map(|(i, f)| &Polynomial::variable(&big, n + 1 + i) - &(&uvar * &f.map_into(&big, &up_base)))
        .collect();
    let kept = Ideal::new(&big, gens).with_degree_cap(degree_cap).eliminate_in_place(&[0])?;
    let down: Vec<Option<usize>> = std::iter::once(None).chain((0..ext.arity()).map(Some)).collect();
    Ok(Ideal::new(ext, kept.iter().map(|g| g.map_into(ext, &down)).collect()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Fitting,
    Rees,
    Both,
}

#[derive(Clone, Debug)]
pub struct F1Report {
    pub passed: bool,
    /// `(t, codim I_t(phi), required bound)`.
    pub codims: Vec<(usize, i64, i64)>,
    pub first_failure: Option<usize>,
}

/// Checks `codim I_t(phi) >= n + 1 - t` for `1 <= t <= rank`, stopping at the first failure.
pub fn fitting_f1(phi: &GradedMatrix, n: usize) -> Result<F1Report> {
    let rank = phi.rows().min(phi.cols());
    let mut report = F1Report { passed: true, codims: Vec::new(), first_failure: None };
    for t in 1..=rank {
        let ms = minors(&phi.entries, t);
        let codim = if ms.is_empty() { 0 } else { Ideal::new(&phi.ring, ms).codimension()? };
        let bound = n as i64 + 1 - t as i64;
        report.codims.push((t, codim, bound));
        if codim < bound {
            report.passed = false;
            report.first_failure = Some(t);
            break;
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct FittingEvidence {
    /// `codim I_1(phi)` (three generators, three variables).
    pub entry_codim: Option<i64>,
    /// Per-`t` codimensions for perfect codimension-2 ideals.
    pub f1: Option<F1Report>,
    pub verdict: bool,
}

#[derive(Clone, Debug)]
pub struct ReesEvidence {
    pub rees: Ideal,
    /// Rees generators outside the symmetric ideal, with (R-degree, T-degree).
    pub outside: Vec<(Polynomial, (u32, u32))>,
    pub verdict: bool,
}

#[derive(Clone, Debug)]
pub struct LinearTypeCheck {
    pub verdict: Verdict,
    pub route: Route,
    pub fitting: Option<FittingEvidence>,
    pub rees: Option<ReesEvidence>,
    pub note: Option<String>,
}

/// Fitting-ideal decision when its hypotheses hold: three generators of a codimension-2
/// ideal in three variables (`codim I_1 = 3`), or a perfect codimension-2 ideal (condition F1).
pub fn fitting_route(pres: &BlowupPresentation) -> Result<Option<FittingEvidence>> {
    if !pres.grading.is_graded() {
        return Ok(None);
    }
    let ideal = Ideal::new(&pres.base, pres.generators.clone());
    if ideal.codimension()? != 2 {
        return Ok(None);
    }
    let m = pres.generators.len();
    let phi = &pres.syzygy_matrix;
    if phi.cols() + 1 == m {
        let f1 = fitting_f1(phi, m)?;
        let verdict = f1.passed;
        return Ok(Some(FittingEvidence { entry_codim: f1.codims.first().map(|c| c.1), f1: Some(f1), verdict }));
    }
    if m == 3 && pres.base.arity() == 3 {
        let entries = phi.entry_ideal_generators();
        let codim = if entries.is_empty() { 0 } else { Ideal::new(&pres.base, entries).codimension()? };
        return Ok(Some(FittingEvidence { entry_codim: Some(codim), f1: None, verdict: codim == 3 }));
    }
    Ok(None)
}

/// Rees-ideal decision: linear type iff every Rees generator lies in the symmetric ideal.
pub fn rees_route(pres: &BlowupPresentation, degree_cap: Option<u32>) -> Result<ReesEvidence> {
    let rees = rees_ideal(pres, degree_cap)?;
    let sym = pres.symmetric_ideal();
    let mut outside = Vec::new();
    for g in rees.generators() {
        if !sym.contains(g)? {
            outside.push((g.clone(), (pres.r_degree(g), pres.t_degree(g))));
        }
    }
    let verdict = outside.is_empty();
    Ok(ReesEvidence { rees, outside, verdict })
}

pub fn is_linear_type(ideal: &Ideal, route: Route, degree_cap: Option<u32>) -> Result<LinearTypeCheck> {
    let pres = symmetric_ideal(ideal)?;
    linear_type_of(&pres, route, degree_cap)
}

pub fn linear_type_of(pres: &BlowupPresentation, route: Route, degree_cap: Option<u32>) -> Result<LinearTypeCheck> {
    let fitting = if route == Route::Rees { None } else { fitting_route(pres)? };
    let need_rees = route != Route::Fitting || fitting.is_none();
    let mut note = None;
    if route != Route::Rees && fitting.is_none() {
        note = Some("fitting hypotheses do not hold; decided by the Rees ideal".to_string());
    }
    let rees = if need_rees {
        match rees_route(pres, degree_cap) {
            Ok(r) => Some(r),
            Err(Error::Groebner(e)) => {
                return Ok(LinearTypeCheck {
                    verdict: fitting.as_ref().map(|f| f.verdict.into()).unwrap_or(Verdict::Inconclusive),
                    route: if fitting.is_some() { Route::Fitting } else { Route::Rees },
                    fitting,
                    rees: None,
                    note: Some(e.to_string()),
                })
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let used = match (&fitting, &rees) {
        (Some(_), Some(_)) => Route::Both,
        (Some(_), None) => Route::Fitting,
        _ => Route::Rees,
    };
    if let (Some(f), Some(r)) = (&fitting, &rees) {
        if f.verdict != r.verdict {
            return Err(Error::Invariant(format!(
                "linear type routes disagree: fitting says {}, rees says {}",
                f.verdict, r.verdict
            )));
        }
    }
    let verdict = fitting.as_ref().map(|f| f.verdict).or(rees.as_ref().map(|r| r.verdict)).expect("some route ran");
    Ok(LinearTypeCheck { verdict: verdict.into(), route: used, fitting, rees, note })
}

#[derive(Clone, Debug)]
pub struct SyzygeticCheck {
    pub verdict: bool,
    /// Rees generators of T-degree 2 outside the symmetric ideal.
    pub quadratic_outside: Vec<Polynomial>,
}

/// Syzygetic test: every Rees generator of T-degree 2 lies in the symmetric ideal.
pub fn is_syzygetic(pres: &BlowupPresentation, rees: &Ideal) -> Result<SyzygeticCheck> {
    let sym = pres.symmetric_ideal();
    let mut quadratic_outside = Vec::new();
    for g in rees.generators() {
        if pres.t_degree(g) == 2 && !sym.contains(g)? {
            quadratic_outside.push(g.clone());
        }
    }
    Ok(SyzygeticCheck { verdict: quadratic_outside.is_empty(), quadratic_outside })
}

#[derive(Clone, Debug)]
pub struct KoszulSaturationCheck {
    pub verdict: bool,
    /// Generators of `Z ∩ I^sat R^m` that are not Koszul.
    pub non_koszul: Vec<Column>,
}

/// Tests `Z(I) ∩ I^sat R^m = K(I)` on the given generators.
pub fn koszul_saturation_check(ideal: &Ideal, saturated: &Ideal) -> Result<KoszulSaturationCheck> {
    let ring = ideal.ring();
    let gens = ideal.generators().to_vec();
    let m = gens.len();
    let cols: Vec<Column> = gens.iter().map(|g| vec![g.clone()]).collect();
    let grading = grading_of(ideal);
    let z = syzygies(ring, &cols, &[0], &grading)?;
    let mut sat_cols = Vec::new();
    for s in saturated.generators() {
        for i in 0..m {
            let mut c = vec![Polynomial::zero(ring); m];
            c[i] = s.clone();
            sat_cols.push(c);
        }
    }
    let inter = submodule_intersect(ring, m, &z, &sat_cols)?;
    let k = koszul_syzygies(&gens);
    let kmod = Submodule::new(ring, m, k.clone());
    let mut non_koszul = Vec::new();
    for c in &inter {
        if !kmod.contains(c)? {
            non_koszul.push(c.clone());
        }
    }
    let imod = Submodule::new(ring, m, inter);
    let k_inside = imod.contains_module(&kmod)?;
    Ok(KoszulSaturationCheck { verdict: non_koszul.is_empty() && k_inside, non_koszul })
}

#[derive(Clone, Debug)]
pub struct KoszulFreeCheck {
    pub verdict: Verdict,
    pub codim: Option<i64>,
    pub reason: Option<String>,
}

/// Euler-type vector field coefficients `(a_1 x_1, ..., a_n x_n)` scaled to integers, if `f` is Eulerian.
fn euler_column(f: &Polynomial) -> Option<Column> {
    let ring = f.ring();
    let w = match weighted_weights(f) {
        WeightClass::WeightedHomogeneous(w) | WeightClass::EulerianZeroWeights(w) => w,
        WeightClass::None => return None,
    };
    Some((0..ring.arity()).map(|i| Polynomial::variable(ring, i).scale_int(w.integer[i] as i64)).collect())
}

/// Koszul freeness: free, and the ideal of symbols of logarithmic derivations
/// (Euler form plus T-linearized syzygies) has codimension `n` in `R[T]`.
/// Only three variables unless `extend_n` is set.
pub fn is_koszul_free(f: &Polynomial, extend_n: bool) -> Result<KoszulFreeCheck> {
    let n = f.ring().arity();
    if n != 3 && !extend_n {
        return Ok(KoszulFreeCheck {
            verdict: Verdict::NotComputed,
            codim: None,
            reason: Some("defined here for three variables; pass extend_n for the n-variable test".into()),
        });
    }
    let free = is_free(f)?;
    if free.verdict != Verdict::True {
        let verdict = if free.verdict == Verdict::False { Verdict::False } else { Verdict::Inconclusive };
        return Ok(KoszulFreeCheck { verdict, codim: None, reason: Some("not free".into()) });
    }
    let Some(euler) = euler_column(f) else {
        return Err(Error::Precondition("no Euler-type derivation: input is not Eulerian".into()));
    };
    let j = gradient_ideal(f)?;
    let grading = natural_grading(f);
    let ring = f.ring();
    let cols: Vec<Column> = j.generators().iter().map(|g| vec![g.clone()]).collect();
    let syz = syzygies(ring, &cols, &[0], &grading)?;
    let extended = extended_ring(ring, n)?;
    let pres = BlowupPresentation {
        base: ring.clone(),
        extended,
        generators: j.generators().to_vec(),
        syzygy_matrix: GradedMatrix::from_columns(ring, GradedFree::new(gradient_shifts(f, &grading)), &syz, &grading),
        symmetric: Vec::new(),
        grading,
    };
    let mut gens: Vec<Polynomial> = syz.iter().map(|c| pres.linear_form(c)).collect();
    gens.push(pres.linear_form(&euler));
    let codim = Ideal::new(&pres.extended, gens).codimension()?;
    Ok(KoszulFreeCheck { verdict: (codim == n as i64).into(), codim: Some(codim), reason: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn xyz() -> Arc<Ring> {
        Ring::degrevlex(["x", "y", "z"]).unwrap()
    }

    fn grad(f: &str) -> Ideal {
        let r = xyz();
        gradient_ideal(&parse_poly(f, &r).unwrap()).unwrap()
    }

    #[test]
    fn complete_intersection_is_linear_type() {
        let r = xyz();
        let i = Ideal::new(&r, vec![parse_poly("x", &r).unwrap(), parse_poly("y", &r).unwrap()]);
        let pres = symmetric_ideal(&i).unwrap();
        assert_eq!(pres.symmetric.len(), 1);
        let lt = is_linear_type(&i, Route::Rees, None).unwrap();
        assert_eq!(lt.verdict, Verdict::True);
        let rees = rees_ideal(&pres, None).unwrap();
        assert!(is_syzygetic(&pres, &rees).unwrap().verdict);
    }

    #[test]
    fn arrangement_routes_agree() {
        let lt = is_linear_type(&grad("x*y*z*(x+y+z)"), Route::Both, None).unwrap();
        assert_eq!(lt.verdict, Verdict::True);
        assert_eq!(lt.route, Route::Both);
    }

    #[test]
    fn sextic_is_not_linear_type() {
        let i = grad("x^6+x^3*y^3+x^2*y^4+y^5*z");
        let lt = is_linear_type(&i, Route::Both, None).unwrap();
        assert_eq!(lt.verdict, Verdict::False);
        let pres = symmetric_ideal(&i).unwrap();
        let rees = lt.rees.unwrap();
        assert!(rees.outside.iter().any(|(_, bd)| *bd == (2, 2)));
        assert!(!is_syzygetic(&pres, &rees.rees).unwrap().verdict);
        let sat = i.saturate_maximal().unwrap();
        assert!(!koszul_saturation_check(&i, &sat.saturated).unwrap().verdict);
    }

    #[test]
    fn arrangement_koszul_saturation() {
        let i = grad("x*y*z*(x+y+z)");
        let sat = i.saturate_maximal().unwrap();
        assert!(koszul_saturation_check(&i, &sat.saturated).unwrap().verdict);
    }

    #[test]
    fn koszul_freeness() {
        let r = xyz();
        assert_eq!(is_koszul_free(&parse_poly("x*y*z", &r).unwrap(), false).unwrap().verdict, Verdict::True);
        let cn2 = parse_poly("x*y*(x+y)*(x+y*z)", &r).unwrap();
        assert_eq!(is_koszul_free(&cn2, false).unwrap().verdict, Verdict::False);
    }
}
