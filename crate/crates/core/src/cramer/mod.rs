//! Content matrices of saturation pivots and the generic saturation condition.

use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{Ideal, SaturationData};
use crate::linalg::{determinant, minors};
use crate::modsyz::{minimal_free_resolution, syzygies, BettiData, Column, Grading};
use crate::poly::{multivariate_gcd, Monomial, Polynomial, Rational, Ring};

/// Rows `(x_i, a_i, b_i, c_i)` with `g x_i = a_i f_1 + b_i f_2 + c_i f_3`, entries of degree `s`.
#[derive(Clone, Debug)]
pub struct ContentMatrix {
    pub generators: Vec<Polynomial>,
    pub pivot: Polynomial,
    pub s: u32,
    pub rows: Vec<Vec<Polynomial>>,
    /// Pairwise gcds of the generators are constants.
    pub coprime_generators: bool,
}

impl ContentMatrix {
    /// The `3 x 3` block without the variable column.
    pub fn block(&self) -> Vec<Vec<Polynomial>> {
        self.rows.iter().map(|r| r[1..].to_vec()).collect()
    }

    pub fn companion(&self) -> Polynomial {
        determinant(&self.block())
    }

    pub fn maximal_minors(&self) -> Vec<Polynomial> {
        minors(&self.rows, 3)
    }

    /// Checks every row identity exactly.
    pub fn rows_hold(&self) -> bool {
        let ring = self.pivot.ring();
        self.rows.iter().enumerate().all(|(i, row)| {
            let lhs = &self.pivot * &Polynomial::variable(ring, i);
            let mut rhs = Polynomial::zero(ring);
            for (a, f) in row[1..].iter().zip(&self.generators) {
                rhs = &rhs + &(a * f);
            }
            lhs == rhs
        })
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect()
    }
}

fn pairwise_coprime(gens: &[Polynomial]) -> Result<bool> {
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if !multivariate_gcd(&gens[i], &gens[j])?.is_constant() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_shape(gens: &[Polynomial]) -> Result<(Arc<Ring>, u32)> {
    if gens.len() != 3 {
        return Err(Error::Precondition(format!("expected three generators, got {}", gens.len())));
    }
    let ring = gens[0].ring().clone();
    if ring.arity() != 3 {
        return Err(Error::Precondition("content matrices are defined in three variables".into()));
    }
    let d = gens[0].degree().unwrap_or(0);
    if !gens.iter().all(|g| g.is_homogeneous() && g.degree() == Some(d)) || d < 2 {
        return Err(Error::Precondition("generators must be forms of one degree d >= 2".into()));
    }
    Ok((ring, d))
}

/// Content matrix of `g` from Gröbner lifts of `g x_i`, keeping the degree-`s` part of each coordinate.
pub fn content_matrix(gens: &[Polynomial], g: &Polynomial) -> Result<ContentMatrix> {
    let (ring, d) = check_shape(gens)?;
    if g.is_zero() || !g.is_homogeneous() {
        return Err(Error::Precondition("pivot must be a nonzero form".into()));
    }
    let ideal = Ideal::new(&ring, gens.to_vec());
    let deg = g.degree().expect("nonzero");
    if deg + 1 < d {
        return Err(Error::Precondition("pivot degree too small to lie in I : m".into()));
    }
    let s = deg + 1 - d;
    let mut rows = Vec::new();
    for i in 0..3 {
        let xi = Polynomial::variable(&ring, i);
        let lift = ideal
            .lift(&(g * &xi))?
            .ok_or_else(|| Error::Precondition("pivot is not in I : m".into()))?;
        let mut row = vec![xi];
        row.extend(lift.iter().map(|c| c.homogeneous_component(s)));
        rows.push(row);
    }
    let m = ContentMatrix {
        generators: gens.to_vec(),
        pivot: g.clone(),
        s,
        rows,
        coprime_generators: pairwise_coprime(gens)?,
    };
    if !m.rows_hold() {
        return Err(Error::Invariant("content matrix row identity fails".into()));
    }
    Ok(m)
}

#[derive(Clone, Debug)]
pub struct CramerCertificate {
    pub matrix: ContentMatrix,
    /// `det G`.
    pub companion: Polynomial,
    pub minor_codim: i64,
    /// 0 for the plain lift, `k` for the k-th perturbed lift.
    pub attempt: usize,
    pub rebased: bool,
    pub d: u32,
}

#[derive(Clone, Debug)]
pub enum GscOutcome {
    Found(CramerCertificate),
    /// No pivot found within the budget; not a disproof.
    NotFound { attempts: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct GscOptions {
    pub budget: usize,
    pub seed: u64,
}

impl Default for GscOptions {
    fn default() -> Self {
        GscOptions { budget: 8, seed: 0 }
    }
}

/// Replaces generators by `f1, f1 + f2, f1 + f3` (then a few further integer combinations)
/// until pairwise gcds are constant.
pub fn rebase(gens: &[Polynomial]) -> Result<Option<Vec<Polynomial>>> {
    let (f1, f2, f3) = (&gens[0], &gens[1], &gens[2]);
    let mut tries = vec![vec![f1.clone(), f1 + f2, f1 + f3]];
    for (a, b) in [(2, 3), (1, 2), (3, 5)] {
        tries.push(vec![f1.clone(), f1 + &f2.scale_int(a), &f1.scale_int(b) + f3]);
        tries.push(vec![f1 + f2, f1 + &f3.scale_int(a), f2 + &f3.scale_int(b)]);
    }
    for t in tries {
        if pairwise_coprime(&t)? {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

fn random_form(ring: &Arc<Ring>, degree: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    let mut terms = Vec::new();
    for a in 0..=degree {
        for b in 0..=(degree - a) {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                terms.push((Monomial::from_exponents(&[a, b, degree - a - b]), Rational::from_integer(c.into())));
            }
        }
    }
    Polynomial::from_terms(ring, terms)
}

fn certify(m: ContentMatrix, attempt: usize, rebased: bool, d: u32) -> Result<Option<CramerCertificate>> {
    let ring = m.pivot.ring().clone();
    let ms = m.maximal_minors();
    let codim = if ms.is_empty() { 0 } else { Ideal::new(&ring, ms).codimension()? };
    if codim != 2 {
        return Ok(None);
    }
    let companion = m.companion();
    Ok(Some(CramerCertificate { matrix: m, companion, minor_codim: codim, attempt, rebased, d }))
}

/// Searches for a saturation pivot with `codim I_3(M_g) = 2`.
///
/// Requires three forms of one degree generating a codimension-2 ideal in three
/// variables with saturation exponent 1. Pivots are the minimal generators of the
/// saturation outside `I`; each is tried with the plain lift and then with lifts
/// perturbed by random syzygies of matching degree.
pub fn gsc_search(ideal: &Ideal, sat: &SaturationData, options: GscOptions) -> Result<GscOutcome> {
    let gens = ideal.minimal_generators()?;
    let (ring, d) = check_shape(&gens)?;
    if ideal.codimension()? != 2 {
        return Err(Error::Precondition("ideal must have codimension 2".into()));
    }
    if sat.exponent != 1 {
        return Err(Error::Precondition(format!("saturation exponent is {}, the condition needs 1", sat.exponent)));
    }
    let (gens, rebased) = if pairwise_coprime(&gens)? {
        (gens, false)
    } else {
        match rebase(&gens)? {
            Some(g) => (g, true),
            None => return Err(Error::Precondition("could not make the generators pairwise coprime".into())),
        }
    };
    let grading = Grading::standard(&ring);
    let cols: Vec<Column> = gens.iter().map(|g| vec![g.clone()]).collect();
    let syz = syzygies(&ring, &cols, &[0], &grading)?;
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let mut attempts = 0;
    for g in &sat.extra_generators {
        let base = content_matrix(&gens, g)?;
        attempts += 1;
        if let Some(c) = certify(base.clone(), 0, rebased, d)? {
            return Ok(GscOutcome::Found(c));
        }
        let s = base.s as i64;
        let usable: Vec<(&Column, i64)> = syz
            .iter()
            .map(|c| (c, grading.column_degree(c, &[d as i64; 3]).unwrap_or(0) - d as i64))
            .filter(|(_, deg)| *deg <= s)
            .collect();
        if usable.is_empty() {
            continue;
        }
        for k in 1..=options.budget {
            attempts += 1;
            let mut m = base.clone();
            for row in m.rows.iter_mut() {
                for (col, deg) in &usable {
                    let h = random_form(&ring, (s - deg) as u32, &mut rng);
                    for j in 0..3 {
                        row[j + 1] = &row[j + 1] + &(&h * &col[j]);
                    }
                }
            }
            if !m.rows_hold() {
                return Err(Error::Invariant("perturbed content matrix row identity fails".into()));
            }
            if let Some(c) = certify(m, k, rebased, d)? {
                return Ok(GscOutcome::Found(c));
            }
        }
    }
    Ok(GscOutcome::NotFound { attempts })
}

/// Outcome of the structural checks on a certified pivot.
#[derive(Clone, Debug)]
pub struct CramerReport {
    /// `det G / g`, a nonzero constant.
    pub companion_ratio: Rational,
    /// `<I, g> = I^sat`.
    pub saturation_matches: bool,
    pub d_odd: bool,
    /// `2 deg g = 3 (d - 1)`.
    pub degree_relation: bool,
    /// `indeg(I^sat / I) >= d + 1` exactly when `d >= 5`.
    pub indeg_branch: bool,
    /// `R/I` resolves as `0 -> R(-3(d+1)/2) -> R(-(3d+1)/2)^3 -> R(-d)^3 -> R`.
    pub betti_matches: bool,
    /// `I_3(M_g) = <I, g>`.
    pub minors_match: bool,
}

/// Expected Betti table of `R/I` for a Cramer ideal generated in odd degree `d`.
pub fn cramer_betti(d: u32) -> BettiData {
    let d = d as i64;
    BettiData::from_shifts(&[vec![d; 3], vec![(3 * d + 1) / 2; 3], vec![3 * (d + 1) / 2]])
}

/// Verifies the structure forced by a certified pivot; any failure is an invariant violation.
pub fn cramer_verify(cert: &CramerCertificate, ideal: &Ideal, sat: &SaturationData) -> Result<CramerReport> {
    let ring = ideal.ring();
    let g = &cert.matrix.pivot;
    let d = cert.d;
    let (q, r) = cert.companion.div_rem(g)?;
    let companion_ratio = match (r.is_zero(), q.constant_value()) {
        (true, Some(c)) if !c.is_zero() => c,
        _ => return Err(Error::Invariant("det G is not a nonzero multiple of the pivot".into())),
    };
    let mut with_g = ideal.generators().to_vec();
    with_g.push(g.clone());
    let ig = Ideal::new(ring, with_g);
    let saturation_matches = ig.equals(&sat.saturated)?;
    let d_odd = d % 2 == 1;
    let deg_g = g.degree().unwrap_or(0);
    let degree_relation = 2 * deg_g == 3 * (d - 1);
    let indeg_branch = sat.indeg.map(|i| i > d).unwrap_or(false) == (d >= 5);
    let res = minimal_free_resolution(ideal, &Grading::standard(ring))?;
    let betti_matches = d_odd && res.betti() == cramer_betti(d);
    let minors_match = Ideal::new(ring, cert.matrix.maximal_minors()).equals(&ig)?;
    let report = CramerReport {
        companion_ratio,
        saturation_matches,
        d_odd,
        degree_relation,
        indeg_branch,
        betti_matches,
        minors_match,
    };
    let failed: Vec<&str> = [
        ("saturation", report.saturation_matches),
        ("parity", report.d_odd),
        ("pivot degree", report.degree_relation),
        ("initial degree", report.indeg_branch),
        ("betti shape", report.betti_matches),
        ("minors", report.minors_match),
    ]
    .iter()
    .filter(|(_, ok)| !ok)
    .map(|(n, _)| *n)
    .collect();
    if !failed.is_empty() {
        return Err(Error::Invariant(format!("Cramer structure fails: {}", failed.join(", "))));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn grad(f: &str) -> Ideal {
        let r = Ring::degrevlex(["x", "y", "z"]).unwrap();
        Ideal::new(&r, parse_poly(f, &r).unwrap().gradient())
    }

    fn run(f: &str) -> (CramerCertificate, CramerReport) {
        let i = grad(f);
        let sat = i.saturate_maximal().unwrap();
        let GscOutcome::Found(c) = gsc_search(&i, &sat, GscOptions::default()).unwrap() else { panic!("no pivot") };
        let rep = cramer_verify(&c, &i, &sat).unwrap();
        (c, rep)
    }

    #[test]
    fn arrangement_of_six_lines() {
        let (c, _) = run("x*y*z*(x+y)*(x+z)*(y+z)");
        assert_eq!(c.matrix.pivot.degree(), Some(6));
        assert_eq!(c.d, 5);
    }

    #[test]
    fn sextic_needs_rebase() {
        let (c, _) = run("x^6+x^3*y^3+x^2*y^4+y^5*z");
        assert!(c.rebased);
        assert_eq!(c.matrix.pivot.degree(), Some(6));
    }

    #[test]
    fn cubic_instance() {
        let (c, _) = run("x*y*z*(x+y+z)");
        assert_eq!(c.d, 3);
        assert_eq!(c.matrix.pivot.degree(), Some(3));
    }

    #[test]
    fn monomial_content_matrix() {
        let r = Ring::degrevlex(["x", "y", "z"]).unwrap();
        let p = |s: &str| parse_poly(s, &r).unwrap();
        let m = content_matrix(&[p("x^2"), p("x*y"), p("x*z")], &p("x")).unwrap();
        assert!(m.rows_hold());
        assert!(!m.coprime_generators);
        assert_eq!(m.s, 0);
    }

    #[test]
    fn saturated_ideal_is_refused() {
        let i = grad("y^4*z+x^5+x^2*y^3+x*y^4+y^5");
        let sat = i.saturate_maximal().unwrap();
        assert!(matches!(gsc_search(&i, &sat, GscOptions::default()), Err(Error::Precondition(_))));
    }
}
