//! Explicit divisor families and named examples, each with the outcomes its defining
//! statement predicts.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::divisor::{gradient_ideal, is_free, is_reduced, DivisorReport};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::modsyz::{BettiData, Column};
use crate::poly::{cone, homogenize, parse_poly, Monomial, Polynomial, Rational, Ring};
use crate::typecheck::{is_linear_type, Route};
use crate::verdict::Verdict;

mod named;

pub use named::{named_example, sextic, NAMED_TAGS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyTag {
    QuinticPlus,
    Addition,
    Addition2,
    BinaryWh,
    ConeOfBinaryWh,
    Named,
}

/// `Theorem` expectations are hard assertions; `Observed` ones hold on the worked
/// examples (or boundary cases) without a general statement behind them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strength {
    #[default]
    Theorem,
    Observed,
}

/// Predicted outcomes; `None` means unspecified.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Expected {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub free: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub linear_type: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub syzygetic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub koszul_free: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regularity: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub st: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub indeg: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiData>,
    /// Standard degrees of the minimal syzygies of the gradient, ascending.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub syzygy_degrees: Option<Vec<i64>>,
    pub strength: Strength,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilySpec {
    pub tag: FamilyTag,
    pub params: BTreeMap<String, String>,
    pub expected: Expected,
}

/// A named auxiliary polynomial of a construction (`g`, `h`, the affine part, ...).
#[derive(Clone, Debug)]
pub struct Part {
    pub name: String,
    pub polynomial: Polynomial,
    pub expected: Expected,
}

#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub polynomial: Polynomial,
    pub spec: FamilySpec,
    pub parts: Vec<Part>,
}

impl FamilyMember {
    pub fn part(&self, name: &str) -> Option<&Part> {
        self.parts.iter().find(|p| p.name == name)
    }
}

fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}

fn int(c: i64) -> Rational {
    Rational::from_integer(c.into())
}

fn monomial_term(ring: &Arc<Ring>, exps: &[u32], c: Rational) -> Polynomial {
    Polynomial::term(ring, Monomial::from_exponents(exps), c)
}

fn list(values: &[Rational]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn xyz() -> Arc<Ring> {
    Ring::degrevlex(["x", "y", "z"]).expect("valid ring")
}

fn indexed_ring(n: usize) -> Arc<Ring> {
    Ring::degrevlex((1..=n).map(|i| format!("x{i}"))).expect("valid ring")
}

/// Nonzero rationals `p/q` with `|p| <= 9`, `1 <= q <= 4`, from a seeded generator.
pub fn random_coefficients(count: usize, seed: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut p: i64 = 0;
            while p == 0 {
                p = rng.gen_range(-9..=9);
            }
            let q: i64 = rng.gen_range(1..=4);
            Rational::new(p.into(), q.into())
        })
        .collect()
}

/// `y^{d-1} z + a1 x^d + a2 x^2 y^{d-2} + a3 x y^{d-1} + a4 y^d` in `x, y, z`.
///
/// Free for every `d >= 5`, of linear type exactly when `d = 5`, with minimal
/// syzygies of degrees `2` and `d - 3`.
pub fn quintic_plus(d: u32, a: &[Rational; 4]) -> Result<FamilyMember> {
    if d < 5 {
        return precondition(format!("quintic_plus needs d >= 5, got {d}"));
    }
    if a[0].is_zero() || a[1].is_zero() {
        return precondition("quintic_plus needs a1 and a2 nonzero");
    }
    let r = xyz();
    let f = [
        monomial_term(&r, &[0, d - 1, 1], Rational::one()),
        monomial_term(&r, &[d, 0, 0], a[0].clone()),
        monomial_term(&r, &[2, d - 2, 0], a[1].clone()),
        monomial_term(&r, &[1, d - 1, 0], a[2].clone()),
        monomial_term(&r, &[0, d, 0], a[3].clone()),
    ]
    .iter()
    .fold(Polynomial::zero(&r), |acc, t| &acc + t);
    let mut degs = vec![2, d as i64 - 3];
    degs.sort();
    let expected =
        Expected { free: Some(true), linear_type: Some(d == 5), syzygy_degrees: Some(degs), ..Default::default() };
    let spec = FamilySpec {
        tag: FamilyTag::QuinticPlus,
        params: params([("d", d.to_string()), ("a", list(a))]),
        expected,
    };
    Ok(FamilyMember { polynomial: f, spec, parts: Vec::new() })
}

/// `g = x_1^{r_1} ... x_{n-1}^{r_{n-1}} - x_n^d` with `d = sum r_i`, `h` the product of the
/// variables indexed by `subset` (1-based), and `f = g h`.
///
/// `g` is not free; `f` is free of linear type.
pub fn addition(n: usize, r: &[u32], subset: &[usize]) -> Result<FamilyMember> {
    if n < 3 {
        return precondition("addition needs n >= 3");
    }
    if r.len() != n - 1 {
        return precondition(format!("addition needs {} exponents, got {}", n - 1, r.len()));
    }
    if let Some(i) = (1..n - 1).find(|&i| r[i] == 0) {
        return precondition(format!("addition needs r_{} nonzero", i + 1));
    }
    let mut idx = subset.to_vec();
    idx.sort_unstable();
    idx.dedup();
    if idx.len() != n - 2 || subset.len() != n - 2 || idx.iter().any(|&i| i == 0 || i > n - 1) {
        return precondition(format!("addition needs {} distinct indices in 1..{}", n - 2, n - 1));
    }
    let d: u32 = r.iter().sum();
    let ring = indexed_ring(n);
    let mut e: Vec<u32> = r.to_vec();
    e.push(0);
    let mut last = vec![0; n];
    last[n - 1] = d;
    let g = &monomial_term(&ring, &e, Rational::one()) - &monomial_term(&ring, &last, Rational::one());
    let mut he = vec![0; n];
    for &i in &idx {
        he[i - 1] = 1;
    }
    let h = monomial_term(&ring, &he, Rational::one());
    let f = &g * &h;
    let spec = FamilySpec {
        tag: FamilyTag::Addition,
        params: params([
            ("n", n.to_string()),
            ("r", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")),
            ("subset", idx.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")),
        ]),
        expected: Expected { free: Some(true), linear_type: Some(true), ..Default::default() },
    };
    let parts = vec![
        Part { name: "g".into(), polynomial: g, expected: Expected { free: Some(false), ..Default::default() } },
        Part { name: "h".into(), polynomial: h, expected: Expected::default() },
    ];
    Ok(FamilyMember { polynomial: f, spec, parts })
}

/// The `n - 2` linear syzygies `x_i e_i - (r_i + 1)/r_j x_j e_j - (1/d) x_n e_n` of an
/// addition member, `i` in the subset and `j` the remaining index below `n`.
/// `None` when `r_j = 0`.
pub fn addition_linear_syzygies(member: &FamilyMember) -> Option<Vec<Column>> {
    if member.spec.tag != FamilyTag::Addition {
        return None;
    }
    let ring = member.polynomial.ring();
    let n = ring.arity();
    let r: Vec<i64> = member.spec.params["r"].split(',').map(|v| v.parse().expect("stored exponent")).collect();
    let subset: Vec<usize> =
        member.spec.params["subset"].split(',').map(|v| v.parse().expect("stored index")).collect();
    let j = (1..n).find(|i| !subset.contains(i))?;
    if r[j - 1] == 0 {
        return None;
    }
    let d: i64 = r.iter().sum();
    let cols = subset
        .iter()
        .map(|&i| {
            let mut c = vec![Polynomial::zero(ring); n];
            c[i - 1] = Polynomial::variable(ring, i - 1);
            c[j - 1] = Polynomial::variable(ring, j - 1).scale(&-Rational::new((r[i - 1] + 1).into(), r[j - 1].into()));
            c[n - 1] = Polynomial::variable(ring, n - 1).scale(&-Rational::new(1.into(), d.into()));
            c
        })
        .collect();
    Some(cols)
}

/// `g = x_n^d - x_{n-1}^m h` and `f = g h` for a reduced form `h` of degree `d - m >= 2`
/// in the first `n - 2` variables (the variables of `h`'s ring, by position).
///
/// `g` is not free. When `h` is free, so is `f`; when moreover `J_h` is of linear type,
/// so is `J_f`. Freeness and linear type of `h` are computed here.
pub fn addition2(n: usize, d: u32, m: u32, h: &Polynomial) -> Result<FamilyMember> {
    if n < 4 {
        return precondition("addition2 with deg h >= 2 needs n >= 4 (h lives in n - 2 >= 2 variables)");
    }
    if h.ring().arity() != n - 2 {
        return precondition(format!("h must live in {} variables", n - 2));
    }
    if !(d > m && m >= 1) {
        return precondition("addition2 needs d > m >= 1");
    }
    if !h.is_homogeneous() || h.degree() != Some(d - m) {
        return precondition(format!("h must be a form of degree d - m = {}", d - m));
    }
    if d - m < 2 {
        return precondition("addition2 needs deg h >= 2");
    }
    if !is_reduced(h)? {
        return precondition("h is not reduced");
    }
    let h_free = is_free(h)?.verdict;
    let h_lt = if h_free.is_true() {
        is_linear_type(&gradient_ideal(h)?, Route::Fitting, None)?.verdict
    } else {
        Verdict::NotComputed
    };
    let expected = Expected {
        free: h_free.is_true().then_some(true),
        linear_type: (h_free.is_true() && h_lt.is_true()).then_some(true),
        ..Default::default()
    };
    build_addition2(n, d, m, h, expected, Strength::Theorem)
}

/// The smallest iterated instance: `h = x1`, `g = x3^2 - x2 x1` in three variables.
/// Here `deg h = 1`, below the degree the general statement assumes.
pub fn addition2_boundary_preset() -> Result<FamilyMember> {
    let hr = Ring::degrevlex(["x1"]).expect("valid ring");
    let h = Polynomial::variable(&hr, 0);
    let expected = Expected { free: Some(true), ..Default::default() };
    build_addition2(3, 2, 1, &h, expected, Strength::Observed)
}

fn build_addition2(n: usize, d: u32, m: u32, h: &Polynomial, mut expected: Expected, strength: Strength) -> Result<FamilyMember> {
    expected.strength = strength;
    let ring = indexed_ring(n);
    let map: Vec<Option<usize>> = (0..n - 2).map(Some).collect();
    let hh = h.map_into(&ring, &map);
    let mut e = vec![0; n];
    e[n - 1] = d;
    let mut em = vec![0; n];
    em[n - 2] = m;
    let g = &monomial_term(&ring, &e, Rational::one()) - &(&monomial_term(&ring, &em, Rational::one()) * &hh);
    let f = &g * &hh;
    let spec = FamilySpec {
        tag: FamilyTag::Addition2,
        params: params([("n", n.to_string()), ("d", d.to_string()), ("m", m.to_string()), ("h", h.to_string())]),
        expected,
    };
    let parts = vec![
        Part { name: "g".into(), polynomial: g, expected: Expected { free: Some(false), strength, ..Default::default() } },
        Part { name: "h".into(), polynomial: hh, expected: Expected::default() },
    ];
    Ok(FamilyMember { polynomial: f, spec, parts })
}

/// The two distinguished syzygies of an addition2 member:
/// `s_0 = (x_1, ..., x_{n-2}, (1 - (2d-m)/m) x_{n-1}, (1 - (2d-m)/d) x_n)` and
/// `(0, ..., 0, d x_n^{d-1}, m x_{n-1}^{m-1} h)`.
pub fn addition2_syzygies(member: &FamilyMember) -> Option<[Column; 2]> {
    if member.spec.tag != FamilyTag::Addition2 {
        return None;
    }
    let ring = member.polynomial.ring();
    let n = ring.arity();
    let d: i64 = member.spec.params["d"].parse().ok()?;
    let m: i64 = member.spec.params["m"].parse().ok()?;
    let h = &member.part("h")?.polynomial;
    let mut s0: Column = (0..n - 2).map(|i| Polynomial::variable(ring, i)).collect();
    s0.push(Polynomial::variable(ring, n - 2).scale(&(Rational::one() - Rational::new((2 * d - m).into(), m.into()))));
    s0.push(Polynomial::variable(ring, n - 1).scale(&(Rational::one() - Rational::new((2 * d - m).into(), d.into()))));
    let mut s1: Column = vec![Polynomial::zero(ring); n - 2];
    s1.push(Polynomial::variable(ring, n - 1).pow(d as u32 - 1).scale_int(d));
    s1.push(&Polynomial::variable(ring, n - 2).pow(m as u32 - 1).scale_int(m) * h);
    Some([s0, s1])
}

/// Coefficients of a binary weighted homogeneous polynomial:
/// `c_x x^{sq} + c_y y^{sp} + sum_{1 <= r < s} c_r x^{(s-r)q} y^{rp}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCoefficients {
    pub cx: Rational,
    pub cy: Rational,
    pub middle: Vec<Rational>,
}

impl BinaryCoefficients {
    pub fn ones(s: u32) -> BinaryCoefficients {
        BinaryCoefficients { cx: Rational::one(), cy: Rational::one(), middle: vec![Rational::one(); s as usize - 1] }
    }

    /// Every slot a seeded random nonzero rational.
    pub fn random(s: u32, seed: u64) -> BinaryCoefficients {
        let mut c = random_coefficients(s as usize + 1, seed);
        let cy = c.pop().expect("two slots");
        let cx = c.pop().expect("two slots");
        BinaryCoefficients { cx, cy, middle: c }
    }

    fn to_params(&self) -> String {
        let mut all = vec![self.cx.clone(), self.cy.clone()];
        all.extend(self.middle.iter().cloned());
        list(&all)
    }
}

/// The binary polynomial itself, in `x, y`.
fn binary_polynomial(p: u32, q: u32, s: u32, c: &BinaryCoefficients) -> Result<Polynomial> {
    if p == 0 || q == 0 || s == 0 {
        return precondition("binary_wh needs p, q, s >= 1");
    }
    if p.gcd(&q) != 1 {
        return precondition(format!("binary_wh needs gcd(p, q) = 1, got ({p}, {q})"));
    }
    if c.middle.len() != s as usize - 1 {
        return precondition(format!("binary_wh with s = {s} needs {} middle coefficients", s - 1));
    }
    let r = Ring::degrevlex(["x", "y"]).expect("valid ring");
    let mut f = &monomial_term(&r, &[s * q, 0], c.cx.clone()) + &monomial_term(&r, &[0, s * p], c.cy.clone());
    for (k, cr) in c.middle.iter().enumerate() {
        let k = k as u32 + 1;
        f = &f + &monomial_term(&r, &[(s - k) * q, k * p], cr.clone());
    }
    if f.is_zero() {
        return precondition("all coefficients vanish");
    }
    Ok(f)
}

/// Which homogenization case applies: `2` when one of the weights `1/(sq)`, `1/(sp)`
/// equals `1/deg f`, else `1`.
pub fn binary_case(p: u32, q: u32, s: u32, f: &Polynomial) -> u8 {
    let d = f.degree().expect("nonzero");
    if d == s * q || d == s * p {
        2
    } else {
        1
    }
}

/// Three-variable resolution template of the homogenization of a binary weighted
/// homogeneous polynomial of degree `d`, by case.
pub fn three_vars_betti(case: u8, d: i64) -> BettiData {
    if case == 1 {
        BettiData::from_shifts(&[vec![d - 1; 3], vec![d, 2 * d - 3]])
    } else {
        BettiData::from_shifts(&[vec![d - 1; 3], vec![d, 2 * (d - 1), 2 * (d - 1)], vec![2 * d - 1]])
    }
}

/// Resolution template of the gradient ideal of the cone over a binary weighted
/// homogeneous polynomial of degree `d`.
pub fn cone_betti(d: i64) -> BettiData {
    BettiData::from_shifts(&[vec![d; 3], vec![d + 1, 2 * d - 1]])
}

/// A binary weighted homogeneous `f` with weights proportional to `(p, q)`.
///
/// The expectations describe the homogenization `F = homogenize(f, z)` (the `homogenization`
/// part): of linear type, free exactly in case 1, with the case's resolution. They are
/// unspecified when `f` is homogeneous or has degree below 3.
pub fn binary_wh(p: u32, q: u32, s: u32, c: &BinaryCoefficients) -> Result<FamilyMember> {
    let f = binary_polynomial(p, q, s, c)?;
    let d = f.degree().expect("nonzero");
    let big = homogenize(&f, "z")?;
    let applies = !f.is_homogeneous() && d >= 3;
    let case = binary_case(p, q, s, &f);
    let expected = if applies {
        Expected {
            free: Some(case == 1),
            linear_type: Some(true),
            betti: Some(three_vars_betti(case, d as i64)),
            ..Default::default()
        }
    } else {
        Expected::default()
    };
    let spec = FamilySpec {
        tag: FamilyTag::BinaryWh,
        params: params([
            ("p", p.to_string()),
            ("q", q.to_string()),
            ("s", s.to_string()),
            ("c", c.to_params()),
            ("case", if applies { case.to_string() } else { "none".into() }),
        ]),
        expected: expected.clone(),
    };
    let parts = vec![Part { name: "homogenization".into(), polynomial: big, expected }];
    Ok(FamilyMember { polynomial: f, spec, parts })
}

/// `G = cone(f) = z homogenize(f, z)` for a reduced, non-smooth binary weighted homogeneous
/// `f` of degree `d >= 3`: free of linear type with the cone resolution template.
pub fn cone_of_binary_wh(p: u32, q: u32, s: u32, c: &BinaryCoefficients) -> Result<FamilyMember> {
    let f = binary_polynomial(p, q, s, c)?;
    let d = f.degree().expect("nonzero");
    if d < 3 {
        return precondition("cone of a binary form needs degree >= 3");
    }
    if !is_reduced(&f)? {
        return precondition("f is not reduced");
    }
    let mut sing = vec![f.clone()];
    sing.extend(f.gradient());
    if Ideal::new(f.ring(), sing).is_unit()? {
        return precondition("V(f) is smooth");
    }
    let g = cone(&f, "z")?;
    let spec = FamilySpec {
        tag: FamilyTag::ConeOfBinaryWh,
        params: params([("p", p.to_string()), ("q", q.to_string()), ("s", s.to_string()), ("c", c.to_params())]),
        expected: Expected {
            free: Some(true),
            linear_type: Some(true),
            betti: Some(cone_betti(d as i64)),
            ..Default::default()
        },
    };
    let parts = vec![Part { name: "affine".into(), polynomial: f, expected: Expected::default() }];
    Ok(FamilyMember { polynomial: g, spec, parts })
}

/// True when `x` or `y` divides the binary polynomial `f`.
pub fn divisible_by_axis(f: &Polynomial) -> bool {
    (0..2).any(|v| f.terms().iter().all(|(m, _)| m.exponent(v) > 0))
}

/// The resolution template of a member, when its statement gives one.
pub fn expected_resolution(spec: &FamilySpec) -> Result<BettiData> {
    spec.expected
        .betti
        .clone()
        .ok_or_else(|| Error::Precondition(format!("no resolution template for {:?} with these parameters", spec.tag)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub field: &'static str,
    pub expected: String,
    pub computed: String,
    pub strength: Strength,
}

/// Undecided verdicts (not computed, inconclusive) are not counted as mismatches; see [`unchecked`].
fn verdict_matches(expected: Option<bool>, computed: Verdict) -> bool {
    match (expected, computed.as_bool()) {
        (Some(e), Some(c)) => e == c,
        _ => true,
    }
}

/// Verdict fields with an expectation that the report left undecided.
pub fn unchecked(expected: &Expected, report: &DivisorReport) -> Vec<&'static str> {
    [
        ("free", expected.free, report.free),
        ("linear_type", expected.linear_type, report.linear_type.verdict),
        ("syzygetic", expected.syzygetic, report.syzygetic),
        ("koszul_free", expected.koszul_free, report.koszul_free),
    ]
    .into_iter()
    .filter(|(_, e, c)| e.is_some() && c.as_bool().is_none())
    .map(|(f, _, _)| f)
    .collect()
}

/// Standard degrees of the minimal gradient syzygies recorded in a report, ascending.
pub fn syzygy_degrees(report: &DivisorReport) -> Option<Vec<i64>> {
    let m = &report.freeness.as_ref()?.syzygy_matrix;
    let mut out: Vec<i64> = m
        .columns()
        .iter()
        .map(|c| c.iter().filter_map(|p| p.degree()).max().unwrap_or(0) as i64)
        .collect();
    out.sort();
    Some(out)
}

/// Fields where the computed report differs from the expectation; empty when they agree.
pub fn compare(expected: &Expected, report: &DivisorReport) -> Vec<Discrepancy> {
    let mut out = Vec::new();
    let mut push = |field: &'static str, e: String, c: String| {
        out.push(Discrepancy { field, expected: e, computed: c, strength: expected.strength })
    };
    let verdicts = [
        ("free", expected.free, report.free),
        ("linear_type", expected.linear_type, report.linear_type.verdict),
        ("syzygetic", expected.syzygetic, report.syzygetic),
        ("koszul_free", expected.koszul_free, report.koszul_free),
    ];
    for (field, e, c) in verdicts {
        if !verdict_matches(e, c) {
            push(field, format!("{e:?}"), c.to_string());
        }
    }
    let g = &report.gradient;
    if expected.regularity.is_some() && expected.regularity != g.regularity {
        push("regularity", format!("{:?}", expected.regularity), format!("{:?}", g.regularity));
    }
    if expected.st.is_some() && expected.st != g.st {
        push("st", format!("{:?}", expected.st), format!("{:?}", g.st));
    }
    if expected.indeg.is_some() && expected.indeg != g.indeg {
        push("indeg", format!("{:?}", expected.indeg), format!("{:?}", g.indeg));
    }
    if let Some(b) = &expected.betti {
        if g.betti.as_ref() != Some(b) {
            push("betti", b.display(), g.betti.as_ref().map(|x| x.display()).unwrap_or_else(|| "none".into()));
        }
    }
    if let Some(d) = &expected.syzygy_degrees {
        let c = syzygy_degrees(report);
        if c.as_ref() != Some(d) {
            push("syzygy_degrees", format!("{d:?}"), format!("{c:?}"));
        }
    }
    out
}

/// The sweeps run by the acceptance corpus, with deterministic seeds.
pub mod sweeps {
    use super::*;

    /// `d = 5..=8`, all-ones coefficients and one seeded random tuple per `d`.
    pub fn quintic_plus_sweep(seed: u64) -> Result<Vec<FamilyMember>> {
        let mut out = Vec::new();
        for d in 5..=8u32 {
            out.push(quintic_plus(d, &[int(1), int(1), int(1), int(1)])?);
            let c = random_coefficients(4, seed.wrapping_add(d as u64));
            out.push(quintic_plus(d, &[c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()])?);
        }
        Ok(out)
    }

    pub const BINARY_TRIPLES: [(u32, u32, u32); 4] = [(3, 2, 1), (3, 2, 2), (5, 2, 1), (4, 3, 1)];

    /// Instances with a vanishing pure power, where `x` or `y` divides `f` and the
    /// homogenization falls in case 1: `x^2 + x y^2` and `x^4 y + y^3`.
    pub fn axis_divisible_instances() -> Vec<(u32, u32, u32, BinaryCoefficients)> {
        vec![
            (2, 1, 2, BinaryCoefficients { cx: int(1), cy: int(0), middle: vec![int(1)] }),
            (1, 2, 3, BinaryCoefficients { cx: int(0), cy: int(1), middle: vec![int(1), int(0)] }),
        ]
    }

    /// Each fixed triple with all-ones and one seeded random coefficient tuple, then the
    /// axis-divisible instances.
    pub fn binary_instances(seed: u64) -> Vec<(u32, u32, u32, BinaryCoefficients)> {
        let mut out = Vec::new();
        for (k, &(p, q, s)) in BINARY_TRIPLES.iter().enumerate() {
            out.push((p, q, s, BinaryCoefficients::ones(s)));
            out.push((p, q, s, BinaryCoefficients::random(s, seed.wrapping_add(100 + k as u64))));
        }
        out.extend(axis_divisible_instances());
        out
    }

    pub fn binary_wh_sweep(seed: u64) -> Result<Vec<FamilyMember>> {
        binary_instances(seed).iter().map(|(p, q, s, c)| binary_wh(*p, *q, *s, c)).collect()
    }

    pub fn cone_sweep(seed: u64) -> Result<Vec<FamilyMember>> {
        binary_instances(seed).iter().map(|(p, q, s, c)| cone_of_binary_wh(*p, *q, *s, c)).collect()
    }

    /// The two addition instances `(n=3, r=(1,1), {1})` and `(n=4, r=(1,1,2), {1,2})`.
    pub fn addition_instances() -> Result<Vec<FamilyMember>> {
        Ok(vec![addition(3, &[1, 1], &[1])?, addition(4, &[1, 1, 2], &[1, 2])?])
    }

    /// The three-variable boundary preset and `h = x1 x2 (x1 + x2)`, `m = 1`, `d = 4` in four variables.
    pub fn addition2_instances() -> Result<Vec<FamilyMember>> {
        let hr = Ring::degrevlex(["x1", "x2"]).expect("valid ring");
        let h = parse_poly("x1*x2*(x1+x2)", &hr)?;
        Ok(vec![addition2_boundary_preset()?, addition2(4, 4, 1, &h)?])
    }
}

/// `f = (y^r z^{d-r} - x^d) y`: a cuspidal curve plus its tangent line, as the addition
/// member with `n = 3`, exponents `(r, d - r)` and subset `{1}` (`x1 = y`, `x2 = z`, `x3 = x`).
pub fn cusp_with_tangent(r: u32, d: u32) -> Result<FamilyMember> {
    if r == 0 || r >= d {
        return precondition("cusp_with_tangent needs 0 < r < d");
    }
    addition(3, &[r, d - r], &[1])
}

#[cfg(test)]
mod tests;
