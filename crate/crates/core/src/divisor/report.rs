use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use super::{gradient_ideal, is_free, is_reduced, natural_grading, FreenessCheck};
use crate::cramer::{cramer_verify, gsc_search, CramerCertificate, CramerReport, GscOptions, GscOutcome};
use crate::error::{Error, Result};
use crate::groebner::{Ideal, SaturationData};
use crate::modsyz::BettiData;
use crate::poly::{weighted_weights, Polynomial, WeightVector};
use crate::typecheck::{
    fitting_route, is_koszul_free, is_syzygetic, koszul_saturation_check, linear_type_of, rees_ideal,
    symmetric_ideal_graded, BlowupPresentation, LinearTypeCheck, Route,
};
use crate::verdict::Verdict;

#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    /// Run the Rees elimination (and cross-check it against the Fitting route).
    pub rees: bool,
    /// Allow the Koszul-free test outside three variables.
    pub extend_n: bool,
    pub gsc_budget: usize,
    pub seed: u64,
    pub degree_cap: Option<u32>,
    pub timings: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { rees: false, extend_n: false, gsc_budget: 8, seed: 0, degree_cap: Some(30), timings: false }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightSummary {
    pub class: &'static str,
    #[serde(flatten)]
    pub weights: Option<WeightVector>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GradientSummary {
    pub codim: i64,
    pub betti: Option<BettiData>,
    pub regularity: Option<i64>,
    pub st: Option<u32>,
    pub indeg: Option<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LinearTypeSummary {
    pub verdict: Verdict,
    pub route: Option<Route>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CramerSummary {
    pub gsc: Verdict,
    pub pivot_degree: Option<u32>,
    pub d_parity: Option<&'static str>,
    pub companion_check: Option<bool>,
}

/// Everything `analyze` computes. Serialized fields form the stable report schema;
/// the skipped fields carry the underlying certificates.
#[derive(Clone, Debug, Serialize)]
pub struct DivisorReport {
    pub input: String,
    pub ring: Vec<String>,
    pub reduced: bool,
    pub homogeneous: bool,
    pub weights: WeightSummary,
    pub gradient: GradientSummary,
    pub free: Verdict,
    pub linear_type: LinearTypeSummary,
    pub syzygetic: Verdict,
    pub koszul_saturation: Verdict,
    pub koszul_free: Verdict,
    pub cramer: CramerSummary,
    pub timings: Option<BTreeMap<String, f64>>,
    #[serde(skip)]
    pub notes: Vec<String>,
    #[serde(skip)]
    pub freeness: Option<FreenessCheck>,
    #[serde(skip)]
    pub saturation: Option<SaturationData>,
    #[serde(skip)]
    pub linear_type_check: Option<LinearTypeCheck>,
    #[serde(skip)]
    pub certificate: Option<(CramerCertificate, CramerReport)>,
}

struct Clock {
    on: bool,
    table: BTreeMap<String, f64>,
}

impl Clock {
    fn time<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.on {
            self.table.insert(stage.to_string(), start.elapsed().as_secs_f64() * 1000.0);
        }
        out
    }
}

fn verdict_of(r: Result<Verdict>) -> Result<Verdict> {
    match r {
        Err(Error::Groebner(_)) => Ok(Verdict::Inconclusive),
        other => other,
    }
}

/// Linear type without the Rees elimination: the Fitting route when its hypotheses hold.
fn linear_type_cheap(pres: &BlowupPresentation) -> Result<LinearTypeCheck> {
    Ok(match fitting_route(pres)? {
        Some(f) => LinearTypeCheck { verdict: f.verdict.into(), route: Route::Fitting, fitting: Some(f), rees: None, note: None },
        None => LinearTypeCheck {
            verdict: Verdict::NotComputed,
            route: Route::Fitting,
            fitting: None,
            rees: None,
            note: Some("fitting hypotheses do not hold; the Rees route is needed".into()),
        },
    })
}

/// Runs every applicable check on `f` and cross-checks the results against each other.
pub fn analyze(f: &Polynomial, options: AnalyzeOptions) -> Result<DivisorReport> {
    if f.is_constant() {
        return Err(Error::Precondition("input is constant".into()));
    }
    let mut clock = Clock { on: options.timings, table: BTreeMap::new() };
    let ring = f.ring().clone();
    let n = ring.arity();
    let mut notes = Vec::new();
    let homogeneous = f.is_homogeneous();
    let class = weighted_weights(f);
    let weights = WeightSummary { class: class.tag(), weights: class.weights().cloned() };
    let reduced = clock.time("reduced", || is_reduced(f))?;
    let j = gradient_ideal(f)?.with_degree_cap(options.degree_cap);
    let codim = clock.time("codim", || j.codimension())?;
    let grading = natural_grading(f);

    let freeness = if reduced && n >= 2 {
        Some(clock.time("free", || is_free(f))?)
    } else {
        notes.push(if reduced { "freeness needs two variables" } else { "input is not reduced" }.to_string());
        None
    };
    let free = freeness.as_ref().map(|c| c.verdict).unwrap_or(Verdict::NotComputed);
    if let Some(note) = freeness.as_ref().and_then(|c| c.note.clone()) {
        notes.push(note);
    }
    let betti = freeness.as_ref().and_then(|c| c.betti.clone());

    let proper = !j.is_unit()?;
    let saturation = if homogeneous && proper {
        Some(clock.time("saturation", || j.saturate_maximal())?)
    } else {
        None
    };

    let mingens = Ideal::new(&ring, j.minimal_generators()?).with_degree_cap(options.degree_cap);
    let pres = if proper { Some(symmetric_ideal_graded(&mingens, &grading)?) } else { None };
    let lt = match &pres {
        Some(p) if options.rees => clock.time("linear_type", || linear_type_of(p, Route::Both, options.degree_cap))?,
        Some(p) => clock.time("linear_type", || linear_type_cheap(p))?,
        None => LinearTypeCheck {
            verdict: Verdict::True,
            route: Route::Fitting,
            fitting: None,
            rees: None,
            note: Some("unit gradient ideal".into()),
        },
    };
    if let Some(note) = &lt.note {
        notes.push(note.clone());
    }
    let linear_type = LinearTypeSummary {
        verdict: lt.verdict,
        route: (lt.fitting.is_some() || lt.rees.is_some()).then_some(lt.route),
    };

    let syzygetic = if lt.verdict == Verdict::True {
        Verdict::True
    } else if let (Some(p), true) = (&pres, options.rees) {
        clock.time("syzygetic", || {
            verdict_of((|| {
                let rees = match &lt.rees {
                    Some(r) => r.rees.clone(),
                    None => rees_ideal(p, options.degree_cap)?,
                };
                Ok(is_syzygetic(p, &rees)?.verdict.into())
            })())
        })?
    } else {
        Verdict::NotComputed
    };

    let three_gen_plane = n == 3 && homogeneous && codim == 2 && mingens.generators().len() == 3;
    let koszul_saturation = match &saturation {
        Some(sat) if three_gen_plane => {
            clock.time("koszul_saturation", || koszul_saturation_check(&mingens, &sat.saturated))?.verdict.into()
        }
        _ => Verdict::NotComputed,
    };
    if let (Some(sat), true) = (&saturation, three_gen_plane) {
        let saturated = sat.exponent == 0;
        if free.as_bool().is_some_and(|fr| fr != saturated) {
            return Err(Error::Invariant(format!(
                "freeness {free} disagrees with saturation of the gradient ideal ({saturated})"
            )));
        }
    }

    let koszul_free = if !reduced {
        Verdict::NotComputed
    } else {
        match clock.time("koszul_free", || is_koszul_free(f, options.extend_n)) {
            Ok(k) => {
                if let Some(r) = k.reason {
                    if k.verdict == Verdict::NotComputed {
                        notes.push(r);
                    }
                }
                k.verdict
            }
            Err(Error::Precondition(msg)) => {
                notes.push(format!("koszul freeness: {msg}"));
                Verdict::NotComputed
            }
            Err(e) => return Err(e),
        }
    };
    if free.is_true() && lt.verdict.is_true() && koszul_free.is_false() && n == 3 {
        return Err(Error::Invariant("free of linear type but not Koszul free".into()));
    }

    let mut cramer = CramerSummary { gsc: Verdict::NotComputed, pivot_degree: None, d_parity: None, companion_check: None };
    let mut certificate = None;
    if let (Some(sat), true) = (&saturation, three_gen_plane) {
        if sat.exponent == 1 {
            let opts = GscOptions { budget: options.gsc_budget, seed: options.seed };
            match clock.time("cramer", || gsc_search(&mingens, sat, opts)) {
                Ok(GscOutcome::Found(cert)) => {
                    let rep = cramer_verify(&cert, &mingens, sat)?;
                    cramer = CramerSummary {
                        gsc: Verdict::True,
                        pivot_degree: cert.matrix.pivot.degree(),
                        d_parity: Some(if cert.d % 2 == 1 { "odd" } else { "even" }),
                        companion_check: Some(true),
                    };
                    certificate = Some((cert, rep));
                }
                Ok(GscOutcome::NotFound { attempts }) => {
                    notes.push(format!("no saturation pivot certified after {attempts} attempts"));
                    cramer.gsc = Verdict::Inconclusive;
                }
                Err(Error::Precondition(msg)) => notes.push(format!("cramer: {msg}")),
                Err(Error::Groebner(e)) => {
                    notes.push(format!("cramer: {e}"));
                    cramer.gsc = Verdict::Inconclusive;
                }
                Err(e) => return Err(e),
            }
        }
    }

    let gradient = GradientSummary {
        codim,
        regularity: betti.as_ref().map(|b| b.regularity),
        betti,
        st: saturation.as_ref().map(|s| s.exponent),
        indeg: saturation.as_ref().and_then(|s| s.indeg),
    };
    Ok(DivisorReport {
        input: f.to_string(),
        ring: ring.variables().to_vec(),
        reduced,
        homogeneous,
        weights,
        gradient,
        free,
        linear_type,
        syzygetic,
        koszul_saturation,
        koszul_free,
        cramer,
        timings: options.timings.then_some(clock.table),
        notes,
        freeness,
        saturation,
        linear_type_check: Some(lt),
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Ring};

    fn run(f: &str, rees: bool) -> DivisorReport {
        let r = Ring::degrevlex(["x", "y", "z"]).unwrap();
        analyze(&parse_poly(f, &r).unwrap(), AnalyzeOptions { rees, ..Default::default() }).unwrap()
    }

    #[test]
    fn arrangement_report() {
        let rep = run("x*y*z*(x+y+z)", false);
        assert_eq!(rep.free, Verdict::False);
        assert_eq!(rep.gradient.st, Some(1));
        assert_eq!(rep.gradient.regularity, Some(3));
        assert_eq!(rep.linear_type.verdict, Verdict::True);
        assert_eq!(rep.linear_type.route, Some(Route::Fitting));
        assert_eq!(rep.koszul_saturation, Verdict::True);
        assert!(rep.timings.is_none());
    }

    #[test]
    fn eulerian_free_not_koszul_free() {
        let rep = run("x*y*(x+y)*(x+y*z)", true);
        assert_eq!(rep.free, Verdict::True);
        assert_eq!(rep.linear_type.verdict, Verdict::False);
        assert_eq!(rep.linear_type.route, Some(Route::Rees));
        assert_eq!(rep.koszul_free, Verdict::False);
        assert_eq!(rep.gradient.st, None);
    }

    #[test]
    fn json_keys() {
        let rep = run("x*(x^2+y*z)", false);
        let v = serde_json::to_value(&rep).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        for k in [
            "input", "ring", "reduced", "homogeneous", "weights", "gradient", "free", "linear_type", "syzygetic",
            "koszul_saturation", "koszul_free", "cramer", "timings",
        ] {
            assert!(keys.iter().any(|x| *x == k), "{k}");
        }
        assert_eq!(v["gradient"]["st"], 2);
        assert_eq!(v["gradient"]["indeg"], 1);
        assert_eq!(v["cramer"]["gsc"], "not_computed");
    }
}
