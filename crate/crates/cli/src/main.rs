use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use freediv::corpus::{run_corpus, CorpusOptions, CRITERIA};
use freediv::cramer::{gsc_search, GscOptions, GscOutcome};
use freediv::divisor::{analyze, gradient_ideal, is_free, natural_grading, AnalyzeOptions};
use freediv::modsyz::{minimal_free_resolution, Grading};
use freediv::typecheck::{is_koszul_free, is_syzygetic, linear_type_of, rees_ideal, symmetric_ideal_graded, Route};
use freediv::{parse_poly, Error, Ideal, Polynomial, Ring, Verdict};
use serde_json::{json, Value};

mod family;
mod render;

#[derive(Parser)]
#[command(name = "freediv", version, about = "Freeness, linear type and saturation of gradient ideals over Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Comma-separated variable names.
    #[arg(long, default_value = "x,y,z")]
    vars: String,
    /// Print the JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Also write the JSON report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest sugar degree a Gröbner computation may reach; 0 removes the cap.
    #[arg(long, default_value_t = 30)]
    degree_cap: u32,
    /// Seed for every randomized retry.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of perturbed lifts tried when searching for a Cramer pivot.
    #[arg(long, default_value_t = 8)]
    gsc_budget: usize,
    /// Record wall-clock time per stage.
    #[arg(long)]
    timings: bool,
}

impl Common {
    fn cap(&self) -> Option<u32> {
        (self.degree_cap > 0).then_some(self.degree_cap)
    }

    fn ring(&self) -> Result<Arc<Ring>, Error> {
        Ok(Ring::from_var_list(&self.vars)?)
    }

    fn poly(&self, text: &str) -> Result<Polynomial, Error> {
        Ok(parse_poly(text, &self.ring()?)?)
    }
}

#[derive(Args, Clone, Copy)]
struct Flags {
    /// Run the Rees elimination and cross-check it against the Fitting route.
    #[arg(long)]
    rees: bool,
    /// Allow the Koszul-free test in other than three variables.
    #[arg(long)]
    extend_n: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Fitting,
    Rees,
    Both,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Full report for one polynomial.
    Analyze {
        polynomial: String,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        flags: Flags,
    },
    /// Minimal free resolution of the gradient ideal, or of an ideal given with --ideal.
    Resolve {
        input: String,
        /// Treat the input as `;`-separated generators of a homogeneous ideal.
        #[arg(long)]
        ideal: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Saturation of the gradient ideal by the irrelevant ideal.
    Saturation {
        polynomial: String,
        #[command(flatten)]
        common: Common,
    },
    CheckFree {
        polynomial: String,
        #[command(flatten)]
        common: Common,
    },
    CheckLinearType {
        polynomial: String,
        #[arg(long, value_enum, default_value = "both")]
        route: RouteArg,
        #[command(flatten)]
        common: Common,
    },
    CheckKoszulFree {
        polynomial: String,
        #[arg(long)]
        extend_n: bool,
        #[command(flatten)]
        common: Common,
    },
    CheckSyzygetic {
        polynomial: String,
        #[command(flatten)]
        common: Common,
    },
    /// Search for a Cramer pivot and verify the structure it forces.
    Cramer {
        polynomial: String,
        #[command(flatten)]
        common: Common,
    },
    /// Build a family member or named example, analyze it and compare with its expectations.
    Family {
        name: String,
        #[command(flatten)]
        params: family::FamilyArgs,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        flags: Flags,
    },
    /// Run the bundled acceptance corpus.
    Corpus {
        /// Only these criteria (comma-separated ids).
        #[arg(long, value_delimiter = ',')]
        criteria: Vec<u32>,
        /// List every failing check.
        #[arg(long)]
        verbose: bool,
        #[command(flatten)]
        common: Common,
    },
}

/// What a subcommand produced: JSON, a text rendering, and whether a check failed.
struct Output {
    json: Value,
    text: String,
    failed: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Output {
        Output { json, text, failed: false }
    }
}

fn analyze_options(common: &Common, flags: Flags) -> AnalyzeOptions {
    AnalyzeOptions {
        rees: flags.rees,
        extend_n: flags.extend_n,
        gsc_budget: common.gsc_budget,
        seed: common.seed,
        degree_cap: common.cap(),
        timings: common.timings,
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable report")
}

fn minimal_gradient(f: &Polynomial, cap: Option<u32>) -> Result<Ideal, Error> {
    let j = gradient_ideal(f)?.with_degree_cap(cap);
    Ok(Ideal::new(f.ring(), j.minimal_generators()?))
}

fn run(command: &Command) -> Result<Output, Error> {
    match command {
        Command::Analyze { polynomial, common, flags } => {
            let f = common.poly(polynomial)?;
            let report = analyze(&f, analyze_options(common, *flags))?;
            Ok(Output::ok(to_json(&report), render::report(&report)))
        }
        Command::Resolve { input, ideal, common } => {
            let ring = common.ring()?;
            let (gens, grading) = if *ideal {
                let gens = input.split(';').map(|g| parse_poly(g.trim(), &ring)).collect::<Result<Vec<_>, _>>()?;
                if !gens.iter().all(Polynomial::is_homogeneous) {
                    return Err(Error::Precondition("resolutions are computed for homogeneous ideals".into()));
                }
                (gens, Grading::standard(&ring))
            } else {
                let f = parse_poly(input, &ring)?;
                let grading = natural_grading(&f);
                if !grading.is_graded() {
                    return Err(Error::Precondition("gradient ideal is not graded by any positive weights".into()));
                }
                (minimal_gradient(&f, common.cap())?.generators().to_vec(), grading)
            };
            let i = Ideal::new(&ring, gens).with_degree_cap(common.cap());
            let betti = minimal_free_resolution(&i, &grading)?.betti();
            let gens: Vec<String> = i.generators().iter().map(|g| g.to_string()).collect();
            let text = format!(
                "ideal: <{}>\nresolution: {}\nregularity of R/I: {}\nprojective dimension: {}",
                gens.join(", "),
                betti.display(),
                betti.regularity,
                betti.length()
            );
            Ok(Output::ok(
                json!({"ideal": gens, "betti": betti, "regularity": betti.regularity, "length": betti.length()}),
                text,
            ))
        }
        Command::Saturation { polynomial, common } => {
            let f = common.poly(polynomial)?;
            let j = gradient_ideal(&f)?.with_degree_cap(common.cap());
            if !j.is_homogeneous() {
                return Err(Error::Precondition("saturation by the irrelevant ideal needs a homogeneous input".into()));
            }
            let sat = j.saturate_maximal()?;
            let gens: Vec<String> = sat.saturated.minimal_generators()?.iter().map(|g| g.to_string()).collect();
            let extra: Vec<String> = sat.extra_generators.iter().map(|g| g.to_string()).collect();
            let text = format!(
                "saturated: {}\nexponent: {}\nindeg(I^sat/I): {}\nI^sat = <{}>\nextra generators: {}",
                sat.exponent == 0,
                sat.exponent,
                render::opt(sat.indeg),
                gens.join(", "),
                if extra.is_empty() { "none".to_string() } else { extra.join(", ") }
            );
            Ok(Output::ok(
                json!({"saturated": sat.exponent == 0, "exponent": sat.exponent, "indeg": sat.indeg,
                       "generators": gens, "extra_generators": extra}),
                text,
            ))
        }
        Command::CheckFree { polynomial, common } => {
            let f = common.poly(polynomial)?;
            let c = is_free(&f)?;
            let matrix = c.syzygy_matrix.to_strings();
            let mut text = format!("free: {}\ncodim J_f: {}\nsmooth: {}\nsyzygy matrix:\n{}", c.verdict, c.codim, c.smooth, render::matrix(&matrix));
            if let Some(b) = &c.betti {
                text.push_str(&format!("\nresolution: {}", b.display()));
            }
            if let Some(n) = &c.note {
                text.push_str(&format!("\nnote: {n}"));
            }
            Ok(Output::ok(
                json!({"free": c.verdict, "codim": c.codim, "smooth": c.smooth, "syzygy_matrix": matrix,
                       "betti": c.betti, "note": c.note}),
                text,
            ))
        }
        Command::CheckLinearType { polynomial, route, common } => {
            let f = common.poly(polynomial)?;
            let pres = symmetric_ideal_graded(&minimal_gradient(&f, common.cap())?, &natural_grading(&f))?;
            let route = match route {
                RouteArg::Fitting => Route::Fitting,
                RouteArg::Rees => Route::Rees,
                RouteArg::Both => Route::Both,
            };
            let lt = linear_type_of(&pres, route, common.cap())?;
            let outside: Vec<Value> = lt
                .rees
                .as_ref()
                .map(|r| r.outside.iter().map(|(p, b)| json!({"generator": p.to_string(), "bidegree": [b.0, b.1]})).collect())
                .unwrap_or_default();
            let mut text = format!("linear type: {}\nroute: {}", lt.verdict, to_json(&lt.route).as_str().unwrap_or(""));
            if let Some(fit) = &lt.fitting {
                if let Some(c) = fit.entry_codim {
                    text.push_str(&format!("\ncodim I_1(phi): {c}"));
                }
                if let Some(f1) = &fit.f1 {
                    for (t, c, b) in &f1.codims {
                        text.push_str(&format!("\ncodim I_{t}(phi) = {c} (needs >= {b})"));
                    }
                }
            }
            for o in &outside {
                text.push_str(&format!("\nRees generator outside the symmetric ideal: {} bidegree {}", o["generator"], o["bidegree"]));
            }
            if let Some(n) = &lt.note {
                text.push_str(&format!("\nnote: {n}"));
            }
            Ok(Output::ok(json!({"linear_type": lt.verdict, "route": lt.route, "rees_outside": outside, "note": lt.note}), text))
        }
        Command::CheckKoszulFree { polynomial, extend_n, common } => {
            let f = common.poly(polynomial)?;
            let k = is_koszul_free(&f, *extend_n)?;
            let mut text = format!("koszul free: {}", k.verdict);
            if let Some(c) = k.codim {
                text.push_str(&format!("\ncodim of the symbol ideal: {c}"));
            }
            if let Some(r) = &k.reason {
                text.push_str(&format!("\nnote: {r}"));
            }
            Ok(Output::ok(json!({"koszul_free": k.verdict, "codim": k.codim, "note": k.reason}), text))
        }
        Command::CheckSyzygetic { polynomial, common } => {
            let f = common.poly(polynomial)?;
            let pres = symmetric_ideal_graded(&minimal_gradient(&f, common.cap())?, &natural_grading(&f))?;
            let (verdict, outside, note) = match rees_ideal(&pres, common.cap()) {
                Ok(rees) => {
                    let s = is_syzygetic(&pres, &rees)?;
                    (Verdict::from(s.verdict), s.quadratic_outside.iter().map(|p| p.to_string()).collect(), None)
                }
                Err(Error::Groebner(e)) => (Verdict::Inconclusive, Vec::new(), Some(e.to_string())),
                Err(e) => return Err(e),
            };
            let mut text = format!("syzygetic: {verdict}");
            for q in &outside {
                text.push_str(&format!("\nT-degree 2 Rees generator outside the symmetric ideal: {q}"));
            }
            if let Some(n) = &note {
                text.push_str(&format!("\nnote: {n}"));
            }
            Ok(Output::ok(json!({"syzygetic": verdict, "quadratic_outside": outside, "note": note}), text))
        }
        Command::Cramer { polynomial, common } => {
            let f = common.poly(polynomial)?;
            let j = minimal_gradient(&f, common.cap())?;
            if !j.is_homogeneous() || j.generators().len() != 3 || f.ring().arity() != 3 {
                return Err(Error::Precondition("needs three homogeneous gradient generators in three variables".into()));
            }
            let sat = j.saturate_maximal()?;
            if sat.exponent != 1 {
                return Err(Error::Precondition(format!("st(I) = {}, the pivot search needs st(I) = 1", sat.exponent)));
            }
            let outcome = gsc_search(&j, &sat, GscOptions { budget: common.gsc_budget, seed: common.seed })?;
            match outcome {
                GscOutcome::NotFound { attempts } => Ok(Output::ok(
                    json!({"gsc": Verdict::Inconclusive, "attempts": attempts}),
                    format!("generic saturation condition: inconclusive (no pivot in {attempts} attempts)"),
                )),
                GscOutcome::Found(cert) => {
                    let report = freediv::cramer::cramer_verify(&cert, &j, &sat)?;
                    let matrix = cert.matrix.to_strings();
                    let text = format!(
                        "generic saturation condition: true\nd: {} ({})\npivot degree: {}\nrebased: {}\nattempt: {}\ncontent matrix:\n{}\ndet / g: {}\nI^sat = <I, g>: {}\nI_3 = <I, g>: {}\nresolution matches: {}",
                        cert.d,
                        if cert.d % 2 == 1 { "odd" } else { "even" },
                        cert.companion.degree().unwrap_or(0),
                        cert.rebased,
                        cert.attempt,
                        render::matrix(&matrix),
                        report.companion_ratio,
                        report.saturation_matches,
                        report.minors_match,
                        report.betti_matches
                    );
                    Ok(Output::ok(
                        json!({"gsc": Verdict::True, "d": cert.d, "pivot_degree": cert.companion.degree(),
                               "rebased": cert.rebased, "attempt": cert.attempt, "content_matrix": matrix,
                               "companion_ratio": report.companion_ratio.to_string(),
                               "saturation_matches": report.saturation_matches,
                               "minors_match": report.minors_match, "betti_matches": report.betti_matches,
                               "degree_relation": report.degree_relation}),
                        text,
                    ))
                }
            }
        }
        Command::Family { name, params, common, flags } => family::run(name, params, analyze_options(common, *flags)),
        Command::Corpus { criteria, verbose, common } => {
            if let Some(bad) = criteria.iter().find(|c| !CRITERIA.iter().any(|(i, _)| i == *c)) {
                return Err(Error::Precondition(format!("no criterion {bad}; ids run from 1 to {}", CRITERIA.len())));
            }
            let options = CorpusOptions { seed: common.seed, degree_cap: common.cap(), gsc_budget: common.gsc_budget };
            let outcomes = run_corpus(criteria, &options);
            let failed = outcomes.iter().any(|o| !o.passed);
            let mut text = String::new();
            for o in &outcomes {
                text.push_str(&o.summary());
                text.push('\n');
                if *verbose || !o.passed {
                    for f in o.failures() {
                        text.push_str(&format!("       failed: {} {}\n", f.name, f.detail.as_deref().unwrap_or("")));
                    }
                }
            }
            let passed = outcomes.iter().filter(|o| o.passed).count();
            text.push_str(&format!("{passed} of {} criteria passed", outcomes.len()));
            Ok(Output { json: json!({"criteria": outcomes, "passed": passed, "total": outcomes.len()}), text, failed })
        }
    }
}

fn common_of(command: &Command) -> &Common {
    match command {
        Command::Analyze { common, .. }
        | Command::Resolve { common, .. }
        | Command::Saturation { common, .. }
        | Command::CheckFree { common, .. }
        | Command::CheckLinearType { common, .. }
        | Command::CheckKoszulFree { common, .. }
        | Command::CheckSyzygetic { common, .. }
        | Command::Cramer { common, .. }
        | Command::Family { common, .. }
        | Command::Corpus { common, .. } => common,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = common_of(&cli.command);
    match run(&cli.command) {
        Ok(out) => {
            let json = serde_json::to_string_pretty(&out.json).expect("json");
            let shown = if common.json { &json } else { &out.text };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{shown}");
            if let Some(path) = &common.out {
                if let Err(e) = std::fs::write(path, format!("{json}\n")) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            ExitCode::from(u8::from(out.failed))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Precondition(_) | Error::Poly(_) => 2,
                Error::Invariant(_) | Error::Groebner(_) => 1,
            })
        }
    }
}
