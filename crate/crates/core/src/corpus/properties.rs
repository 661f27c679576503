use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{betti_of, named, report, Checks, CorpusOptions};
use crate::divisor::{gradient_ideal, natural_grading};
use crate::error::{Error, Result};
use crate::families::{binary_wh, cone_of_binary_wh, quintic_plus, sweeps, BinaryCoefficients};
use crate::groebner::Ideal;
use crate::modsyz::{minimal_free_resolution, Grading};
use crate::poly::{homogenize, Monomial, Polynomial, Rational};
use crate::typecheck::{linear_type_of, symmetric_ideal_graded, Route};
use crate::verdict::Verdict;

/// A divisor of the structural suite together with its gradient ideal.
#[derive(Clone, Debug)]
pub struct SuiteCase {
    pub label: String,
    pub polynomial: Polynomial,
    pub ideal: Ideal,
}

/// Gradient ideals of the named examples and of one member of each family.
pub fn suite() -> Result<Vec<SuiteCase>> {
    let mut polys: Vec<(String, Polynomial)> = Vec::new();
    for tag in [
        "conic_line",
        "arr1",
        "arr2",
        "sextic",
        "cn1",
        "cn2",
        "cn1_homogenized",
        "cn2_homogenized",
        "smooth_conic",
        "cuspidal_cubic",
        "nodal_cubic",
    ] {
        polys.push((tag.to_string(), named(tag)?.polynomial));
    }
    let one = Rational::from_integer(1.into());
    for d in [5, 6] {
        polys.push((format!("quintic_plus d={d}"), quintic_plus(d, &[one.clone(), one.clone(), one.clone(), one.clone()])?.polynomial));
    }
    for (p, q, s) in sweeps::BINARY_TRIPLES.iter().copied().take(2) {
        let f = binary_wh(p, q, s, &BinaryCoefficients::ones(s))?.polynomial;
        polys.push((format!("homogenized binary ({p},{q},{s})"), homogenize(&f, "z")?));
        polys.push((format!("cone binary ({p},{q},{s})"), cone_of_binary_wh(p, q, s, &BinaryCoefficients::ones(s))?.polynomial));
    }
    for m in sweeps::addition_instances()? {
        polys.push((format!("addition n={}", m.polynomial.ring().arity()), m.polynomial));
    }
    polys
        .into_iter()
        .map(|(label, polynomial)| Ok(SuiteCase { label, ideal: gradient_ideal(&polynomial)?, polynomial }))
        .collect()
}

fn shuffled_basis_agrees(ideal: &Ideal, rng: &mut ChaCha8Rng) -> Result<bool> {
    let mut gens = ideal.generators().to_vec();
    gens.shuffle(rng);
    let again = Ideal::new(ideal.ring(), gens);
    Ok(again.groebner_basis()? == ideal.groebner_basis()?)
}

/// `contains` and `lift` agree, and every lift recombines to its target.
fn lift_agrees(ideal: &Ideal, targets: &[Polynomial]) -> Result<bool> {
    for h in targets {
        let inside = ideal.contains(h)?;
        match ideal.lift(h)? {
            Some(coeffs) => {
                let mut acc = Polynomial::zero(ideal.ring());
                for (c, g) in coeffs.iter().zip(ideal.generators()) {
                    acc = &acc + &(c * g);
                }
                if !inside || acc != *h {
                    return Ok(false);
                }
            }
            None if inside => return Ok(false),
            None => {}
        }
    }
    Ok(true)
}

fn lift_targets(ideal: &Ideal, rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    use rand::Rng;
    let r = ideal.ring();
    let n = r.arity();
    let mut out = Vec::new();
    let mut combo = Polynomial::zero(r);
    for (i, g) in ideal.generators().iter().enumerate() {
        let c = Rational::from_integer(rng.gen_range(-5i64..=5).into());
        combo = &combo + &(&Polynomial::variable(r, i % n).scale(&c) * g);
    }
    out.push(combo);
    for i in 0..n {
        for j in i..n {
            let mut e = vec![0u32; n];
            e[i] += 1;
            e[j] += 1;
            out.push(Polynomial::term(r, Monomial::from_exponents(&e), Rational::from_integer(1.into())));
        }
    }
    out
}

/// Degrees of the entries of each minimal syzygy column, sorted.
fn syzygy_degrees(ideal: &Ideal) -> Result<Vec<i64>> {
    let res = minimal_free_resolution(ideal, &Grading::standard(ideal.ring()))?;
    let b = res.betti();
    let d = ideal.generators().iter().filter_map(|g| g.degree()).max().unwrap_or(0) as i64;
    Ok(b.shifts(2).iter().map(|s| s - d).collect())
}

pub(super) fn structural(c: &mut Checks, o: &CorpusOptions) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let cases = suite()?;
    let mut both_routes = 0;
    for case in &cases {
        let label = &case.label;
        let ideal = &case.ideal;
        c.check(format!("{label}: Groebner basis independent of generator order"), shuffled_basis_agrees(ideal, &mut rng)?, String::new);
        let targets = lift_targets(ideal, &mut rng);
        c.check(format!("{label}: membership and lift agree"), lift_agrees(ideal, &targets)?, String::new);

        let homogeneous = case.polynomial.is_homogeneous();
        if !homogeneous || ideal.is_unit()? {
            continue;
        }
        let mingens = Ideal::new(ideal.ring(), ideal.minimal_generators()?);
        let betti = betti_of(&mingens)?;
        let reg = (1..=betti.length()).flat_map(|i| betti.shifts(i).into_iter().map(move |s| s - i as i64)).max();
        let rep = report(&case.polynomial, o, false)?;
        c.eq(format!("{label}: regularity is max(shift - i) over the Betti table"), rep.gradient.regularity, reg);

        let codim = mingens.codimension()?;
        let equigenerated = mingens.generators().iter().map(|g| g.degree()).collect::<std::collections::BTreeSet<_>>().len() == 1;
        if codim == 2 && mingens.generators().len() == 3 && equigenerated && ideal.ring().arity() == 3 {
            let d = mingens.generators()[0].degree().expect("nonzero") as i64;
            let r = syzygy_degrees(&mingens)?;
            let perfect = betti.length() == 2;
            let pair_sums: Vec<i64> =
                (0..r.len()).flat_map(|i| (i + 1..r.len()).map(move |j| (i, j))).map(|(i, j)| r[i] + r[j]).collect();
            if perfect {
                c.check(format!("{label}: perfect, syzygy degrees {r:?} sum to {d}"), r.len() == 2 && r[0] + r[1] == d, String::new);
                let max_r = r.iter().copied().max().unwrap_or(0);
                c.eq(format!("{label}: perfect regularity d + max r - 2"), reg, Some(d + max_r - 2));
            } else {
                c.check(format!("{label}: not perfect, every pair of {r:?} sums to at least {}", d + 1), pair_sums.iter().all(|s| *s > d), String::new);
            }
        }

        if ideal.ring().arity() == 3 {
            let pres = symmetric_ideal_graded(&mingens, &natural_grading(&case.polynomial))?;
            match linear_type_of(&pres, Route::Both, o.degree_cap) {
                Ok(lt) if lt.route == Route::Both => {
                    both_routes += 1;
                    c.check(format!("{label}: fitting and Rees routes agree ({})", lt.verdict), lt.verdict != Verdict::NotComputed, String::new);
                }
                Err(Error::Invariant(msg)) => c.check(format!("{label}: fitting and Rees routes agree"), false, || msg),
                Ok(_) | Err(Error::Groebner(_)) => {}
                Err(e) => return Err(e),
            }
            if rep.free.is_true() && rep.linear_type.verdict.is_true() {
                c.eq(format!("{label}: free and linear type imply Koszul free"), rep.koszul_free, Verdict::True);
            }
        }
    }
    c.check("both linear type routes ran somewhere", both_routes > 0, String::new);
    Ok(())
}
