use num_traits::Zero;

use super::{
    annihilates, betti_of, free_verdict, gradient, named, poly, proportional, report, report_n, xyz, Checks,
    CorpusOptions,
};
use crate::divisor::{gradient_syzygies, lin_syzygy_of_homogenization, natural_grading};
use crate::error::Result;
use crate::families::{
    addition2_syzygies, addition_linear_syzygies, binary_case, divisible_by_axis, expected_resolution, sweeps,
};
use crate::groebner::Ideal;
use crate::modsyz::{BettiData, Column, Grading, Submodule};
use crate::poly::{euler_residual, weighted_weights, Polynomial, Rational, Ring, WeightClass};
use crate::typecheck::{symmetric_ideal_graded, Route};
use crate::verdict::Verdict;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub(super) fn conic_line(c: &mut Checks, o: &CorpusOptions) -> Result<()> {
    let r = xyz();
    let m = named("conic_line")?;
    let f = &m.polynomial;
    let expected = vec![poly("3*x^2+y*z", &r)?, poly("x*z", &r)?, poly("x*y", &r)?];
    c.eq("gradient generators", gradient(f)?.generators().to_vec(), expected);
    let rep = report(f, o, false)?;
    c.eq("reg(R/I)", rep.gradient.regularity, Some(2));
    c.eq("st(I)", rep.gradient.st, Some(2));
    c.eq("indeg(I^sat/I)", rep.gradient.indeg, Some(1));
    let sat = &rep.saturation.as_ref().expect("homogeneous input").saturated;
    let target = Ideal::new(&r, vec![poly("x", &r)?, poly("y*z", &r)?]);
    c.check("I^sat = <x, yz>", sat.equals(&target)?, || format!("{:?}", sat.groebner_basis()));
    Ok(())
}

pub(super) fn arr1(c: &mut Checks, o: &CorpusOptions) -> Result<()> {
    let m = named("arr1")?;
    let rep = report(&m.polynomial, o, true)?;
    let betti = BettiData::from_shifts(&[vec![3; 3], vec![5; 3], vec![6]]);
    c.eq("resolution 0->R(-6)->R(-5)^3->R(-3)^3->R", rep.gradient.betti.clone(), Some(betti));
    c.eq("reg", rep.gradient.regularity, Some(3));
    c.eq("st", rep.gradient.st, Some(1));
    let sat = rep.saturation.as_ref().expect("homogeneous input");
    let mins = sat.saturated.minimal_generators()?;
    let degs: Vec<Option<u32>> = mins.iter().map(|g| g.degree()).collect();
    c.eq("I^sat minimal generators", degs, vec![Some(3); 4]);
    c.eq("linear type", rep.linear_type.verdict, Verdict::True);
    c.eq("linear type routes", rep.linear_type.route, Some(Route::Both));
    Ok(())
}

pub(super) fn arr2(c: &mut Checks, o: &CorpusOptions) -> Result<()> {
    let m = named("arr2")?;
    let rep = report(&m.polynomial, o, true)?;
    let betti = BettiData::from_shifts(&[vec![5; 3], vec![8; 3], vec![9]]);
    c.eq("resolution 0->R(-9)->R(-8)^3->R(-5)^3->R", rep.gradient.betti.clone(), Some(betti));
    c.eq("reg", rep.gradient.regularity, Some(6));
    c.eq("st", rep.gradient.st, Some(1));
    let sat = rep.saturation.as_ref().expect("homogeneous input");
    let extra_degrees: Vec<Option<u32>> = sat.extra_generators.iter().map(|g| g.degree()).collect();
    c.eq("extra saturation generators", extra_degrees, vec![Some(6)]);
    if let Some(g) = sat.extra_generators.first() {
        let j = gradient(&m.polynomial)?;
        let mut gens = j.generators().to_vec();
        gens.push(g.clone());
        c.check("I^sat = <I, g>", Ideal::new(j.ring(), gens).equals(&sat.saturated)?, String::new);
    }
    c.eq("linear type", rep.linear_type.verdict, Verdict::True);
    c.eq("generic saturation condition", rep.cramer.gsc, Verdict::True);
    c.eq("pivot degree", rep.cramer.pivot_degree, Some(6));
    c.eq("generator degree parity", rep.cramer.d_parity, Some("odd"));
    c.eq("cramer structure verified", rep.cramer.companion_check, Some(true));
    if let Some((cert, check)) = &rep.certificate {
        c.eq("d", cert.d, 5);
        c.check("2 deg g = 3 (d - 1)", check.degree_relation, String::new);
    }
    Ok(())
}

pub(super) fn sextic(c: &mut Checks, o: &CorpusOptions) -> Result<()> {
    let m = named("sextic")?;
    let r = m.polynomial.ring().clone();
    let rep = report(&m.polynomial, o, true)?;
    let sat = rep.saturation.as_ref().expect("homogeneous input");
    c.check("not saturated", sat.exponent > 0, || "gradient ideal is saturated".into());
    let j = gradient(&m.polynomial)?;
    let mut gens = j.generators().to_vec();
    gens.push(poly("x^2*y^4", &r)?);
    c.check("I^sat = <I, x^2 y^4>", Ideal::new(&r, gens).equals(&sat.saturated)?, String::new);
    let sat_betti = BettiData::from_shifts(&[vec![5, 5, 5, 6], vec![7; 3]]);
    c.eq("resolution of I^sat", betti_of(&sat.saturated)?, sat_betti);
    let betti = BettiData::from_shifts(&[vec![5; 3], vec![8; 3], vec![9]]);
    c.eq("resolution of I", rep.gradient.betti.clone(), Some(betti));
    c.eq("indeg(I^sat/I)", rep.gradient.indeg, Some(6));
    c.eq("linear type", rep.linear_type.verdict, Verdict::False);
    c.eq("syzygetic", rep.syzygetic, Verdict::False);
    c.eq("Z cap I^sat R^3 = K", rep.koszul_saturation, Verdict::False);
    let rees = rep.linear_type_check.as_ref().and_then(|l| l.rees.as_ref());
    let bidegrees: Vec<(u32, u32)> = rees.map(|e| e.outside.iter().map(|(_, b)| *b).collect()).unwrap_or_default();
    c.check("Rees generator of bidegree (2,2) outside the symmetric ideal", bidegrees.contains(&(2, 2)), || {
        format!("bidegrees outside: {bidegrees:?}")
    });
    c.eq("generic saturation condition", rep.cramer.gsc, Verdict::True);
    let rebased = rep.certificate.as_ref().map(|(cert, _)| cert.rebased);
    c.eq("found after generator rebase", rebased, Some(true));
    Ok(())
}

fn syzygy_degrees(f: &Polynomial) -> Result<Vec<i64>> {
    let m = gradient_syzygies(f, &natural_grading(f))?;
    let mut d: Vec<i64> =
        m.columns().iter().map(|c| c.iter().filter_map(|p| p.degree()).max().unwrap_or(0) as i64).collect();
    d.sort();
    Ok(d)
}

pub(super) fn quintic_sweep(c: &mut Checks, o: &CorpusOptions) -> Result<()> {
    for m in sweeps::quintic_plus_sweep(o.seed)? {
        let d: u32 = m.spec.params["d"].parse().expect("stored degree");
        let label = format!("d={d} a=({})", m.spec.params["a"]);
        let rep = report(&m.polynomial, o, false)?;
        c.eq(format!("{label}: free"), rep.free, Verdict::True);
        c.eq(format!("{label}: linear type"), rep.linear_type.verdict, Verdict::from(d == 5));
        let mut expected = vec![2, d as i64 - 3];
        expected.sort();
        c.eq(format!("{label}: syzygy degrees"), syzygy_degrees(&m.polynomial)?, expected);
    }
    Ok(())
}

pub(super) fn three_vars_sweep(c: &mut Checks, o: &CorpusOptions) -> Result<()> {
    for m in sweeps::binary_wh_sweep(o.seed)? {
        let f = &m.polynomial;
        let label = format!("f={f}");
        let p: u32 = m.spec.params["p"].parse().expect("stored");
        let q: u32 = m.spec.params["q"].parse().expect("stored");
        let s: u32 = m.spec.params["s"].parse().expect("stored");
        let d = f.degree().expect("nonzero");
        let WeightClass::WeightedHomogeneous(w) = weighted_weights(f) else {
            c.check(format!("{label}: weighted homogeneous"), false, String::new);
            continue;
        };
        let one_over_d = rat(1, d as i64);
        let weight_case = if w.rational.contains(&one_over_d) { 2 } else { 1 };
        c.eq(format!("{label}: case from weights"), weight_case, binary_case(p, q, s, f));
        let (big, v) = lin_syzygy_of_homogenization(f, "z")?;
        c.check(format!("{label}: linear syzygy of the homogenization"), annihilates(&big, &v), String::new);
        let rep = report(&big, o, false)?;
        c.eq(format!("{label}: resolution template"), rep.gradient.betti.clone(), Some(expected_resolution(&m.spec)?));
        c.eq(format!("{label}: linear type"), rep.linear_type.verdict, Verdict::True);
        c.eq(format!("{label}: free iff case 1"), rep.free, Verdict::from(weight_case == 1));
        c.eq(format!("{label}: case 1 iff divisible by x or y"), weight_case == 1, divisible_by_axis(f));
    }
    Ok(())
}

pub(super) fn cone_sweep(c: &mut Checks, o: &CorpusOptions) -> Result<()> {
    for m in sweeps::cone_sweep(o.seed)? {
        let g = &m.polynomial;
        let affine = &m.part("affine").expect("cone member").polynomial;
        let label = format!("f={affine}");
        let rep = report(g, o, false)?;
        c.eq(format!("{label}: codim J_G"), rep.gradient.codim, 2);
        c.eq(format!("{label}: resolution template"), rep.gradient.betti.clone(), Some(expected_resolution(&m.spec)?));
        c.eq(format!("{label}: free"), rep.free, Verdict::True);
        c.eq(format!("{label}: linear type"), rep.linear_type.verdict, Verdict::True);
        // I_F = <F_x, F_y> perfect of codimension 2 forces J_G perfect.
        let big = crate::poly::homogenize(affine, "z")?;
        let i_f = Ideal::new(big.ring(), vec![big.derivative(0), big.derivative(1)]);
        let perfect = i_f.codimension()? == 2 && betti_of(&i_f)?.length() == 2;
        c.check(format!("{label}: I_F perfect implies J_G perfect"), !perfect || rep.free.is_true(), || {
            format!("I_F perfect: {perfect}, J_G free: {}", rep.free)
        });
    }
    Ok(())
}

pub(super) fn addition(c: &mut Checks, o: &CorpusOptions) -> Result<()> {
    for m in sweeps::addition_instances()? {
        let n = m.polynomial.ring().arity();
        let label = format!("n={n} r=({}) subset={{{}}}", m.spec.params["r"], m.spec.params["subset"]);
        let g = &m.part("g").expect("addition member").polynomial;
        c.eq(format!("{label}: g free"), free_verdict(g)?, Verdict::False);
        let rep = report_n(&m.polynomial, o, false)?;
        c.eq(format!("{label}: f free"), rep.free, Verdict::True);
        c.eq(format!("{label}: f linear type"), rep.linear_type.verdict, Verdict::True);
        let f1 = rep.linear_type_check.as_ref().and_then(|l| l.fitting.as_ref()).and_then(|e| e.f1.clone());
        match f1 {
            Some(f1) => {
                let ts: Vec<usize> = f1.codims.iter().map(|x| x.0).collect();
                c.eq(format!("{label}: F1 checked for t = 1..n-1"), ts, (1..n).collect::<Vec<_>>());
                for (t, codim, bound) in &f1.codims {
                    c.eq(format!("{label}: bound at t={t} is n+1-t"), *bound, (n + 1 - t) as i64);
                    c.check(format!("{label}: codim I_{t}(phi) = {codim} >= {bound}"), codim >= bound, String::new);
                }
            }
            None => c.check(format!("{label}: F1 evidence"), false, || "no Fitting evidence".into()),
        }
        let syz = Submodule::new(m.polynomial.ring(), n, rep.freeness.as_ref().expect("reduced").syzygy_matrix.columns());
        for (k, col) in addition_linear_syzygies(&m).expect("nonzero exponent").iter().enumerate() {
            c.check(format!("{label}: echelon linear syzygy {}", k + 1), annihilates(&m.polynomial, col), String::new);
            c.check(format!("{label}: echelon syzygy {} is a minimal syzygy member", k + 1), syz.contains(col)?, String::new);
        }
    }
    Ok(())
}

/// The syzygies of `J_h` (in `n - 2` variables) padded with two zero rows.
fn padded_syzygies(h_small: &Polynomial, ring: &std::sync::Arc<Ring>) -> Result<Vec<Column>> {
    let k = h_small.ring().arity();
    if k < 2 {
        return Ok(Vec::new());
    }
    let map: Vec<Option<usize>> = (0..k).map(Some).collect();
    let phi = gradient_syzygies(h_small, &Grading::standard(h_small.ring()))?;
    Ok(phi
        .columns()
        .iter()
        .map(|col| {
            let mut c: Column = col.iter().map(|p| p.map_into(ring, &map)).collect();
            c.push(Polynomial::zero(ring));
            c.push(Polynomial::zero(ring));
            c
        })
        .collect())
}

pub(super) fn addition2(c: &mut Checks, o: &CorpusOptions) -> Result<()> {
    for m in sweeps::addition2_instances()? {
        let ring = m.polynomial.ring().clone();
        let n = ring.arity();
        let label = format!("n={n} h={}", m.spec.params["h"]);
        let g = &m.part("g").expect("addition2 member").polynomial;
        c.eq(format!("{label}: g free"), free_verdict(g)?, Verdict::False);
        let rep = report_n(&m.polynomial, o, false)?;
        c.eq(format!("{label}: f free"), rep.free, Verdict::True);
        if let Some(lt) = m.spec.expected.linear_type {
            c.eq(format!("{label}: f linear type"), rep.linear_type.verdict, Verdict::from(lt));
        }
        let [s0, s_last] = addition2_syzygies(&m).expect("addition2 member");
        c.check(format!("{label}: s_0 annihilates the gradient"), annihilates(&m.polynomial, &s0), String::new);
        c.check(format!("{label}: (0,..,0,d x_n^(d-1), m x_(n-1)^(m-1) h) annihilates"), annihilates(&m.polynomial, &s_last), String::new);
        let computed = rep.freeness.as_ref().expect("reduced").syzygy_matrix.columns();
        let hs = match m.spec.params["h"].as_str() {
            "x1" => Vec::new(),
            _ => {
                let hr = Ring::degrevlex((1..=n - 2).map(|i| format!("x{i}")))?;
                padded_syzygies(&poly(&m.spec.params["h"], &hr)?, &ring)?
            }
        };
        let mut shape = hs;
        shape.push(s0);
        shape.push(s_last);
        c.eq(format!("{label}: {} minimal syzygies", n - 1), computed.len(), n - 1);
        let same = Submodule::new(&ring, n, shape).equals(&Submodule::new(&ring, n, computed))?;
        c.check(format!("{label}: [phi_h | s_0 | s_(n-2)] generates all syzygies"), same, String::new);
    }
    Ok(())
}

pub(super) fn discriminant(c: &mut Checks, o: &CorpusOptions) -> Result<()> {
    let m = named("cn1")?;
    let f = &m.polynomial;
    let r = f.ring().clone();
    match weighted_weights(f) {
        WeightClass::WeightedHomogeneous(w) => {
            c.eq("rational weights", w.rational.clone(), vec![rat(1, 6), rat(1, 4), rat(1, 3)]);
            c.eq("integer weights and degree", (w.integer.clone(), w.lambda), (vec![2, 3, 4], 12));
        }
        other => c.check("weighted homogeneous", false, || format!("{other:?}")),
    }
    let euler = &f.scale(&rat(12, 1))
        - &(&(&poly("2*x", &r)? * &f.derivative(0)) + &(&(&poly("3*y", &r)? * &f.derivative(1)) + &(&poly("4*z", &r)? * &f.derivative(2))));
    c.check("12 f = 2x f_x + 3y f_y + 4z f_z", euler.is_zero(), || euler.to_string());
    c.check("euler residual vanishes", euler_residual(f, &[rat(1, 6), rat(1, 4), rat(1, 3)]).is_zero(), String::new);
    let rep = report(f, o, true)?;
    c.eq("J_f linear type", rep.linear_type.verdict, Verdict::True);
    let grading = natural_grading(f);
    let j = gradient(f)?;
    let pres = symmetric_ideal_graded(&Ideal::new(&r, j.minimal_generators()?), &grading)?;
    let entries = pres.syzygy_matrix.entry_ideal_generators();
    let entry_codim = Ideal::new(&r, entries).codimension()?;
    c.eq("syzygy entries generate an <x,y,z>-primary ideal (codim 3)", entry_codim, 3);

    let hm = named("cn1_homogenized")?;
    let big = &hm.polynomial;
    let hrep = report_n(big, o, true)?;
    c.eq("homogenization free", hrep.free, Verdict::False);
    c.eq("homogenization linear type", hrep.linear_type.verdict, Verdict::True);
    let br = big.ring().clone();
    let v: Column = ["x", "-3/2*y", "-4*z", "6*t"].iter().map(|s| poly(s, &br)).collect::<Result<_>>()?;
    c.check("(x, -3/2 y, -4z, 6t) annihilates the gradient", annihilates(big, &v), String::new);
    let (_, lin_syz) = lin_syzygy_of_homogenization(f, "t")?;
    c.check("weighted linear syzygy is proportional", proportional(&lin_syz, &v), || format!("{lin_syz:?}"));
    let cols = hrep.freeness.as_ref().expect("reduced").syzygy_matrix.columns();
    let linear: Vec<&Column> =
        cols.iter().filter(|col| col.iter().filter_map(|p| p.degree()).max() == Some(1)).collect();
    c.eq("minimal linear syzygies", linear.len(), 1);
    if let Some(l) = linear.first() {
        c.check("unique linear syzygy is a multiple of (x, -3/2 y, -4z, 6t)", proportional(l, &v), || format!("{l:?}"));
    }
    Ok(())
}

pub(super) fn eulerian(c: &mut Checks, o: &CorpusOptions) -> Result<()> {
    let m = named("cn2")?;
    let f = &m.polynomial;
    let r = f.ring().clone();
    match weighted_weights(f) {
        WeightClass::EulerianZeroWeights(w) => c.eq("weights", w.rational.clone(), vec![rat(1, 4), rat(1, 4), Rational::zero()]),
        other => c.check("eulerian with a zero weight", false, || format!("{other:?}")),
    }
    let rep = report(f, o, true)?;
    c.eq("free", rep.free, Verdict::True);
    c.eq("linear type", rep.linear_type.verdict, Verdict::False);
    let xy = Ideal::new(&r, vec![poly("x", &r)?, poly("y", &r)?]);
    let phi = &rep.freeness.as_ref().expect("reduced").syzygy_matrix;
    let mut inside = true;
    for e in phi.entry_ideal_generators() {
        inside &= xy.contains(&e)?;
    }
    c.check("syzygy entries lie in <x, y>", inside, String::new);
    c.eq("syzygetic", rep.syzygetic, Verdict::False);
    c.eq("Koszul free", rep.koszul_free, Verdict::False);
    let lt = rep.linear_type_check.as_ref();
    if let Some(evidence) = lt.and_then(|l| l.rees.as_ref()) {
        let pres = symmetric_ideal_graded(&Ideal::new(&r, gradient(f)?.minimal_generators()?), &Grading::Ungraded)?;
        let quadratic: Vec<&Polynomial> =
            evidence.outside.iter().filter(|(_, b)| b.1 == 2).map(|(p, _)| p).collect();
        let mut found = false;
        for q in &quadratic {
            let mut gens = pres.symmetric.clone();
            gens.push((*q).clone());
            if Ideal::new(&pres.extended, gens).equals(&evidence.rees)? {
                found = true;
                break;
            }
        }
        c.check("Rees ideal = <J_1, q> with q of T-degree 2", found, || {
            format!("{} generators outside the symmetric ideal", evidence.outside.len())
        });
    } else {
        c.check("Rees ideal computed", false, String::new);
    }

    let hm = named("cn2_homogenized")?;
    let big = &hm.polynomial;
    let br = big.ring().clone();
    let hrep = report_n(big, o, false)?;
    c.eq("homogenization free in four variables", hrep.free, Verdict::True);
    c.eq("homogenization not Koszul free", hrep.koszul_free, Verdict::False);
    // The matrix as usually printed has (x, y, 4z, -4t) in the middle; since x F_x + y F_y = 4F
    // and z F_z + t F_t = F, only (x, y, -4z, -4t) is a syzygy.
    let printed = ["x", "y", "4*z", "-4*t"].iter().map(|s| poly(s, &br)).collect::<Result<Column>>()?;
    c.check("printed middle column (x, y, 4z, -4t) is not a syzygy", !annihilates(big, &printed), String::new);
    let shown = [
        ["0", "0", "x", "-y"],
        ["x", "y", "-4*z", "-4*t"],
        ["0", "x*y+y^2", "-3*y*z", "-2*y*z-x*t-2*y*t"],
    ];
    let mut displayed = Vec::new();
    for col in shown {
        let col: Column = col.iter().map(|s| poly(s, &br)).collect::<Result<_>>()?;
        displayed.push(col);
    }
    let all_annihilate = displayed.iter().all(|col| annihilates(big, col));
    c.check("displayed columns are syzygies", all_annihilate, String::new);
    let computed = hrep.freeness.as_ref().expect("reduced").syzygy_matrix.columns();
    let degs = syzygy_degrees(big)?;
    c.eq("syzygy degrees (two linear)", degs, vec![1, 1, 2]);
    let same = Submodule::new(&br, 4, displayed).equals(&Submodule::new(&br, 4, computed))?;
    c.check("displayed 4x3 matrix generates all syzygies", same, String::new);
    Ok(())
}

pub(super) fn low_degree(c: &mut Checks, _o: &CorpusOptions) -> Result<()> {
    for tag in ["smooth_conic", "cuspidal_cubic", "nodal_cubic"] {
        let m = named(tag)?;
        c.eq(format!("{tag} {}: free", m.polynomial), free_verdict(&m.polynomial)?, Verdict::False);
    }
    let line = named("line")?;
    c.eq(format!("line {}: free", line.polynomial), free_verdict(&line.polynomial)?, Verdict::True);
    Ok(())
}
