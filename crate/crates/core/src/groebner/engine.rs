//! Buchberger's algorithm on sparse vectors over the integers.
//!
//! Every stored element is primitive (content removed); reductions are
//! fraction-free. Ideals are the rank-one case.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{Monomial, Rational, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub mon: Monomial,
    pub comp: u32,
    pub coef: BigInt,
}

/// Terms sorted strictly descending in the module order.
pub(crate) type Vector = Vec<Term>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ModuleOrderKind {
    /// Monomial first, then lower component index wins.
    Top,
    /// Components below the split dominate the rest; term-over-position inside each block.
    Split(u32),
}

#[derive(Clone, Debug)]
pub(crate) struct ModuleOrder {
    pub ring: Arc<Ring>,
    pub kind: ModuleOrderKind,
}

impl ModuleOrder {
    pub fn new(ring: &Arc<Ring>, kind: ModuleOrderKind) -> Self {
        ModuleOrder { ring: ring.clone(), kind }
    }

    pub fn cmp(&self, am: &Monomial, ac: u32, bm: &Monomial, bc: u32) -> Ordering {
        let by_comp = bc.cmp(&ac);
        match self.kind {
            ModuleOrderKind::Top => self.ring.compare(am, bm).then(by_comp),
            ModuleOrderKind::Split(k) => (bc >= k)
                .cmp(&(ac >= k))
                .then_with(|| self.ring.compare(am, bm))
                .then(by_comp),
        }
    }

    fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp(&a.mon, a.comp, &b.mon, b.comp)
    }

    pub fn sort(&self, v: &mut Vector) {
        v.sort_by(|a, b| self.cmp_terms(b, a));
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("Buchberger run exceeded the degree cap {0}")]
    DegreeCapExceeded(u32),
}

fn sev(m: &Monomial) -> u64 {
    let mut s = 0u64;
    for i in m.support() {
        s |= 1u64 << (i % 64);
    }
    s
}

pub(crate) struct Settings {
    pub order: ModuleOrder,
    /// Degree shift of each component, used only for sugar.
    pub shifts: Vec<u32>,
    pub product_criterion: bool,
    pub degree_cap: Option<u32>,
    /// Elements whose leading term lies at or beyond this component are dropped
    /// (tag-only relations that are not wanted).
    pub discard_from: Option<u32>,
}

#[derive(Clone)]
pub(crate) struct Elem {
    pub v: Vector,
    sev: u64,
    sugar: u32,
}

impl Elem {
    pub fn lead(&self) -> &Term {
        &self.v[0]
    }
}

fn make_elem(v: Vector, shifts: &[u32]) -> Elem {
    let sugar = v.iter().map(|t| t.mon.degree() + shift_of(shifts, t.comp)).max().unwrap_or(0);
    let sev = sev(&v[0].mon);
    Elem { v, sev, sugar }
}

fn shift_of(shifts: &[u32], comp: u32) -> u32 {
    shifts.get(comp as usize).copied().unwrap_or(0)
}

/// `a*p - b*m*q` where `m` is a monomial multiplier; merge in module order.
fn combine(order: &ModuleOrder, a: &BigInt, p: &[Term], b: &BigInt, m: &Monomial, q: &[Term]) -> Vector {
    let mut out = Vec::with_capacity(p.len() + q.len());
    let mut i = 0;
    let mut j = 0;
    let mut qt: Option<Term> = None;
    let next_q = |j: usize| -> Option<Term> {
        q.get(j).map(|t| Term { mon: t.mon.mul(m), comp: t.comp, coef: -(b * &t.coef) })
    };
    if j < q.len() {
        qt = next_q(j);
    }
    loop {
        match (p.get(i), qt.as_ref()) {
            (None, None) => break,
            (Some(pt), None) => {
                out.push(Term { mon: pt.mon.clone(), comp: pt.comp, coef: a * &pt.coef });
                i += 1;
            }
            (None, Some(_)) => {
                out.push(qt.take().unwrap());
                j += 1;
                qt = next_q(j);
            }
            (Some(pt), Some(t)) => match order.cmp(&pt.mon, pt.comp, &t.mon, t.comp) {
                Ordering::Greater => {
                    out.push(Term { mon: pt.mon.clone(), comp: pt.comp, coef: a * &pt.coef });
                    i += 1;
                }
                Ordering::Less => {
                    out.push(qt.take().unwrap());
                    j += 1;
                    qt = next_q(j);
                }
                Ordering::Equal => {
                    let c = a * &pt.coef + &t.coef;
                    if !c.is_zero() {
                        out.push(Term { mon: pt.mon.clone(), comp: pt.comp, coef: c });
                    }
                    i += 1;
                    j += 1;
                    qt = next_q(j);
                }
            },
        }
    }
    out
}

pub(crate) fn content(v: &[Term]) -> BigInt {
    let mut g = BigInt::zero();
    for t in v {
        g = g.gcd(&t.coef);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides by the content and makes the leading coefficient positive; returns the divisor used.
pub(crate) fn make_primitive(v: &mut Vector) -> BigInt {
    if v.is_empty() {
        return BigInt::one();
    }
    let mut g = content(v);
    if v[0].coef.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for t in v.iter_mut() {
            t.coef = &t.coef / &g;
        }
    }
    g
}

fn find_reducer<'a>(basis: &'a [Elem], active: Option<&[bool]>, t: &Term) -> Option<&'a Elem> {
    let s = sev(&t.mon);
    basis.iter().enumerate().find_map(|(k, e)| {
        if let Some(a) = active {
            if !a[k] {
                return None;
            }
        }
        let l = e.lead();
        (l.comp == t.comp && e.sev & !s == 0 && l.mon.divides(&t.mon)).then_some(e)
    })
}

/// Result of a reduction: `scale * input - (combination of basis) = remainder`.
pub(crate) struct Reduced {
    pub remainder: Vector,
    pub scale: Rational,
}

/// Reduces `v` by `basis`. With `full` every term is reduced, otherwise only the leading one.
pub(crate) fn reduce(order: &ModuleOrder, v: Vector, basis: &[Elem], active: Option<&[bool]>, full: bool) -> Reduced {
    let mut p = v;
    let mut done: Vector = Vec::new();
    let mut scale = Rational::one();
    let mut steps = 0usize;
    let mut start = 0usize;
    while start < p.len() {
        let Some(e) = find_reducer(basis, active, &p[start]) else {
            if !full {
                break;
            }
            start += 1;
            continue;
        };
        let t = &p[start];
        let l = e.lead();
        let m = l.mon.quotient_of(&t.mon).expect("reducer divides");
        let g = t.coef.gcd(&l.coef);
        let mut a = &l.coef / &g;
        let mut b = &t.coef / &g;
        if a.is_negative() {
            a = -a;
            b = -b;
        }
        let tail = combine(order, &a, &p[start..], &b, &m, &e.v);
        p.truncate(start);
        if !a.is_one() {
            for d in done.iter_mut().chain(p.iter_mut()) {
                d.coef *= &a;
            }
            scale *= Rational::from_integer(a);
        }
        done.append(&mut p);
        p = tail;
        start = 0;
        steps += 1;
        if steps.is_multiple_of(16) {
            let mut g = content(&p);
            for d in &done {
                if g.is_one() {
                    break;
                }
                g = g.gcd(&d.coef);
            }
            if !g.is_one() && !g.is_zero() {
                for x in p.iter_mut().chain(done.iter_mut()) {
                    x.coef = &x.coef / &g;
                }
                scale /= Rational::from_integer(g);
            }
        }
    }
    done.append(&mut p);
    Reduced { remainder: done, scale }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    sugar: u32,
}

pub(crate) struct Run {
    pub basis: Vec<Elem>,
    pub order: ModuleOrder,
}

/// Computes a reduced Gröbner basis of the submodule generated by `gens`.
/// Output elements are primitive with positive leading coefficient, sorted ascending by leading term.
pub(crate) fn groebner(settings: &Settings, gens: Vec<Vector>) -> Result<Run, GroebnerError> {
    let order = &settings.order;
    let mut basis: Vec<Elem> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<Vector> = gens.into_iter().filter(|v| !v.is_empty()).collect();
    for v in input.iter_mut() {
        order.sort(v);
    }
    let mut input: Vec<Elem> = input.into_iter().map(|v| make_elem(v, &settings.shifts)).collect();
    input.sort_by(|a, b| {
        a.sugar.cmp(&b.sugar).then_with(|| order.cmp_terms(a.lead(), b.lead()))
    });
    for e in input {
        let sugar = e.sugar;
        insert(settings, &mut basis, &mut active, &mut pairs, e.v, sugar);
    }

    while !pairs.is_empty() {
        let k = select(order, &pairs);
        let pair = pairs.swap_remove(k);
        if let Some(cap) = settings.degree_cap {
            if pair.sugar > cap {
                return Err(GroebnerError::DegreeCapExceeded(cap));
            }
        }
        let s = spoly(order, &basis[pair.i], &basis[pair.j], &pair.lcm);
        insert(settings, &mut basis, &mut active, &mut pairs, s, pair.sugar);
    }

    let mut kept: Vec<Elem> = basis.into_iter().zip(active).filter(|(_, a)| *a).map(|(e, _)| e).collect();
    kept.sort_by(|a, b| order.cmp_terms(a.lead(), b.lead()));
    // Tail reduction against the other leads.
    let n = kept.len();
    for idx in 0..n {
        let mut mask = vec![true; n];
        mask[idx] = false;
        let mut v = std::mem::take(&mut kept[idx].v);
        let head = v.remove(0);
        let tail = reduce(order, v, &kept, Some(&mask), true);
        let a = tail.scale;
        // scale*tail_in - combo = remainder, so the element becomes scale*head + remainder.
        let mut out = vec![Term { mon: head.mon, comp: head.comp, coef: head.coef * a.numer() }];
        let den = a.denom().clone();
        for mut t in tail.remainder {
            t.coef *= &den;
            out.push(t);
        }
        make_primitive(&mut out);
        kept[idx] = make_elem(out, &settings.shifts);
    }
    Ok(Run { basis: kept, order: order.clone() })
}

fn select(order: &ModuleOrder, pairs: &[Pair]) -> usize {
    let mut best = 0;
    for k in 1..pairs.len() {
        let a = &pairs[k];
        let b = &pairs[best];
        let c = a
            .sugar
            .cmp(&b.sugar)
            .then_with(|| order.cmp(&a.lcm, a.comp, &b.lcm, b.comp))
            .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)));
        if c == Ordering::Less {
            best = k;
        }
    }
    best
}

fn spoly(order: &ModuleOrder, f: &Elem, g: &Elem, lcm: &Monomial) -> Vector {
    let lf = f.lead();
    let lg = g.lead();
    let mf = lf.mon.quotient_of(lcm).expect("lcm");
    let mg = lg.mon.quotient_of(lcm).expect("lcm");
    let c = lf.coef.gcd(&lg.coef);
    let a = &lg.coef / &c;
    let b = &lf.coef / &c;
    let fm: Vector = f.v[1..].iter().map(|t| Term { mon: t.mon.mul(&mf), comp: t.comp, coef: t.coef.clone() }).collect();
    combine(order, &a, &fm, &b, &mg, &g.v[1..])
}

fn insert(
    settings: &Settings,
    basis: &mut Vec<Elem>,
    active: &mut Vec<bool>,
    pairs: &mut Vec<Pair>,
    v: Vector,
    sugar: u32,
) {
    let order = &settings.order;
    let mut r = reduce(order, v, basis, Some(active), false).remainder;
    if r.is_empty() {
        return;
    }
    if let Some(k) = settings.discard_from {
        if r[0].comp >= k {
            return;
        }
    }
    make_primitive(&mut r);
    let mut e = make_elem(r, &settings.shifts);
    e.sugar = e.sugar.max(sugar);
    update(settings, basis, active, pairs, e);
}

fn update(settings: &Settings, basis: &mut Vec<Elem>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: Elem) {
    let k = basis.len();
    let hl = h.lead().clone();
    let hdeg = hl.mon.degree();

    // Old pairs made superfluous by the chain criterion.
    pairs.retain(|p| {
        if p.comp != hl.comp || !hl.mon.divides(&p.lcm) {
            return true;
        }
        let li = basis[p.i].lead().mon.lcm(&hl.mon);
        let lj = basis[p.j].lead().mon.lcm(&hl.mon);
        li == p.lcm || lj == p.lcm
    });

    struct Cand {
        i: usize,
        lcm: Monomial,
        coprime: bool,
        keep: bool,
    }
    let mut cands: Vec<Cand> = (0..k)
        .filter(|&i| active[i] && basis[i].lead().comp == hl.comp)
        .map(|i| {
            let m = &basis[i].lead().mon;
            Cand {
                i,
                lcm: m.lcm(&hl.mon),
                coprime: settings.product_criterion && m.is_coprime(&hl.mon),
                keep: true,
            }
        })
        .collect();
    for a in 0..cands.len() {
        for b in 0..cands.len() {
            if a != b && cands[b].lcm != cands[a].lcm && cands[b].lcm.divides(&cands[a].lcm) {
                cands[a].keep = false;
                break;
            }
        }
    }
    for a in 0..cands.len() {
        if !cands[a].keep {
            continue;
        }
        let group: Vec<usize> =
            (0..cands.len()).filter(|&b| cands[b].keep && cands[b].lcm == cands[a].lcm).collect();
        let any_coprime = group.iter().any(|&b| cands[b].coprime);
        for &b in &group {
            cands[b].keep = false;
        }
        if !any_coprime {
            cands[a].keep = true;
        }
    }
    for c in cands.into_iter().filter(|c| c.keep) {
        let gi = &basis[c.i];
        let si = gi.sugar + c.lcm.degree() - gi.lead().mon.degree();
        let sh = h.sugar + c.lcm.degree() - hdeg;
        pairs.push(Pair { i: c.i, j: k, lcm: c.lcm, comp: hl.comp, sugar: si.max(sh) });
    }
    for i in 0..k {
        if active[i] && basis[i].lead().comp == hl.comp && hl.mon.divides(&basis[i].lead().mon) {
            active[i] = false;
        }
    }
    basis.push(h);
    active.push(true);
}

/// Normal form of `v` modulo a finished run, with the scale factor of the reduction.
pub(crate) fn normal_form(run: &Run, v: Vector) -> Reduced {
    let mut v = v;
    run.order.sort(&mut v);
    reduce(&run.order, v, &run.basis, None, true)
}

pub(crate) fn rational_to_vector(terms: impl IntoIterator<Item = (Monomial, u32, Rational)>) -> (Vector, BigInt) {
    let terms: Vec<(Monomial, u32, Rational)> = terms.into_iter().collect();
    let mut l = BigInt::one();
    for (_, _, c) in &terms {
        l = l.lcm(c.denom());
    }
    let v = terms
        .into_iter()
        .map(|(mon, comp, c)| Term { mon, comp, coef: (c * Rational::from_integer(l.clone())).to_integer() })
        .collect();
    (v, l)
}
