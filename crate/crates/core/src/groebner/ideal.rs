use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use super::engine::{self, ModuleOrder, ModuleOrderKind, Run, Settings, Vector};
use crate::error::Result;
use crate::poly::{Monomial, Polynomial, Rational, Ring, TermOrder};

/// A polynomial ideal given by generators, with lazily computed Gröbner data.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    degree_cap: Option<u32>,
    gb: OnceLock<Result<Arc<GbData>>>,
    tracked: OnceLock<Result<Arc<TrackedData>>>,
}

struct GbData {
    run: Run,
    basis: Vec<Polynomial>,
}

struct TrackedData {
    run: Run,
    public: TrackedBasis,
}

/// Reduced Gröbner basis with each element written in the generators:
/// `basis[i] = sum_j transform[i][j] * generator_j`.
#[derive(Clone, Debug)]
pub struct TrackedBasis {
    pub basis: Vec<Polynomial>,
    pub transform: Vec<Vec<Polynomial>>,
}

#[derive(Clone, Debug)]
pub struct SaturationData {
    pub saturated: Ideal,
    /// Number of strict steps in the chain `I : J^k`.
    pub exponent: u32,
    /// Least degree of a generator of the saturation outside `I`; `None` when `I` is saturated.
    pub indeg: Option<u32>,
    /// Generators of the saturation outside `I`, from a pruned generating set.
    pub extra_generators: Vec<Polynomial>,
}

pub(crate) fn poly_to_vector(p: &Polynomial, comp: u32) -> (Vector, BigInt) {
    engine::rational_to_vector(p.terms().iter().map(|(m, c)| (m.clone(), comp, c.clone())))
}

pub(crate) fn vector_to_poly(ring: &Arc<Ring>, v: &[engine::Term]) -> Polynomial {
    Polynomial::from_sorted_terms(
        ring,
        v.iter().map(|t| (t.mon.clone(), Rational::from_integer(t.coef.clone()))).collect(),
    )
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Ideal {
        for g in &gens {
            assert!(**g.ring() == **ring, "generator {g} does not live in {ring}");
        }
        Ideal { ring: ring.clone(), gens, degree_cap: None, gb: OnceLock::new(), tracked: OnceLock::new() }
    }

    pub fn from_generators(gens: Vec<Polynomial>) -> Ideal {
        let ring = gens.first().expect("at least one generator").ring().clone();
        Ideal::new(&ring, gens)
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)])
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, (0..ring.arity()).map(|i| Polynomial::variable(ring, i)).collect())
    }

    /// Aborts Buchberger runs whose sugar degree exceeds `cap`.
    pub fn with_degree_cap(mut self, cap: Option<u32>) -> Ideal {
        self.degree_cap = cap;
        self.gb = OnceLock::new();
        self.tracked = OnceLock::new();
        self
    }

    pub fn degree_cap(&self) -> Option<u32> {
        self.degree_cap
    }

    fn derived(&self, ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Ideal {
        Ideal::new(ring, gens).with_degree_cap(self.degree_cap)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    fn gb_data(&self) -> Result<&Arc<GbData>> {
        self.gb
            .get_or_init(|| {
                let settings = Settings {
                    order: ModuleOrder::new(&self.ring, ModuleOrderKind::Top),
                    shifts: vec![0],
                    product_criterion: true,
                    degree_cap: self.degree_cap,
                    discard_from: None,
                };
                let gens = self.gens.iter().map(|g| poly_to_vector(g, 0).0).collect();
                let run = engine::groebner(&settings, gens)?;
                let basis = run.basis.iter().map(|e| vector_to_poly(&self.ring, &e.v).monic()).collect();
                Ok(Arc::new(GbData { run, basis }))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// The reduced Gröbner basis (monic, ascending by leading monomial).
    pub fn groebner_basis(&self) -> Result<&[Polynomial]> {
        Ok(&self.gb_data()?.basis)
    }

    fn tracked_data(&self) -> Result<&Arc<TrackedData>> {
        self.tracked
            .get_or_init(|| {
                let m = self.gens.len();
                let mut shifts = vec![0u32];
                shifts.extend(self.gens.iter().map(|g| g.degree().unwrap_or(0)));
                let settings = Settings {
                    order: ModuleOrder::new(&self.ring, ModuleOrderKind::Split(1)),
                    shifts,
                    product_criterion: true,
                    degree_cap: self.degree_cap,
                    discard_from: Some(1),
                };
                let arity = self.ring.arity();
                let gens: Vec<Vector> = self
                    .gens
                    .iter()
                    .enumerate()
                    .map(|(j, g)| {
                        let (mut v, l) = poly_to_vector(g, 0);
                        v.push(engine::Term { mon: Monomial::one(arity), comp: 1 + j as u32, coef: l });
                        v
                    })
                    .collect();
                let run = engine::groebner(&settings, gens)?;
                let mut basis = Vec::new();
                let mut transform = Vec::new();
                for e in &run.basis {
                    let head: Vec<_> = e.v.iter().filter(|t| t.comp == 0).cloned().collect();
                    let g = vector_to_poly(&self.ring, &head);
                    let lc = g.leading_coefficient().expect("nonzero").clone().recip();
                    let row = split_tags(&self.ring, &e.v, m).into_iter().map(|p| p.scale(&lc)).collect();
                    basis.push(g.scale(&lc));
                    transform.push(row);
                }
                Ok(Arc::new(TrackedData { run, public: TrackedBasis { basis, transform } }))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn tracked_basis(&self) -> Result<&TrackedBasis> {
        Ok(&self.tracked_data()?.public)
    }

    pub fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        Ok(self.gb_data()?.basis.iter().filter_map(|g| g.leading_monomial().cloned()).collect())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let data = self.gb_data()?;
        let (v, l) = poly_to_vector(f, 0);
        let red = engine::normal_form(&data.run, v);
        let r = vector_to_poly(&self.ring, &red.remainder);
        let factor = Rational::one() / (red.scale * Rational::from_integer(l));
        Ok(r.scale(&factor))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Coefficients `c` with `f = sum_j c_j * generator_j`, or `None` when `f` is not in the ideal.
    pub fn lift(&self, f: &Polynomial) -> Result<Option<Vec<Polynomial>>> {
        let m = self.gens.len();
        if f.is_zero() {
            return Ok(Some(vec![Polynomial::zero(&self.ring); m]));
        }
        let data = self.tracked_data()?;
        let (v, l) = poly_to_vector(f, 0);
        let red = engine::normal_form(&data.run, v);
        if red.remainder.first().map(|t| t.comp == 0).unwrap_or(false) {
            return Ok(None);
        }
        let factor = -(Rational::one() / (red.scale * Rational::from_integer(l)));
        Ok(Some(split_tags(&self.ring, &red.remainder, m).into_iter().map(|p| p.scale(&factor)).collect()))
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb_data()?.basis.iter().any(|g| g.is_constant() && !g.is_zero()))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality by mutual membership of generators.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        self.derived(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let gens = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a * b)).collect();
        self.derived(&self.ring, gens)
    }

    /// Generators of the elimination ideal, returned in the ring of the remaining variables.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        let n = self.ring.arity();
        let keep: Vec<usize> = (0..n).filter(|i| !vars.contains(i)).collect();
        let names: Vec<&str> = keep.iter().map(|&i| self.ring.variables()[i].as_str()).collect();
        let target = if names.is_empty() {
            Ring::degrevlex(["_"])?
        } else {
            Ring::new(names.iter().map(|s| s.to_string()).collect::<Vec<_>>(), TermOrder::Degrevlex)?
        };
        let kept = self.eliminate_in_place(vars)?;
        let map: Vec<Option<usize>> = (0..n).map(|i| keep.iter().position(|&k| k == i)).collect();
        let gens = kept.iter().map(|g| g.map_into(&target, &map)).collect();
        Ok(self.derived(&target, gens))
    }

    /// Elements of the elimination ideal, still written in this ring.
    pub(crate) fn eliminate_in_place(&self, vars: &[usize]) -> Result<Vec<Polynomial>> {
        let n = self.ring.arity();
        let mut perm: Vec<usize> = vars.to_vec();
        perm.extend((0..n).filter(|i| !vars.contains(i)));
        let names: Vec<String> = perm.iter().map(|&i| self.ring.variables()[i].clone()).collect();
        let order = if vars.is_empty() || vars.len() == n { TermOrder::Degrevlex } else { TermOrder::Block(vars.len()) };
        let elim_ring = Ring::new(names, order)?;
        let fwd: Vec<Option<usize>> = (0..n).map(|i| perm.iter().position(|&p| p == i)).collect();
        let back: Vec<Option<usize>> = perm.iter().map(|&p| Some(p)).collect();
        let gens = self.gens.iter().map(|g| g.map_into(&elim_ring, &fwd)).collect();
        let big = self.derived(&elim_ring, gens);
        let k = vars.len();
        let out = big
            .groebner_basis()?
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| (0..k).all(|i| m.exponent(i) == 0)))
            .map(|g| g.map_into(&self.ring, &back))
            .collect();
        Ok(out)
    }

    /// `I ∩ J` by eliminating `t` from `t*I + (1-t)*J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.is_unit()? {
            return Ok(other.clone());
        }
        if other.is_unit()? {
            return Ok(self.clone());
        }
        let t = self.ring.fresh_name("t");
        let mut names = vec![t];
        names.extend(self.ring.variables().iter().cloned());
        let n = self.ring.arity();
        let big = Ring::new(names, TermOrder::Block(1))?;
        let up: Vec<Option<usize>> = (0..n).map(|i| Some(i + 1)).collect();
        let tv = Polynomial::variable(&big, 0);
        let one_minus_t = &Polynomial::one(&big) - &tv;
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| &tv * &g.map_into(&big, &up)).collect();
        gens.extend(other.gens.iter().map(|g| &one_minus_t * &g.map_into(&big, &up)));
        let lifted = self.derived(&big, gens);
        let down: Vec<Option<usize>> = std::iter::once(None).chain((0..n).map(Some)).collect();
        let out = lifted
            .groebner_basis()?
            .iter()
            .filter(|g| g.degree_in(0) == 0)
            .map(|g| g.map_into(&self.ring, &down))
            .collect();
        Ok(self.derived(&self.ring, out))
    }

    /// `I : g` as `(I ∩ <g>) / g`.
    pub fn colon_element(&self, g: &Polynomial) -> Result<Ideal> {
        if g.is_zero() || self.contains(g)? {
            return Ok(Ideal::unit(&self.ring));
        }
        let inter = self.intersect(&self.derived(&self.ring, vec![g.clone()]))?;
        let gens = inter.gens.iter().map(|h| h.exact_div(g)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.derived(&self.ring, gens))
    }

    /// `I : J` as the intersection of `I : g` over generators `g` of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        let mut acc: Option<Ideal> = None;
        for g in other.gens.iter().filter(|g| !g.is_zero()) {
            let q = self.colon_element(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// Saturation by the iterated colon chain `I_{k+1} = I_k : J`.
    pub fn saturate(&self, other: &Ideal) -> Result<SaturationData> {
        let mut current = self.clone();
        let mut exponent = 0;
        loop {
            let next = current.colon(other)?;
            if current.contains_ideal(&next)? {
                break;
            }
            exponent += 1;
            current = next;
        }
        if exponent == 0 {
            return Ok(SaturationData { saturated: self.clone(), exponent, indeg: None, extra_generators: Vec::new() });
        }
        let mut candidates: Vec<(u32, usize, Polynomial)> = Vec::new();
        for g in &self.gens {
            candidates.push((g.degree().unwrap_or(0), 0, g.clone()));
        }
        for g in current.groebner_basis()? {
            candidates.push((g.degree().unwrap_or(0), 1, g.clone()));
        }
        candidates.sort_by_key(|a| (a.0, a.1));
        let pruned = prune(&self.ring, candidates.into_iter().map(|c| c.2).collect())?;
        let mut extra = Vec::new();
        for g in &pruned {
            if !self.contains(g)? {
                extra.push(g.clone());
            }
        }
        let indeg = extra.iter().filter_map(|g| g.degree()).min();
        let saturated = self.derived(&self.ring, pruned);
        Ok(SaturationData { saturated, exponent, indeg, extra_generators: extra })
    }

    /// Saturation with respect to the ideal of all variables.
    pub fn saturate_maximal(&self) -> Result<SaturationData> {
        self.saturate(&Ideal::maximal(&self.ring))
    }

    /// Krull dimension of `R/I` (`-1` for the unit ideal).
    pub fn dimension(&self) -> Result<i64> {
        let n = self.ring.arity();
        let leads = self.leading_monomials()?;
        if leads.iter().any(|m| m.is_one()) {
            return Ok(-1);
        }
        let masks: Vec<u64> = leads.iter().map(|m| m.support().fold(0u64, |s, i| s | (1 << i))).collect();
        let mut best = 0i64;
        for s in 0u64..(1u64 << n) {
            let size = s.count_ones() as i64;
            if size > best && masks.iter().all(|&l| l & !s != 0) {
                best = size;
            }
        }
        Ok(best)
    }

    pub fn codimension(&self) -> Result<i64> {
        Ok(self.ring.arity() as i64 - self.dimension()?)
    }

    /// A generating set without redundant members, scanning generators by ascending degree.
    /// For homogeneous ideals this is a minimal generating set.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        let mut gens: Vec<Polynomial> = self.gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        gens.sort_by_key(|g| g.degree().unwrap_or(0));
        prune(&self.ring, gens)
    }
}

fn split_tags(ring: &Arc<Ring>, v: &[engine::Term], m: usize) -> Vec<Polynomial> {
    (0..m)
        .map(|j| {
            let part: Vec<_> = v.iter().filter(|t| t.comp == 1 + j as u32).cloned().collect();
            vector_to_poly(ring, &part)
        })
        .collect()
}

/// Keeps each candidate that is not in the ideal of the previously kept ones, then drops
/// kept elements made redundant by later ones.
fn prune(ring: &Arc<Ring>, candidates: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in candidates {
        if g.is_zero() {
            continue;
        }
        if kept.is_empty() || !Ideal::new(ring, kept.clone()).contains(&g)? {
            kept.push(g);
        }
    }
    let mut i = kept.len();
    while i > 0 {
        i -= 1;
        if kept.len() < 2 {
            break;
        }
        let others: Vec<Polynomial> = kept.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, p)| p.clone()).collect();
        if Ideal::new(ring, others).contains(&kept[i])? {
            kept.remove(i);
        }
    }
    Ok(kept)
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn xyz() -> Arc<Ring> {
        Ring::degrevlex(["x", "y", "z"]).unwrap()
    }

    fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_poly(g, r).unwrap()).collect())
    }

    fn gradient(r: &Arc<Ring>, f: &str) -> Ideal {
        Ideal::new(r, parse_poly(f, r).unwrap().gradient())
    }

    #[test]
    fn reduced_basis_examples() {
        let r = xyz();
        let i = ideal(&r, &["x", "y*z"]);
        assert_eq!(i.groebner_basis().unwrap().len(), 2);
        let u = Ring::degrevlex(["x"]).unwrap();
        let j = ideal(&u, &["x^2-1", "x-1"]);
        assert_eq!(j.groebner_basis().unwrap(), &[parse_poly("x-1", &u).unwrap()]);
    }

    #[test]
    fn transform_rows_reproduce_basis() {
        let r = xyz();
        let i = gradient(&r, "x*y*z*(x+y+z)");
        let t = i.tracked_basis().unwrap();
        assert_eq!(t.basis.as_slice(), i.groebner_basis().unwrap());
        for (g, row) in t.basis.iter().zip(&t.transform) {
            let mut acc = Polynomial::zero(&r);
            for (c, f) in row.iter().zip(i.generators()) {
                acc = &acc + &(c * f);
            }
            assert_eq!(&acc, g);
        }
    }

    #[test]
    fn lift_and_membership() {
        let r = xyz();
        let i = gradient(&r, "x*(x^2+y*z)");
        let f = parse_poly("x^2*y+y*z^2+x*y*z", &r).unwrap();
        let c = i.lift(&f).unwrap().unwrap();
        let mut acc = Polynomial::zero(&r);
        for (a, g) in c.iter().zip(i.generators()) {
            acc = &acc + &(a * g);
        }
        assert_eq!(acc, f);
        assert!(i.lift(&parse_poly("x*y*z", &r).unwrap()).unwrap().is_none() == !i.contains(&parse_poly("x*y*z", &r).unwrap()).unwrap());
    }

    #[test]
    fn elimination() {
        let r = Ring::degrevlex(["t", "x", "y"]).unwrap();
        let i = ideal(&r, &["t-x^2", "t-y"]);
        let e = i.eliminate(&[0]).unwrap();
        let target = e.ring().clone();
        assert_eq!(e.groebner_basis().unwrap(), &[parse_poly("x^2-y", &target).unwrap()]);
        let j = ideal(&r, &["t*x-1"]);
        assert!(j.eliminate(&[0]).unwrap().is_zero());
    }

    #[test]
    fn intersection_of_principal_ideals() {
        let r = xyz();
        let a = ideal(&r, &["x^2*y"]);
        let b = ideal(&r, &["x*y^2"]);
        let i = a.intersect(&b).unwrap();
        assert_eq!(i.groebner_basis().unwrap(), &[parse_poly("x^2*y^2", &r).unwrap()]);
    }

    #[test]
    fn conic_line_saturation() {
        let r = xyz();
        let i = gradient(&r, "x*(x^2+y*z)");
        let s = i.saturate_maximal().unwrap();
        assert_eq!(s.exponent, 2);
        assert_eq!(s.indeg, Some(1));
        assert!(s.saturated.equals(&ideal(&r, &["x", "y*z"])).unwrap());
        assert_eq!(i.codimension().unwrap(), 2);
    }

    #[test]
    fn arrangement_saturation() {
        let r = xyz();
        let i = gradient(&r, "x*y*z*(x+y+z)");
        let s = i.saturate_maximal().unwrap();
        assert_eq!(s.exponent, 1);
        assert_eq!(s.saturated.generators().len(), 4);
        assert!(s.saturated.generators().iter().all(|g| g.degree() == Some(3)));
        assert!(!i.contains(&parse_poly("x*y*z", &r).unwrap()).unwrap());
        assert!(s.saturated.contains(&parse_poly("x*y*z", &r).unwrap()).unwrap());
    }

    #[test]
    fn sextic_saturation() {
        let r = xyz();
        let i = gradient(&r, "x^6+x^3*y^3+x^2*y^4+y^5*z");
        let s = i.saturate_maximal().unwrap();
        assert_eq!(s.exponent, 1);
        assert_eq!(s.indeg, Some(6));
        let mut j = i.generators().to_vec();
        j.push(parse_poly("x^2*y^4", &r).unwrap());
        assert!(s.saturated.equals(&Ideal::new(&r, j)).unwrap());
    }

    #[test]
    fn dimension_of_monomial_sequences() {
        let r = xyz();
        assert_eq!(ideal(&r, &["x", "y", "z"]).dimension().unwrap(), 0);
        assert_eq!(ideal(&r, &["x^2", "y^3"]).dimension().unwrap(), 1);
        assert_eq!(ideal(&r, &["1"]).dimension().unwrap(), -1);
        assert_eq!(Ideal::zero(&r).dimension().unwrap(), 3);
    }
}
