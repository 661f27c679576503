use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use super::{Column, Grading};
use crate::error::Result;
use crate::groebner::engine::{self, ModuleOrder, ModuleOrderKind, Run, Settings, Term, Vector};
use crate::poly::{Monomial, Polynomial, Rational, Ring};

fn column_to_vector(col: &[Polynomial], offset: u32) -> (Vector, BigInt) {
    engine::rational_to_vector(
        col.iter()
            .enumerate()
            .flat_map(|(i, p)| p.terms().iter().map(move |(m, c)| (m.clone(), offset + i as u32, c.clone()))),
    )
}

fn vector_to_column(ring: &Arc<Ring>, v: &[Term], offset: u32, rank: usize) -> Column {
    (0..rank)
        .map(|i| {
            let terms = v
                .iter()
                .filter(|t| t.comp == offset + i as u32)
                .map(|t| (t.mon.clone(), Rational::from_integer(t.coef.clone())))
                .collect();
            Polynomial::from_sorted_terms(ring, terms)
        })
        .collect()
}

fn sugar_shifts(shifts: &[i64]) -> Vec<u32> {
    shifts.iter().map(|&s| s.max(0) as u32).collect()
}

/// Submodule of `R^rank` generated by columns, with lazily computed Gröbner data.
#[derive(Clone)]
pub struct Submodule {
    ring: Arc<Ring>,
    rank: usize,
    shifts: Vec<i64>,
    gens: Vec<Column>,
    gb: OnceLock<Result<Arc<Run>>>,
    tracked: OnceLock<Result<Arc<Run>>>,
}

impl Submodule {
    pub fn new(ring: &Arc<Ring>, rank: usize, gens: Vec<Column>) -> Submodule {
        Submodule::with_shifts(ring, vec![0; rank], gens)
    }

    pub fn with_shifts(ring: &Arc<Ring>, shifts: Vec<i64>, gens: Vec<Column>) -> Submodule {
        let rank = shifts.len();
        for g in &gens {
            assert_eq!(g.len(), rank, "column length does not match the module rank");
        }
        Submodule { ring: ring.clone(), rank, shifts, gens, gb: OnceLock::new(), tracked: OnceLock::new() }
    }

    pub fn generators(&self) -> &[Column] {
        &self.gens
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn run(&self) -> Result<&Arc<Run>> {
        self.gb
            .get_or_init(|| {
                let settings = Settings {
                    order: ModuleOrder::new(&self.ring, ModuleOrderKind::Top),
                    shifts: sugar_shifts(&self.shifts),
                    product_criterion: false,
                    degree_cap: None,
                    discard_from: None,
                };
                let gens = self.gens.iter().map(|c| column_to_vector(c, 0).0).collect();
                Ok(Arc::new(engine::groebner(&settings, gens)?))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn tracked_run(&self) -> Result<&Arc<Run>> {
        self.tracked
            .get_or_init(|| {
                let r = self.rank as u32;
                let mut shifts = sugar_shifts(&self.shifts);
                let grading = Grading::Ungraded;
                for c in &self.gens {
                    shifts.push(grading.column_degree(c, &self.shifts).unwrap_or(0).max(0) as u32);
                }
                let settings = Settings {
                    order: ModuleOrder::new(&self.ring, ModuleOrderKind::Split(r)),
                    shifts,
                    product_criterion: false,
                    degree_cap: None,
                    discard_from: Some(r),
                };
                let arity = self.ring.arity();
                let gens = self
                    .gens
                    .iter()
                    .enumerate()
                    .map(|(j, c)| {
                        let (mut v, l) = column_to_vector(c, 0);
                        v.push(Term { mon: Monomial::one(arity), comp: r + j as u32, coef: l });
                        v
                    })
                    .collect();
                Ok(Arc::new(engine::groebner(&settings, gens)?))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn contains(&self, v: &[Polynomial]) -> Result<bool> {
        if v.iter().all(|p| p.is_zero()) {
            return Ok(true);
        }
        if self.gens.is_empty() {
            return Ok(false);
        }
        let run = self.run()?;
        let red = engine::normal_form(run, column_to_vector(v, 0).0);
        Ok(red.remainder.is_empty())
    }

    /// Coefficients `c` with `v = sum_j c_j * gen_j`, or `None` when `v` is not in the submodule.
    pub fn lift(&self, v: &[Polynomial]) -> Result<Option<Vec<Polynomial>>> {
        let k = self.gens.len();
        if v.iter().all(|p| p.is_zero()) {
            return Ok(Some(vec![Polynomial::zero(&self.ring); k]));
        }
        if k == 0 {
            return Ok(None);
        }
        let run = self.tracked_run()?;
        let (vec, l) = column_to_vector(v, 0);
        let red = engine::normal_form(run, vec);
        let r = self.rank as u32;
        if red.remainder.first().map(|t| t.comp < r).unwrap_or(false) {
            return Ok(None);
        }
        let factor = -(Rational::one() / (red.scale * Rational::from_integer(l)));
        Ok(Some(vector_to_column(&self.ring, &red.remainder, r, k).into_iter().map(|p| p.scale(&factor)).collect()))
    }

    pub fn contains_module(&self, other: &Submodule) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Submodule) -> Result<bool> {
        Ok(self.contains_module(other)? && other.contains_module(self)?)
    }
}

/// A generating set of the syzygies of `cols` (columns in a free module with the given shifts),
/// read off a Gröbner basis of the tagged module; not minimized.
pub fn syzygy_columns(ring: &Arc<Ring>, cols: &[Column], shifts: &[i64]) -> Result<Vec<Column>> {
    let m = shifts.len() as u32;
    let k = cols.len();
    let grading = Grading::Ungraded;
    let mut sugar = sugar_shifts(shifts);
    for c in cols {
        sugar.push(grading.column_degree(c, shifts).unwrap_or(0).max(0) as u32);
    }
    let settings = Settings {
        order: ModuleOrder::new(ring, ModuleOrderKind::Split(m)),
        shifts: sugar,
        product_criterion: false,
        degree_cap: None,
        discard_from: None,
    };
    let arity = ring.arity();
    let gens = cols
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let (mut v, l) = column_to_vector(c, 0);
            v.push(Term { mon: Monomial::one(arity), comp: m + j as u32, coef: l });
            v
        })
        .collect();
    let run = engine::groebner(&settings, gens)?;
    Ok(run
        .basis
        .iter()
        .filter(|e| e.lead().comp >= m)
        .map(|e| vector_to_column(ring, &e.v, m, k))
        .collect())
}

/// Drops redundant columns, scanning by ascending degree. Minimal when the columns are graded.
pub fn minimal_columns(ring: &Arc<Ring>, shifts: &[i64], cols: Vec<Column>, grading: &Grading) -> Result<Vec<Column>> {
    let mut cols: Vec<(i64, Column)> = cols
        .into_iter()
        .filter(|c| c.iter().any(|p| !p.is_zero()))
        .map(|c| (grading.column_degree(&c, shifts).unwrap_or(0), c))
        .collect();
    cols.sort_by_key(|c| c.0);
    let mut kept: Vec<Column> = Vec::new();
    for (_, c) in cols {
        if kept.is_empty() || !Submodule::with_shifts(ring, shifts.to_vec(), kept.clone()).contains(&c)? {
            kept.push(c);
        }
    }
    if !grading.is_graded() {
        let mut i = kept.len();
        while i > 0 && kept.len() > 1 {
            i -= 1;
            let others: Vec<Column> = kept.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, c)| c.clone()).collect();
            if Submodule::with_shifts(ring, shifts.to_vec(), others).contains(&kept[i])? {
                kept.remove(i);
            }
        }
    }
    Ok(kept)
}

/// Minimal generating syzygies of the columns `cols`.
pub fn syzygies(ring: &Arc<Ring>, cols: &[Column], shifts: &[i64], grading: &Grading) -> Result<Vec<Column>> {
    let source: Vec<i64> = cols.iter().map(|c| grading.column_degree(c, shifts).unwrap_or(0)).collect();
    let all = syzygy_columns(ring, cols, shifts)?;
    minimal_columns(ring, &source, all, grading)
}

/// The Koszul relations `f_j e_i - f_i e_j` for `i < j`.
pub fn koszul_syzygies(gens: &[Polynomial]) -> Vec<Column> {
    let m = gens.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let ring = gens[i].ring();
            let mut col = vec![Polynomial::zero(ring); m];
            col[i] = gens[j].clone();
            col[j] = -gens[i].clone();
            out.push(col);
        }
    }
    out
}

/// Lift of `v` over the columns, when `v` lies in their span.
pub fn submodule_membership(ring: &Arc<Ring>, v: &[Polynomial], cols: &[Column]) -> Result<Option<Vec<Polynomial>>> {
    Submodule::new(ring, v.len(), cols.to_vec()).lift(v)
}

/// Generators of `M ∩ N` from the doubled module `(m, m), (n, 0)`: its elements with
/// vanishing first half are exactly `(0, v)` with `v ∈ M ∩ N`.
pub fn submodule_intersect(ring: &Arc<Ring>, rank: usize, m: &[Column], n: &[Column]) -> Result<Vec<Column>> {
    if m.is_empty() || n.is_empty() {
        return Ok(Vec::new());
    }
    let r = rank as u32;
    let settings = Settings {
        order: ModuleOrder::new(ring, ModuleOrderKind::Split(r)),
        shifts: vec![0; 2 * rank],
        product_criterion: false,
        degree_cap: None,
        discard_from: None,
    };
    let mut gens = Vec::new();
    for c in m {
        let (mut v, _) = column_to_vector(c, 0);
        let (w, _) = column_to_vector(c, r);
        v.extend(w);
        gens.push(v);
    }
    for c in n {
        gens.push(column_to_vector(c, 0).0);
    }
    let run = engine::groebner(&settings, gens)?;
    Ok(run
        .basis
        .iter()
        .filter(|e| e.lead().comp >= r)
        .map(|e| vector_to_column(ring, &e.v, r, rank))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn xyz() -> Arc<Ring> {
        Ring::degrevlex(["x", "y", "z"]).unwrap()
    }

    fn col(r: &Arc<Ring>, xs: &[&str]) -> Column {
        xs.iter().map(|s| parse_poly(s, r).unwrap()).collect()
    }

    fn apply(gens: &[Polynomial], c: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::zero(gens[0].ring());
        for (g, a) in gens.iter().zip(c) {
            acc = &acc + &(g * a);
        }
        acc
    }

    #[test]
    fn koszul_pair() {
        let r = xyz();
        let gens = col(&r, &["x", "y"]);
        let cols: Vec<Column> = gens.iter().map(|g| vec![g.clone()]).collect();
        let s = syzygies(&r, &cols, &[0], &Grading::standard(&r)).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(apply(&gens, &s[0]), Polynomial::zero(&r));
    }

    #[test]
    fn sextic_has_three_cubic_syzygies() {
        let r = xyz();
        let f = parse_poly("x^6+x^3*y^3+x^2*y^4+y^5*z", &r).unwrap();
        let gens = f.gradient();
        let cols: Vec<Column> = gens.iter().map(|g| vec![g.clone()]).collect();
        let s = syzygies(&r, &cols, &[0], &Grading::standard(&r)).unwrap();
        assert_eq!(s.len(), 3);
        for c in &s {
            assert!(apply(&gens, c).is_zero());
            assert_eq!(Grading::standard(&r).column_degree(c, &[5, 5, 5]), Some(8));
        }
        let witness = col(&r, &["0", "-y^3", "3*x^3+4*x^2*y+5*y^2*z"]);
        assert!(submodule_membership(&r, &witness, &s).unwrap().is_some());
    }

    #[test]
    fn module_lift_identity() {
        let r = xyz();
        let m = vec![col(&r, &["x", "y"]), col(&r, &["z", "0"])];
        let v = col(&r, &["x^2+z*y", "x*y"]);
        let c = submodule_membership(&r, &v, &m).unwrap().unwrap();
        for i in 0..2 {
            assert_eq!(&(&c[0] * &m[0][i]) + &(&c[1] * &m[1][i]), v[i]);
        }
        assert!(submodule_membership(&r, &col(&r, &["1", "0"]), &m).unwrap().is_none());
    }

    #[test]
    fn intersection_of_equal_modules() {
        let r = xyz();
        let m = vec![col(&r, &["x", "y"]), col(&r, &["z", "x"])];
        let i = submodule_intersect(&r, 2, &m, &m).unwrap();
        let a = Submodule::new(&r, 2, m);
        let b = Submodule::new(&r, 2, i);
        assert!(a.equals(&b).unwrap());
    }
}
