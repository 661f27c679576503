//! Brute-force linear algebra over the monomials of one (weighted) degree. Nothing here
//! touches the Gröbner engine.

use std::collections::HashMap;

use freediv::{Polynomial, Rational};
use num_traits::{One, Zero};

pub struct Graded {
    pub weights: Vec<u32>,
}

impl Graded {
    pub fn degree_of(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(&self.weights).map(|(e, w)| e * w).sum()
    }

    pub fn poly_degree(&self, p: &Polynomial) -> Option<u32> {
        let degs: Vec<u32> = p.terms().iter().map(|(m, _)| self.degree_of(&m.exponents().collect::<Vec<_>>())).collect();
        let first = *degs.first()?;
        degs.iter().all(|d| *d == first).then_some(first)
    }

    /// All exponent vectors of degree `d`.
    pub fn monomials(&self, d: u32) -> Vec<Vec<u32>> {
        fn go(w: &[u32], left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if cur.len() == w.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let wi = w[cur.len()];
            for e in 0..=left / wi {
                cur.push(e);
                go(w, left - e * wi, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.weights, d, &mut Vec::new(), &mut out);
        out
    }
}

/// Coordinates in the monomial basis of one degree.
pub struct Slice {
    pub basis: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl Slice {
    pub fn new(g: &Graded, d: u32) -> Slice {
        let basis = g.monomials(d);
        let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Slice { basis, index }
    }

    pub fn coords(&self, p: &Polynomial) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.basis.len()];
        for (m, c) in p.terms() {
            let e: Vec<u32> = m.exponents().collect();
            v[self.index[&e]] = c.clone();
        }
        v
    }

    /// `u * g` for every generator `g` of degree at most `d` and monomial `u` of the complementary degree,
    /// tagged with the generator index and the monomial.
    pub fn products(&self, g: &Graded, d: u32, gens: &[Polynomial]) -> Vec<(usize, Vec<u32>, Vec<Rational>)> {
        let mut out = Vec::new();
        for (i, p) in gens.iter().enumerate() {
            let Some(dp) = g.poly_degree(p) else { continue };
            if dp > d {
                continue;
            }
            for u in g.monomials(d - dp) {
                let prod = p.mul_term(&freediv::Monomial::from_exponents(&u), &Rational::one());
                out.push((i, u, self.coords(&prod)));
            }
        }
        out
    }
}

/// Row-reduces in place; returns pivot columns.
pub fn rref(rows: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Rational::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot = rows[r].clone();
                for (x, p) in rows[i][c..].iter_mut().zip(&pivot[c..]) {
                    *x = &*x - &(p * &f);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of the kernel of `v |-> sum v_j columns[j]`.
pub fn kernel(columns: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> =
        (0..dim).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
    let pivots = rref(&mut rows);
    let free: Vec<usize> = (0..columns.len()).filter(|j| !pivots.contains(j)).collect();
    free.iter()
        .map(|&fj| {
            let mut v = vec![Rational::zero(); columns.len()];
            v[fj] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[r][fj].clone();
            }
            v
        })
        .collect()
}
