//! Small dense linear algebra: rational row reduction and polynomial minors.

use num_traits::{One, Zero};

use crate::poly::{Polynomial, Rational};

/// Reduces `m` to reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let (src, dst) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !s.is_zero() {
                        *d -= &factor * s;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    let mut copy = m.to_vec();
    rref(&mut copy).len()
}

/// Solution set of `a * x = b`: a particular solution and a nullspace basis,
/// or `None` when inconsistent.
pub fn solve_affine(a: &[Vec<Rational>], b: &[Rational]) -> Option<(Vec<Rational>, Vec<Vec<Rational>>)> {
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut particular = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug[r][cols].clone();
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let nullspace = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -aug[r][f].clone();
            }
            v
        })
        .collect();
    Some((particular, nullspace))
}

/// Determinant by cofactor expansion along the first row (matrices here are at most 5x5).
pub fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    match n {
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let ring = m[0][0].ring().clone();
            let mut acc = Polynomial::zero(&ring);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &m[0][j] * &determinant(&minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// The nonzero `t`-minors of a matrix given as rows.
pub fn minors(m: &[Vec<Polynomial>], t: usize) -> Vec<Polynomial> {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    if t == 0 || t > rows || t > cols {
        return Vec::new();
    }
    let mut out = Vec::new();
    for rs in subsets(rows, t) {
        for cs in subsets(cols, t) {
            let sub: Vec<Vec<Polynomial>> =
                rs.iter().map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect()).collect();
            let d = determinant(&sub);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

/// Signed maximal minors of an `r x (r-1)` matrix: entry `i` is
/// `(-1)^i` times the minor deleting row `i`.
pub fn signed_maximal_minors(m: &[Vec<Polynomial>]) -> Vec<Polynomial> {
    let rows = m.len();
    (0..rows)
        .map(|i| {
            let sub: Vec<Vec<Polynomial>> =
                m.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, r)| r.clone()).collect();
            let d = determinant(&sub);
            if i % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Ring};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn affine_solution_and_nullspace() {
        let a = vec![vec![q(1), q(1), q(1)]];
        let (p, ns) = solve_affine(&a, &[q(1)]).unwrap();
        assert_eq!(p, vec![q(1), q(0), q(0)]);
        assert_eq!(ns.len(), 2);
        assert!(solve_affine(&[vec![q(1)], vec![q(2)]], &[q(1), q(1)]).is_none());
    }

    #[test]
    fn determinant_of_koszul_like_matrix() {
        let r = Ring::degrevlex(["x", "y", "z"]).unwrap();
        let p = |s: &str| parse_poly(s, &r).unwrap();
        let m = vec![
            vec![p("x"), p("y"), p("0")],
            vec![p("0"), p("x"), p("y")],
            vec![p("y"), p("0"), p("x")],
        ];
        assert_eq!(determinant(&m), p("x^3+y^3"));
        assert_eq!(minors(&m, 3).len(), 1);
        assert_eq!(minors(&m, 1).len(), 6);
    }
}
