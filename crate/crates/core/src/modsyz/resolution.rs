use std::collections::BTreeMap;

use serde::Serialize;

use super::{minimal_columns, syzygies, Column, GradedFree, GradedMatrix, Grading};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg::minors;

/// A chain `F_n -> ... -> F_1 -> F_0 = R` resolving `R/I`; `maps[k]` is `F_{k+1} -> F_k`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub maps: Vec<GradedMatrix>,
    pub grading: Grading,
}

/// Graded Betti numbers by homological degree (from 1) and shift, plus regularity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiData {
    pub table: BTreeMap<usize, BTreeMap<i64, usize>>,
    pub regularity: i64,
}

impl BettiData {
    /// Builds a table from the shift lists of `F_1, F_2, ...`.
    pub fn from_shifts(levels: &[Vec<i64>]) -> BettiData {
        let mut table = BTreeMap::new();
        let mut regularity = 0;
        for (k, shifts) in levels.iter().enumerate() {
            let row: &mut BTreeMap<i64, usize> = table.entry(k + 1).or_default();
            for &s in shifts {
                *row.entry(s).or_default() += 1;
                regularity = regularity.max(s - (k as i64 + 1));
            }
        }
        BettiData { table, regularity }
    }

    /// Projective dimension of `R/I`.
    pub fn length(&self) -> usize {
        self.table.keys().copied().max().unwrap_or(0)
    }

    /// Shifts at one homological degree, ascending with multiplicity.
    pub fn shifts(&self, hdeg: usize) -> Vec<i64> {
        self.table
            .get(&hdeg)
            .map(|row| row.iter().flat_map(|(&s, &m)| std::iter::repeat_n(s, m)).collect())
            .unwrap_or_default()
    }

    /// Displays as `0 <- R <- R(-3)^3 <- ...` style text, reading left to right from `R`.
    pub fn display(&self) -> String {
        let mut parts = vec!["R".to_string()];
        for row in self.table.values() {
            let summands: Vec<String> = row
                .iter()
                .map(|(s, m)| if *m == 1 { format!("R(-{s})") } else { format!("R(-{s})^{m}") })
                .collect();
            parts.push(summands.join("+"));
        }
        parts.reverse();
        format!("0 -> {}", parts.join(" -> "))
    }
}

impl Serialize for BettiData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let out: BTreeMap<String, BTreeMap<String, usize>> = self
            .table
            .iter()
            .map(|(k, row)| (k.to_string(), row.iter().map(|(s, m)| (s.to_string(), *m)).collect()))
            .collect();
        out.serialize(s)
    }
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn betti(&self) -> BettiData {
        let levels: Vec<Vec<i64>> = self.maps.iter().map(|m| m.source.shifts.clone()).collect();
        BettiData::from_shifts(&levels)
    }

    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| !m.has_unit_entry())
    }
}

/// Minimal graded free resolution of `R/I` by iterated minimal syzygies.
pub fn minimal_free_resolution(ideal: &Ideal, grading: &Grading) -> Result<FreeResolution> {
    let ring = ideal.ring();
    if !grading.is_graded() || !ideal.generators().iter().all(|g| g.is_zero() || grading.is_homogeneous(g)) {
        return Err(Error::Precondition("minimal resolutions need homogeneous generators".into()));
    }
    let mut maps = Vec::new();
    let gens: Vec<Column> = ideal.generators().iter().map(|g| vec![g.clone()]).collect();
    let mut cols = minimal_columns(ring, &[0], gens, grading)?;
    let mut target = GradedFree::new(vec![0]);
    while !cols.is_empty() {
        let m = GradedMatrix::from_columns(ring, target.clone(), &cols, grading);
        let next = syzygies(ring, &cols, &target.shifts, grading)?;
        target = m.source.clone();
        maps.push(m);
        cols = next;
    }
    Ok(FreeResolution { maps, grading: grading.clone() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcyclicityReport {
    /// Expected ranks `r_k` of each map.
    pub ranks: Vec<usize>,
    /// `codim I_{r_k}(phi_k)` for each map.
    pub codims: Vec<i64>,
    /// First failing map (1-based) and the reason.
    pub failure: Option<(usize, String)>,
}

impl AcyclicityReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Buchsbaum–Eisenbud test: consecutive compositions vanish, ranks add up,
/// and `codim I_{r_k}(phi_k) >= k`.
pub fn is_resolution(maps: &[GradedMatrix]) -> Result<AcyclicityReport> {
    let n = maps.len();
    let mut report = AcyclicityReport { ranks: Vec::new(), codims: Vec::new(), failure: None };
    for k in 0..n.saturating_sub(1) {
        if maps[k].cols() != maps[k + 1].rows() {
            report.failure = Some((k + 1, "maps are not composable".into()));
            return Ok(report);
        }
        if maps[k].compose(&maps[k + 1]).iter().flatten().any(|p| !p.is_zero()) {
            report.failure = Some((k + 1, "composition with the next map is nonzero".into()));
            return Ok(report);
        }
    }
    let mut ranks = vec![0usize; n];
    let mut next = 0i64;
    for k in (0..n).rev() {
        let r = maps[k].cols() as i64 - next;
        if r < 0 {
            report.failure = Some((k + 1, "ranks do not add up".into()));
            return Ok(report);
        }
        ranks[k] = r as usize;
        next = r;
    }
    report.ranks = ranks.clone();
    for (k, m) in maps.iter().enumerate() {
        let r = ranks[k];
        if r > m.rows() {
            report.failure = Some((k + 1, "expected rank exceeds the target rank".into()));
            return Ok(report);
        }
        if !minors(&m.entries, r + 1).is_empty() {
            report.failure = Some((k + 1, format!("rank exceeds {r}")));
            return Ok(report);
        }
        let codim = if r == 0 {
            m.ring.arity() as i64 + 1
        } else {
            let ms = minors(&m.entries, r);
            if ms.is_empty() {
                0
            } else {
                Ideal::new(&m.ring, ms).codimension()?
            }
        };
        report.codims.push(codim);
        if codim < k as i64 + 1 {
            report.failure = Some((k + 1, format!("codim of the rank-{r} minors is {codim} < {}", k + 1)));
            return Ok(report);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Ring};

    fn resolve(f: &str) -> FreeResolution {
        let r = Ring::degrevlex(["x", "y", "z"]).unwrap();
        let i = Ideal::new(&r, parse_poly(f, &r).unwrap().gradient());
        minimal_free_resolution(&i, &Grading::standard(&r)).unwrap()
    }

    #[test]
    fn arrangement_resolutions() {
        let res = resolve("x*y*z*(x+y+z)");
        let b = res.betti();
        assert_eq!(b, BettiData::from_shifts(&[vec![3, 3, 3], vec![5, 5, 5], vec![6]]));
        assert_eq!(b.regularity, 3);
        assert!(res.is_minimal());
        assert!(is_resolution(&res.maps).unwrap().passed());

        let b = resolve("x*y*z*(x+y)*(x+z)*(y+z)").betti();
        assert_eq!(b, BettiData::from_shifts(&[vec![5, 5, 5], vec![8, 8, 8], vec![9]]));
        assert_eq!(b.regularity, 6);
    }

    #[test]
    fn conic_line_regularity() {
        let b = resolve("x*(x^2+y*z)").betti();
        assert_eq!(b.regularity, 2);
    }

    #[test]
    fn koszul_complex_is_acyclic() {
        let r = Ring::degrevlex(["x", "y", "z"]).unwrap();
        let i = Ideal::maximal(&r);
        let res = minimal_free_resolution(&i, &Grading::standard(&r)).unwrap();
        assert_eq!(res.betti(), BettiData::from_shifts(&[vec![1, 1, 1], vec![2, 2, 2], vec![3]]));
        let rep = is_resolution(&res.maps).unwrap();
        assert!(rep.passed(), "{rep:?}");
        let mut broken = res.maps.clone();
        broken[1].entries[0][0] = &broken[1].entries[0][0] + &parse_poly("x", &r).unwrap();
        assert!(!is_resolution(&broken).unwrap().passed());
    }

    #[test]
    fn betti_json() {
        let b = BettiData::from_shifts(&[vec![3, 3, 3], vec![5, 5, 5], vec![6]]);
        assert_eq!(serde_json::to_string(&b).unwrap(), r#"{"1":{"3":3},"2":{"5":3},"3":{"6":1}}"#);
    }
}
