//! Free modules, submodules, syzygies and minimal free resolutions.

mod resolution;
mod submodule;

use std::fmt;
use std::sync::Arc;

use crate::poly::{Polynomial, Ring};

pub use resolution::{is_resolution, minimal_free_resolution, BettiData, FreeResolution};
pub use submodule::{
    koszul_syzygies, minimal_columns, submodule_intersect, submodule_membership, syzygies, syzygy_columns, Submodule,
};

/// A column vector of polynomials, an element of `R^rank`.
pub type Column = Vec<Polynomial>;

/// Positive integer weights on the variables, or no grading at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Grading {
    Weighted(Vec<u32>),
    Ungraded,
}

impl Grading {
    pub fn standard(ring: &Ring) -> Grading {
        Grading::Weighted(vec![1; ring.arity()])
    }

    pub fn is_graded(&self) -> bool {
        matches!(self, Grading::Weighted(_))
    }

    /// Degree of a polynomial: its largest weighted degree, or standard degree when ungraded.
    pub fn degree(&self, p: &Polynomial) -> Option<i64> {
        match self {
            Grading::Weighted(w) => p.weighted_degree(w).map(|d| d as i64),
            Grading::Ungraded => p.degree().map(|d| d as i64),
        }
    }

    pub fn is_homogeneous(&self, p: &Polynomial) -> bool {
        match self {
            Grading::Weighted(w) => p.is_weighted_homogeneous(w),
            Grading::Ungraded => false,
        }
    }

    /// Degree of a column in a free module with the given shifts (first nonzero entry).
    pub fn column_degree(&self, col: &[Polynomial], shifts: &[i64]) -> Option<i64> {
        col.iter().zip(shifts).filter_map(|(p, s)| self.degree(p).map(|d| d + s)).max()
    }
}

/// A graded free module `⊕ R(-shift_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFree {
    pub shifts: Vec<i64>,
}

impl GradedFree {
    pub fn new(shifts: Vec<i64>) -> Self {
        GradedFree { shifts }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }
}

/// A map `source -> target` between graded free modules, stored as `target.rank x source.rank` entries.
#[derive(Clone, PartialEq)]
pub struct GradedMatrix {
    pub ring: Arc<Ring>,
    pub source: GradedFree,
    pub target: GradedFree,
    pub entries: Vec<Vec<Polynomial>>,
}

impl GradedMatrix {
    /// Builds a matrix from its columns; source shifts are the column degrees.
    pub fn from_columns(ring: &Arc<Ring>, target: GradedFree, cols: &[Column], grading: &Grading) -> Self {
        let rows = target.rank();
        let source = GradedFree::new(
            cols.iter().map(|c| grading.column_degree(c, &target.shifts).unwrap_or(0)).collect(),
        );
        let entries = (0..rows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        GradedMatrix { ring: ring.clone(), source, target, entries }
    }

    pub fn rows(&self) -> usize {
        self.target.rank()
    }

    pub fn cols(&self) -> usize {
        self.source.rank()
    }

    pub fn column(&self, j: usize) -> Column {
        self.entries.iter().map(|row| row[j].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Column> {
        (0..self.cols()).map(|j| self.column(j)).collect()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &GradedMatrix) -> Vec<Vec<Polynomial>> {
        (0..self.rows())
            .map(|i| {
                (0..other.cols())
                    .map(|j| {
                        let mut acc = Polynomial::zero(&self.ring);
                        for k in 0..self.cols() {
                            if !self.entries[i][k].is_zero() && !other.entries[k][j].is_zero() {
                                acc = &acc + &(&self.entries[i][k] * &other.entries[k][j]);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    /// True when every entry is zero or homogeneous of the degree forced by the shifts.
    pub fn is_graded(&self, grading: &Grading) -> bool {
        let Grading::Weighted(w) = grading else { return false };
        for (i, row) in self.entries.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let want = self.source.shifts[j] - self.target.shifts[i];
                if want < 0 || !p.is_weighted_homogeneous(w) || p.weighted_degree(w) != Some(want as u64) {
                    return false;
                }
            }
        }
        true
    }

    /// All nonzero entries, as generators of the ideal `I_1`.
    pub fn entry_ideal_generators(&self) -> Vec<Polynomial> {
        self.entries.iter().flatten().filter(|p| !p.is_zero()).cloned().collect()
    }

    pub fn has_unit_entry(&self) -> bool {
        self.entries.iter().flatten().any(|p| p.is_constant() && !p.is_zero())
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries.iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect()
    }
}

impl fmt::Debug for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GradedMatrix {:?} <- {:?}", self.target.shifts, self.source.shifts)?;
        for row in self.to_strings() {
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
