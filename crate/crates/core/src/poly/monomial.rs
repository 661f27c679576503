use std::fmt;

use smallvec::SmallVec;

/// Exponent vector of a monomial, with its total degree cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 12]>,
    degree: u32,
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, arity), degree: 0 }
    }

    pub fn variable(arity: usize, index: usize) -> Self {
        let mut m = Monomial::one(arity);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    /// Panics if an exponent does not fit the 16-bit storage.
    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut v = SmallVec::with_capacity(exps.len());
        let mut degree = 0u32;
        for &e in exps {
            let e16 = u16::try_from(e).expect("monomial exponent overflow");
            v.push(e16);
            degree += e;
        }
        Monomial { exps: v, degree }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps.iter().map(|&e| e as u32)
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.exps.iter().zip(weights).map(|(&e, &w)| e as u64 * w as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(self.exps.iter()).map(|(&a, &b)| a - b).collect();
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 12]> =
            self.exps.iter().zip(other.exps.iter()).map(|(&a, &b)| a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 12]> =
            self.exps.iter().zip(other.exps.iter()).map(|(&a, &b)| a.min(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Variables with a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub(crate) fn with_exponent(&self, i: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        let e16 = u16::try_from(e).expect("monomial exponent overflow");
        m.degree = m.degree - m.exps[i] as u32 + e;
        m.exps[i] = e16;
        m
    }

    /// Reorders/embeds exponents: position `j` of the result takes exponent `map[i] == Some(j)`.
    pub(crate) fn remap(&self, map: &[Option<usize>], new_arity: usize) -> Monomial {
        let mut exps: SmallVec<[u16; 12]> = SmallVec::from_elem(0, new_arity);
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                let j = map[i].expect("remap drops a variable with nonzero exponent");
                exps[j] = e;
            }
        }
        Monomial { exps, degree: self.degree }
    }

    pub(crate) fn raw(&self) -> &[u16] {
        &self.exps
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}
