use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::{Monomial, PolyError, Rational, Ring};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept strictly descending in the ring's term order, with no zero
/// coefficients and no repeated monomials.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, Rational)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Polynomial::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::one(ring.arity()), c)] }
    }

    pub fn from_int(ring: &Arc<Ring>, c: i64) -> Self {
        Polynomial::constant(ring, Rational::from_integer(c.into()))
    }

    pub fn variable(ring: &Arc<Ring>, index: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::variable(ring.arity(), index), Rational::one())],
        }
    }

    pub fn term(ring: &Arc<Ring>, mon: Monomial, coef: Rational) -> Self {
        assert_eq!(mon.arity(), ring.arity());
        if coef.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(mon, coef)] }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.arity(), ring.arity());
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.compare(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Caller guarantees the canonical form invariants.
    pub(crate) fn from_sorted_terms(ring: &Arc<Ring>, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.compare(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.weighted_degree(weights)).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max().unwrap_or(0)
    }

    /// Zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    pub fn is_weighted_homogeneous(&self, weights: &[u32]) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.weighted_degree(weights);
                self.terms.iter().all(|(m, _)| m.weighted_degree(weights) == d)
            }
        }
    }

    pub fn homogeneous_component(&self, degree: u32) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == degree).cloned().collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn weighted_component(&self, weights: &[u32], degree: u64) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.weighted_degree(weights) == degree)
            .cloned()
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.arity()];
        for (m, _) in &self.terms {
            for i in m.support() {
                used[i] = true;
            }
        }
        (0..used.len()).filter(|&i| used[i]).collect()
    }

    fn same_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.same_ring(other)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.same_ring(other)?;
        Ok(self.combine(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.same_ring(other)?;
        Ok(self.product(other))
    }

    fn combine(&self, other: &Polynomial, subtract: bool) -> Polynomial {
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ring.compare(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), if subtract { -cb } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), if subtract { -c } else { c.clone() })));
        Polynomial { ring: ring.clone(), terms: out }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let products = self
            .terms
            .iter()
            .flat_map(|(ma, ca)| other.terms.iter().map(move |(mb, cb)| (ma.mul(mb), ca * cb)));
        Polynomial::from_terms(&self.ring, products)
    }

    /// Multiplication by a single term preserves the order of the terms.
    pub fn mul_term(&self, mon: &Monomial, coef: &Rational) -> Polynomial {
        if coef.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, c)| (m.mul(mon), c * coef)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale_int(&self, c: i64) -> Polynomial {
        self.scale(&Rational::from_integer(c.into()))
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// Leading coefficient scaled to one; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    /// Division by a single polynomial: `self = q * g + r` with no term of `r`
    /// divisible by the leading monomial of `g`.
    pub fn div_rem(&self, g: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        self.same_ring(g)?;
        let (lm, lc) = match g.terms.first() {
            None => return Err(PolyError::DivisionByZero),
            Some(t) => t,
        };
        let mut quotient = Vec::new();
        let mut remainder = Vec::new();
        let mut p = self.clone();
        while let Some((m, c)) = p.terms.first().cloned() {
            match lm.quotient_of(&m) {
                Some(q) => {
                    let qc = c / lc;
                    p = p.combine(&g.mul_term(&q, &qc), true);
                    quotient.push((q, qc));
                }
                None => {
                    remainder.push(p.terms.remove(0));
                }
            }
        }
        Ok((
            Polynomial::from_terms(&self.ring, quotient),
            Polynomial::from_sorted_terms(&self.ring, remainder),
        ))
    }

    pub fn exact_div(&self, g: &Polynomial) -> Result<Polynomial, PolyError> {
        let (q, r) = self.div_rem(g)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotDivisible)
        }
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        assert!(var < self.ring.arity(), "variable index out of range");
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(var) > 0)
            .map(|(m, c)| {
                let e = m.exponent(var);
                (m.with_exponent(var, e - 1), c * Rational::from_integer(e.into()))
            })
            .collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }

    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.ring.arity()).map(|i| self.derivative(i)).collect()
    }

    /// Sends variable `i` of this ring to variable `map[i]` of `target`.
    pub fn map_into(&self, target: &Arc<Ring>, map: &[Option<usize>]) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.remap(map, target.arity()), c.clone()));
        Polynomial::from_terms(target, terms)
    }

    /// Reinterprets the polynomial in a ring whose variables include these by name.
    pub fn embed(&self, target: &Arc<Ring>) -> Result<Polynomial, PolyError> {
        let map = self
            .ring
            .variables()
            .iter()
            .map(|v| target.index_of(v).ok_or_else(|| PolyError::UnknownVariable(v.clone())).map(Some))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.map_into(target, &map))
    }

    /// Reinterprets the polynomial in `target`, which must contain every variable
    /// that actually occurs.
    pub fn restrict_to(&self, target: &Arc<Ring>) -> Result<Polynomial, PolyError> {
        let used = self.support();
        let mut map = vec![None; self.ring.arity()];
        for (i, (slot, name)) in map.iter_mut().zip(self.ring.variables()).enumerate() {
            *slot = target.index_of(name);
            if slot.is_none() && used.contains(&i) {
                return Err(PolyError::UnknownVariable(name.clone()));
            }
        }
        Ok(self.map_into(target, &map))
    }

    /// Substitutes a rational value for one variable, keeping the ring.
    pub fn substitute(&self, var: usize, value: &Rational) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let e = m.exponent(var);
            let mut coef = c.clone();
            for _ in 0..e {
                coef *= value;
            }
            (m.with_exponent(var, 0), coef)
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.arity());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, e) in m.exponents().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        acc
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, e) in m.exponents().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(&ring.variables()[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if negative {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics on a ring mismatch; use the `try_` methods to get an error instead.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.same_ring(rhs).expect("ring mismatch");
                $body(self, rhs)
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Polynomial, b: &Polynomial| a.combine(b, false));
binop!(Sub, sub, |a: &Polynomial, b: &Polynomial| a.combine(b, true));
binop!(Mul, mul, |a: &Polynomial, b: &Polynomial| a.product(b));

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
