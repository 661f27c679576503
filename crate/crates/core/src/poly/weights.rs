use num_integer::Integer;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{Polynomial, Rational};
use crate::linalg::{rank, solve_affine, subsets};

/// Rational weights `a_i` together with the integer form `a_i = w_i / lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub rational: Vec<Rational>,
    pub integer: Vec<u64>,
    pub lambda: u64,
}

impl WeightVector {
    pub fn from_rational(rational: Vec<Rational>) -> WeightVector {
        let mut l = BigInt::one();
        for a in &rational {
            l = l.lcm(a.denom());
        }
        let scaled: Vec<BigInt> = rational.iter().map(|a| (a * Rational::from_integer(l.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for v in &scaled {
            g = g.gcd(v);
        }
        if g.is_zero() {
            g = BigInt::one();
        }
        let integer = scaled.iter().map(|v| (v / &g).to_u64().expect("weight overflow")).collect();
        let lambda = (l / g).to_u64().expect("weight overflow");
        WeightVector { rational, integer, lambda }
    }

    /// True when some weight exceeds the conventional bound 1/2.
    pub fn exceeds_half(&self) -> bool {
        let half = Rational::new(1.into(), 2.into());
        self.rational.iter().any(|a| a > &half)
    }

    pub fn all_positive(&self) -> bool {
        self.rational.iter().all(|a| a.is_positive())
    }
}

impl Serialize for WeightVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("WeightVector", 3)?;
        let rational: Vec<String> = self.rational.iter().map(|a| a.to_string()).collect();
        st.serialize_field("rational", &rational)?;
        st.serialize_field("integer", &self.integer)?;
        st.serialize_field("lambda", &self.lambda)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightClass {
    /// `f = sum a_i x_i f_{x_i}` with every `a_i > 0`.
    WeightedHomogeneous(WeightVector),
    /// Such an identity exists with nonnegative weights, some of them zero.
    EulerianZeroWeights(WeightVector),
    None,
}

impl WeightClass {
    pub fn weights(&self) -> Option<&WeightVector> {
        match self {
            WeightClass::WeightedHomogeneous(w) | WeightClass::EulerianZeroWeights(w) => Some(w),
            WeightClass::None => None,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            WeightClass::WeightedHomogeneous(_) => "weighted_homogeneous",
            WeightClass::EulerianZeroWeights(_) => "eulerian_with_zero_weights",
            WeightClass::None => "none",
        }
    }
}

/// Solves `sum_i a_i e_i = 1` over the exponent vectors `e` of `f` and classifies the result.
///
/// Standard homogeneous input returns `(1/d, ..., 1/d)`. When the solution set
/// has positive dimension, the barycenter of its nonnegative vertices is used.
/// Variables absent from `f` receive weight `1/deg f`.
pub fn weighted_weights(f: &Polynomial) -> WeightClass {
    let n = f.ring().arity();
    let Some(d) = f.degree() else { return WeightClass::None };
    if d == 0 {
        return WeightClass::None;
    }
    if f.is_homogeneous() {
        let a = Rational::new(1.into(), d.into());
        return WeightClass::WeightedHomogeneous(WeightVector::from_rational(vec![a; n]));
    }
    let used = f.support();
    let rows: Vec<Vec<Rational>> = f
        .terms()
        .iter()
        .map(|(m, _)| used.iter().map(|&i| Rational::from_integer(m.exponent(i).into())).collect())
        .collect();
    let ones = vec![Rational::one(); rows.len()];
    let Some((particular, nullspace)) = solve_affine(&rows, &ones) else {
        return WeightClass::None;
    };
    let sol: Vec<Rational> = if nullspace.is_empty() {
        if particular.iter().any(|a| a.is_negative()) {
            return WeightClass::None;
        }
        particular
    } else {
        let r = rank(&rows);
        let mut vertices: Vec<Vec<Rational>> = Vec::new();
        for basis in subsets(used.len(), r) {
            let sub: Vec<Vec<Rational>> = rows.iter().map(|row| basis.iter().map(|&j| row[j].clone()).collect()).collect();
            if let Some((p, ns)) = solve_affine(&sub, &ones) {
                if !ns.is_empty() || p.iter().any(|a| a.is_negative()) {
                    continue;
                }
                let mut v = vec![Rational::zero(); used.len()];
                for (k, &j) in basis.iter().enumerate() {
                    v[j] = p[k].clone();
                }
                if !vertices.contains(&v) {
                    vertices.push(v);
                }
            }
        }
        if vertices.is_empty() {
            return WeightClass::None;
        }
        let count = Rational::from_integer(vertices.len().into());
        (0..used.len())
            .map(|j| vertices.iter().map(|v| v[j].clone()).fold(Rational::zero(), |a, b| a + b) / &count)
            .collect()
    };
    let mut full = vec![Rational::new(1.into(), d.into()); n];
    for (k, &i) in used.iter().enumerate() {
        full[i] = sol[k].clone();
    }
    let w = WeightVector::from_rational(full);
    if w.all_positive() {
        WeightClass::WeightedHomogeneous(w)
    } else {
        WeightClass::EulerianZeroWeights(w)
    }
}

/// `f - sum a_i x_i f_{x_i}`, which vanishes exactly when the weights certify `f`.
pub fn euler_residual(f: &Polynomial, weights: &[Rational]) -> Polynomial {
    let ring = f.ring();
    let mut acc = f.clone();
    for (i, a) in weights.iter().enumerate() {
        let term = (&Polynomial::variable(ring, i) * &f.derivative(i)).scale(a);
        acc = &acc - &term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Ring};

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn discriminant_weights() {
        let r = Ring::degrevlex(["x", "y", "z"]).unwrap();
        let f = parse_poly("256*z^3-128*x^2*z^2+16*x^4*z+144*x*y^2*z-4*x^3*y^2-27*y^4", &r).unwrap();
        let WeightClass::WeightedHomogeneous(w) = weighted_weights(&f) else { panic!() };
        assert_eq!(w.rational, vec![q(1, 6), q(1, 4), q(1, 3)]);
        assert_eq!(w.integer, vec![2, 3, 4]);
        assert_eq!(w.lambda, 12);
        assert!(euler_residual(&f, &w.rational).is_zero());
    }

    #[test]
    fn eulerian_with_zero_weight() {
        let r = Ring::degrevlex(["x", "y", "z"]).unwrap();
        let f = parse_poly("x*y*(x+y)*(x+y*z)", &r).unwrap();
        let WeightClass::EulerianZeroWeights(w) = weighted_weights(&f) else { panic!() };
        assert_eq!(w.rational, vec![q(1, 4), q(1, 4), q(0, 1)]);
        assert!(euler_residual(&f, &w.rational).is_zero());
    }

    #[test]
    fn homogeneous_gets_uniform_weights() {
        let r = Ring::degrevlex(["x", "y", "z"]).unwrap();
        let f = parse_poly("x*y*z*(x+y+z)", &r).unwrap();
        let WeightClass::WeightedHomogeneous(w) = weighted_weights(&f) else { panic!() };
        assert_eq!(w.rational, vec![q(1, 4); 3]);
        assert_eq!(w.integer, vec![1, 1, 1]);
        assert_eq!(w.lambda, 4);
    }

    #[test]
    fn underdetermined_system_uses_positive_vertex_barycenter() {
        // x*y + z^2*w is weighted homogeneous for a whole segment of weights.
        let r = Ring::degrevlex(["x", "y", "z", "w"]).unwrap();
        let f = parse_poly("x*y+z^2*w+x^3", &r).unwrap();
        let WeightClass::WeightedHomogeneous(w) = weighted_weights(&f) else { panic!() };
        assert!(w.all_positive());
        assert!(euler_residual(&f, &w.rational).is_zero());
    }

    #[test]
    fn not_eulerian() {
        let r = Ring::degrevlex(["x", "y"]).unwrap();
        let f = parse_poly("x+x^2+y", &r).unwrap();
        assert_eq!(weighted_weights(&f), WeightClass::None);
    }
}
