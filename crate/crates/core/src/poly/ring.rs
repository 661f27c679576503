use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::{Monomial, PolyError};

/// Monomial order tag.
///
/// `Block(k)` compares the first `k` variables by degrevlex and breaks ties
/// with degrevlex on the remaining ones; it is an elimination order for the
/// first block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Degrevlex,
    Lex,
    Block(usize),
}

/// Polynomial ring over the rationals: ordered variable names plus a term order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    order: TermOrder,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: Into<String>>(
        vars: impl IntoIterator<Item = S>,
        order: TermOrder,
    ) -> Result<Arc<Ring>, PolyError> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for v in &vars {
            if !is_identifier(v) {
                return Err(PolyError::InvalidVariableName(v.clone()));
            }
            if !seen.insert(v.as_str()) {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
        }
        if let TermOrder::Block(k) = order {
            if k > vars.len() {
                return Err(PolyError::BlockOutOfRange { block: k, arity: vars.len() });
            }
        }
        Ok(Arc::new(Ring { vars, order }))
    }

    /// Degrevlex ring on the given variables.
    pub fn degrevlex<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Result<Arc<Ring>, PolyError> {
        Ring::new(vars, TermOrder::Degrevlex)
    }

    /// Parses a comma separated variable list such as `x,y,z`.
    pub fn from_var_list(list: &str) -> Result<Arc<Ring>, PolyError> {
        let vars: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        if vars.is_empty() {
            return Err(PolyError::EmptyRing);
        }
        Ring::degrevlex(vars)
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables under a different order.
    pub fn with_order(&self, order: TermOrder) -> Result<Arc<Ring>, PolyError> {
        Ring::new(self.vars.clone(), order)
    }

    /// Appends fresh variables; fails on a name collision.
    pub fn extended<S: AsRef<str>>(&self, names: &[S], order: TermOrder) -> Result<Arc<Ring>, PolyError> {
        let mut vars = self.vars.clone();
        for n in names {
            let n = n.as_ref();
            if self.index_of(n).is_some() {
                return Err(PolyError::VariableCollision(n.to_string()));
            }
            vars.push(n.to_string());
        }
        Ring::new(vars, order)
    }

    /// Picks a name not already used in this ring, starting from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (0..).map(|i| format!("{base}_{i}")).find(|c| self.index_of(c).is_none()).unwrap()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.order {
            TermOrder::Degrevlex => degrevlex(a.raw(), b.raw(), a.degree(), b.degree()),
            TermOrder::Lex => a.raw().cmp(b.raw()),
            TermOrder::Block(k) => {
                let (a1, a2) = a.raw().split_at(k);
                let (b1, b2) = b.raw().split_at(k);
                let da: u32 = a1.iter().map(|&e| e as u32).sum();
                let db: u32 = b1.iter().map(|&e| e as u32).sum();
                degrevlex(a1, b1, da, db)
                    .then_with(|| degrevlex(a2, b2, a.degree() - da, b.degree() - db))
            }
        }
    }
}

fn degrevlex(a: &[u16], b: &[u16], da: u32, db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}] ({:?})", self.vars.join(","), self.order)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}]", self.vars.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_basics() {
        let r = Ring::degrevlex(["x", "y", "z"]).unwrap();
        assert_eq!(r.compare(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        // x*z < y^2 in degrevlex
        assert_eq!(r.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(r.compare(&m(&[0, 0, 3]), &m(&[2, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let r = Ring::new(["t", "x", "y"], TermOrder::Block(1)).unwrap();
        assert_eq!(r.compare(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
    }

    #[test]
    fn duplicate_and_block_errors() {
        assert!(matches!(Ring::degrevlex(["x", "x"]), Err(PolyError::DuplicateVariable(_))));
        assert!(matches!(
            Ring::new(["x"], TermOrder::Block(2)),
            Err(PolyError::BlockOutOfRange { .. })
        ));
    }
}
