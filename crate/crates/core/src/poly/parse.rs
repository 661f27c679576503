use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Polynomial, PolyError, Rational, Ring};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Token::Int(text[start..i].parse().unwrap())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(PolyError::Parse { pos: start, msg: format!("unexpected character {other:?}") })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map(|t| t.0).unwrap_or(self.len)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse { pos: self.offset(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // Juxtaposition (`2x`, `3(x+y)`) is read as multiplication.
    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let d = self.unary()?;
                    match d.constant_value() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()),
                        Some(_) => return self.error("division by zero"),
                        None => return self.error("only division by a nonzero constant is supported"),
                    }
                }
                Some(Token::Int(_)) | Some(Token::Ident(_)) | Some(Token::LParen) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Token::Int(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| PolyError::Parse {
                        pos: self.offset(),
                        msg: "exponent too large".into(),
                    })?;
                    Ok(base.pow(e))
                }
                Some(Token::Minus) => Err(PolyError::NegativeExponent),
                _ => self.error("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.ring, Rational::from_integer(n)))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                match self.ring.index_of(&name) {
                    Some(i) => Ok(Polynomial::variable(self.ring, i)),
                    None => Err(PolyError::UnknownVariable(name)),
                }
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return self.error("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(t) => self.error(format!("unexpected token {t:?}")),
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parses `+ - * / ^` expressions with integer or `p/q` literals over the ring's variables.
pub fn parse_poly(text: &str, ring: &Arc<Ring>) -> Result<Polynomial, PolyError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(PolyError::Parse { pos: 0, msg: "empty expression".into() });
    }
    let mut parser = Parser { ring, tokens, pos: 0, len: text.len() };
    let p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return parser.error("trailing input");
    }
    Ok(p)
}

/// Parses a rational literal such as `-3/4` or `7`.
pub fn parse_rational(text: &str) -> Result<Rational, PolyError> {
    let t = text.trim();
    let bad = || PolyError::Parse { pos: 0, msg: format!("not a rational number: {t:?}") };
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r3() -> Arc<Ring> {
        Ring::degrevlex(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn conic_line() {
        let ring = r3();
        let f = parse_poly("x*(x^2+y*z)", &ring).unwrap();
        assert_eq!(f.to_string(), "x^3+x*y*z");
    }

    #[test]
    fn zero_has_no_terms() {
        let f = parse_poly("0", &r3()).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.to_string(), "0");
    }

    #[test]
    fn discriminant_has_six_terms() {
        let ring = r3();
        let f = parse_poly("256*z^3-128*x^2*z^2+16*x^4*z+144*x*y^2*z-4*x^3*y^2-27*y^4", &ring).unwrap();
        assert_eq!(f.len(), 6);
        assert_eq!(f.degree(), Some(5));
    }

    #[test]
    fn implicit_multiplication_and_rationals() {
        let ring = r3();
        let a = parse_poly("3/2 x y - 2(x+y)^2", &ring).unwrap();
        let b = parse_poly("3/2*x*y - 2*x^2 - 4*x*y - 2*y^2", &ring).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_poly("x/2", &ring).unwrap(), parse_poly("1/2*x", &ring).unwrap());
    }

    #[test]
    fn errors() {
        let ring = r3();
        assert!(matches!(parse_poly("x+w", &ring), Err(PolyError::UnknownVariable(_))));
        assert!(matches!(parse_poly("x^-1", &ring), Err(PolyError::NegativeExponent)));
        assert!(matches!(parse_poly("x+*y", &ring), Err(PolyError::Parse { .. })));
        assert!(matches!(parse_poly("(x+y", &ring), Err(PolyError::Parse { .. })));
        assert!(matches!(parse_poly("x/y", &ring), Err(PolyError::Parse { .. })));
    }
}
