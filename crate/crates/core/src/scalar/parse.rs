//! Recursive-descent parser for the scalar grammar.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' ['-'] integer)?
//! atom  := integer | identifier | '(' expr ')'
//! ```
//!
//! The identifier `delta` (or `δ`) denotes the formal parameter unless the
//! environment binds it; any other identifier must be bound.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{Rational, Scalar};
use crate::error::{Error, Result};

/// Parameter bindings used while parsing.
pub type Env = BTreeMap<String, Scalar>;

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    parse_scalar_with(s, &Env::new())
}

pub fn parse_scalar_with(s: &str, env: &Env) -> Result<Scalar> {
    let mut p = Parser {
        chars: s.chars().collect(),
        pos: 0,
        env,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err(format!("unexpected `{}`", p.chars[p.pos])));
    }
    Ok(v)
}

/// Identifiers that occur in `s`, in order of first appearance.
pub fn identifiers(s: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut cur = String::new();
    for c in s.chars().chain(std::iter::once(' ')) {
        if c.is_alphabetic() || c == '_' || (!cur.is_empty() && c.is_ascii_digit()) {
            cur.push(c);
        } else if !cur.is_empty() {
            let id = if cur == "δ" {
                "delta".to_string()
            } else {
                std::mem::take(&mut cur)
            };
            cur.clear();
            if !out.contains(&id) {
                out.push(id);
            }
        }
    }
    out
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    env: &'a Env,
}

impl Parser<'_> {
    fn err(&self, message: String) -> Error {
        Error::Parse {
            line: 1,
            column: self.pos + 1,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == '*' {
                &acc * &rhs
            } else {
                let inv = rhs.inv().ok_or_else(|| Error::Parse {
                    line: 1,
                    column: at + 1,
                    message: "division by zero".into(),
                })?;
                &acc * &inv
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        let e: i32 = digits.parse().map_err(|_| Error::Parse {
            line: 1,
            column: start + 1,
            message: "expected integer exponent".into(),
        })?;
        let e = if neg { -e } else { e };
        base.pow(e)
            .ok_or_else(|| self.err("negative power of zero".into()))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`".into()));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                let n: BigInt = d.parse().expect("digit run");
                Ok(Scalar::from_rational(Rational::from_bigint(n)))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let mut id: String = self.chars[start..self.pos].iter().collect();
                if id == "δ" {
                    id = "delta".into();
                }
                if let Some(v) = self.env.get(&id) {
                    return Ok(v.clone());
                }
                if id == "delta" {
                    return Ok(Scalar::delta());
                }
                self.pos = start;
                Err(Error::UnboundParameter(id))
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of input".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        let x = parse_scalar("-(delta - 1)^2 / 2 + 3*delta").unwrap();
        assert_eq!(x.to_string(), "-1/2*delta^2 + 4*delta - 1/2");
        assert!(parse_scalar("1/0").is_err());
        assert!(matches!(parse_scalar("2 +"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_scalar("alpha"),
            Err(Error::UnboundParameter(_))
        ));
    }

    #[test]
    fn environment() {
        let mut env = Env::new();
        env.insert("alpha".into(), Scalar::from_int(3));
        env.insert("delta".into(), Scalar::from_int(2));
        let x = parse_scalar_with("alpha/delta", &env).unwrap();
        assert_eq!(x, Scalar::from_rational(Rational::new(3, 2)));
    }

    #[test]
    fn finds_identifiers() {
        assert_eq!(
            identifiers("(alpha - 1)/delta + beta2"),
            vec!["alpha", "delta", "beta2"]
        );
    }
}
