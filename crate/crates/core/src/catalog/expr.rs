//! Tiny expression language for the built-in tables: sums and products of
//! integers, fractions, parameters, the constants `w1 = (−1)^{1/3}`,
//! `w2 = (−1)^{2/3}`, `s = i/√3`, `i`, and basis vectors `e1 … e9`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{self, Backend, Scalar};

/// A scalar, or a vector `Σ c_k e_k` (never a mix).
#[derive(Clone, Debug, PartialEq)]
enum Value {
    Scalar(Scalar),
    Vector(Vec<Scalar>),
}

pub(crate) struct Env<'a> {
    pub dim: usize,
    pub backend: Backend,
    pub params: &'a BTreeMap<String, Scalar>,
}

struct Parser<'s, 'e> {
    text: &'s str,
    chars: Vec<char>,
    pos: usize,
    env: &'e Env<'e>,
}

impl Parser<'_, '_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::precondition(format!("in `{}`: {}", self.text, msg.into()))
    }

    fn peek(&mut self) -> Option<char> {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Value> {
        let mut v = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            v = self.add(v, rhs, c == '-')?;
        }
        Ok(v)
    }

    fn term(&mut self) -> Result<Value> {
        let mut v = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            v = if c == '*' { self.mul(v, rhs)? } else { self.div(v, rhs)? };
        }
        Ok(v)
    }

    fn unary(&mut self) -> Result<Value> {
        if self.peek() == Some('-') {
            self.pos += 1;
            let v = self.unary()?;
            return self.mul(Value::Scalar(Scalar::from_i64(self.env.backend, -1)), v);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Value> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("missing `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                let n: i64 = digits.parse().map_err(|_| self.err("number too large"))?;
                Ok(Value::Scalar(Scalar::from_i64(self.env.backend, n)))
            }
            Some(c) if c.is_alphabetic() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_alphanumeric()) {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                self.ident(&name)
            }
            _ => Err(self.err("expected a value")),
        }
    }

    fn ident(&self, name: &str) -> Result<Value> {
        let b = self.env.backend;
        if let Some(k) = name.strip_prefix('e').and_then(|d| d.parse::<usize>().ok()) {
            if k == 0 || k > self.env.dim {
                return Err(self.err(format!("basis vector `{name}` out of range")));
            }
            let mut v = vec![Scalar::zero(b); self.env.dim];
            v[k - 1] = Scalar::one(b);
            return Ok(Value::Vector(v));
        }
        if let Some(v) = self.env.params.get(name) {
            return Ok(Value::Scalar(v.to_backend(b.join(v.backend()))?));
        }
        let constant = match name {
            "w1" => scalar::cube_root_of_minus_one(),
            "w2" => scalar::cube_root_of_minus_one_squared(),
            "s" => scalar::i_over_sqrt3(),
            "i" => Scalar::complex(0.0, 1.0),
            _ => return Err(self.err(format!("unknown name `{name}`"))),
        };
        if b == Backend::Rational {
            return Err(self.err(format!("constant `{name}` needs the complex backend")));
        }
        Ok(Value::Scalar(constant))
    }

    fn add(&self, a: Value, b: Value, subtract: bool) -> Result<Value> {
        let neg = |x: &Scalar| if subtract { -x } else { x.clone() };
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x + &neg(&y))),
            (Value::Vector(x), Value::Vector(y)) => Ok(Value::Vector(x.iter().zip(&y).map(|(p, q)| p + &neg(q)).collect())),
            _ => Err(self.err("cannot add a scalar and a vector")),
        }
    }

    fn mul(&self, a: Value, b: Value) -> Result<Value> {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x * &y)),
            (Value::Scalar(x), Value::Vector(v)) | (Value::Vector(v), Value::Scalar(x)) => {
                Ok(Value::Vector(v.iter().map(|c| &x * c).collect()))
            }
            _ => Err(self.err("cannot multiply two vectors")),
        }
    }

    fn div(&self, a: Value, b: Value) -> Result<Value> {
        let Value::Scalar(d) = b else {
            return Err(self.err("cannot divide by a vector"));
        };
        let inv = d.inverse()?;
        self.mul(a, Value::Scalar(inv))
    }
}

fn evaluate(text: &str, env: &Env) -> Result<Value> {
    let mut p = Parser {
        text,
        chars: text.chars().collect(),
        pos: 0,
        env,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

/// Evaluates a linear combination of basis vectors.
pub(crate) fn vector(text: &str, env: &Env) -> Result<Vec<Scalar>> {
    match evaluate(text, env)? {
        Value::Vector(v) => Ok(v),
        Value::Scalar(s) if s.is_zero() => Ok(vec![Scalar::zero(env.backend); env.dim]),
        Value::Scalar(_) => Err(Error::precondition(format!("`{text}` is a scalar, expected a vector"))),
    }
}

/// Evaluates a scalar expression.
pub(crate) fn scalar(text: &str, env: &Env) -> Result<Scalar> {
    match evaluate(text, env)? {
        Value::Scalar(s) => Ok(s),
        Value::Vector(_) => Err(Error::precondition(format!("`{text}` is a vector, expected a scalar"))),
    }
}

/// Identifiers that are neither basis vectors nor built-in constants.
pub(crate) fn free_symbols(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for c in text.chars().chain(std::iter::once(' ')) {
        if c.is_alphanumeric() && (!cur.is_empty() || c.is_alphabetic()) {
            cur.push(c);
        } else {
            if !cur.is_empty() {
                let basis = cur.strip_prefix('e').is_some_and(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()));
                if !basis && !matches!(cur.as_str(), "w1" | "w2" | "s" | "i") && !out.contains(&cur) {
                    out.push(cur.clone());
                }
            }
            cur.clear();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(params: &BTreeMap<String, Scalar>, backend: Backend) -> Env<'_> {
        Env { dim: 3, backend, params }
    }

    #[test]
    fn linear_combinations() {
        let mut p = BTreeMap::new();
        p.insert("b".to_string(), Scalar::from_i64(Backend::Rational, 2));
        let e = env(&p, Backend::Rational);
        let v = vector("-1/2*e1 - b*e3", &e).unwrap();
        let s: Vec<String> = v.iter().map(ToString::to_string).collect();
        assert_eq!(s, ["-1/2", "0", "-2"]);
        assert_eq!(scalar("1/2*b", &e).unwrap(), Scalar::one(Backend::Rational));
        assert!(vector("e1*e2", &e).is_err());
        assert!(vector("e4", &e).is_err());
        assert!(vector("w1*e1", &e).is_err());
    }

    #[test]
    fn complex_constants() {
        let p = BTreeMap::new();
        let e = env(&p, Backend::Complex);
        let v = scalar("w1*w1 - w2", &e).unwrap();
        assert!(v.is_zero());
        let t = scalar("s*s", &e).unwrap();
        assert!((t - Scalar::complex(-1.0 / 3.0, 0.0)).is_zero());
    }

    #[test]
    fn symbols() {
        assert_eq!(free_symbols("-d23 + 1/2*c21*e1 + w2"), ["d23", "c21"]);
    }
}
