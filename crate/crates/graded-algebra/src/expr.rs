use std::fmt;

use crate::error::{AlgebraError, Result};

/// A factor of a coefficient: `h`, a one-dimensional form `<a>`, or the
/// fundamental ideal `I` (meaning: every element of I).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    H,
    Class(i64),
    Ideal,
}

/// `int · atoms · monomial`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub int: i64,
    pub atoms: Vec<Atom>,
    pub exps: Vec<u32>,
}

impl Term {
    pub fn has_ideal(&self) -> bool {
        self.atoms.contains(&Atom::Ideal)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    pub terms: Vec<Term>,
}

pub fn monomial_name(names: &[String], exps: &[u32]) -> String {
    let parts: Vec<String> = names
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(n, &e)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl Polynomial {
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        PolyDisplay { p: self, names }
    }
}

struct PolyDisplay<'a> {
    p: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.p.terms.iter().enumerate() {
            let mut factors = vec![];
            if t.int.abs() != 1 {
                factors.push(t.int.abs().to_string());
            }
            for a in &t.atoms {
                factors.push(match a {
                    Atom::H => "h".into(),
                    Atom::Class(c) => format!("<{c}>"),
                    Atom::Ideal => "I".into(),
                });
            }
            if t.exps.iter().any(|&e| e > 0) || factors.is_empty() {
                factors.push(monomial_name(self.names, &t.exps));
            }
            match (k, t.int < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Parses sums of products of integers, `h`, `<a>`, `I` and generator powers.
pub fn parse_polynomial(s: &str, names: &[String]) -> Result<Polynomial> {
    let mut p = Parser { s: s.as_bytes(), pos: 0, names };
    let out = p.sum()?;
    p.ws();
    if p.pos < p.s.len() {
        return Err(p.err("unexpected input"));
    }
    Ok(out)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse { pos: self.pos, msg: msg.into() }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn int(&mut self) -> Result<i64> {
        self.ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().map_err(|_| {
            self.pos = start;
            self.err("expected an integer")
        })
    }

    fn sum(&mut self) -> Result<Polynomial> {
        let mut terms = vec![];
        let mut sign = 1;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                sign = -1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let mut t = self.product()?;
            t.int *= sign;
            terms.push(t);
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(Polynomial { terms })
    }

    fn product(&mut self) -> Result<Term> {
        let mut t = Term { int: 1, atoms: vec![], exps: vec![0; self.names.len()] };
        loop {
            self.factor(&mut t)?;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(t);
            }
        }
    }

    fn factor(&mut self, t: &mut Term) -> Result<()> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => t.int *= self.int()?,
            Some(b'<') => {
                self.pos += 1;
                let a = self.int()?;
                if self.peek() != Some(b'>') {
                    return Err(self.err("expected '>'"));
                }
                self.pos += 1;
                t.atoms.push(Atom::Class(a));
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                let mut e = 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    e = self.int()?;
                    if e < 0 {
                        return Err(self.err("negative exponent"));
                    }
                }
                if let Some(k) = self.names.iter().position(|n| n == name) {
                    t.exps[k] += e as u32;
                } else {
                    let atom = match name {
                        "h" => Atom::H,
                        "I" => Atom::Ideal,
                        _ => {
                            self.pos = start;
                            return Err(self.err(&format!("unknown generator {name}")));
                        }
                    };
                    t.atoms.extend(std::iter::repeat(atom).take(e as usize));
                }
            }
            _ => return Err(self.err("expected a factor")),
        }
        Ok(())
    }
}
