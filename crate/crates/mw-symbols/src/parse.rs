//! Expression syntax: `2 + eta*[-1]`, `eta^2*[a,b]`, `[a][b]`, `<a>`, `h`, parentheses.

use field_arith::{FieldElement, FieldError, FieldRef};

use crate::error::{MwError, Result};
use crate::expr::MWExpr;

fn perr(pos: usize, msg: &str) -> MwError {
    MwError::Parse { pos, msg: msg.into() }
}

struct Parser<'a> {
    field: &'a FieldRef,
    src: &'a str,
    b: &'a [u8],
    i: usize,
}

pub fn parse_expr(field: &FieldRef, s: &str) -> Result<MWExpr> {
    let mut p = Parser { field, src: s, b: s.as_bytes(), i: 0 };
    let x = p.sum()?;
    p.skip();
    if p.i < p.b.len() {
        return Err(perr(p.i, "unexpected input"));
    }
    Ok(x)
}

impl Parser<'_> {
    fn skip(&mut self) {
        while self.i < self.b.len() && self.b[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip();
        self.b.get(self.i).copied()
    }

    fn sum(&mut self) -> Result<MWExpr> {
        let mut acc = MWExpr::zero(self.field);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    1
                }
                Some(b'-') => {
                    self.i += 1;
                    -1
                }
                _ if first => 1,
                _ => return Ok(acc),
            };
            first = false;
            acc = acc.add(&self.product()?.scale(sign));
        }
    }

    fn product(&mut self) -> Result<MWExpr> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => self.i += 1,
                Some(b'[' | b'<' | b'(') => {}
                _ => return Ok(acc),
            }
            acc = acc.mul(&self.factor()?);
        }
    }

    fn integer(&mut self) -> Option<u32> {
        let start = self.i;
        while self.i < self.b.len() && self.b[self.i].is_ascii_digit() {
            self.i += 1;
        }
        self.src[start..self.i].parse().ok()
    }

    fn factor(&mut self) -> Result<MWExpr> {
        let f = self.field;
        let at = self.i;
        match self.peek() {
            None => Err(perr(self.i, "expected a factor")),
            Some(c) if c.is_ascii_digit() => {
                let start = self.i;
                let n: i64 = self.integer().and_then(|n| i64::try_from(n).ok()).ok_or_else(|| perr(start, "integer too large"))?;
                Ok(MWExpr::integer(f, n))
            }
            Some(b'(') => {
                self.i += 1;
                let x = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(perr(self.i, "expected `)`"));
                }
                self.i += 1;
                Ok(x)
            }
            Some(b'[') => {
                let entries = self.entries(b']')?;
                MWExpr::symbol(&entries)
            }
            Some(b'<') => {
                let entries = self.entries(b'>')?;
                let mut x = MWExpr::zero(f);
                for a in &entries {
                    x = x.add(&MWExpr::unit_form(a)?);
                }
                Ok(x)
            }
            Some(b'h') if !self.ident_follows(1) => {
                self.i += 1;
                Ok(MWExpr::hyperbolic(f))
            }
            Some(b'e') if self.src[self.i..].starts_with("eta") && !self.ident_follows(3) => {
                self.i += 3;
                let mut k = 1;
                if self.peek() == Some(b'^') {
                    self.i += 1;
                    self.skip();
                    let start = self.i;
                    k = self.integer().ok_or_else(|| perr(start, "expected an exponent"))?;
                }
                Ok(MWExpr::eta(f, k))
            }
            _ => Err(perr(at.max(self.i), "expected a factor")),
        }
    }

    fn ident_follows(&self, len: usize) -> bool {
        self.b.get(self.i + len).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
    }

    /// Comma-separated field elements up to `close`.
    fn entries(&mut self, close: u8) -> Result<Vec<FieldElement>> {
        let open = self.i;
        self.i += 1;
        let mut out = vec![];
        let mut depth = 0usize;
        let mut start = self.i;
        loop {
            let Some(&c) = self.b.get(self.i) else {
                return Err(perr(open, "unclosed bracket"));
            };
            match c {
                b'(' => depth += 1,
                b')' => depth = depth.saturating_sub(1),
                b',' if depth == 0 => {
                    out.push(self.element(start, self.i)?);
                    start = self.i + 1;
                }
                c if c == close && depth == 0 => {
                    out.push(self.element(start, self.i)?);
                    self.i += 1;
                    return Ok(out);
                }
                _ => {}
            }
            self.i += 1;
        }
    }

    fn element(&self, start: usize, end: usize) -> Result<FieldElement> {
        let text = &self.src[start..end];
        if text.trim().is_empty() {
            return Err(perr(start, "empty symbol entry"));
        }
        let a = FieldElement::parse(self.field, text).map_err(|e| match e {
            FieldError::Parse { pos, msg } => perr(start + pos, &msg),
            e => e.into(),
        })?;
        if a.is_zero() {
            return Err(MwError::ZeroSymbol);
        }
        Ok(a)
    }
}
