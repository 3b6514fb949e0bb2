//! Form syntax: `<a,b> - <c> + h + 2*<1>`.

use field_arith::{FieldElement, FieldError, FieldRef};

use crate::error::{GwError, Result};
use crate::form::GWElement;

fn perr(pos: usize, msg: &str) -> GwError {
    GwError::Parse { pos, msg: msg.into() }
}

pub fn parse_form(field: &FieldRef, s: &str) -> Result<GWElement> {
    let b = s.as_bytes();
    let mut i = 0;
    let mut acc = GWElement::zero(field);
    let skip = |i: &mut usize| {
        while *i < b.len() && b[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    let mut first = true;
    loop {
        skip(&mut i);
        if i >= b.len() {
            if first {
                return Err(perr(i, "empty form"));
            }
            return Ok(acc);
        }
        let mut sign = 1;
        if b[i] == b'+' || b[i] == b'-' {
            sign = if b[i] == b'-' { -1 } else { 1 };
            i += 1;
            skip(&mut i);
        } else if !first {
            return Err(perr(i, "expected `+` or `-`"));
        }
        first = false;
        let start = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        let mut k: i64 = 1;
        if i > start {
            k = s[start..i].parse().map_err(|_| perr(start, "bad multiplicity"))?;
            skip(&mut i);
            if i < b.len() && b[i] == b'*' {
                i += 1;
                skip(&mut i);
            } else {
                acc = acc.add(&GWElement::integer(field, sign * k));
                continue;
            }
        }
        let term = if i < b.len() && b[i] == b'h' {
            i += 1;
            GWElement::hyperbolic(field)
        } else if i < b.len() && b[i] == b'<' {
            let open = i;
            let mut depth = 0;
            let mut j = i + 1;
            let mut parts = Vec::new();
            let mut last = j;
            loop {
                if j >= b.len() {
                    return Err(perr(open, "unclosed `<`"));
                }
                match b[j] {
                    b'(' => depth += 1,
                    b')' => depth -= 1,
                    b',' if depth == 0 => {
                        parts.push((last, &s[last..j]));
                        last = j + 1;
                    }
                    b'>' if depth == 0 => {
                        parts.push((last, &s[last..j]));
                        break;
                    }
                    _ => {}
                }
                j += 1;
            }
            i = j + 1;
            let entries = parts
                .into_iter()
                .map(|(at, p)| {
                    FieldElement::parse(field, p).map_err(|e| match e {
                        FieldError::Parse { pos, msg } => perr(at + pos, &msg),
                        other => other.into(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            GWElement::diagonal(field, &entries).map_err(|_| perr(open, "zero entry"))?
        } else {
            return Err(perr(i, "expected `<`, `h` or an integer"));
        };
        acc = acc.add(&term.scale(sign * k));
    }
}
