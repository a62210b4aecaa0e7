//! Entry text for the aligned grid: `1`, `-t/2`, `t^2/36`, `2t/3 + 1`.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact::{parse_scalar, Poly, Ring, Scalar};

pub trait EntryText {
    fn entry_text(&self) -> String;
}

impl EntryText for Scalar {
    fn entry_text(&self) -> String {
        entry_text(&Poly::constant(self.clone()))
    }
}

impl EntryText for Poly {
    fn entry_text(&self) -> String {
        entry_text(self)
    }
}

/// Highest power first, no spaces inside a term.
pub fn entry_text(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push(if c.is_negative() { '-' } else { '+' });
        }
        let a = c.abs();
        let num = a.numer();
        let den = a.denom();
        let var = match k {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{k}"),
        };
        if k == 0 || !num.is_one() {
            out.push_str(&num.to_string());
        }
        out.push_str(&var);
        if !den.is_one() {
            out.push('/');
            out.push_str(&den.to_string());
        }
    }
    out
}

/// Inverse of [`entry_text`]; also accepts a bare rational.
pub fn parse_entry(s: &str) -> Result<Poly> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty entry".into()));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (pos, ch) in s.char_indices().skip(1) {
        if ch == '+' || ch == '-' {
            terms.push(&s[start..pos]);
            start = pos;
        }
    }
    terms.push(&s[start..]);
    let mut acc = Poly::zero();
    for term in terms {
        acc = acc.add(&parse_term(term)?);
    }
    Ok(acc)
}

fn parse_term(term: &str) -> Result<Poly> {
    let (neg, body) = match term.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, term.strip_prefix('+').unwrap_or(term)),
    };
    let bad = || Error::Parse(format!("bad entry term {term:?}"));
    let (head, den) = match body.split_once('/') {
        Some((h, d)) => (h, Some(d)),
        None => (body, None),
    };
    let (num, k) = match head.find('t') {
        None => (head, 0),
        Some(p) => {
            let k = match &head[p + 1..] {
                "" => 1,
                rest => rest.strip_prefix('^').and_then(|e| e.parse().ok()).ok_or_else(bad)?,
            };
            (&head[..p], k)
        }
    };
    let num = if num.is_empty() && k > 0 { "1" } else { num };
    let text = match den {
        Some(d) => format!("{num}/{d}"),
        None => num.to_string(),
    };
    let mut c = parse_scalar(&text).map_err(|_| bad())?;
    if neg {
        c = -c;
    }
    Ok(Poly::monomial(c, k))
}
