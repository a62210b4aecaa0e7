//! Human-readable tensor text: `2 e12^e32 - 1/3 e11@e22`.
//!
//! `^` is the wedge `½(a ⊗ b − b ⊗ a)` and `@` the plain tensor product.
//! Skew 2-tensors print in wedge form, everything else with `@`. Matrix
//! units with an index above 9 print as `e{10,3}`.

use num_traits::{One, Signed};

use super::Tensor;
use crate::error::{Error, Result};
use crate::exact::{parse_scalar, q, Scalar};

fn unit_name(n: usize, i: usize, j: usize) -> String {
    if n <= 9 {
        format!("e{i}{j}")
    } else {
        format!("e{{{i},{j}}}")
    }
}

fn coeff_text(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn join_terms(terms: Vec<(Scalar, String)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (c, body)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if k == 0 && neg {
            out.push(' ');
        }
        if !a.is_one() {
            out.push_str(&coeff_text(&a));
            out.push(' ');
        }
        out.push_str(&body);
    }
    out
}

/// Text form of a tensor over `Q`.
pub fn to_pretty<const D: usize>(t: &Tensor<Scalar, D>) -> String {
    let n = t.n();
    let mut terms = Vec::new();
    let swap = |idx: &[usize; D]| {
        let mut s = *idx;
        s.rotate_left(2);
        s
    };
    if D == 4 && t.terms().all(|(idx, c)| t.get(&swap(idx)) == -c.clone()) {
        for (idx, c) in t.terms() {
            if (idx[0], idx[1]) < (idx[2], idx[3]) {
                let body = format!("{}^{}", unit_name(n, idx[0], idx[1]), unit_name(n, idx[2], idx[3]));
                terms.push((c * Scalar::from_integer(2.into()), body));
            }
        }
    } else {
        for (idx, c) in t.terms() {
            let names: Vec<String> = idx.chunks(2).map(|p| unit_name(n, p[0], p[1])).collect();
            terms.push((c.clone(), names.join("@")));
        }
    }
    join_terms(terms)
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().map_err(|_| self.err("expected index"))
    }

    fn unit(&mut self) -> Result<(usize, usize)> {
        if self.peek() != Some(b'e') {
            return Err(self.err("expected matrix unit"));
        }
        self.pos += 1;
        if self.s.get(self.pos) == Some(&b'{') {
            self.pos += 1;
            let i = self.number()?;
            if self.s.get(self.pos) != Some(&b',') {
                return Err(self.err("expected ','"));
            }
            self.pos += 1;
            let j = self.number()?;
            if self.s.get(self.pos) != Some(&b'}') {
                return Err(self.err("expected '}'"));
            }
            self.pos += 1;
            Ok((i, j))
        } else {
            let d: Vec<usize> = self.s[self.pos..]
                .iter()
                .take(2)
                .filter(|b| b.is_ascii_digit())
                .map(|b| (b - b'0') as usize)
                .collect();
            if d.len() != 2 {
                return Err(self.err("expected two index digits"));
            }
            self.pos += 2;
            Ok((d[0], d[1]))
        }
    }

    fn coefficient(&mut self) -> Result<Scalar> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_digit() || self.s[self.pos] == b'/') {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(Scalar::one());
        }
        parse_scalar(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }
}

/// Parses the text form back into a tensor with `D / 2` slots.
pub fn parse_pretty<const D: usize>(n: usize, text: &str) -> Result<Tensor<Scalar, D>> {
    let mut cur = Cursor { s: text.as_bytes(), pos: 0 };
    let mut out = Tensor::zero(n);
    if text.trim() == "0" {
        return Ok(out);
    }
    let mut first = true;
    while cur.peek().is_some() {
        let mut sign = Scalar::one();
        match cur.peek() {
            Some(b'+') if !first => cur.pos += 1,
            Some(b'-') => {
                cur.pos += 1;
                sign = -sign;
            }
            _ if first => {}
            _ => return Err(cur.err("expected '+' or '-'")),
        }
        first = false;
        let c = cur.coefficient()? * sign;
        let mut units = vec![cur.unit()?];
        let mut op = None;
        while let Some(b) = cur.peek().filter(|b| *b == b'^' || *b == b'@') {
            if op.is_some_and(|o| o != b) {
                return Err(cur.err("mixed '^' and '@'"));
            }
            op = Some(b);
            cur.pos += 1;
            units.push(cur.unit()?);
        }
        if units.len() != D / 2 {
            return Err(cur.err(&format!("expected {} factors", D / 2)));
        }
        if units.iter().any(|&(i, j)| i == 0 || j == 0 || i > n || j > n) {
            return Err(Error::OutOfRange(format!("matrix unit outside n = {n}")));
        }
        let mut idx = [0; D];
        for (s, (i, j)) in units.iter().enumerate() {
            idx[2 * s] = *i;
            idx[2 * s + 1] = *j;
        }
        if op == Some(b'^') {
            if D != 4 {
                return Err(cur.err("'^' joins exactly two factors"));
            }
            let half = &c * q(1, 2);
            out.add_term(idx, &half);
            let mut swapped = [0; D];
            swapped[..2].copy_from_slice(&idx[2..4]);
            swapped[2..4].copy_from_slice(&idx[..2]);
            out.add_term(swapped, &-half);
        } else {
            out.add_term(idx, &c);
        }
    }
    Ok(out)
}
