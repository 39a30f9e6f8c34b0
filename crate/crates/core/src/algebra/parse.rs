//! Text syntax for polynomials: signed sums of `*`-separated factors,
//! each factor an integer, a variable, or `var^exp`.

use super::monomial::Monomial;
use super::poly::{PolyRing, Polynomial};
use crate::error::{Error, Result};

/// True if `name` matches `[A-Za-z][A-Za-z0-9_]*`.
pub fn is_valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut pairs = Vec::new();
        let bytes = s.as_bytes();
        let mut start = 0;
        let mut sign = 1i64;
        if bytes[0] == b'+' || bytes[0] == b'-' {
            sign = if bytes[0] == b'-' { -1 } else { 1 };
            start = 1;
        }
        let mut i = start;
        loop {
            if i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-' {
                let term = &s[start..i];
                if term.is_empty() {
                    return Err(Error::Parse(format!("missing term in `{text}`")));
                }
                let (mon, c) = self.parse_term(term)?;
                pairs.push((mon, sign * c));
                if i == bytes.len() {
                    break;
                }
                sign = if bytes[i] == b'-' { -1 } else { 1 };
                start = i + 1;
            }
            i += 1;
        }
        self.from_terms(pairs)
    }

    fn parse_term(&self, term: &str) -> Result<(Monomial, i64)> {
        let n = self.nvars();
        let mut exps = vec![0u32; n];
        let p = self.characteristic() as i64;
        let mut coeff = 1i64;
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(Error::Parse(format!("empty factor in `{term}`")));
            }
            if factor.as_bytes()[0].is_ascii_digit() {
                let c: i64 = factor
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("malformed coefficient `{factor}`")))
                    .map(|v| (v % p as u64) as i64)?;
                coeff = (coeff * c) % p;
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((name, e)) => {
                    let exp = e
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("malformed exponent `{e}` in `{factor}`")))?;
                    (name, exp)
                }
                None => (factor, 1),
            };
            if !is_valid_var_name(name) {
                return Err(Error::Parse(format!("malformed factor `{factor}`")));
            }
            let idx = self
                .names()
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::Parse(format!("undeclared variable `{name}`")))?;
            exps[idx] = exps[idx].checked_add(exp).ok_or(Error::ExponentOverflow)?;
        }
        Ok((Monomial::new(&exps), coeff))
    }
}
