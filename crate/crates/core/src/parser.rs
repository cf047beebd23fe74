//! Recursive-descent parser for the ring-spec grammar.
//!
//! ```text
//! spec := term ("x" term)*
//! term := "Z" nat | "GF(" nat ("," nat)? ")" | catalog-id | alias | "(" spec ")"
//! ```
//!
//! Whitespace is ignored everywhere. Catalog ids are `Z2X2 Z2X3 Z4A Z2XY Z4B`;
//! the aliases are the quotient spellings `Z2[x]/(x^2)`, `Z2[x]/(x^3)`,
//! `Z4[x]/(2x,x^2-2)`, `Z2[x,y]/(x^2,xy,y^2)` and `Z4[x]/(x^2,2x)`. Named
//! tokens are matched before `Z<n>`, so the `x` inside an alias is never read
//! as the product separator.

use std::fmt;

use crate::ring::{is_prime, prime_power, Atom};
use crate::spec::RingSpec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseDiagnostic {
    /// Byte offset into the original input.
    pub position: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.position, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected one of: {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec, ParseDiagnostic> {
    let mut compact = Vec::with_capacity(text.len());
    let mut offsets = Vec::with_capacity(text.len() + 1);
    for (i, b) in text.bytes().enumerate() {
        if !b.is_ascii_whitespace() {
            compact.push(b);
            offsets.push(i);
        }
    }
    offsets.push(text.len());
    let mut p = Parser { src: &compact, offsets: &offsets, pos: 0 };
    let spec = p.spec()?;
    if p.pos < compact.len() {
        return Err(p.error(p.pos, "unexpected input after ring spec", &["\"x\"", "end of input"]));
    }
    Ok(spec)
}

fn term_tokens() -> Vec<&'static str> {
    let mut v = vec!["Z<n>", "GF(q)", "GF(p,k)", "(spec)"];
    for a in Atom::NAMED {
        v.push(a.catalog_id().unwrap());
        v.push(a.alias().unwrap());
    }
    v
}

struct Parser<'a> {
    src: &'a [u8],
    offsets: &'a [usize],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, at: usize, message: impl Into<String>, expected: &[&str]) -> ParseDiagnostic {
        ParseDiagnostic {
            position: self.offsets[at.min(self.src.len())],
            message: message.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn spec(&mut self) -> Result<RingSpec, ParseDiagnostic> {
        let mut terms = vec![self.term()?];
        while self.eat(b'x') {
            terms.push(self.term()?);
        }
        Ok(RingSpec::product(terms))
    }

    fn term(&mut self) -> Result<RingSpec, ParseDiagnostic> {
        let rest = &self.src[self.pos..];
        // longest named token first
        let mut named: Option<(Atom, usize)> = None;
        for atom in Atom::NAMED {
            for tok in [atom.alias().unwrap(), atom.catalog_id().unwrap()] {
                if rest.starts_with(tok.as_bytes()) && named.map_or(true, |(_, len)| tok.len() > len) {
                    named = Some((atom, tok.len()));
                }
            }
        }
        if let Some((atom, len)) = named {
            self.pos += len;
            return Ok(RingSpec::Atom(atom));
        }
        let tokens = term_tokens();
        match self.peek() {
            Some(b'Z') => {
                self.pos += 1;
                let at = self.pos;
                let n = self.nat()?;
                if n < 2 {
                    return Err(self.error(at, format!("Z{n}: modulus must be at least 2"), &[]));
                }
                Ok(RingSpec::Atom(Atom::Zn(n)))
            }
            Some(b'G') if rest.starts_with(b"GF(") => {
                self.pos += 3;
                let at = self.pos;
                let first = self.nat()?;
                let atom = if self.eat(b',') {
                    let k_at = self.pos;
                    let k = self.nat()?;
                    if !is_prime(first) {
                        return Err(self.error(at, format!("GF({first},{k}): {first} is not prime"), &[]));
                    }
                    if k == 0 || k > u32::MAX as u64 {
                        return Err(self.error(k_at, format!("GF({first},{k}): degree must be a positive integer"), &[]));
                    }
                    Atom::Gf { p: first, k: k as u32 }
                } else {
                    match prime_power(first) {
                        Some((p, k)) => Atom::Gf { p, k },
                        None => {
                            return Err(self.error(at, format!("GF({first}): {first} is not a prime power"), &[]))
                        }
                    }
                };
                if !self.eat(b')') {
                    return Err(self.error(self.pos, "expected ')' to close GF(", &["\")\"", "\",\""]));
                }
                Ok(RingSpec::Atom(atom))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.spec()?;
                if !self.eat(b')') {
                    return Err(self.error(self.pos, "expected ')'", &["\"x\"", "\")\""]));
                }
                Ok(inner)
            }
            None => Err(self.error(self.pos, "unexpected end of input", &tokens)),
            Some(_) => Err(self.error(self.pos, "expected a ring term", &tokens)),
        }
    }

    fn nat(&mut self) -> Result<u64, ParseDiagnostic> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(start, "expected a natural number", &["<digits>"]));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.error(start, "number too large", &[]))
    }
}
