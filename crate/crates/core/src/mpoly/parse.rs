//! Text grammar for polynomials.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := int ['/' int] | var ['^' int]
//! var    := 'x' int | 'd' int
//! ```
//!
//! Whitespace is ignored. `x` variables belong to `S`, `d` variables to `T`;
//! mixing them is an error. Inhomogeneous input is rejected with the
//! offending degrees.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Exponent, Polynomial, Ring};
use crate::error::{Error, Result};

struct RawTerm {
    coeff: BigRational,
    vars: Vec<(usize, u32)>,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: Option<Ring>,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn small(&mut self) -> Result<u32> {
        let s = self.digits()?;
        match s.parse() {
            Ok(v) => Ok(v),
            Err(_) => self.err(format!("integer {s} out of range")),
        }
    }

    fn factor(&mut self, term: &mut RawTerm) -> Result<()> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits()?.parse().expect("digits");
                let mut value = BigRational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den: BigInt = self.digits()?.parse().expect("digits");
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    value /= BigRational::from_integer(den);
                }
                term.coeff *= value;
                Ok(())
            }
            Some(c @ (b'x' | b'd')) => {
                let ring = if c == b'x' { Ring::S } else { Ring::T };
                match self.ring {
                    Some(r) if r != ring => return self.err("mixed x and d variables"),
                    _ => self.ring = Some(ring),
                }
                self.pos += 1;
                let idx = self.small()? as usize;
                let mut exp = 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    exp = self.small()?;
                }
                term.vars.push((idx, exp));
                Ok(())
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }

    fn term(&mut self, sign: bool) -> Result<RawTerm> {
        let mut t = RawTerm {
            coeff: if sign { -BigRational::one() } else { BigRational::one() },
            vars: Vec::new(),
        };
        self.factor(&mut t)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut t)?;
        }
        Ok(t)
    }

    fn poly(&mut self) -> Result<Vec<RawTerm>> {
        let mut out = Vec::new();
        let mut neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            None => return self.err("empty polynomial"),
            _ => false,
        };
        loop {
            out.push(self.term(neg)?);
            match self.peek() {
                Some(b'+') => neg = false,
                Some(b'-') => neg = true,
                None => break,
                Some(c) => return self.err(format!("unexpected character '{}'", c as char)),
            }
            self.pos += 1;
        }
        Ok(out)
    }
}

fn parse_raw(s: &str) -> Result<(Vec<RawTerm>, Option<Ring>)> {
    let mut p = Parser { src: s.as_bytes(), pos: 0, ring: None };
    let terms = p.poly()?;
    Ok((terms, p.ring))
}

fn assemble(terms: Vec<RawTerm>, ring: Ring, nvars: usize) -> Result<Polynomial> {
    let mut built = Vec::with_capacity(terms.len());
    for t in terms {
        let mut e = vec![0u32; nvars];
        for (i, k) in t.vars {
            if i >= nvars {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("variable index {i} out of range for {nvars} variables"),
                });
            }
            e[i] += k;
        }
        built.push((Exponent::new(e), t.coeff));
    }
    Polynomial::try_from_terms(ring, nvars, built)
}

/// Parse a polynomial, inferring the ring from the variable letter (`S` if
/// there are no variables) and the variable count from the largest index.
pub fn parse_polynomial(s: &str) -> Result<Polynomial> {
    let (terms, ring) = parse_raw(s)?;
    let nvars = terms
        .iter()
        .flat_map(|t| t.vars.iter().map(|&(i, _)| i + 1))
        .max()
        .unwrap_or(1);
    assemble(terms, ring.unwrap_or(Ring::S), nvars)
}

/// Parse a polynomial with a fixed ring and variable count.
pub fn parse_polynomial_in(s: &str, ring: Ring, nvars: usize) -> Result<Polynomial> {
    let (terms, found) = parse_raw(s)?;
    if let Some(found) = found {
        if found != ring {
            return Err(Error::RingMismatch { expected: ring.name(), found: found.name() });
        }
    }
    assemble(terms, ring, nvars)
}
