//! Text input: family descriptors like `A:n=4,d=2,mu=1,q=zeta4^2` and elements like `u*f[1] - v*e[1]`.

use std::collections::BTreeMap;

use coalgebra_core::Scalar;
use thiserror::Error;

use crate::family::{build_a, build_anq, build_bmn, build_hinf, Family, ParamError};
use crate::word::{add_scaled, add_term, Element, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown family `{0}` (expected Hefuv, A, Anq, Hinf or Bmn)")]
    UnknownFamily(String),
    #[error("missing parameter `{0}`")]
    Missing(&'static str),
    #[error("unknown parameter `{0}`")]
    UnknownParam(String),
    #[error("bad value for `{key}`: {msg}")]
    BadValue { key: String, msg: String },
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("`{0}` mixes Q(t) with an irrational root of unity; use one field")]
    MixedFields(String),
    #[error("cannot parse element `{input}`: {msg}")]
    Element { input: String, msg: String },
}

fn params(s: &str) -> Result<BTreeMap<String, String>, ParseError> {
    let mut m = BTreeMap::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| ParseError::BadValue { key: part.into(), msg: "expected key=value".into() })?;
        m.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(m)
}

struct Params {
    map: BTreeMap<String, String>,
    seen: Vec<Scalar>,
}

impl Params {
    fn int(&mut self, key: &'static str) -> Result<i64, ParseError> {
        let v = self.map.remove(key).ok_or(ParseError::Missing(key))?;
        v.parse().map_err(|e: std::num::ParseIntError| ParseError::BadValue { key: key.into(), msg: e.to_string() })
    }

    fn scalar(&mut self, key: &'static str) -> Result<Scalar, ParseError> {
        let v = self.map.remove(key).ok_or(ParseError::Missing(key))?;
        let x = Scalar::parse(&v).map_err(|e| ParseError::BadValue { key: key.into(), msg: e.to_string() })?;
        self.seen.push(x.clone());
        let t = self.seen.iter().any(|y| y.is_transcendental());
        let irrational = self.seen.iter().any(|y| y.to_rational().is_none() && !y.is_transcendental());
        if t && irrational {
            return Err(ParseError::MixedFields(key.into()));
        }
        Ok(x)
    }

    fn finish(self) -> Result<(), ParseError> {
        match self.map.into_keys().next() {
            Some(k) => Err(ParseError::UnknownParam(k)),
            None => Ok(()),
        }
    }
}

/// Parses a family descriptor and checks the parameter constraints.
pub fn parse_descriptor(s: &str) -> Result<Family, ParseError> {
    let (name, rest) = s.split_once(':').unwrap_or((s, ""));
    let mut p = Params { map: params(rest)?, seen: Vec::new() };
    let fam = match name.trim() {
        "Hefuv" | "H" => Family::Hefuv,
        "A" => build_a(p.int("n")?, p.int("d")?, p.scalar("mu")?, p.scalar("q")?)?,
        "Anq" => build_anq(p.int("n")?, p.scalar("q")?)?,
        "Hinf" => build_hinf(p.scalar("chi")?, p.scalar("lambda")?)?,
        "Bmn" => build_bmn(p.int("m")?, p.int("n")?, p.scalar("lambda")?, p.scalar("s")?, p.scalar("t")?, p.scalar("k")?)?,
        other => return Err(ParseError::UnknownFamily(other.into())),
    };
    p.finish()?;
    Ok(fam)
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
    bmn: bool,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Element { input: self.src.into(), msg: format!("{} at position {}", msg.into(), self.pos) })
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

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.chars.get(self.pos), Some('-' | '+')) {
            self.pos += 1;
        }
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        match s.parse() {
            Ok(v) => Ok(v),
            Err(_) => self.err("expected an integer"),
        }
    }

    fn expr(&mut self) -> Result<Element, ParseError> {
        let mut acc = Element::new();
        let mut sign = Scalar::one();
        if self.eat('-') {
            sign = Scalar::from_int(-1);
        } else {
            self.eat('+');
        }
        loop {
            let t = self.term()?;
            add_scaled(&mut acc, &sign, &t);
            if self.eat('+') {
                sign = Scalar::one();
            } else if self.eat('-') {
                sign = Scalar::from_int(-1);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Element, ParseError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = mul(&acc, &self.power()?);
            } else if self.eat('/') {
                let d = self.int()?;
                if d == 0 {
                    return self.err("division by zero");
                }
                let mut out = Element::new();
                add_scaled(&mut out, &Scalar::frac(1, d), &acc);
                acc = out;
            } else if matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == '(') {
                acc = mul(&acc, &self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Element, ParseError> {
        let (base, letter) = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = self.int()?;
        if let Some(l) = letter {
            let w = match l {
                Letter::G(_) => vec![Letter::G(e)],
                Letter::GH(a, b) => vec![Letter::GH(a * e, b * e)],
                _ if e >= 0 => vec![l; e as usize],
                _ => return self.err("negative power of a nilpotent generator"),
            };
            let mut out = Element::new();
            add_term(&mut out, w, &Scalar::one());
            return Ok(out);
        }
        if e < 0 {
            return self.err("negative power of a composite expression");
        }
        let mut acc = unit();
        for _ in 0..e {
            acc = mul(&acc, &base);
        }
        Ok(acc)
    }

    /// Returns the atom and, for a single group generator or letter, that letter.
    fn atom(&mut self) -> Result<(Element, Option<Letter>), ParseError> {
        let Some(c) = self.peek() else { return self.err("unexpected end of input") };
        if c == '(' {
            self.pos += 1;
            let e = self.expr()?;
            if !self.eat(')') {
                return self.err("expected `)`");
            }
            return Ok((e, None));
        }
        if c.is_ascii_digit() {
            let n = self.int()?;
            return Ok((scalar(Scalar::from_int(n)), None));
        }
        if !c.is_ascii_alphabetic() {
            return self.err(format!("unexpected `{c}`"));
        }
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let ident: String = self.chars[start..self.pos].iter().collect();
        if let Some(n) = ident.strip_prefix("zeta") {
            return match n.parse::<u32>() {
                Ok(n) if n > 0 => Ok((scalar(Scalar::zeta(n)), None)),
                _ => self.err("bad root of unity"),
            };
        }
        if ident == "t" {
            return Ok((scalar(Scalar::t()), None));
        }
        if ident == "e" || ident == "f" {
            if !self.eat('[') {
                return self.err("expected `[` after e or f");
            }
            let i = self.int()?;
            if !self.eat(']') {
                return self.err("expected `]`");
            }
            let l = if ident == "e" { Letter::E(i) } else { Letter::F(i) };
            return Ok((word(vec![l]), Some(l)));
        }
        // A run like `uv` or `gx` is a product of single-letter generators.
        let mut letters = Vec::new();
        for ch in ident.chars() {
            letters.push(match ch {
                'g' if self.bmn => Letter::GH(1, 0),
                'h' if self.bmn => Letter::GH(0, 1),
                'g' => Letter::G(1),
                'x' => Letter::X,
                'y' => Letter::Y,
                'u' => Letter::U,
                'v' => Letter::V,
                _ => return self.err(format!("unknown generator `{ident}`")),
            });
        }
        let last = *letters.last().unwrap();
        if letters.len() == 1 {
            return Ok((word(letters), Some(last)));
        }
        // Only the final letter takes a following exponent.
        if self.peek() == Some('^') {
            letters.pop();
            let p = self.pow_letter(last)?;
            return Ok((mul(&word(letters), &p), None));
        }
        Ok((word(letters), None))
    }

    fn pow_letter(&mut self, l: Letter) -> Result<Element, ParseError> {
        self.eat('^');
        let e = self.int()?;
        let w = match l {
            Letter::G(_) => vec![Letter::G(e)],
            Letter::GH(a, b) => vec![Letter::GH(a * e, b * e)],
            _ if e >= 0 => vec![l; e as usize],
            _ => return self.err("negative power of a nilpotent generator"),
        };
        Ok(word(w))
    }
}

fn word(w: Vec<Letter>) -> Element {
    let mut e = Element::new();
    e.insert(w, Scalar::one());
    e
}

fn scalar(c: Scalar) -> Element {
    let mut e = Element::new();
    add_term(&mut e, vec![], &c);
    e
}

fn unit() -> Element {
    scalar(Scalar::one())
}

fn mul(a: &Element, b: &Element) -> Element {
    let mut out = Element::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            add_term(&mut out, w, &(ca * cb));
        }
    }
    out
}

/// Parses an element of the given family. The result is not normalized; the empty word
/// stands for the unit.
pub fn parse_element_in(family: &Family, s: &str) -> Result<Element, ParseError> {
    let mut p = Parser { src: s, chars: s.chars().collect(), pos: 0, bmn: matches!(family, Family::Bmn { .. }) };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

pub fn parse_element(s: &str) -> Result<Element, ParseError> {
    parse_element_in(&Family::Hefuv, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors() {
        let f = parse_descriptor("A:n=4,d=2,mu=1,q=zeta4^2").unwrap();
        assert_eq!(f, Family::A { n: 4, d: 2, mu: Scalar::one(), q: Scalar::from_int(-1) });
        assert!(matches!(
            parse_descriptor("A:n=4,d=3,mu=1,q=zeta3"),
            Err(ParseError::Param(ParamError::DoesNotDivide { .. }))
        ));
        assert!(matches!(parse_descriptor("A:n=4,d=2,mu=1"), Err(ParseError::Missing("q"))));
        assert!(matches!(parse_descriptor("Z"), Err(ParseError::UnknownFamily(_))));
        assert_eq!(parse_descriptor("Hefuv").unwrap(), Family::Hefuv);
    }

    #[test]
    fn elements() {
        let e = parse_element("u*f[1] - 2 v e[-1]").unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e[&vec![Letter::U, Letter::F(1)]], Scalar::one());
        assert_eq!(e[&vec![Letter::V, Letter::E(-1)]], Scalar::from_int(-2));
        let e = parse_element("e[2]uv").unwrap();
        assert!(e.contains_key(&vec![Letter::E(2), Letter::U, Letter::V]));
        let a = Family::A { n: 4, d: 2, mu: Scalar::one(), q: Scalar::from_int(-1) };
        let e = parse_element_in(&a, "g^-1x^2").unwrap();
        assert!(e.contains_key(&vec![Letter::G(-1), Letter::X, Letter::X]));
        let e = parse_element_in(&a, "gx^2").unwrap();
        assert!(e.contains_key(&vec![Letter::G(1), Letter::X, Letter::X]));
        assert!(parse_element("e[1").is_err());
    }
}
