//! Exact scalars.
//!
//! A [`Scalar`] is either an element of a cyclotomic field Q(ζ_n), stored as a
//! coefficient vector reduced modulo Φ_n, or an element of the rational
//! function field Q(t). The second mode exists for parameters that must not be
//! roots of unity. Values of different cyclotomic orders combine in the field
//! of the least common multiple order. Mixing Q(t) with an irrational
//! cyclotomic value is not supported and panics.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::{cyclotomic, QPoly, Q};

#[derive(Clone, Debug)]
pub struct Scalar {
    repr: Repr,
}

#[derive(Clone, Debug)]
enum Repr {
    /// Polynomial in ζ_n, reduced mod Φ_n and trimmed. Rationals always use n = 1.
    Cyc { n: u32, c: Vec<Q> },
    /// num/den in Q(t), coprime, den monic, not constant.
    Fun { num: QPoly, den: QPoly },
}

fn q_int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

fn trim(mut c: Vec<Q>) -> Vec<Q> {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

fn reduce_mod(c: Vec<Q>, n: u32) -> Vec<Q> {
    let phi = cyclotomic(n);
    let deg = phi.degree().unwrap();
    if c.len() <= deg {
        return trim(c);
    }
    QPoly::from_coeffs(c).rem(&phi).into_coeffs()
}

/// Re-expresses a polynomial in ζ_from as one in ζ_to, where from | to.
fn lift(c: &[Q], from: u32, to: u32) -> Vec<Q> {
    if from == to || c.len() <= 1 {
        return c.to_vec();
    }
    let k = (to / from) as usize;
    let mut v = vec![Q::zero(); (c.len() - 1) * k + 1];
    for (i, x) in c.iter().enumerate() {
        v[i * k] = x.clone();
    }
    reduce_mod(v, to)
}

fn lcm(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { repr: Repr::Cyc { n: 1, c: Vec::new() } }
    }

    pub fn one() -> Self {
        Scalar::from_rational(Q::one())
    }

    pub fn from_int(v: i64) -> Self {
        Scalar::from_rational(q_int(v))
    }

    pub fn from_rational(q: Q) -> Self {
        Scalar { repr: Repr::Cyc { n: 1, c: trim(vec![q]) } }
    }

    pub fn frac(p: i64, q: i64) -> Self {
        Scalar::from_rational(Q::new(BigInt::from(p), BigInt::from(q)))
    }

    /// ζ_n^k for a fixed primitive n-th root of unity ζ_n = exp(2πi/n).
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        assert!(n >= 1, "root of unity order must be positive");
        let e = k.rem_euclid(n as i64) as usize;
        let mut c = vec![Q::zero(); e + 1];
        c[e] = Q::one();
        Scalar::cyc(n, reduce_mod(c, n))
    }

    pub fn zeta(n: u32) -> Self {
        Scalar::zeta_pow(n, 1)
    }

    /// The indeterminate t of Q(t).
    pub fn t() -> Self {
        Scalar::fun(QPoly::x(), QPoly::one())
    }

    /// Builds `p(ζ_n)` from coefficients, reducing mod Φ_n.
    pub fn from_cyclotomic_coeffs(n: u32, coeffs: Vec<Q>) -> Self {
        Scalar::cyc(n, reduce_mod(coeffs, n))
    }

    fn cyc(n: u32, c: Vec<Q>) -> Self {
        let c = trim(c);
        let n = if c.len() <= 1 { 1 } else { n };
        Scalar { repr: Repr::Cyc { n, c } }
    }

    fn fun(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in Q(t)");
        if num.is_zero() {
            return Scalar::zero();
        }
        let g = num.gcd(&den);
        let (mut num, _) = num.divrem(&g);
        let (mut den, _) = den.divrem(&g);
        let l = den.lead().unwrap().recip();
        num = num.scale(&l);
        den = den.scale(&l);
        if den.degree() == Some(0) && num.degree() == Some(0) {
            return Scalar::from_rational(num.coeff(0));
        }
        Scalar { repr: Repr::Fun { num, den } }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.repr, Repr::Cyc { c, .. } if c.is_empty())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.repr, Repr::Cyc { n: 1, c } if c.len() == 1 && c[0].is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(&self.repr, Repr::Cyc { n: 1, .. })
    }

    pub fn is_transcendental(&self) -> bool {
        matches!(self.repr, Repr::Fun { .. })
    }

    pub fn to_rational(&self) -> Option<Q> {
        match &self.repr {
            Repr::Cyc { n: 1, c } => Some(c.first().cloned().unwrap_or_else(Q::zero)),
            _ => None,
        }
    }

    /// The cyclotomic order the value currently lives in (1 for rationals and Q(t)).
    pub fn order(&self) -> u32 {
        match &self.repr {
            Repr::Cyc { n, .. } => *n,
            Repr::Fun { .. } => 1,
        }
    }

    fn as_fun(&self) -> (QPoly, QPoly) {
        match &self.repr {
            Repr::Fun { num, den } => (num.clone(), den.clone()),
            Repr::Cyc { n: 1, c } => (QPoly::from_coeffs(c.clone()), QPoly::one()),
            Repr::Cyc { .. } => panic!("cannot mix Q(t) with an irrational cyclotomic scalar"),
        }
    }

    fn binop(
        &self,
        o: &Scalar,
        cyc: impl Fn(u32, &[Q], &[Q]) -> Scalar,
        fun: impl Fn((QPoly, QPoly), (QPoly, QPoly)) -> Scalar,
    ) -> Scalar {
        match (&self.repr, &o.repr) {
            (Repr::Cyc { n: a, c: x }, Repr::Cyc { n: b, c: y }) => {
                if a == b {
                    cyc(*a, x, y)
                } else if *a == 1 {
                    cyc(*b, x, y)
                } else if *b == 1 {
                    cyc(*a, x, y)
                } else {
                    let l = lcm(*a, *b);
                    cyc(l, &lift(x, *a, l), &lift(y, *b, l))
                }
            }
            _ => fun(self.as_fun(), o.as_fun()),
        }
    }

    pub fn inv(&self) -> Scalar {
        match &self.repr {
            Repr::Cyc { n, c } => {
                assert!(!c.is_empty(), "inverse of zero");
                if c.len() == 1 {
                    return Scalar::from_rational(c[0].recip());
                }
                let phi = cyclotomic(*n);
                let (g, s, _) = QPoly::from_coeffs(c.clone()).ext_gcd(&phi);
                debug_assert!(g == QPoly::one());
                Scalar::cyc(*n, s.into_coeffs())
            }
            Repr::Fun { num, den } => Scalar::fun(den.clone(), num.clone()),
        }
    }

    pub fn pow(&self, e: i64) -> Scalar {
        if e < 0 {
            return self.inv().pow(-e);
        }
        let mut base = self.clone();
        let mut acc = Scalar::one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// True iff the value is a root of unity. Non-constant elements of Q(t) never are.
    pub fn is_root_of_unity(&self) -> bool {
        match &self.repr {
            Repr::Fun { .. } => false,
            Repr::Cyc { n, c } => {
                if c.is_empty() {
                    return false;
                }
                if c.len() == 1 {
                    return c[0].abs().is_one();
                }
                // Roots of unity in Q(ζ_n) have order dividing lcm(2, n).
                self.pow(lcm(2, *n) as i64).is_one()
            }
        }
    }

    /// Multiplicative order if the value is a root of unity.
    pub fn root_order(&self) -> Option<u32> {
        if !self.is_root_of_unity() {
            return None;
        }
        let m = lcm(2, self.order());
        (1..=m).find(|&d| m % d == 0 && self.pow(d as i64).is_one())
    }

    /// Encodes as "p(z)/q" with integer polynomial p in z = ζ_order and positive integer q.
    /// Fails if the value does not lie in Q(ζ_order).
    pub fn to_z_string(&self, order: u32) -> Result<String, ScalarError> {
        let (n, c) = match &self.repr {
            Repr::Cyc { n, c } => (*n, c),
            Repr::Fun { .. } => return Err(ScalarError::NotInField { value: self.to_string(), order }),
        };
        if order % n != 0 {
            return Err(ScalarError::NotInField { value: self.to_string(), order });
        }
        let c = lift(c, n, order);
        let mut den = BigInt::one();
        for x in &c {
            den = den.lcm(x.denom());
        }
        let ints: Vec<BigInt> = c.iter().map(|x| (x * Q::from_integer(den.clone())).to_integer()).collect();
        let p = format_poly_int(&ints, "z");
        let nterms = ints.iter().filter(|x| !x.is_zero()).count();
        Ok(if den.is_one() {
            p
        } else if nterms > 1 {
            format!("({p})/{den}")
        } else {
            format!("{p}/{den}")
        })
    }

    /// Parses a scalar where `z` stands for ζ_order.
    pub fn parse_z(s: &str, order: u32) -> Result<Scalar, ScalarError> {
        Parser::new(s, Some(order)).parse()
    }

    /// Parses a scalar; `z` is rejected, `zetaN` and `t` are accepted.
    pub fn parse(s: &str) -> Result<Scalar, ScalarError> {
        Parser::new(s, None).parse()
    }
}

fn format_coeff_term(c: &Q, mono: &str, first: bool, out: &mut String) {
    let neg = c.is_negative();
    let a = c.abs();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push(if neg { '-' } else { '+' });
    }
    if mono.is_empty() {
        out.push_str(&a.to_string());
    } else if a.is_one() {
        out.push_str(mono);
    } else {
        out.push_str(&a.to_string());
        out.push('*');
        out.push_str(mono);
    }
}

fn mono_name(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

fn format_poly(c: &[Q], var: &str) -> String {
    let mut out = String::new();
    for k in (0..c.len()).rev() {
        if c[k].is_zero() {
            continue;
        }
        format_coeff_term(&c[k], &mono_name(var, k), out.is_empty(), &mut out);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn format_poly_int(c: &[BigInt], var: &str) -> String {
    let q: Vec<Q> = c.iter().map(|x| Q::from_integer(x.clone())).collect();
    format_poly(&q, var)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Cyc { n: 1, c } => match c.first() {
                None => write!(f, "0"),
                Some(q) => write!(f, "{q}"),
            },
            Repr::Cyc { n, c } => write!(f, "{}", format_poly(c, &format!("zeta{n}"))),
            Repr::Fun { num, den } => {
                let ns = format_poly(num.coeffs(), "t");
                if *den == QPoly::one() {
                    write!(f, "{ns}")
                } else {
                    write!(f, "({ns})/({})", format_poly(den.coeffs(), "t"))
                }
            }
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, o: &Scalar) -> bool {
        match (&self.repr, &o.repr) {
            (Repr::Cyc { n: a, c: x }, Repr::Cyc { n: b, c: y }) => {
                if a == b {
                    x == y
                } else {
                    // Canonical reduced forms of equal values share the same minimal order
                    // only up to lifting, so compare by difference.
                    (self - o).is_zero()
                }
            }
            (Repr::Fun { num: a, den: b }, Repr::Fun { num: c, den: d }) => a == c && b == d,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl From<i32> for Scalar {
    fn from(v: i32) -> Self {
        Scalar::from_int(v as i64)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::from_rational(q)
    }
}

fn cyc_add(n: u32, x: &[Q], y: &[Q]) -> Scalar {
    let len = x.len().max(y.len());
    let z = (0..len)
        .map(|i| match (x.get(i), y.get(i)) {
            (Some(a), Some(b)) => a + b,
            (Some(a), None) => a.clone(),
            (None, Some(b)) => b.clone(),
            (None, None) => Q::zero(),
        })
        .collect();
    Scalar::cyc(n, z)
}

fn cyc_sub(n: u32, x: &[Q], y: &[Q]) -> Scalar {
    let len = x.len().max(y.len());
    let z = (0..len)
        .map(|i| match (x.get(i), y.get(i)) {
            (Some(a), Some(b)) => a - b,
            (Some(a), None) => a.clone(),
            (None, Some(b)) => -b,
            (None, None) => Q::zero(),
        })
        .collect();
    Scalar::cyc(n, z)
}

fn cyc_mul(n: u32, x: &[Q], y: &[Q]) -> Scalar {
    if x.is_empty() || y.is_empty() {
        return Scalar::zero();
    }
    if x.len() == 1 {
        return Scalar::cyc(n, y.iter().map(|b| &x[0] * b).collect());
    }
    if y.len() == 1 {
        return Scalar::cyc(n, x.iter().map(|a| a * &y[0]).collect());
    }
    let mut z = vec![Q::zero(); x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            z[i + j] += a * b;
        }
    }
    Scalar::cyc(n, reduce_mod(z, n))
}

fn fun_add((a, b): (QPoly, QPoly), (c, d): (QPoly, QPoly)) -> Scalar {
    Scalar::fun(a.mul(&d).add(&c.mul(&b)), b.mul(&d))
}

fn fun_sub((a, b): (QPoly, QPoly), (c, d): (QPoly, QPoly)) -> Scalar {
    Scalar::fun(a.mul(&d).sub(&c.mul(&b)), b.mul(&d))
}

fn fun_mul((a, b): (QPoly, QPoly), (c, d): (QPoly, QPoly)) -> Scalar {
    Scalar::fun(a.mul(&c), b.mul(&d))
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        if let (Repr::Cyc { n: 1, c: x }, Repr::Cyc { n: 1, c: y }) = (&self.repr, &o.repr) {
            return cyc_add(1, x, y);
        }
        self.binop(o, cyc_add, fun_add)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.binop(o, cyc_sub, fun_sub)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if let (Repr::Cyc { n: 1, c: x }, Repr::Cyc { n: 1, c: y }) = (&self.repr, &o.repr) {
            return cyc_mul(1, x, y);
        }
        self.binop(o, cyc_mul, fun_mul)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        self * &o.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.repr {
            Repr::Cyc { n, c } => Scalar { repr: Repr::Cyc { n: *n, c: c.iter().map(|x| -x).collect() } },
            Repr::Fun { num, den } => Scalar { repr: Repr::Fun { num: num.neg(), den: den.clone() } },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = &*self + o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = &*self - o;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("cannot parse scalar {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("scalar {value} does not lie in Q(zeta{order})")]
    NotInField { value: String, order: u32 },
}

impl FromStr for Scalar {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scalar::parse(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

struct Parser {
    input: String,
    toks: Vec<Tok>,
    pos: usize,
    z_order: Option<u32>,
}

impl Parser {
    fn new(s: &str, z_order: Option<u32>) -> Self {
        Parser { input: s.to_string(), toks: Vec::new(), pos: 0, z_order }
    }

    fn err(&self, reason: impl Into<String>) -> ScalarError {
        ScalarError::Parse { input: self.input.clone(), reason: reason.into() }
    }

    fn lex(&mut self) -> Result<(), ScalarError> {
        let chars: Vec<char> = self.input.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let ch = chars[i];
            if ch.is_whitespace() {
                i += 1;
            } else if ch.is_ascii_digit() {
                let st = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[st..i].iter().collect();
                self.toks.push(Tok::Num(s.parse().unwrap()));
            } else if ch.is_ascii_alphabetic() {
                let st = i;
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                self.toks.push(Tok::Ident(chars[st..i].iter().collect()));
            } else if "+-*/^()".contains(ch) {
                self.toks.push(Tok::Op(ch));
                i += 1;
            } else {
                return Err(self.err(format!("unexpected character {ch:?}")));
            }
        }
        Ok(())
    }

    fn parse(mut self) -> Result<Scalar, ScalarError> {
        self.lex()?;
        if self.toks.is_empty() {
            return Err(self.err("empty input"));
        }
        let v = self.expr()?;
        if self.pos != self.toks.len() {
            return Err(self.err("trailing input"));
        }
        Ok(v)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let mut v = self.term()?;
        loop {
            if self.eat('+') {
                v = v + self.term()?;
            } else if self.eat('-') {
                v = v - self.term()?;
            } else {
                return Ok(v);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut v = self.unary()?;
        loop {
            if self.eat('*') {
                v = v * self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                if d.is_zero() {
                    return Err(self.err("division by zero"));
                }
                v = v / d;
            } else {
                return Ok(v);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, ScalarError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar, ScalarError> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let e = match self.peek().cloned() {
                Some(Tok::Num(k)) => {
                    self.pos += 1;
                    k.to_i64().ok_or_else(|| self.err("exponent too large"))?
                }
                _ => return Err(self.err("expected integer exponent")),
            };
            let e = if neg { -e } else { e };
            if e < 0 && base.is_zero() {
                return Err(self.err("negative power of zero"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek().cloned() {
            Some(Tok::Num(k)) => {
                self.pos += 1;
                Ok(Scalar::from_rational(Q::from_integer(k)))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(Tok::Ident(id)) => {
                self.pos += 1;
                if id == "t" {
                    Ok(Scalar::t())
                } else if id == "z" {
                    match self.z_order {
                        Some(n) => Ok(Scalar::zeta(n)),
                        None => Err(self.err("'z' needs a field order")),
                    }
                } else if id == "i" {
                    Ok(Scalar::zeta(4))
                } else if let Some(rest) = id.strip_prefix("zeta") {
                    let n: u32 = rest.parse().map_err(|_| self.err(format!("bad root of unity {id:?}")))?;
                    if n == 0 {
                        return Err(self.err("zeta0 is not a root of unity"));
                    }
                    Ok(Scalar::zeta(n))
                } else {
                    Err(self.err(format!("unknown identifier {id:?}")))
                }
            }
            _ => Err(self.err("unexpected end or operator")),
        }
    }
}
