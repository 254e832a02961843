//! The five families of presented Hopf algebras and their rewriting rules.

use coalgebra_core::Scalar;
use thiserror::Error;

use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// H(e±, f±, u, v).
    Hefuv,
    /// A(n, d, μ, q): g^n = 1, x^d = μ(1 − g^d), xg = qgx.
    A { n: i64, d: i64, mu: Scalar, q: Scalar },
    /// A(n, q): xg = qgx, x^n = 1 − g^n, g of infinite order.
    Anq { n: i64, q: Scalar },
    /// H_∞(χ, λ): xg = χ(g)gx + λ(g)(g − g²).
    Hinf { chi: Scalar, lambda: Scalar },
    /// B^{m,n}(λ, s, t, k).
    Bmn { m: i64, n: i64, lambda: Scalar, s: Scalar, t: Scalar, k: Scalar },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("{0} must be positive")]
    NotPositive(&'static str),
    #[error("d = {d} does not divide n = {n}")]
    DoesNotDivide { d: i64, n: i64 },
    #[error("q = {q} is not a root of unity of order {d}")]
    WrongOrder { q: String, d: i64 },
    #[error("chi(g) = {0} must be 1 or not a root of unity")]
    ChiRootOfUnity(String),
    #[error("chi(g) must be nonzero")]
    ChiZero,
    #[error("(m, n) = ({m}, {n}) is excluded: (m, n) must differ from (1, 1) and (-1, -1)")]
    ExcludedPair { m: i64, n: i64 },
    #[error("m + n = {0} must be even")]
    OddSum(i64),
    #[error("lambda must be nonzero")]
    LambdaZero,
    #[error("relations are inconsistent unless {0}")]
    Inconsistent(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// A rewrite of `word[start..end]` into a linear combination of words.
pub struct Redex {
    pub start: usize,
    pub end: usize,
    pub replacement: Vec<(Word, Scalar)>,
}

fn sign(i: i64) -> Scalar {
    if i.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    }
}

pub fn build_a(n: i64, d: i64, mu: Scalar, q: Scalar) -> Result<Family, ParamError> {
    if n <= 0 {
        return Err(ParamError::NotPositive("n"));
    }
    if d <= 0 {
        return Err(ParamError::NotPositive("d"));
    }
    if n % d != 0 {
        return Err(ParamError::DoesNotDivide { d, n });
    }
    if q.root_order() != Some(d as u32) {
        return Err(ParamError::WrongOrder { q: q.to_string(), d });
    }
    Ok(Family::A { n, d, mu, q })
}

pub fn build_anq(n: i64, q: Scalar) -> Result<Family, ParamError> {
    if n <= 0 {
        return Err(ParamError::NotPositive("n"));
    }
    if q.root_order() != Some(n as u32) {
        return Err(ParamError::WrongOrder { q: q.to_string(), d: n });
    }
    Ok(Family::Anq { n, q })
}

pub fn build_hinf(chi: Scalar, lambda: Scalar) -> Result<Family, ParamError> {
    if chi.is_zero() {
        return Err(ParamError::ChiZero);
    }
    if !chi.is_one() && chi.is_root_of_unity() {
        return Err(ParamError::ChiRootOfUnity(chi.to_string()));
    }
    Ok(Family::Hinf { chi, lambda })
}

pub fn build_bmn(m: i64, n: i64, lambda: Scalar, s: Scalar, t: Scalar, k: Scalar) -> Result<Family, ParamError> {
    if (m, n) == (1, 1) || (m, n) == (-1, -1) {
        return Err(ParamError::ExcludedPair { m, n });
    }
    if (m + n).rem_euclid(2) != 0 {
        return Err(ParamError::OddSum(m + n));
    }
    if lambda.is_zero() {
        return Err(ParamError::LambdaZero);
    }
    // Commuting g and h past x and y is only well defined on the quotient group
    // when these hold.
    if !lambda.pow(m).is_one() {
        return Err(ParamError::Inconsistent(format!("lambda^{m} = 1")));
    }
    if !lambda.pow(n).is_one() {
        return Err(ParamError::Inconsistent(format!("lambda^{n} = 1")));
    }
    let l2 = &lambda * &lambda - Scalar::one();
    if !(&s * &l2).is_zero() {
        return Err(ParamError::Inconsistent("s(lambda^2 - 1) = 0".into()));
    }
    if !(&t * &l2).is_zero() {
        return Err(ParamError::Inconsistent("t(lambda^2 - 1) = 0".into()));
    }
    let f = Family::Bmn { m, n, lambda: lambda.clone(), s, t, k: k.clone() };
    if f.gh_canonical(1, 1) != (0, 0) && !(&k * &(&lambda - &Scalar::one())).is_zero() {
        return Err(ParamError::Inconsistent("k(lambda - 1) = 0".into()));
    }
    Ok(f)
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::Hefuv => "H(e±,f±,u,v)".into(),
            Family::A { n, d, mu, q } => format!("A({n},{d},{mu},{q})"),
            Family::Anq { n, q } => format!("A({n},{q})"),
            Family::Hinf { chi, lambda } => format!("H_inf({chi},{lambda})"),
            Family::Bmn { m, n, lambda, s, t, k } => format!("B^{{{m},{n}}}({lambda},{s},{t},{k})"),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Family::A { .. })
    }

    /// Canonical representative of g^a h^b in Z² / ⟨(m, −n)⟩.
    pub fn gh_canonical(&self, a: i64, b: i64) -> (i64, i64) {
        let Family::Bmn { m, n, .. } = self else {
            return (a, b);
        };
        if *m != 0 {
            let a2 = a.rem_euclid(m.abs());
            let c = (a - a2) / m;
            (a2, b + c * n)
        } else if *n != 0 {
            (a, b.rem_euclid(n.abs()))
        } else {
            (a, b)
        }
    }

    /// λ(g^a) from the cocycle rule, for H_∞.
    pub fn hinf_lambda(&self, a: i64) -> Scalar {
        let Family::Hinf { chi, lambda } = self else {
            return Scalar::zero();
        };
        if a == 0 {
            return Scalar::zero();
        }
        if a > 0 {
            let mut s = Scalar::zero();
            let mut p = Scalar::one();
            for _ in 0..a {
                s += &p;
                p = &p * chi;
            }
            lambda * &s
        } else {
            -(chi.pow(a) * self.hinf_lambda(-a))
        }
    }

    fn single(&self, l: Letter) -> Option<Vec<(Word, Scalar)>> {
        match (self, l) {
            (Family::A { n, .. }, Letter::G(a)) => {
                let r = a.rem_euclid(*n);
                if r == a && a != 0 {
                    None
                } else if r == 0 {
                    Some(vec![(vec![], Scalar::one())])
                } else {
                    Some(vec![(vec![Letter::G(r)], Scalar::one())])
                }
            }
            (_, Letter::G(0)) => Some(vec![(vec![], Scalar::one())]),
            (Family::Bmn { .. }, Letter::GH(a, b)) => {
                let c = self.gh_canonical(a, b);
                if c == (0, 0) {
                    Some(vec![(vec![], Scalar::one())])
                } else if c != (a, b) {
                    Some(vec![(vec![Letter::GH(c.0, c.1)], Scalar::one())])
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    fn pair(&self, l: Letter, r: Letter) -> Option<Vec<(Word, Scalar)>> {
        use Letter::*;
        let one = Scalar::one;
        match (self, l, r) {
            (_, G(a), G(b)) => Some(vec![(vec![G(a + b)], one())]),
            (_, GH(a, b), GH(c, d)) => Some(vec![(vec![GH(a + c, b + d)], one())]),
            (Family::Hefuv, E(i), E(j)) => Some(vec![(vec![E(i + j)], one())]),
            (Family::Hefuv, F(i), F(j)) => Some(vec![(vec![F(i + j)], one())]),
            (Family::Hefuv, E(_), F(_)) | (Family::Hefuv, F(_), E(_)) => Some(vec![]),
            (Family::Hefuv, U | V, E(i)) => Some(vec![(vec![E(i), l], sign(i))]),
            (Family::Hefuv, U | V, F(i)) => Some(vec![(vec![F(i), l], sign(i))]),
            (Family::Hefuv, U, U) | (Family::Hefuv, V, V) => Some(vec![]),
            (Family::Hefuv, V, U) => Some(vec![(vec![U, V], Scalar::from_int(-1))]),
            (Family::A { q, .. }, X, G(a)) | (Family::Anq { q, .. }, X, G(a)) => Some(vec![(vec![G(a), X], q.pow(a))]),
            (Family::Hinf { chi, .. }, X, G(a)) => {
                let la = self.hinf_lambda(a);
                Some(vec![(vec![G(a), X], chi.pow(a)), (vec![G(a)], la.clone()), (vec![G(a + 1)], -la)])
            }
            (Family::Bmn { lambda, .. }, X, GH(a, b)) => {
                Some(vec![(vec![GH(a, b), X], sign(a) * (-lambda).pow(b))])
            }
            (Family::Bmn { lambda, .. }, Y, GH(a, b)) => {
                Some(vec![(vec![GH(a, b), Y], (-lambda.inv()).pow(a) * sign(b))])
            }
            (Family::Bmn { lambda, k, .. }, Y, X) => {
                let li = lambda.inv();
                let c = &li * k;
                Some(vec![(vec![], c.clone()), (vec![GH(1, 1)], -c), (vec![X, Y], -li)])
            }
            (Family::Bmn { s, .. }, X, X) => Some(vec![(vec![], s.clone()), (vec![GH(2, 0)], -s.clone())]),
            (Family::Bmn { t, .. }, Y, Y) => Some(vec![(vec![], t.clone()), (vec![GH(0, 2)], -t.clone())]),
            _ => None,
        }
    }

    /// Length and replacement of a power rule for x starting at `i`, if any.
    fn run(&self, w: &[Letter], i: usize) -> Option<(usize, Vec<(Word, Scalar)>)> {
        let (len, c, gpow) = match self {
            Family::A { d, mu, .. } => (*d as usize, mu.clone(), *d),
            Family::Anq { n, .. } => (*n as usize, Scalar::one(), *n),
            _ => return None,
        };
        if i + len > w.len() || w[i..i + len].iter().any(|l| *l != Letter::X) {
            return None;
        }
        Some((len, vec![(vec![], c.clone()), (vec![Letter::G(gpow)], -c)]))
    }

    fn redex_at(&self, w: &[Letter], i: usize) -> Option<Redex> {
        if let Some(rep) = self.single(w[i]) {
            return Some(Redex { start: i, end: i + 1, replacement: rep });
        }
        if let Some((len, rep)) = self.run(w, i) {
            return Some(Redex { start: i, end: i + len, replacement: rep });
        }
        if i + 1 < w.len() {
            if let Some(rep) = self.pair(w[i], w[i + 1]) {
                return Some(Redex { start: i, end: i + 2, replacement: rep });
            }
        }
        None
    }

    /// One rewriting step, or `None` if the word is in normal form.
    pub fn step(&self, w: &[Letter], strategy: Strategy) -> Option<Redex> {
        let found = match strategy {
            Strategy::Leftmost => (0..w.len()).find_map(|i| self.redex_at(w, i)),
            Strategy::Rightmost => (0..w.len()).rev().find_map(|i| self.redex_at(w, i)),
        };
        if found.is_some() {
            return found;
        }
        // In H(e±,f±,u,v) the unit is e_0 + f_0, so every normal word starts with e_i or f_i.
        if *self == Family::Hefuv && !matches!(w.first(), Some(Letter::E(_) | Letter::F(_))) {
            return Some(Redex {
                start: 0,
                end: 0,
                replacement: vec![(vec![Letter::E(0)], Scalar::one()), (vec![Letter::F(0)], Scalar::one())],
            });
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_checks() {
        assert!(build_a(4, 2, Scalar::one(), Scalar::from_int(-1)).is_ok());
        assert!(matches!(build_a(4, 3, Scalar::one(), Scalar::zeta(3)), Err(ParamError::DoesNotDivide { .. })));
        assert!(matches!(build_a(4, 2, Scalar::one(), Scalar::zeta(4)), Err(ParamError::WrongOrder { .. })));
        assert!(build_hinf(Scalar::from_int(2), Scalar::one()).is_ok());
        assert!(build_hinf(Scalar::t(), Scalar::one()).is_ok());
        assert!(matches!(build_hinf(Scalar::from_int(-1), Scalar::one()), Err(ParamError::ChiRootOfUnity(_))));
        assert!(matches!(
            build_bmn(1, 1, Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()),
            Err(ParamError::ExcludedPair { .. })
        ));
        assert!(matches!(
            build_bmn(2, 1, Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()),
            Err(ParamError::OddSum(3))
        ));
        assert!(build_bmn(0, 0, Scalar::from_int(2), Scalar::zero(), Scalar::zero(), Scalar::zero()).is_ok());
        assert!(matches!(
            build_bmn(0, 0, Scalar::from_int(2), Scalar::one(), Scalar::zero(), Scalar::zero()),
            Err(ParamError::Inconsistent(_))
        ));
    }

    #[test]
    fn coset_representatives() {
        let f = build_bmn(2, 2, Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()).unwrap();
        assert_eq!(f.gh_canonical(2, 0), (0, 2));
        assert_eq!(f.gh_canonical(3, -1), (1, 1));
        let f = build_bmn(0, 2, Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()).unwrap();
        assert_eq!(f.gh_canonical(5, 3), (5, 1));
    }

    #[test]
    fn hinf_cocycle() {
        let f = build_hinf(Scalar::from_int(2), Scalar::one()).unwrap();
        assert_eq!(f.hinf_lambda(3), Scalar::from_int(7));
        // λ(g^-1 g) = χ(g^-1)λ(g) + λ(g^-1) = 0
        let l = f.hinf_lambda(-1);
        assert_eq!(Scalar::frac(1, 2) * f.hinf_lambda(1) + l, Scalar::zero());
    }
}
