//! Based rings with a finite basis window.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::FusionError;

/// A formal Z-combination of basis elements.
pub type Combination = BTreeMap<usize, i64>;

/// Structure constants b_i·b_j = Σ α(i,j,t) b_t. Pairs listed in `escapes` have a
/// product that leaves the basis window; their α entries are absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BasedRingJson", into = "BasedRingJson")]
pub struct BasedRing {
    pub basis: Vec<String>,
    pub unit: usize,
    pub dims: Vec<u64>,
    alpha: BTreeMap<(usize, usize), Combination>,
    pub star: Vec<usize>,
    escapes: BTreeMap<(usize, usize), String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct BasedRingJson {
    basis: Vec<String>,
    unit: usize,
    dims: Vec<u64>,
    alpha: Vec<(usize, usize, usize, i64)>,
    star: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    escapes: Vec<(usize, usize, String)>,
}

impl TryFrom<BasedRingJson> for BasedRing {
    type Error = FusionError;

    fn try_from(j: BasedRingJson) -> Result<Self, FusionError> {
        let mut r = BasedRing::new(j.basis, j.unit, j.dims, j.star)?;
        for (i, k, t, c) in j.alpha {
            r.add_coefficient(i, k, t, c)?;
        }
        for (i, k, m) in j.escapes {
            r.set_escape(i, k, m)?;
        }
        Ok(r)
    }
}

impl From<BasedRing> for BasedRingJson {
    fn from(r: BasedRing) -> Self {
        let alpha = r
            .alpha
            .iter()
            .flat_map(|((i, j), c)| c.iter().map(move |(t, x)| (*i, *j, *t, *x)))
            .collect();
        let escapes = r.escapes.into_iter().map(|((i, j), m)| (i, j, m)).collect();
        BasedRingJson { basis: r.basis, unit: r.unit, dims: r.dims, alpha, star: r.star, escapes }
    }
}

impl BasedRing {
    /// An empty multiplication table; every pair starts as the zero product.
    pub fn new(basis: Vec<String>, unit: usize, dims: Vec<u64>, star: Vec<usize>) -> Result<Self, FusionError> {
        let n = basis.len();
        if unit >= n || dims.len() != n || star.len() != n || star.iter().any(|s| *s >= n) {
            return Err(FusionError::Structural("unit, dims or star do not match the basis".into()));
        }
        Ok(BasedRing { basis, unit, dims, alpha: BTreeMap::new(), star, escapes: BTreeMap::new() })
    }

    /// Group ring Z[G] of a finite group given by its multiplication table on 0..n.
    pub fn group_ring(labels: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> Result<Self, FusionError> {
        let n = labels.len();
        let unit = (0..n)
            .find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or_else(|| FusionError::Structural("no identity element".into()))?;
        let star = (0..n)
            .map(|x| (0..n).find(|&y| mul(x, y) == unit))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| FusionError::Structural("missing inverse".into()))?;
        let mut r = BasedRing::new(labels, unit, vec![1; n], star)?;
        for i in 0..n {
            for j in 0..n {
                r.add_coefficient(i, j, mul(i, j), 1)?;
            }
        }
        Ok(r)
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn index(&self, label: &str) -> Result<usize, FusionError> {
        self.basis.iter().position(|b| b == label).ok_or_else(|| FusionError::UnknownLabel(label.into()))
    }

    fn check(&self, i: usize) -> Result<(), FusionError> {
        if i < self.len() {
            Ok(())
        } else {
            Err(FusionError::UnknownLabel(format!("#{i}")))
        }
    }

    pub fn add_coefficient(&mut self, i: usize, j: usize, t: usize, c: i64) -> Result<(), FusionError> {
        self.check(i)?;
        self.check(j)?;
        self.check(t)?;
        let e = self.alpha.entry((i, j)).or_default();
        *e.entry(t).or_default() += c;
        if e[&t] == 0 {
            e.remove(&t);
        }
        Ok(())
    }

    /// Marks b_i·b_j as leaving the window, naming the first missing label.
    pub fn set_escape(&mut self, i: usize, j: usize, missing: String) -> Result<(), FusionError> {
        self.check(i)?;
        self.check(j)?;
        self.alpha.remove(&(i, j));
        self.escapes.insert((i, j), missing);
        Ok(())
    }

    pub fn escapes(&self) -> impl Iterator<Item = (usize, usize, &str)> {
        self.escapes.iter().map(|((i, j), m)| (*i, *j, m.as_str()))
    }

    /// α(i, j, ·), or the escape error for an out-of-window product.
    pub fn product(&self, i: usize, j: usize) -> Result<Combination, FusionError> {
        self.check(i)?;
        self.check(j)?;
        if let Some(m) = self.escapes.get(&(i, j)) {
            return Err(FusionError::Escape {
                left: self.basis[i].clone(),
                right: self.basis[j].clone(),
                missing: m.clone(),
            });
        }
        Ok(self.alpha.get(&(i, j)).cloned().unwrap_or_default())
    }

    pub fn coefficient(&self, i: usize, j: usize, t: usize) -> Result<i64, FusionError> {
        Ok(self.product(i, j)?.get(&t).copied().unwrap_or(0))
    }

    pub fn mult(&self, a: &Combination, b: &Combination) -> Result<Combination, FusionError> {
        let mut out = Combination::new();
        for (i, x) in a {
            for (j, y) in b {
                for (t, c) in self.product(*i, *j)? {
                    *out.entry(t).or_default() += x * y * c;
                }
            }
        }
        out.retain(|_, c| *c != 0);
        Ok(out)
    }

    pub fn basis_element(&self, i: usize) -> Combination {
        BTreeMap::from([(i, 1)])
    }

    /// Parses "C1 + 2*g - 1" style combinations of basis labels.
    pub fn combination(&self, s: &str) -> Result<Combination, FusionError> {
        let mut out = Combination::new();
        let s = s.replace('-', "+-");
        for term in s.split('+').map(str::trim).filter(|t| !t.is_empty()) {
            let (sign, term) = match term.strip_prefix('-') {
                Some(t) => (-1, t.trim()),
                None => (1, term),
            };
            let (c, label) = match term.split_once('*') {
                Some((c, l)) => {
                    (c.trim().parse::<i64>().map_err(|_| FusionError::UnknownLabel(term.into()))?, l.trim())
                }
                None => (1, term),
            };
            *out.entry(self.index(label)?).or_default() += sign * c;
        }
        out.retain(|_, c| *c != 0);
        Ok(out)
    }

    pub fn format(&self, c: &Combination) -> String {
        if c.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (i, x)) in c.iter().enumerate() {
            let sep = match (k, *x < 0) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let a = x.abs();
            if a == 1 {
                s += &format!("{sep}{}", self.basis[*i]);
            } else {
                s += &format!("{sep}{a}*{}", self.basis[*i]);
            }
        }
        s
    }

    /// Whether a·b = b·a for every basis element b. Escaping products are errors.
    pub fn is_central(&self, a: usize) -> Result<bool, FusionError> {
        for b in 0..self.len() {
            if self.product(a, b)? != self.product(b, a)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The same table with one coefficient overwritten; useful for negative tests.
    pub fn with_coefficient(&self, i: usize, j: usize, t: usize, c: i64) -> Result<Self, FusionError> {
        let mut r = self.clone();
        let cur = r.coefficient(i, j, t)?;
        r.add_coefficient(i, j, t, c - cur)?;
        Ok(r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub passed: bool,
    /// Failing instances, human readable.
    pub failures: Vec<String>,
    /// Instances not decided because a product left the window.
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingReport {
    pub checks: Vec<AxiomCheck>,
}

impl RingReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn find(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

pub const UNIT_LAW: &str = "unit law";
pub const TAU: &str = "unit coefficient of b_i·b_j is δ(j, i*)";
pub const STAR: &str = "* is an anti-automorphism";
pub const DIMENSION: &str = "dimension is multiplicative";
pub const NONNEGATIVE: &str = "coefficients are nonnegative";

/// Checks the based-ring axioms on every pair whose product stays in the window.
pub fn verify_based_ring(r: &BasedRing) -> RingReport {
    let n = r.len();
    let mut unit = AxiomCheck { axiom: UNIT_LAW, passed: true, failures: Vec::new(), skipped: 0 };
    let mut tau = AxiomCheck { axiom: TAU, passed: true, failures: Vec::new(), skipped: 0 };
    let mut star = AxiomCheck { axiom: STAR, passed: true, failures: Vec::new(), skipped: 0 };
    let mut dim = AxiomCheck { axiom: DIMENSION, passed: true, failures: Vec::new(), skipped: 0 };
    let mut pos = AxiomCheck { axiom: NONNEGATIVE, passed: true, failures: Vec::new(), skipped: 0 };
    let b = &r.basis;
    for j in 0..n {
        for (l, rr) in [(r.unit, j), (j, r.unit)] {
            match r.product(l, rr) {
                Ok(p) if p == r.basis_element(j) => {}
                Ok(p) => unit.failures.push(format!("{}·{} = {}", b[l], b[rr], r.format(&p))),
                Err(_) => unit.failures.push(format!("{}·{} leaves the window", b[l], b[rr])),
            }
        }
        if r.star[r.star[j]] != j {
            star.failures.push(format!("{}** ≠ {}", b[j], b[j]));
        }
    }
    if r.star[r.unit] != r.unit {
        star.failures.push("1* ≠ 1".into());
    }
    for i in 0..n {
        for j in 0..n {
            let Ok(p) = r.product(i, j) else {
                tau.skipped += 1;
                star.skipped += 1;
                dim.skipped += 1;
                continue;
            };
            if let Some((t, c)) = p.iter().find(|(_, c)| **c < 0) {
                pos.failures.push(format!("α({}, {}, {}) = {c}", b[i], b[j], b[*t]));
            }
            let e = p.get(&r.unit).copied().unwrap_or(0);
            let want = i64::from(j == r.star[i]);
            if e != want {
                tau.failures.push(format!("coefficient of {} in {}·{} is {e}, expected {want}", b[r.unit], b[i], b[j]));
            }
            let total: i64 = p.iter().map(|(t, c)| c * r.dims[*t] as i64).sum();
            if total != (r.dims[i] * r.dims[j]) as i64 {
                dim.failures.push(format!("{}·{}: {total} ≠ {}", b[i], b[j], r.dims[i] * r.dims[j]));
            }
            match r.product(r.star[j], r.star[i]) {
                Ok(q) => {
                    let mapped: Combination = p.iter().map(|(t, c)| (r.star[*t], *c)).collect();
                    if mapped != q {
                        star.failures.push(format!("({}·{})* ≠ {}*·{}*", b[i], b[j], b[j], b[i]));
                    }
                }
                Err(_) => star.skipped += 1,
            }
        }
    }
    let mut checks = vec![unit, tau, star, dim, pos];
    for c in &mut checks {
        c.passed = c.failures.is_empty();
    }
    RingReport { checks }
}
