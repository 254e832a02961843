//! Finite Δ-closed spans of normal monomials, exported as structure-constant coalgebras.

use std::collections::{HashMap, HashSet, VecDeque};

use coalgebra_core::linalg::SparseVec;
use coalgebra_core::{Coalgebra, CoalgebraError, Escape, ProductOracle, Scalar, Subspace};
use thiserror::Error;

use crate::family::Family;
use crate::hopf::PresentedHopf;
use crate::word::{add_term, word_label, Element, Letter, Word};

/// Which span of normal monomials to truncate to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TruncationSpec {
    /// H^N: the indexed span with |i| <= N, plus C_{N+1}, closed under Δ.
    Hefuv(i64),
    /// The indexed span with |i| <= N taken literally, optionally with C_{N+1}; fails if not Δ-closed.
    HefuvLiteral { n: i64, with_cap: bool },
    /// The cosemisimple part spanned by e_i, f_i with |i| <= m.
    Cosemisimple(i64),
    /// Whole algebra; finite families only.
    Full,
    /// Δ-closure of the monomials with group exponents in `lo..=hi`.
    GroupWindow { lo: i64, hi: i64 },
    /// An explicit list of normal words, which must already be Δ-closed.
    Words(Vec<Word>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TruncationError {
    #[error("truncation not a subcoalgebra: Δ({element}) contains {term}, which is outside the span")]
    NotClosed { element: String, term: String },
    #[error("{0} is not a normal monomial")]
    NotNormal(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("Δ-closure exceeded {0} monomials")]
    TooLarge(usize),
    #[error(transparent)]
    Coalgebra(#[from] CoalgebraError),
}

const CLOSURE_LIMIT: usize = 20_000;

/// A truncation together with the Hopf algebra it came from.
#[derive(Clone, Debug)]
pub struct Truncation {
    pub hopf: PresentedHopf,
    pub words: Vec<Word>,
    pub coalgebra: Coalgebra,
    index: HashMap<Word, usize>,
}

fn hefuv_block(i: i64) -> Vec<Word> {
    use Letter::*;
    let mut v = Vec::new();
    for head in [E(i), F(i)] {
        v.push(vec![head]);
        v.push(vec![head, U]);
        v.push(vec![head, V]);
        v.push(vec![head, U, V]);
    }
    v
}

fn cap(n: i64) -> Vec<Word> {
    use Letter::*;
    vec![vec![E(n)], vec![F(n)], vec![E(-n)], vec![F(-n)]]
}

fn push_gx(out: &mut Vec<Word>, g: Option<Letter>, xs: &[Letter]) {
    let mut w: Word = g.into_iter().collect();
    w.extend_from_slice(xs);
    out.push(w);
}

/// Normal monomials with group part in `lo..=hi`. For A(n,q) and H_∞ the group
/// exponent plus the x-degree is also at most `hi`, which keeps the span Δ-closed.
pub fn window_monomials(h: &PresentedHopf, lo: i64, hi: i64) -> Vec<Word> {
    use Letter::*;
    let mut out = Vec::new();
    let g = |a: i64| if a == 0 { None } else { Some(G(a)) };
    match h.family() {
        Family::Hefuv => {
            for i in lo..=hi {
                out.extend(hefuv_block(i));
            }
        }
        Family::A { n, d, .. } => {
            for a in 0..*n {
                for b in 0..*d {
                    push_gx(&mut out, g(a), &vec![X; b as usize]);
                }
            }
        }
        Family::Anq { n, .. } => {
            for a in lo..=hi {
                for b in 0..(*n).min(hi - a + 1).max(0) {
                    push_gx(&mut out, g(a), &vec![X; b as usize]);
                }
            }
        }
        Family::Hinf { .. } => {
            for a in lo..=hi {
                for b in 0..=(hi - a) {
                    push_gx(&mut out, g(a), &vec![X; b as usize]);
                }
            }
        }
        Family::Bmn { .. } => {
            let fam = h.family();
            let mut seen = HashSet::new();
            for a in lo..=hi {
                for b in lo..=hi {
                    let c = fam.gh_canonical(a, b);
                    if !seen.insert(c) {
                        continue;
                    }
                    let gl = if c == (0, 0) { None } else { Some(GH(c.0, c.1)) };
                    for tail in [vec![], vec![X], vec![Y], vec![X, Y]] {
                        push_gx(&mut out, gl, &tail);
                    }
                }
            }
        }
    }
    out
}

fn delta_terms(h: &PresentedHopf, w: &Word) -> Vec<(Word, Word, Scalar)> {
    h.delta_word(w).into_iter().map(|((a, b), c)| (a, b, c)).collect()
}

/// Appends every monomial that occurs in Δ of the list until the span is closed.
pub fn delta_closure(h: &PresentedHopf, words: Vec<Word>) -> Result<Vec<Word>, TruncationError> {
    let mut seen: HashSet<Word> = words.iter().cloned().collect();
    let mut out = words;
    let mut queue: VecDeque<usize> = (0..out.len()).collect();
    while let Some(i) = queue.pop_front() {
        for (a, b, _) in delta_terms(h, &out[i].clone()) {
            for w in [a, b] {
                if seen.insert(w.clone()) {
                    out.push(w);
                    queue.push_back(out.len() - 1);
                    if out.len() > CLOSURE_LIMIT {
                        return Err(TruncationError::TooLarge(CLOSURE_LIMIT));
                    }
                }
            }
        }
    }
    Ok(out)
}

fn dedup(words: Vec<Word>) -> Vec<Word> {
    let mut seen = HashSet::new();
    words.into_iter().filter(|w| seen.insert(w.clone())).collect()
}

pub fn truncate_coalgebra(h: &PresentedHopf, spec: &TruncationSpec) -> Result<Truncation, TruncationError> {
    let hefuv_only = |what: &str| {
        if *h.family() != Family::Hefuv {
            Err(TruncationError::Unsupported(format!("{what} truncation needs H(e±,f±,u,v)")))
        } else {
            Ok(())
        }
    };
    let (words, close) = match spec {
        TruncationSpec::Hefuv(n) => {
            hefuv_only("H^N")?;
            let mut w: Vec<Word> = (-n..=*n).flat_map(hefuv_block).collect();
            w.extend(cap(n + 1));
            (w, true)
        }
        TruncationSpec::HefuvLiteral { n, with_cap } => {
            hefuv_only("H^N")?;
            let mut w: Vec<Word> = (-n..=*n).flat_map(hefuv_block).collect();
            if *with_cap {
                w.extend(cap(n + 1));
            }
            (w, false)
        }
        TruncationSpec::Cosemisimple(m) => {
            hefuv_only("cosemisimple")?;
            let mut w = vec![vec![Letter::E(0)], vec![Letter::F(0)]];
            for i in 1..=*m {
                w.extend(cap(i));
            }
            (w, false)
        }
        TruncationSpec::Full => {
            if !h.family().is_finite() {
                return Err(TruncationError::Unsupported(format!("{} is infinite-dimensional", h.name())));
            }
            (window_monomials(h, 0, 0), false)
        }
        TruncationSpec::GroupWindow { lo, hi } => {
            if *h.family() == Family::Hefuv {
                return Err(TruncationError::Unsupported("use the H^N truncation for H(e±,f±,u,v)".into()));
            }
            (window_monomials(h, *lo, *hi), true)
        }
        TruncationSpec::Words(w) => (w.clone(), false),
    };
    let words = dedup(words);
    for w in &words {
        if !h.is_normal(w) {
            return Err(TruncationError::NotNormal(word_label(w)));
        }
    }
    let words = if close { delta_closure(h, words)? } else { words };
    Truncation::from_words(h, words)
}

impl Truncation {
    pub fn from_words(h: &PresentedHopf, words: Vec<Word>) -> Result<Truncation, TruncationError> {
        let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut delta = Vec::with_capacity(words.len());
        let mut counit = Vec::with_capacity(words.len());
        for w in &words {
            let mut row = Vec::new();
            for (a, b, c) in delta_terms(h, w) {
                match (index.get(&a), index.get(&b)) {
                    (Some(&j), Some(&k)) => row.push((j, k, c)),
                    (ja, _) => {
                        let out = if ja.is_none() { &a } else { &b };
                        return Err(TruncationError::NotClosed {
                            element: word_label(w),
                            term: format!("{}⊗{} (escaping factor {})", word_label(&a), word_label(&b), word_label(out)),
                        });
                    }
                }
            }
            delta.push(row);
            let mut e = Element::new();
            e.insert(w.clone(), Scalar::one());
            counit.push(h.counit(&e));
        }
        let labels = words.iter().map(|w| word_label(w)).collect();
        let coalgebra = Coalgebra::new(labels, delta, counit)?;
        Ok(Truncation { hopf: h.clone(), words, coalgebra, index })
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn index_of(&self, w: &[Letter]) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Coordinates of an element, or the first monomial that is not in the span.
    pub fn vec_of(&self, e: &Element) -> Result<SparseVec, Escape> {
        let mut v = SparseVec::new();
        for (w, c) in self.hopf.normalize(e) {
            match self.index.get(&w) {
                Some(&i) => {
                    v.insert(i, c);
                }
                None => return Err(Escape(word_label(&w))),
            }
        }
        Ok(v)
    }

    pub fn element_of(&self, v: &SparseVec) -> Element {
        let mut e = Element::new();
        for (i, c) in v {
            add_term(&mut e, self.words[*i].clone(), c);
        }
        e
    }

    /// Parses an element such as `u*f[1] - v*e[1]` and returns its coordinates.
    pub fn parse_vec(&self, s: &str) -> Result<SparseVec, Escape> {
        let e = crate::parse::parse_element(s).map_err(|e| Escape(e.to_string()))?;
        self.vec_of(&e)
    }

    pub fn antipode_vec(&self, v: &SparseVec) -> Result<SparseVec, Escape> {
        self.vec_of(&self.hopf.antipode(&self.element_of(v)))
    }

    /// Display name for a simple block: `1`, `g`, `C<i>` in H(e±,f±,u,v), the group-like
    /// monomial otherwise.
    pub fn block_name(&self, block: &Subspace) -> String {
        use Letter::*;
        let hopf = &self.hopf;
        if *hopf.family() == Family::Hefuv {
            if block.dim() == 1 {
                let one = self.vec_of(&hopf.one()).ok();
                let g = self.vec_of(&hopf.sub(&hopf.gen(E(0)), &hopf.gen(F(0)))).ok();
                if one.as_ref().is_some_and(|v| block.contains(v)) {
                    return "1".into();
                }
                if g.as_ref().is_some_and(|v| block.contains(v)) {
                    return "g".into();
                }
            }
            for &p in block.pivots() {
                if let [E(i)] | [F(i)] = self.words[p].as_slice() {
                    if *i != 0 {
                        return format!("C{}", i.abs());
                    }
                }
            }
        } else if block.dim() == 1 {
            let row = &block.rows()[0];
            if row.len() == 1 {
                let (&i, _) = row.iter().next().unwrap();
                return word_label(&self.words[i]);
            }
        }
        format!("B{}", block.pivots().first().copied().unwrap_or(0))
    }
}

impl ProductOracle for Truncation {
    fn mul_basis(&self, i: usize, j: usize) -> Result<SparseVec, Escape> {
        let mut w = self.words[i].clone();
        w.extend_from_slice(&self.words[j]);
        let e = self.hopf.nf(&w);
        let mut v = SparseVec::new();
        for (w, c) in e {
            match self.index.get(&w) {
                Some(&k) => {
                    v.insert(k, c);
                }
                None => {
                    return Err(Escape(format!(
                        "{}·{} contains {}",
                        word_label(&self.words[i]),
                        word_label(&self.words[j]),
                        word_label(&w)
                    )))
                }
            }
        }
        Ok(v)
    }
}
