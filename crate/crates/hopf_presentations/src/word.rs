//! Words in the generators, and sparse linear combinations of them.

use std::collections::BTreeMap;
use std::fmt;

use coalgebra_core::Scalar;

/// A generator letter. `G(a)` is g^a, `GH(a, b)` is g^a h^b, and `E(i)`, `F(i)`
/// are the idempotent-like generators e_i, f_i.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    G(i64),
    GH(i64, i64),
    E(i64),
    F(i64),
    X,
    Y,
    U,
    V,
}

pub type Word = Vec<Letter>;

/// Sparse combination of words; zero coefficients are never stored.
pub type Element = BTreeMap<Word, Scalar>;
pub type Tensor = BTreeMap<(Word, Word), Scalar>;
pub type Tensor3 = BTreeMap<(Word, Word, Word), Scalar>;

pub fn add_term<K: Ord>(m: &mut BTreeMap<K, Scalar>, k: K, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match m.get_mut(&k) {
        Some(x) => {
            *x += c;
            if x.is_zero() {
                m.remove(&k);
            }
        }
        None => {
            m.insert(k, c.clone());
        }
    }
}

pub fn add_scaled<K: Ord + Clone>(m: &mut BTreeMap<K, Scalar>, s: &Scalar, o: &BTreeMap<K, Scalar>) {
    for (k, c) in o {
        add_term(m, k.clone(), &(s * c));
    }
}

pub fn word_elem(w: Word) -> Element {
    let mut e = Element::new();
    e.insert(w, Scalar::one());
    e
}

pub fn scalar_elem(c: Scalar) -> Element {
    let mut e = Element::new();
    if !c.is_zero() {
        e.insert(Vec::new(), c);
    }
    e
}

pub fn sub_elem(a: &Element, b: &Element) -> Element {
    let mut r = a.clone();
    add_scaled(&mut r, &Scalar::from_int(-1), b);
    r
}

fn pow_label(base: &str, e: i64) -> String {
    match e {
        1 => base.to_string(),
        _ => format!("{base}^{e}"),
    }
}

/// Compact label, e.g. `e[2]uv`, `g^-1x^2`, `g^2h`. The empty word is `1`.
pub fn word_label(w: &[Letter]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < w.len() {
        let l = w[i];
        let mut run = 1;
        while i + run < w.len() && w[i + run] == l && matches!(l, Letter::X | Letter::Y | Letter::U | Letter::V) {
            run += 1;
        }
        match l {
            Letter::G(a) => out.push_str(&pow_label("g", a)),
            Letter::GH(a, b) => {
                if a != 0 {
                    out.push_str(&pow_label("g", a));
                }
                if b != 0 {
                    out.push_str(&pow_label("h", b));
                }
                if a == 0 && b == 0 {
                    out.push('1');
                }
            }
            Letter::E(k) => out.push_str(&format!("e[{k}]")),
            Letter::F(k) => out.push_str(&format!("f[{k}]")),
            Letter::X => out.push_str(&pow_label("x", run as i64)),
            Letter::Y => out.push_str(&pow_label("y", run as i64)),
            Letter::U => out.push_str(&pow_label("u", run as i64)),
            Letter::V => out.push_str(&pow_label("v", run as i64)),
        }
        i += run;
    }
    out
}

fn coeff_prefix(c: &Scalar, first: bool, out: &mut String) -> bool {
    let s = c.to_string();
    let simple = c.is_rational();
    if simple && c.is_one() {
        if !first {
            out.push_str(" + ");
        }
        return false;
    }
    if simple && (-c).is_one() {
        out.push_str(if first { "-" } else { " - " });
        return false;
    }
    if simple && s.starts_with('-') {
        out.push_str(if first { "-" } else { " - " });
        out.push_str(&s[1..]);
    } else {
        if !first {
            out.push_str(" + ");
        }
        if simple {
            out.push_str(&s);
        } else {
            out.push('(');
            out.push_str(&s);
            out.push(')');
        }
    }
    true
}

/// Human-readable rendering of an element.
pub fn format_element(e: &Element) -> String {
    if e.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (w, c) in e {
        let first = out.is_empty();
        let had_coeff = coeff_prefix(c, first, &mut out);
        if w.is_empty() {
            if !had_coeff {
                out.push('1');
            }
        } else {
            if had_coeff {
                out.push('*');
            }
            out.push_str(&word_label(w));
        }
    }
    out
}

pub fn format_tensor(t: &Tensor) -> String {
    if t.is_empty() {
        return "0".into();
    }
    t.iter()
        .map(|((a, b), c)| format!("({c})*{}⊗{}", word_label(a), word_label(b)))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn format_tensor3(t: &Tensor3) -> String {
    if t.is_empty() {
        return "0".into();
    }
    t.iter()
        .map(|((a, b, d), c)| format!("({c})*{}⊗{}⊗{}", word_label(a), word_label(b), word_label(d)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Wrapper that displays an element.
pub struct Show<'a>(pub &'a Element);

impl fmt::Display for Show<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_element(self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(word_label(&[Letter::E(2), Letter::U, Letter::V]), "e[2]uv");
        assert_eq!(word_label(&[Letter::G(-1), Letter::X, Letter::X]), "g^-1x^2");
        assert_eq!(word_label(&[Letter::GH(2, 1), Letter::Y]), "g^2hy");
        assert_eq!(word_label(&[]), "1");
        let mut e = Element::new();
        e.insert(vec![Letter::E(0)], Scalar::one());
        e.insert(vec![Letter::F(0)], Scalar::from_int(-2));
        assert_eq!(format_element(&e), "e[0] - 2*f[0]");
    }
}
