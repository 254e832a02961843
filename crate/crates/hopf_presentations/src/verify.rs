//! Mechanical check of the Hopf axioms on generators and defining relations.

use coalgebra_core::par::{map_slice, Exec};
use coalgebra_core::Scalar;

use crate::family::Family;
use crate::hopf::PresentedHopf;
use crate::word::{add_term, format_element, format_tensor, format_tensor3, word_label, Element, Letter, Tensor, Word};

#[derive(Clone, Debug)]
pub struct Check {
    pub step: u8,
    pub name: String,
    pub passed: bool,
    /// Rendered residual, `0` when the identity holds.
    pub residual: String,
}

#[derive(Clone, Debug, Default)]
pub struct HopfReport {
    pub checks: Vec<Check>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn step_passed(&self, step: u8) -> bool {
        self.checks.iter().filter(|c| c.step == step).all(|c| c.passed)
    }

    pub fn step_count(&self, step: u8) -> usize {
        self.checks.iter().filter(|c| c.step == step).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// A defining relation `lhs = 0`, kept as an unnormalized combination of words.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: Element,
}

fn rel(name: impl Into<String>, terms: &[(Scalar, Word)]) -> Relation {
    let mut lhs = Element::new();
    for (c, w) in terms {
        add_term(&mut lhs, w.clone(), c);
    }
    Relation { name: name.into(), lhs }
}

fn one() -> Scalar {
    Scalar::one()
}

fn m1() -> Scalar {
    Scalar::from_int(-1)
}

fn sgn(i: i64) -> Scalar {
    if i.rem_euclid(2) == 0 {
        one()
    } else {
        m1()
    }
}

/// Generators exercised by the checker; indexed families use `|i| <= window`.
pub fn generators(h: &PresentedHopf, window: i64) -> Vec<Letter> {
    use Letter::*;
    match h.family() {
        Family::Hefuv => {
            let mut v = Vec::new();
            for i in -window..=window {
                v.push(E(i));
                v.push(F(i));
            }
            v.push(U);
            v.push(V);
            v
        }
        Family::Bmn { .. } => vec![GH(1, 0), GH(-1, 0), GH(0, 1), GH(0, -1), X, Y],
        _ => vec![G(1), G(-1), X],
    }
}

pub fn relations(h: &PresentedHopf, window: i64) -> Vec<Relation> {
    use Letter::*;
    let mut out = Vec::new();
    match h.family() {
        Family::Hefuv => {
            out.push(rel("e[0] + f[0] = 1", &[(one(), vec![E(0)]), (one(), vec![F(0)]), (m1(), vec![])]));
            let w = window;
            for i in -w..=w {
                for j in -w..=w {
                    out.push(rel(
                        format!("e[{i}]e[{j}] = e[{}]", i + j),
                        &[(one(), vec![E(i), E(j)]), (m1(), vec![E(i + j)])],
                    ));
                    out.push(rel(
                        format!("f[{i}]f[{j}] = f[{}]", i + j),
                        &[(one(), vec![F(i), F(j)]), (m1(), vec![F(i + j)])],
                    ));
                    out.push(rel(format!("e[{i}]f[{j}] = 0"), &[(one(), vec![E(i), F(j)])]));
                    out.push(rel(format!("f[{j}]e[{i}] = 0"), &[(one(), vec![F(j), E(i)])]));
                }
                for (l, n) in [(U, "u"), (V, "v")] {
                    out.push(rel(
                        format!("e[{i}]{n} = (-1)^{i} {n}e[{i}]"),
                        &[(one(), vec![E(i), l]), (-sgn(i), vec![l, E(i)])],
                    ));
                    out.push(rel(
                        format!("f[{i}]{n} = (-1)^{i} {n}f[{i}]"),
                        &[(one(), vec![F(i), l]), (-sgn(i), vec![l, F(i)])],
                    ));
                }
            }
            out.push(rel("u^2 = 0", &[(one(), vec![U, U])]));
            out.push(rel("v^2 = 0", &[(one(), vec![V, V])]));
            out.push(rel("uv + vu = 0", &[(one(), vec![U, V]), (one(), vec![V, U])]));
        }
        Family::A { n, d, mu, q } => {
            out.push(rel(format!("g^{n} = 1"), &[(one(), vec![G(1); *n as usize]), (m1(), vec![])]));
            out.push(rel("gg^-1 = 1", &[(one(), vec![G(1), G(-1)]), (m1(), vec![])]));
            out.push(rel("g^-1g = 1", &[(one(), vec![G(-1), G(1)]), (m1(), vec![])]));
            out.push(rel(
                format!("x^{d} = mu(1 - g^{d})"),
                &[(one(), vec![X; *d as usize]), (-mu.clone(), vec![]), (mu.clone(), vec![G(1); *d as usize])],
            ));
            out.push(rel("xg = qgx", &[(one(), vec![X, G(1)]), (-q.clone(), vec![G(1), X])]));
        }
        Family::Anq { n, q } => {
            out.push(rel("gg^-1 = 1", &[(one(), vec![G(1), G(-1)]), (m1(), vec![])]));
            out.push(rel("g^-1g = 1", &[(one(), vec![G(-1), G(1)]), (m1(), vec![])]));
            out.push(rel("xg = qgx", &[(one(), vec![X, G(1)]), (-q.clone(), vec![G(1), X])]));
            out.push(rel(
                format!("x^{n} = 1 - g^{n}"),
                &[(one(), vec![X; *n as usize]), (m1(), vec![]), (one(), vec![G(1); *n as usize])],
            ));
        }
        Family::Hinf { chi, lambda } => {
            out.push(rel("gg^-1 = 1", &[(one(), vec![G(1), G(-1)]), (m1(), vec![])]));
            out.push(rel("g^-1g = 1", &[(one(), vec![G(-1), G(1)]), (m1(), vec![])]));
            out.push(rel(
                "xg = chi gx + lambda(g - g^2)",
                &[
                    (one(), vec![X, G(1)]),
                    (-chi.clone(), vec![G(1), X]),
                    (-lambda.clone(), vec![G(1)]),
                    (lambda.clone(), vec![G(1), G(1)]),
                ],
            ));
        }
        Family::Bmn { m, n, lambda, s, t, k } => {
            let g = GH(1, 0);
            let gi = GH(-1, 0);
            let hh = GH(0, 1);
            let hi = GH(0, -1);
            out.push(rel("gg^-1 = 1", &[(one(), vec![g, gi]), (m1(), vec![])]));
            out.push(rel("hh^-1 = 1", &[(one(), vec![hh, hi]), (m1(), vec![])]));
            out.push(rel("gh = hg", &[(one(), vec![g, hh]), (m1(), vec![hh, g])]));
            let pw = |l: Letter, linv: Letter, e: i64| -> Word { vec![if e >= 0 { l } else { linv }; e.unsigned_abs() as usize] };
            let mut gm = pw(g, gi, *m);
            let hn = pw(hh, hi, *n);
            out.push(rel(format!("g^{m} = h^{n}"), &[(one(), std::mem::take(&mut gm)), (m1(), hn)]));
            out.push(rel(
                "xy + lambda yx = k(1 - gh)",
                &[
                    (one(), vec![X, Y]),
                    (lambda.clone(), vec![Y, X]),
                    (-k.clone(), vec![]),
                    (k.clone(), vec![g, hh]),
                ],
            ));
            out.push(rel("gx + xg = 0", &[(one(), vec![g, X]), (one(), vec![X, g])]));
            out.push(rel("lambda hx + xh = 0", &[(lambda.clone(), vec![hh, X]), (one(), vec![X, hh])]));
            out.push(rel("x^2 = s(1 - g^2)", &[(one(), vec![X, X]), (-s.clone(), vec![]), (s.clone(), vec![g, g])]));
            out.push(rel("hy + yh = 0", &[(one(), vec![hh, Y]), (one(), vec![Y, hh])]));
            out.push(rel("gy + lambda yg = 0", &[(one(), vec![g, Y]), (lambda.clone(), vec![Y, g])]));
            out.push(rel("y^2 = t(1 - h^2)", &[(one(), vec![Y, Y]), (-t.clone(), vec![]), (t.clone(), vec![hh, hh])]));
        }
    }
    out
}

fn check(step: u8, name: String, residual: String) -> Check {
    Check { step, passed: residual == "0", name, residual }
}

fn gen_name(l: Letter) -> String {
    word_label(&[l])
}

fn step1(h: &PresentedHopf, r: &Relation) -> Vec<Check> {
    let d = h.delta(&r.lhs);
    let e = h.counit(&r.lhs);
    vec![
        check(1, format!("Step 1: Δ({}) = 0 [{}]", format_element(&r.lhs), r.name), format_tensor(&d)),
        check(1, format!("Step 1: ε({}) = 0 [{}]", format_element(&r.lhs), r.name), e.to_string()),
    ]
}

fn step3(h: &PresentedHopf, r: &Relation) -> Vec<Check> {
    let s = h.antipode(&r.lhs);
    vec![check(3, format!("Step 3: S({}) = 0 [{}]", format_element(&r.lhs), r.name), format_element(&s))]
}

fn step2(h: &PresentedHopf, l: Letter) -> Vec<Check> {
    let x = h.gen(l);
    let d = h.delta(&x);
    let mut assoc = h.delta_left(&d);
    for (k, c) in h.delta_right(&d) {
        add_term(&mut assoc, k, &-c);
    }
    let n = gen_name(l);
    let lc = h.sub(&h.counit_left(&d), &x);
    let rc = h.sub(&h.counit_right(&d), &x);
    vec![
        check(2, format!("Step 2: (Δ⊗id)Δ({n}) = (id⊗Δ)Δ({n})"), format_tensor3(&assoc)),
        check(2, format!("Step 2: (ε⊗id)Δ({n}) = {n}"), format_element(&h.normalize(&lc))),
        check(2, format!("Step 2: (id⊗ε)Δ({n}) = {n}"), format_element(&h.normalize(&rc))),
    ]
}

fn step4(h: &PresentedHopf, l: Letter) -> Vec<Check> {
    let x = h.gen(l);
    let d = h.delta(&x);
    let unit = h.unit_times(&h.counit(&x));
    let n = gen_name(l);
    vec![
        check(4, format!("Step 4: m(S⊗id)Δ({n}) = ε({n})1"), format_element(&h.sub(&h.m_s_id(&d), &unit))),
        check(4, format!("Step 4: m(id⊗S)Δ({n}) = ε({n})1"), format_element(&h.sub(&h.m_id_s(&d), &unit))),
    ]
}

/// Runs Steps 1 to 4 on every generator and relation within `window`.
pub fn verify_hopf_axioms(h: &PresentedHopf, window: i64, exec: Exec) -> HopfReport {
    let rels = relations(h, window);
    let gens = generators(h, window);
    let mut checks = Vec::new();
    checks.extend(map_slice(exec, &rels, |r| step1(h, r)).into_iter().flatten());
    checks.extend(map_slice(exec, &gens, |&l| step2(h, l)).into_iter().flatten());
    checks.extend(map_slice(exec, &rels, |r| step3(h, r)).into_iter().flatten());
    checks.extend(map_slice(exec, &gens, |&l| step4(h, l)).into_iter().flatten());
    HopfReport { checks }
}

/// Residual of `Δ(a)Δ(b) - Δ(ab)`.
pub fn bialgebra_residual(h: &PresentedHopf, a: &Element, b: &Element) -> Tensor {
    let lhs = h.tensor_mul(&h.delta(a), &h.delta(b));
    let mut r = h.delta(&h.multiply(a, b));
    for (k, c) in lhs {
        add_term(&mut r, k, &-c);
    }
    r
}
