//! Coradical, simple block splitting and the coradical filtration.
//!
//! The coradical is the annihilator of the Jacobson radical of the dual
//! algebra, found through the trace form. Blocks are split by central
//! idempotents, and each block gets a basic multiplicative matrix read off a
//! minimal left ideal of its dual matrix algebra.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use num_bigint::BigInt;

use crate::coalgebra::{wedge_unchecked, CoMatrix, Coalgebra};
use crate::error::CoalgebraError;
use crate::linalg::{axpy, kernel, Echelon, SparseVec, Subspace};
use crate::par::{map_range, Exec};
use crate::poly::Q;
use crate::scalar::Scalar;

/// The dual algebra of a coalgebra: (fg)(x) = Σ f(x₁) g(x₂), with unit ε.
/// Elements are dense coefficient vectors in the dual basis.
pub struct DualAlgebra<'a> {
    c: &'a Coalgebra,
}

impl<'a> DualAlgebra<'a> {
    pub fn new(c: &'a Coalgebra) -> Self {
        DualAlgebra { c }
    }

    pub fn dim(&self) -> usize {
        self.c.dim()
    }

    pub fn unit(&self) -> Vec<Scalar> {
        (0..self.dim()).map(|i| self.c.counit_basis(i).clone()).collect()
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }

    pub fn mul(&self, f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
        (0..self.dim())
            .map(|a| {
                let mut s = Scalar::zero();
                for (j, k, c) in self.c.delta_basis(a) {
                    if f[*j].is_zero() || g[*k].is_zero() {
                        continue;
                    }
                    s += &(&(&f[*j] * &g[*k]) * c);
                }
                s
            })
            .collect()
    }

    /// `f ⇀ x = Σ x₁ f(x₂)`.
    pub fn hit(&self, f: &[Scalar], x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in x {
            for (j, k, d) in self.c.delta_basis(*i) {
                if !f[*k].is_zero() {
                    crate::linalg::add_entry(&mut out, *j, &(&(c * d) * &f[*k]));
                }
            }
        }
        out
    }
}

fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

fn to_dense(v: &SparseVec, n: usize) -> Vec<Scalar> {
    let mut d = vec![Scalar::zero(); n];
    for (i, x) in v {
        d[*i] = x.clone();
    }
    d
}

fn lin(terms: &[(Scalar, &Vec<Scalar>)], n: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); n];
    for (c, v) in terms {
        for i in 0..n {
            if !v[i].is_zero() {
                out[i] += &(c * &v[i]);
            }
        }
    }
    out
}

/// Minimal polynomial of `a` in an algebra with unit `unit`, low degree first, monic.
pub fn min_poly(alg: &DualAlgebra, unit: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
    let mut ech = Echelon::new();
    let mut p = unit.to_vec();
    let mut i = 0;
    loop {
        if let Some(rel) = ech.insert_tagged(to_sparse(&p), crate::linalg::unit_vec(i)) {
            return (0..=i).map(|k| rel.get(&k).cloned().unwrap_or_default()).collect();
        }
        p = alg.mul(&p, a);
        i += 1;
    }
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let small = n.to_u64().filter(|&x| x <= 1_000_000_000_000)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= small {
        if small % d == 0 {
            out.push(BigInt::from(d));
            if d * d != small {
                out.push(BigInt::from(small / d));
            }
        }
        d += 1;
    }
    out.sort();
    Some(out)
}

fn eval_q(p: &[Q], x: &Q) -> Q {
    let mut acc = Q::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Some rational root of `p` (nonzero constant term), by the rational root theorem.
fn rational_root(p: &[Q]) -> Option<Q> {
    let mut den = BigInt::one();
    for c in p {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Q::from_integer(den.clone())).to_integer()).collect();
    let a0 = ints.first()?;
    let ad = ints.last()?;
    let us = divisors(a0)?;
    let vs = divisors(ad)?;
    for v in &vs {
        for u in &us {
            for s in [1i64, -1] {
                let cand = Q::new(u * BigInt::from(s), v.clone());
                if eval_q(p, &cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

/// Finds one root in Q(ζ_N) of the form r·ζ_N^k with r rational.
fn find_root(p: &[Scalar], n: u32) -> Option<Scalar> {
    let d = p.len() - 1;
    for k in 0..n as i64 {
        let twisted: Option<Vec<Q>> = p
            .iter()
            .enumerate()
            .map(|(i, c)| (c * &Scalar::zeta_pow(n, k * (i as i64 - d as i64))).to_rational())
            .collect();
        if let Some(q) = twisted {
            if let Some(r) = rational_root(&q) {
                return Some(Scalar::from_rational(r) * Scalar::zeta_pow(n, k));
            }
        }
    }
    None
}

fn eval_k(p: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

fn deflate(p: &[Scalar], r: &Scalar) -> Vec<Scalar> {
    let d = p.len() - 1;
    let mut q = vec![Scalar::zero(); d];
    let mut carry = Scalar::zero();
    for i in (0..d).rev() {
        carry = &p[i + 1] + &(&carry * r);
        q[i] = carry.clone();
    }
    q
}

/// All roots of a monic polynomial if it splits into distinct linear factors
/// of the supported shape over Q(ζ_N).
pub fn split_roots(p: &[Scalar], field_order: u32) -> Option<Vec<Scalar>> {
    let mut n = lcm_u32(2, field_order.max(1));
    for c in p {
        n = lcm_u32(n, c.order());
    }
    if p.iter().any(|c| c.is_transcendental()) {
        return None;
    }
    let mut p = p.to_vec();
    let mut roots: Vec<Scalar> = Vec::new();
    while p.len() > 1 {
        let r = if p[0].is_zero() { Scalar::zero() } else { find_root(&p, n)? };
        debug_assert!(eval_k(&p, &r).is_zero());
        if roots.contains(&r) {
            return None;
        }
        p = deflate(&p, &r);
        roots.push(r);
    }
    Some(roots)
}

/// Lagrange idempotents of a split semisimple element `a` of the algebra with unit `unit`.
fn lagrange_idempotents(alg: &DualAlgebra, unit: &[Scalar], a: &[Scalar], roots: &[Scalar]) -> Vec<Vec<Scalar>> {
    let n = unit.len();
    roots
        .iter()
        .enumerate()
        .map(|(j, lj)| {
            let mut e = unit.to_vec();
            for (k, lk) in roots.iter().enumerate() {
                if k == j {
                    continue;
                }
                let factor = lin(&[(Scalar::one(), &a.to_vec()), (-lk, &unit.to_vec())], n);
                let scale = (lj - lk).inv();
                e = alg.mul(&e, &factor).iter().map(|x| x * &scale).collect();
            }
            e
        })
        .collect()
}

/// A simple subcoalgebra with a basic multiplicative matrix of its comatrix basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleBlock {
    pub space: Subspace,
    pub size: usize,
    pub matrix: CoMatrix,
    /// The block's counit extended by zero on the other blocks, as a functional
    /// on ambient coordinates. Only meaningful on the coradical.
    pub idempotent: SparseVec,
}

impl SimpleBlock {
    pub fn apply_idempotent(&self, x: &SparseVec) -> Scalar {
        x.iter().filter_map(|(k, c)| self.idempotent.get(k).map(|e| c * e)).sum()
    }

    /// Character: trace of the multiplicative matrix.
    pub fn character(&self) -> SparseVec {
        self.matrix.trace()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coradical {
    pub space: Subspace,
    pub blocks: Vec<SimpleBlock>,
}

impl Coradical {
    /// Index of the block containing `v`, if any.
    pub fn block_of(&self, v: &SparseVec) -> Option<usize> {
        self.blocks.iter().position(|b| b.space.contains(v))
    }
}

/// Least common multiple of the cyclotomic orders appearing in the structure constants.
pub fn field_order(c: &Coalgebra) -> u32 {
    let mut n = 1;
    for i in 0..c.dim() {
        n = lcm_u32(n, c.counit_basis(i).order());
        for (_, _, x) in c.delta_basis(i) {
            n = lcm_u32(n, x.order());
        }
    }
    n
}

/// The coradical H₀ as the span of the columns of the trace-form Gram matrix.
pub fn coradical_space(c: &Coalgebra, exec: Exec) -> Subspace {
    let n = c.dim();
    // t_i = trace of left multiplication by δ_i.
    let t: Vec<Scalar> = map_range(exec, n, |i| {
        let mut s = Scalar::zero();
        for k in 0..n {
            for (j, kk, x) in c.delta_basis(k) {
                if *j == i && *kk == k {
                    s += x;
                }
            }
        }
        s
    });
    let mut cols = vec![SparseVec::new(); n];
    for (i, ti) in t.iter().enumerate() {
        if ti.is_zero() {
            continue;
        }
        for (a, b, x) in c.delta_basis(i) {
            crate::linalg::add_entry(&mut cols[*b], *a, &(x * ti));
        }
    }
    Subspace::span(n, cols)
}

fn center(alg: &DualAlgebra, exec: Exec) -> Vec<Vec<Scalar>> {
    let d = alg.dim();
    let images: Vec<SparseVec> = map_range(exec, d, |i| {
        let z = alg.basis(i);
        let mut img = SparseVec::new();
        for b in 0..d {
            let db = alg.basis(b);
            let l = alg.mul(&z, &db);
            let r = alg.mul(&db, &z);
            for a in 0..d {
                let v = &l[a] - &r[a];
                if !v.is_zero() {
                    img.insert(b * d + a, v);
                }
            }
        }
        img
    });
    kernel(&images).iter().map(|k| to_dense(k, d)).collect()
}

fn central_idempotents(alg: &DualAlgebra, exec: Exec, order: u32, label: &str) -> Result<Vec<Vec<Scalar>>, CoalgebraError> {
    let z = center(alg, exec);
    let mut idems = vec![alg.unit()];
    for zb in &z {
        let mut next = Vec::new();
        for e in &idems {
            let a = alg.mul(e, zb);
            let mp = min_poly(alg, e, &a);
            let roots = split_roots(&mp, order).ok_or_else(|| CoalgebraError::NonSplit {
                block: label.to_string(),
                reason: "center does not split over the base field".into(),
            })?;
            if roots.len() == 1 {
                next.push(e.clone());
            } else {
                next.extend(lagrange_idempotents(alg, e, &a, &roots));
            }
        }
        idems = next;
    }
    Ok(idems)
}

fn primitive_idempotent(alg: &DualAlgebra, r: usize, order: u32, label: &str) -> Result<Vec<Scalar>, CoalgebraError> {
    let d = alg.dim();
    let mut candidates: Vec<Vec<Scalar>> = (0..d).map(|i| alg.basis(i)).collect();
    for i in 0..d {
        for j in i + 1..d {
            let mut v = alg.basis(i);
            v[j] = Scalar::one();
            candidates.push(v);
        }
    }
    candidates.push((0..d).map(|i| Scalar::from_int(i as i64 + 1)).collect());
    // Shrink e one spectral piece at a time inside the corner eAe until it has rank 1.
    let mut e = alg.unit();
    let mut rank = r;
    while rank > 1 {
        let mut next = None;
        for c in &candidates {
            let a = alg.mul(&alg.mul(&e, c), &e);
            if let Some(f) = spectral_piece(alg, &e, &a, order) {
                next = Some(f);
                break;
            }
        }
        let f = next.ok_or_else(|| CoalgebraError::NonSplit { block: label.to_string(), reason: "no split regular element found".into() })?;
        let rest: Vec<Scalar> = e.iter().zip(&f).map(|(x, y)| x - y).collect();
        let rf = idempotent_rank(alg, &f, r);
        let (f, rf) = if 2 * rf <= rank { (f, rf) } else { (rest, rank - rf) };
        e = f;
        rank = rf;
    }
    Ok(e)
}

/// Idempotent projecting onto one eigenvalue of `a` inside the corner with unit `e`,
/// if `a` has a simple root in the base field and is not a scalar there.
fn spectral_piece(alg: &DualAlgebra, e: &[Scalar], a: &[Scalar], order: u32) -> Option<Vec<Scalar>> {
    let mp = min_poly(alg, e, a);
    if mp.len() <= 2 || mp.iter().any(|c| c.is_transcendental()) {
        return None;
    }
    let mut n = lcm_u32(2, order.max(1));
    for c in &mp {
        n = lcm_u32(n, c.order());
    }
    let lambda = if mp[0].is_zero() { Scalar::zero() } else { find_root(&mp, n)? };
    let q = deflate(&mp, &lambda);
    let scale = eval_k(&q, &lambda);
    if scale.is_zero() {
        return None;
    }
    // q(a) by Horner with unit e
    let mut acc = vec![Scalar::zero(); e.len()];
    for c in q.iter().rev() {
        acc = alg.mul(&acc, a).iter().zip(e).map(|(x, u)| x + &(c * u)).collect();
    }
    let inv = scale.inv();
    Some(acc.iter().map(|x| x * &inv).collect())
}

fn idempotent_rank(alg: &DualAlgebra, f: &[Scalar], r: usize) -> usize {
    let d = alg.dim();
    let rows: Vec<SparseVec> = (0..d).map(|i| to_sparse(&alg.mul(f, &alg.basis(i)))).collect();
    Subspace::span(d, rows).dim() / r
}

fn split_block(c: &Coalgebra, space: Subspace, idempotent: SparseVec, order: u32) -> Result<SimpleBlock, CoalgebraError> {
    let label = format!("at basis {}", c.label(space.pivots()[0]));
    let dim = space.dim();
    let r = (dim as f64).sqrt().round() as usize;
    if r * r != dim {
        return Err(CoalgebraError::NonSplit { block: label, reason: format!("dimension {dim} is not a square") });
    }
    let rd = c.restrict(&space, "x")?;
    let alg = DualAlgebra::new(&rd);
    let e = primitive_idempotent(&alg, r, order, &label)?;
    let left_ideal = Subspace::span(dim, (0..dim).map(|k| to_sparse(&alg.mul(&alg.basis(k), &e))));
    if left_ideal.dim() != r {
        return Err(CoalgebraError::NonSplit { block: label, reason: "minimal left ideal has the wrong dimension".into() });
    }
    let w: Vec<Vec<Scalar>> = left_ideal.rows().iter().map(|x| to_dense(x, dim)).collect();
    let mut entries = vec![SparseVec::new(); r * r];
    for (k, xk) in space.rows().iter().enumerate() {
        let dk = alg.basis(k);
        for (b, wb) in w.iter().enumerate() {
            let prod = to_sparse(&alg.mul(&dk, wb));
            for (a, coef) in left_ideal.coords(&prod).iter().enumerate() {
                if !coef.is_zero() {
                    axpy(&mut entries[a * r + b], coef, xk);
                }
            }
        }
    }
    Ok(SimpleBlock { space, size: r, matrix: CoMatrix::new(r, r, entries), idempotent })
}

/// Coradical with its simple blocks, ordered by first pivot column.
pub fn coradical(c: &Coalgebra, exec: Exec) -> Result<Coradical, CoalgebraError> {
    let space = coradical_space(c, exec);
    let order = field_order(c);
    let r0 = c.restrict(&space, "h")?;
    let alg = DualAlgebra::new(&r0);
    let idems = central_idempotents(&alg, exec, order, "coradical")?;
    let mut blocks_in: Vec<(Subspace, SparseVec)> = idems
        .iter()
        .map(|e| {
            let vecs = (0..r0.dim()).map(|a| {
                let img = alg.hit(e, &crate::linalg::unit_vec(a));
                crate::linalg::combine(img.iter().map(|(k, x)| (x, &space.rows()[*k])))
            });
            let d = Subspace::span(c.dim(), vecs);
            let f: SparseVec = space
                .pivots()
                .iter()
                .zip(e)
                .filter(|(_, x)| !x.is_zero())
                .map(|(p, x)| (*p, x.clone()))
                .collect();
            (d, f)
        })
        .collect();
    blocks_in.sort_by_key(|(d, _)| d.pivots()[0]);
    let blocks = blocks_in
        .into_iter()
        .map(|(d, f)| split_block(c, d, f, order))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Coradical { space, blocks })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub layers: Vec<Subspace>,
}

impl Filtration {
    pub fn loewy_length(&self) -> usize {
        self.layers.len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.dim()).collect()
    }
}

/// H₀ ⊂ H₁ ⊂ … with H_n = H_{n−1} ∧ H₀, ending at the whole coalgebra.
pub fn coradical_filtration(c: &Coalgebra, exec: Exec) -> Result<Filtration, CoalgebraError> {
    let h0 = coradical_space(c, exec);
    filtration_from(c, h0, exec)
}

pub fn filtration_from(c: &Coalgebra, h0: Subspace, exec: Exec) -> Result<Filtration, CoalgebraError> {
    let mut layers = vec![h0.clone()];
    while layers.last().unwrap().dim() < c.dim() {
        let next = wedge_unchecked(layers.last().unwrap(), &h0, c, exec);
        if next.dim() == layers.last().unwrap().dim() {
            return Err(CoalgebraError::FiltrationStalled { dim: next.dim(), total: c.dim() });
        }
        layers.push(next);
    }
    Ok(Filtration { layers })
}
