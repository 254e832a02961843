//! Structure-constant coalgebras and matrices over them.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::CoalgebraError;
use crate::linalg::{add_entry, axpy, kernel, rank, SparseVec, Subspace};
use crate::par::{map_range, Exec};
use crate::scalar::Scalar;

/// Element of C ⊗ C in the basis b_j ⊗ b_k.
pub type Tensor2 = BTreeMap<(usize, usize), Scalar>;
/// Element of C ⊗ C ⊗ C.
pub type Tensor3 = BTreeMap<(usize, usize, usize), Scalar>;

pub fn add_t2(t: &mut Tensor2, key: (usize, usize), c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&key) {
        Some(y) => {
            *y += c;
            if y.is_zero() {
                t.remove(&key);
            }
        }
        None => {
            t.insert(key, c.clone());
        }
    }
}

fn add_t3(t: &mut Tensor3, key: (usize, usize, usize), c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&key) {
        Some(y) => {
            *y += c;
            if y.is_zero() {
                t.remove(&key);
            }
        }
        None => {
            t.insert(key, c.clone());
        }
    }
}

/// `a ⊗ b` for sparse vectors.
pub fn tensor_vecs(a: &SparseVec, b: &SparseVec) -> Tensor2 {
    let mut t = Tensor2::new();
    for (i, x) in a {
        for (j, y) in b {
            t.insert((*i, *j), x * y);
        }
    }
    t
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    labels: Vec<String>,
    delta: Vec<Vec<(usize, usize, Scalar)>>,
    counit: Vec<Scalar>,
}

impl Coalgebra {
    /// Builds a coalgebra from per-basis-element Δ terms and the counit.
    /// Duplicate terms are merged; indices are range-checked.
    pub fn new(
        labels: Vec<String>,
        delta: Vec<Vec<(usize, usize, Scalar)>>,
        counit: Vec<Scalar>,
    ) -> Result<Self, CoalgebraError> {
        let n = labels.len();
        if delta.len() != n {
            return Err(CoalgebraError::Structural(format!("delta has {} rows for {} basis elements", delta.len(), n)));
        }
        if counit.len() != n {
            return Err(CoalgebraError::Structural(format!("counit has {} entries for {} basis elements", counit.len(), n)));
        }
        let mut merged = Vec::with_capacity(n);
        for (i, terms) in delta.into_iter().enumerate() {
            let mut t = Tensor2::new();
            for (j, k, c) in terms {
                if j >= n || k >= n {
                    return Err(CoalgebraError::IndexOutOfRange { basis: i, index: j.max(k), dim: n });
                }
                add_t2(&mut t, (j, k), &c);
            }
            merged.push(t.into_iter().map(|((j, k), c)| (j, k, c)).collect());
        }
        Ok(Coalgebra { labels, delta: merged, counit })
    }

    /// Builds from flat `(i, j, k, c)` triples meaning `Δ(b_i) ∋ c·b_j⊗b_k`.
    pub fn from_triples(
        labels: Vec<String>,
        triples: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        counit: impl IntoIterator<Item = (usize, Scalar)>,
    ) -> Result<Self, CoalgebraError> {
        let n = labels.len();
        let mut delta = vec![Vec::new(); n];
        for (i, j, k, c) in triples {
            if i >= n {
                return Err(CoalgebraError::IndexOutOfRange { basis: i, index: i, dim: n });
            }
            delta[i].push((j, k, c));
        }
        let mut eps = vec![Scalar::zero(); n];
        for (i, c) in counit {
            if i >= n {
                return Err(CoalgebraError::IndexOutOfRange { basis: i, index: i, dim: n });
            }
            eps[i] = c;
        }
        Coalgebra::new(labels, delta, eps)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn delta_basis(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.delta[i]
    }

    pub fn counit_basis(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn delta(&self, v: &SparseVec) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, c) in v {
            for (j, k, d) in &self.delta[*i] {
                add_t2(&mut t, (*j, *k), &(c * d));
            }
        }
        t
    }

    pub fn counit(&self, v: &SparseVec) -> Scalar {
        v.iter().map(|(i, c)| c * &self.counit[*i]).sum()
    }

    /// Sparse vector for a labelled basis element; panics on unknown labels.
    pub fn basis_vec(&self, label: &str) -> SparseVec {
        let i = self.index_of(label).unwrap_or_else(|| panic!("unknown basis label {label:?}"));
        crate::linalg::unit_vec(i)
    }

    /// Integer combination of labelled basis elements.
    pub fn combo(&self, terms: &[(i64, &str)]) -> SparseVec {
        let mut v = SparseVec::new();
        for (c, l) in terms {
            let i = self.index_of(l).unwrap_or_else(|| panic!("unknown basis label {l:?}"));
            add_entry(&mut v, i, &Scalar::from_int(*c));
        }
        v
    }

    pub fn total_terms(&self) -> usize {
        self.delta.iter().map(|d| d.len()).sum()
    }

    /// Returns a copy with one Δ coefficient replaced; used to build broken fixtures.
    pub fn with_delta_coefficient(&self, i: usize, j: usize, k: usize, c: Scalar) -> Result<Self, CoalgebraError> {
        let mut delta = self.delta.clone();
        if i >= self.dim() {
            return Err(CoalgebraError::IndexOutOfRange { basis: i, index: i, dim: self.dim() });
        }
        delta[i].retain(|(a, b, _)| (*a, *b) != (j, k));
        delta[i].push((j, k, c));
        Coalgebra::new(self.labels.clone(), delta, self.counit.clone())
    }

    /// Coalgebra structure on a subcoalgebra, in the basis of its echelon rows.
    pub fn restrict(&self, sub: &Subspace, label_prefix: &str) -> Result<Coalgebra, CoalgebraError> {
        if !is_subcoalgebra(sub, self) {
            return Err(CoalgebraError::NotSubcoalgebra(label_prefix.to_string()));
        }
        let index: BTreeMap<usize, usize> = sub.pivots().iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let mut delta = Vec::with_capacity(sub.dim());
        let mut counit = Vec::with_capacity(sub.dim());
        for row in sub.rows() {
            let d = self.delta(row);
            let mut terms = Vec::new();
            for ((j, k), c) in d {
                if let (Some(a), Some(b)) = (index.get(&j), index.get(&k)) {
                    terms.push((*a, *b, c));
                }
            }
            delta.push(terms);
            counit.push(self.counit(row));
        }
        let labels = (0..sub.dim()).map(|i| format!("{label_prefix}{i}")).collect();
        Coalgebra::new(labels, delta, counit)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    Coassociativity,
    LeftCounit,
    RightCounit,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identity::Coassociativity => "(Δ⊗id)Δ = (id⊗Δ)Δ",
            Identity::LeftCounit => "(ε⊗id)Δ = id",
            Identity::RightCounit => "(id⊗ε)Δ = id",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub basis: usize,
    pub label: String,
    pub identity: Identity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraReport {
    pub checked: usize,
    pub failures: Vec<AxiomFailure>,
}

impl CoalgebraReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&AxiomFailure> {
        self.failures.first()
    }
}

fn coassoc_sides(c: &Coalgebra, i: usize) -> (Tensor3, Tensor3) {
    let mut left = Tensor3::new();
    let mut right = Tensor3::new();
    for (j, k, x) in c.delta_basis(i) {
        for (a, b, y) in c.delta_basis(*j) {
            add_t3(&mut left, (*a, *b, *k), &(x * y));
        }
        for (a, b, y) in c.delta_basis(*k) {
            add_t3(&mut right, (*j, *a, *b), &(x * y));
        }
    }
    (left, right)
}

fn check_basis(c: &Coalgebra, i: usize) -> Vec<Identity> {
    let mut bad = Vec::new();
    let (l, r) = coassoc_sides(c, i);
    if l != r {
        bad.push(Identity::Coassociativity);
    }
    let mut lc = SparseVec::new();
    let mut rc = SparseVec::new();
    for (j, k, x) in c.delta_basis(i) {
        add_entry(&mut lc, *k, &(x * c.counit_basis(*j)));
        add_entry(&mut rc, *j, &(x * c.counit_basis(*k)));
    }
    let e = crate::linalg::unit_vec(i);
    if lc != e {
        bad.push(Identity::LeftCounit);
    }
    if rc != e {
        bad.push(Identity::RightCounit);
    }
    bad
}

/// Checks coassociativity and both counit laws on every basis element.
pub fn verify_coalgebra(c: &Coalgebra, exec: Exec) -> CoalgebraReport {
    let per = map_range(exec, c.dim(), |i| check_basis(c, i));
    let failures = per
        .into_iter()
        .enumerate()
        .flat_map(|(i, ids)| {
            ids.into_iter().map(move |identity| (i, identity))
        })
        .map(|(i, identity)| AxiomFailure { basis: i, label: c.label(i).to_string(), identity })
        .collect();
    CoalgebraReport { checked: c.dim(), failures }
}

/// Matrix whose entries are vectors in a coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<SparseVec>,
}

impl CoMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<SparseVec>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        CoMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<SparseVec>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        CoMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        CoMatrix { rows, cols, entries: vec![SparseVec::new(); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &SparseVec {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[SparseVec] {
        &self.entries
    }

    pub fn trace(&self) -> SparseVec {
        let mut t = SparseVec::new();
        for i in 0..self.rows.min(self.cols) {
            axpy(&mut t, &Scalar::one(), self.get(i, i));
        }
        t
    }

    /// Conjugates by a scalar matrix: `L · self · L⁻¹`.
    pub fn conjugate(&self, l: &crate::linalg::Mat, l_inv: &crate::linalg::Mat) -> CoMatrix {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut tmp = vec![SparseVec::new(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = l.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    axpy(&mut tmp[i * n + j], a, self.get(k, j));
                }
            }
        }
        let mut out = vec![SparseVec::new(); n * n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    let b = l_inv.get(k, j);
                    if !b.is_zero() {
                        axpy(&mut out[i * n + j], b, &tmp[i * n + k]);
                    }
                }
            }
        }
        CoMatrix::new(n, n, out)
    }

    /// Principal block on rows/columns `range`.
    pub fn block(&self, r: std::ops::Range<usize>, c: std::ops::Range<usize>) -> CoMatrix {
        let mut e = Vec::new();
        for i in r.clone() {
            for j in c.clone() {
                e.push(self.get(i, j).clone());
            }
        }
        CoMatrix::new(r.len(), c.len(), e)
    }
}

fn expected_delta_product(a: &CoMatrix, b: &CoMatrix, i: usize, j: usize) -> Tensor2 {
    let mut t = Tensor2::new();
    for k in 0..a.cols {
        for (key, c) in tensor_vecs(a.get(i, k), b.get(k, j)) {
            add_t2(&mut t, key, &c);
        }
    }
    t
}

/// Δ(g_ij) = Σ_t g_it ⊗ g_tj and ε(g_ij) = δ_ij.
pub fn is_multiplicative(g: &CoMatrix, c: &Coalgebra) -> bool {
    if g.rows != g.cols {
        return false;
    }
    for i in 0..g.rows {
        for j in 0..g.cols {
            let e = g.get(i, j);
            let want = if i == j { Scalar::one() } else { Scalar::zero() };
            if c.counit(e) != want {
                return false;
            }
            if c.delta(e) != expected_delta_product(g, g, i, j) {
                return false;
            }
        }
    }
    true
}

/// Multiplicative with linearly independent entries.
pub fn is_basic(g: &CoMatrix, c: &Coalgebra) -> bool {
    is_multiplicative(g, c) && rank(g.entries()) == g.rows * g.rows
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimitiveKind {
    NotPrimitive,
    Trivial,
    NonTrivial,
}

/// Classifies `x` against the (𝒞, 𝒟)-primitive condition
/// Δ(x_ij) = Σ_k c_ik⊗x_kj + Σ_t x_it⊗d_tj, with non-triviality judged against `h0`.
pub fn is_primitive(
    x: &CoMatrix,
    cm: &CoMatrix,
    dm: &CoMatrix,
    c: &Coalgebra,
    h0: &Subspace,
) -> Result<PrimitiveKind, CoalgebraError> {
    if cm.rows != cm.cols || dm.rows != dm.cols || cm.rows != x.rows || dm.rows != x.cols {
        return Err(CoalgebraError::ShapeMismatch(format!(
            "X is {}x{}, frames are {}x{} and {}x{}",
            x.rows, x.cols, cm.rows, cm.cols, dm.rows, dm.cols
        )));
    }
    for i in 0..x.rows {
        for j in 0..x.cols {
            let mut want = expected_delta_product(cm, x, i, j);
            for (k, v) in expected_delta_product(x, dm, i, j) {
                add_t2(&mut want, k, &v);
            }
            if c.delta(x.get(i, j)) != want {
                return Ok(PrimitiveKind::NotPrimitive);
            }
        }
    }
    if x.entries.iter().all(|e| h0.contains(e)) {
        Ok(PrimitiveKind::Trivial)
    } else {
        Ok(PrimitiveKind::NonTrivial)
    }
}

/// `Δ(A) ⊆ A ⊗ A`.
pub fn is_subcoalgebra(a: &Subspace, c: &Coalgebra) -> bool {
    if a.ambient() != c.dim() {
        return false;
    }
    let q = a.quotient_table();
    a.rows().iter().all(|row| {
        let d = c.delta(row);
        project_pair(&d, Some(&q), None).is_empty() && project_pair(&d, None, Some(&q)).is_empty()
    })
}

/// Applies quotient tables on either tensor factor (`None` = identity).
fn project_pair(t: &Tensor2, left: Option<&[SparseVec]>, right: Option<&[SparseVec]>) -> Tensor2 {
    let mut out = Tensor2::new();
    for ((j, k), c) in t {
        let lj;
        let l = match left.map(|t| &t[*j]) {
            Some(v) => v,
            None => {
                lj = crate::linalg::unit_vec(*j);
                &lj
            }
        };
        let rk;
        let r = match right.map(|t| &t[*k]) {
            Some(v) => v,
            None => {
                rk = crate::linalg::unit_vec(*k);
                &rk
            }
        };
        for (a, x) in l {
            for (b, y) in r {
                add_t2(&mut out, (*a, *b), &(c * &(x * y)));
            }
        }
    }
    out
}

/// `A ∧ B = {x : Δ(x) ∈ A⊗C + C⊗B}`, the kernel of `(π_A ⊗ π_B)Δ`.
pub fn wedge(a: &Subspace, b: &Subspace, c: &Coalgebra, exec: Exec) -> Result<Subspace, CoalgebraError> {
    if !is_subcoalgebra(a, c) {
        return Err(CoalgebraError::NotSubcoalgebra("left wedge factor".into()));
    }
    if !is_subcoalgebra(b, c) {
        return Err(CoalgebraError::NotSubcoalgebra("right wedge factor".into()));
    }
    Ok(wedge_unchecked(a, b, c, exec))
}

/// Wedge without the subcoalgebra checks.
pub fn wedge_unchecked(a: &Subspace, b: &Subspace, c: &Coalgebra, exec: Exec) -> Subspace {
    let n = c.dim();
    let qa = a.quotient_table();
    let qb = b.quotient_table();
    let images: Vec<SparseVec> = map_range(exec, n, |i| {
        let d = c.delta(&crate::linalg::unit_vec(i));
        project_pair(&d, Some(&qa), Some(&qb)).into_iter().map(|((j, k), x)| (j * n + k, x)).collect()
    });
    Subspace::span(n, kernel(&images))
}
