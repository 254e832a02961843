//! Right comodules over a structure-constant coalgebra.

use std::collections::BTreeMap;
use std::sync::Arc;

use coalgebra_core::coalgebra::add_t2;
use coalgebra_core::linalg::{add_entry, kernel, Frame, SparseVec};
use coalgebra_core::{is_subcoalgebra, CoMatrix, Coalgebra, ProductOracle, Scalar, Subspace};

use crate::error::ComoduleError;

/// A right comodule with basis m_0..m_{dim-1}. Row `i` of `rho` lists the terms
/// `(j, k, c)` of ρ(m_i) = Σ c·m_j⊗b_k.
#[derive(Clone, Debug)]
pub struct Comodule {
    coalgebra: Arc<Coalgebra>,
    dim: usize,
    rho: Vec<Vec<(usize, usize, Scalar)>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleFailure {
    pub basis: usize,
    pub identity: &'static str,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComoduleReport {
    pub checked: usize,
    pub failures: Vec<ComoduleFailure>,
}

impl ComoduleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl Comodule {
    pub fn new(
        coalgebra: Arc<Coalgebra>,
        dim: usize,
        rho: Vec<Vec<(usize, usize, Scalar)>>,
    ) -> Result<Self, ComoduleError> {
        if rho.len() != dim {
            return Err(ComoduleError::Structural(format!("coaction has {} rows for dimension {dim}", rho.len())));
        }
        let n = coalgebra.dim();
        for (i, terms) in rho.iter().enumerate() {
            for (j, k, _) in terms {
                if *j >= dim || *k >= n {
                    return Err(ComoduleError::Structural(format!(
                        "term ({j}, {k}) of ρ(m_{i}) is out of range (dim {dim}, coalgebra dim {n})"
                    )));
                }
            }
        }
        let rho = rho
            .into_iter()
            .map(|terms| {
                let mut t = BTreeMap::new();
                for (j, k, c) in terms {
                    add_t2(&mut t, (j, k), &c);
                }
                t.into_iter().map(|((j, k), c)| (j, k, c)).collect()
            })
            .collect();
        Ok(Comodule { coalgebra, dim, rho })
    }

    /// ρ(m_j) = Σ_i m_i ⊗ g_ij, for a square matrix `g` over the coalgebra.
    pub fn from_matrix(coalgebra: Arc<Coalgebra>, g: &CoMatrix) -> Result<Self, ComoduleError> {
        if g.rows() != g.cols() {
            return Err(ComoduleError::Structural("coaction matrix must be square".into()));
        }
        let n = g.rows();
        let rho = (0..n)
            .map(|j| (0..n).flat_map(|i| g.get(i, j).iter().map(move |(k, c)| (i, *k, c.clone()))).collect())
            .collect();
        Comodule::new(coalgebra, n, rho)
    }

    /// The subcomodule of the coalgebra (coaction Δ) spanned by independent `vectors`.
    pub fn subcomodule(coalgebra: Arc<Coalgebra>, vectors: &[SparseVec]) -> Result<Self, ComoduleError> {
        let frame = Frame::new(vectors).ok_or(ComoduleError::Dependent)?;
        let mut rho = Vec::with_capacity(vectors.len());
        for (i, v) in vectors.iter().enumerate() {
            // Group Δ(v) by right factor; each left part must lie in the span.
            let mut by_right: BTreeMap<usize, SparseVec> = BTreeMap::new();
            for ((a, b), c) in coalgebra.delta(v) {
                add_entry(by_right.entry(b).or_default(), a, &c);
            }
            let mut terms = Vec::new();
            for (k, left) in by_right {
                let co = frame.coords(&left).ok_or(ComoduleError::NotSubcomodule(i))?;
                for (j, c) in co {
                    terms.push((j, k, c));
                }
            }
            rho.push(terms);
        }
        Comodule::new(coalgebra, vectors.len(), rho)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coalgebra(&self) -> &Arc<Coalgebra> {
        &self.coalgebra
    }

    pub fn rho_terms(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.rho[i]
    }

    /// The matrix coefficient g_ji, the coalgebra part of m_j in ρ(m_i).
    pub fn coefficients(&self) -> Vec<Vec<SparseVec>> {
        let mut g = vec![vec![SparseVec::new(); self.dim]; self.dim];
        for (i, terms) in self.rho.iter().enumerate() {
            for (j, k, c) in terms {
                add_entry(&mut g[*j][i], *k, c);
            }
        }
        g
    }

    pub fn coaction_matrix(&self) -> CoMatrix {
        CoMatrix::from_rows(self.coefficients())
    }

    /// Trace of the coaction matrix.
    pub fn character(&self) -> SparseVec {
        let mut t = SparseVec::new();
        for (i, terms) in self.rho.iter().enumerate() {
            for (j, k, c) in terms {
                if *j == i {
                    add_entry(&mut t, *k, c);
                }
            }
        }
        t
    }

    /// Sparse matrices R_k with R_k[j][i] the coefficient of m_j⊗b_k in ρ(m_i).
    pub(crate) fn slices(&self) -> BTreeMap<usize, BTreeMap<(usize, usize), Scalar>> {
        let mut out: BTreeMap<usize, BTreeMap<(usize, usize), Scalar>> = BTreeMap::new();
        for (i, terms) in self.rho.iter().enumerate() {
            for (j, k, c) in terms {
                out.entry(*k).or_default().insert((*j, i), c.clone());
            }
        }
        out
    }

    pub fn verify(&self) -> ComoduleReport {
        let c = &self.coalgebra;
        let mut failures = Vec::new();
        for i in 0..self.dim {
            // (ρ⊗id)ρ(m_i) against (id⊗Δ)ρ(m_i), keyed by (m_j, b_a, b_b)
            let mut lhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for (j, k, x) in &self.rho[i] {
                for (l, a, y) in &self.rho[*j] {
                    add3(&mut lhs, (*l, *a, *k), &(x * y));
                }
            }
            let mut rhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for (j, k, x) in &self.rho[i] {
                for (a, b, y) in c.delta_basis(*k) {
                    add3(&mut rhs, (*j, *a, *b), &(x * y));
                }
            }
            if lhs != rhs {
                failures.push(ComoduleFailure { basis: i, identity: "(ρ⊗id)ρ = (id⊗Δ)ρ" });
            }
            let mut e = SparseVec::new();
            for (j, k, x) in &self.rho[i] {
                add_entry(&mut e, *j, &(x * c.counit_basis(*k)));
            }
            if e != coalgebra_core::linalg::unit_vec(i) {
                failures.push(ComoduleFailure { basis: i, identity: "(id⊗ε)ρ = id" });
            }
        }
        ComoduleReport { checked: self.dim, failures }
    }

    /// Span of all matrix coefficients. For a comodule this is already a subcoalgebra,
    /// the smallest D with ρ(M) ⊆ M⊗D; both facts are checked.
    pub fn coefficient_coalgebra(&self) -> Result<Subspace, ComoduleError> {
        let n = self.coalgebra.dim();
        let cf = Subspace::span(n, self.coefficients().into_iter().flatten().filter(|v| !v.is_empty()));
        if !is_subcoalgebra(&cf, &self.coalgebra) {
            return Err(ComoduleError::Structural("coefficient space is not a subcoalgebra".into()));
        }
        Ok(cf)
    }

    pub fn direct_sum(&self, other: &Comodule) -> Result<Comodule, ComoduleError> {
        if !Arc::ptr_eq(&self.coalgebra, &other.coalgebra) && *self.coalgebra != *other.coalgebra {
            return Err(ComoduleError::Structural("comodules over different coalgebras".into()));
        }
        let mut rho = self.rho.clone();
        for terms in &other.rho {
            rho.push(terms.iter().map(|(j, k, c)| (j + self.dim, *k, c.clone())).collect());
        }
        Comodule::new(self.coalgebra.clone(), self.dim + other.dim, rho)
    }

    /// M⊗N with ρ(m⊗n) = m_(0)⊗n_(0)⊗m_(1)n_(1); basis index `i * dim N + p`.
    pub fn tensor(&self, other: &Comodule, product: &dyn ProductOracle) -> Result<Comodule, ComoduleError> {
        let gm = self.coefficients();
        let gn = other.coefficients();
        let (a, b) = (self.dim, other.dim);
        let mut rho = vec![Vec::new(); a * b];
        for i in 0..a {
            for p in 0..b {
                for j in 0..a {
                    if gm[j][i].is_empty() {
                        continue;
                    }
                    for l in 0..b {
                        if gn[l][p].is_empty() {
                            continue;
                        }
                        let prod = product.mul(&gm[j][i], &gn[l][p])?;
                        for (k, c) in prod {
                            rho[i * b + p].push((j * b + l, k, c));
                        }
                    }
                }
            }
        }
        Comodule::new(self.coalgebra.clone(), a * b, rho)
    }

    /// Kernel of x ↦ (id⊗π)ρ(x), where π is a quotient table of the coalgebra:
    /// the vectors whose coaction lands in M⊗(kernel of π).
    pub(crate) fn preimage(&self, table: &[SparseVec], width: usize) -> Subspace {
        let images: Vec<SparseVec> = self
            .rho
            .iter()
            .map(|terms| {
                let mut v = SparseVec::new();
                for (j, k, c) in terms {
                    for (q, y) in &table[*k] {
                        add_entry(&mut v, j * width + q, &(c * y));
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.dim, kernel(&images))
    }
}

fn add3(m: &mut BTreeMap<(usize, usize, usize), Scalar>, k: (usize, usize, usize), c: &Scalar) {
    if c.is_zero() {
        return;
    }
    let e = m.entry(k).or_insert_with(Scalar::zero);
    *e += c;
    if e.is_zero() {
        m.remove(&k);
    }
}
