//! Comodule maps, endomorphism algebras, indecomposability and isomorphism.

use coalgebra_core::linalg::{kernel, Mat, SparseVec};
use coalgebra_core::{Scalar, Subspace};

use crate::comodule::Comodule;
use crate::error::ComoduleError;

fn same_coalgebra(m: &Comodule, n: &Comodule) -> Result<(), ComoduleError> {
    if std::sync::Arc::ptr_eq(m.coalgebra(), n.coalgebra()) || **m.coalgebra() == **n.coalgebra() {
        Ok(())
    } else {
        Err(ComoduleError::Structural("comodules over different coalgebras".into()))
    }
}

/// Basis of Hom(M, N): matrices F (dim N × dim M) with (F⊗id)ρ_M = ρ_N F.
pub fn hom_space(m: &Comodule, n: &Comodule) -> Result<Vec<Mat>, ComoduleError> {
    same_coalgebra(m, n)?;
    let (a, b) = (m.dim(), n.dim());
    let sm = m.slices();
    let sn = n.slices();
    let keys: Vec<usize> = sm.keys().chain(sn.keys()).copied().collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    let empty = Default::default();
    // Unknown E_pq (p < dim N, q < dim M); equation slots (k, row, col) of F R^M_k - R^N_k F.
    let mut images = vec![SparseVec::new(); a * b];
    for (ki, k) in keys.iter().enumerate() {
        let rm = sm.get(k).unwrap_or(&empty);
        let rn = sn.get(k).unwrap_or(&empty);
        let slot = |r: usize, c: usize| ki * b * a + r * a + c;
        for ((q, c), x) in rm {
            // E_pq R^M: row p gets row q of R^M
            for p in 0..b {
                coalgebra_core::linalg::add_entry(&mut images[p * a + q], slot(p, *c), x);
            }
        }
        for ((r, p), x) in rn {
            // R^N E_pq: column q gets column p of R^N
            for q in 0..a {
                coalgebra_core::linalg::add_entry(&mut images[p * a + q], slot(*r, q), &-x.clone());
            }
        }
    }
    Ok(kernel(&images)
        .into_iter()
        .map(|v| {
            let mut f = Mat::zeros(b, a);
            for (idx, x) in v {
                f.set(idx / a, idx % a, x);
            }
            f
        })
        .collect())
}

/// Whether `f` is a comodule map M → N.
pub fn is_comodule_map(f: &Mat, m: &Comodule, n: &Comodule) -> bool {
    if f.rows != n.dim() || f.cols != m.dim() {
        return false;
    }
    let sm = m.slices();
    let sn = n.slices();
    let dense = |s: Option<&std::collections::BTreeMap<(usize, usize), Scalar>>, d: usize| {
        let mut r = Mat::zeros(d, d);
        if let Some(s) = s {
            for ((i, j), x) in s {
                r.set(*i, *j, x.clone());
            }
        }
        r
    };
    sm.keys().chain(sn.keys()).all(|k| f.mul(&dense(sm.get(k), m.dim())) == dense(sn.get(k), n.dim()).mul(f))
}

#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub basis: Vec<Mat>,
    /// Basis of the Jacobson radical.
    pub radical: Vec<Mat>,
}

impl EndAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// dim End/rad.
    pub fn semisimple_dim(&self) -> usize {
        self.basis.len() - self.radical.len()
    }

    /// Smallest k with rad^k = 0, computed by explicit powering.
    pub fn nilpotency_index(&self) -> usize {
        if self.radical.is_empty() {
            return 0;
        }
        let n = self.basis[0].rows;
        let mut power: Vec<Mat> = self.radical.clone();
        let mut k = 1;
        while !power.iter().all(Mat::is_zero) {
            let mut next = Vec::new();
            for p in &power {
                for r in &self.radical {
                    let x = p.mul(r);
                    if !x.is_zero() {
                        next.push(x);
                    }
                }
            }
            // keep a basis to stop the list from growing
            let flat: Vec<SparseVec> = next.iter().map(Mat::to_sparse_flat).collect();
            let s = Subspace::span(n * n, flat);
            power = s.rows().iter().map(|v| Mat::from_sparse_flat(n, n, v)).collect();
            k += 1;
        }
        k
    }
}

/// End(M) with its radical from the trace form: rad = {a : tr(ab) = 0 for all b}.
pub fn end_analysis(m: &Comodule) -> Result<EndAlgebra, ComoduleError> {
    let basis = hom_space(m, m)?;
    let h = basis.len();
    let gram: Vec<SparseVec> = (0..h)
        .map(|i| {
            (0..h)
                .filter_map(|j| {
                    let t = basis[i].mul(&basis[j]).trace();
                    (!t.is_zero()).then_some((j, t))
                })
                .collect()
        })
        .collect();
    let radical = kernel(&gram)
        .into_iter()
        .map(|v| {
            let mut acc = Mat::zeros(m.dim(), m.dim());
            for (i, c) in v {
                acc = acc.add(&basis[i].scale(&c));
            }
            acc
        })
        .collect();
    Ok(EndAlgebra { basis, radical })
}

pub fn is_abs_indecomposable(m: &Comodule) -> Result<bool, ComoduleError> {
    Ok(m.dim() > 0 && end_analysis(m)?.semisimple_dim() == 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Indecomposability {
    /// dim End/rad = 1.
    Absolute,
    /// A Fitting decomposition M = ker ⊕ im found from an endomorphism with two eigenvalues.
    Decomposable { summands: (Subspace, Subspace) },
    /// End/rad is larger than the base field but no splitting endomorphism was found;
    /// the comodule may split after a field extension.
    OverBaseField,
}

fn fitting_split(f: &Mat) -> Option<(Subspace, Subspace)> {
    let n = f.rows;
    // Candidate eigenvalues are the diagonal entries; (f - λ)^n has proper nonzero rank
    // exactly when λ is an eigenvalue and f has another one.
    let mut tried = Vec::new();
    for i in 0..n {
        let lambda = f.get(i, i).clone();
        if tried.contains(&lambda) {
            continue;
        }
        tried.push(lambda.clone());
        let shifted = f.sub(&Mat::identity(n).scale(&lambda));
        let mut p = shifted.clone();
        for _ in 1..n {
            p = p.mul(&shifted);
        }
        let r = p.rank();
        if r > 0 && r < n {
            // columns of p are the images of the basis vectors
            let cols = p.transpose().to_sparse_rows();
            let k = Subspace::span(n, kernel(&cols));
            let im = Subspace::span(n, cols);
            return Some((k, im));
        }
    }
    None
}

pub fn indecomposability(m: &Comodule) -> Result<Indecomposability, ComoduleError> {
    let e = end_analysis(m)?;
    if e.semisimple_dim() == 1 {
        return Ok(Indecomposability::Absolute);
    }
    let h = e.basis.len();
    let mut candidates: Vec<Mat> = e.basis.clone();
    for i in 0..h {
        for j in i + 1..h {
            candidates.push(e.basis[i].add(&e.basis[j]));
        }
    }
    for f in &candidates {
        if let Some(s) = fitting_split(f) {
            return Ok(Indecomposability::Decomposable { summands: s });
        }
    }
    Ok(Indecomposability::OverBaseField)
}

/// Searches Hom(M, N) for an isomorphism. The determinant of Σ λ_i f_i has degree at
/// most dim M in each λ_i, so it vanishes identically iff it vanishes on the grid
/// {0..=dim M}^h; the search is therefore a certificate either way.
pub fn are_isomorphic(m: &Comodule, n: &Comodule) -> Result<Option<Mat>, ComoduleError> {
    if m.dim() != n.dim() {
        return Ok(None);
    }
    let basis = hom_space(m, n)?;
    let h = basis.len();
    if h == 0 {
        return Ok(if m.dim() == 0 { Some(Mat::zeros(0, 0)) } else { None });
    }
    let side = m.dim() as i64 + 1;
    let mut point = vec![0i64; h];
    // Visit points in order of increasing coordinate sum within the grid.
    let max_sum = (side - 1) * h as i64;
    for s in 0..=max_sum {
        let mut found = None;
        for_each_composition(&mut point, 0, s, side - 1, &mut |pt| {
            if found.is_some() {
                return;
            }
            let mut f = Mat::zeros(n.dim(), m.dim());
            for (i, c) in pt.iter().enumerate() {
                if *c != 0 {
                    f = f.add(&basis[i].scale(&Scalar::from_int(*c)));
                }
            }
            if !f.det().is_zero() {
                found = Some(f);
            }
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Calls `f` on every vector with entries in 0..=cap summing to `sum`, filling from `idx`.
fn for_each_composition(pt: &mut [i64], idx: usize, sum: i64, cap: i64, f: &mut dyn FnMut(&[i64])) {
    if idx == pt.len() - 1 {
        if sum <= cap {
            pt[idx] = sum;
            f(pt);
        }
        return;
    }
    for v in 0..=sum.min(cap) {
        pt[idx] = v;
        for_each_composition(pt, idx + 1, sum - v, cap, f);
    }
}
