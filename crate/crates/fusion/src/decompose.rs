//! Fusion coefficients from a cosemisimple coalgebra inside a bialgebra.

use std::sync::Arc;

use coalgebra_core::linalg::{axpy, Mat};
use coalgebra_core::{par, CoMatrix, Coalgebra, Coradical, Escape, Exec, ProductOracle, SparseVec, Subspace};
use comodule::{dimension_vector, split_semisimple, Comodule, ComoduleError};

use crate::error::FusionError;
use crate::ring::{BasedRing, Combination};

/// A ⊙′ B: the u×v grid of blocks A·b_kl, so entry (k·r + i, l·s + j) is a_ij b_kl.
pub fn odot_prime(a: &CoMatrix, b: &CoMatrix, product: &dyn ProductOracle) -> Result<CoMatrix, Escape> {
    let (r, s) = (a.rows(), a.cols());
    let (u, v) = (b.rows(), b.cols());
    let mut rows = vec![vec![SparseVec::new(); v * s]; u * r];
    for k in 0..u {
        for l in 0..v {
            let bkl = b.get(k, l);
            if bkl.is_empty() {
                continue;
            }
            for i in 0..r {
                for j in 0..s {
                    if !a.get(i, j).is_empty() {
                        rows[k * r + i][l * s + j] = product.mul(a.get(i, j), bkl)?;
                    }
                }
            }
        }
    }
    Ok(CoMatrix::from_rows(rows))
}

/// L·G·L⁻¹ for a scalar matrix L.
pub fn conjugate(l: &Mat, g: &CoMatrix, l_inv: &Mat) -> CoMatrix {
    let n = g.rows();
    let mut rows = vec![vec![SparseVec::new(); n]; n];
    for (r, row) in rows.iter_mut().enumerate() {
        for i in 0..n {
            if l.get(r, i).is_zero() {
                continue;
            }
            for j in 0..n {
                let gij = g.get(i, j);
                if gij.is_empty() {
                    continue;
                }
                for (c, cell) in row.iter_mut().enumerate() {
                    let s = l.get(r, i) * l_inv.get(j, c);
                    if !s.is_zero() {
                        axpy(cell, &s, gij);
                    }
                }
            }
        }
    }
    CoMatrix::from_rows(rows)
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Coradical block index of each diagonal block, in order.
    pub blocks: Vec<usize>,
    /// L with L (B⊙′C) L⁻¹ block diagonal.
    pub l: Mat,
    pub product: CoMatrix,
}

impl Decomposition {
    /// The diagonal block at position `k` of L (B⊙′C) L⁻¹.
    pub fn diagonal_block(&self, cor: &Coradical, k: usize) -> CoMatrix {
        let conj = conjugate(&self.l, &self.product, &self.l.inverse().expect("L is invertible"));
        let start: usize = self.blocks[..k].iter().map(|b| cor.blocks[*b].size).sum();
        let size = cor.blocks[self.blocks[k]].size;
        CoMatrix::from_rows(
            (start..start + size).map(|r| (start..start + size).map(|c| conj.get(r, c).clone()).collect()).collect(),
        )
    }
}

/// Decomposes B⊙′C into basic multiplicative blocks by splitting the comodule it defines
/// into isotypic pieces.
pub fn tensor_decompose(
    coalgebra: &Arc<Coalgebra>,
    cor: &Coradical,
    product: &dyn ProductOracle,
    b: &CoMatrix,
    c: &CoMatrix,
) -> Result<Decomposition, FusionError> {
    let g = odot_prime(b, c, product)?;
    let m = Comodule::from_matrix(coalgebra.clone(), &g)?;
    let (blocks, q) = split_semisimple(&m, cor)?;
    let l = q.inverse().ok_or_else(|| FusionError::Structural("singular change of basis".into()))?;
    Ok(Decomposition { blocks, l, product: g })
}

/// Index of the block containing `S` applied to each block, from an antipode on vectors.
pub fn star_from_antipode(
    cor: &Coradical,
    antipode: &dyn Fn(&SparseVec) -> Result<SparseVec, Escape>,
) -> Result<Vec<usize>, FusionError> {
    cor.blocks
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let images = b.space.rows().iter().map(antipode).collect::<Result<Vec<_>, _>>()?;
            let j = cor.block_of(&images[0]).ok_or(FusionError::Unmatched(i))?;
            if images.iter().all(|v| cor.blocks[j].space.contains(v)) {
                Ok(j)
            } else {
                Err(FusionError::Unmatched(i))
            }
        })
        .collect()
}

/// The based ring Z𝒮 on the simple blocks of `cor`. Products that leave the window are
/// recorded as escapes, not failures.
pub fn fusion_ring_from_coalgebra(
    coalgebra: &Arc<Coalgebra>,
    cor: &Coradical,
    product: &dyn ProductOracle,
    labels: Vec<String>,
    unit: usize,
    star: Vec<usize>,
    exec: Exec,
) -> Result<BasedRing, FusionError> {
    let n = cor.blocks.len();
    let dims = cor.blocks.iter().map(|b| b.size as u64).collect();
    let mut ring = BasedRing::new(labels, unit, dims, star)?;
    let results = par::map_range(exec, n * n, |p| {
        let (i, j) = (p / n, p % n);
        tensor_decompose(coalgebra, cor, product, &cor.blocks[i].matrix, &cor.blocks[j].matrix)
    });
    for (p, res) in results.into_iter().enumerate() {
        let (i, j) = (p / n, p % n);
        match res {
            Ok(d) => {
                for b in d.blocks {
                    ring.add_coefficient(i, j, b, 1)?;
                }
            }
            Err(FusionError::Product(Escape(missing)))
            | Err(FusionError::Comodule(ComoduleError::Product(Escape(missing)))) => {
                ring.set_escape(i, j, missing)?;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(ring)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrothendieckEntry {
    pub left: usize,
    pub right: usize,
    /// cf(M_i⊗M_j) equals the product subcoalgebra cf(M_i)·cf(M_j).
    pub coefficients_match: bool,
    /// [M_i⊗M_j] equals [M_i]·[M_j] in the based ring.
    pub classes_match: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GrothendieckReport {
    pub entries: Vec<GrothendieckEntry>,
    pub escaped: Vec<(usize, usize)>,
}

impl GrothendieckReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.coefficients_match && e.classes_match)
    }
}

/// Class of a semisimple comodule in Z𝒮 (basis = coradical blocks).
pub fn class_of(m: &Comodule, cor: &Coradical) -> Result<Combination, FusionError> {
    Ok(dimension_vector(m, cor)?.mult.into_iter().map(|(b, k)| (b, k as i64)).collect())
}

/// Checks that M ↦ cf(M) turns tensor products into products, on all pairs of `modules`.
pub fn grothendieck_check(
    cor: &Coradical,
    product: &dyn ProductOracle,
    modules: &[Comodule],
    ring: &BasedRing,
) -> Result<GrothendieckReport, FusionError> {
    let mut report = GrothendieckReport::default();
    for (i, a) in modules.iter().enumerate() {
        for (j, b) in modules.iter().enumerate() {
            let t = match a.tensor(b, product) {
                Ok(t) => t,
                Err(ComoduleError::Product(_)) => {
                    report.escaped.push((i, j));
                    continue;
                }
                Err(e) => return Err(e.into()),
            };
            let (ca, cb) = (a.coefficient_coalgebra()?, b.coefficient_coalgebra()?);
            let mut prods = Vec::new();
            for x in ca.rows() {
                for y in cb.rows() {
                    prods.push(product.mul(x, y)?);
                }
            }
            let cf_prod = Subspace::span(ca.ambient(), prods);
            let coefficients_match = t.coefficient_coalgebra()? == cf_prod;
            let classes_match = match ring.mult(&class_of(a, cor)?, &class_of(b, cor)?) {
                Ok(p) => p == class_of(&t, cor)?,
                Err(FusionError::Escape { .. }) => {
                    report.escaped.push((i, j));
                    continue;
                }
                Err(e) => return Err(e),
            };
            report.entries.push(GrothendieckEntry { left: i, right: j, coefficients_match, classes_match });
        }
    }
    Ok(report)
}
