//! Socle filtration, composition multiplicities and isotypic splitting.

use std::collections::BTreeMap;
use std::sync::Arc;

use coalgebra_core::coradical::coradical_filtration;
use coalgebra_core::linalg::{Frame, Mat, SparseVec};
use coalgebra_core::{Coradical, Exec, Scalar, Subspace};

use crate::comodule::Comodule;
use crate::error::ComoduleError;

/// The socle series M_1 ⊂ M_2 ⊂ … ⊂ M_L = M, with M_i = {x : ρ(x) ∈ M⊗H_{i-1}}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleFiltration {
    pub layers: Vec<Subspace>,
}

impl SocleFiltration {
    pub fn loewy_length(&self) -> usize {
        self.layers.len()
    }

    /// Dimensions of the successive quotients.
    pub fn layer_dims(&self) -> Vec<usize> {
        let mut prev = 0;
        self.layers
            .iter()
            .map(|l| {
                let d = l.dim() - prev;
                prev = l.dim();
                d
            })
            .collect()
    }
}

/// The same comodule with its coaction rewritten over the coefficient coalgebra.
pub fn over_coefficients(m: &Comodule) -> Result<(Comodule, Subspace), ComoduleError> {
    let cf = m.coefficient_coalgebra()?;
    let d = Arc::new(m.coalgebra().restrict(&cf, "c")?);
    let mut rho = Vec::with_capacity(m.dim());
    let g = m.coefficients();
    for i in 0..m.dim() {
        let mut terms = Vec::new();
        for (j, row) in g.iter().enumerate() {
            for (k, c) in cf.coords(&row[i]).into_iter().enumerate() {
                if !c.is_zero() {
                    terms.push((j, k, c));
                }
            }
        }
        rho.push(terms);
    }
    Ok((Comodule::new(d, m.dim(), rho)?, cf))
}

pub fn socle_filtration(m: &Comodule, exec: Exec) -> Result<SocleFiltration, ComoduleError> {
    if m.dim() == 0 {
        return Ok(SocleFiltration { layers: Vec::new() });
    }
    let (mc, _) = over_coefficients(m)?;
    let d = mc.coalgebra().clone();
    let filt = coradical_filtration(&d, exec)?;
    let mut layers = Vec::new();
    for h in &filt.layers {
        let table = h.quotient_table();
        let layer = mc.preimage(&table, d.dim());
        let full = layer.dim() == m.dim();
        if layers.last() != Some(&layer) {
            layers.push(layer);
        }
        if full {
            break;
        }
    }
    Ok(SocleFiltration { layers })
}

/// Jordan–Hölder multiplicities, keyed by block index in the coradical.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DimensionVector {
    pub mult: BTreeMap<usize, usize>,
}

impl DimensionVector {
    pub fn total(&self) -> usize {
        self.mult.values().sum()
    }

    /// Σ multiplicity · (size of the simple comodule).
    pub fn weighted_total(&self, cor: &Coradical) -> usize {
        self.mult.iter().map(|(b, m)| m * cor.blocks[*b].size).sum()
    }

    /// Labels repeated by multiplicity, in block order.
    pub fn labels(&self, name: impl Fn(usize) -> String) -> Vec<String> {
        let mut v = Vec::new();
        for (b, m) in &self.mult {
            for _ in 0..*m {
                v.push(name(*b));
            }
        }
        v
    }
}

/// The character lies in H_0 and equals Σ mult_V χ_V; the block counit picks out
/// r_V · mult_V.
pub fn dimension_vector(m: &Comodule, cor: &Coradical) -> Result<DimensionVector, ComoduleError> {
    let chi = m.character();
    if !cor.space.contains(&chi) {
        return Err(ComoduleError::Structural("character outside the coradical".into()));
    }
    let mut mult = BTreeMap::new();
    for (b, block) in cor.blocks.iter().enumerate() {
        let e = block.apply_idempotent(&chi);
        if e.is_zero() {
            continue;
        }
        let q = (&e * &Scalar::from_int(block.size as i64).inv())
            .to_rational()
            .filter(|q| q.is_integer() && *q.numer() > 0.into())
            .ok_or_else(|| ComoduleError::Structural(format!("multiplicity {e} of block {b} is not a positive integer")))?;
        let k: usize = q.numer().try_into().map_err(|_| ComoduleError::Structural("multiplicity overflow".into()))?;
        mult.insert(b, k);
    }
    let dv = DimensionVector { mult };
    if dv.weighted_total(cor) != m.dim() {
        return Err(ComoduleError::Structural("multiplicities do not add up to the dimension".into()));
    }
    Ok(dv)
}

fn check_semisimple(m: &Comodule, cor: &Coradical) -> Result<(), ComoduleError> {
    for row in m.coefficients() {
        for c in row {
            if !cor.space.contains(&c) {
                return Err(ComoduleError::NotSemisimple);
            }
        }
    }
    Ok(())
}

/// Multiset of simple summands of a comodule whose coefficients lie in H_0.
pub fn decompose_semisimple(m: &Comodule, cor: &Coradical) -> Result<DimensionVector, ComoduleError> {
    check_semisimple(m, cor)?;
    dimension_vector(m, cor)
}

/// Coordinates of H_0 in the comatrix bases of the blocks: (block, a, b) ↦ entry index.
struct BlockFrame {
    frame: Frame,
    keys: Vec<(usize, usize, usize)>,
}

impl BlockFrame {
    fn new(cor: &Coradical) -> Result<Self, ComoduleError> {
        let mut vs = Vec::new();
        let mut keys = Vec::new();
        for (bi, b) in cor.blocks.iter().enumerate() {
            for i in 0..b.size {
                for j in 0..b.size {
                    vs.push(b.matrix.get(i, j).clone());
                    keys.push((bi, i, j));
                }
            }
        }
        let frame = Frame::new(&vs).ok_or_else(|| ComoduleError::Structural("block matrices are not independent".into()))?;
        Ok(BlockFrame { frame, keys })
    }

    fn coords(&self, v: &SparseVec) -> Option<BTreeMap<(usize, usize, usize), Scalar>> {
        let c = self.frame.coords(v)?;
        Some(c.into_iter().map(|(i, x)| (self.keys[i], x)).collect())
    }
}

/// Splits a semisimple comodule into simple summands. Returns the block index of each
/// summand and the change of basis Q (columns = new basis) such that Q⁻¹ G Q is block
/// diagonal with diagonal blocks equal to the coradical's multiplicative matrices.
pub fn split_semisimple(m: &Comodule, cor: &Coradical) -> Result<(Vec<usize>, Mat), ComoduleError> {
    check_semisimple(m, cor)?;
    let bf = BlockFrame::new(cor)?;
    let n = m.dim();
    let g = m.coefficients();
    // p[(block, a, b)] is the operator x ↦ (id⊗φ_ab)ρ(x).
    let mut ops: BTreeMap<(usize, usize, usize), Mat> = BTreeMap::new();
    for (j, row) in g.iter().enumerate() {
        for (i, c) in row.iter().enumerate() {
            if c.is_empty() {
                continue;
            }
            let co = bf.coords(c).ok_or(ComoduleError::NotSemisimple)?;
            for (key, x) in co {
                let e = ops.entry(key).or_insert_with(|| Mat::zeros(n, n));
                let cur = e.get(j, i).clone();
                e.set(j, i, cur + x);
            }
        }
    }
    let mut labels = Vec::new();
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    for (bi, b) in cor.blocks.iter().enumerate() {
        let Some(p11) = ops.get(&(bi, 0, 0)) else { continue };
        let image = Subspace::span(n, (0..n).map(|c| column(p11, c)));
        for w in image.rows() {
            let wd: Vec<Scalar> = (0..n).map(|k| w.get(&k).cloned().unwrap_or_default()).collect();
            for a in 0..b.size {
                let col = match ops.get(&(bi, a, 0)) {
                    Some(p) => apply(p, &wd),
                    None => vec![Scalar::zero(); n],
                };
                cols.push(col);
            }
            labels.push(bi);
        }
    }
    if cols.len() != n {
        return Err(ComoduleError::NotSemisimple);
    }
    let mut q = Mat::zeros(n, n);
    for (c, col) in cols.into_iter().enumerate() {
        for (r, x) in col.into_iter().enumerate() {
            q.set(r, c, x);
        }
    }
    if q.rank() != n {
        return Err(ComoduleError::Structural("isotypic basis is singular".into()));
    }
    Ok((labels, q))
}

fn column(m: &Mat, c: usize) -> SparseVec {
    (0..m.rows).filter_map(|r| {
        let x = m.get(r, c);
        (!x.is_zero()).then(|| (r, x.clone()))
    })
    .collect()
}

fn apply(m: &Mat, v: &[Scalar]) -> Vec<Scalar> {
    (0..m.rows).map(|r| (0..m.cols).map(|c| m.get(r, c) * &v[c]).sum()).collect()
}
