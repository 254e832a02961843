//! Link quivers, from wedges in a coalgebra or from fusion coefficients.

use std::sync::Arc;

use coalgebra_core::coalgebra::wedge_unchecked;
use coalgebra_core::{par, Coalgebra, Coradical, Exec};
use fusion::BasedRing;

use crate::error::QuiverError;
use crate::quiver::Quiver;

/// Vertices are the simple blocks; D → C carries dim((C∧D)/(C+D)) / (r_C·r_D) arrows.
pub fn link_quiver_from_coalgebra(
    c: &Arc<Coalgebra>,
    cor: &Coradical,
    labels: &[String],
    exec: Exec,
) -> Result<Quiver, QuiverError> {
    let n = cor.blocks.len();
    if labels.len() != n {
        return Err(QuiverError::InvalidInput(format!("{} labels for {n} blocks", labels.len())));
    }
    let mut q = Quiver::new();
    for (l, b) in labels.iter().zip(&cor.blocks) {
        q.add_vertex(l, b.size)?;
    }
    // pair (ci, di): arrows from block di to block ci
    let dims = par::map_range(exec, n * n, |p| {
        let (ci, di) = (p / n, p % n);
        let (cs, ds) = (&cor.blocks[ci].space, &cor.blocks[di].space);
        let w = wedge_unchecked(cs, ds, c, Exec::Sequential);
        w.dim() - cs.sum(ds).dim()
    });
    for (p, dim) in dims.into_iter().enumerate() {
        let (ci, di) = (p / n, p % n);
        let rs = cor.blocks[ci].size * cor.blocks[di].size;
        if dim % rs != 0 {
            return Err(QuiverError::NotDivisible { from: labels[di].clone(), to: labels[ci].clone(), dim, rs });
        }
        q.add_arrows(di, ci, dim / rs);
    }
    Ok(q)
}

/// Arrows C_t → C_i number Σ_k m_k·α(i, k, t) over the supplied ¹S with multiplicities m_k.
/// Only vertices in `within` (default: all) are kept; every product those vertices need must
/// stay in the ring's window. Also checks α(i,k,t) = α(t,k*,i) on the kept vertices.
pub fn link_quiver_from_fusion(
    r: &BasedRing,
    one_s: &[(usize, usize)],
    within: Option<&[usize]>,
) -> Result<Quiver, QuiverError> {
    let all: Vec<usize> = (0..r.len()).collect();
    let vs = within.unwrap_or(&all);
    let mut q = Quiver::new();
    for &v in vs {
        q.add_vertex(&r.basis[v], r.dims[v] as usize)?;
    }
    for (a, &i) in vs.iter().enumerate() {
        for &(k, m) in one_s {
            let p = r.product(i, k)?;
            for (b, &t) in vs.iter().enumerate() {
                let alpha = p.get(&t).copied().unwrap_or(0);
                let back = r.coefficient(t, r.star[k], i)?;
                if alpha != back {
                    return Err(QuiverError::Asymmetric {
                        i: r.basis[i].clone(),
                        k: r.basis[k].clone(),
                        t: r.basis[t].clone(),
                        left: alpha,
                        right: back,
                    });
                }
                if alpha < 0 {
                    return Err(QuiverError::InvalidInput(format!("negative coefficient in {}", r.basis[i])));
                }
                q.add_arrows(b, a, m * alpha as usize);
            }
        }
    }
    Ok(q)
}
