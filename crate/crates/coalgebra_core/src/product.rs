//! Products on a coalgebra that sits inside a bialgebra.

use thiserror::Error;

use crate::linalg::{axpy, SparseVec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("product leaves the available basis: {0}")]
pub struct Escape(pub String);

/// Multiplication of basis elements, which may fall outside the finite basis.
pub trait ProductOracle: Sync {
    fn mul_basis(&self, i: usize, j: usize) -> Result<SparseVec, Escape>;

    fn mul(&self, a: &SparseVec, b: &SparseVec) -> Result<SparseVec, Escape> {
        let mut out = SparseVec::new();
        for (i, x) in a {
            for (j, y) in b {
                let p = self.mul_basis(*i, *j)?;
                axpy(&mut out, &(x * y), &p);
            }
        }
        Ok(out)
    }
}
