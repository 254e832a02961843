//! Small comodules over truncations of H(e±,f±,u,v), realized inside the regular coaction.

use std::sync::Arc;

use coalgebra_core::{Coalgebra, Scalar, SparseVec};
use hopf_presentations::{build_hefuv, truncate_coalgebra, Truncation, TruncationSpec};

use crate::comodule::Comodule;
use crate::error::ComoduleError;

/// A truncation H^N together with a shared handle on its coalgebra, so that all
/// comodules built from it compare as comodules over the same coalgebra.
pub struct HefuvComodules {
    pub truncation: Truncation,
    pub coalgebra: Arc<Coalgebra>,
}

impl HefuvComodules {
    pub fn new(n: i64) -> Result<Self, ComoduleError> {
        let t = truncate_coalgebra(&build_hefuv(), &TruncationSpec::Hefuv(n))
            .map_err(|e| ComoduleError::Structural(e.to_string()))?;
        Ok(Self::from_truncation(t))
    }

    pub fn from_truncation(truncation: Truncation) -> Self {
        let coalgebra = Arc::new(truncation.coalgebra.clone());
        HefuvComodules { truncation, coalgebra }
    }

    pub fn vec(&self, s: &str) -> Result<SparseVec, ComoduleError> {
        Ok(self.truncation.parse_vec(s)?)
    }

    /// Subcomodule of the regular coaction spanned by the given elements.
    pub fn span(&self, elements: &[&str]) -> Result<Comodule, ComoduleError> {
        let vs = elements.iter().map(|s| self.vec(s)).collect::<Result<Vec<_>, _>>()?;
        Comodule::subcomodule(self.coalgebra.clone(), &vs)
    }

    /// The simple comodule with coefficients in C_i.
    pub fn simple(&self, i: i64) -> Result<Comodule, ComoduleError> {
        self.span(&[&format!("e[{i}]"), &format!("f[{i}]")])
    }

    pub fn trivial(&self) -> Result<Comodule, ComoduleError> {
        self.span(&["1"])
    }

    pub fn sign(&self) -> Result<Comodule, ComoduleError> {
        self.span(&["e[0] - f[0]"])
    }

    /// Socle k1, top S_{C1}.
    pub fn u(&self) -> Result<Comodule, ComoduleError> {
        self.span(&["1", "u", "v"])
    }

    /// Socle S_{C1}, top k1 ⊕ k_g.
    pub fn v(&self) -> Result<Comodule, ComoduleError> {
        self.span(&["e[1]", "f[1]", "-u*f[1] - v*e[1]", "u*f[1] - v*e[1]"])
    }

    /// Socle k1 ⊕ k_g, top S_{C1}, glued with weight k on the g side.
    pub fn w(&self, k: &Scalar) -> Result<Comodule, ComoduleError> {
        if k.is_zero() {
            return Err(ComoduleError::InvalidParameter("W(k) needs k ≠ 0".into()));
        }
        let one = self.vec("1")?;
        let g = self.vec("e[0] - f[0]")?;
        let u = self.vec("u")?;
        let v = self.vec("v")?;
        let gu = self.vec("(e[0] - f[0])*u")?;
        let gv = self.vec("(e[0] - f[0])*v")?;
        let vs = vec![
            one,
            coalgebra_core::linalg::scaled(&g, k),
            coalgebra_core::linalg::sub(&u, &coalgebra_core::linalg::scaled(&gu, k)),
            coalgebra_core::linalg::add(&v, &coalgebra_core::linalg::scaled(&gv, k)),
        ];
        Comodule::subcomodule(self.coalgebra.clone(), &vs)
    }

    /// span{1, u, v, uv}, Loewy length 3.
    pub fn v0(&self) -> Result<Comodule, ComoduleError> {
        self.span(&["1", "u", "v", "u*v"])
    }
}
