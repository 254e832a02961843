//! JSON form of a comodule: {"coalgebra": name, "dim": m, "rho": [[i, j, k, "p(z)/q"], ...]}.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use coalgebra_core::coradical::field_order;
use coalgebra_core::{Coalgebra, CoalgebraError, Scalar};

use crate::comodule::Comodule;
use crate::error::ComoduleError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComoduleJson {
    pub coalgebra: String,
    pub dim: usize,
    pub rho: Vec<(usize, usize, usize, String)>,
}

impl ComoduleJson {
    /// Scalars are written over Q(ζ_order); by default the order of the coalgebra's field.
    pub fn from_comodule(m: &Comodule, coalgebra: &str, order: Option<u32>) -> Result<Self, ComoduleError> {
        let n = order.unwrap_or_else(|| field_order(m.coalgebra()));
        let mut rho = Vec::new();
        for i in 0..m.dim() {
            for (j, k, c) in m.rho_terms(i) {
                rho.push((i, *j, *k, c.to_z_string(n).map_err(CoalgebraError::from)?));
            }
        }
        Ok(ComoduleJson { coalgebra: coalgebra.to_string(), dim: m.dim(), rho })
    }

    pub fn to_comodule(&self, coalgebra: Arc<Coalgebra>, order: u32) -> Result<Comodule, ComoduleError> {
        let mut rows = vec![Vec::new(); self.dim];
        for (i, j, k, s) in &self.rho {
            let row = rows
                .get_mut(*i)
                .ok_or_else(|| ComoduleError::Structural(format!("basis index {i} out of range (dim {})", self.dim)))?;
            row.push((*j, *k, Scalar::parse_z(s, order).map_err(CoalgebraError::from)?));
        }
        Comodule::new(coalgebra, self.dim, rows)
    }
}
