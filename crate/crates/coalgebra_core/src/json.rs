//! JSON interchange for coalgebras and subspaces. Scalars are written as
//! "p(z)/q" with z a fixed primitive root of unity of the declared order.

use serde::{Deserialize, Serialize};

use crate::coalgebra::Coalgebra;
use crate::coradical::field_order;
use crate::error::CoalgebraError;
use crate::linalg::Subspace;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub cyclotomic_order: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoalgebraJson {
    pub field: FieldJson,
    pub basis: Vec<String>,
    pub delta: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<(usize, String)>,
}

impl CoalgebraJson {
    pub fn from_coalgebra(c: &Coalgebra, order: Option<u32>) -> Result<Self, CoalgebraError> {
        let n = order.unwrap_or_else(|| field_order(c));
        let mut delta = Vec::new();
        let mut counit = Vec::new();
        for i in 0..c.dim() {
            for (j, k, x) in c.delta_basis(i) {
                delta.push((i, *j, *k, x.to_z_string(n)?));
            }
            let e = c.counit_basis(i);
            if !e.is_zero() {
                counit.push((i, e.to_z_string(n)?));
            }
        }
        Ok(CoalgebraJson { field: FieldJson { cyclotomic_order: n }, basis: c.labels().to_vec(), delta, counit })
    }

    /// Rebuilds the coalgebra; malformed indices or scalars are structural errors.
    pub fn to_coalgebra(&self) -> Result<Coalgebra, CoalgebraError> {
        let n = self.field.cyclotomic_order;
        if n == 0 {
            return Err(CoalgebraError::Structural("cyclotomic_order must be positive".into()));
        }
        let parse = |s: &str| Scalar::parse_z(s, n).map_err(CoalgebraError::from);
        let triples =
            self.delta.iter().map(|(i, j, k, s)| Ok((*i, *j, *k, parse(s)?))).collect::<Result<Vec<_>, CoalgebraError>>()?;
        let counit = self.counit.iter().map(|(i, s)| Ok((*i, parse(s)?))).collect::<Result<Vec<_>, CoalgebraError>>()?;
        Coalgebra::from_triples(self.basis.clone(), triples, counit)
    }
}

/// Dense rows of scalar strings.
pub fn subspace_rows(s: &Subspace, order: u32) -> Result<Vec<Vec<String>>, CoalgebraError> {
    s.rows()
        .iter()
        .map(|r| (0..s.ambient()).map(|k| Ok(r.get(&k).cloned().unwrap_or_default().to_z_string(order)?)).collect())
        .collect()
}
