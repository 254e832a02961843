//! Graph-theoretic tests for discrete corepresentation type.

use serde::Serialize;

use crate::error::QuiverError;
use crate::quiver::Quiver;

/// Every vertex starts exactly one arrow and ends exactly one arrow.
pub fn is_basic_cycle_union(q: &Quiver) -> bool {
    !q.is_empty() && (0..q.len()).all(|v| q.in_degree(v) == 1 && q.out_degree(v) == 1)
}

/// No two arrows share source and target.
pub fn is_schurian(q: &Quiver) -> bool {
    q.arrows().all(|(_, _, m)| m <= 1)
}

/// The structural conditions for a link quiver whose unit component has a
/// finite-dimensional coradical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscretenessReport {
    /// Every vertex starts one arrow and ends one arrow.
    pub basic_cycles: bool,
    /// Exactly one arrow C → k1, and dim C = 1.
    pub single_arrow_in: bool,
    /// Exactly one arrow k1 → D, and dim D = 1.
    pub single_arrow_out: bool,
    pub verdict: Discreteness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Discreteness {
    /// No arrows at all: the coalgebra is cosemisimple and the criterion does not apply.
    Cosemisimple,
    Discrete,
    NotDiscrete { violated: Vec<&'static str> },
    /// The three conditions disagree, which cannot happen for a link quiver of a Hopf
    /// algebra with the dual Chevalley property.
    Inconsistent,
}

pub fn discreteness_check_finite_coradical(q: &Quiver, unit: usize) -> Result<DiscretenessReport, QuiverError> {
    if unit >= q.len() {
        return Err(QuiverError::UnknownVertex(format!("#{unit}")));
    }
    let basic_cycles = is_basic_cycle_union(q);
    let into: Vec<(usize, usize)> = q.arrows().filter(|a| a.1 == unit).map(|a| (a.0, a.2)).collect();
    let out: Vec<(usize, usize)> = q.arrows().filter(|a| a.0 == unit).map(|a| (a.1, a.2)).collect();
    let single = |v: &[(usize, usize)]| matches!(v, [(w, 1)] if q.vertices()[*w].weight == 1);
    let single_arrow_in = single(&into);
    let single_arrow_out = single(&out);
    let verdict = if q.arrow_count() == 0 {
        Discreteness::Cosemisimple
    } else if basic_cycles && single_arrow_in && single_arrow_out {
        Discreteness::Discrete
    } else {
        let mut violated = Vec::new();
        if !basic_cycles {
            violated.push("every vertex starts and ends exactly one arrow");
        }
        if !single_arrow_in {
            violated.push("exactly one arrow C → k1 with dim C = 1");
        }
        if !single_arrow_out {
            violated.push("exactly one arrow k1 → D with dim D = 1");
        }
        if violated.is_empty() {
            Discreteness::Inconsistent
        } else {
            Discreteness::NotDiscrete { violated }
        }
    };
    Ok(DiscretenessReport { basic_cycles, single_arrow_in, single_arrow_out, verdict })
}

/// Necessary shapes of ¹P and ¹S when the unit component has an infinite-dimensional
/// coradical. Each case is a candidate, not a proof of discreteness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Trichotomy {
    /// |¹P| = 1 and ¹S = {kg}.
    Case1,
    /// |¹P| = 2 and ¹S = {kg, kh} with g ≠ h.
    Case2,
    /// |¹P| = 1 and ¹S = {C} with dim C = 4.
    Case3,
    NotDiscrete { reason: String },
}

/// `one_s_dims` lists dim C (a perfect square) for each C ∈ ¹S.
pub fn trichotomy_classify(one_p: usize, one_s_dims: &[usize]) -> Result<Trichotomy, QuiverError> {
    if one_p == 0 || one_s_dims.is_empty() {
        return Err(QuiverError::InvalidInput("a non-cosemisimple coalgebra has nonempty ¹P and ¹S".into()));
    }
    if one_s_dims.len() > one_p {
        return Err(QuiverError::InvalidInput(format!("|¹S| = {} exceeds |¹P| = {one_p}", one_s_dims.len())));
    }
    if let Some(d) = one_s_dims.iter().find(|d| !(0..=**d).any(|r| r * r == **d)) {
        return Err(QuiverError::InvalidInput(format!("{d} is not the dimension of a simple subcoalgebra")));
    }
    let not = |r: &str| Ok(Trichotomy::NotDiscrete { reason: r.into() });
    if one_p >= 3 {
        return not("|¹P| ≥ 3 gives a finite subquiver whose separated quiver is not Dynkin");
    }
    if one_s_dims.iter().any(|d| *d >= 9) {
        return not("a simple subcoalgebra of dimension ≥ 9 in ¹S gives a non-Dynkin separated subquiver");
    }
    let mut dims = one_s_dims.to_vec();
    dims.sort_unstable();
    match (one_p, dims.as_slice()) {
        (1, [1]) => Ok(Trichotomy::Case1),
        (1, [4]) => Ok(Trichotomy::Case3),
        (2, [1, 1]) => Ok(Trichotomy::Case2),
        (2, [1, 4]) => not("a group-like and a 4-dimensional simple in ¹S force a vertex with 4 incoming arrows"),
        (2, [_]) => not("two primitive matrices for one simple subcoalgebra give a double arrow into k1"),
        _ => not("with |¹P| = 2 both elements of ¹S must be group-like"),
    }
}
