//! Positive roots of Dynkin diagrams.

use std::collections::BTreeSet;

use crate::error::QuiverError;
use crate::graph::{AdeClass, Graph};

/// q(x) = Σ x_i² − Σ_edges m·x_a·x_b.
pub fn tits_form(g: &Graph, x: &[i64]) -> i64 {
    let mut q: i64 = x.iter().map(|v| v * v).sum();
    for (a, b, m) in g.edges() {
        q -= m as i64 * x[a] * x[b];
    }
    q
}

/// Positive roots of the diagram of `cls` (vertex order of `AdeClass::diagram`), sorted by
/// height then lexicographically. Every positive root is reached from a simple root by adding
/// simple roots one at a time while staying on q = 1.
pub fn dynkin_positive_roots(cls: AdeClass) -> Result<Vec<Vec<i64>>, QuiverError> {
    if !cls.is_dynkin() {
        return Err(QuiverError::NotDynkin(cls.to_string()));
    }
    let g = cls.diagram().ok_or_else(|| QuiverError::NotDynkin(cls.to_string()))?;
    Ok(positive_roots_of(&g))
}

/// Terminates only for Dynkin graphs.
fn positive_roots_of(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.vertex_count();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    seen.extend(frontier.iter().cloned());
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for r in &frontier {
            for i in 0..n {
                let mut s = r.clone();
                s[i] += 1;
                if tits_form(g, &s) == 1 && seen.insert(s.clone()) {
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    roots
}
