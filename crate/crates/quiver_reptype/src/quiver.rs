//! Quivers with weighted vertices and arrow multiplicities.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::QuiverError;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub label: String,
    /// Square root of the dimension of the simple subcoalgebra.
    pub weight: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "QuiverJson", into = "QuiverJson")]
pub struct Quiver {
    vertices: Vec<Vertex>,
    arrows: BTreeMap<(usize, usize), usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct ArrowJson {
    src: String,
    dst: String,
    mult: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct QuiverJson {
    vertices: Vec<Vertex>,
    arrows: Vec<ArrowJson>,
}

impl TryFrom<QuiverJson> for Quiver {
    type Error = QuiverError;

    fn try_from(j: QuiverJson) -> Result<Self, QuiverError> {
        let mut q = Quiver::new();
        for v in j.vertices {
            q.add_vertex(&v.label, v.weight)?;
        }
        for a in j.arrows {
            if a.mult == 0 {
                return Err(QuiverError::InvalidInput(format!("arrow {} → {} has multiplicity 0", a.src, a.dst)));
            }
            let (s, d) = (q.index(&a.src)?, q.index(&a.dst)?);
            q.add_arrows(s, d, a.mult);
        }
        Ok(q)
    }
}

impl From<Quiver> for QuiverJson {
    fn from(q: Quiver) -> Self {
        let arrows = q
            .arrows
            .iter()
            .map(|((s, d), m)| ArrowJson { src: q.vertices[*s].label.clone(), dst: q.vertices[*d].label.clone(), mult: *m })
            .collect();
        QuiverJson { vertices: q.vertices, arrows }
    }
}

impl Default for Quiver {
    fn default() -> Self {
        Self::new()
    }
}

impl Quiver {
    pub fn new() -> Self {
        Quiver { vertices: Vec::new(), arrows: BTreeMap::new() }
    }

    pub fn add_vertex(&mut self, label: &str, weight: usize) -> Result<usize, QuiverError> {
        if self.vertices.iter().any(|v| v.label == label) {
            return Err(QuiverError::DuplicateLabel(label.into()));
        }
        self.vertices.push(Vertex { label: label.into(), weight });
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrows(&mut self, src: usize, dst: usize, mult: usize) {
        assert!(src < self.vertices.len() && dst < self.vertices.len(), "arrow endpoint out of range");
        if mult > 0 {
            *self.arrows.entry((src, dst)).or_default() += mult;
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index(&self, label: &str) -> Result<usize, QuiverError> {
        self.vertices.iter().position(|v| v.label == label).ok_or_else(|| QuiverError::UnknownVertex(label.into()))
    }

    pub fn label(&self, i: usize) -> &str {
        &self.vertices[i].label
    }

    /// Arrows as (source, target, multiplicity), sorted.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.arrows.iter().map(|((s, d), m)| (*s, *d, *m))
    }

    pub fn multiplicity(&self, src: usize, dst: usize) -> usize {
        self.arrows.get(&(src, dst)).copied().unwrap_or(0)
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.values().sum()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|((_, d), _)| *d == v).map(|(_, m)| m).sum()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|((s, _), _)| *s == v).map(|(_, m)| m).sum()
    }

    /// Vertices with an arrow into `v`.
    pub fn predecessors(&self, v: usize) -> Vec<usize> {
        self.arrows.keys().filter(|(_, d)| *d == v).map(|(s, _)| *s).collect()
    }

    /// Vertices with an arrow out of `v`.
    pub fn successors(&self, v: usize) -> Vec<usize> {
        self.arrows.keys().filter(|(s, _)| *s == v).map(|(_, d)| *d).collect()
    }

    /// The full subquiver on the given labels, in the given order.
    pub fn induced(&self, labels: &[&str]) -> Result<Quiver, QuiverError> {
        let idx = labels.iter().map(|l| self.index(l)).collect::<Result<Vec<_>, _>>()?;
        let mut q = Quiver::new();
        for &i in &idx {
            q.add_vertex(&self.vertices[i].label, self.vertices[i].weight)?;
        }
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                q.add_arrows(a, b, self.multiplicity(i, j));
            }
        }
        Ok(q)
    }

    /// Same vertices (matched by label) and same arrows, in any vertex order.
    pub fn same_as(&self, other: &Quiver) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let Ok(map) = self.vertices.iter().map(|v| other.index(&v.label)).collect::<Result<Vec<_>, _>>() else {
            return false;
        };
        self.vertices.iter().zip(&map).all(|(v, &j)| other.vertices[j].weight == v.weight)
            && self.arrow_count() == other.arrow_count()
            && self.arrows().all(|(s, d, m)| other.multiplicity(map[s], map[d]) == m)
    }

    /// Underlying undirected multigraph.
    pub fn underlying_graph(&self) -> Graph {
        let mut g = Graph::new(self.len());
        for (s, d, m) in self.arrows() {
            g.add_edges(s, d, m);
        }
        g
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph Q {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  v{i} [label=\"{}\\n(weight {})\"];", v.label, v.weight);
        }
        for (a, b, m) in self.arrows() {
            for _ in 0..m {
                let _ = writeln!(s, "  v{a} -> v{b};");
            }
        }
        s.push_str("}\n");
        s
    }
}

/// The separated quiver: vertices v and v′, and an arrow u → w′ for every arrow u → w.
/// Vertex i′ has index n + i.
pub fn separated_quiver(q: &Quiver) -> Quiver {
    let n = q.len();
    let mut s = Quiver::new();
    for v in q.vertices() {
        s.add_vertex(&v.label, v.weight).expect("labels are unique");
    }
    for v in q.vertices() {
        let mut label = format!("{}'", v.label);
        while s.index(&label).is_ok() {
            label.push('\'');
        }
        s.add_vertex(&label, v.weight).expect("fresh label");
    }
    for (a, b, m) in q.arrows() {
        s.add_arrows(a, n + b, m);
    }
    s
}
