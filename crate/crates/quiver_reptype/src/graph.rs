//! Undirected multigraphs and Dynkin / Euclidean recognition.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::QuiverError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Keyed by (min, max); a key (v, v) is a loop.
    edges: BTreeMap<(usize, usize), usize>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { n, edges: BTreeMap::new() }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(a, b) in edges {
            g.add_edges(a, b, 1);
        }
        g
    }

    pub fn add_edges(&mut self, a: usize, b: usize, m: usize) {
        assert!(a < self.n && b < self.n, "edge endpoint out of range");
        if m > 0 {
            *self.edges.entry((a.min(b), a.max(b))).or_default() += m;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.edges.iter().map(|((a, b), m)| (*a, *b, *m))
    }

    pub fn has_loop(&self) -> Option<usize> {
        self.edges.keys().find(|(a, b)| a == b).map(|(a, _)| *a)
    }

    fn neighbours(&self, v: usize) -> Vec<(usize, usize)> {
        self.edges()
            .filter_map(|(a, b, m)| {
                if a == v {
                    Some((b, m))
                } else if b == v {
                    Some((a, m))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            let mut members = Vec::new();
            comp[s] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for (w, _) in self.neighbours(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The induced subgraph on `vs`, relabelled 0..vs.len().
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let pos: BTreeMap<usize, usize> = vs.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut g = Graph::new(vs.len());
        for (a, b, m) in self.edges() {
            if let (Some(&i), Some(&j)) = (pos.get(&a), pos.get(&b)) {
                g.add_edges(i, j, m);
            }
        }
        g
    }

    /// 2I − A, with loops counted twice on the diagonal.
    pub fn cartan(&self) -> Vec<Vec<i128>> {
        let mut c = vec![vec![0i128; self.n]; self.n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b, m) in self.edges() {
            if a == b {
                c[a][a] -= 2 * m as i128;
            } else {
                c[a][b] -= m as i128;
                c[b][a] -= m as i128;
            }
        }
        c
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum AdeClass {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
    /// Ã_n, on n + 1 vertices; Ã_1 is the Kronecker graph.
    AffineA(usize),
    /// D̃_n, on n + 1 vertices.
    AffineD(usize),
    AffineE6,
    AffineE7,
    AffineE8,
    BeyondEuclidean,
}

impl AdeClass {
    pub fn is_dynkin(self) -> bool {
        matches!(self, AdeClass::A(_) | AdeClass::D(_) | AdeClass::E6 | AdeClass::E7 | AdeClass::E8)
    }

    pub fn is_euclidean(self) -> bool {
        matches!(
            self,
            AdeClass::AffineA(_) | AdeClass::AffineD(_) | AdeClass::AffineE6 | AdeClass::AffineE7 | AdeClass::AffineE8
        )
    }

    /// Number of vertices of the diagram.
    pub fn rank(self) -> Option<usize> {
        Some(match self {
            AdeClass::A(n) | AdeClass::D(n) => n,
            AdeClass::E6 => 6,
            AdeClass::E7 => 7,
            AdeClass::E8 => 8,
            AdeClass::AffineA(n) | AdeClass::AffineD(n) => n + 1,
            AdeClass::AffineE6 => 7,
            AdeClass::AffineE7 => 8,
            AdeClass::AffineE8 => 9,
            AdeClass::BeyondEuclidean => return None,
        })
    }

    /// A standard graph of this type, or None for the beyond-Euclidean tag.
    pub fn diagram(self) -> Option<Graph> {
        let path = |n: usize| Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>());
        // a vertex 0 with legs of the given numbers of vertices
        let star = |legs: &[usize]| {
            let n = 1 + legs.iter().sum::<usize>();
            let mut g = Graph::new(n);
            let mut next = 1;
            for &l in legs {
                let mut prev = 0;
                for _ in 0..l {
                    g.add_edges(prev, next, 1);
                    prev = next;
                    next += 1;
                }
            }
            g
        };
        Some(match self {
            AdeClass::A(n) if n >= 1 => path(n),
            AdeClass::D(n) if n >= 4 => star(&[1, 1, n - 3]),
            AdeClass::E6 => star(&[1, 2, 2]),
            AdeClass::E7 => star(&[1, 2, 3]),
            AdeClass::E8 => star(&[1, 2, 4]),
            AdeClass::AffineA(1) => {
                let mut g = Graph::new(2);
                g.add_edges(0, 1, 2);
                g
            }
            AdeClass::AffineA(n) if n >= 2 => {
                let mut g = path(n + 1);
                g.add_edges(n, 0, 1);
                g
            }
            AdeClass::AffineD(n) if n >= 4 => {
                // a path on n - 3 vertices with two leaves at each end
                let mut g = Graph::new(n + 1);
                for i in 1..n - 3 {
                    g.add_edges(i - 1, i, 1);
                }
                g.add_edges(0, n - 3, 1);
                g.add_edges(0, n - 2, 1);
                g.add_edges(n - 4, n - 1, 1);
                g.add_edges(n - 4, n, 1);
                g
            }
            AdeClass::AffineE6 => star(&[2, 2, 2]),
            AdeClass::AffineE7 => star(&[1, 3, 3]),
            AdeClass::AffineE8 => star(&[1, 2, 5]),
            _ => return None,
        })
    }
}

impl fmt::Display for AdeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeClass::A(n) => write!(f, "A{n}"),
            AdeClass::D(n) => write!(f, "D{n}"),
            AdeClass::E6 => write!(f, "E6"),
            AdeClass::E7 => write!(f, "E7"),
            AdeClass::E8 => write!(f, "E8"),
            AdeClass::AffineA(n) => write!(f, "~A{n}"),
            AdeClass::AffineD(n) => write!(f, "~D{n}"),
            AdeClass::AffineE6 => write!(f, "~E6"),
            AdeClass::AffineE7 => write!(f, "~E7"),
            AdeClass::AffineE8 => write!(f, "~E8"),
            AdeClass::BeyondEuclidean => write!(f, "beyond Euclidean"),
        }
    }
}

fn classify_connected(g: &Graph) -> AdeClass {
    let n = g.vertex_count();
    if n == 1 {
        return AdeClass::A(1);
    }
    let edges: Vec<(usize, usize, usize)> = g.edges().collect();
    if edges.iter().any(|e| e.2 >= 3) {
        return AdeClass::BeyondEuclidean;
    }
    if edges.iter().any(|e| e.2 == 2) {
        return if n == 2 { AdeClass::AffineA(1) } else { AdeClass::BeyondEuclidean };
    }
    let e = edges.len();
    let deg: Vec<usize> = (0..n).map(|v| g.neighbours(v).len()).collect();
    if e == n {
        return if deg.iter().all(|d| *d == 2) { AdeClass::AffineA(n - 1) } else { AdeClass::BeyondEuclidean };
    }
    if e > n {
        return AdeClass::BeyondEuclidean;
    }
    // a tree
    let branch: Vec<usize> = (0..n).filter(|v| deg[*v] >= 3).collect();
    match branch.as_slice() {
        [] => AdeClass::A(n),
        [b] if deg[*b] == 4 => {
            if n == 5 {
                AdeClass::AffineD(4)
            } else {
                AdeClass::BeyondEuclidean
            }
        }
        [b] if deg[*b] == 3 => {
            let mut legs: Vec<usize> = g.neighbours(*b).iter().map(|(w, _)| leg_length(g, *b, *w)).collect();
            legs.sort_unstable();
            match legs.as_slice() {
                [1, 1, c] => AdeClass::D(c + 3),
                [1, 2, 2] => AdeClass::E6,
                [1, 2, 3] => AdeClass::E7,
                [1, 2, 4] => AdeClass::E8,
                [1, 2, 5] => AdeClass::AffineE8,
                [1, 3, 3] => AdeClass::AffineE7,
                [2, 2, 2] => AdeClass::AffineE6,
                _ => AdeClass::BeyondEuclidean,
            }
        }
        [a, b] if deg[*a] == 3 && deg[*b] == 3 => {
            let leaves = |v: usize| g.neighbours(v).iter().filter(|(w, _)| deg[*w] == 1).count();
            if leaves(*a) == 2 && leaves(*b) == 2 {
                AdeClass::AffineD(n - 1)
            } else {
                AdeClass::BeyondEuclidean
            }
        }
        _ => AdeClass::BeyondEuclidean,
    }
}

/// Number of vertices on the leg that leaves `from` through `first`, which must be a path.
fn leg_length(g: &Graph, from: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, first, 1);
    loop {
        let next: Vec<usize> = g.neighbours(cur).into_iter().map(|(w, _)| w).filter(|w| *w != prev).collect();
        match next.as_slice() {
            [w] => {
                prev = cur;
                cur = *w;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// Classification of each connected component, in component order.
pub fn classify_ade(g: &Graph) -> Result<Vec<AdeClass>, QuiverError> {
    if let Some(v) = g.has_loop() {
        return Err(QuiverError::Loop(format!("vertex {v}")));
    }
    Ok(g.components().iter().map(|c| classify_connected(&g.induced(c))).collect())
}

/// Position of the largest adjacency eigenvalue relative to 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Spectral {
    Below,
    Equal,
    Above,
}

/// Exact comparison of the spectral radius of a connected graph with 2: ρ < 2 iff 2I − A is
/// positive definite; ρ = 2 iff 2I − A is singular while 2I − A with one vertex removed is
/// positive definite (interlacing), since the Perron eigenvalue is simple.
pub fn spectral_class(g: &Graph) -> Spectral {
    let c = g.cartan();
    if positive_definite(&c) {
        return Spectral::Below;
    }
    let n = c.len();
    let minor: Vec<Vec<i128>> = c[1..].iter().map(|r| r[1..].to_vec()).collect();
    if n > 0 && positive_definite(&minor) && det(&c) == 0 {
        Spectral::Equal
    } else {
        Spectral::Above
    }
}

/// Sylvester's criterion on the leading principal minors.
pub fn positive_definite(m: &[Vec<i128>]) -> bool {
    (1..=m.len()).all(|k| {
        let sub: Vec<Vec<i128>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
        det(&sub) > 0
    })
}

/// Fraction-free (Bareiss) determinant.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else { return 0 };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}
