//! Sparse exact linear algebra: echelon forms, kernels, canonical subspaces,
//! and a small dense matrix type.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

pub type SparseVec = BTreeMap<usize, Scalar>;

pub fn unit_vec(i: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert(i, Scalar::one());
    v
}

/// `a += s * b`, dropping cancelled entries.
pub fn axpy(a: &mut SparseVec, s: &Scalar, b: &SparseVec) {
    if s.is_zero() {
        return;
    }
    for (k, x) in b {
        let t = s * x;
        add_entry(a, *k, &t);
    }
}

pub fn add_entry(a: &mut SparseVec, k: usize, t: &Scalar) {
    if t.is_zero() {
        return;
    }
    match a.get_mut(&k) {
        Some(y) => {
            *y += t;
            if y.is_zero() {
                a.remove(&k);
            }
        }
        None => {
            a.insert(k, t.clone());
        }
    }
}

pub fn scaled(v: &SparseVec, s: &Scalar) -> SparseVec {
    if s.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(k, x)| (*k, x * s)).collect()
}

pub fn sub(a: &SparseVec, b: &SparseVec) -> SparseVec {
    let mut r = a.clone();
    axpy(&mut r, &Scalar::from_int(-1), b);
    r
}

pub fn add(a: &SparseVec, b: &SparseVec) -> SparseVec {
    let mut r = a.clone();
    axpy(&mut r, &Scalar::one(), b);
    r
}

/// Linear combination `sum_i c_i v_i`.
pub fn combine<'a>(terms: impl IntoIterator<Item = (&'a Scalar, &'a SparseVec)>) -> SparseVec {
    let mut r = SparseVec::new();
    for (c, v) in terms {
        axpy(&mut r, c, v);
    }
    r
}

/// Row echelon basis built incrementally. Every row has its smallest index as
/// pivot with coefficient 1, and carries a tag recording how it was produced
/// from the inserted vectors.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(SparseVec, SparseVec)>,
    pivots: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `(v, tag)` against the current rows.
    pub fn reduce_tagged(&self, v: &mut SparseVec, tag: &mut SparseVec) {
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).find(|(k, _)| self.pivots.contains_key(k)).map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            let (row, rtag) = &self.rows[self.pivots[&k]];
            let s = -c;
            axpy(v, &s, row);
            axpy(tag, &s, rtag);
            cursor = k + 1;
        }
    }

    pub fn reduce(&self, v: &mut SparseVec) {
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).find(|(k, _)| self.pivots.contains_key(k)).map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            let (row, _) = &self.rows[self.pivots[&k]];
            axpy(v, &(-c), row);
            cursor = k + 1;
        }
    }

    /// Inserts a vector; returns the dependency tag if it reduced to zero.
    pub fn insert_tagged(&mut self, mut v: SparseVec, mut tag: SparseVec) -> Option<SparseVec> {
        self.reduce_tagged(&mut v, &mut tag);
        let Some((&p, c)) = v.iter().next() else {
            return Some(tag);
        };
        let inv = c.inv();
        let v = scaled(&v, &inv);
        let tag = scaled(&tag, &inv);
        self.pivots.insert(p, self.rows.len());
        self.rows.push((v, tag));
        None
    }

    /// Inserts a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = v;
        self.reduce(&mut v);
        let Some((&p, c)) = v.iter().next() else {
            return false;
        };
        let inv = c.inv();
        let v = scaled(&v, &inv);
        self.pivots.insert(p, self.rows.len());
        self.rows.push((v, SparseVec::new()));
        true
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.iter().map(|(r, _)| r)
    }

    pub fn into_subspace(self, ambient: usize) -> Subspace {
        Subspace::from_echelon_rows(ambient, self.rows.into_iter().map(|(r, _)| r).collect())
    }
}

/// Coordinates with respect to a fixed list of linearly independent vectors.
#[derive(Clone, Debug)]
pub struct Frame {
    ech: Echelon,
    len: usize,
}

impl Frame {
    /// Returns `None` if the vectors are dependent.
    pub fn new(vs: &[SparseVec]) -> Option<Frame> {
        let mut ech = Echelon::new();
        for (i, v) in vs.iter().enumerate() {
            if ech.insert_tagged(v.clone(), unit_vec(i)).is_some() {
                return None;
            }
        }
        Some(Frame { ech, len: vs.len() })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Sparse coordinates of `v`, or `None` if it is outside the span.
    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        let mut r = v.clone();
        let mut tag = SparseVec::new();
        self.ech.reduce_tagged(&mut r, &mut tag);
        if r.is_empty() {
            Some(scaled(&tag, &Scalar::from_int(-1)))
        } else {
            None
        }
    }
}

/// Basis of the kernel of the linear map sending `e_i` to `images[i]`,
/// as vectors in the source coordinates.
pub fn kernel(images: &[SparseVec]) -> Vec<SparseVec> {
    let mut ech = Echelon::new();
    let mut out = Vec::new();
    for (i, img) in images.iter().enumerate() {
        if let Some(rel) = ech.insert_tagged(img.clone(), crate::linalg::unit_vec(i)) {
            out.push(rel);
        }
    }
    out
}

pub fn rank(vs: &[SparseVec]) -> usize {
    let mut ech = Echelon::new();
    for v in vs {
        ech.insert(v.clone());
    }
    ech.rank()
}

/// A subspace of K^ambient in reduced row echelon form. Equal subspaces have
/// identical representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, rows: (0..ambient).map(unit_vec).collect(), pivots: (0..ambient).collect() }
    }

    pub fn span(ambient: usize, vs: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut ech = Echelon::new();
        for v in vs {
            debug_assert!(v.keys().all(|&k| k < ambient));
            ech.insert(v);
        }
        ech.into_subspace(ambient)
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        Subspace::span(ambient, idx.into_iter().map(unit_vec))
    }

    fn from_echelon_rows(ambient: usize, mut rows: Vec<SparseVec>) -> Self {
        rows.sort_by_key(|r| *r.keys().next().unwrap());
        let pivots: Vec<usize> = rows.iter().map(|r| *r.keys().next().unwrap()).collect();
        let index: BTreeMap<usize, usize> = pivots.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        // Back substitution, from the last pivot up, so later rows are already reduced.
        for i in (0..rows.len()).rev() {
            let mut r = std::mem::take(&mut rows[i]);
            let mut cursor = pivots[i] + 1;
            loop {
                let next = r.range(cursor..).find(|(k, _)| index.contains_key(k)).map(|(k, c)| (*k, c.clone()));
                let Some((k, c)) = next else { break };
                let j = index[&k];
                axpy(&mut r, &(-c), &rows[j]);
                cursor = k + 1;
            }
            rows[i] = r;
        }
        Subspace { ambient, rows, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` modulo the subspace; vanishes at every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut r = v.clone();
        for (row, p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = v.get(p) {
                axpy(&mut r, &(-c.clone()), row);
            }
        }
        r
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn contains_subspace(&self, o: &Subspace) -> bool {
        o.rows.iter().all(|r| self.contains(r))
    }

    /// Coordinates of `v` in the row basis, assuming `v` lies in the subspace.
    pub fn coords(&self, v: &SparseVec) -> Vec<Scalar> {
        self.pivots.iter().map(|p| v.get(p).cloned().unwrap_or_default()).collect()
    }

    /// Coordinates if `v` lies in the subspace.
    pub fn try_coords(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        if self.contains(v) {
            Some(self.coords(v))
        } else {
            None
        }
    }

    pub fn from_coords(&self, c: &[Scalar]) -> SparseVec {
        combine(c.iter().zip(&self.rows))
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.ambient, o.ambient);
        Subspace::span(self.ambient, self.rows.iter().chain(&o.rows).cloned())
    }

    pub fn intersect(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.ambient, o.ambient);
        let images: Vec<SparseVec> = self.rows.iter().map(|r| o.reduce(r)).collect();
        let ker = kernel(&images);
        Subspace::span(self.ambient, ker.iter().map(|k| combine(k.iter().map(|(i, c)| (c, &self.rows[*i])))))
    }

    /// For each standard basis vector, its image under the quotient map to
    /// K^ambient / self, written on the non-pivot columns.
    pub fn quotient_table(&self) -> Vec<SparseVec> {
        let mut t: Vec<SparseVec> = (0..self.ambient).map(unit_vec).collect();
        for (row, p) in self.rows.iter().zip(&self.pivots) {
            let mut v = row.clone();
            v.remove(p);
            t[*p] = scaled(&v, &Scalar::from_int(-1));
        }
        t
    }
}

/// Small dense matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut m = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let t = a * b;
                        m.data[i * o.cols + j] += &t;
                    }
                }
            }
        }
        m
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn transpose(&self) -> Mat {
        let mut m = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn to_sparse_rows(&self) -> Vec<SparseVec> {
        (0..self.rows)
            .map(|i| self.row(i).iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect())
            .collect()
    }

    /// Row-major flattening as one sparse vector.
    pub fn to_sparse_flat(&self) -> SparseVec {
        self.data.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect()
    }

    pub fn from_sparse_flat(rows: usize, cols: usize, v: &SparseVec) -> Mat {
        let mut m = Mat::zeros(rows, cols);
        for (k, x) in v {
            m.data[*k] = x.clone();
        }
        m
    }

    pub fn rank(&self) -> usize {
        rank(&self.to_sparse_rows())
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a.get(r, c).is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = a.get(c, c).clone();
            det = &det * &piv;
            let inv = piv.inv();
            for r in c + 1..n {
                let f = a.get(r, c) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let t = &f * a.get(c, j);
                    a.data[r * n + j] -= &t;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut b = Mat::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !a.get(r, c).is_zero())?;
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                    b.data.swap(p * n + j, c * n + j);
                }
            }
            let inv = a.get(c, c).inv();
            for j in 0..n {
                a.data[c * n + j] = a.get(c, j) * &inv;
                b.data[c * n + j] = b.get(c, j) * &inv;
            }
            for r in 0..n {
                if r == c {
                    continue;
                }
                let f = a.get(r, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let ta = &f * a.get(c, j);
                    a.data[r * n + j] -= &ta;
                    let tb = &f * b.get(c, j);
                    b.data[r * n + j] -= &tb;
                }
            }
        }
        Some(b)
    }
}
