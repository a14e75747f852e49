//! Dense exact linear algebra over a [`FieldSpec`].
//!
//! Everything reduces to one routine, [`rref_in_place`], which brings a
//! list of rows to reduced row echelon form. Rank, kernels, spans,
//! inverses and solving with inconsistency certificates are thin layers
//! over it.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::Serialize;

use crate::embeddings::TracelessMatrix;
use crate::error::{Error, Result};
use crate::exec;
use crate::field::{clear_denominators, FieldElem, FieldSpec};

pub type Vector = Vec<FieldElem>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// The unit matrix `e_{i,j}` (0-based indices).
    pub fn unit(field: FieldSpec, n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        m[(i, j)] = field.one();
        m
    }

    pub fn diagonal(field: FieldSpec, diag: &[FieldElem]) -> Self {
        let mut m = Self::zeros(field, diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vector>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        for x in rows.iter().flatten() {
            if x.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), x.field().to_string()));
            }
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// `v` as a `1 x len` matrix.
    pub fn row_vector(field: FieldSpec, v: &[FieldElem]) -> Self {
        Matrix {
            field,
            rows: 1,
            cols: v.len(),
            data: v.to_vec(),
        }
    }

    /// `v` as a `len x 1` matrix.
    pub fn column_vector(field: FieldSpec, v: &[FieldElem]) -> Self {
        Matrix {
            field,
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElem::is_zero)
    }

    pub fn map(&self, f: impl Fn(&FieldElem) -> FieldElem) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn same_shape(&self, other: &Matrix, op: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{op} of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other, "sum")?;
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other, "difference")?;
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, k: &FieldElem) -> Matrix {
        self.map(|x| x * k)
    }

    pub fn neg(&self) -> Matrix {
        self.map(|x| -x)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = &out[(i, j)] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Result<FieldElem> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("trace of a non-square matrix".into()));
        }
        Ok((0..self.rows).fold(self.field.zero(), |acc, i| acc + &self[(i, i)]))
    }

    /// `Tr(self * other)` without forming the product.
    pub fn trace_of_product(&self, other: &Matrix) -> Result<FieldElem> {
        if self.cols != other.rows || self.rows != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "trace of {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut acc = self.field.zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                let b = &other[(k, i)];
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + a * b;
                }
            }
        }
        Ok(acc)
    }

    pub fn rank(&self) -> usize {
        if self.field.derivation_rank() > 0 {
            return fraction_free_rank(self.to_rows(), self.cols);
        }
        let mut rows = self.to_rows();
        rref_in_place(&mut rows, self.cols).len()
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.to_rows();
        let pivots = rref_in_place(&mut rows, self.cols);
        let m = Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: rows.into_iter().flatten().collect(),
        };
        (m, pivots)
    }

    pub fn determinant(&self) -> Result<FieldElem> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut rows = self.to_rows();
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !rows[r][c].is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != c {
                rows.swap(p, c);
                det = -det;
            }
            let pivot = rows[c][c].clone();
            det = det * &pivot;
            let inv = pivot.inv()?;
            for r in c + 1..n {
                if rows[r][c].is_zero() {
                    continue;
                }
                let factor = &rows[r][c] * &inv;
                for j in c..n {
                    let delta = &factor * &rows[c][j];
                    rows[r][j] = &rows[r][j] - &delta;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut rows: Vec<Vector> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| {
                    if i == j {
                        self.field.one()
                    } else {
                        self.field.zero()
                    }
                }));
                r
            })
            .collect();
        let pivots = rref_in_place(&mut rows, n);
        if pivots.len() < n {
            return Err(Error::Singular);
        }
        let data = rows.into_iter().flat_map(|r| r.into_iter().skip(n)).collect();
        Ok(Matrix {
            field: self.field,
            rows: n,
            cols: n,
            data,
        })
    }

    /// Right kernel `{x : self * x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut vectors = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut x = vec![self.field.zero(); self.cols];
            x[free] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = -&r[(i, free)];
            }
            vectors.push(x);
        }
        Subspace::span(self.field, self.cols, &vectors)
    }

    /// Solves `self * x = b`. On failure returns a certificate `y` with
    /// `y * self = 0` and `y * b != 0`.
    pub fn solve(&self, b: &[FieldElem]) -> Result<Solution> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let (m, n) = (self.rows, self.cols);
        let mut rows: Vec<Vector> = (0..m)
            .map(|i| {
                let mut r = Vec::with_capacity(n + 1 + m);
                r.extend_from_slice(self.row(i));
                r.push(b[i].clone());
                r.extend((0..m).map(|j| {
                    if i == j {
                        self.field.one()
                    } else {
                        self.field.zero()
                    }
                }));
                r
            })
            .collect();
        let pivots = rref_in_place(&mut rows, n);
        for row in rows.iter().skip(pivots.len()) {
            if !row[n].is_zero() {
                return Ok(Solution::Inconsistent(InconsistencyCertificate {
                    combination: row[n + 1..].to_vec(),
                    value: row[n].clone(),
                }));
            }
        }
        let mut x = vec![self.field.zero(); n];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = rows[i][n].clone();
        }
        Ok(Solution::Solved(x))
    }

    pub fn mul_vec(&self, x: &[FieldElem]) -> Result<Vector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch("matrix-vector product".into()));
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), x)).collect())
    }

    /// `y * self` for a row vector `y`.
    pub fn vec_mul(&self, y: &[FieldElem]) -> Result<Vector> {
        if y.len() != self.rows {
            return Err(Error::DimensionMismatch("vector-matrix product".into()));
        }
        let mut out = vec![self.field.zero(); self.cols];
        for (i, yi) in y.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let a = &self[(i, j)];
                if !a.is_zero() {
                    *o = &*o + &(yi * a);
                }
            }
        }
        Ok(out)
    }

    /// Parses the whitespace-separated text format, one row per line.
    pub fn from_text(field: FieldSpec, text: &str) -> Result<Matrix> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|tok| field.parse_elem(tok))
                    .collect::<Result<Vector>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(field, rows)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = FieldElem;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElem {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElem {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

pub fn dot(a: &[FieldElem], b: &[FieldElem]) -> FieldElem {
    let field = a.first().or(b.first()).map(FieldElem::field);
    let mut acc = match field {
        Some(f) => f.zero(),
        None => panic!("dot product of empty vectors has no field"),
    };
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc + x * y;
        }
    }
    acc
}

/// Result of [`Matrix::solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Solved(Vector),
    Inconsistent(InconsistencyCertificate),
}

/// A row combination `y` with `y * M = 0` and `y * b = value != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InconsistencyCertificate {
    pub combination: Vector,
    pub value: FieldElem,
}

impl InconsistencyCertificate {
    /// Re-checks the certificate against the system it refutes.
    pub fn verify(&self, m: &Matrix, b: &[FieldElem]) -> bool {
        let Ok(lhs) = m.vec_mul(&self.combination) else {
            return false;
        };
        lhs.iter().all(FieldElem::is_zero)
            && !self.value.is_zero()
            && dot(&self.combination, b) == self.value
    }
}

fn choose_pivot(rows: &[Vector], from: usize, col: usize) -> Option<usize> {
    let mut candidates = (from..rows.len()).filter(|&r| !rows[r][col].is_zero());
    let first = candidates.next()?;
    if matches!(rows[first][col], FieldElem::Fp(_)) {
        return Some(first);
    }
    // smallest representation among the column's nonzeros
    Some(
        std::iter::once(first)
            .chain(candidates)
            .min_by_key(|&r| (rows[r][col].size_hint(), r))
            .expect("nonempty"),
    )
}

/// Brings `rows` to reduced row echelon form, choosing pivots only in
/// the first `pivot_cols` columns but applying every row operation to the
/// full rows. Returns the pivot columns; rows past the pivot count are
/// zero in the pivot region.
pub fn rref_in_place(rows: &mut [Vector], pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = choose_pivot(rows, r, c) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = std::mem::take(&mut rows[r]);
        exec::for_each_mut(rows, 64, |i, row| {
            if i == r || row[c].is_zero() {
                return;
            }
            let factor = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !p.is_zero() {
                    *x = &*x - &(&factor * p);
                }
            }
        });
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank by fraction-free (Bareiss) elimination after clearing
/// denominators row by row. Over function fields every intermediate entry
/// stays a polynomial minor, which avoids the growth of reduced forms.
pub fn fraction_free_rank(rows: Vec<Vector>, cols: usize) -> usize {
    let mut rows: Vec<Vector> = rows
        .iter()
        .map(|r| clear_denominators(r))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let Some(first) = rows.first() else {
        return 0;
    };
    let mut prev = first[0].one_like();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| (rows[i][c].size_hint(), i))
        else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = std::mem::take(&mut rows[r]);
        let pivot = pivot_row[c].clone();
        exec::for_each_mut(&mut rows[r + 1..], 16, |_, row| {
            let factor = std::mem::replace(&mut row[c], pivot.zero_like());
            for j in c + 1..cols {
                let mut x = &pivot * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    x = &x - &(&factor * &pivot_row[j]);
                }
                row[j] = if x.is_zero() { x } else { &x / &prev };
            }
        });
        rows[r] = pivot_row;
        prev = pivot;
        r += 1;
    }
    r
}

/// A subspace of `K^ambient_dim` held as the nonzero rows of a reduced
/// row echelon basis, so equal subspaces have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: &[Vector]) -> Self {
        let mut rows: Vec<Vector> = vectors.to_vec();
        for v in &rows {
            assert_eq!(v.len(), ambient_dim, "vector length differs from ambient dimension");
        }
        let pivots = rref_in_place(&mut rows, ambient_dim);
        rows.truncate(pivots.len());
        Subspace {
            field,
            ambient_dim,
            basis: rows,
            pivots,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Normal form of `v` modulo the subspace.
    pub fn reduce(&self, v: &[FieldElem]) -> Vector {
        let mut v = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x = &*x - &(&factor * b);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        self.reduce(v).iter().all(FieldElem::is_zero)
    }

    /// Adds `v` to the subspace; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[FieldElem]) -> bool {
        let mut rem = self.reduce(v);
        let Some(p) = rem.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = rem[p].inv().expect("nonzero");
        for x in rem.iter_mut() {
            *x = &*x * &inv;
        }
        for row in self.basis.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (x, r) in row.iter_mut().zip(&rem) {
                if !r.is_zero() {
                    *x = &*x - &(&factor * r);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, rem);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }
}

/// `Tr(b * a)`: the pairing of a matrix class in `M_{n+1}(K)/<I>` with a
/// traceless matrix. Shifting `b` by a scalar matrix does not change it.
pub fn trace_pair(b: &Matrix, a: &TracelessMatrix) -> Result<FieldElem> {
    b.trace_of_product(a.matrix())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn identity_rank() {
        let f5 = FieldSpec::Prime(5);
        assert_eq!(Matrix::identity(f5, 3).rank(), 3);
    }

    #[test]
    fn kernel_of_ones_row() {
        let m = Matrix::from_rows(q(), vec![vec![q().one(), q().one()]]).unwrap();
        let k = m.kernel();
        let expected = Subspace::span(q(), 2, &[vec![q().one(), q().from_i64(-1)]]);
        assert_eq!(k, expected);
    }

    #[test]
    fn solve_and_certificate() {
        let f = q();
        let m = Matrix::from_text(f, "1 2\n2 4\n").unwrap();
        match m.solve(&[f.from_i64(1), f.from_i64(2)]).unwrap() {
            Solution::Solved(x) => {
                assert_eq!(m.mul_vec(&x).unwrap(), vec![f.from_i64(1), f.from_i64(2)])
            }
            other => panic!("{other:?}"),
        }
        let b = vec![f.from_i64(1), f.from_i64(3)];
        match m.solve(&b).unwrap() {
            Solution::Inconsistent(cert) => assert!(cert.verify(&m, &b)),
            other => panic!("{other:?}"),
        }
        assert!(m.solve(&[f.one()]).is_err());
    }

    #[test]
    fn determinant_and_inverse() {
        let f = FieldSpec::RationalFunction;
        let m = Matrix::from_text(f, "t 1\n0 (1)/(t)\n").unwrap();
        assert!(m.determinant().unwrap().is_one());
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(f, 2));
        let singular = Matrix::from_text(f, "t t\n1 1\n").unwrap();
        assert_eq!(singular.inverse(), Err(Error::Singular));
        assert!(singular.determinant().unwrap().is_zero());
    }

    #[test]
    fn subspace_insert_matches_span() {
        let f = FieldSpec::Prime(3);
        let vs: Vec<Vector> = ["1 2 0", "2 1 0", "0 1 1", "1 0 1"]
            .iter()
            .map(|s| s.split(' ').map(|x| f.parse_elem(x).unwrap()).collect())
            .collect();
        let mut s = Subspace::zero(f, 3);
        for v in &vs {
            s.insert(v);
        }
        assert_eq!(s, Subspace::span(f, 3, &vs));
    }

    #[test]
    fn text_round_trip() {
        let f = FieldSpec::PrimeFunction(5);
        let m = Matrix::from_text(f, "(t^2+1)/(t) 0\n3t+4 1\n").unwrap();
        assert_eq!(Matrix::from_text(f, &m.to_text()).unwrap(), m);
    }

    #[test]
    fn unit_trace_pair() {
        let f = q();
        let a = TracelessMatrix::new(Matrix::unit(f, 3, 1, 0)).unwrap();
        let b = Matrix::unit(f, 3, 0, 1);
        assert!(trace_pair(&b, &a).unwrap().is_one());
        assert!(trace_pair(&Matrix::identity(f, 3), &a).unwrap().is_zero());
    }

    #[test]
    fn dimension_errors() {
        let f = q();
        let a = Matrix::zeros(f, 2, 3);
        assert!(matches!(a.mul(&a), Err(Error::DimensionMismatch(_))));
        assert!(a.trace().is_err());
    }
}
