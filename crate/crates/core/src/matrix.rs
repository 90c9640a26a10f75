//! Dense matrices over a finite field with exact Gaussian elimination.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;

/// Serialized form of a matrix: integer element encodings, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixData {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<u32>>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<u32>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&x| !field.contains(x)) {
            return Err(Error::ElementOutOfRange {
                value: bad,
                q: field.order(),
            });
        }
        Ok(Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from rows; all rows must share one length. An empty
    /// list gives a `0 x cols` matrix, so the column count is explicit.
    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<u32>]) -> Result<Matrix> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                r.len()
            )));
        }
        Self::new(field, rows.len(), cols, rows.concat())
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_data(field: &Field, data: &MatrixData) -> Result<Matrix> {
        if data.entries.len() != data.rows {
            return Err(Error::DimensionMismatch(format!(
                "{} rows listed, {} declared",
                data.entries.len(),
                data.rows
            )));
        }
        Self::from_rows(field, data.cols, &data.entries)
    }

    pub fn to_data(&self) -> MatrixData {
        MatrixData {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows).map(|r| self.row(r).to_vec()).collect(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    fn check(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(k, c)));
                }
            }
        }
        Ok(out)
    }

    /// `M * v^T` as a vector of length `rows`.
    pub fn mul_vec(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| self.field.dot(self.row(r), v))
            .collect())
    }

    /// `v * M` for a vector of length `rows`.
    pub fn vec_mul(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        let f = &self.field;
        let mut out = vec![0u32; self.cols];
        for (r, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(self.row(r)) {
                *o = f.add(*o, f.mul(a, x));
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("row counts differ".into()));
        }
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Self::new(&self.field, self.rows, self.cols + other.cols, data)
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Self::new(&self.field, self.rows + other.rows, self.cols, data)
    }

    pub fn append_column(&self, col: &[u32]) -> Result<Matrix> {
        let c = Self::new(&self.field, col.len(), 1, col.to_vec())?;
        self.hstack(&c)
    }

    pub fn append_row(&self, row: &[u32]) -> Result<Matrix> {
        let r = Self::new(&self.field, 1, row.len(), row.to_vec())?;
        self.vstack(&r)
    }

    /// The first `k` rows.
    pub fn top_rows(&self, k: usize) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: k,
            cols: self.cols,
            data: self.data[..k * self.cols].to_vec(),
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            data.extend(cols.iter().map(|&c| self.get(r, c)));
        }
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    /// Reduced row echelon form, with the pivot column of each nonzero row.
    /// Zero rows are kept at the bottom.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.eliminate(true).0;
        (m, pivots)
    }

    /// In-place elimination. Returns pivot columns and the parity of the row
    /// swaps performed.
    fn eliminate(&mut self, reduce_above: bool) -> (Vec<usize>, bool) {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut odd = false;
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
                odd = !odd;
            }
            if reduce_above {
                let inv = f.inv(self.get(r, c));
                for j in c..cols {
                    let v = f.mul(self.get(r, j), inv);
                    self.set(r, j, v);
                }
            }
            let pivot_val = self.get(r, c);
            let targets: Box<dyn Iterator<Item = usize>> = if reduce_above {
                Box::new((0..rows).filter(move |&i| i != r))
            } else {
                Box::new(r + 1..rows)
            };
            for i in targets {
                let x = self.get(i, c);
                if x == 0 {
                    continue;
                }
                let factor = f.div(x, pivot_val);
                for j in c..cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (pivots, odd)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.eliminate(false).0.len()
    }

    pub fn det(&self) -> Result<u32> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let f = self.field.clone();
        let mut m = self.clone();
        let (pivots, odd) = m.eliminate(false);
        if pivots.len() < self.rows {
            return Ok(0);
        }
        let d = f.product((0..self.rows).map(|i| m.get(i, i)));
        Ok(if odd { f.neg(d) } else { d })
    }

    /// Basis of `{x : M x^T = 0}` as the rows of the result. Each basis
    /// vector has a 1 at one free column and zeros at the other free columns.
    pub fn nullspace(&self) -> Matrix {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, 1);
            for (pr, &pc) in pivots.iter().enumerate() {
                out.set(i, pc, f.neg(r.get(pr, fc)));
            }
        }
        out
    }

    /// One solution of `M x^T = b`, free variables set to zero.
    pub fn solve(&self, b: &[u32]) -> Result<Vec<u32>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = self.append_column(b)?;
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::InconsistentSystem);
        }
        let mut x = vec![0u32; self.cols];
        for (pr, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(pr, self.cols);
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(&self.field, n))?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::InconsistentSystem);
        }
        Ok(r.select_columns(&(n..2 * n).collect::<Vec<_>>()))
    }

    /// First `k`-subset of columns (in lexicographic order) whose rank is
    /// below `k`, if any.
    pub fn first_dependent_columns(&self, k: usize) -> Result<Option<Vec<usize>>> {
        if k > self.rows || k > self.cols {
            return Err(Error::BadK {
                k,
                reason: format!("matrix is {}x{}", self.rows, self.cols),
            });
        }
        Ok((0..self.cols)
            .combinations(k)
            .find(|cols| self.select_columns(cols).rank() < k))
    }

    /// True iff every choice of `k` columns is linearly independent.
    pub fn all_k_columns_independent(&self, k: usize) -> Result<bool> {
        Ok(self.first_dependent_columns(k)?.is_none())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
}

pub(crate) fn check_nodes(field: &Field, a: &[u32], v: &[u32], k: usize) -> Result<()> {
    let n = a.len();
    if v.len() != n {
        return Err(Error::BadDims(format!(
            "{} nodes but {} multipliers",
            n,
            v.len()
        )));
    }
    if k > n || n > field.order() as usize {
        return Err(Error::BadDims(format!(
            "need k <= n <= q, got k = {k}, n = {n}, q = {}",
            field.order()
        )));
    }
    for (i, &x) in a.iter().enumerate() {
        if !field.contains(x) {
            return Err(Error::ElementOutOfRange {
                value: x,
                q: field.order(),
            });
        }
        if a[..i].contains(&x) {
            return Err(Error::DuplicateNode(x));
        }
    }
    if let Some(i) = v.iter().position(|&x| x == 0 || !field.contains(x)) {
        return Err(Error::ZeroMultiplier(i));
    }
    Ok(())
}

/// The `k x n` matrix with entry `(i, j) = v_j * a_j^i`.
pub fn grs_generator(field: &Field, a: &[u32], v: &[u32], k: usize) -> Result<Matrix> {
    check_nodes(field, a, v, k)?;
    Ok(scaled_vandermonde(field, a, v, k))
}

fn scaled_vandermonde(field: &Field, a: &[u32], v: &[u32], k: usize) -> Matrix {
    let n = a.len();
    let mut m = Matrix::zeros(field, k, n);
    for j in 0..n {
        let mut x = v[j];
        for i in 0..k {
            m.set(i, j, x);
            x = field.mul(x, a[j]);
        }
    }
    m
}

/// The scaled Vandermonde matrix with the column `(0, ..., 0, 1)^T`
/// appended. Allows `1 <= k <= n + 1`.
pub fn egrs_generator(field: &Field, a: &[u32], v: &[u32], k: usize) -> Result<Matrix> {
    if k == 0 {
        return Err(Error::BadDims("extended GRS code needs k >= 1".into()));
    }
    check_nodes(field, a, v, k - 1)?;
    let g = scaled_vandermonde(field, a, v, k);
    let mut inf = vec![0u32; k];
    inf[k - 1] = 1;
    g.append_column(&inf)
}
