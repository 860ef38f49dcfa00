use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::ff::{Embedding, Field, FieldElement, Fq};

use super::MatrixError;

/// Dense row-major matrix of raw field encodings.
#[derive(Clone)]
pub struct Matrix {
    field: Fq,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn new(field: &Fq, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self, MatrixError> {
        if data.len() != rows * cols {
            return Err(MatrixError::SizeMismatch);
        }
        if data.iter().any(|&v| v >= field.q()) {
            return Err(MatrixError::EntryRange);
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    pub fn zeros(field: &Fq, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Fq, n: usize) -> Self {
        Self::scalar(field, n, 1)
    }

    pub fn scalar(field: &Fq, n: usize, c: u32) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    /// Builds a matrix from rows of integers reduced into the prime subfield.
    pub fn from_ints(field: &Fq, rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(MatrixError::SizeMismatch);
        }
        let data = rows.iter().flatten().map(|&v| field.from_int(v)).collect();
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    pub fn from_elements(field: &Fq, rows: &[Vec<FieldElement>]) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(MatrixError::SizeMismatch);
        }
        let mut data = Vec::with_capacity(rows.len() * cols);
        for e in rows.iter().flatten() {
            if !Field::same(e.field(), field) {
                return Err(MatrixError::FieldMismatch);
            }
            data.push(e.raw());
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &Fq, n: usize, cols: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..n {
                m.data[i * cols.len() + j] = c[i];
            }
        }
        m
    }

    pub fn from_rows(field: &Fq, cols: usize, rows: &[Vec<u32>]) -> Self {
        let data = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Matrix { field: field.clone(), rows: rows.len(), cols, data }
    }

    pub fn field(&self) -> &Fq {
        &self.field
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

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn raw(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set_raw(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        FieldElement::new(&self.field, self.raw(i, j))
    }

    pub fn set(&mut self, i: usize, j: usize, v: &FieldElement) {
        self.set_raw(i, j, v.raw());
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.raw(i, j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn require_square(&self) -> Result<usize, MatrixError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    fn compatible(&self, other: &Matrix) -> Result<(), MatrixError> {
        if !Field::same(&self.field, &other.field) {
            return Err(MatrixError::FieldMismatch);
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.compatible(other)?;
        if self.cols != other.rows {
            return Err(MatrixError::SizeMismatch);
        }
        let f = &self.field;
        let mut out = vec![0u32; self.rows * other.cols];
        for i in 0..self.rows {
            let orow = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = other.row(k);
                for (o, &b) in orow.iter_mut().zip(brow) {
                    if b != 0 {
                        *o = f.mul_add(a, b, *o);
                    }
                }
            }
        }
        Ok(Matrix { field: f.clone(), rows: self.rows, cols: other.cols, data: out })
    }

    fn zip_with(&self, other: &Matrix, op: impl Fn(u32, u32) -> u32) -> Result<Matrix, MatrixError> {
        self.compatible(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::SizeMismatch);
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| op(a, b)).collect();
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        let f = self.field.clone();
        self.zip_with(other, |a, b| f.add(a, b))
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        let f = self.field.clone();
        self.zip_with(other, |a, b| f.sub(a, b))
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length");
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| if a == 0 || b == 0 { acc } else { f.mul_add(a, b, acc) })
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows, "vector length");
        let f = &self.field;
        let mut out = vec![0u32; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row(i)) {
                *o = f.mul_add(a, b, *o);
            }
        }
        out
    }

    pub fn trace(&self) -> Result<FieldElement, MatrixError> {
        let n = self.require_square()?;
        let f = &self.field;
        let t = (0..n).fold(0, |acc, i| f.add(acc, self.raw(i, i)));
        Ok(FieldElement::new(f, t))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && self.is_scalar() == Some(1)
    }

    /// `Some(c)` when the matrix is `cI`.
    pub fn is_scalar(&self) -> Option<u32> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let c = if n == 0 { 1 } else { self.data[0] };
        for i in 0..n {
            for j in 0..n {
                let want = if i == j { c } else { 0 };
                if self.data[i * n + j] != want {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.row_vectors();
        rref_rows(&self.field, &mut rows, self.cols).len()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.row_vectors();
        let pivots = rref_rows(&self.field, &mut rows, self.cols);
        rows.truncate(pivots.len());
        let mut out = Matrix::from_rows(&self.field, self.cols, &rows);
        out.rows = pivots.len();
        (out, pivots)
    }

    /// Basis of the right kernel `{v : Mv = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let mut rows = self.row_vectors();
        let pivots = rref_rows(&self.field, &mut rows, self.cols);
        kernel_from_rref(&self.field, &rows, &pivots, self.cols)
    }

    pub fn det(&self) -> Result<FieldElement, MatrixError> {
        let n = self.require_square()?;
        let f = &self.field;
        let mut a = self.data.clone();
        let mut det = 1u32;
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| a[r * n + c] != 0) else {
                return Ok(FieldElement::zero(f));
            };
            if p != c {
                for j in 0..n {
                    a.swap(p * n + j, c * n + j);
                }
                det = f.neg(det);
            }
            let piv = a[c * n + c];
            det = f.mul(det, piv);
            let inv = f.inv(piv);
            for r in c + 1..n {
                let factor = f.mul(a[r * n + c], inv);
                if factor == 0 {
                    continue;
                }
                for j in c..n {
                    a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[c * n + j]));
                }
            }
        }
        Ok(FieldElement::new(f, det))
    }

    pub fn inverse(&self) -> Result<Matrix, MatrixError> {
        let n = self.require_square()?;
        let f = &self.field;
        let mut rows: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| u32::from(i == j)));
                r
            })
            .collect();
        let pivots = rref_rows(f, &mut rows, n);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return Err(MatrixError::Singular);
        }
        let data = rows.iter().flat_map(|r| r[n..].iter().copied()).collect();
        Ok(Matrix { field: f.clone(), rows: n, cols: n, data })
    }

    pub fn pow(&self, mut e: u128) -> Result<Matrix, MatrixError> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(&self.field, n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// `g^-1 h^-1 g h`
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        let gi = self.inverse()?;
        let hi = other.inverse()?;
        Ok(&(&(&gi * &hi) * self) * other)
    }

    pub fn block_diag(blocks: &[Matrix]) -> Result<Matrix, MatrixError> {
        let field = blocks.first().ok_or(MatrixError::SizeMismatch)?.field.clone();
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(&field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            if !Field::same(&b.field, &field) {
                return Err(MatrixError::FieldMismatch);
            }
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set_raw(r0 + i, c0 + j, b.raw(i, j));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        Ok(out)
    }

    /// Entry-wise image under a field embedding.
    pub fn embed(&self, emb: &Embedding) -> Result<Matrix, MatrixError> {
        if !Field::same(emb.source(), &self.field) {
            return Err(MatrixError::FieldMismatch);
        }
        let data = self.data.iter().map(|&v| emb.map(v)).collect();
        Ok(Matrix { field: emb.target().clone(), rows: self.rows, cols: self.cols, data })
    }

    /// Flattened entries, the coordinates of this matrix in `Mat_{r x c}`.
    pub fn to_vector(&self) -> Vec<u32> {
        self.data.clone()
    }
}

/// Reduces `rows` in place to reduced row echelon form over the first
/// `ncols` columns (extra columns ride along). Pivots are chosen leftmost
/// column first, then first nonzero row. Zero rows end up at the bottom;
/// returns the pivot columns.
pub fn rref_rows(f: &Fq, rows: &mut [Vec<u32>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]);
        if inv != 1 {
            for v in rows[r].iter_mut().skip(c) {
                *v = f.mul(*v, inv);
            }
        }
        let pivot_row = std::mem::take(&mut rows[r]);
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row.is_empty() {
                continue;
            }
            let factor = row[c];
            if factor == 0 {
                continue;
            }
            let nf = f.neg(factor);
            for (v, &pv) in row.iter_mut().zip(&pivot_row).skip(c) {
                if pv != 0 {
                    *v = f.mul_add(nf, pv, *v);
                }
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Kernel basis read off a reduced system: one vector per free column with
/// a 1 in that column.
pub fn kernel_from_rref(f: &Fq, rows: &[Vec<u32>], pivots: &[usize], ncols: usize) -> Vec<Vec<u32>> {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0u32; ncols];
            v[free] = 1;
            for (row, &p) in rows.iter().zip(pivots) {
                v[p] = f.neg(row[free]);
            }
            v
        })
        .collect()
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
            && Field::same(&self.field, &other.field)
    }
}

impl Eq for Matrix {}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|&v| FieldElement::new(&self.field, v).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} over {:?}\n{}", self.rows, self.cols, self.field, self)
    }
}

macro_rules! matop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Matrix> for &Matrix {
            type Output = Matrix;
            fn $method(self, rhs: &Matrix) -> Matrix {
                self.$checked(rhs).expect("incompatible matrices")
            }
        }
    };
}

matop!(Mul, mul, checked_mul);
matop!(Add, add, checked_add);
matop!(Sub, sub, checked_sub);
