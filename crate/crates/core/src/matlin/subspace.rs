use crate::ff::{Field, Fq};

use super::matrix::{kernel_from_rref, rref_rows};
use super::{Matrix, MatrixError};

/// A subspace of `GF(q)^n` held by its reduced row echelon basis, so two
/// subspaces are equal iff their bases are.
#[derive(Clone)]
pub struct Subspace {
    field: Fq,
    ambient: usize,
    basis: Vec<Vec<u32>>,
}

impl Subspace {
    pub fn zero(field: &Fq, ambient: usize) -> Self {
        Subspace { field: field.clone(), ambient, basis: Vec::new() }
    }

    pub fn full(field: &Fq, ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit(ambient, i)).collect();
        Subspace { field: field.clone(), ambient, basis }
    }

    pub fn span(field: &Fq, ambient: usize, vectors: &[Vec<u32>]) -> Result<Self, MatrixError> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(MatrixError::SizeMismatch);
        }
        let mut rows = vectors.to_vec();
        let r = rref_rows(field, &mut rows, ambient).len();
        rows.truncate(r);
        Ok(Subspace { field: field.clone(), ambient, basis: rows })
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rref_rows(&self.field, &mut rows, self.ambient).len() == self.basis.len()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    fn check(&self, other: &Subspace) -> Result<(), MatrixError> {
        if !Field::same(&self.field, &other.field) {
            return Err(MatrixError::FieldMismatch);
        }
        if self.ambient != other.ambient {
            return Err(MatrixError::SizeMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, MatrixError> {
        self.check(other)?;
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Subspace::span(&self.field, self.ambient, &v)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, MatrixError> {
        self.check(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// `{w : w . v = 0 for all v in self}` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        let pivots: Vec<usize> = self
            .basis
            .iter()
            .map(|r| r.iter().position(|&c| c != 0).expect("basis rows are nonzero"))
            .collect();
        let kernel = kernel_from_rref(&self.field, &self.basis, &pivots, self.ambient);
        Subspace::span(&self.field, self.ambient, &kernel).expect("kernel vectors have ambient length")
    }

    /// Whether every matrix maps the subspace into itself.
    pub fn is_invariant(&self, gens: &[Matrix]) -> bool {
        gens.iter().all(|g| self.basis.iter().all(|v| self.contains(&g.mul_vec(v))))
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis == other.basis && Field::same(&self.field, &other.field)
    }
}

impl Eq for Subspace {}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of {}, basis {:?})", self.dim(), self.ambient, self.basis)
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Echelon basis grown one vector at a time. Rows are normalised at their
/// pivot and reduced against earlier rows only, which is enough for
/// membership tests.
pub(crate) struct Echelon {
    field: Fq,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &Fq) -> Self {
        Echelon { field: field.clone(), rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [u32]) {
        let f = &self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c == 0 {
                continue;
            }
            let nc = f.neg(c);
            for (x, &r) in v.iter_mut().zip(row).skip(p) {
                if r != 0 {
                    *x = f.mul_add(nc, r, *x);
                }
            }
        }
    }

    /// Adds `v` if it is independent of the current rows; reports whether it was.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|&c| c != 0) else {
            return false;
        };
        let inv = self.field.inv(w[p]);
        for x in w.iter_mut().skip(p) {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }
}
