use std::fmt;

use crate::ff::{Field, FieldElement, Fq};

use super::Matrix;

/// Univariate polynomial over a finite field, coefficients low-to-high.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
#[derive(Clone)]
pub struct Polynomial {
    field: Fq,
    coeffs: Vec<u32>,
}

impl Polynomial {
    pub fn new(field: &Fq, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { field: field.clone(), coeffs }
    }

    pub fn from_ints(field: &Fq, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn from_elements(field: &Fq, coeffs: &[FieldElement]) -> Self {
        Self::new(field, coeffs.iter().map(|c| c.raw()).collect())
    }

    pub fn zero(field: &Fq) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &Fq) -> Self {
        Self::new(field, vec![1])
    }

    pub fn constant(field: &Fq, c: u32) -> Self {
        Self::new(field, vec![c])
    }

    /// `t - c`
    pub fn linear(field: &Fq, c: u32) -> Self {
        Self::new(field, vec![field.neg(c), 1])
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeff_element(&self, i: usize) -> FieldElement {
        FieldElement::new(&self.field, self.coeff(i))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading());
        self.scale(inv)
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(f, (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(f, (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.mul_add(a, b, out[i + j]);
            }
        }
        Self::new(f, out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let f = &self.field;
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = f.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(f), self.clone());
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c == 0 {
                continue;
            }
            quot[top - dd] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + i;
                rem[idx] = f.sub(rem[idx], f.mul(c, d));
            }
        }
        (Self::new(f, quot), Self::new(f, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divrem(divisor).1
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.mul_add(acc, x, c))
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(&self.field, n, n);
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::scalar(&self.field, n, c);
        }
        acc
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && Field::same(&self.field, &other.field)
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = FieldElement::new(&self.field, c).to_string();
            let term = match (i, c) {
                (0, _) => coeff,
                (1, 1) => "t".to_string(),
                (1, _) => format!("{coeff}t"),
                (_, 1) => format!("t^{i}"),
                _ => format!("{coeff}t^{i}"),
            };
            terms.push(term);
        }
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
