//! Invariant bilinear, quadratic and alternating trilinear forms, the
//! Dickson form, and the lift `Sp_6 -> Ω_7` in characteristic 2.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::ff::{Field, FieldElement, FieldError, Fq};
use crate::matlin::{common_fixed_space, Matrix, MatrixError, Subspace};
use crate::tensor::{induced_action, pairs_upper, triples_strict, FunctorKind, TensorError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error("operation needs characteristic 2")]
    WrongCharacteristic,
    #[error("matrix is not an involution")]
    NotInvolution,
    #[error("matrix does not preserve the polarization")]
    NotSymplectic,
    #[error("form is not invariant under generator {0}")]
    NotInvariant(usize),
    #[error("expected dimension {expected}, got {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("alternating forms of degree {degree} need dimension at least {degree}, got {dim}")]
    DimensionTooSmall { degree: usize, dim: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl From<TensorError> for FormError {
    fn from(e: TensorError) -> Self {
        match e {
            TensorError::DimensionTooSmall(dim) => FormError::DimensionTooSmall { degree: 3, dim },
            TensorError::Matrix(m) => FormError::Matrix(m),
            TensorError::UnknownFunctor(s) => FormError::Matrix(MatrixError::Parse(s)),
        }
    }
}

/// Alternating form of degree 2 or 3, stored on strictly increasing index
/// tuples; absent tuples have coefficient 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingForm {
    field: Fq,
    degree: usize,
    dim: usize,
    coeffs: BTreeMap<Vec<usize>, u32>,
}

fn permutation_sign(idx: &mut [usize]) -> Option<bool> {
    // sorts in place; Some(odd) or None on a repeated index
    let mut odd = false;
    for i in 0..idx.len() {
        for j in 0..idx.len() - 1 - i {
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                odd = !odd;
            } else if idx[j] == idx[j + 1] {
                return None;
            }
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(odd)
}

impl AlternatingForm {
    pub fn zero(field: &Fq, degree: usize, dim: usize) -> Self {
        AlternatingForm { field: field.clone(), degree, dim, coeffs: BTreeMap::new() }
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c` times `v_i* ∧ v_j* ∧ ...` for the indices in the given order.
    pub fn add_term(&mut self, indices: &[usize], c: u32) {
        assert_eq!(indices.len(), self.degree, "term degree");
        assert!(indices.iter().all(|&i| i < self.dim), "index out of range");
        let mut idx = indices.to_vec();
        let Some(odd) = permutation_sign(&mut idx) else {
            return;
        };
        let f = &self.field;
        let c = if odd { f.neg(c) } else { c };
        let e = self.coeffs.entry(idx.clone()).or_insert(0);
        *e = f.add(*e, c);
        if *e == 0 {
            self.coeffs.remove(&idx);
        }
    }

    /// Coefficient on the sorted tuple.
    pub fn coeff(&self, sorted: &[usize]) -> u32 {
        self.coeffs.get(sorted).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = (&Vec<usize>, &u32)> {
        self.coeffs.iter()
    }

    /// `f(u_1, ..., u_m)` expanded by multilinearity.
    pub fn eval(&self, args: &[&[u32]]) -> FieldElement {
        assert_eq!(args.len(), self.degree, "argument count");
        let f = &self.field;
        let mut acc = 0u32;
        for (idx, &c) in &self.coeffs {
            // determinant of the m x m minor [args[a][idx[b]]]
            let det = match self.degree {
                2 => f.sub(f.mul(args[0][idx[0]], args[1][idx[1]]), f.mul(args[0][idx[1]], args[1][idx[0]])),
                3 => {
                    let m = |a: usize, b: usize| args[a][idx[b]];
                    let t1 = f.mul(m(0, 0), f.sub(f.mul(m(1, 1), m(2, 2)), f.mul(m(1, 2), m(2, 1))));
                    let t2 = f.mul(m(0, 1), f.sub(f.mul(m(1, 0), m(2, 2)), f.mul(m(1, 2), m(2, 0))));
                    let t3 = f.mul(m(0, 2), f.sub(f.mul(m(1, 0), m(2, 1)), f.mul(m(1, 1), m(2, 0))));
                    f.add(f.sub(t1, t2), t3)
                }
                _ => unreachable!("degree is 2 or 3"),
            };
            acc = f.mul_add(c, det, acc);
        }
        FieldElement::new(f, acc)
    }

    /// Coordinates in the lexicographic basis of strictly increasing tuples.
    pub fn to_vector(&self) -> Vec<u32> {
        let idx: Vec<Vec<usize>> = match self.degree {
            2 => crate::tensor::pairs_strict(self.dim).into_iter().map(|(i, j)| vec![i, j]).collect(),
            _ => triples_strict(self.dim).into_iter().map(|t| t.to_vec()).collect(),
        };
        idx.iter().map(|t| self.coeff(t)).collect()
    }

    pub fn trilinear_from_vector(field: &Fq, dim: usize, v: &[u32]) -> Self {
        let mut f = Self::zero(field, 3, dim);
        for (t, &c) in triples_strict(dim).iter().zip(v) {
            if c != 0 {
                f.coeffs.insert(t.to_vec(), c);
            }
        }
        f
    }

    /// The form `(u, v, ...) -> f(g u, g v, ...)`.
    pub fn pullback(&self, g: &Matrix) -> Self {
        let n = self.dim;
        let cols: Vec<Vec<u32>> = (0..n).map(|i| g.column(i)).collect();
        let mut out = Self::zero(&self.field, self.degree, n);
        let tuples: Vec<Vec<usize>> = match self.degree {
            2 => crate::tensor::pairs_strict(n).into_iter().map(|(i, j)| vec![i, j]).collect(),
            _ => triples_strict(n).into_iter().map(|t| t.to_vec()).collect(),
        };
        for t in tuples {
            let args: Vec<&[u32]> = t.iter().map(|&i| cols[i].as_slice()).collect();
            let v = self.eval(&args).raw();
            if v != 0 {
                out.coeffs.insert(t, v);
            }
        }
        out
    }

    pub fn is_invariant(&self, g: &Matrix) -> bool {
        self.pullback(g) == *self
    }

    /// Same form with every coefficient multiplied by `c`.
    pub fn scale(&self, c: u32) -> Self {
        let f = &self.field;
        let coeffs = self.coeffs.iter().map(|(k, &v)| (k.clone(), f.mul(v, c))).filter(|(_, v)| *v != 0).collect();
        AlternatingForm { field: f.clone(), degree: self.degree, dim: self.dim, coeffs }
    }

    pub fn to_json(&self) -> FormJson {
        FormJson {
            degree: self.degree,
            dim: self.dim,
            entries: self
                .coeffs
                .iter()
                .map(|(k, &v)| FormEntry { indices: k.clone(), value: FieldElement::new(&self.field, v).to_string() })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FormEntry {
    pub indices: Vec<usize>,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FormJson {
    pub degree: usize,
    pub dim: usize,
    pub entries: Vec<FormEntry>,
}

/// `Q(v) = sum_{i <= j} q_ij v_i v_j`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    field: Fq,
    dim: usize,
    /// coefficients on `pairs_upper(dim)`
    coeffs: Vec<u32>,
}

impl QuadraticForm {
    pub fn new(field: &Fq, dim: usize, coeffs: Vec<u32>) -> Self {
        assert_eq!(coeffs.len(), dim * (dim + 1) / 2, "coefficient count");
        QuadraticForm { field: field.clone(), dim, coeffs }
    }

    /// `q_ij = J_ij` for `i < j` and `q_ii = 0`: a quadratic form whose
    /// polarization in characteristic 2 is the alternating matrix `J`.
    pub fn from_alternating_gram(j: &Matrix) -> Self {
        let n = j.rows();
        let coeffs = pairs_upper(n).iter().map(|&(a, b)| if a == b { 0 } else { j.raw(a, b) }).collect();
        QuadraticForm::new(j.field(), n, coeffs)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn eval(&self, v: &[u32]) -> FieldElement {
        let f = &self.field;
        let mut acc = 0;
        for (&(i, j), &c) in pairs_upper(self.dim).iter().zip(&self.coeffs) {
            if c != 0 {
                acc = f.mul_add(c, f.mul(v[i], v[j]), acc);
            }
        }
        FieldElement::new(f, acc)
    }

    /// Gram matrix of `B(u, v) = Q(u+v) - Q(u) - Q(v)`.
    pub fn polarization(&self) -> Matrix {
        let f = &self.field;
        let mut b = Matrix::zeros(f, self.dim, self.dim);
        for (&(i, j), &c) in pairs_upper(self.dim).iter().zip(&self.coeffs) {
            if i == j {
                b.set_raw(i, i, f.add(c, c));
            } else {
                b.set_raw(i, j, c);
                b.set_raw(j, i, c);
            }
        }
        b
    }
}

/// Basis of the Gram matrices `J` with `g^T J g = J` for every generator.
pub fn invariant_bilinear(gens: &[Matrix]) -> Result<Vec<Matrix>, FormError> {
    let first = gens.first().ok_or(MatrixError::Empty)?;
    let n = first.require_square()?;
    let f = first.field().clone();
    // (g^T J g)_{kl} - J_{kl} = sum_{ij} g_ik g_jl J_ij - J_kl
    let mut rows = Vec::new();
    for g in gens {
        if g.require_square()? != n {
            return Err(MatrixError::SizeMismatch.into());
        }
        for k in 0..n {
            for l in 0..n {
                let mut row = vec![0u32; n * n];
                for i in 0..n {
                    let a = g.raw(i, k);
                    if a == 0 {
                        continue;
                    }
                    for j in 0..n {
                        row[i * n + j] = f.mul(a, g.raw(j, l));
                    }
                }
                row[k * n + l] = f.sub(row[k * n + l], 1);
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(&f, n * n, &rows);
    Ok(system
        .nullspace()
        .into_iter()
        .map(|v| Matrix::new(&f, n, n, v).expect("n x n"))
        .collect())
}

pub fn is_symmetric(j: &Matrix) -> bool {
    *j == j.transpose()
}

/// `J^T = -J` with zero diagonal.
pub fn is_alternating(j: &Matrix) -> bool {
    let f = j.field();
    let n = j.rows();
    (0..n).all(|i| j.raw(i, i) == 0 && (0..n).all(|k| j.raw(k, i) == f.neg(j.raw(i, k))))
}

pub fn is_nondegenerate(j: &Matrix) -> bool {
    j.is_square() && j.rank() == j.rows()
}

/// Basis of the quadratic forms with `Q(gv) = Q(v)` for every generator.
/// The conditions are imposed on the basis vectors and all pairwise sums,
/// which determine a quadratic form.
pub fn invariant_quadratic_char2(gens: &[Matrix]) -> Result<Vec<QuadraticForm>, FormError> {
    let first = gens.first().ok_or(MatrixError::Empty)?;
    let n = first.require_square()?;
    let f = first.field().clone();
    if f.p() != 2 {
        return Err(FormError::WrongCharacteristic);
    }
    let idx = pairs_upper(n);
    let mut probes: Vec<Vec<u32>> = (0..n).map(|i| crate::matlin::unit(n, i)).collect();
    for &(i, j) in &idx {
        if i < j {
            let mut v = vec![0; n];
            v[i] = 1;
            v[j] = 1;
            probes.push(v);
        }
    }
    let mut rows = Vec::new();
    for g in gens {
        for v in &probes {
            let w = g.mul_vec(v);
            rows.push(
                idx.iter()
                    .map(|&(k, l)| f.sub(f.mul(w[k], w[l]), f.mul(v[k], v[l])))
                    .collect::<Vec<u32>>(),
            );
        }
    }
    let system = Matrix::from_rows(&f, idx.len(), &rows);
    Ok(system.nullspace().into_iter().map(|c| QuadraticForm::new(&f, n, c)).collect())
}

/// Basis of the alternating trilinear forms fixed by every generator: the
/// common fixed space of the action on `Λ^3 V*`.
pub fn invariant_trilinear(gens: &[Matrix]) -> Result<Vec<AlternatingForm>, FormError> {
    let first = gens.first().ok_or(MatrixError::Empty)?;
    let n = first.require_square()?;
    if n < 3 {
        return Err(FormError::DimensionTooSmall { degree: 3, dim: n });
    }
    let actions = gens
        .iter()
        .map(|g| induced_action(g, FunctorKind::ExtCubeDual))
        .collect::<Result<Vec<_>, _>>()?;
    let fixed = common_fixed_space(&actions)?;
    Ok(fixed
        .basis()
        .iter()
        .map(|v| AlternatingForm::trilinear_from_vector(first.field(), n, v))
        .collect())
}

/// Labels `0, ±1, ±2, ±3` of the seven basis positions.
pub type BasisLabels = [i8; 7];

/// `v_0, v_1, v_2, v_3, v_-1, v_-2, v_-3`
pub const STANDARD_LABELS: BasisLabels = [0, 1, 2, 3, -1, -2, -3];

/// `v_0, v_1, v_2, v_-3, v_-1, v_-2, v_3`, the order of an eigenbasis of the
/// element of order 7 acting by `ε^{-i}` on `v_i`.
pub const EIGEN_LABELS: BasisLabels = [0, 1, 2, -3, -1, -2, 3];

/// The five summands of the Dickson form as label triples.
pub const DICKSON_TERMS: [[i8; 3]; 5] = [[0, 1, -1], [0, 2, -2], [0, 3, -3], [1, 2, -3], [-1, -2, 3]];

/// The Dickson form written in the basis whose positions carry `labels`.
pub fn dickson_form(field: &Fq, labels: &BasisLabels) -> Result<AlternatingForm, FormError> {
    let pos = |l: i8| labels.iter().position(|&x| x == l);
    let mut sorted = labels.to_vec();
    sorted.sort();
    if sorted != [-3, -2, -1, 0, 1, 2, 3] {
        return Err(FormError::WrongDimension { expected: 7, found: labels.len() });
    }
    let mut f = AlternatingForm::zero(field, 3, 7);
    for t in DICKSON_TERMS {
        let idx: Vec<usize> = t.iter().map(|&l| pos(l).expect("label present")).collect();
        f.add_term(&idx, 1);
    }
    Ok(f)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DicksonCriteria {
    pub indecomposable: bool,
    pub radical_ok: bool,
    pub passes: bool,
    /// dimension of the radical of `B_{v0}(u, w) = f(v0, u, w)`
    pub radical_dim: usize,
}

/// Gram matrix of `B_{v0}(u, w) = f(v0, u, w)`.
pub fn contraction_gram(f: &AlternatingForm, v0: &[u32]) -> Matrix {
    let n = f.dim();
    let mut g = Matrix::zeros(f.field(), n, n);
    for u in 0..n {
        for w in 0..n {
            let (eu, ew) = (crate::matlin::unit(n, u), crate::matlin::unit(n, w));
            g.set_raw(u, w, f.eval(&[v0, &eu, &ew]).raw());
        }
    }
    g
}

/// Whether `<v0>` has an invariant complement: `<v0>` must be invariant,
/// with `h v0 = μ_h v0`, and some functional `φ` with `h^T φ = μ_h φ` for
/// all generators must have `φ(v0) != 0`; then `ker φ` is the complement.
pub fn has_invariant_complement(gens: &[Matrix], v0: &[u32]) -> Result<bool, FormError> {
    let first = gens.first().ok_or(MatrixError::Empty)?;
    let f = first.field().clone();
    let n = first.require_square()?;
    let line = Subspace::span(&f, n, &[v0.to_vec()])?;
    if line.is_zero() || !line.is_invariant(gens) {
        return Ok(false);
    }
    let k = v0.iter().position(|&c| c != 0).expect("nonzero");
    let mut rows = Vec::new();
    for g in gens {
        let mu = f.div(g.mul_vec(v0)[k], v0[k]);
        let gt = g.transpose();
        for i in 0..n {
            let mut r = gt.row(i).to_vec();
            r[i] = f.sub(r[i], mu);
            rows.push(r);
        }
    }
    let sols = Matrix::from_rows(&f, n, &rows).nullspace();
    Ok(sols.iter().any(|phi| phi.iter().zip(v0).fold(0, |acc, (&a, &b)| f.mul_add(a, b, acc)) != 0))
}

pub fn dickson_criteria(f: &AlternatingForm, gens: &[Matrix], v0: &[u32]) -> Result<DicksonCriteria, FormError> {
    if f.dim() != 7 || f.degree() != 3 {
        return Err(FormError::WrongDimension { expected: 7, found: f.dim() });
    }
    if v0.len() != 7 {
        return Err(MatrixError::SizeMismatch.into());
    }
    for (i, g) in gens.iter().enumerate() {
        if !f.is_invariant(g) {
            return Err(FormError::NotInvariant(i));
        }
    }
    let indecomposable = !has_invariant_complement(gens, v0)?;
    let gram = contraction_gram(f, v0);
    let radical = Subspace::span(f.field(), 7, &gram.nullspace())?;
    let line = Subspace::span(f.field(), 7, &[v0.to_vec()])?;
    let radical_ok = !line.is_zero() && radical == line;
    Ok(DicksonCriteria { indecomposable, radical_ok, passes: indecomposable && radical_ok, radical_dim: radical.dim() })
}

/// `(-1)^d` with `d` the fixed-space dimension of an involution in
/// characteristic 2.
pub fn quasideterminant(x: &Matrix) -> Result<i8, FormError> {
    let n = x.require_square()?;
    if x.field().p() != 2 {
        return Err(FormError::WrongCharacteristic);
    }
    if !(x * x).is_identity() {
        return Err(FormError::NotInvolution);
    }
    let d = n - (x - &Matrix::identity(x.field(), n)).rank();
    Ok(if d.is_multiple_of(2) { 1 } else { -1 })
}

/// The unique lift `[[1, a^T], [0, g6]]` preserving `Q_7(η, v) = η^2 + Q_6(v)`,
/// with `a_i = sqrt(Q_6(g6 e_i) + Q_6(e_i))`.
pub fn sp6_to_omega7_lift(g6: &Matrix, q6: &QuadraticForm) -> Result<Matrix, FormError> {
    let n = g6.require_square()?;
    let f = g6.field().clone();
    if f.p() != 2 {
        return Err(FormError::WrongCharacteristic);
    }
    if q6.dim() != n {
        return Err(FormError::WrongDimension { expected: n, found: q6.dim() });
    }
    let b = q6.polarization();
    if &(&g6.transpose() * &b) * g6 != b {
        return Err(FormError::NotSymplectic);
    }
    let mut out = Matrix::zeros(&f, n + 1, n + 1);
    out.set_raw(0, 0, 1);
    for i in 0..n {
        let e = crate::matlin::unit(n, i);
        let diff = &q6.eval(&g6.mul_vec(&e)) + &q6.eval(&e);
        out.set_raw(0, i + 1, diff.sqrt_char2()?.raw());
        for j in 0..n {
            out.set_raw(i + 1, j + 1, g6.raw(i, j));
        }
    }
    Ok(out)
}

/// `Q_7(η, v) = η^2 + Q_6(v)` on `F^7` with the first coordinate `η`.
pub fn omega7_form(q6: &QuadraticForm) -> QuadraticForm {
    let n = q6.dim() + 1;
    let f = q6.field.clone();
    let old = pairs_upper(q6.dim());
    let coeffs = pairs_upper(n)
        .iter()
        .map(|&(i, j)| match (i, j) {
            (0, 0) => 1,
            (0, _) => 0,
            _ => old.iter().position(|&p| p == (i - 1, j - 1)).map_or(0, |k| q6.coeffs[k]),
        })
        .collect();
    QuadraticForm::new(&f, n, coeffs)
}

/// The unique invariant bilinear form when the solution space is a line.
pub fn unique_invariant_bilinear(gens: &[Matrix]) -> Result<Option<Matrix>, FormError> {
    let mut basis = invariant_bilinear(gens)?;
    Ok(if basis.len() == 1 { basis.pop() } else { None })
}

pub fn same_field(a: &Fq, b: &Fq) -> bool {
    Field::same(a, b)
}
