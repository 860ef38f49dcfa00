//! Induced actions on `Mat_n`, `S^2 V`, `Λ^2 V` and `Λ^3 V*`, and the
//! fixed-space counts that enter Scott's inequality.
//!
//! Bases: `Mat_n` uses `E_ij` in row-major order; `S^2` uses `E_ii` and
//! `E_ij + E_ji` (`i < j`); `Λ^2` uses `E_ij - E_ji`; `Λ^3 V*` uses
//! `v_i* ∧ v_j* ∧ v_k*`. Index tuples are strictly increasing (weakly for
//! `S^2`) and ordered lexicographically.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::matlin::{
    absolutely_irreducible, centralizer, common_fixed_space, common_fixed_space_transposed, Matrix, MatrixError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TensorError {
    #[error("exterior cube needs dimension at least 3, got {0}")]
    DimensionTooSmall(usize),
    #[error("unknown functor {0:?} (expected conj, sym2, ext2 or ext3dual)")]
    UnknownFunctor(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FunctorKind {
    #[serde(rename = "conj")]
    ConjMat,
    #[serde(rename = "sym2")]
    SymSquare,
    #[serde(rename = "ext2")]
    ExtSquare,
    #[serde(rename = "ext3dual")]
    ExtCubeDual,
}

impl FunctorKind {
    pub const ALL: [FunctorKind; 4] =
        [FunctorKind::ConjMat, FunctorKind::SymSquare, FunctorKind::ExtSquare, FunctorKind::ExtCubeDual];

    /// Dimension of the module built on an `n`-dimensional space.
    pub fn dim(self, n: usize) -> usize {
        match self {
            FunctorKind::ConjMat => n * n,
            FunctorKind::SymSquare => n * (n + 1) / 2,
            FunctorKind::ExtSquare => n * n.saturating_sub(1) / 2,
            FunctorKind::ExtCubeDual => n * n.saturating_sub(1) * n.saturating_sub(2) / 6,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            FunctorKind::ConjMat => "conj",
            FunctorKind::SymSquare => "sym2",
            FunctorKind::ExtSquare => "ext2",
            FunctorKind::ExtCubeDual => "ext3dual",
        }
    }
}

impl fmt::Display for FunctorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FunctorKind {
    type Err = TensorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FunctorKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| TensorError::UnknownFunctor(s.to_string()))
    }
}

pub fn pairs_upper(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

pub fn pairs_strict(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

pub fn triples_strict(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push([i, j, k]);
            }
        }
    }
    out
}

/// Matrix of `g` acting on the chosen module in the canonical basis.
pub fn induced_action(g: &Matrix, kind: FunctorKind) -> Result<Matrix, TensorError> {
    let n = g.require_square()?;
    let f = g.field().clone();
    match kind {
        FunctorKind::ConjMat => {
            // X -> g X g^-1: [(k,l),(i,j)] = g_ki (g^-1)_jl
            let gi = g.inverse()?;
            let mut out = Matrix::zeros(&f, n * n, n * n);
            for k in 0..n {
                for l in 0..n {
                    for i in 0..n {
                        let a = g.raw(k, i);
                        if a == 0 {
                            continue;
                        }
                        for j in 0..n {
                            out.set_raw(k * n + l, i * n + j, f.mul(a, gi.raw(j, l)));
                        }
                    }
                }
            }
            Ok(out)
        }
        FunctorKind::SymSquare => {
            g.inverse()?;
            let idx = pairs_upper(n);
            let mut out = Matrix::zeros(&f, idx.len(), idx.len());
            for (col, &(i, j)) in idx.iter().enumerate() {
                for (row, &(k, l)) in idx.iter().enumerate() {
                    let v = if i == j {
                        f.mul(g.raw(k, i), g.raw(l, i))
                    } else {
                        f.add(f.mul(g.raw(k, i), g.raw(l, j)), f.mul(g.raw(k, j), g.raw(l, i)))
                    };
                    out.set_raw(row, col, v);
                }
            }
            Ok(out)
        }
        FunctorKind::ExtSquare => {
            g.inverse()?;
            let idx = pairs_strict(n);
            let mut out = Matrix::zeros(&f, idx.len(), idx.len());
            for (col, &(i, j)) in idx.iter().enumerate() {
                for (row, &(k, l)) in idx.iter().enumerate() {
                    let v = f.sub(f.mul(g.raw(k, i), g.raw(l, j)), f.mul(g.raw(k, j), g.raw(l, i)));
                    out.set_raw(row, col, v);
                }
            }
            Ok(out)
        }
        FunctorKind::ExtCubeDual => {
            if n < 3 {
                return Err(TensorError::DimensionTooSmall(n));
            }
            let h = g.inverse()?.transpose();
            let idx = triples_strict(n);
            let mut out = Matrix::zeros(&f, idx.len(), idx.len());
            for (col, c) in idx.iter().enumerate() {
                for (row, r) in idx.iter().enumerate() {
                    out.set_raw(row, col, minor3(&h, r, c));
                }
            }
            Ok(out)
        }
    }
}

fn minor3(h: &Matrix, rows: &[usize; 3], cols: &[usize; 3]) -> u32 {
    let f = h.field();
    let e = |a: usize, b: usize| h.raw(rows[a], cols[b]);
    let t1 = f.mul(e(0, 0), f.sub(f.mul(e(1, 1), e(2, 2)), f.mul(e(1, 2), e(2, 1))));
    let t2 = f.mul(e(0, 1), f.sub(f.mul(e(1, 0), e(2, 2)), f.mul(e(1, 2), e(2, 0))));
    let t3 = f.mul(e(0, 2), f.sub(f.mul(e(1, 0), e(2, 1)), f.mul(e(1, 1), e(2, 0))));
    f.add(f.sub(t1, t2), t3)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScottReport {
    pub functor: FunctorKind,
    /// `(d^x, d^y, d^xy)`
    pub dims: [usize; 3],
    pub module_dim: usize,
    pub d_h: usize,
    pub d_h_hat: usize,
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
    pub irreducible: bool,
    pub rigid: bool,
}

impl ScottReport {
    pub fn slack(&self) -> i64 {
        self.rhs as i64 - self.lhs as i64
    }
}

/// Fixed-space dimension of one element on the module.
pub fn fixed_dim(g: &Matrix, kind: FunctorKind) -> Result<usize, TensorError> {
    Ok(match kind {
        FunctorKind::ConjMat => centralizer(std::slice::from_ref(g))?.len(),
        _ => common_fixed_space(&[induced_action(g, kind)?])?.dim(),
    })
}

/// All six dimensions of Scott's inequality for `H = <x, y>`. The hatted
/// count is the fixed space of the transposed induced matrices, i.e. of
/// `H` on the dual module.
pub fn fixed_dims(x: &Matrix, y: &Matrix, kind: FunctorKind) -> Result<ScottReport, TensorError> {
    let n = x.require_square()?;
    let xy = x.checked_mul(y)?;
    let irreducible = absolutely_irreducible(&[x.clone(), y.clone()])?;
    let (dims, d_h, d_h_hat) = match kind {
        FunctorKind::ConjMat => {
            // X -> g X g^-1 fixes the centralizer; the transposed action is
            // X -> g^T X g^-T
            let d = [fixed_dim(x, kind)?, fixed_dim(y, kind)?, fixed_dim(&xy, kind)?];
            let h = centralizer(&[x.clone(), y.clone()])?.len();
            let hh = centralizer(&[x.transpose(), y.transpose()])?.len();
            (d, h, hh)
        }
        _ => {
            let (ax, ay, axy) = (induced_action(x, kind)?, induced_action(y, kind)?, induced_action(&xy, kind)?);
            let d = [
                common_fixed_space(std::slice::from_ref(&ax))?.dim(),
                common_fixed_space(std::slice::from_ref(&ay))?.dim(),
                common_fixed_space(std::slice::from_ref(&axy))?.dim(),
            ];
            let gens = [ax, ay];
            (d, common_fixed_space(&gens)?.dim(), common_fixed_space_transposed(&gens)?.dim())
        }
    };
    let module_dim = kind.dim(n);
    let lhs = dims.iter().sum();
    let rhs = module_dim + d_h + d_h_hat;
    Ok(ScottReport {
        functor: kind,
        dims,
        module_dim,
        d_h,
        d_h_hat,
        lhs,
        rhs,
        holds: lhs <= rhs,
        irreducible,
        rigid: kind == FunctorKind::ConjMat && irreducible && lhs == rhs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rigidity {
    pub irreducible: bool,
    pub rigid: bool,
    pub slack: i64,
    pub report: ScottReport,
}

pub fn rigidity_class(x: &Matrix, y: &Matrix) -> Result<Rigidity, TensorError> {
    let report = fixed_dims(x, y, FunctorKind::ConjMat)?;
    Ok(Rigidity { irreducible: report.irreducible, rigid: report.rigid, slack: report.slack(), report })
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::ff::{Field, Fq};
    use crate::matlin::hom_space;

    fn random_invertible(f: &Fq, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
        loop {
            let data = (0..n * n).map(|_| rng.gen_range(0..f.q())).collect();
            let m = Matrix::new(f, n, n, data).unwrap();
            if m.rank() == n {
                return m;
            }
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(FunctorKind::ConjMat.dim(7), 49);
        assert_eq!(FunctorKind::SymSquare.dim(7), 28);
        assert_eq!(FunctorKind::ExtSquare.dim(6), 15);
        assert_eq!(FunctorKind::ExtCubeDual.dim(7), 35);
        let f = Field::of_order(5).unwrap();
        for kind in FunctorKind::ALL {
            let a = induced_action(&Matrix::identity(&f, 5), kind).unwrap();
            assert!(a.is_identity());
            assert_eq!(a.rows(), kind.dim(5));
            assert_eq!(kind.tag().parse::<FunctorKind>().unwrap(), kind);
        }
        assert_eq!(
            induced_action(&Matrix::identity(&f, 2), FunctorKind::ExtCubeDual).unwrap_err(),
            TensorError::DimensionTooSmall(2)
        );
    }

    #[test]
    fn functoriality() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for q in [2u64, 4, 7] {
            let f = Field::of_order(q).unwrap();
            for _ in 0..6 {
                let n = rng.gen_range(3..6);
                let g = random_invertible(&f, n, &mut rng);
                let h = random_invertible(&f, n, &mut rng);
                for kind in FunctorKind::ALL {
                    let lhs = induced_action(&(&g * &h), kind).unwrap();
                    let rhs = &induced_action(&g, kind).unwrap() * &induced_action(&h, kind).unwrap();
                    assert_eq!(lhs, rhs, "{kind} q={q}");
                }
            }
        }
    }

    #[test]
    fn transpose_identity_except_symmetric_square() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let f = Field::of_order(7).unwrap();
        let g = random_invertible(&f, 4, &mut rng);
        for kind in [FunctorKind::ConjMat, FunctorKind::ExtSquare, FunctorKind::ExtCubeDual] {
            assert_eq!(induced_action(&g.transpose(), kind).unwrap(), induced_action(&g, kind).unwrap().transpose());
        }
        // the E_ij + E_ji basis is not self-dual: off-diagonal coordinates pick up a factor 2
        assert_ne!(
            induced_action(&g.transpose(), FunctorKind::SymSquare).unwrap(),
            induced_action(&g, FunctorKind::SymSquare).unwrap().transpose()
        );
    }

    #[test]
    fn diagonal_acts_by_index_sum() {
        // GF(8) holds a primitive 7th root
        let f = Field::of_order(8).unwrap();
        let eps = f.gen_t();
        let mut z = Matrix::zeros(&f, 7, 7);
        for i in 0..7 {
            z.set_raw(i, i, f.pow(eps, (7 - i as u128) % 7));
        }
        let a = induced_action(&z, FunctorKind::ExtCubeDual).unwrap();
        for (row, t) in triples_strict(7).iter().enumerate() {
            for col in 0..35 {
                let want = if row == col { f.pow(eps, (t[0] + t[1] + t[2]) as u128) } else { 0 };
                assert_eq!(a.raw(row, col), want);
            }
        }
    }

    #[test]
    fn tensor_square_splits_in_odd_characteristic() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let f = Field::of_order(11).unwrap();
        for _ in 0..10 {
            // elements of small order have large fixed spaces
            let p = random_invertible(&f, 6, &mut rng);
            let d = Matrix::block_diag(&[
                Matrix::from_ints(&f, &[vec![0, -1], vec![1, 0]]).unwrap(),
                Matrix::identity(&f, 2),
                Matrix::scalar(&f, 2, f.from_int(-1)),
            ])
            .unwrap();
            let g = &(&p * &d) * &p.inverse().unwrap();
            // B -> g B g^T on all of Mat_6: X g^-T = g X
            let full = hom_space(&[g.inverse().unwrap().transpose()], std::slice::from_ref(&g)).unwrap().len();
            let s = fixed_dim(&g, FunctorKind::SymSquare).unwrap();
            let e = fixed_dim(&g, FunctorKind::ExtSquare).unwrap();
            assert_eq!(full, s + e);
        }
    }

    #[test]
    fn scott_for_trivial_group() {
        let f = Field::of_order(3).unwrap();
        let i = Matrix::identity(&f, 3);
        let rep = rigidity_class(&i, &i).unwrap();
        assert!(!rep.irreducible && !rep.rigid);
        assert_eq!(rep.report.lhs, 27);
        assert_eq!(rep.report.rhs, 27);
    }
}
