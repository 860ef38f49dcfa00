use crate::ff::{Field, Fq};

use super::matrix::rref_rows;
use super::subspace::{unit, Echelon};
use super::{Matrix, MatrixError, Subspace};

fn check_square_family(gens: &[Matrix]) -> Result<(Fq, usize), MatrixError> {
    let first = gens.first().ok_or(MatrixError::Empty)?;
    let n = first.require_square()?;
    for g in gens {
        if g.require_square()? != n {
            return Err(MatrixError::SizeMismatch);
        }
        if !Field::same(g.field(), first.field()) {
            return Err(MatrixError::FieldMismatch);
        }
    }
    Ok((first.field().clone(), n))
}

/// `{v : Mv = v for every M}`.
pub fn common_fixed_space(ms: &[Matrix]) -> Result<Subspace, MatrixError> {
    let (f, n) = check_square_family(ms)?;
    let mut rows = Vec::with_capacity(ms.len() * n);
    for m in ms {
        for i in 0..n {
            let mut r = m.row(i).to_vec();
            r[i] = f.sub(r[i], 1);
            rows.push(r);
        }
    }
    let system = Matrix::from_rows(&f, n, &rows);
    Subspace::span(&f, n, &system.nullspace())
}

/// Fixed space of the transposed matrices.
pub fn common_fixed_space_transposed(ms: &[Matrix]) -> Result<Subspace, MatrixError> {
    let t: Vec<Matrix> = ms.iter().map(Matrix::transpose).collect();
    common_fixed_space(&t)
}

/// Smallest subspace containing `seed` and stable under every generator.
pub fn spin(gens: &[Matrix], seed: &Subspace) -> Result<Subspace, MatrixError> {
    let (f, n) = check_square_family(gens)?;
    if seed.ambient_dim() != n {
        return Err(MatrixError::SizeMismatch);
    }
    if !Field::same(&f, seed.field()) {
        return Err(MatrixError::FieldMismatch);
    }
    let mut ech = Echelon::new(&f);
    let mut found: Vec<Vec<u32>> = Vec::new();
    for v in seed.basis() {
        if ech.insert(v) {
            found.push(v.clone());
        }
    }
    let mut i = 0;
    while i < found.len() && found.len() < n {
        for g in gens {
            let w = g.mul_vec(&found[i]);
            if ech.insert(&w) {
                found.push(w);
            }
        }
        i += 1;
    }
    Subspace::span(&f, n, &found)
}

/// Dimension of the algebra spanned by all words in the generators.
pub fn enveloping_algebra_dim(gens: &[Matrix]) -> Result<usize, MatrixError> {
    let (f, n) = check_square_family(gens)?;
    let mut ech = Echelon::new(&f);
    let id = Matrix::identity(&f, n);
    ech.insert(id.data());
    let mut found = vec![id];
    let mut i = 0;
    while i < found.len() && found.len() < n * n {
        for g in gens {
            let w = g * &found[i];
            if ech.insert(w.data()) {
                found.push(w);
            }
        }
        i += 1;
    }
    Ok(ech.len())
}

/// Burnside test: the generators span all of `Mat_n` as an algebra.
pub fn absolutely_irreducible(gens: &[Matrix]) -> Result<bool, MatrixError> {
    let n = check_square_family(gens)?.1;
    Ok(enveloping_algebra_dim(gens)? == n * n)
}

/// Basis of `{X : X a_i = b_i X for all i}`, the module homomorphisms from
/// the action `a` (on the source) to the action `b` (on the target).
///
/// Instead of the dense `(m n)`-unknown system this spins a basis of the
/// source from cyclic vectors `e_s`: every basis vector is `W e_s` for a
/// word `W`, so `X` is fixed by the images `u_s = X e_s` and the relations
/// between the spun vectors give a small linear system in the `u_s`.
pub fn hom_space(src: &[Matrix], dst: &[Matrix]) -> Result<Vec<Matrix>, MatrixError> {
    let (f, n) = check_square_family(src)?;
    let (g, m) = check_square_family(dst)?;
    if src.len() != dst.len() {
        return Err(MatrixError::SizeMismatch);
    }
    if !Field::same(&f, &g) {
        return Err(MatrixError::FieldMismatch);
    }

    // spun basis b_l = W_l e_{seed_l}, with the matching target word W'_l
    let mut ech = Echelon::new(&f);
    let mut basis: Vec<Vec<u32>> = Vec::new();
    let mut seed_of: Vec<usize> = Vec::new();
    let mut target_word: Vec<Matrix> = Vec::new();
    let mut seeds = 0usize;
    for k in 0..n {
        if basis.len() == n {
            break;
        }
        let e = unit(n, k);
        if !ech.insert(&e) {
            continue;
        }
        let s = seeds;
        seeds += 1;
        let start = basis.len();
        basis.push(e);
        seed_of.push(s);
        target_word.push(Matrix::identity(&f, m));
        let mut i = start;
        while i < basis.len() {
            for (a, b) in src.iter().zip(dst) {
                let w = a.mul_vec(&basis[i]);
                if ech.insert(&w) {
                    basis.push(w);
                    seed_of.push(s);
                    target_word.push(b * &target_word[i]);
                }
            }
            i += 1;
        }
    }

    let bmat = Matrix::from_columns(&f, n, &basis);
    let binv = bmat.inverse()?;
    let unknowns = seeds * m;

    // X (a b_j) = b (X b_j), with a b_j = sum_l c_l b_l
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for j in 0..n {
        for (a, b) in src.iter().zip(dst) {
            let c = binv.mul_vec(&a.mul_vec(&basis[j]));
            let lhs = b * &target_word[j];
            let mut block = vec![vec![0u32; unknowns]; m];
            for (r, row) in block.iter_mut().enumerate() {
                let off = seed_of[j] * m;
                for t in 0..m {
                    row[off + t] = lhs.raw(r, t);
                }
            }
            for (l, &cl) in c.iter().enumerate() {
                if cl == 0 {
                    continue;
                }
                let ncl = f.neg(cl);
                let off = seed_of[l] * m;
                let wl = &target_word[l];
                for (r, row) in block.iter_mut().enumerate() {
                    for t in 0..m {
                        row[off + t] = f.mul_add(ncl, wl.raw(r, t), row[off + t]);
                    }
                }
            }
            rows.extend(block.into_iter().filter(|r| r.iter().any(|&v| v != 0)));
        }
        let r = rref_rows(&f, &mut rows, unknowns).len();
        rows.truncate(r);
    }
    let system = Matrix::from_rows(&f, unknowns, &rows);
    let solutions = if rows.is_empty() {
        (0..unknowns).map(|i| unit(unknowns, i)).collect()
    } else {
        system.nullspace()
    };

    // X B = [W'_l u_{seed_l}]
    Ok(solutions
        .iter()
        .map(|u| {
            let cols: Vec<Vec<u32>> = (0..n)
                .map(|l| {
                    let off = seed_of[l] * m;
                    target_word[l].mul_vec(&u[off..off + m])
                })
                .collect();
            &Matrix::from_columns(&f, m, &cols) * &binv
        })
        .collect())
}

/// Basis of the centralizer `{X : Xg = gX}` of the generators in `Mat_n`.
pub fn centralizer(gens: &[Matrix]) -> Result<Vec<Matrix>, MatrixError> {
    hom_space(gens, gens)
}
