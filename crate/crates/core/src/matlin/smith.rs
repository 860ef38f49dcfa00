use super::{Matrix, MatrixError, Polynomial};

/// Diagonal of the Smith normal form of `tI - M`, every entry monic, each
/// dividing the next.
pub fn smith_diagonal(m: &Matrix) -> Result<Vec<Polynomial>, MatrixError> {
    let n = m.require_square()?;
    let f = m.field();
    let mut a: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = f.neg(m.raw(i, j));
                    if i == j {
                        Polynomial::new(f, vec![c, 1])
                    } else {
                        Polynomial::constant(f, c)
                    }
                })
                .collect()
        })
        .collect();

    for k in 0..n {
        loop {
            // smallest-degree nonzero entry goes to (k, k)
            let mut best: Option<(usize, usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(k) {
                for (j, e) in row.iter().enumerate().skip(k) {
                    if let Some(d) = e.degree() {
                        if best.is_none_or(|(bd, _, _)| d < bd) {
                            best = Some((d, i, j));
                        }
                    }
                }
            }
            let Some((_, bi, bj)) = best else {
                // remaining block is zero; impossible for tI - M but harmless
                break;
            };
            a.swap(k, bi);
            for row in a.iter_mut() {
                row.swap(k, bj);
            }

            let mut dirty = false;
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let (q, r) = a[i][k].divrem(&a[k][k]);
                for j in k..n {
                    let t = a[k][j].mul(&q);
                    a[i][j] = a[i][j].sub(&t);
                }
                dirty |= !r.is_zero();
            }
            for j in k + 1..n {
                if a[k][j].is_zero() {
                    continue;
                }
                let (q, r) = a[k][j].divrem(&a[k][k]);
                for i in k..n {
                    let t = a[i][k].mul(&q);
                    a[i][j] = a[i][j].sub(&t);
                }
                dirty |= !r.is_zero();
            }
            if dirty {
                continue;
            }
            // pivot must divide the rest of the block
            let bad = (k + 1..n).find(|&i| (k + 1..n).any(|j| !a[k][k].divides(&a[i][j])));
            match bad {
                Some(i) => {
                    for j in k..n {
                        let t = a[i][j].clone();
                        a[k][j] = a[k][j].add(&t);
                    }
                }
                None => break,
            }
        }
    }
    Ok((0..n).map(|k| a[k][k].monic()).collect())
}

/// Nontrivial invariant factors `d1 | d2 | ... | dk` of `tI - M`.
pub fn similarity_invariants(m: &Matrix) -> Result<Vec<Polynomial>, MatrixError> {
    let diag = smith_diagonal(m)?;
    let inv: Vec<Polynomial> = diag.into_iter().filter(|p| p.degree() != Some(0)).collect();
    if cfg!(debug_assertions) || cfg!(test) {
        for w in inv.windows(2) {
            debug_assert!(w[0].divides(&w[1]), "invariant factors out of order");
        }
    }
    Ok(inv)
}

/// Monic characteristic polynomial `det(tI - M)`.
pub fn charpoly(m: &Matrix) -> Result<Polynomial, MatrixError> {
    let diag = smith_diagonal(m)?;
    Ok(diag.iter().fold(Polynomial::one(m.field()), |acc, d| acc.mul(d)))
}

/// Minimal polynomial, the largest invariant factor.
pub fn minpoly(m: &Matrix) -> Result<Polynomial, MatrixError> {
    let mut inv = similarity_invariants(m)?;
    Ok(inv.pop().unwrap_or_else(|| Polynomial::one(m.field())))
}
