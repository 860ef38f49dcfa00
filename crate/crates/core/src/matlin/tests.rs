use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::ff::{Field, Fq};

fn random_matrix(f: &Fq, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let data = (0..rows * cols).map(|_| rng.gen_range(0..f.q())).collect();
    Matrix::new(f, rows, cols, data).unwrap()
}

fn random_invertible(f: &Fq, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let m = random_matrix(f, n, n, rng);
        if m.rank() == n {
            return m;
        }
    }
}

fn x7(f: &Fq, r: i64) -> Matrix {
    Matrix::from_ints(
        f,
        &[
            vec![0, 0, 0, 1, 0, 0, -4],
            vec![0, 0, 0, 0, 1, 0, r],
            vec![0, 0, 0, 0, 0, 1, -3],
            vec![1, 0, 0, 0, 0, 0, -4],
            vec![0, 1, 0, 0, 0, 0, r],
            vec![0, 0, 1, 0, 0, 0, -3],
            vec![0, 0, 0, 0, 0, 0, -1],
        ],
    )
    .unwrap()
}

fn y7(f: &Fq, r: i64) -> Matrix {
    Matrix::from_ints(
        f,
        &[
            vec![1, 0, 0, 0, 1, 0, r + 2],
            vec![0, 1, 0, 0, 2, 0, 2 * r + 8],
            vec![0, 0, 1, 1, 0, 0, -4],
            vec![0, 0, 0, 0, -1, 0, 0],
            vec![0, 0, 0, 1, -1, 0, 0],
            vec![0, 0, 0, 0, 0, 0, -1],
            vec![0, 0, 0, 0, 0, 1, -1],
        ],
    )
    .unwrap()
}

/// Dense commutant: solve `sum_g (gX - Xg) = 0` with all `n^2` entries as unknowns.
fn dense_centralizer_dim(gens: &[Matrix]) -> usize {
    let f = gens[0].field().clone();
    let n = gens[0].rows();
    let mut rows = Vec::new();
    for g in gens {
        for i in 0..n {
            for j in 0..n {
                // (gX - Xg)_{ij} = sum_k g_ik X_kj - X_ik g_kj
                let mut row = vec![0u32; n * n];
                for k in 0..n {
                    row[k * n + j] = f.add(row[k * n + j], g.raw(i, k));
                    row[i * n + k] = f.sub(row[i * n + k], g.raw(k, j));
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(&f, n * n, &rows).nullspace().len()
}

fn poly(f: &Fq, c: &[i64]) -> Polynomial {
    Polynomial::from_ints(f, c)
}

#[test]
fn inverse_nullspace_and_rank_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for q in [2u64, 4, 7, 9, 11, 16] {
        let f = Field::of_order(q).unwrap();
        for _ in 0..20 {
            let n = rng.gen_range(1..7);
            let m = random_matrix(&f, n, n + 1, &mut rng);
            let ker = m.nullspace();
            assert_eq!(m.rank() + ker.len(), n + 1);
            for v in &ker {
                assert!(m.mul_vec(v).iter().all(|&c| c == 0));
            }
            let g = random_invertible(&f, n, &mut rng);
            assert!((&g * &g.inverse().unwrap()).is_identity());
            assert!(!g.det().unwrap().is_zero());
        }
    }
    let f = Field::of_order(5).unwrap();
    let singular = Matrix::from_ints(&f, &[vec![1, 2], vec![2, 4]]).unwrap();
    assert_eq!(singular.inverse().unwrap_err(), MatrixError::Singular);
    assert!(singular.det().unwrap().is_zero());
}

#[test]
fn determinant_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for q in [3u64, 8, 13] {
        let f = Field::of_order(q).unwrap();
        for _ in 0..20 {
            let a = random_matrix(&f, 5, 5, &mut rng);
            let b = random_matrix(&f, 5, 5, &mut rng);
            assert_eq!((&a * &b).det().unwrap(), &a.det().unwrap() * &b.det().unwrap());
        }
    }
}

#[test]
fn charpoly_of_identity() {
    let f = Field::of_order(5).unwrap();
    let t1 = poly(&f, &[-1, 1]);
    let cube = t1.mul(&t1).mul(&t1);
    assert_eq!(charpoly(&Matrix::identity(&f, 3)).unwrap(), cube);
}

#[test]
fn charpoly_matches_pointwise_determinant() {
    // det(cI - M) at every c in the field
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for q in [8u64, 11, 13, 16] {
        let f = Field::of_order(q).unwrap();
        for _ in 0..10 {
            let n = rng.gen_range(1..8);
            let m = random_matrix(&f, n, n, &mut rng);
            let chi = charpoly(&m).unwrap();
            assert_eq!(chi.degree(), Some(n));
            assert_eq!(chi.leading(), 1);
            for c in f.elements() {
                let shifted = &Matrix::scalar(&f, n, c) - &m;
                assert_eq!(shifted.det().unwrap().raw(), chi.eval(c));
            }
            assert_eq!(chi.eval_matrix(&m), Matrix::zeros(&f, n, n));
        }
    }
}

#[test]
fn invariants_divide_and_multiply_to_charpoly() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for q in [2u64, 3, 4, 7] {
        let f = Field::of_order(q).unwrap();
        for _ in 0..30 {
            let n = rng.gen_range(1..8);
            // low-rank perturbations of scalars give repeated invariant factors
            let mut m = Matrix::scalar(&f, n, rng.gen_range(0..f.q()));
            for _ in 0..rng.gen_range(0..3) {
                let u = random_matrix(&f, n, 1, &mut rng);
                let v = random_matrix(&f, 1, n, &mut rng);
                m = &m + &(&u * &v);
            }
            let inv = similarity_invariants(&m).unwrap();
            for w in inv.windows(2) {
                assert!(w[0].divides(&w[1]));
            }
            let prod = inv.iter().fold(Polynomial::one(&f), |a, p| a.mul(p));
            assert_eq!(prod, charpoly(&m).unwrap());
            assert_eq!(minpoly(&m).unwrap().eval_matrix(&m), Matrix::zeros(&f, n, n));
            let p = random_invertible(&f, n, &mut rng);
            let conj = &(&p * &m) * &p.inverse().unwrap();
            assert_eq!(similarity_invariants(&conj).unwrap(), inv);
        }
    }
}

#[test]
fn scalar_matrix_invariants() {
    let f = Field::of_order(7).unwrap();
    let inv = similarity_invariants(&Matrix::scalar(&f, 4, 3)).unwrap();
    assert_eq!(inv, vec![poly(&f, &[-3, 1]); 4]);
}

#[test]
fn odd_involution_invariants() {
    let f = Field::of_order(11).unwrap();
    for r in 0..11 {
        let inv = similarity_invariants(&x7(&f, r)).unwrap();
        let sq = poly(&f, &[-1, 0, 1]);
        assert_eq!(inv, vec![poly(&f, &[1, 1]), sq.clone(), sq.clone(), sq]);
        assert_eq!(element_order(&x7(&f, r), DEFAULT_ORDER_CAP).unwrap(), ElementOrder::Exact(2));
    }
}

#[test]
fn commutator_at_seventeen() {
    let f = Field::of_order(17).unwrap();
    let (x, y) = (x7(&f, 1), y7(&f, 1));
    let c = x.commutator(&y).unwrap();
    assert_eq!(element_order(&c, DEFAULT_ORDER_CAP).unwrap(), ElementOrder::Exact(9));
    let d = 14;
    let want = poly(&f, &[-1, 3, d - 5, d + 7, -(d + 7), -(d - 5), -3, 1]);
    assert_eq!(charpoly(&c).unwrap(), want);
    assert_eq!(c.trace().unwrap().raw(), 3);
}

#[test]
fn element_order_matches_stepping() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for q in [2u64, 3, 4, 5, 8] {
        let f = Field::of_order(q).unwrap();
        for _ in 0..20 {
            let n = rng.gen_range(1..5);
            let m = random_invertible(&f, n, &mut rng);
            let mut a = m.clone();
            let mut k = 1;
            let mut proj = None;
            while !a.is_identity() {
                if proj.is_none() && a.is_scalar().is_some() {
                    proj = Some(k);
                }
                a = &a * &m;
                k += 1;
            }
            let proj = proj.unwrap_or(k);
            assert_eq!(element_order(&m, DEFAULT_ORDER_CAP).unwrap(), ElementOrder::Exact(k));
            assert_eq!(projective_order(&m, DEFAULT_ORDER_CAP).unwrap(), ElementOrder::Exact(proj));
            if k > 1 {
                assert_eq!(element_order(&m, k - 1).unwrap(), ElementOrder::Exceeded);
            }
        }
    }
    let f = Field::of_order(3).unwrap();
    let zero = Matrix::zeros(&f, 2, 2);
    assert_eq!(element_order(&zero, 10).unwrap_err(), MatrixError::Singular);
}

#[test]
fn subspace_lattice_operations() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let f = Field::of_order(9).unwrap();
    for _ in 0..30 {
        let n = 6;
        let a: Vec<Vec<u32>> = (0..rng.gen_range(0..5)).map(|_| random_matrix(&f, 1, n, &mut rng).to_vector()).collect();
        let b: Vec<Vec<u32>> = (0..rng.gen_range(0..5)).map(|_| random_matrix(&f, 1, n, &mut rng).to_vector()).collect();
        let u = Subspace::span(&f, n, &a).unwrap();
        let w = Subspace::span(&f, n, &b).unwrap();
        let s = u.sum(&w).unwrap();
        let i = u.intersection(&w).unwrap();
        assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        assert!(s.contains_subspace(&u) && u.contains_subspace(&i) && w.contains_subspace(&i));
        assert_eq!(u.annihilator().dim(), n - u.dim());
        assert_eq!(u.annihilator().annihilator(), u);
        // canonical form: reordering the spanning set changes nothing
        let mut rev = a.clone();
        rev.reverse();
        assert_eq!(Subspace::span(&f, n, &rev).unwrap(), u);
    }
}

#[test]
fn fixed_spaces() {
    let f = Field::of_order(11).unwrap();
    assert_eq!(common_fixed_space(&[Matrix::identity(&f, 6)]).unwrap().dim(), 6);
    let x = x7(&f, 0);
    let y = y7(&f, 0);
    assert_eq!(common_fixed_space(std::slice::from_ref(&x)).unwrap().dim(), 3);
    assert_eq!(common_fixed_space(&[x.clone(), y.clone()]).unwrap().dim(), 0);
    assert_eq!(common_fixed_space_transposed(&[x, y]).unwrap().dim(), 0);
    let g = Field::of_order(5).unwrap();
    assert_eq!(
        common_fixed_space(&[Matrix::identity(&f, 3), Matrix::identity(&g, 3)]).unwrap_err(),
        MatrixError::FieldMismatch
    );
}

#[test]
fn spin_is_monotone_and_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = Field::of_order(4).unwrap();
    for _ in 0..20 {
        let n = 6;
        // block upper triangular generators preserve the first three coordinates
        let mut gens = Vec::new();
        for _ in 0..2 {
            let mut g = random_invertible(&f, n, &mut rng);
            for i in 3..n {
                for j in 0..3 {
                    g.set_raw(i, j, 0);
                }
            }
            gens.push(g);
        }
        let v = random_matrix(&f, 1, 3, &mut rng).to_vector();
        let mut seed = v.clone();
        seed.extend([0, 0, 0]);
        let s = Subspace::span(&f, n, &[seed]).unwrap();
        let sp = spin(&gens, &s).unwrap();
        assert!(sp.contains_subspace(&s));
        assert!(sp.dim() <= 3);
        assert!(sp.is_invariant(&gens));
        assert_eq!(spin(&gens, &sp).unwrap(), sp);
        let full = Subspace::full(&f, n);
        assert_eq!(spin(&gens, &full).unwrap(), full);
    }
}

#[test]
fn burnside_test() {
    let f = Field::of_order(2).unwrap();
    assert!(!absolutely_irreducible(&[Matrix::identity(&f, 2)]).unwrap());
    let g = Field::of_order(11).unwrap();
    assert!(absolutely_irreducible(&[x7(&g, 0), y7(&g, 0)]).unwrap());
    // a rotation over GF(3) is irreducible but not absolutely irreducible
    let h = Field::of_order(3).unwrap();
    let rot = Matrix::from_ints(&h, &[vec![0, -1], vec![1, 0]]).unwrap();
    assert_eq!(enveloping_algebra_dim(std::slice::from_ref(&rot)).unwrap(), 2);
    assert!(!absolutely_irreducible(&[rot]).unwrap());
}

#[test]
fn centralizer_matches_dense_system() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for q in [2u64, 3, 4, 5] {
        let f = Field::of_order(q).unwrap();
        for _ in 0..15 {
            let n = rng.gen_range(1..6);
            let k = rng.gen_range(1..3);
            // mix of random and low-rank-perturbed scalar matrices
            let gens: Vec<Matrix> = (0..k)
                .map(|_| {
                    if rng.gen_bool(0.5) {
                        random_invertible(&f, n, &mut rng)
                    } else {
                        let u = random_matrix(&f, n, 1, &mut rng);
                        let v = random_matrix(&f, 1, n, &mut rng);
                        &Matrix::identity(&f, n) + &(&u * &v)
                    }
                })
                .collect();
            let basis = centralizer(&gens).unwrap();
            assert_eq!(basis.len(), dense_centralizer_dim(&gens), "{gens:?}");
            for x in &basis {
                for g in &gens {
                    assert_eq!(&(x * g), &(g * x));
                }
            }
        }
    }
}

#[test]
fn centralizer_dims_of_odd_triple() {
    let f = Field::of_order(11).unwrap();
    let (x, y) = (x7(&f, 0), y7(&f, 0));
    let xy = &x * &y;
    let dims: Vec<usize> = [&x, &y, &xy].iter().map(|g| centralizer(&[(*g).clone()]).unwrap().len()).collect();
    assert_eq!(dims, vec![25, 17, 7]);
    assert_eq!(dense_centralizer_dim(std::slice::from_ref(&x)), 25);
    assert_eq!(centralizer(&[x, y]).unwrap().len(), 1);
}

#[test]
fn hom_space_between_conjugate_actions() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let f = Field::of_order(7).unwrap();
    let gens = [random_invertible(&f, 4, &mut rng), random_invertible(&f, 4, &mut rng)];
    let p = random_invertible(&f, 4, &mut rng);
    let pinv = p.inverse().unwrap();
    let conj: Vec<Matrix> = gens.iter().map(|g| &(&p * g) * &pinv).collect();
    let homs = hom_space(&gens, &conj).unwrap();
    assert_eq!(homs.len(), centralizer(&gens).unwrap().len());
    for x in &homs {
        for (a, b) in gens.iter().zip(&conj) {
            assert_eq!(x * a, b * x);
        }
    }
    // rectangular: from dimension 4 into dimension 1 (trivial action)
    let triv = vec![Matrix::identity(&f, 1); 2];
    let to_triv = hom_space(&gens, &triv).unwrap();
    let cofixed = common_fixed_space_transposed(&gens).unwrap();
    assert_eq!(to_triv.len(), cofixed.dim());
}

#[test]
fn matrix_file_round_trip() {
    let f = Field::create(2, 3, None).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let m = random_matrix(&f, 3, 3, &mut rng);
    let text = io::format_matrix(&m);
    let back = io::parse_matrices(&text).unwrap();
    assert_eq!(back, vec![m]);
    let g = Field::of_order(11).unwrap();
    let text = "# two matrices\n11 2\n1 -1\n0 3\n\n11^1 1\n5\n";
    let ms = io::parse_matrices(text).unwrap();
    assert_eq!(ms[0], Matrix::from_ints(&g, &[vec![1, 10], vec![0, 3]]).unwrap());
    assert_eq!(ms[1].raw(0, 0), 5);
    assert!(io::parse_matrices("11 2\n1 2\n").is_err());
    assert!(io::parse_matrices("8 1\n[0, 1]\n").is_ok());
}
