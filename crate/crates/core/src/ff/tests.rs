use super::*;

fn small_fields() -> Vec<Fq> {
    // every p^a <= 512 with p in the tested characteristics
    let mut out = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13, 17] {
        let mut a = 1;
        while p.pow(a) <= 512 {
            out.push(Field::create(p, a, None).unwrap());
            a += 1;
        }
    }
    out
}

#[test]
fn create_prime_field_gf2() {
    let f = Field::create(2, 1, None).unwrap();
    assert_eq!(f.q(), 2);
    assert_eq!(f.spec().modulus(), &[0, 1]); // t
}

#[test]
fn create_gf4_with_explicit_modulus() {
    let f = Field::create(2, 2, Some(&[1, 1, 1])).unwrap();
    let w = FieldElement::generator_t(&f);
    let one = FieldElement::one(&f);
    // w^2 + w + 1 = 0
    assert!((&(&w * &w) + &(&w + &one)).is_zero());
}

#[test]
fn create_rejects_bad_input() {
    assert_eq!(Field::create(2, 2, Some(&[1, 0, 1])).unwrap_err(), FieldError::ReducibleModulus);
    assert_eq!(Field::create(4, 1, None).unwrap_err(), FieldError::NonPrime(4));
    assert!(matches!(
        Field::create(2, 3, Some(&[1, 1, 1])).unwrap_err(),
        FieldError::DegreeMismatch { .. }
    ));
    assert_eq!(Field::create(3, 2, Some(&[1, 0, 2])).unwrap_err(), FieldError::NotMonic);
}

#[test]
fn default_moduli_are_deterministic_and_lexicographic() {
    let a = Field::create(2, 3, None).unwrap();
    let b = Field::create(2, 3, None).unwrap();
    assert_eq!(a.spec(), b.spec());
    assert_eq!(a.spec().modulus(), &[1, 1, 0, 1]); // t^3 + t + 1
    assert_eq!(Field::of_order(4).unwrap().spec().modulus(), &[1, 1, 1]);
    assert_eq!(Field::of_order(16).unwrap().spec().modulus(), &[1, 1, 0, 0, 1]);
    for f in small_fields() {
        let g = Field::create(f.p() as u64, f.degree(), None).unwrap();
        assert_eq!(f.spec(), g.spec());
    }
}

#[test]
fn descriptor_syntax() {
    let d: FieldDescriptor = "2^3".parse().unwrap();
    assert_eq!((d.p, d.degree, d.modulus.clone()), (2, 3, None));
    let d: FieldDescriptor = "2^2/1,1,1".parse().unwrap();
    assert_eq!(d.modulus, Some(vec![1, 1, 1]));
    let d: FieldDescriptor = "25".parse().unwrap();
    assert_eq!((d.p, d.degree), (5, 2));
    assert!("12".parse::<FieldDescriptor>().is_err());
    let f = Field::of_order(8).unwrap();
    let roundtrip: FieldDescriptor = f.spec().to_string().parse().unwrap();
    assert_eq!(roundtrip.create().unwrap().spec(), f.spec());
}

#[test]
fn table_arithmetic_matches_polynomial_arithmetic() {
    // small tables, log tables and plain prime arithmetic against the schoolbook path
    for f in small_fields().into_iter().chain([Field::of_order(729).unwrap(), Field::of_order(1024).unwrap()]) {
        let step = (f.q() / 40).max(1);
        for a in (0..f.q()).step_by(step as usize) {
            for b in 0..f.q() {
                assert_eq!(f.add(a, b), f.slow_add(a, b), "{f:?} {a}+{b}");
                assert_eq!(f.mul(a, b), f.slow_mul(a, b), "{f:?} {a}*{b}");
            }
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }
}

#[test]
fn fermat_holds_exhaustively() {
    for f in small_fields() {
        for x in 1..f.q() {
            assert_eq!(f.pow(x, f.q() as u128 - 1), 1, "{f:?} x={x}");
        }
    }
}

#[test]
fn mult_order_examples() {
    let f8 = Field::of_order(8).unwrap();
    assert_eq!(FieldElement::one(&f8).mult_order().unwrap(), 1);
    assert_eq!(FieldElement::generator_t(&f8).mult_order().unwrap(), 7);
    let f4 = Field::of_order(4).unwrap();
    assert_eq!(FieldElement::generator_t(&f4).mult_order().unwrap(), 3);
    assert_eq!(FieldElement::zero(&f4).mult_order().unwrap_err(), FieldError::ZeroElement);
}

#[test]
fn mult_order_matches_power_stepping() {
    for f in small_fields() {
        for x in 1..f.q() {
            let e = FieldElement::new(&f, x);
            let mut k = 1u64;
            let mut y = x;
            while y != 1 {
                y = f.mul(y, x);
                k += 1;
            }
            assert_eq!(e.mult_order().unwrap(), k);
            assert_eq!((f.q() as u64 - 1) % k, 0);
        }
    }
}

/// Degree of the minimal polynomial via the first linear dependence among
/// 1, x, x^2, ... viewed as vectors over GF(p).
fn subfield_degree_oracle(x: &FieldElement) -> u32 {
    let f = x.field();
    let p = f.p() as i64;
    let a = f.degree() as usize;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut power = FieldElement::one(f);
    loop {
        let mut v: Vec<i64> = power.coeffs().iter().map(|&c| c as i64).collect();
        // reduce v against rows (kept in echelon form by leading index)
        for r in &rows {
            let lead = r.iter().position(|&c| c != 0).unwrap();
            if v[lead] != 0 {
                let factor = v[lead];
                for i in 0..a {
                    v[i] = (v[i] - factor * r[i]).rem_euclid(p);
                }
            }
        }
        match v.iter().position(|&c| c != 0) {
            None => return rows.len() as u32,
            Some(lead) => {
                let inv = crate::ff::primepoly::pow_mod(v[lead] as u64, p as u64 - 2, p as u64) as i64;
                for c in v.iter_mut() {
                    *c = (*c * inv).rem_euclid(p);
                }
                for r in rows.iter_mut() {
                    if r[lead] != 0 {
                        let factor = r[lead];
                        for i in 0..a {
                            r[i] = (r[i] - factor * v[i]).rem_euclid(p);
                        }
                    }
                }
                rows.push(v);
            }
        }
        power = &power * x;
    }
}

#[test]
fn subfield_degree_examples() {
    let f16 = Field::of_order(16).unwrap();
    assert_eq!(FieldElement::zero(&f16).subfield_degree(), 1);
    // omega = element of order 3 inside GF(16)
    let g = FieldElement::new(&f16, f16.primitive_element());
    let omega = g.pow(5);
    assert_eq!(omega.mult_order().unwrap(), 3);
    assert_eq!(omega.subfield_degree(), 2);
    let f8 = Field::of_order(8).unwrap();
    let r = FieldElement::generator_t(&f8);
    let s = &(&r * &r) + &r;
    assert_eq!(s.subfield_degree(), 3);
    assert_eq!(subfield_degree_oracle(&s), 3);
}

#[test]
fn subfield_degree_divides_extension_degree() {
    for f in small_fields() {
        for x in f.elements() {
            let e = FieldElement::new(&f, x);
            let d = e.subfield_degree();
            assert_eq!(f.degree() % d, 0);
            assert_eq!(d, subfield_degree_oracle(&e), "{f:?} {e}");
        }
    }
}

#[test]
fn sqrt_char2_examples() {
    let f4 = Field::of_order(4).unwrap();
    for v in [0u32, 1] {
        assert_eq!(FieldElement::new(&f4, v).sqrt_char2().unwrap().raw(), v);
    }
    let w = FieldElement::generator_t(&f4);
    assert_eq!(w.sqrt_char2().unwrap(), w.pow(2));
    let f8 = Field::of_order(8).unwrap();
    for x in f8.elements() {
        let e = FieldElement::new(&f8, x);
        let s = e.sqrt_char2().unwrap();
        assert_eq!(&s * &s, e);
    }
    let f9 = Field::of_order(9).unwrap();
    assert_eq!(FieldElement::one(&f9).sqrt_char2().unwrap_err(), FieldError::WrongCharacteristic);
}

#[test]
fn sqrt_char2_is_additive_and_multiplicative() {
    for q in [2u64, 4, 8, 16, 32, 64, 128, 256] {
        let f = Field::of_order(q).unwrap();
        for a in f.elements() {
            for b in f.elements().step_by(3) {
                let (x, y) = (FieldElement::new(&f, a), FieldElement::new(&f, b));
                let sx = x.sqrt_char2().unwrap();
                let sy = y.sqrt_char2().unwrap();
                assert_eq!((&x * &y).sqrt_char2().unwrap(), &sx * &sy);
                assert_eq!((&x + &y).sqrt_char2().unwrap(), &sx + &sy);
            }
        }
    }
}

#[test]
fn cross_field_arithmetic_is_an_error() {
    let a = FieldElement::one(&Field::of_order(8).unwrap());
    let b = FieldElement::one(&Field::of_order(4).unwrap());
    assert_eq!(a.checked_add(&b).unwrap_err(), FieldError::FieldMismatch);
    assert_eq!(a.checked_mul(&b).unwrap_err(), FieldError::FieldMismatch);
}

#[test]
fn element_parsing_and_display() {
    let f8 = Field::of_order(8).unwrap();
    let e = FieldElement::parse(&f8, "[0,1,1]").unwrap();
    assert_eq!(e.coeffs(), vec![0, 1, 1]);
    assert_eq!(e.to_string(), "[0,1,1]");
    let f11 = Field::of_order(11).unwrap();
    assert_eq!(FieldElement::parse(&f11, "-4").unwrap().raw(), 7);
    assert_eq!(FieldElement::from_int(&f11, -4).to_string(), "7");
}

#[test]
fn embeddings_are_ring_homomorphisms() {
    let f4 = Field::of_order(4).unwrap();
    let (f16, emb) = f4.extension(2).unwrap();
    assert_eq!(f16.q(), 16);
    for a in f4.elements() {
        for b in f4.elements() {
            assert_eq!(emb.map(f4.add(a, b)), f16.add(emb.map(a), emb.map(b)));
            assert_eq!(emb.map(f4.mul(a, b)), f16.mul(emb.map(a), emb.map(b)));
        }
    }
    let f11 = Field::of_order(11).unwrap();
    let (big, emb, eps) = f11.root_of_unity_extension(7).unwrap();
    assert_eq!(big.q(), 1331);
    assert_eq!(FieldElement::new(&big, eps).mult_order().unwrap(), 7);
    assert_eq!(emb.map(5), big.from_int(5));
    let f8 = Field::of_order(8).unwrap();
    let (same, _, eps) = f8.root_of_unity_extension(7).unwrap();
    assert!(Field::same(&same, &f8));
    assert_eq!(FieldElement::new(&f8, eps).mult_order().unwrap(), 7);
    assert!(Field::of_order(7).unwrap().root_of_unity_extension(7).is_err());
}

#[test]
fn large_fields_use_polynomial_arithmetic() {
    // 17^6 is beyond the table limits
    let f = Field::create(17, 6, None).unwrap();
    let x = FieldElement::generator_t(&f);
    let y = x.inv().unwrap();
    assert!((&x * &y).is_one());
    assert_eq!(x.pow(f.q() as u128 - 1), FieldElement::one(&f));
}
