//! Dense polynomials over a prime field GF(p), used only to validate and
//! search for defining moduli. Coefficients are low-to-high.

pub(crate) fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Remainder of `a` modulo the nonzero polynomial `m`.
pub(crate) fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = ((r[top] as u128 * lead_inv as u128) % p as u128) as u64;
        if c != 0 {
            let shift = top - dm;
            for (i, &mc) in m.iter().enumerate() {
                let sub = ((c as u128 * mc as u128) % p as u128) as u64;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    trim(&mut out);
    out
}

fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), m, p)
}

fn pow_poly_mod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Ben-Or irreducibility test: `m` (degree >= 1) is irreducible over GF(p)
/// iff gcd(m, t^(p^i) - t) = 1 for every i <= deg(m)/2.
pub(crate) fn is_irreducible(m: &[u64], p: u64) -> bool {
    let mut m = m.to_vec();
    trim(&mut m);
    if m.len() < 2 {
        return false;
    }
    let deg = m.len() - 1;
    if deg == 1 {
        return true;
    }
    let t = vec![0u64, 1];
    let mut power = rem(&t, &m, p);
    for _ in 0..deg / 2 {
        power = pow_poly_mod(&power, p, &m, p);
        let mut diff = power.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(&mut diff);
        let g = gcd(&m, &diff, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_irreducibles_over_gf2() {
        assert!(is_irreducible(&[1, 1, 1], 2)); // t^2+t+1
        assert!(!is_irreducible(&[1, 0, 1], 2)); // (t+1)^2
        assert!(is_irreducible(&[1, 1, 0, 1], 2)); // t^3+t+1
        assert!(!is_irreducible(&[1, 0, 0, 1], 2)); // t^3+1
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2)); // t^4+t+1
        assert!(!is_irreducible(&[1, 1, 1, 1, 1, 1, 1], 2)); // 7th cyclotomic splits in GF(8)
    }

    #[test]
    fn quadratics_over_gf7_match_root_count() {
        for b in 0..7u64 {
            for c in 0..7u64 {
                let has_root = (0..7u64).any(|x| (x * x + b * x + c) % 7 == 0);
                assert_eq!(is_irreducible(&[c, b, 1], 7), !has_root, "t^2+{b}t+{c}");
            }
        }
    }
}
