//! Small integer helpers: trial-division factoring, primality, gcd.
//!
//! Every modulus we factor is below 2^64 and in practice below 2^44, so trial
//! division is plenty.

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// increasing prime order.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for p in [2u64, 3, 5] {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }
    // wheel over 6k +- 1
    let mut d = 7u64;
    let mut step = [4u64, 2].iter().cycle();
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += step.next().unwrap();
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    factor(n).len() == 1 && factor(n)[0].1 == 1
}

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `base^exp`, or `None` on u64 overflow.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// If `q` is a prime power `p^a`, returns `(p, a)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = factor(q);
    match f.as_slice() {
        [(p, a)] => Some((*p, *a)),
        _ => None,
    }
}

/// Merge factorizations taking the maximum exponent of each prime (lcm).
pub fn lcm_factored(parts: &[Vec<(u64, u32)>]) -> Vec<(u64, u32)> {
    let mut map = std::collections::BTreeMap::new();
    for part in parts {
        for &(p, e) in part {
            let slot = map.entry(p).or_insert(0u32);
            *slot = (*slot).max(e);
        }
    }
    map.into_iter().collect()
}
