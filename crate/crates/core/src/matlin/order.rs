use serde::Serialize;

use crate::numtheory;

use super::{Matrix, MatrixError};

/// Default stepping cap when the generic exponent is unavailable.
pub const DEFAULT_ORDER_CAP: u64 = 1_000_000;

/// Largest `q^n` for which the generic-exponent method is used.
const GENERIC_EXPONENT_LIMIT: f64 = 17_592_186_044_416.0; // 2^44

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementOrder {
    Exact(u64),
    Exceeded,
}

impl ElementOrder {
    pub fn value(self) -> Option<u64> {
        match self {
            ElementOrder::Exact(k) => Some(k),
            ElementOrder::Exceeded => None,
        }
    }
}

/// Least `k <= cap` with `M^k = I`.
pub fn element_order(m: &Matrix, cap: u64) -> Result<ElementOrder, MatrixError> {
    order_by(m, cap, |a| a.is_identity())
}

/// Least `k <= cap` with `M^k` scalar.
pub fn projective_order(m: &Matrix, cap: u64) -> Result<ElementOrder, MatrixError> {
    order_by(m, cap, |a| a.is_scalar().is_some())
}

fn order_by(m: &Matrix, cap: u64, done: impl Fn(&Matrix) -> bool) -> Result<ElementOrder, MatrixError> {
    let n = m.require_square()?;
    if n == 0 {
        return Ok(ElementOrder::Exact(1));
    }
    m.inverse()?;
    let f = m.field();
    let q = f.q() as u64;
    if (q as f64).powi(n as i32) <= GENERIC_EXPONENT_LIMIT {
        let exponent = generic_exponent(q, f.p() as u64, n);
        let order = reduce_exponent(m, exponent, &done)?;
        return Ok(if order <= cap { ElementOrder::Exact(order) } else { ElementOrder::Exceeded });
    }
    let mut a = m.clone();
    for k in 1..=cap {
        if done(&a) {
            return Ok(ElementOrder::Exact(k));
        }
        a = &a * m;
    }
    Ok(ElementOrder::Exceeded)
}

/// Factored `lcm(q^k - 1 : k <= n) * p^ceil(log_p n)`, a multiple of the
/// order of every element of `GL_n(q)`.
fn generic_exponent(q: u64, p: u64, n: usize) -> Vec<(u64, u32)> {
    let mut parts: Vec<Vec<(u64, u32)>> = (1..=n as u32).map(|k| numtheory::factor(q.pow(k) - 1)).collect();
    let mut e = 0u32;
    while p.pow(e) < n as u64 {
        e += 1;
    }
    if e > 0 {
        parts.push(vec![(p, e)]);
    }
    numtheory::lcm_factored(&parts)
}

fn power_by_factors(m: &Matrix, factors: &[(u64, u32)]) -> Result<Matrix, MatrixError> {
    let mut a = m.clone();
    for &(l, e) in factors {
        if e > 0 {
            a = a.pow((l as u128).pow(e))?;
        }
    }
    Ok(a)
}

fn reduce_exponent(m: &Matrix, exponent: Vec<(u64, u32)>, done: &impl Fn(&Matrix) -> bool) -> Result<u64, MatrixError> {
    let mut factors = exponent;
    debug_assert!(done(&power_by_factors(m, &factors)?), "generic exponent must kill every element");
    for i in 0..factors.len() {
        while factors[i].1 > 0 {
            factors[i].1 -= 1;
            if !done(&power_by_factors(m, &factors)?) {
                factors[i].1 += 1;
                break;
            }
        }
    }
    Ok(factors.iter().map(|&(l, e)| l.pow(e)).product())
}
