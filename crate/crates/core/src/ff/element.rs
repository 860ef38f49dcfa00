use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use super::{Field, FieldError, Fq};
use crate::numtheory;

/// An element of a particular finite field.
///
/// Operator impls panic on a field mismatch; the `checked_*` methods return
/// [`FieldError::FieldMismatch`] instead.
#[derive(Clone)]
pub struct FieldElement {
    field: Fq,
    value: u32,
}

impl FieldElement {
    /// Wraps a raw encoding. Panics if `value >= q`.
    pub fn new(field: &Fq, value: u32) -> Self {
        assert!(value < field.q(), "encoding {value} out of range for {field:?}");
        FieldElement { field: field.clone(), value }
    }

    pub fn zero(field: &Fq) -> Self {
        Self::new(field, 0)
    }

    pub fn one(field: &Fq) -> Self {
        Self::new(field, 1)
    }

    pub fn from_int(field: &Fq, n: i64) -> Self {
        Self::new(field, field.from_int(n))
    }

    pub fn from_coeffs(field: &Fq, coeffs: &[u32]) -> Result<Self, FieldError> {
        Ok(Self::new(field, field.from_digits(coeffs)?))
    }

    /// The residue class of `t`.
    pub fn generator_t(field: &Fq) -> Self {
        Self::new(field, field.gen_t())
    }

    /// Parses `17`, `-3` (prime-subfield integers) or `[c0,c1,...]`.
    pub fn parse(field: &Fq, s: &str) -> Result<Self, FieldError> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let coeffs = inner
                .split(',')
                .filter(|c| !c.trim().is_empty())
                .map(|c| {
                    c.trim()
                        .parse::<i64>()
                        .map(|v| field.from_int(v))
                        .map_err(|_| FieldError::Syntax(s.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Self::from_coeffs(field, &coeffs)
        } else {
            let n = i64::from_str(s).map_err(|_| FieldError::Syntax(s.to_string()))?;
            Ok(Self::from_int(field, n))
        }
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn raw(&self) -> u32 {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.digits(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if Field::same(&self.field, &other.field) {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    fn with(&self, value: u32) -> Self {
        FieldElement { field: self.field.clone(), value }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroElement);
        }
        Ok(self.with(self.field.inv(self.value)))
    }

    pub fn pow(&self, e: u128) -> Self {
        self.with(self.field.pow(self.value, e))
    }

    /// Least `k >= 1` with `x^k = 1`.
    pub fn mult_order(&self) -> Result<u64, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroElement);
        }
        let m = self.field.q() as u64 - 1;
        let mut order = m;
        for (l, _) in numtheory::factor(m) {
            while order.is_multiple_of(l) && self.field.pow(self.value, (order / l) as u128) == 1 {
                order /= l;
            }
        }
        Ok(order)
    }

    /// Degree over GF(p) of the subfield generated by this element, i.e. the
    /// least `k` with `x^(p^k) = x`.
    pub fn subfield_degree(&self) -> u32 {
        let f = &self.field;
        let p = f.p() as u128;
        let mut y = self.value;
        for k in 1..=f.degree() {
            y = f.pow(y, p);
            if y == self.value {
                return k;
            }
        }
        unreachable!("x^(p^a) = x holds in GF(p^a)")
    }

    /// The unique square root in characteristic 2 (inverse Frobenius).
    pub fn sqrt_char2(&self) -> Result<Self, FieldError> {
        if self.field.p() != 2 {
            return Err(FieldError::WrongCharacteristic);
        }
        let e = 1u128 << (self.field.degree() - 1);
        Ok(self.pow(e))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && Field::same(&self.field, &other.field)
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    /// Prime-field elements print as integers, extension elements as
    /// coefficient lists `[c0,...,c_{a-1}]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_prime_field() {
            write!(f, "{}", self.value)
        } else {
            let c: Vec<String> = self.coeffs().iter().map(|d| d.to_string()).collect();
            write!(f, "[{}]", c.join(","))
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field mismatch")
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$checked(&rhs).expect("field mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Div<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with(self.field.neg(self.value))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}
