//! The explicit generator families and the admissibility conditions on the
//! parameter `r`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::ff::{Field, FieldElement, FieldError, Fq};
use crate::matlin::{charpoly, Matrix, MatrixError, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeedError {
    #[error("family {family} needs {needed}")]
    BadCharacteristic { family: Family, needed: &'static str },
    #[error("r lies in GF(4)")]
    RInSubfield,
    #[error("q = {q} is below the family's range (need {min})")]
    QTooSmall { q: u64, min: u64 },
    #[error("operation is not defined for family {0}")]
    WrongFamily(Family),
    #[error("no admissible r in GF({0})")]
    NotFound(u64),
    #[error("r belongs to a different field")]
    ForeignParameter,
    #[error("cannot parse r from {0:?} (expected auto, primitive, an integer or [c0,...])")]
    BadParameter(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    G2Even,
    G2Odd,
    J1,
    J2,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::G2Even, Family::G2Odd, Family::J1, Family::J2];

    pub fn tag(self) -> &'static str {
        match self {
            Family::G2Even => "g2even",
            Family::G2Odd => "g2odd",
            Family::J1 => "j1",
            Family::J2 => "j2",
        }
    }

    pub fn has_parameter(self) -> bool {
        matches!(self, Family::G2Even | Family::G2Odd)
    }

    pub fn dimension(self) -> usize {
        match self {
            Family::G2Even | Family::J2 => 6,
            Family::G2Odd | Family::J1 => 7,
        }
    }

    /// The field a parametrised family lives over, after range checks.
    pub fn field(self, q: u64) -> Result<Fq, SeedError> {
        let f = Field::of_order(q)?;
        match self {
            Family::G2Even => {
                if f.p() != 2 {
                    return Err(SeedError::BadCharacteristic { family: self, needed: "characteristic 2" });
                }
                if q < 8 {
                    return Err(SeedError::QTooSmall { q, min: 8 });
                }
            }
            Family::G2Odd => {
                if f.p() == 2 {
                    return Err(SeedError::BadCharacteristic { family: self, needed: "odd characteristic" });
                }
                if q < 5 {
                    return Err(SeedError::QTooSmall { q, min: 5 });
                }
            }
            Family::J1 => {
                if q != 11 {
                    return Err(SeedError::WrongFamily(self));
                }
            }
            Family::J2 => {
                if q != 4 {
                    return Err(SeedError::WrongFamily(self));
                }
            }
        }
        Ok(f)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|fam| fam.tag() == s.to_ascii_lowercase())
            .ok_or_else(|| format!("unknown family {s:?} (expected g2even, g2odd, j1 or j2)"))
    }
}

/// Generators `x`, `y` and their product.
#[derive(Clone, Debug)]
pub struct Triple {
    pub family: Family,
    pub q: u64,
    pub r: Option<FieldElement>,
    pub x: Matrix,
    pub y: Matrix,
    pub xy: Matrix,
}

impl Triple {
    fn new(family: Family, r: Option<FieldElement>, x: Matrix, y: Matrix) -> Self {
        let xy = &x * &y;
        Triple { family, q: x.field().q() as u64, r, x, y, xy }
    }

    pub fn field(&self) -> &Fq {
        self.x.field()
    }

    pub fn gens(&self) -> [Matrix; 2] {
        [self.x.clone(), self.y.clone()]
    }

    pub fn transposed_gens(&self) -> [Matrix; 2] {
        [self.x.transpose(), self.y.transpose()]
    }
}

/// The 6x6 pair built from `a = (r+1)/d`, `b = (r^3+r^2+1)/d`,
/// `c = (r^3+r+1)/d`, `d = r^2+r+1`.
///
/// With `c = (r^3+1)/d` the product `xy` never has order 7 (see
/// [`g2_even_with_c`]); `r^3+r+1` is the unique numerator that works for
/// every `r` over GF(8), GF(16) and GF(32).
pub fn g2_even(r: &FieldElement) -> Result<Triple, SeedError> {
    let f = r.field().clone();
    Family::G2Even.field(f.q() as u64)?;
    if r.pow(4) == *r {
        return Err(SeedError::RInSubfield);
    }
    let one = FieldElement::one(&f);
    let r3 = r.pow(3);
    let d = &(&(r * r) + r) + &one;
    let c = &(&(&r3 + r) + &one) / &d;
    g2_even_with_c(r, &c)
}

/// The even-family pair with an arbitrary top-right entry `c` of `y`.
pub fn g2_even_with_c(r: &FieldElement, c: &FieldElement) -> Result<Triple, SeedError> {
    let f = r.field().clone();
    Family::G2Even.field(f.q() as u64)?;
    if r.pow(4) == *r {
        return Err(SeedError::RInSubfield);
    }
    if !Field::same(&f, c.field()) {
        return Err(SeedError::ForeignParameter);
    }
    let c = c.clone();
    let one = FieldElement::one(&f);
    let r2 = r * r;
    let r3 = &r2 * r;
    let d = &(&r2 + r) + &one;
    let a = &(r + &one) / &d;
    let b = &(&(&r3 + &r2) + &one) / &d;
    let (o, z) = (one.clone(), FieldElement::zero(&f));
    let x = Matrix::from_elements(
        &f,
        &[
            vec![z.clone(), z.clone(), o.clone(), z.clone(), r.clone(), o.clone()],
            vec![z.clone(), z.clone(), z.clone(), o.clone(), z.clone(), a.clone()],
            vec![o.clone(), z.clone(), z.clone(), z.clone(), o.clone(), r.clone()],
            vec![z.clone(), o.clone(), z.clone(), z.clone(), a, z.clone()],
            vec![z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), o.clone()],
            vec![z.clone(), z.clone(), z.clone(), z.clone(), o.clone(), z.clone()],
        ],
    )?;
    let y = Matrix::from_elements(
        &f,
        &[
            vec![o.clone(), z.clone(), z.clone(), z.clone(), o.clone(), c],
            vec![z.clone(), o.clone(), z.clone(), z.clone(), b, o.clone()],
            vec![z.clone(), z.clone(), z.clone(), z.clone(), o.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), o.clone()],
            vec![z.clone(), z.clone(), o.clone(), z.clone(), o.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), o.clone(), z.clone(), o],
        ],
    )?;
    Ok(Triple::new(Family::G2Even, Some(r.clone()), x, y))
}

/// The 7x7 pair for odd `q`; integer literals are reduced mod `p`.
pub fn g2_odd(r: &FieldElement) -> Result<Triple, SeedError> {
    let f = r.field().clone();
    Family::G2Odd.field(f.q() as u64)?;
    let n = |v: i64| FieldElement::from_int(&f, v);
    let (z, o) = (n(0), n(1));
    let two_r = r + r;
    let x = Matrix::from_elements(
        &f,
        &[
            vec![z.clone(), z.clone(), z.clone(), o.clone(), z.clone(), z.clone(), n(-4)],
            vec![z.clone(), z.clone(), z.clone(), z.clone(), o.clone(), z.clone(), r.clone()],
            vec![z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), o.clone(), n(-3)],
            vec![o.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), n(-4)],
            vec![z.clone(), o.clone(), z.clone(), z.clone(), z.clone(), z.clone(), r.clone()],
            vec![z.clone(), z.clone(), o.clone(), z.clone(), z.clone(), z.clone(), n(-3)],
            vec![z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), n(-1)],
        ],
    )?;
    let y = Matrix::from_elements(
        &f,
        &[
            vec![o.clone(), z.clone(), z.clone(), z.clone(), o.clone(), z.clone(), r + &n(2)],
            vec![z.clone(), o.clone(), z.clone(), z.clone(), n(2), z.clone(), &two_r + &n(8)],
            vec![z.clone(), z.clone(), o.clone(), o.clone(), z.clone(), z.clone(), n(-4)],
            vec![z.clone(), z.clone(), z.clone(), z.clone(), n(-1), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), o.clone(), n(-1), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), n(-1)],
            vec![z.clone(), z.clone(), z.clone(), z.clone(), z.clone(), o, n(-1)],
        ],
    )?;
    Ok(Triple::new(Family::G2Odd, Some(r.clone()), x, y))
}

/// Generators of `J_1` in `SL_7(11)`.
pub fn j1_generators() -> Triple {
    let f = Field::of_order(11).expect("GF(11)");
    let x = Matrix::from_ints(
        &f,
        &[
            vec![0, 0, 0, 1, 0, 0, -1],
            vec![0, 0, 0, 0, 1, 0, 5],
            vec![0, 0, 0, 0, 0, 1, 2],
            vec![1, 0, 0, 0, 0, 0, -1],
            vec![0, 1, 0, 0, 0, 0, 5],
            vec![0, 0, 1, 0, 0, 0, 2],
            vec![0, 0, 0, 0, 0, 0, -1],
        ],
    )
    .expect("7x7");
    let y = Matrix::from_ints(
        &f,
        &[
            vec![1, 0, 0, 0, 4, 0, 3],
            vec![0, 1, 0, 0, 8, 0, -1],
            vec![0, 0, 1, 1, 0, 0, 9],
            vec![0, 0, 0, 0, -1, 0, 0],
            vec![0, 0, 0, 1, -1, 0, 0],
            vec![0, 0, 0, 0, 0, 0, -1],
            vec![0, 0, 0, 0, 0, 1, -1],
        ],
    )
    .expect("7x7");
    Triple::new(Family::J1, None, x, y)
}

/// Generators of `J_2` in `SL_6(4)`, with `ω` the residue of `t` modulo
/// `t^2 + t + 1`.
pub fn j2_generators() -> Triple {
    let f = Field::create(2, 2, Some(&[1, 1, 1])).expect("GF(4)");
    let w = f.gen_t();
    let w2 = f.mul(w, w);
    let rows_x = [
        [0, 0, 1, 0, w, 0],
        [0, 0, 0, 1, 1, w2],
        [1, 0, 0, 0, 0, w],
        [0, 1, 0, 0, w2, 1],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 0],
    ];
    let rows_y = [
        [1, 0, 0, 0, w2, w2],
        [0, 1, 0, 0, w, w2],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 1, 0, 1, 0],
        [0, 0, 0, 1, 0, 1],
    ];
    let x = Matrix::new(&f, 6, 6, rows_x.concat()).expect("6x6");
    let y = Matrix::new(&f, 6, 6, rows_y.concat()).expect("6x6");
    Triple::new(Family::J2, None, x, y)
}

/// A pair in `SL_6(11)` with similarity invariants `t^2+1` (three times),
/// `t^3-1` (twice) and `t^6+...+1` for `x`, `y` and `xy`. Characteristic
/// 11 is odd, so this is the shape of an odd-characteristic 6-dimensional
/// Hurwitz triple. `x` is block companion; `y` was found by random
/// conjugation of the block companion of `t^3-1`.
pub fn odd_six_pair() -> (Matrix, Matrix) {
    let f = Field::of_order(11).expect("GF(11)");
    let c = Matrix::from_ints(&f, &[vec![0, -1], vec![1, 0]]).expect("2x2");
    let x = Matrix::block_diag(&[c.clone(), c.clone(), c]).expect("6x6");
    let y = Matrix::from_ints(
        &f,
        &[
            vec![6, 2, 4, 8, 5, 3],
            vec![5, 5, 8, 6, 6, 8],
            vec![0, 8, 3, 2, 4, 1],
            vec![8, 9, 10, 6, 1, 0],
            vec![3, 2, 5, 10, 0, 10],
            vec![9, 1, 4, 2, 0, 2],
        ],
    )
    .expect("6x6");
    (x, y)
}

pub fn build(family: Family, r: Option<&FieldElement>) -> Result<Triple, SeedError> {
    match family {
        Family::G2Even => g2_even(r.ok_or(SeedError::BadParameter(String::new()))?),
        Family::G2Odd => g2_odd(r.ok_or(SeedError::BadParameter(String::new()))?),
        Family::J1 => Ok(j1_generators()),
        Family::J2 => Ok(j2_generators()),
    }
}

/// Similarity invariants of `x`, `y` and `xy` for a 6- or 7-dimensional
/// Hurwitz triple of the non-rigid type.
pub fn expected_invariants(f: &Fq, n: usize) -> Option<[Vec<Polynomial>; 3]> {
    let p = |c: &[i64]| Polynomial::from_ints(f, c);
    match n {
        6 => Some([vec![p(&[1, 0, 1]); 3], vec![p(&[-1, 0, 0, 1]); 2], vec![p(&[1; 7])]]),
        7 => Some([
            vec![p(&[1, 1]), p(&[-1, 0, 1]), p(&[-1, 0, 1]), p(&[-1, 0, 1])],
            vec![p(&[-1, 1]), p(&[-1, 0, 0, 1]), p(&[-1, 0, 0, 1])],
            vec![p(&[-1, 0, 0, 0, 0, 0, 0, 1])],
        ]),
        _ => None,
    }
}

/// Whether the triple's invariants equal [`expected_invariants`].
pub fn invariants_match(t: &Triple) -> Result<bool, SeedError> {
    let Some(exp) = expected_invariants(t.field(), t.x.rows()) else {
        return Ok(false);
    };
    for (m, e) in [&t.x, &t.y, &t.xy].into_iter().zip(exp) {
        if crate::matlin::similarity_invariants(m)? != e {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `r^12 + r^9 + r^5 + r^2 + 1`
pub fn even_exception_poly(f: &Fq) -> Polynomial {
    Polynomial::from_ints(f, &[1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1])
}

/// `r^2 + 15r + 100`
pub fn odd_exception_poly(f: &Fq) -> Polynomial {
    Polynomial::from_ints(f, &[100, 15, 1])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub family: Family,
    pub q: u64,
    pub r: String,
    pub irreducible_poly_ok: bool,
    pub field_of_definition_ok: bool,
    /// `r` outside GF(4) for the even family; `(q, r) != (17, 1)` for the odd one.
    pub special_exclusion_ok: bool,
    pub all_ok: bool,
}

pub fn check_conditions(family: Family, r: &FieldElement) -> Result<ConditionReport, SeedError> {
    let f = r.field();
    let a = f.degree();
    let (irr, fod, special) = match family {
        Family::G2Even => {
            family.field(f.q() as u64)?;
            let irr = even_exception_poly(f).eval(r.raw()) != 0;
            let s = &(r * r) + r;
            (irr, s.subfield_degree() == a, r.pow(4) != *r)
        }
        Family::G2Odd => {
            family.field(f.q() as u64)?;
            let irr = odd_exception_poly(f).eval(r.raw()) != 0;
            let special = !(f.q() == 17 && r.is_one());
            (irr, r.subfield_degree() == a, special)
        }
        other => return Err(SeedError::WrongFamily(other)),
    };
    Ok(ConditionReport {
        family,
        q: f.q() as u64,
        r: r.to_string(),
        irreducible_poly_ok: irr,
        field_of_definition_ok: fod,
        special_exclusion_ok: special,
        all_ok: irr && fod && special,
    })
}

/// First `r` in encoding order (constant coefficient fastest) passing every
/// condition.
pub fn search_r(family: Family, f: &Fq) -> Result<FieldElement, SeedError> {
    for v in f.elements() {
        let r = FieldElement::new(f, v);
        if check_conditions(family, &r)?.all_ok {
            return Ok(r);
        }
    }
    Err(SeedError::NotFound(f.q() as u64))
}

/// Number of `r` in GF(2^a) with `F_2[r^2 + r]` a proper subfield.
pub fn count_bad_field_of_definition(a: u32) -> Result<u64, SeedError> {
    let f = Field::create(2, a, None)?;
    Ok(f.elements()
        .filter(|&v| {
            let r = FieldElement::new(&f, v);
            (&(&r * &r) + &r).subfield_degree() != a
        })
        .count() as u64)
}

/// `2^(2 + floor(a/2)) - 4`
pub fn field_of_definition_bound(a: u32) -> u64 {
    (1u64 << (2 + a / 2)) - 4
}

/// How the CLI names a parameter value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RChoice {
    /// First admissible value.
    Auto,
    /// First generator of the multiplicative group.
    Primitive,
    /// Integer or coefficient list, as accepted by [`FieldElement::parse`].
    Value(String),
}

impl FromStr for RChoice {
    type Err = SeedError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "auto" => Ok(RChoice::Auto),
            "primitive" | "generator" => Ok(RChoice::Primitive),
            "" => Err(SeedError::BadParameter(s.to_string())),
            v => Ok(RChoice::Value(v.to_string())),
        }
    }
}

impl RChoice {
    pub fn resolve(&self, family: Family, f: &Fq) -> Result<FieldElement, SeedError> {
        match self {
            RChoice::Auto => search_r(family, f),
            RChoice::Primitive => Ok(FieldElement::new(f, f.primitive_element())),
            RChoice::Value(s) => FieldElement::parse(f, s).map_err(|_| SeedError::BadParameter(s.clone())),
        }
    }
}

/// Evidence for the commutator identities of the odd family.
#[derive(Clone, Debug, Serialize)]
pub struct CommutatorData {
    /// `r^2 + 15r + 100`
    pub d: String,
    pub trace: String,
    pub charpoly: String,
    pub expected_charpoly: String,
    pub charpoly_ok: bool,
    /// Coefficient of `t^6` in the characteristic polynomial of
    /// `w = [x,y]^2 y (xy)^2`.
    pub w_t6: String,
    /// `r^3 + 25r^2 + 250r + 999`
    pub f1: String,
    pub w_t6_is_f1: bool,
    pub w_t6_is_minus_f1: bool,
}

/// `t^7 - 3t^6 - (d-5)t^5 - (d+7)t^4 + (d+7)t^3 + (d-5)t^2 + 3t - 1`
pub fn expected_commutator_charpoly(r: &FieldElement) -> Polynomial {
    let f = r.field();
    let d = odd_exception_poly(f).eval(r.raw());
    let c = |v: i64| f.from_int(v);
    let dm5 = f.sub(d, c(5));
    let dp7 = f.add(d, c(7));
    Polynomial::new(f, vec![c(-1), c(3), dm5, dp7, f.neg(dp7), f.neg(dm5), c(-3), 1])
}

pub fn f1(r: &FieldElement) -> FieldElement {
    let f = r.field();
    FieldElement::new(f, Polynomial::from_ints(f, &[999, 250, 25, 1]).eval(r.raw()))
}

/// `[x, y]^2 y (xy)^2` with `[x, y] = x^-1 y^-1 x y`.
pub fn w_element(t: &Triple) -> Result<Matrix, SeedError> {
    let c = t.x.commutator(&t.y)?;
    Ok(&(&(&c * &c) * &t.y) * &(&t.xy * &t.xy))
}

pub fn commutator_data(t: &Triple) -> Result<CommutatorData, SeedError> {
    let r = match (&t.family, &t.r) {
        (Family::G2Odd, Some(r)) => r,
        _ => return Err(SeedError::WrongFamily(t.family)),
    };
    let f = t.field();
    let c = t.x.commutator(&t.y)?;
    let chi = charpoly(&c)?;
    let expected = expected_commutator_charpoly(r);
    let w6 = charpoly(&w_element(t)?)?.coeff_element(6);
    let f1 = f1(r);
    Ok(CommutatorData {
        d: FieldElement::new(f, odd_exception_poly(f).eval(r.raw())).to_string(),
        trace: c.trace()?.to_string(),
        charpoly: chi.to_string(),
        expected_charpoly: expected.to_string(),
        charpoly_ok: chi == expected,
        w_t6: w6.to_string(),
        f1: f1.to_string(),
        w_t6_is_f1: w6 == f1,
        w_t6_is_minus_f1: w6 == -&f1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matlin::{
        absolutely_irreducible, element_order, similarity_invariants, ElementOrder, DEFAULT_ORDER_CAP,
    };

    fn orders(t: &Triple) -> Vec<ElementOrder> {
        [&t.x, &t.y, &t.xy].iter().map(|m| element_order(m, DEFAULT_ORDER_CAP).unwrap()).collect()
    }

    fn exact(v: &[u64]) -> Vec<ElementOrder> {
        v.iter().map(|&k| ElementOrder::Exact(k)).collect()
    }

    fn p(f: &Fq, c: &[i64]) -> Polynomial {
        Polynomial::from_ints(f, c)
    }

    #[test]
    fn odd_six_pair_invariants() {
        let (x, y) = odd_six_pair();
        let f = x.field().clone();
        let p = |c: &[i64]| Polynomial::from_ints(&f, c);
        assert_eq!(similarity_invariants(&x).unwrap(), vec![p(&[1, 0, 1]); 3]);
        assert_eq!(similarity_invariants(&y).unwrap(), vec![p(&[-1, 0, 0, 1]); 2]);
        assert_eq!(similarity_invariants(&(&x * &y)).unwrap(), vec![p(&[1; 7])]);
        assert_eq!(orders(&Triple::new(Family::G2Odd, None, x, y)), exact(&[4, 3, 7]));
    }

    #[test]
    fn even_family_at_eight() {
        let f = Field::of_order(8).unwrap();
        let r = FieldElement::generator_t(&f);
        let t = g2_even(&r).unwrap();
        assert_eq!(orders(&t), exact(&[2, 3, 7]));
        let sq = p(&f, &[1, 0, 1]);
        let cube = p(&f, &[-1, 0, 0, 1]);
        assert_eq!(similarity_invariants(&t.x).unwrap(), vec![sq.clone(), sq.clone(), sq]);
        assert_eq!(similarity_invariants(&t.y).unwrap(), vec![cube.clone(), cube]);
        assert_eq!(similarity_invariants(&t.xy).unwrap(), vec![p(&f, &[1; 7])]);
        assert_eq!(t.x.det().unwrap(), FieldElement::one(&f));
        let report = check_conditions(Family::G2Even, &r).unwrap();
        assert!(report.all_ok, "{report:?}");
    }

    #[test]
    fn numerator_r3_plus_1_breaks_order_seven() {
        for q in [8u64, 16, 32] {
            let f = Field::of_order(q).unwrap();
            for v in f.elements() {
                let r = FieldElement::new(&f, v);
                if r.pow(4) == r {
                    continue;
                }
                let one = FieldElement::one(&f);
                let d = &(&(&r * &r) + &r) + &one;
                let c = &(&r.pow(3) + &one) / &d;
                let t = g2_even_with_c(&r, &c).unwrap();
                assert_ne!(element_order(&t.xy, DEFAULT_ORDER_CAP).unwrap(), ElementOrder::Exact(7));
                let good = g2_even(&r).unwrap();
                assert_eq!(orders(&good), exact(&[2, 3, 7]), "q={q} r={r}");
            }
        }
    }

    #[test]
    fn even_family_rejects_gf4_parameters() {
        let f = Field::of_order(16).unwrap();
        let g = FieldElement::new(&f, f.primitive_element());
        let omega = g.pow(5);
        assert_eq!(g2_even(&omega).unwrap_err(), SeedError::RInSubfield);
        assert_eq!(g2_even(&FieldElement::one(&f)).unwrap_err(), SeedError::RInSubfield);
        let f4 = Field::of_order(4).unwrap();
        assert!(matches!(g2_even(&FieldElement::generator_t(&f4)), Err(SeedError::QTooSmall { .. })));
        let f9 = Field::of_order(9).unwrap();
        assert!(matches!(g2_even(&FieldElement::one(&f9)), Err(SeedError::BadCharacteristic { .. })));
    }

    #[test]
    fn odd_family_basics() {
        let f = Field::of_order(11).unwrap();
        let t = g2_odd(&FieldElement::zero(&f)).unwrap();
        assert_eq!(orders(&t), exact(&[2, 3, 7]));
        assert!(t.x.det().unwrap().is_one() && t.y.det().unwrap().is_one());
        assert_eq!(t.x.commutator(&t.y).unwrap().trace().unwrap().raw(), 3);
        let one = p(&f, &[-1, 1]);
        let cube = p(&f, &[-1, 0, 0, 1]);
        assert_eq!(similarity_invariants(&t.y).unwrap(), vec![one, cube.clone(), cube]);
        assert_eq!(similarity_invariants(&t.xy).unwrap(), vec![p(&f, &[-1, 0, 0, 0, 0, 0, 0, 1])]);
    }

    #[test]
    fn commutator_identities() {
        for q in [5u64, 7, 9, 11, 13, 17, 25] {
            let f = Field::of_order(q).unwrap();
            for v in f.elements() {
                let r = FieldElement::new(&f, v);
                let data = commutator_data(&g2_odd(&r).unwrap()).unwrap();
                assert!(data.charpoly_ok, "q={q} r={r}: {data:?}");
                assert_eq!(data.trace, FieldElement::from_int(&f, 3).to_string());
                assert!(data.w_t6_is_f1, "q={q} r={r}: {data:?}");
            }
        }
    }

    #[test]
    fn j_generators() {
        for t in [j1_generators(), j2_generators()] {
            assert_eq!(orders(&t), exact(&[2, 3, 7]), "{}", t.family);
            assert!(absolutely_irreducible(&t.gens()).unwrap());
        }
        let t = j2_generators();
        let w = t.field().gen_t();
        assert_eq!(t.field().add(t.field().add(t.field().mul(w, w), w), 1), 0);
    }

    #[test]
    fn condition_examples() {
        let f17 = Field::of_order(17).unwrap();
        let rep = check_conditions(Family::G2Odd, &FieldElement::one(&f17)).unwrap();
        assert!(!rep.special_exclusion_ok && !rep.all_ok);
        let f7 = Field::of_order(7).unwrap();
        for v in f7.elements() {
            let r = FieldElement::new(&f7, v);
            let root = f7.add(f7.add(f7.mul(v, v), v), 2) == 0;
            assert_eq!(check_conditions(Family::G2Odd, &r).unwrap().irreducible_poly_ok, !root);
        }
        assert_eq!(
            check_conditions(Family::J1, &FieldElement::one(&f7)).unwrap_err(),
            SeedError::WrongFamily(Family::J1)
        );
    }

    #[test]
    fn searches_succeed() {
        for q in [8u64, 16, 32, 64] {
            let f = Family::G2Even.field(q).unwrap();
            assert!(check_conditions(Family::G2Even, &search_r(Family::G2Even, &f).unwrap()).unwrap().all_ok);
        }
        for q in [5u64, 7, 9, 11, 13, 17, 25] {
            let f = Family::G2Odd.field(q).unwrap();
            assert!(check_conditions(Family::G2Odd, &search_r(Family::G2Odd, &f).unwrap()).unwrap().all_ok);
        }
    }

    #[test]
    fn counting_bound() {
        for a in 3..=6 {
            assert!(count_bad_field_of_definition(a).unwrap() <= field_of_definition_bound(a), "a={a}");
        }
        assert_eq!(field_of_definition_bound(5), 12);
    }

    #[test]
    fn parameter_choices() {
        let f = Field::of_order(8).unwrap();
        assert_eq!("auto".parse::<RChoice>().unwrap(), RChoice::Auto);
        let r = "[0,1,0]".parse::<RChoice>().unwrap().resolve(Family::G2Even, &f).unwrap();
        assert_eq!(r, FieldElement::generator_t(&f));
        let g = "primitive".parse::<RChoice>().unwrap().resolve(Family::G2Even, &f).unwrap();
        assert_eq!(g.mult_order().unwrap(), 7);
        assert!("[0,x]".parse::<RChoice>().unwrap().resolve(Family::G2Even, &f).is_err());
    }
}
