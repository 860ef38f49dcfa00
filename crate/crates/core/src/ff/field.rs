use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use super::primepoly;
use super::FieldError;
use crate::numtheory;

/// Shared handle to a finite field. Matrices, polynomials and elements all
/// carry one of these.
pub type Fq = Arc<Field>;

/// Fields up to this size get full 256x256 addition and multiplication tables.
const SMALL_LIMIT: u64 = 256;
/// Extension fields up to this size get exp/log/Zech tables.
const LOG_LIMIT: u64 = 1 << 22;
/// Element encodings are `u32`; keep well clear of overflow in sums.
const MAX_ORDER: u64 = 1 << 31;
const NO_ZECH: u32 = u32::MAX;

/// Characteristic, degree and defining polynomial of GF(p^a).
///
/// The modulus is stored low-to-high and is monic of degree `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FieldSpec {
    p: u32,
    degree: u32,
    modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.degree)
    }
}

impl fmt::Display for FieldSpec {
    /// Renders the full CLI syntax `p^a/c0,c1,...,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}/", self.p, self.degree)?;
        let coeffs: Vec<String> = self.modulus.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", coeffs.join(","))
    }
}

/// Parsed form of the CLI field syntax: `p^a`, `p^a/c0,...,1`, or a bare
/// prime power such as `8`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldDescriptor {
    pub p: u64,
    pub degree: u32,
    pub modulus: Option<Vec<u64>>,
}

impl FieldDescriptor {
    pub fn create(&self) -> Result<Fq, FieldError> {
        Field::create(self.p, self.degree, self.modulus.as_deref())
    }
}

impl FromStr for FieldDescriptor {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || FieldError::Syntax(s.to_string());
        let (head, modulus) = match s.split_once('/') {
            Some((h, m)) => {
                let coeffs = m
                    .split(',')
                    .map(|c| c.trim().parse::<u64>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>, _>>()?;
                (h, Some(coeffs))
            }
            None => (s, None),
        };
        let (p, degree) = match head.split_once('^') {
            Some((p, a)) => (
                p.trim().parse::<u64>().map_err(|_| bad())?,
                a.trim().parse::<u32>().map_err(|_| bad())?,
            ),
            None => {
                let q = head.parse::<u64>().map_err(|_| bad())?;
                let (p, a) = numtheory::prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
                (p, a)
            }
        };
        Ok(FieldDescriptor { p, degree, modulus })
    }
}

struct SmallTables {
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

enum Arith {
    Small(Box<SmallTables>),
    Prime,
    Log(Box<LogTables>),
    Slow,
}

/// GF(p^a) in a polynomial basis. Elements are encoded as integers in
/// `0..q` whose base-p digits are the coefficients `c0, c1, ...` of the
/// residue `c0 + c1 t + ...`; the raw arithmetic methods work on that encoding.
pub struct Field {
    spec: FieldSpec,
    q: u32,
    arith: Arith,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.spec)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for Field {}

impl Field {
    /// GF(p^a). Without an explicit modulus the first irreducible monic
    /// polynomial in lexicographic order (constant term varying fastest) is
    /// used, so the same `(p, a)` always yields the same field.
    pub fn create(p: u64, degree: u32, modulus: Option<&[u64]>) -> Result<Fq, FieldError> {
        if !numtheory::is_prime(p) {
            return Err(FieldError::NonPrime(p));
        }
        if degree == 0 {
            return Err(FieldError::DegreeMismatch { expected: 1, found: 0 });
        }
        let q = numtheory::checked_pow(p, degree)
            .filter(|&q| q < MAX_ORDER)
            .ok_or(FieldError::TooLarge { p, degree })?;
        let modulus: Vec<u64> = match modulus {
            Some(m) => {
                let mut m = m.to_vec();
                primepoly::trim(&mut m);
                if m.len() != degree as usize + 1 {
                    return Err(FieldError::DegreeMismatch {
                        expected: degree,
                        found: m.len().saturating_sub(1) as u32,
                    });
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(FieldError::CoefficientRange(p));
                }
                if *m.last().unwrap() != 1 {
                    return Err(FieldError::NotMonic);
                }
                if !primepoly::is_irreducible(&m, p) {
                    return Err(FieldError::ReducibleModulus);
                }
                m
            }
            None => default_modulus(p, degree),
        };
        let spec = FieldSpec {
            p: p as u32,
            degree,
            modulus: modulus.iter().map(|&c| c as u32).collect(),
        };
        let mut field = Field { spec, q: q as u32, arith: Arith::Slow };
        field.arith = if degree == 1 {
            Arith::Prime
        } else if q <= LOG_LIMIT {
            Arith::Log(Box::new(field.build_log_tables()))
        } else {
            Arith::Slow
        };
        if q <= SMALL_LIMIT {
            field.arith = Arith::Small(Box::new(field.build_small_tables()));
        }
        Ok(Arc::new(field))
    }

    /// Convenience for the default-modulus field of order `q`.
    pub fn of_order(q: u64) -> Result<Fq, FieldError> {
        let (p, a) = numtheory::prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        Field::create(p, a, None)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn p(&self) -> u32 {
        self.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.spec.degree
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.spec.degree == 1
    }

    /// Same field as `other` (identical spec, not merely isomorphic).
    pub fn same(a: &Fq, b: &Fq) -> bool {
        Arc::ptr_eq(a, b) || a.spec == b.spec
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.q
    }

    pub fn digits(&self, v: u32) -> Vec<u32> {
        let p = self.spec.p;
        let mut v = v;
        (0..self.spec.degree)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    /// Encodes a coefficient list (low-to-high, shorter lists are padded).
    pub fn from_digits(&self, digits: &[u32]) -> Result<u32, FieldError> {
        if digits.len() > self.spec.degree as usize {
            return Err(FieldError::DegreeMismatch {
                expected: self.spec.degree,
                found: digits.len() as u32,
            });
        }
        let p = self.spec.p;
        let mut v: u64 = 0;
        for &d in digits.iter().rev() {
            if d >= p {
                return Err(FieldError::CoefficientRange(p as u64));
            }
            v = v * p as u64 + d as u64;
        }
        Ok(v as u32)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.spec.p as i64) as u32
    }

    /// Residue class of `t` (the polynomial-basis generator); in GF(p) this is 0.
    pub fn gen_t(&self) -> u32 {
        if self.spec.degree == 1 {
            // t = -c0 mod the linear modulus t + c0
            self.from_int(-(self.spec.modulus[0] as i64))
        } else {
            self.spec.p
        }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.arith {
            Arith::Small(t) => t.add[((a as usize) << 8) | b as usize] as u32,
            Arith::Prime => {
                let s = a + b;
                if s >= self.spec.p {
                    s - self.spec.p
                } else {
                    s
                }
            }
            Arith::Log(t) => {
                if self.spec.p == 2 {
                    return a ^ b;
                }
                if a == 0 {
                    return b;
                }
                if b == 0 {
                    return a;
                }
                let m = self.q - 1;
                let la = t.log[a as usize];
                let lb = t.log[b as usize];
                let d = if lb >= la { lb - la } else { lb + m - la };
                let z = t.zech[d as usize];
                if z == NO_ZECH {
                    0
                } else {
                    t.exp[(la + z) as usize]
                }
            }
            Arith::Slow => self.slow_add(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        match &self.arith {
            Arith::Small(t) => t.neg[a as usize] as u32,
            Arith::Prime => {
                if a == 0 {
                    0
                } else {
                    self.spec.p - a
                }
            }
            Arith::Log(t) => {
                if self.spec.p == 2 || a == 0 {
                    a
                } else {
                    let half = (self.q - 1) / 2;
                    t.exp[(t.log[a as usize] + half) as usize]
                }
            }
            Arith::Slow => {
                if self.spec.p == 2 {
                    a
                } else {
                    let p = self.spec.p;
                    let d: Vec<u32> = self.digits(a).iter().map(|&c| (p - c) % p).collect();
                    self.from_digits(&d).unwrap()
                }
            }
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.arith {
            Arith::Small(t) => t.mul[((a as usize) << 8) | b as usize] as u32,
            Arith::Prime => ((a as u64 * b as u64) % self.spec.p as u64) as u32,
            Arith::Log(t) => {
                if a == 0 || b == 0 {
                    0
                } else {
                    t.exp[(t.log[a as usize] + t.log[b as usize]) as usize]
                }
            }
            Arith::Slow => self.slow_mul(a, b),
        }
    }

    /// Multiplicative inverse; `inv(0)` is 0 (callers check for zero).
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        match &self.arith {
            Arith::Small(t) => t.inv[a as usize] as u32,
            Arith::Log(t) => {
                let m = self.q - 1;
                t.exp[((m - t.log[a as usize]) % m) as usize]
            }
            _ => self.pow(a, self.q as u128 - 2),
        }
    }

    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: u32, mut e: u128) -> u32 {
        let mut acc = 1u32;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    /// `a * b + c`, the inner step of every elimination kernel.
    #[inline]
    pub fn mul_add(&self, a: u32, b: u32, c: u32) -> u32 {
        self.add(self.mul(a, b), c)
    }

    pub(crate) fn slow_add(&self, a: u32, b: u32) -> u32 {
        if self.spec.p == 2 {
            return a ^ b;
        }
        let p = self.spec.p;
        let (da, db) = (self.digits(a), self.digits(b));
        let d: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
        self.from_digits(&d).unwrap()
    }

    pub(crate) fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let p = self.spec.p as u64;
        if self.spec.degree == 1 {
            return ((a as u64 * b as u64) % p) as u32;
        }
        let n = self.spec.degree as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // reduce with the monic modulus, top degree first
        for top in (n..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, &m) in self.spec.modulus[..n].iter().enumerate() {
                let idx = top - n + i;
                prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
            }
        }
        let d: Vec<u32> = prod[..n].iter().map(|&c| c as u32).collect();
        self.from_digits(&d).unwrap()
    }

    fn slow_pow(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, b);
            }
            b = self.slow_mul(b, b);
            e >>= 1;
        }
        acc
    }

    fn find_primitive_slow(&self) -> u32 {
        let m = self.q as u64 - 1;
        let primes: Vec<u64> = numtheory::factor(m).into_iter().map(|(p, _)| p).collect();
        (1..self.q)
            .find(|&g| primes.iter().all(|&l| self.slow_pow(g, m / l) != 1))
            .expect("multiplicative group of a finite field is cyclic")
    }

    fn build_log_tables(&self) -> LogTables {
        let q = self.q as usize;
        let m = q - 1;
        let g = self.find_primitive_slow();
        let mut exp = vec![0u32; 2 * m];
        let mut log = vec![0u32; q];
        let mut x = 1u32;
        for i in 0..m {
            exp[i] = x;
            exp[i + m] = x;
            log[x as usize] = i as u32;
            x = self.slow_mul(x, g);
        }
        let zech = (0..m)
            .map(|d| {
                let s = self.slow_add(1, exp[d]);
                if s == 0 {
                    NO_ZECH
                } else {
                    log[s as usize]
                }
            })
            .collect();
        LogTables { exp, log, zech }
    }

    fn build_small_tables(&self) -> SmallTables {
        let q = self.q as usize;
        let mut add = vec![0u8; 256 * 256];
        let mut mul = vec![0u8; 256 * 256];
        for a in 0..q {
            for b in 0..q {
                add[(a << 8) | b] = self.add(a as u32, b as u32) as u8;
                mul[(a << 8) | b] = self.mul(a as u32, b as u32) as u8;
            }
        }
        let neg = (0..q).map(|a| self.neg(a as u32) as u8).collect();
        let inv = (0..q).map(|a| self.inv(a as u32) as u8).collect();
        SmallTables { add, mul, neg, inv }
    }

    /// Smallest element (in encoding order) generating the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        if let Arith::Log(t) = &self.arith {
            return t.exp[1];
        }
        let m = self.q as u64 - 1;
        if m == 1 {
            return 1;
        }
        let primes: Vec<u64> = numtheory::factor(m).into_iter().map(|(p, _)| p).collect();
        (1..self.q)
            .find(|&g| primes.iter().all(|&l| self.pow(g, (m / l) as u128) != 1))
            .expect("multiplicative group of a finite field is cyclic")
    }

    /// GF(q^k) with its default modulus, together with an embedding of `self`.
    pub fn extension(self: &Fq, k: u32) -> Result<(Fq, Embedding), FieldError> {
        let big = Field::create(self.spec.p as u64, self.spec.degree * k, None)?;
        let emb = Embedding::new(self, &big)?;
        Ok((big, emb))
    }

    /// Smallest extension containing a primitive `n`-th root of unity, with
    /// the embedding and that root. Fails when `p | n`.
    pub fn root_of_unity_extension(self: &Fq, n: u64) -> Result<(Fq, Embedding, u32), FieldError> {
        if n.is_multiple_of(self.spec.p as u64) {
            return Err(FieldError::NoRootOfUnity { n, p: self.spec.p as u64 });
        }
        let q = self.q as u128;
        let mut k = 1u32;
        let mut qk = q;
        while !(qk - 1).is_multiple_of(n as u128) {
            k += 1;
            qk *= q;
        }
        let (big, emb) = if k == 1 {
            (self.clone(), Embedding::identity(self))
        } else {
            self.extension(k)?
        };
        let g = big.primitive_element();
        let root = big.pow(g, (big.q as u128 - 1) / n as u128);
        Ok((big, emb, root))
    }
}

/// Field homomorphism GF(q) -> GF(q^k) given by the image of `t`.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Fq,
    target: Fq,
    root_powers: Vec<u32>,
}

impl Embedding {
    pub fn identity(field: &Fq) -> Self {
        let t = field.gen_t();
        let root_powers = (0..field.degree()).map(|i| field.pow(t, i as u128)).collect();
        Embedding { source: field.clone(), target: field.clone(), root_powers }
    }

    /// Finds the first root (in encoding order) of the source modulus inside
    /// `target` and uses it as the image of `t`.
    pub fn new(source: &Fq, target: &Fq) -> Result<Self, FieldError> {
        if source.p() != target.p() || !target.degree().is_multiple_of(source.degree()) {
            return Err(FieldError::NotSubfield);
        }
        if Field::same(source, target) {
            return Ok(Embedding::identity(source));
        }
        let modulus: Vec<u32> = source.spec.modulus.iter().map(|&c| target.from_int(c as i64)).collect();
        let root = target
            .elements()
            .find(|&x| {
                let mut acc = 0u32;
                for &c in modulus.iter().rev() {
                    acc = target.add(target.mul(acc, x), c);
                }
                acc == 0
            })
            .ok_or(FieldError::NotSubfield)?;
        let root_powers = (0..source.degree()).map(|i| target.pow(root, i as u128)).collect();
        Ok(Embedding { source: source.clone(), target: target.clone(), root_powers })
    }

    pub fn source(&self) -> &Fq {
        &self.source
    }

    pub fn target(&self) -> &Fq {
        &self.target
    }

    pub fn map(&self, x: u32) -> u32 {
        let t = &self.target;
        self.source
            .digits(x)
            .iter()
            .zip(&self.root_powers)
            .fold(0, |acc, (&d, &rp)| t.add(acc, t.mul(t.from_int(d as i64), rp)))
    }
}

fn default_modulus(p: u64, degree: u32) -> Vec<u64> {
    let count = p.pow(degree);
    (0..count)
        .map(|mut c| {
            let mut m: Vec<u64> = (0..degree)
                .map(|_| {
                    let d = c % p;
                    c /= p;
                    d
                })
                .collect();
            m.push(1);
            m
        })
        .find(|m| primepoly::is_irreducible(m, p))
        .expect("irreducible polynomials exist in every degree")
}
