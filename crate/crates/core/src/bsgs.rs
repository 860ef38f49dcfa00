//! Exact orders of matrix groups through a stabilizer chain on the natural
//! vector action, and the table of candidate orders used for identification.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;
use serde::Serialize;
use thiserror::Error;

use crate::ff::Fq;
use crate::matlin::{Matrix, MatrixError};
use crate::numtheory::{factor, prime_power};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BsgsError {
    #[error("budget exceeded: {reason} (orbit sizes so far {partial:?})")]
    BudgetExceeded { reason: String, partial: Vec<usize> },
    #[error("vectors of GF({q})^{n} do not pack into 64 bits")]
    Unsupported { q: u32, n: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Resource limits for one chain computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// estimated bytes of transversal storage
    pub memory_bytes: u64,
    /// images computed while growing orbits
    pub max_edges: u64,
    /// largest single orbit; `None` lifts the cap
    pub max_orbit: Option<usize>,
}

pub const DEFAULT_MEMORY_MB: u64 = 2048;
pub const DEFAULT_MAX_EDGES: u64 = 100_000_000;
/// Orbits above this size need [`Budget::large`]. It admits every orbit of
/// `J_1` on `GF(11)^7` and stops the transitive action of `G_2(8)` on the
/// 262143 nonzero vectors of `GF(8)^6`.
pub const DEFAULT_MAX_ORBIT: usize = 250_000;

impl Default for Budget {
    fn default() -> Self {
        Budget { memory_bytes: DEFAULT_MEMORY_MB << 20, max_edges: DEFAULT_MAX_EDGES, max_orbit: Some(DEFAULT_MAX_ORBIT) }
    }
}

impl Budget {
    pub fn large() -> Self {
        Budget { max_orbit: None, max_edges: 20 * DEFAULT_MAX_EDGES, ..Budget::default() }
    }

    /// Applies `HURWITZ_BUDGET_MB` if it is set to a positive integer.
    pub fn with_env(mut self) -> Self {
        if let Some(mb) = std::env::var("HURWITZ_BUDGET_MB").ok().and_then(|s| s.trim().parse::<u64>().ok()) {
            if mb > 0 {
                self.memory_bytes = mb << 20;
            }
        }
        self
    }
}

/// Flat row-major `n x n` matrices over a shared field.
struct Ctx {
    f: Fq,
    n: usize,
    q: u64,
}

impl Ctx {
    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = self.n;
        let f = &self.f;
        let mut out = vec![0u32; n * n];
        for i in 0..n {
            let orow = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for (o, &y) in orow.iter_mut().zip(&b[k * n..(k + 1) * n]) {
                    if y != 0 {
                        *o = f.mul_add(x, y, *o);
                    }
                }
            }
        }
        out
    }

    fn apply(&self, g: &[u32], v: &[u32]) -> Vec<u32> {
        let n = self.n;
        let f = &self.f;
        (0..n)
            .map(|i| {
                let row = &g[i * n..(i + 1) * n];
                row.iter().zip(v).fold(0, |acc, (&a, &b)| if a == 0 || b == 0 { acc } else { f.mul_add(a, b, acc) })
            })
            .collect()
    }

    fn key(&self, v: &[u32]) -> u64 {
        v.iter().rev().fold(0u64, |acc, &d| acc * self.q + u64::from(d))
    }

    fn is_identity(&self, g: &[u32]) -> bool {
        let n = self.n;
        g.iter().enumerate().all(|(k, &v)| v == u32::from(k / n == k % n))
    }

    fn identity(&self) -> Vec<u32> {
        let n = self.n;
        (0..n * n).map(|k| u32::from(k / n == k % n)).collect()
    }

    fn inverse(&self, g: &[u32]) -> Vec<u32> {
        Matrix::new(&self.f, self.n, self.n, g.to_vec())
            .and_then(|m| m.inverse())
            .expect("group elements are invertible")
            .data()
            .to_vec()
    }
}

struct Level {
    base: Vec<u32>,
    /// strong generators first moving this level's base point, with inverses
    gens: Vec<(Vec<u32>, Vec<u32>)>,
    index: FxHashMap<u64, u32>,
    /// orbit points, `n` entries each
    points: Vec<u32>,
    /// for each point `γ` a `v` with `v γ = base`, `n^2` entries each
    vinv: Vec<u32>,
}

impl Level {
    fn len(&self) -> usize {
        self.index.len()
    }

    fn point(&self, k: usize, n: usize) -> &[u32] {
        &self.points[k * n..(k + 1) * n]
    }

    fn v(&self, k: usize, n: usize) -> &[u32] {
        &self.vinv[k * n * n..(k + 1) * n * n]
    }
}

/// Orbit sizes, base points and bookkeeping of a certified chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupOrder {
    #[serde(serialize_with = "crate::bsgs::as_string")]
    pub order: u128,
    pub orbit_sizes: Vec<usize>,
    pub base: Vec<Vec<u32>>,
    pub strong_generators: usize,
    pub seed: u64,
    pub verified: bool,
    pub schreier_generators_checked: u64,
    /// whether the order divides `|GL_n(q)|`; `None` when `q^n` overflows
    pub divides_gl: Option<bool>,
}

pub(crate) fn as_string<S: serde::Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

struct Chain<'a> {
    ctx: Ctx,
    levels: Vec<Level>,
    budget: &'a Budget,
    edges: u64,
    bytes: u64,
}

impl Chain<'_> {
    fn partial(&self) -> Vec<usize> {
        self.levels.iter().map(Level::len).collect()
    }

    /// Strips `g` starting at `from`; the residue and the level where it
    /// dropped out, if any.
    fn sift(&self, mut g: Vec<u32>, from: usize) -> (Vec<u32>, Option<usize>) {
        let n = self.ctx.n;
        for (i, lvl) in self.levels.iter().enumerate().skip(from) {
            let img = self.ctx.apply(&g, &lvl.base);
            match lvl.index.get(&self.ctx.key(&img)) {
                Some(&k) => g = self.ctx.mul(lvl.v(k as usize, n), &g),
                None => return (g, Some(i)),
            }
        }
        (g, None)
    }

    /// Adds `g` (which fixes the base points of levels before `level`) as a
    /// strong generator and grows the orbits it touches.
    fn add_generator(&mut self, g: Vec<u32>, level: usize) -> Result<(), BsgsError> {
        if level == self.levels.len() {
            let n = self.ctx.n;
            let j = (0..n)
                .find(|&j| (0..n).any(|i| g[i * n + j] != u32::from(i == j)))
                .expect("non-identity moves a basis vector");
            let base = crate::matlin::unit(n, j);
            let mut index = FxHashMap::default();
            index.insert(self.ctx.key(&base), 0);
            let vinv = self.ctx.identity();
            self.levels.push(Level { points: base.clone(), base, gens: Vec::new(), index, vinv });
        }
        let ginv = self.ctx.inverse(&g);
        self.levels[level].gens.push((g, ginv));
        for j in (0..=level).rev() {
            self.grow_orbit(j, level)?;
        }
        Ok(())
    }

    fn check_budget(&self, j: usize) -> Result<(), BsgsError> {
        let reason = if self.edges > self.budget.max_edges {
            format!("more than {} orbit edges", self.budget.max_edges)
        } else if self.bytes > self.budget.memory_bytes {
            format!("transversals need more than {} MiB", self.budget.memory_bytes >> 20)
        } else if let Some(m) = self.budget.max_orbit.filter(|&m| self.levels[j].len() > m) {
            format!("orbit larger than {m} points")
        } else {
            return Ok(());
        };
        Err(BsgsError::BudgetExceeded { reason, partial: self.partial() })
    }

    /// Applies the newest generator of level `new_at` to every point of
    /// level `j`, then closes the orbit under all generators of levels `j..`.
    fn grow_orbit(&mut self, j: usize, new_at: usize) -> Result<(), BsgsError> {
        let n = self.ctx.n;
        let point_bytes = (4 * n * n + 4 * n + 24) as u64;
        let newest = self.levels[new_at].gens.last().cloned().expect("a generator was just added");
        let all: Vec<(Vec<u32>, Vec<u32>)> =
            self.levels[j..].iter().flat_map(|l| l.gens.iter().cloned()).collect();
        let mut frontier: Vec<usize> = Vec::new();
        let old = self.levels[j].len();
        for from in 0..old {
            if let Some(k) = self.extend(j, from, &newest) {
                frontier.push(k);
            }
        }
        while let Some(from) = frontier.pop() {
            self.bytes += point_bytes;
            self.check_budget(j)?;
            for s in &all {
                if let Some(k) = self.extend(j, from, s) {
                    frontier.push(k);
                }
            }
        }
        self.check_budget(j)
    }

    /// Image of point `from` under `s`; its index if new.
    fn extend(&mut self, j: usize, from: usize, s: &(Vec<u32>, Vec<u32>)) -> Option<usize> {
        self.edges += 1;
        let ctx = &self.ctx;
        let n = ctx.n;
        let lvl = &mut self.levels[j];
        let img = ctx.apply(&s.0, lvl.point(from, n));
        let key = ctx.key(&img);
        if lvl.index.contains_key(&key) {
            return None;
        }
        let v = ctx.mul(lvl.v(from, n), &s.1);
        let k = lvl.len();
        lvl.index.insert(key, k as u32);
        lvl.points.extend_from_slice(&img);
        lvl.vinv.extend_from_slice(&v);
        Some(k)
    }

    /// Sifts `g` and adds the residue if it is not the identity.
    fn absorb(&mut self, g: Vec<u32>, from: usize) -> Result<Option<usize>, BsgsError> {
        let (h, drop) = self.sift(g, from);
        match drop {
            Some(level) => {
                self.add_generator(h, level)?;
                Ok(Some(level))
            }
            None if !self.ctx.is_identity(&h) => {
                let level = self.levels.len();
                self.add_generator(h, level)?;
                Ok(Some(level))
            }
            None => Ok(None),
        }
    }

    /// Sifts every Schreier generator `v_{sγ} s v_γ^{-1}`, bottom level
    /// first; any non-trivial residue is added and the check resumes from
    /// the level it touched.
    fn verify(&mut self) -> Result<u64, BsgsError> {
        let n = self.ctx.n;
        let mut checked = 0u64;
        let mut i = self.levels.len();
        'outer: while i > 0 {
            i -= 1;
            let gens: Vec<(Vec<u32>, Vec<u32>)> =
                self.levels[i..].iter().flat_map(|l| l.gens.iter().cloned()).collect();
            let npts = self.levels[i].len();
            for k in 0..npts {
                for s in &gens {
                    checked += 1;
                    let lvl = &self.levels[i];
                    let img = self.ctx.apply(&s.0, lvl.point(k, n));
                    let d = lvl.index[&self.ctx.key(&img)] as usize;
                    let t = self.ctx.mul(lvl.v(d, n), &s.0);
                    if t == lvl.v(k, n) {
                        continue;
                    }
                    let sch = self.ctx.mul(&t, &self.ctx.inverse(lvl.v(k, n)));
                    if let Some(level) = self.absorb(sch, i + 1)? {
                        i = level + 1;
                        continue 'outer;
                    }
                }
            }
        }
        Ok(checked)
    }
}

/// Product replacement over a list of at least ten slots.
struct RandomElements<'c> {
    ctx: &'c Ctx,
    slots: Vec<Vec<u32>>,
    acc: Vec<u32>,
    rng: ChaCha8Rng,
}

impl<'c> RandomElements<'c> {
    fn new(ctx: &'c Ctx, gens: &[Vec<u32>], seed: u64) -> Self {
        let mut slots = Vec::new();
        while slots.len() < 10.max(gens.len()) {
            slots.extend(gens.iter().cloned());
        }
        let mut r = RandomElements { ctx, slots, acc: ctx.identity(), rng: ChaCha8Rng::seed_from_u64(seed) };
        for _ in 0..60 {
            r.next();
        }
        r
    }

    fn next(&mut self) -> Vec<u32> {
        let len = self.slots.len();
        let i = self.rng.gen_range(0..len);
        let mut j = self.rng.gen_range(0..len - 1);
        if j >= i {
            j += 1;
        }
        let prod = if self.rng.gen::<bool>() {
            self.ctx.mul(&self.slots[i], &self.slots[j])
        } else {
            self.ctx.mul(&self.slots[j], &self.slots[i])
        };
        self.slots[i] = prod;
        self.acc = self.ctx.mul(&self.acc, &self.slots[i]);
        self.acc.clone()
    }
}

/// Consecutive random elements that must sift to the identity before the
/// deterministic verification starts.
const RANDOM_QUIET: usize = 30;

/// Exact order of the group generated by `gens` acting on column vectors.
/// Random Schreier-Sims builds the chain; a full Schreier generator check
/// then certifies it, so the result never depends on luck, only the run
/// time does.
pub fn group_order(gens: &[Matrix], seed: u64, budget: &Budget) -> Result<GroupOrder, BsgsError> {
    let first = gens.first().ok_or(MatrixError::Empty)?;
    let n = first.require_square()?;
    let f = first.field().clone();
    for g in gens {
        if g.require_square()? != n || !crate::ff::Field::same(g.field(), &f) {
            return Err(MatrixError::SizeMismatch.into());
        }
        if g.det()?.is_zero() {
            return Err(MatrixError::Singular.into());
        }
    }
    let q = u64::from(f.q());
    if (n as f64) * (q as f64).log2() >= 63.0 {
        return Err(BsgsError::Unsupported { q: f.q(), n });
    }
    let ctx = Ctx { f: f.clone(), n, q };
    let raw: Vec<Vec<u32>> = gens.iter().map(|g| g.data().to_vec()).collect();
    let mut chain = Chain { ctx: Ctx { f, n, q }, levels: Vec::new(), budget, edges: 0, bytes: 0 };
    for g in &raw {
        chain.absorb(g.clone(), 0)?;
    }
    if !chain.levels.is_empty() {
        let mut rand = RandomElements::new(&ctx, &raw, seed);
        let mut quiet = 0;
        while quiet < RANDOM_QUIET {
            match chain.absorb(rand.next(), 0)? {
                Some(_) => quiet = 0,
                None => quiet += 1,
            }
        }
    }
    let checked = chain.verify()?;
    let orbit_sizes = chain.partial();
    let order = orbit_sizes.iter().map(|&s| s as u128).product::<u128>();
    let divides_gl = divides_gl_order(order, n as u32, ctx.q);
    Ok(GroupOrder {
        order,
        base: chain.levels.iter().map(|l| l.base.clone()).collect(),
        strong_generators: chain.levels.iter().map(|l| l.gens.len()).sum(),
        orbit_sizes,
        seed,
        verified: true,
        schreier_generators_checked: checked,
        divides_gl,
    })
}

/// `|GL_n(q)| = q^{n(n-1)/2} prod_{i=1}^{n} (q^i - 1)`, compared prime by
/// prime against `order`.
pub fn divides_gl_order(order: u128, n: u32, q: u64) -> Option<bool> {
    let (p, a) = prime_power(q)?;
    let mut exps: FxHashMap<u64, u64> = FxHashMap::default();
    *exps.entry(p).or_default() += u64::from(a) * u64::from(n * (n - 1) / 2);
    for i in 1..=n {
        let qi = crate::numtheory::checked_pow(q, i)?;
        for (r, e) in factor(qi - 1) {
            *exps.entry(r).or_default() += u64::from(e);
        }
    }
    let mut rest = order;
    for (&r, &e) in &exps {
        let mut k = 0;
        while k < e && rest.is_multiple_of(r as u128) {
            rest /= r as u128;
            k += 1;
        }
    }
    Some(rest == 1)
}

/// A candidate subgroup label and its order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub label: String,
    #[serde(serialize_with = "crate::bsgs::as_string")]
    pub order: u128,
}

pub fn g2_order(q: u128) -> u128 {
    q.pow(6) * (q.pow(6) - 1) * (q * q - 1)
}

pub fn psl2_order(q: u128) -> u128 {
    q * (q * q - 1) / if q.is_multiple_of(2) { 1 } else { 2 }
}

pub const J1_ORDER: u128 = 175_560;
pub const J2_ORDER: u128 = 604_800;
pub const SU3_3_ORDER: u128 = 6048;
pub const PSL2_13_ORDER: u128 = 1092;
pub const PSL2_8_ORDER: u128 = 504;
pub const TWO3_SL32_ORDER: u128 = 1344;

/// Candidate orders for subgroups of `G_2(q)`: the group itself, `G_2` of
/// proper subfields, the maximal irreducible subgroups for odd `q` with
/// their derived subgroups, and `J_2` for `q = 4`. Labels are unique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderTable {
    pub q: u64,
    pub entries: Vec<Candidate>,
}

impl OrderTable {
    pub fn for_field(q: u64) -> Self {
        let (p, a) = prime_power(q).expect("prime power");
        let qq = q as u128;
        let mut entries: Vec<Candidate> = Vec::new();
        let mut add = |label: String, order: u128| {
            if !entries.iter().any(|c| c.label == label) {
                entries.push(Candidate { label, order });
            }
        };
        add(format!("G₂({q})"), g2_order(qq));
        for d in (1..a).filter(|d| a % d == 0) {
            let q0 = p.pow(d);
            add(format!("G₂({q0})"), g2_order(q0 as u128));
        }
        if p == 2 {
            if q == 4 {
                add("J₂".into(), J2_ORDER);
            }
        } else {
            if a == 1 {
                add("2³·SL₃(2)".into(), TWO3_SL32_ORDER);
                add("G₂(2)".into(), g2_order(2));
                add("SU₃(3)".into(), SU3_3_ORDER);
            }
            add("PSL₂(13)".into(), PSL2_13_ORDER);
            add("PSL₂(8)".into(), PSL2_8_ORDER);
            if q == 11 {
                add("J₁".into(), J1_ORDER);
            }
            if p >= 7 && q >= 11 {
                add(format!("PGL₂({q})"), 2 * psl2_order(qq));
                add(format!("PSL₂({q})"), psl2_order(qq));
            }
            if p == 3 {
                add(format!("SL₃({q}):2"), 2 * qq.pow(3) * (qq * qq - 1) * (qq.pow(3) - 1));
                add(format!("SU₃({q}):2"), 2 * qq.pow(3) * (qq * qq - 1) * (qq.pow(3) + 1));
                if a % 2 == 1 {
                    add(format!("²G₂({q})"), qq.pow(3) * (qq.pow(3) + 1) * (qq - 1));
                }
            }
        }
        OrderTable { q, entries }
    }

    pub fn orders_distinct(&self) -> bool {
        let mut o: Vec<u128> = self.entries.iter().map(|c| c.order).collect();
        o.sort();
        o.windows(2).all(|w| w[0] != w[1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "label", rename_all = "lowercase")]
pub enum Identification {
    Known(String),
    Unknown,
}

/// The unique candidate whose order equals `order`.
pub fn identify(order: u128, table: &OrderTable) -> Identification {
    let mut hits = table.entries.iter().filter(|c| c.order == order);
    match (hits.next(), hits.next()) {
        (Some(c), None) => Identification::Known(c.label.clone()),
        _ => Identification::Unknown,
    }
}

pub fn identify_group(gens: &[Matrix], seed: u64, budget: &Budget, table: &OrderTable) -> Result<(GroupOrder, Identification), BsgsError> {
    let g = group_order(gens, seed, budget)?;
    let id = identify(g.order, table);
    Ok((g, id))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::{Field, FieldElement};
    use crate::seeds::{g2_odd, j2_generators};

    /// Brute-force closure for small groups.
    fn closure_size(gens: &[Matrix]) -> usize {
        let id = Matrix::identity(gens[0].field(), gens[0].rows());
        let mut seen = std::collections::HashSet::new();
        seen.insert(id.data().to_vec());
        let mut stack = vec![id];
        while let Some(g) = stack.pop() {
            for s in gens {
                let h = &g * s;
                if seen.insert(h.data().to_vec()) {
                    stack.push(h);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn small_groups_match_closure() {
        let f = Field::of_order(3).unwrap();
        let a = Matrix::from_ints(&f, &[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let b = Matrix::from_ints(&f, &[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let c = Matrix::from_ints(&f, &[vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 1]]).unwrap();
        for gens in [vec![a.clone()], vec![a.clone(), b.clone()], vec![a, b, c]] {
            let g = group_order(&gens, 1, &Budget::default()).unwrap();
            assert_eq!(g.order as usize, closure_size(&gens));
            assert_eq!(g.divides_gl, Some(true));
        }
        // SL_3(3) has order 5616, GL_3(3) 11232
    }

    #[test]
    fn general_linear_group_order() {
        let f = Field::of_order(3).unwrap();
        let a = Matrix::from_ints(&f, &[vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let b = Matrix::from_ints(&f, &[vec![2, 0, 1], vec![2, 0, 0], vec![0, 2, 0]]).unwrap();
        let g = group_order(&[a, b], 3, &Budget::default()).unwrap();
        assert_eq!(g.order, 11232);
    }

    #[test]
    fn identity_group() {
        let f = Field::of_order(5).unwrap();
        let g = group_order(&[Matrix::identity(&f, 4)], 0, &Budget::default()).unwrap();
        assert_eq!(g.order, 1);
        assert!(g.orbit_sizes.is_empty());
        assert_eq!(identify(1, &OrderTable::for_field(5)), Identification::Unknown);
    }

    #[test]
    fn j2_order_and_determinism() {
        let t = j2_generators();
        let a = group_order(&t.gens(), 42, &Budget::default()).unwrap();
        let b = group_order(&t.gens(), 42, &Budget::default()).unwrap();
        assert_eq!(a.order, J2_ORDER);
        assert_eq!(a, b);
        assert_eq!(identify(a.order, &OrderTable::for_field(4)), Identification::Known("J₂".into()));
        let c = group_order(&t.gens(), 7, &Budget::default()).unwrap();
        assert_eq!(c.order, J2_ORDER);
    }

    #[test]
    fn budget_is_enforced() {
        let t = j2_generators();
        let tight = Budget { max_orbit: Some(10), ..Budget::default() };
        match group_order(&t.gens(), 1, &tight) {
            Err(BsgsError::BudgetExceeded { partial, .. }) => assert!(!partial.is_empty()),
            other => panic!("expected budget error, got {other:?}"),
        }
        let edges = Budget { max_edges: 100, ..Budget::default() };
        assert!(matches!(group_order(&t.gens(), 1, &edges), Err(BsgsError::BudgetExceeded { .. })));
    }

    #[test]
    fn psl2_8_inside_the_odd_family() {
        let f = Field::of_order(17).unwrap();
        let t = g2_odd(&FieldElement::one(&f)).unwrap();
        let (g, id) = identify_group(&t.gens(), 5, &Budget::default(), &OrderTable::for_field(17)).unwrap();
        assert_eq!(g.order, PSL2_8_ORDER);
        assert_eq!(id, Identification::Known("PSL₂(8)".into()));
    }

    #[test]
    fn tables_have_distinct_orders() {
        for q in [4, 5, 7, 8, 9, 11, 13, 16, 17, 25, 27, 32, 64] {
            assert!(OrderTable::for_field(q).orders_distinct(), "q = {q}");
        }
        assert_eq!(g2_order(5), 5_859_000_000);
        assert_eq!(g2_order(8), 4_329_310_519_296);
        assert_eq!(psl2_order(8), PSL2_8_ORDER);
        assert_eq!(psl2_order(13), PSL2_13_ORDER);
        assert_eq!(g2_order(2), 12096);
    }

    #[test]
    fn gl_divisibility() {
        assert_eq!(divides_gl_order(11232, 3, 3), Some(true));
        assert_eq!(divides_gl_order(11232 * 5, 3, 3), Some(false));
        assert_eq!(divides_gl_order(J1_ORDER, 7, 11), Some(true));
    }
}
