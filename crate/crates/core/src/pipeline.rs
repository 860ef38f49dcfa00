//! End-to-end verification flows producing one verdict per `(family, q, r)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::bsgs::{identify_group, BsgsError, Budget, Identification, OrderTable};
use crate::ff::{FieldElement, FieldError};
use crate::forms::{
    dickson_criteria, has_invariant_complement, invariant_bilinear, invariant_quadratic_char2, invariant_trilinear,
    is_alternating, is_nondegenerate, is_symmetric, omega7_form, quasideterminant, sp6_to_omega7_lift,
    AlternatingForm, FormError, QuadraticForm,
};
use crate::matlin::{absolutely_irreducible, common_fixed_space, spin, Matrix, MatrixError, Subspace};
use crate::seeds::{check_conditions, g2_even, g2_odd, odd_six_pair, search_r, Family, SeedError, Triple};
use crate::tensor::{fixed_dims, FunctorKind, ScottReport, TensorError};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Seed(#[from] SeedError),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Bsgs(#[from] BsgsError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    ThmP7,
    ThmMain,
    LemmaSympI,
    LemmaSympII,
}

impl Target {
    pub fn tag(self) -> &'static str {
        match self {
            Target::ThmP7 => "thm_p7",
            Target::ThmMain => "thm_main",
            Target::LemmaSympI => "lemma_symp_i",
            Target::LemmaSympII => "lemma_symp_ii",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Step {
    pub name: &'static str,
    pub module: &'static str,
    pub operation: &'static str,
    pub pass: bool,
    pub evidence: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Inputs {
    pub family: Family,
    pub q: u64,
    pub r: String,
    pub field: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremVerdict {
    pub target: Target,
    pub inputs: Inputs,
    pub steps: Vec<Step>,
    pub pass: bool,
}

impl TheoremVerdict {
    fn new(target: Target, t: &Triple) -> Self {
        let r = t.r.as_ref().map_or_else(String::new, ToString::to_string);
        let inputs = Inputs { family: t.family, q: t.q, r, field: t.field().spec().to_string() };
        TheoremVerdict { target, inputs, steps: Vec::new(), pass: true }
    }

    fn push(&mut self, name: &'static str, module: &'static str, operation: &'static str, pass: bool, evidence: Value) {
        self.pass &= pass;
        self.steps.push(Step { name, module, operation, pass, evidence });
    }

    pub fn step(&self, name: &str) -> Option<&Step> {
        self.steps.iter().find(|s| s.name == name)
    }

    pub fn failed_steps(&self) -> Vec<&'static str> {
        self.steps.iter().filter(|s| !s.pass).map(|s| s.name).collect()
    }
}

#[derive(Clone, Debug)]
pub struct PipelineOptions {
    /// also compute the exact group order and identify the group
    pub orders: bool,
    pub seed: u64,
    pub budget: Budget,
    /// replace the lift's top row by zero (a negative control)
    pub corrupt_lift: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { orders: false, seed: 42, budget: Budget::default(), corrupt_lift: false }
    }
}

fn report_json(r: &ScottReport) -> Value {
    serde_json::to_value(r).expect("report serializes")
}

/// The fixed line of `z`, if its eigenvalue-1 space is one-dimensional.
fn fixed_line(z: &Matrix) -> Result<Option<Vec<u32>>, PipelineError> {
    let fix = common_fixed_space(std::slice::from_ref(z))?;
    Ok(if fix.dim() == 1 { Some(fix.basis()[0].clone()) } else { None })
}

fn vec_strings(f: &crate::ff::Fq, v: &[u32]) -> Vec<String> {
    v.iter().map(|&c| FieldElement::new(f, c).to_string()).collect()
}

fn order_step(verdict: &mut TheoremVerdict, gens: &[Matrix], q: u64, opts: &PipelineOptions) -> Result<(), PipelineError> {
    let table = OrderTable::for_field(q);
    let (g, id) = identify_group(gens, opts.seed, &opts.budget, &table)?;
    let full = format!("G₂({q})");
    let label = match &id {
        Identification::Known(l) => Some(l.clone()),
        Identification::Unknown => None,
    };
    let is_full = label.as_deref() == Some(full.as_str());
    verdict.push(
        "group_identification",
        "bsgs",
        "identify",
        label.is_some(),
        json!({
            "order": g.order.to_string(),
            "orbit_sizes": g.orbit_sizes,
            "verified": g.verified,
            "divides_gl": g.divides_gl,
            "identified": label,
            "is_full_g2": is_full,
            "proper_subgroup_flag": !is_full,
        }),
    );
    Ok(())
}

/// The odd-characteristic flow: irreducibility, an invariant symmetric form,
/// the Scott count on `Λ^3(V*)`, the unique invariant trilinear form and
/// the Dickson criteria.
pub fn verify_thm_p7(r: &FieldElement, opts: &PipelineOptions) -> Result<TheoremVerdict, PipelineError> {
    let cond = check_conditions(Family::G2Odd, r)?;
    if !cond.irreducible_poly_ok {
        return Err(PipelineError::Precondition(format!("r = {r} is a root of r^2 + 15r + 100")));
    }
    let t = g2_odd(r)?;
    let gens = t.gens();
    let mut v = TheoremVerdict::new(Target::ThmP7, &t);

    let irr = absolutely_irreducible(&gens)?;
    v.push("absolute_irreducibility", "matlin", "absolutely_irreducible", irr, json!({ "irreducible": irr }));

    let bil = invariant_bilinear(&gens)?;
    let ok = bil.len() == 1 && is_symmetric(&bil[0]) && is_nondegenerate(&bil[0]);
    v.push(
        "invariant_symmetric_form",
        "forms",
        "invariant_bilinear",
        ok,
        json!({ "dim": bil.len(), "symmetric": bil.iter().all(is_symmetric), "nondegenerate": bil.iter().all(is_nondegenerate) }),
    );

    let rep = fixed_dims(&t.x, &t.y, FunctorKind::ExtCubeDual)?;
    let ok = rep.dims == [19, 13, 5] && rep.module_dim == 35 && rep.d_h == 1 && rep.d_h_hat == 1 && rep.holds;
    v.push("scott_ext3dual", "tensor", "fixed_dims", ok, report_json(&rep));

    let forms = invariant_trilinear(&gens)?;
    v.push(
        "invariant_trilinear_form",
        "forms",
        "invariant_trilinear",
        forms.len() == 1,
        json!({ "dim": forms.len(), "forms": forms.iter().map(AlternatingForm::to_json).collect::<Vec<_>>() }),
    );

    let v0 = fixed_line(&t.xy)?;
    let crit = match (&v0, forms.first()) {
        (Some(v0), Some(f)) if forms.len() == 1 => Some(dickson_criteria(f, &gens, v0)?),
        _ => None,
    };
    v.push(
        "dickson_criteria",
        "forms",
        "dickson_criteria",
        crit.as_ref().is_some_and(|c| c.passes),
        json!({ "v0": v0.as_ref().map(|x| vec_strings(t.field(), x)), "criteria": crit }),
    );

    if opts.orders {
        order_step(&mut v, &gens, t.q, opts)?;
    }
    Ok(v)
}

/// Quadratic-form preservation on basis vectors, pairwise sums and `extra`
/// random vectors.
fn preserves_quadratic(g: &Matrix, q: &QuadraticForm, extra: usize, rng: &mut ChaCha8Rng) -> bool {
    let n = g.rows();
    let qf = g.field().q();
    let mut probes: Vec<Vec<u32>> = (0..n).map(|i| crate::matlin::unit(n, i)).collect();
    for a in 0..n {
        for b in a + 1..n {
            let mut v = vec![0; n];
            v[a] = 1;
            v[b] = 1;
            probes.push(v);
        }
    }
    for _ in 0..extra {
        probes.push((0..n).map(|_| rng.gen_range(0..qf)).collect());
    }
    probes.iter().all(|v| q.eval(&g.mul_vec(v)) == q.eval(v))
}

/// Exponents `i` with `z w_i = ε^i w_i` for an eigenbasis `w_0..w_6` over
/// the smallest extension containing `ε`, and the support of `f` in it.
fn eigenbasis_support(z: &Matrix, f: &AlternatingForm) -> Result<Value, PipelineError> {
    let base = z.field();
    let (ext, emb, eps) = base.root_of_unity_extension(7)?;
    let ze = z.embed(&emb)?;
    let mut cols = Vec::new();
    for i in 0..7u128 {
        let lam = ext.pow(eps, i);
        let shifted = &ze - &Matrix::scalar(&ext, 7, lam);
        let ns = shifted.nullspace();
        if ns.len() != 1 {
            return Ok(json!({ "diagonalizable": false, "pass": false }));
        }
        cols.push(ns[0].clone());
    }
    let p = Matrix::from_columns(&ext, 7, &cols);
    let coeffs: Vec<u32> = f.to_vector().into_iter().map(|c| emb.map(c)).collect();
    let fe = AlternatingForm::trilinear_from_vector(&ext, 7, &coeffs).pullback(&p);
    let support: Vec<Vec<usize>> = fe.support().map(|(k, _)| k.clone()).collect();
    let ok = support.iter().all(|t| t.iter().sum::<usize>() % 7 == 0);
    Ok(json!({
        "extension": ext.spec().to_string(),
        "epsilon": FieldElement::new(&ext, eps).to_string(),
        "diagonalizable": true,
        "support": support,
        "support_sum_zero_mod_7": ok,
        "pass": ok && !support.is_empty(),
    }))
}

/// The action induced on `V / <v0>`.
fn quotient_action(gens: &[Matrix], v0: &[u32]) -> Result<Vec<Matrix>, PipelineError> {
    let f = gens[0].field();
    let n = v0.len();
    let mut cols = vec![v0.to_vec()];
    let mut span = Subspace::span(f, n, &cols)?;
    for i in 0..n {
        let e = crate::matlin::unit(n, i);
        if !span.contains(&e) {
            cols.push(e);
            span = Subspace::span(f, n, &cols)?;
        }
    }
    let p = Matrix::from_columns(f, n, &cols);
    let pinv = p.inverse()?;
    gens.iter()
        .map(|g| {
            let c = &(&pinv * g) * &p;
            let data: Vec<u32> = (1..n).flat_map(|i| (1..n).map(move |j| (i, j))).map(|(i, j)| c.raw(i, j)).collect();
            Ok(Matrix::new(f, n - 1, n - 1, data)?)
        })
        .collect()
}

/// The characteristic-2 flow: the symplectic form, the quasideterminant,
/// the lift to `Ω_7`, trilinear forms on both sides, the subspace lattice
/// and the Dickson criteria.
pub fn verify_thm_main(r: &FieldElement, opts: &PipelineOptions) -> Result<TheoremVerdict, PipelineError> {
    let cond = check_conditions(Family::G2Even, r)?;
    if !cond.all_ok {
        return Err(PipelineError::Precondition(format!(
            "r = {r} fails the conditions (polynomial {}, field of definition {}, outside GF(4) {})",
            cond.irreducible_poly_ok, cond.field_of_definition_ok, cond.special_exclusion_ok
        )));
    }
    let t = g2_even(r)?;
    let f = t.field().clone();
    let gens6 = t.gens();
    let mut v = TheoremVerdict::new(Target::ThmMain, &t);

    let bil = invariant_bilinear(&gens6)?;
    let ok = bil.len() == 1 && is_alternating(&bil[0]) && is_nondegenerate(&bil[0]);
    v.push("symplectic_form", "forms", "invariant_bilinear", ok, json!({ "dim": bil.len(), "alternating": bil.iter().all(is_alternating), "nondegenerate": bil.iter().all(is_nondegenerate) }));
    let Some(j) = bil.first().filter(|_| ok) else {
        v.push("symplectic_form_missing", "forms", "invariant_bilinear", false, Value::Null);
        return Ok(v);
    };

    let qd = quasideterminant(&t.x)?;
    v.push("quasideterminant", "forms", "quasideterminant", qd == -1, json!({ "x": qd }));

    let quad = invariant_quadratic_char2(&gens6)?;
    v.push("no_invariant_quadratic", "forms", "invariant_quadratic_char2", quad.is_empty(), json!({ "dim": quad.len() }));

    let q6 = QuadraticForm::from_alternating_gram(j);
    let q7 = omega7_form(&q6);
    let lift = |g: &Matrix| -> Result<Matrix, PipelineError> {
        let l = sp6_to_omega7_lift(g, &q6)?;
        if !opts.corrupt_lift {
            return Ok(l);
        }
        let mut c = l.clone();
        for k in 1..7 {
            c.set_raw(0, k, 0);
        }
        Ok(c)
    };
    let (lx, ly) = (lift(&t.x)?, lift(&t.y)?);
    let lxy = lift(&t.xy)?;
    let gens7 = [lx.clone(), ly.clone()];
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let a_x: Vec<u32> = (1..7).map(|k| lx.raw(0, k)).collect();
    let multiplicative = &lx * &ly == lxy && (&lx * &lx).is_identity() && (&(&ly * &ly) * &ly).is_identity();
    let preserves = [&lx, &ly].iter().all(|g| preserves_quadratic(g, &q7, 200, &mut rng));
    let fixed_row = t.x.vec_mul(&a_x) == a_x;
    let nonzero = a_x.iter().any(|&c| c != 0);
    v.push(
        "omega7_lift",
        "forms",
        "sp6_to_omega7_lift",
        multiplicative && preserves && fixed_row,
        json!({
            "multiplicative": multiplicative,
            "preserves_q7": preserves,
            "a_x_fixed_by_x6": fixed_row,
            "a_x": vec_strings(&f, &a_x),
            "a_x_nonzero": nonzero,
            "corrupted": opts.corrupt_lift,
        }),
    );

    let d6 = invariant_trilinear(&gens6)?.len();
    let d6t = invariant_trilinear(&t.transposed_gens())?.len();
    v.push("trilinear_h6", "forms", "invariant_trilinear", d6 == 0 && d6t == 0, json!({ "h6": d6, "h6_transposed": d6t }));

    let forms7 = invariant_trilinear(&gens7)?;
    let gens7t = [lx.transpose(), ly.transpose()];
    let d7t = invariant_trilinear(&gens7t)?.len();
    v.push(
        "trilinear_h7",
        "forms",
        "invariant_trilinear",
        forms7.len() == 1,
        json!({ "h7": forms7.len(), "h7_transposed": d7t, "forms": forms7.iter().map(AlternatingForm::to_json).collect::<Vec<_>>() }),
    );

    let v0 = fixed_line(&lxy)?;
    if let Some(form) = forms7.first() {
        let ev = eigenbasis_support(&lxy, form)?;
        let pass = ev["pass"].as_bool().unwrap_or(false);
        v.push("eigenbasis_support", "forms", "AlternatingForm::pullback", pass, ev);
    } else {
        v.push("eigenbasis_support", "forms", "AlternatingForm::pullback", false, json!({ "reason": "no invariant trilinear form" }));
    }

    let Some(v0) = v0 else {
        v.push("fixed_line", "matlin", "common_fixed_space", false, json!({ "reason": "eigenvalue-1 space of the lifted product is not a line" }));
        return Ok(v);
    };
    let complement = has_invariant_complement(&gens7, &v0)?;
    v.push(
        "no_invariant_complement",
        "forms",
        "has_invariant_complement",
        !complement,
        json!({ "v0": vec_strings(&f, &v0), "complement_exists": complement }),
    );

    let line = Subspace::span(&f, 7, std::slice::from_ref(&v0))?;
    let line_inv = line.is_invariant(&gens7);
    let quotient_irr = line_inv && absolutely_irreducible(&quotient_action(&gens7, &v0)?)?;
    let w = line.annihilator();
    let w_inv = w.is_invariant(&gens7t);
    let w_spins: Vec<usize> = w.basis().iter().map(|b| spin(&gens7t, &Subspace::span(&f, 7, std::slice::from_ref(b)).expect("vector")).map(|s| s.dim())).collect::<Result<_, _>>()?;
    let lattice_ok = line_inv && quotient_irr && !complement && w_inv && w.dim() == 6;
    v.push(
        "submodule_lattice",
        "matlin",
        "Subspace::is_invariant",
        lattice_ok,
        json!({
            "line_invariant": line_inv,
            "quotient_absolutely_irreducible": quotient_irr,
            "complement_exists": complement,
            "h7_lattice_dims": if lattice_ok { json!([0, 1, 7]) } else { Value::Null },
            "w_dim": w.dim(),
            "w_invariant_under_transposes": w_inv,
            "w_basis_spins": w_spins,
            "h7_transposed_lattice_dims": if lattice_ok { json!([0, 6, 7]) } else { Value::Null },
        }),
    );

    let crit = match forms7.first() {
        Some(form) if forms7.len() == 1 => Some(dickson_criteria(form, &gens7, &v0)?),
        _ => None,
    };
    v.push("dickson_criteria", "forms", "dickson_criteria", crit.as_ref().is_some_and(|c| c.passes), json!({ "criteria": crit }));

    if opts.orders {
        order_step(&mut v, &gens6, t.q, opts)?;
    }
    Ok(v)
}

/// One row of the Scott dimension inventory.
#[derive(Clone, Debug, Serialize)]
pub struct ScottRow {
    pub name: &'static str,
    pub family: String,
    pub q: u64,
    pub r: String,
    pub report: ScottReport,
    /// The bound `d̂ <= d <= 1` for symmetric squares; `None` elsewhere
    pub hat_bound: Option<bool>,
    pub expected: bool,
}

fn row(name: &'static str, t: &Triple, family: &str, report: ScottReport, expected: impl Fn(&ScottReport) -> bool) -> ScottRow {
    let hat_bound = (report.functor == FunctorKind::SymSquare).then_some(report.d_h_hat <= report.d_h && report.d_h <= 1);
    let expected = expected(&report) && report.holds && hat_bound.unwrap_or(true);
    ScottRow {
        name,
        family: family.to_string(),
        q: t.q,
        r: t.r.as_ref().map_or_else(String::new, ToString::to_string),
        report,
        hat_bound,
        expected,
    }
}

/// The dimension inventory behind the symplectic and orthogonal containments
/// plus the conjugation modules. `r` values default to [`search_r`].
pub fn verify_scott_tables(even: &FieldElement, odd: &FieldElement) -> Result<Vec<ScottRow>, PipelineError> {
    let te = g2_even(even)?;
    let to = g2_odd(odd)?;
    let (x6, y6) = odd_six_pair();
    let t6 = Triple { family: Family::G2Odd, q: 11, r: None, xy: &x6 * &y6, x: x6, y: y6 };
    let mut rows = Vec::new();
    rows.push(row("ext2_n6_odd_char", &t6, "odd_six_pair", fixed_dims(&t6.x, &t6.y, FunctorKind::ExtSquare)?, |r| {
        r.module_dim == 15 && r.dims[0] == 9 && r.dims[1] >= 5 && r.dims[2] >= 3 && r.d_h + r.d_h_hat >= 2
    }));
    rows.push(row("sym2_n6_char2", &te, "g2even", fixed_dims(&te.x, &te.y, FunctorKind::SymSquare)?, |r| {
        r.module_dim == 21 && r.dims == [12, 7, 3]
    }));
    rows.push(row("sym2_n7", &to, "g2odd", fixed_dims(&to.x, &to.y, FunctorKind::SymSquare)?, |r| {
        r.module_dim == 28 && r.dims == [16, 10, 4] && r.d_h == 1 && r.d_h_hat == 1
    }));
    rows.push(row("ext3dual_n7", &to, "g2odd", fixed_dims(&to.x, &to.y, FunctorKind::ExtCubeDual)?, |r| {
        r.module_dim == 35 && r.dims == [19, 13, 5] && r.d_h == 1 && r.d_h_hat == 1
    }));
    rows.push(row("conj_n6", &te, "g2even", fixed_dims(&te.x, &te.y, FunctorKind::ConjMat)?, |r| {
        r.dims == [18, 12, 6] && r.slack() == 2
    }));
    rows.push(row("conj_n7", &to, "g2odd", fixed_dims(&to.x, &to.y, FunctorKind::ConjMat)?, |r| {
        r.dims == [25, 17, 7] && r.slack() == 2
    }));
    Ok(rows)
}

/// [`verify_scott_tables`] with `search_r` parameters over GF(q_even) and
/// GF(q_odd).
pub fn verify_scott_tables_auto(q_even: u64, q_odd: u64) -> Result<Vec<ScottRow>, PipelineError> {
    let fe = Family::G2Even.field(q_even)?;
    let fo = Family::G2Odd.field(q_odd)?;
    verify_scott_tables(&search_r(Family::G2Even, &fe)?, &search_r(Family::G2Odd, &fo)?)
}

/// Containment in `Sp_6` for the 6-dimensional families: the symmetric-
/// square count in characteristic 2, the exterior-square count in odd
/// characteristic, and the invariant alternating form itself.
pub fn verify_lemma_symp_i(r: &FieldElement) -> Result<TheoremVerdict, PipelineError> {
    let t = g2_even(r)?;
    let mut v = TheoremVerdict::new(Target::LemmaSympI, &t);
    let irr = absolutely_irreducible(&t.gens())?;
    v.push("absolute_irreducibility", "matlin", "absolutely_irreducible", irr, json!({ "irreducible": irr }));
    let s = fixed_dims(&t.x, &t.y, FunctorKind::SymSquare)?;
    let ok = s.dims == [12, 7, 3] && s.module_dim == 21 && s.holds && s.d_h_hat <= s.d_h && s.d_h <= 1 && s.d_h == 1;
    v.push("scott_sym2_char2", "tensor", "fixed_dims", ok, report_json(&s));
    let (x6, y6) = odd_six_pair();
    let e = fixed_dims(&x6, &y6, FunctorKind::ExtSquare)?;
    let ok = e.module_dim == 15 && e.dims[0] == 9 && e.dims[1] >= 5 && e.dims[2] >= 3 && e.d_h + e.d_h_hat >= 2 && e.holds;
    v.push("scott_ext2_odd_char", "tensor", "fixed_dims", ok, report_json(&e));
    let bil = invariant_bilinear(&t.gens())?;
    let ok = bil.len() == 1 && is_alternating(&bil[0]) && is_nondegenerate(&bil[0]);
    v.push("symplectic_form", "forms", "invariant_bilinear", ok, json!({ "dim": bil.len() }));
    Ok(v)
}

/// Containment in `Ω_7` for the odd family: the symmetric-square count
/// forcing `d = d̂ = 1` and the invariant symmetric form.
pub fn verify_lemma_symp_ii(r: &FieldElement) -> Result<TheoremVerdict, PipelineError> {
    let t = g2_odd(r)?;
    let mut v = TheoremVerdict::new(Target::LemmaSympII, &t);
    let irr = absolutely_irreducible(&t.gens())?;
    v.push("absolute_irreducibility", "matlin", "absolutely_irreducible", irr, json!({ "irreducible": irr }));
    let s = fixed_dims(&t.x, &t.y, FunctorKind::SymSquare)?;
    let ok = s.dims == [16, 10, 4] && s.module_dim == 28 && s.d_h == 1 && s.d_h_hat == 1 && s.holds;
    v.push("scott_sym2_n7", "tensor", "fixed_dims", ok, report_json(&s));
    let bil = invariant_bilinear(&t.gens())?;
    let ok = bil.len() == 1 && is_symmetric(&bil[0]) && is_nondegenerate(&bil[0]);
    v.push("orthogonal_form", "forms", "invariant_bilinear", ok, json!({ "dim": bil.len() }));
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::Field;

    #[test]
    fn p7_passes_at_eleven() {
        let f = Field::of_order(11).unwrap();
        let v = verify_thm_p7(&FieldElement::zero(&f), &PipelineOptions::default()).unwrap();
        assert!(v.pass, "failed: {:?}", v.failed_steps());
        assert_eq!(v.steps.len(), 5);
    }

    #[test]
    fn p7_rejects_exceptional_r() {
        let f = Field::of_order(7).unwrap();
        let bad = f.elements().find(|&r| crate::seeds::odd_exception_poly(&f).eval(r) == 0).unwrap();
        assert!(matches!(
            verify_thm_p7(&FieldElement::new(&f, bad), &PipelineOptions::default()),
            Err(PipelineError::Precondition(_))
        ));
    }

    #[test]
    fn main_passes_at_eight() {
        let f = Field::of_order(8).unwrap();
        let r = FieldElement::new(&f, f.primitive_element());
        let v = verify_thm_main(&r, &PipelineOptions::default()).unwrap();
        assert!(v.pass, "failed: {:?}", v.failed_steps());
        assert_eq!(v.step("eigenbasis_support").unwrap().evidence["support"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn corrupted_lift_acquires_a_complement() {
        let f = Field::of_order(8).unwrap();
        let r = FieldElement::new(&f, f.primitive_element());
        let opts = PipelineOptions { corrupt_lift: true, ..PipelineOptions::default() };
        let v = verify_thm_main(&r, &opts).unwrap();
        assert!(!v.pass);
        assert!(!v.step("no_invariant_complement").unwrap().pass);
        assert!(!v.step("omega7_lift").unwrap().pass);
    }

    #[test]
    fn scott_rows_meet_expectations() {
        for row in verify_scott_tables_auto(8, 11).unwrap() {
            assert!(row.expected, "{}: {:?}", row.name, row.report);
        }
    }

    #[test]
    fn lemma_verdicts() {
        let f8 = Field::of_order(8).unwrap();
        assert!(verify_lemma_symp_i(&FieldElement::generator_t(&f8)).unwrap().pass);
        let f11 = Field::of_order(11).unwrap();
        assert!(verify_lemma_symp_ii(&FieldElement::zero(&f11)).unwrap().pass);
    }
}
