use std::str::FromStr;

use hurwitz_core::bsgs::{group_order, identify, Budget, OrderTable};
use hurwitz_core::ff::{FieldElement, Fq};
use hurwitz_core::forms::{invariant_bilinear, invariant_quadratic_char2, invariant_trilinear, is_alternating, is_symmetric, AlternatingForm};
use hurwitz_core::matlin::io::{format_matrix, parse_matrices};
use hurwitz_core::matlin::{absolutely_irreducible, element_order, similarity_invariants, ElementOrder, Matrix, DEFAULT_ORDER_CAP};
use hurwitz_core::pipeline::{verify_lemma_symp_i, verify_lemma_symp_ii, verify_thm_main, verify_thm_p7, PipelineOptions};
use hurwitz_core::seeds::{
    build, check_conditions, commutator_data, count_bad_field_of_definition, field_of_definition_bound, invariants_match,
    search_r, ConditionReport, Family, RChoice, Triple,
};
use hurwitz_core::tensor::{fixed_dims, rigidity_class, FunctorKind};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::report::{CliError, Outcome};
use crate::{Command, FormKind, FormsArgs, GroupArgs, OrderArgs, ScottArgs, SearchArgs, SweepArgs, Theorem, VerifyArgs};

pub fn run(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Seed(a) => cmd_seed(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Scott(a) => cmd_scott(a),
        Command::Forms(a) => cmd_forms(a),
        Command::Order(a) => cmd_order(a),
        Command::SearchR(a) => cmd_search_r(a),
        Command::Sweep(a) => cmd_sweep(a),
    }
}

/// Generators resolved from a family or a file.
struct Group {
    triple: Option<Triple>,
    x: Matrix,
    y: Matrix,
    conditions: Option<ConditionReport>,
    inputs: Value,
}

impl Group {
    fn field(&self) -> &Fq {
        self.x.field()
    }

    fn gens(&self) -> [Matrix; 2] {
        [self.x.clone(), self.y.clone()]
    }
}

fn family_field(family: Family, q: Option<u64>) -> Result<Fq, CliError> {
    let q = match (family, q) {
        (Family::J1, None) => 11,
        (Family::J2, None) => 4,
        (_, Some(q)) => q,
        (_, None) => return Err(CliError::Usage(format!("--q is required for family {family}"))),
    };
    Ok(family.field(q)?)
}

fn resolve_r(family: Family, f: &Fq, r: &str) -> Result<FieldElement, CliError> {
    Ok(RChoice::from_str(r)?.resolve(family, f)?)
}

fn resolve_group(a: &GroupArgs) -> Result<Group, CliError> {
    if let Some(path) = &a.file {
        let text = std::fs::read_to_string(path)?;
        let ms = parse_matrices(&text)?;
        if ms.len() < 2 {
            return Err(CliError::Usage(format!("{} must hold at least two matrices", path.display())));
        }
        let (x, y) = (ms[0].clone(), ms[1].clone());
        if !hurwitz_core::ff::Field::same(x.field(), y.field()) || x.rows() != y.rows() {
            return Err(CliError::Usage("x and y must share field and size".into()));
        }
        let inputs = json!({ "file": path.display().to_string() });
        return Ok(Group { triple: None, x, y, conditions: None, inputs });
    }
    let family = a.family.ok_or_else(|| CliError::Usage("give --family or --file".into()))?;
    let f = family_field(family, a.q)?;
    let (r, conditions) = if family.has_parameter() {
        let r = resolve_r(family, &f, &a.r)?;
        let c = check_conditions(family, &r)?;
        (Some(r), Some(c))
    } else {
        (None, None)
    };
    let t = build(family, r.as_ref())?;
    let inputs = json!({
        "family": family.tag(),
        "q": t.q,
        "r": r.as_ref().map(ToString::to_string),
    });
    Ok(Group { x: t.x.clone(), y: t.y.clone(), triple: Some(t), conditions, inputs })
}

fn matrix_json(m: &Matrix) -> Value {
    let f = m.field();
    json!((0..m.rows())
        .map(|i| m.row(i).iter().map(|&c| FieldElement::new(f, c).to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn order_json(o: ElementOrder) -> Value {
    match o {
        ElementOrder::Exact(k) => json!(k),
        ElementOrder::Exceeded => json!(null),
    }
}

fn orders(ms: [&Matrix; 3]) -> Result<Vec<ElementOrder>, CliError> {
    ms.iter().map(|m| Ok(element_order(m, DEFAULT_ORDER_CAP)?)).collect()
}

fn hurwitz_orders(o: &[ElementOrder]) -> bool {
    o == [ElementOrder::Exact(2), ElementOrder::Exact(3), ElementOrder::Exact(7)]
}

fn cmd_seed(a: &GroupArgs) -> Result<Outcome, CliError> {
    let g = resolve_group(a)?;
    let xy = &g.x * &g.y;
    let o = orders([&g.x, &g.y, &xy])?;
    let inv: Vec<Vec<String>> = [&g.x, &g.y, &xy]
        .iter()
        .map(|m| Ok(similarity_invariants(m)?.iter().map(ToString::to_string).collect()))
        .collect::<Result<_, CliError>>()?;
    let inv_ok = match &g.triple {
        Some(t) => Some(invariants_match(t)?),
        None => None,
    };
    let matrix_file = format!("{}\n{}", format_matrix(&g.x), format_matrix(&g.y));
    let pass = g.conditions.as_ref().is_none_or(|c| c.all_ok);
    Ok(Outcome {
        field: Some(g.field().spec().to_string()),
        inputs: g.inputs,
        results: json!({
            "matrix_file": matrix_file,
            "x": matrix_json(&g.x),
            "y": matrix_json(&g.y),
            "xy": matrix_json(&xy),
            "orders": o.iter().map(|&k| order_json(k)).collect::<Vec<_>>(),
            "hurwitz_orders": hurwitz_orders(&o),
            "similarity_invariants": inv,
            "invariants_match": inv_ok,
            "conditions": g.conditions,
        }),
        pass,
    })
}

fn cmd_verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let family = match a.theorem {
        Theorem::P7 | Theorem::SympIi => Family::G2Odd,
        Theorem::Main | Theorem::SympI => Family::G2Even,
    };
    let f = family.field(a.q)?;
    let r = resolve_r(family, &f, &a.r)?;
    let budget = if a.large { Budget::large() } else { Budget::default() }.with_env();
    let opts = PipelineOptions { orders: a.orders, seed: a.seed, budget, corrupt_lift: a.corrupt_lift };
    let verdict = match a.theorem {
        Theorem::P7 => verify_thm_p7(&r, &opts)?,
        Theorem::Main => verify_thm_main(&r, &opts)?,
        Theorem::SympI => verify_lemma_symp_i(&r)?,
        Theorem::SympIi => verify_lemma_symp_ii(&r)?,
    };
    Ok(Outcome {
        field: Some(f.spec().to_string()),
        inputs: json!({ "q": a.q, "r": r.to_string(), "seed": a.seed, "orders": a.orders, "large": a.large, "corrupt_lift": a.corrupt_lift }),
        pass: verdict.pass,
        results: serde_json::to_value(&verdict).expect("verdict serializes"),
    })
}

fn cmd_scott(a: &ScottArgs) -> Result<Outcome, CliError> {
    let g = resolve_group(&a.group)?;
    let kinds: Vec<FunctorKind> = if a.functor == "all" {
        FunctorKind::ALL.to_vec()
    } else {
        a.functor
            .split(',')
            .map(|s| FunctorKind::from_str(s.trim()).map_err(|e| CliError::Usage(e.to_string())))
            .collect::<Result<_, _>>()?
    };
    let mut reports = Vec::new();
    let mut pass = true;
    for k in kinds {
        if k == FunctorKind::ExtCubeDual && g.x.rows() < 3 {
            continue;
        }
        let r = fixed_dims(&g.x, &g.y, k)?;
        pass &= r.holds;
        reports.push(serde_json::to_value(&r).expect("report serializes"));
    }
    let rig = rigidity_class(&g.x, &g.y)?;
    let field = g.field().spec().to_string();
    let mut inputs = g.inputs;
    inputs["functor"] = json!(a.functor);
    Ok(Outcome {
        field: Some(field),
        inputs,
        results: json!({ "reports": reports, "rigidity": { "irreducible": rig.irreducible, "rigid": rig.rigid, "slack": rig.slack } }),
        pass,
    })
}

fn cmd_forms(a: &FormsArgs) -> Result<Outcome, CliError> {
    let g = resolve_group(&a.group)?;
    let gens = g.gens();
    let want = |k: FormKind| matches!(a.kind, FormKind::All) || std::mem::discriminant(&a.kind) == std::mem::discriminant(&k);
    let mut results = serde_json::Map::new();
    if want(FormKind::Bilinear) {
        let b = invariant_bilinear(&gens)?;
        results.insert(
            "bilinear".into(),
            json!({
                "dim": b.len(),
                "basis": b.iter().map(matrix_json).collect::<Vec<_>>(),
                "symmetric": b.iter().map(is_symmetric).collect::<Vec<_>>(),
                "alternating": b.iter().map(is_alternating).collect::<Vec<_>>(),
            }),
        );
    }
    if want(FormKind::Quadratic) {
        let v = if g.field().p() == 2 {
            let qs = invariant_quadratic_char2(&gens)?;
            let f = g.field().clone();
            json!({
                "dim": qs.len(),
                "basis": qs.iter().map(|q| q.coeffs().iter().map(|&c| FieldElement::new(&f, c).to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            })
        } else {
            json!({ "dim": null, "skipped": "quadratic forms are solved in characteristic 2 only" })
        };
        results.insert("quadratic".into(), v);
    }
    if want(FormKind::Trilinear) && g.x.rows() >= 3 {
        let ts = invariant_trilinear(&gens)?;
        let tt = invariant_trilinear(&[g.x.transpose(), g.y.transpose()])?;
        results.insert(
            "trilinear".into(),
            json!({
                "dim": ts.len(),
                "dim_transposed": tt.len(),
                "basis": ts.iter().map(AlternatingForm::to_json).collect::<Vec<_>>(),
            }),
        );
    }
    let field = g.field().spec().to_string();
    let mut inputs = g.inputs;
    inputs["kind"] = json!(format!("{:?}", a.kind).to_lowercase());
    Ok(Outcome { field: Some(field), inputs, results: Value::Object(results), pass: true })
}

fn cmd_order(a: &OrderArgs) -> Result<Outcome, CliError> {
    let g = resolve_group(&a.group)?;
    let budget = if a.large { Budget::large() } else { Budget::default() }.with_env();
    let o = group_order(&g.gens(), a.seed, &budget)?;
    let q = u64::from(g.field().q());
    let id = identify(o.order, &OrderTable::for_field(q));
    let field = g.field().spec().to_string();
    let mut inputs = g.inputs;
    inputs["seed"] = json!(a.seed);
    inputs["large"] = json!(a.large);
    Ok(Outcome {
        field: Some(field),
        inputs,
        results: json!({
            "order": o.order.to_string(),
            "chain": o.orbit_sizes,
            "base": o.base,
            "verified": o.verified,
            "strong_generators": o.strong_generators,
            "schreier_generators_checked": o.schreier_generators_checked.to_string(),
            "divides_gl": o.divides_gl,
            "identified": id,
        }),
        pass: o.verified,
    })
}

fn cmd_search_r(a: &SearchArgs) -> Result<Outcome, CliError> {
    if !a.family.has_parameter() {
        return Err(CliError::Usage(format!("family {} has no parameter r", a.family)));
    }
    let f = a.family.field(a.q)?;
    let r = search_r(a.family, &f)?;
    let report = check_conditions(a.family, &r)?;
    let valid = f
        .elements()
        .filter(|&v| check_conditions(a.family, &FieldElement::new(&f, v)).is_ok_and(|c| c.all_ok))
        .count();
    let mut results = json!({ "r": r.to_string(), "conditions": report, "valid_count": valid });
    if a.family == Family::G2Even {
        let deg = f.degree();
        results["field_of_definition_failures"] = json!(count_bad_field_of_definition(deg)?);
        results["field_of_definition_bound"] = json!(field_of_definition_bound(deg));
    }
    Ok(Outcome {
        field: Some(f.spec().to_string()),
        inputs: json!({ "family": a.family.tag(), "q": a.q }),
        results,
        pass: true,
    })
}

/// One `(q, r)` row of a sweep; `Err` carries a message for rows that
/// cannot be built.
fn sweep_row(family: Family, f: &Fq, r: Option<FieldElement>) -> Result<(Value, bool), CliError> {
    let conditions = r.as_ref().map(|r| check_conditions(family, r)).transpose()?;
    let t = build(family, r.as_ref())?;
    let o = orders([&t.x, &t.y, &t.xy])?;
    let inv = invariants_match(&t)?;
    let irr = absolutely_irreducible(&t.gens())?;
    let rig = rigidity_class(&t.x, &t.y)?;
    let poly_ok = conditions.as_ref().map(|c| c.irreducible_poly_ok);
    let agrees = poly_ok.is_none_or(|p| p == irr);
    let commutator = match family {
        Family::G2Odd => Some(commutator_data(&t)?),
        _ => None,
    };
    let admissible = conditions.as_ref().is_none_or(|c| c.all_ok);
    let expected_ok = !admissible || (hurwitz_orders(&o) && inv && irr && rig.slack == 2);
    let comm_ok = commutator.as_ref().is_none_or(|c| c.charpoly_ok);
    let pass = expected_ok && agrees && comm_ok;
    Ok((
        json!({
            "q": f.q(),
            "r": r.as_ref().map(ToString::to_string),
            "conditions": conditions,
            "orders": o.iter().map(|&k| order_json(k)).collect::<Vec<_>>(),
            "invariants_match": inv,
            "absolutely_irreducible": irr,
            "irreducibility_agrees_with_polynomial": agrees,
            "conj_slack": rig.slack,
            "commutator": commutator,
            "pass": pass,
        }),
        pass,
    ))
}

fn cmd_sweep(a: &SweepArgs) -> Result<Outcome, CliError> {
    let mut jobs: Vec<(Fq, Option<FieldElement>)> = Vec::new();
    let qs: Vec<Option<u64>> = if a.family.has_parameter() { a.q.iter().copied().map(Some).collect() } else { vec![None] };
    for q in qs {
        let f = family_field(a.family, q)?;
        if !a.family.has_parameter() {
            jobs.push((f, None));
        } else if a.sweep_r {
            for v in f.elements() {
                let r = FieldElement::new(&f, v);
                if a.family == Family::G2Even && r.pow(4) == r {
                    continue;
                }
                jobs.push((f.clone(), Some(r)));
            }
        } else {
            let r = search_r(a.family, &f)?;
            jobs.push((f, Some(r)));
        }
    }
    let rows: Vec<Result<(Value, bool), CliError>> = jobs.par_iter().map(|(f, r)| sweep_row(a.family, f, r.clone())).collect();
    let mut out = Vec::with_capacity(rows.len());
    let mut pass = true;
    for r in rows {
        let (v, ok) = r?;
        pass &= ok;
        out.push(v);
    }
    Ok(Outcome {
        field: None,
        inputs: json!({ "family": a.family.tag(), "q": a.q, "sweep_r": a.sweep_r }),
        results: json!({ "rows": out, "count": out.len() }),
        pass,
    })
}
