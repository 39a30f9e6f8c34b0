use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use super::document::{check_json, estimate_json, int_check_json, rational_json, sequence_json, ResultDocument};
use super::taskfile::{ComplexKind, TaskKind, TaskSpec};
use crate::algebra::Polynomial;
use crate::charp::{bi_surjection_bound, koszul_complex, resolve_ideal, tor_length, QuotientRing};
use crate::error::{Error, Result};
use crate::groebner::{limits, Ideal};
use crate::invariants::{
    cm_depth, corollary_check, ehk_sequence, extrapolate, inequality_suite, kunz_test, lemma_check,
    monomial_ehk_exact, regularity_report, ti_sequence,
};

pub const DEFAULT_N_MAX: u32 = 3;
pub const DEFAULT_TOL: f64 = 0.05;
pub const DEFAULT_ALTERNATING: usize = 2;

/// Command-line overrides applied on top of the task parameters.
#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub max_n: Option<u32>,
    pub tol: Option<f64>,
    pub timeout: Option<Duration>,
}

struct Context {
    ring: QuotientRing,
    ideal: Ideal,
    n_max: u32,
    tol: BigRational,
}

fn build_ring(spec: &TaskSpec) -> Result<QuotientRing> {
    let s = spec.poly_ring()?;
    let rels = spec.relations.iter().map(|r| s.parse(r)).collect::<Result<Vec<_>>>()?;
    QuotientRing::new(s, rels)
}

fn build_ideal(spec: &TaskSpec, ring: &QuotientRing) -> Result<Ideal> {
    let s = ring.poly_ring();
    match &spec.ideal {
        None => ring.maximal_ideal(),
        Some(gens) => {
            let gens = gens.iter().map(|g| s.parse(g)).collect::<Result<Vec<Polynomial>>>()?;
            if let Some(g) = gens.iter().find(|g| !g.is_homogeneous()) {
                return Err(Error::NotHomogeneous(s.format(g)));
            }
            Ideal::new(s, gens)
        }
    }
}

/// The exact value of the shortest decimal rendering of `t`.
fn decimal_rational(t: f64) -> Result<BigRational> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::Parse(format!("tolerance must be a nonnegative number, got {t}")));
    }
    let text = t.to_string();
    let (int, frac) = text.split_once('.').unwrap_or((&text, ""));
    let digits: BigInt = format!("{int}{frac}").parse().expect("decimal digits");
    Ok(BigRational::new(digits, num_traits::pow(BigInt::from(10), frac.len())))
}

/// Runs a task under the given overrides. Output is deterministic apart from `elapsed_ms`.
pub fn run_task(spec: &TaskSpec, opts: &RunOptions) -> Result<ResultDocument> {
    let start = Instant::now();
    let deadline = opts.timeout.map(|t| start + t);
    let mut doc = limits::with_deadline(deadline, || dispatch(spec, opts))?;
    doc.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    Ok(doc)
}

fn dispatch(spec: &TaskSpec, opts: &RunOptions) -> Result<ResultDocument> {
    let mut doc = ResultDocument::new(spec.kind.name());
    if spec.kind == TaskKind::MonomialEhk {
        return monomial(spec, doc);
    }
    let ring = build_ring(spec)?;
    let ideal = build_ideal(spec, &ring)?;
    let n_max = opts.max_n.or(spec.params.n_max).unwrap_or(DEFAULT_N_MAX);
    let tol = opts.tol.or(spec.params.tol).unwrap_or(DEFAULT_TOL);
    let tol = decimal_rational(tol)?;
    doc.ring.insert("p".into(), json!(spec.p));
    doc.ring.insert("dim".into(), json!(ring.dim()));
    doc.ring.insert("vars".into(), json!(spec.vars));
    doc.ring.insert("relations".into(), json!(spec.relations));
    doc.ring.insert("graded".into(), json!(ring.is_graded()));
    doc.ring.insert("cm".into(), Value::Null);
    let ctx = Context { ring, ideal, n_max, tol };
    match spec.kind {
        TaskKind::Ehk => ehk(&ctx, &mut doc)?,
        TaskKind::Tor => tor(spec, &ctx, &mut doc)?,
        TaskKind::Kunz => kunz(&ctx, &mut doc)?,
        TaskKind::Check => check(spec, &ctx, &mut doc)?,
        TaskKind::Lemma => lemma(spec, &ctx, &mut doc)?,
        TaskKind::Corollary => corollary(&ctx, &mut doc)?,
        TaskKind::BiBound => bi_bound(spec, &ctx, &mut doc)?,
        TaskKind::MonomialEhk => unreachable!(),
    }
    Ok(doc)
}

fn ehk(ctx: &Context, doc: &mut ResultDocument) -> Result<()> {
    let s = ehk_sequence(&ctx.ring, &ctx.ideal, ctx.n_max)?;
    doc.estimates.insert("e_hk".into(), estimate_json(&extrapolate(&s)));
    doc.sequences.insert("colength".into(), sequence_json(&s));
    Ok(())
}

fn tor(spec: &TaskSpec, ctx: &Context, doc: &mut ResultDocument) -> Result<()> {
    let i = spec.params.i.unwrap_or(1);
    if let Some(n) = spec.params.n {
        let len = tor_length(&ctx.ring, &ctx.ideal, i, n)?;
        doc.results.insert("i".into(), json!(i));
        doc.results.insert("n".into(), json!(n));
        doc.results.insert("length".into(), json!(len));
        return Ok(());
    }
    if i == 0 {
        return ehk(ctx, doc);
    }
    let s = ti_sequence(&ctx.ring, &ctx.ideal, i, ctx.n_max)?;
    doc.estimates.insert(format!("t_{i}"), estimate_json(&extrapolate(&s)));
    doc.sequences.insert(format!("tor_{i}"), sequence_json(&s));
    Ok(())
}

fn kunz(ctx: &Context, doc: &mut ResultDocument) -> Result<()> {
    let k = kunz_test(&ctx.ring)?;
    doc.results.insert("kunz_regular".into(), json!(k.regular));
    doc.results.insert("colength".into(), json!(k.colength));
    doc.results.insert("expected".into(), json!(k.expected));
    Ok(())
}

fn q_list(spec: &TaskSpec, ring: &QuotientRing) -> Result<Vec<u64>> {
    match &spec.params.q_list {
        Some(q) => Ok(q.clone()),
        None => Ok(vec![ring.p_pow(1)?, ring.p_pow(2)?]),
    }
}

fn check(spec: &TaskSpec, ctx: &Context, doc: &mut ResultDocument) -> Result<()> {
    let ring = &ctx.ring;
    let rep = regularity_report(ring, ctx.n_max, &ctx.tol)?;
    doc.ring.insert("cm".into(), json!(cm_depth(ring)?.is_cm));
    doc.results.insert("kunz_regular".into(), json!(rep.kunz.regular));
    doc.results.insert("verdict".into(), json!(rep.verdict.name()));
    doc.sequences.insert("colength".into(), sequence_json(&rep.sequences.colength));
    doc.sequences.insert("tor_1".into(), sequence_json(&rep.sequences.tor1));
    doc.sequences.insert("tor_2".into(), sequence_json(&rep.sequences.tor2));
    doc.estimates.insert("e_hk".into(), estimate_json(&rep.e_hk));
    doc.estimates.insert("t_1".into(), estimate_json(&rep.t1));
    doc.estimates.insert("t_2".into(), estimate_json(&rep.t2));
    for c in &rep.criteria {
        doc.checks.insert(c.name.clone(), check_json(c));
    }
    doc.notices.extend(rep.notices);

    let alternating = spec.params.alternating.unwrap_or(DEFAULT_ALTERNATING);
    let ineq = inequality_suite(ring, &ctx.ideal, ctx.n_max, &q_list(spec, ring)?, &ctx.tol, alternating)?;
    for row in &ineq.rows {
        let tag = format!("n{}_q{}", row.n, row.q);
        doc.checks.insert(format!("finite_1_{tag}"), int_check_json(row.first.0, row.first.1));
        doc.checks.insert(format!("finite_2_{tag}"), int_check_json(row.second.0, row.second.1));
    }
    for c in &ineq.estimate_checks {
        doc.checks.insert(c.name.clone(), check_json(c));
    }
    if !ineq.cm {
        doc.notices.push("ring is not Cohen-Macaulay; alternating sums are informational".into());
    }
    Ok(())
}

fn lemma(spec: &TaskSpec, ctx: &Context, doc: &mut ResultDocument) -> Result<()> {
    if spec.ideal.is_none() {
        return Err(Error::Precondition("the lemma task needs an `ideal:` line with a system of parameters".into()));
    }
    let rep = lemma_check(&ctx.ring, ctx.ideal.generators(), ctx.n_max)?;
    doc.ring.insert("cm".into(), json!(cm_depth(&ctx.ring)?.is_cm));
    doc.sequences.insert("tor_1".into(), sequence_json(&rep.tor1));
    doc.sequences.insert("koszul_h1".into(), sequence_json(&rep.koszul_h1));
    for (name, s, holds) in [("tor_1_decreasing", &rep.tor1, rep.tor1_decreasing), ("koszul_h1_decreasing", &rep.koszul_h1, rep.koszul_decreasing)] {
        let a = s.normalized();
        doc.checks.insert(
            name.into(),
            json!({
                "holds": holds,
                "lhs": rational_json(a.last().unwrap()),
                "rhs": rational_json(a.first().unwrap()),
                "tolerance": rational_json(&BigRational::from_integer(BigInt::from(0))),
                "informational": false,
            }),
        );
    }
    for &(n, h1, t1, _) in &rep.bounds {
        doc.checks.insert(format!("koszul_bound_n{n}"), int_check_json(h1 as u128, t1 as u128));
    }
    Ok(())
}

fn corollary(ctx: &Context, doc: &mut ResultDocument) -> Result<()> {
    let rep = corollary_check(&ctx.ring, ctx.n_max, &ctx.tol)?;
    doc.ring.insert("cm".into(), json!(rep.depth.is_cm));
    doc.results.insert("depth".into(), json!(rep.depth.depth));
    doc.results.insert("multiplicity".into(), json!(rep.multiplicity));
    doc.results.insert("skipped".into(), json!(rep.skipped.is_some()));
    if let Some(msg) = rep.skipped {
        doc.notices.push(msg);
        return Ok(());
    }
    if let Some(e) = &rep.e_hk {
        doc.estimates.insert("e_hk".into(), estimate_json(e));
    }
    if let Some(t) = &rep.t1 {
        doc.estimates.insert("t_1".into(), estimate_json(t));
    }
    if let Some(c) = &rep.check {
        doc.checks.insert(c.name.clone(), check_json(c));
    }
    doc.results.insert(
        "implied_t1_lower_bound".into(),
        rep.implied_t1_lower_bound.as_ref().map(rational_json).unwrap_or(Value::Null),
    );
    Ok(())
}

fn bi_bound(spec: &TaskSpec, ctx: &Context, doc: &mut ResultDocument) -> Result<()> {
    let ring = &ctx.ring;
    let kind = spec.params.complex.unwrap_or(ComplexKind::Koszul);
    let complex = match kind {
        ComplexKind::Koszul => koszul_complex(ring, ctx.ideal.generators())?,
        ComplexKind::Resolution => resolve_ideal(ring, &ctx.ideal, spec.params.stages.unwrap_or(ring.dim().max(1)))?,
    };
    let ns: Vec<u32> = match spec.params.n {
        Some(n) => vec![n],
        None => (1..=ctx.n_max).collect(),
    };
    let mut pairs = Vec::new();
    for n in ns {
        let (h1, tor1) = bi_surjection_bound(&complex, n)?;
        doc.checks.insert(format!("surjection_bound_n{n}"), int_check_json(h1 as u128, tor1 as u128));
        pairs.push(json!({ "n": n, "h1": h1, "tor1": tor1 }));
    }
    doc.results.insert("complex".into(), json!(if kind == ComplexKind::Koszul { "koszul" } else { "resolution" }));
    doc.results.insert("ranks".into(), json!(complex.ranks()));
    doc.results.insert("pairs".into(), Value::Array(pairs));
    Ok(())
}

fn monomial(spec: &TaskSpec, mut doc: ResultDocument) -> Result<ResultDocument> {
    if !spec.relations.is_empty() {
        return Err(Error::Precondition("monomial-ehk works in a polynomial ring; remove `relations:`".into()));
    }
    let s = spec.poly_ring()?;
    let gens = spec
        .ideal
        .as_ref()
        .ok_or_else(|| Error::Precondition("monomial-ehk needs an `ideal:` line".into()))?;
    let mut exps = Vec::new();
    for g in gens {
        let f = s.parse(g)?;
        match f.terms() {
            [t] => exps.push(t.mon.exps().to_vec()),
            _ => return Err(Error::Precondition(format!("`{g}` is not a monomial"))),
        }
    }
    let e = monomial_ehk_exact(&exps)?;
    doc.ring.insert("p".into(), json!(spec.p));
    doc.ring.insert("dim".into(), json!(spec.vars.len()));
    doc.ring.insert("vars".into(), json!(spec.vars));
    doc.ring.insert("relations".into(), json!(Vec::<String>::new()));
    doc.ring.insert("graded".into(), json!(true));
    doc.ring.insert("cm".into(), json!(true));
    doc.results.insert("e_hk".into(), rational_json(&e));
    Ok(doc)
}
