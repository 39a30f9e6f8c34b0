//! Result documents and their JSON and table renderings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::invariants::{Check, LengthSequence, LimitEstimate};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

/// Output of one task. Sections are JSON objects with sorted keys.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ResultDocument {
    pub task: String,
    pub ring: Map<String, Value>,
    pub sequences: Map<String, Value>,
    pub estimates: Map<String, Value>,
    pub checks: Map<String, Value>,
    pub results: Map<String, Value>,
    pub notices: Vec<String>,
    pub elapsed_ms: Option<u64>,
}

fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn int_from_json(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).or_else(|| n.as_u64().map(BigInt::from)),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// `{"num": n, "den": d, "display": float}`.
pub fn rational_json(r: &BigRational) -> Value {
    json!({
        "num": int_json(r.numer()),
        "den": int_json(r.denom()),
        "display": r.to_f64().unwrap_or(f64::NAN),
    })
}

pub fn rational_from_json(v: &Value) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not an exact rational: {v}"));
    let num = v.get("num").and_then(int_from_json).ok_or_else(bad)?;
    let den = v.get("den").and_then(int_from_json).ok_or_else(bad)?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub fn sequence_json(s: &LengthSequence) -> Value {
    json!({
        "kind": s.kind.name(),
        "ideal": s.ideal,
        "p": s.p,
        "d": s.d,
        "n": (1..=s.len()).collect::<Vec<_>>(),
        "q": (1..=s.len()).map(|n| int_json(&s.q(n))).collect::<Vec<_>>(),
        "lengths": s.values,
        "normalized": s.normalized().iter().map(rational_json).collect::<Vec<_>>(),
    })
}

pub fn estimate_json(e: &LimitEstimate) -> Value {
    json!({
        "raw_last": rational_json(&e.raw_last),
        "richardson": rational_json(&e.richardson),
        "error_indicator": rational_json(&e.error_indicator),
        "n_used": e.n_used,
    })
}

pub fn check_json(c: &Check) -> Value {
    json!({
        "holds": c.holds,
        "lhs": rational_json(&c.lhs),
        "rhs": rational_json(&c.rhs),
        "tolerance": rational_json(&c.tolerance),
        "informational": c.informational,
    })
}

/// An exact integer comparison `lhs >= rhs`.
pub fn int_check_json(lhs: u128, rhs: u128) -> Value {
    let r = |v: u128| rational_json(&BigRational::from_integer(BigInt::from(v)));
    json!({
        "holds": lhs >= rhs,
        "lhs": r(lhs),
        "rhs": r(rhs),
        "tolerance": r(0),
        "informational": false,
    })
}

impl ResultDocument {
    pub fn new(task: &str) -> Self {
        ResultDocument { task: task.to_string(), ..Default::default() }
    }

    pub fn to_value(&self, with_timing: bool) -> Value {
        let mut top = Map::new();
        top.insert("task".into(), json!(self.task));
        top.insert("ring".into(), Value::Object(self.ring.clone()));
        top.insert("sequences".into(), Value::Object(self.sequences.clone()));
        top.insert("estimates".into(), Value::Object(self.estimates.clone()));
        top.insert("checks".into(), Value::Object(self.checks.clone()));
        top.insert("results".into(), Value::Object(self.results.clone()));
        top.insert("notices".into(), json!(self.notices));
        if with_timing {
            top.insert("timing".into(), json!({ "elapsed_ms": self.elapsed_ms }));
        }
        Value::Object(top)
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("result document: missing or malformed `{what}`"));
        let obj = |key: &str| -> Result<Map<String, Value>> {
            v.get(key).and_then(Value::as_object).cloned().ok_or_else(|| bad(key))
        };
        Ok(ResultDocument {
            task: v.get("task").and_then(Value::as_str).ok_or_else(|| bad("task"))?.to_string(),
            ring: obj("ring")?,
            sequences: obj("sequences")?,
            estimates: obj("estimates")?,
            checks: obj("checks")?,
            results: obj("results")?,
            notices: v
                .get("notices")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("notices"))?
                .iter()
                .map(|n| n.as_str().map(String::from).ok_or_else(|| bad("notices")))
                .collect::<Result<_>>()?,
            elapsed_ms: v.get("timing").and_then(|t| t.get("elapsed_ms")).and_then(Value::as_u64),
        })
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_value(true)).expect("documents serialize");
                s.push('\n');
                s
            }
            Format::Table => self.table(),
        }
    }

    fn table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "task: {}", self.task).unwrap();
        for (k, v) in &self.ring {
            writeln!(out, "{k}: {}", display(v)).unwrap();
        }
        for (name, s) in &self.sequences {
            writeln!(out, "\nsequence {name} {}", s.get("ideal").map(display).unwrap_or_default()).unwrap();
            let col = |key: &str| -> Vec<String> {
                s.get(key).and_then(Value::as_array).map(|a| a.iter().map(display).collect()).unwrap_or_default()
            };
            let rows: Vec<Vec<String>> = {
                let (n, q, l, a) = (col("n"), col("q"), col("lengths"), col("normalized"));
                (0..n.len()).map(|i| vec![n[i].clone(), q[i].clone(), l[i].clone(), a[i].clone()]).collect()
            };
            aligned(&mut out, &["n", "q", "length", "a_n"], &rows);
        }
        if !self.estimates.is_empty() {
            writeln!(out, "\nestimates").unwrap();
            let rows: Vec<Vec<String>> = self
                .estimates
                .iter()
                .map(|(k, e)| {
                    let f = |key: &str| e.get(key).map(display).unwrap_or_default();
                    vec![k.clone(), f("raw_last"), f("richardson"), f("error_indicator")]
                })
                .collect();
            aligned(&mut out, &["name", "raw_last", "richardson", "error"], &rows);
        }
        if !self.checks.is_empty() {
            writeln!(out, "\nchecks").unwrap();
            let rows: Vec<Vec<String>> = self
                .checks
                .iter()
                .map(|(k, c)| {
                    let f = |key: &str| c.get(key).map(display).unwrap_or_default();
                    let mark = if c.get("informational") == Some(&Value::Bool(true)) { " (info)" } else { "" };
                    vec![format!("{k}{mark}"), f("holds"), f("lhs"), f("rhs"), f("tolerance")]
                })
                .collect();
            aligned(&mut out, &["check", "holds", "lhs", "rhs", "tol"], &rows);
        }
        if !self.results.is_empty() {
            writeln!(out, "\nresults").unwrap();
            for (k, v) in &self.results {
                writeln!(out, "{k}: {}", display(v)).unwrap();
            }
        }
        for n in &self.notices {
            writeln!(out, "notice: {n}").unwrap();
        }
        out
    }
}

fn display(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(o) if o.contains_key("num") && o.contains_key("den") => {
            let (n, d) = (display(&o["num"]), display(&o["den"]));
            let approx = o.get("display").and_then(Value::as_f64).unwrap_or(f64::NAN);
            if d == "1" {
                n
            } else {
                format!("{n}/{d} (~{approx:.6})")
            }
        }
        Value::Array(a) => a.iter().map(display).collect::<Vec<_>>().join(", "),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn aligned(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header.to_vec())).unwrap();
    for r in rows {
        writeln!(out, "{}", line(r.iter().map(|s| s.as_str()).collect())).unwrap();
    }
}
