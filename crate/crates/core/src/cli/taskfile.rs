//! Line-oriented task files.
//!
//! ```text
//! # A_1 singularity
//! p: 3
//! vars: x y z
//! relations: x*y - z^2
//! ideal: x, y, z
//! task: check n_max=3 tol=0.01
//! ```

use std::fmt::Write as _;
use std::str::FromStr;

use crate::algebra::PolyRing;
use crate::charp::polynomial_ring;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TaskKind {
    Ehk,
    Tor,
    Kunz,
    Check,
    Lemma,
    Corollary,
    MonomialEhk,
    BiBound,
}

impl TaskKind {
    pub const ALL: [TaskKind; 8] = [
        TaskKind::Ehk,
        TaskKind::Tor,
        TaskKind::Kunz,
        TaskKind::Check,
        TaskKind::Lemma,
        TaskKind::Corollary,
        TaskKind::MonomialEhk,
        TaskKind::BiBound,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TaskKind::Ehk => "ehk",
            TaskKind::Tor => "tor",
            TaskKind::Kunz => "kunz",
            TaskKind::Check => "check",
            TaskKind::Lemma => "lemma",
            TaskKind::Corollary => "corollary",
            TaskKind::MonomialEhk => "monomial-ehk",
            TaskKind::BiBound => "bi-bound",
        }
    }
}

impl FromStr for TaskKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TaskKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown task kind `{s}`")))
    }
}

/// Complex used by `bi-bound`: the Koszul complex on the ideal generators or
/// a truncated resolution of the quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    Koszul,
    Resolution,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Params {
    pub n_max: Option<u32>,
    pub i: Option<usize>,
    pub n: Option<u32>,
    pub tol: Option<f64>,
    pub q_list: Option<Vec<u64>>,
    pub stages: Option<usize>,
    pub complex: Option<ComplexKind>,
    /// Largest `i` for the alternating-sum checks.
    pub alternating: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TaskSpec {
    pub p: u64,
    pub vars: Vec<String>,
    /// Canonically formatted relations.
    pub relations: Vec<String>,
    /// Canonically formatted ideal generators; `None` means the maximal ideal.
    pub ideal: Option<Vec<String>>,
    pub kind: TaskKind,
    pub params: Params,
}

impl TaskSpec {
    pub fn poly_ring(&self) -> Result<PolyRing> {
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        polynomial_ring(self.p, &vars)
    }
}

fn parse_value<T: FromStr>(key: &str, v: &str, line: usize) -> Result<T> {
    v.parse().map_err(|_| Error::Parse(format!("line {line}: bad value `{v}` for `{key}`")))
}

fn parse_params(words: &[&str], line: usize) -> Result<Params> {
    let mut params = Params::default();
    for w in words {
        let (k, v) = w
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {line}: expected key=value, found `{w}`")))?;
        match k {
            "n_max" => params.n_max = Some(parse_value(k, v, line)?),
            "i" => params.i = Some(parse_value(k, v, line)?),
            "n" => params.n = Some(parse_value(k, v, line)?),
            "tol" => {
                let t: f64 = parse_value(k, v, line)?;
                if !t.is_finite() || t < 0.0 {
                    return Err(Error::Parse(format!("line {line}: tol must be a nonnegative number")));
                }
                params.tol = Some(t)
            }
            "q_list" => {
                params.q_list = Some(v.split(',').map(|q| parse_value(k, q.trim(), line)).collect::<Result<_>>()?)
            }
            "stages" => params.stages = Some(parse_value(k, v, line)?),
            "alternating" => params.alternating = Some(parse_value(k, v, line)?),
            "complex" => {
                params.complex = Some(match v {
                    "koszul" => ComplexKind::Koszul,
                    "resolution" => ComplexKind::Resolution,
                    _ => return Err(Error::Parse(format!("line {line}: complex must be koszul or resolution"))),
                })
            }
            _ => return Err(Error::Parse(format!("line {line}: unknown parameter `{k}`"))),
        }
    }
    Ok(params)
}

fn split_polys(text: &str) -> Vec<&str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

/// Parses a task file. Polynomials are validated against the declared
/// variables and stored in canonical form.
pub fn parse_taskfile(text: &str) -> Result<TaskSpec> {
    let mut p = None;
    let mut vars: Option<Vec<String>> = None;
    let mut relations: Option<(usize, String)> = None;
    let mut ideal: Option<(usize, String)> = None;
    let mut task: Option<(TaskKind, Params)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("line {line}: expected `key: value`")))?;
        let value = value.trim();
        let dup = |set: bool| {
            if set {
                Err(Error::Parse(format!("line {line}: duplicate `{}` line", key.trim())))
            } else {
                Ok(())
            }
        };
        match key.trim() {
            "p" => {
                dup(p.is_some())?;
                p = Some(parse_value::<u64>("p", value, line)?);
            }
            "vars" => {
                dup(vars.is_some())?;
                vars = Some(value.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).map(String::from).collect());
            }
            "relations" => {
                dup(relations.is_some())?;
                relations = Some((line, value.to_string()));
            }
            "ideal" => {
                dup(ideal.is_some())?;
                ideal = Some((line, value.to_string()));
            }
            "task" => {
                dup(task.is_some())?;
                let words: Vec<&str> = value.split_whitespace().collect();
                let kind = words
                    .first()
                    .ok_or_else(|| Error::Parse(format!("line {line}: missing task kind")))?
                    .parse::<TaskKind>()?;
                task = Some((kind, parse_params(&words[1..], line)?));
            }
            other => return Err(Error::Parse(format!("line {line}: unknown key `{other}`"))),
        }
    }
    let p = p.ok_or_else(|| Error::Parse("missing `p:` line".into()))?;
    let vars = vars.ok_or_else(|| Error::Parse("missing `vars:` line".into()))?;
    let (kind, params) = task.ok_or_else(|| Error::Parse("missing `task:` line".into()))?;
    let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let ring = polynomial_ring(p, &var_refs)?;
    let canon = |(line, text): (usize, String)| -> Result<Vec<String>> {
        split_polys(&text)
            .into_iter()
            .map(|t| {
                ring.parse(t)
                    .map(|f| ring.format(&f))
                    .map_err(|e| match e {
                        Error::Parse(m) => Error::Parse(format!("line {line}: {m}")),
                        e => e,
                    })
            })
            .collect()
    };
    Ok(TaskSpec {
        p,
        vars,
        relations: relations.map(canon).transpose()?.unwrap_or_default(),
        ideal: ideal.map(canon).transpose()?,
        kind,
        params,
    })
}

/// Renders a spec in the format accepted by [`parse_taskfile`].
pub fn print_taskfile(spec: &TaskSpec) -> String {
    let mut out = String::new();
    writeln!(out, "p: {}", spec.p).unwrap();
    writeln!(out, "vars: {}", spec.vars.join(" ")).unwrap();
    if !spec.relations.is_empty() {
        writeln!(out, "relations: {}", spec.relations.join(", ")).unwrap();
    }
    if let Some(ideal) = &spec.ideal {
        writeln!(out, "ideal: {}", ideal.join(", ")).unwrap();
    }
    let p = &spec.params;
    let mut words = vec![spec.kind.name().to_string()];
    if let Some(v) = p.n_max {
        words.push(format!("n_max={v}"));
    }
    if let Some(v) = p.i {
        words.push(format!("i={v}"));
    }
    if let Some(v) = p.n {
        words.push(format!("n={v}"));
    }
    if let Some(v) = p.tol {
        words.push(format!("tol={v}"));
    }
    if let Some(v) = &p.q_list {
        words.push(format!("q_list={}", v.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",")));
    }
    if let Some(v) = p.stages {
        words.push(format!("stages={v}"));
    }
    if let Some(v) = p.complex {
        words.push(format!("complex={}", if v == ComplexKind::Koszul { "koszul" } else { "resolution" }));
    }
    if let Some(v) = p.alternating {
        words.push(format!("alternating={v}"));
    }
    writeln!(out, "task: {}", words.join(" ")).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a1_check() {
        let spec = parse_taskfile("p: 3\nvars: x y z\nrelations: x*y - z^2\ntask: check n_max=3").unwrap();
        assert_eq!(spec.kind, TaskKind::Check);
        assert_eq!(spec.params.n_max, Some(3));
        assert_eq!(spec.relations, vec!["x*y - z^2"]);
        assert_eq!(spec.ideal, None);
    }

    #[test]
    fn names_undeclared_variables() {
        let err = parse_taskfile("p: 3\nvars: x y\nrelations: x*w\ntask: kunz").unwrap_err();
        assert!(err.to_string().contains('w'), "{err}");
        assert!(matches!(parse_taskfile("p: 4\nvars: x\ntask: kunz"), Err(Error::NotPrime(4))));
        assert!(parse_taskfile("p: 3\nvars: x\ntask: frobnicate").is_err());
        assert!(parse_taskfile("p: 3\nvars: x\nideal: x^a\ntask: ehk").is_err());
    }

    #[test]
    fn comments_and_round_trip() {
        let text = "# comment\np: 5 # prime\nvars: a b\nrelations: a^2 +  b^2, a*b\nideal: a, b\n\ntask: tor i=2 n=1 q_list=5,25 tol=0.5 complex=koszul\n";
        let spec = parse_taskfile(text).unwrap();
        assert_eq!(spec.relations, vec!["a^2 + b^2", "a*b"]);
        let again = parse_taskfile(&print_taskfile(&spec)).unwrap();
        assert_eq!(again, spec);
    }
}
