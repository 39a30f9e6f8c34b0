//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use frobreg::algebra::{Monomial, PolyMatrix, Polynomial};
use frobreg::charp::{
    frobenius_twist, homology_length, koszul_complex, quotient_ring, resolve_ideal, tor_length, FreeComplex,
    QuotientRing,
};
use frobreg::cli::{parse_taskfile, print_taskfile, run_task, Format, ResultDocument, RunOptions};
use frobreg::groebner::Ideal;
use frobreg::invariants::{
    cm_depth, corollary_check, ehk_sequence, extrapolate, inequality_suite, kunz_test, lemma_check,
    monomial_ehk_exact, ti_sequence, LengthSequence, SequenceKind,
};

use common::{a1, bracket, degreewise_colength, frobenius, lattice_colength, poly};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn a1_ring() -> QuotientRing {
    quotient_ring(3, &["x", "y", "z"], &["x*y - z^2"]).unwrap()
}

/// Rings used by the inequality and homology checks, with their variable names and relations.
fn suite() -> Vec<(u64, Vec<&'static str>, Vec<&'static str>)> {
    vec![
        (2, vec!["x", "y"], vec![]),
        (3, vec!["x", "y", "z"], vec![]),
        (2, vec!["x", "y"], vec!["x*y"]),
        (3, vec!["x", "y", "z"], vec!["x*y - z^2"]),
        (2, vec!["x", "y", "z"], vec!["x^3 + y^3 + z^3"]),
    ]
}

fn parse_all(ring: &QuotientRing, gens: &[&str]) -> Vec<Polynomial> {
    gens.iter().map(|g| ring.poly_ring().parse(g).unwrap()).collect()
}

fn kunz_identity() -> Outcome {
    let ring = quotient_ring(2, &["x", "y", "z"], &[]).unwrap();
    for q in [2u64, 4, 8] {
        let l = ok(ring.bracket_colength(&ring.variables(), q))?;
        ensure!(l == q.pow(3), "ℓ(S/m^[{q}]) = {l}, expected {}", q.pow(3));
    }
    ensure!(ok(kunz_test(&ring))?.regular, "Kunz test reports a singular polynomial ring");
    let m = ok(ring.maximal_ideal())?;
    let e = extrapolate(&ok(ehk_sequence(&ring, &m, 3))?);
    ensure!(e.richardson == int(1), "e_HK estimate {} is not exactly 1", e.richardson);
    for i in 1..=2 {
        for n in 1..=3 {
            let t = ok(tor_length(&ring, &m, i, n))?;
            ensure!(t == 0, "Tor_{i} at n={n} is {t}");
        }
    }
    Ok(())
}

fn random_monomial_ideal(rng: &mut ChaCha8Rng, nvars: usize) -> Vec<Vec<u32>> {
    let bounds: Vec<u32> = (0..nvars).map(|_| rng.gen_range(1..=4)).collect();
    let mut gens: Vec<Vec<u32>> = (0..nvars)
        .map(|k| (0..nvars).map(|j| if j == k { bounds[k] } else { 0 }).collect())
        .collect();
    for _ in 0..rng.gen_range(0..=3) {
        let g: Vec<u32> = bounds.iter().map(|&b| rng.gen_range(0..b)).collect();
        if g.iter().any(|&e| e > 0) {
            gens.push(g);
        }
    }
    gens
}

fn monomial_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let names = ["x", "y", "z"];
    for case in 0..20 {
        let nvars = rng.gen_range(2..=3);
        let p: u64 = if rng.gen_bool(0.5) { 2 } else { 3 };
        let gens = random_monomial_ideal(&mut rng, nvars);
        let ring = ok(quotient_ring(p, &names[..nvars], &[]))?;
        let polys: Vec<Polynomial> = gens.iter().map(|g| ring.poly_ring().monomial(Monomial::new(g), 1)).collect();
        let exact = ok(monomial_ehk_exact(&gens))?;
        for q in [p, p * p] {
            let counted = lattice_colength(&bracket(&gens, q as u32));
            let gb = ok(ring.bracket_colength(&polys, q))?;
            ensure!(gb == counted, "case {case} {gens:?} q={q}: GB colength {gb}, lattice count {counted}");
            let limit = int(counted) / int(q.pow(nvars as u32));
            ensure!(exact == limit, "case {case} {gens:?} q={q}: exact e_HK {exact}, counted {limit}");
        }
    }
    Ok(())
}

fn a1_suite() -> Outcome {
    let ring = a1_ring();
    let m = ok(ring.maximal_ideal())?;
    let seq = ok(ehk_sequence(&ring, &m, 3))?;
    for (n, q) in [3u32, 9, 27].into_iter().enumerate() {
        let oracle = a1::bracket_colength(q);
        ensure!(seq.values[n] == oracle, "ℓ(R/m^[{q}]) = {}, semigroup count {oracle}", seq.values[n]);
    }
    let e = extrapolate(&seq).richardson;
    ensure!((&e - rat(3, 2)).abs() <= rat(1, 20), "e_HK estimate {e} is not within 0.05 of 3/2");
    ensure!(!ok(kunz_test(&ring))?.regular, "Kunz test reports A_1 as regular");
    let t1 = extrapolate(&ok(ti_sequence(&ring, &m, 1, 3))?).richardson;
    ensure!(t1 >= rat(9, 10), "t_1 estimate {t1} < 0.9");
    ensure!(&e - int(1) <= &t1 + rat(1, 10), "e_HK - 1 = {} exceeds t_1 + 0.1 = {}", &e - int(1), &t1 + rat(1, 10));
    Ok(())
}

fn finite_inequalities() -> Outcome {
    for (p, vars, rels) in suite() {
        let ring = ok(quotient_ring(p, &vars, &rels))?;
        let m = ok(ring.maximal_ideal())?;
        let rep = ok(inequality_suite(&ring, &m, 2, &[p, p * p], &rat(1, 20), 2))?;
        ensure!(rep.rows.len() == 4, "{rels:?}: expected 4 rows, got {}", rep.rows.len());
        for r in &rep.rows {
            // Recompute both sides from the raw lengths.
            let (l, t1, t2) = (r.colength as u128, r.tor1_residue as u128, r.tor2_residue as u128);
            let (fi, fk, tq) = (r.twisted_colength as u128, r.twisted_residue as u128, r.tor1_quotient as u128);
            let first = ((l - 1) * t1 + fi, l * fk);
            let second = ((l - 1) * t2 + tq + l * fk, l * t1 + fi);
            ensure!(
                first.0 >= first.1,
                "p={p} {rels:?} n={} q={}: inequality (1) fails, {} < {}",
                r.n,
                r.q,
                first.0,
                first.1
            );
            ensure!(
                second.0 >= second.1,
                "p={p} {rels:?} n={} q={}: inequality (2) fails, {} < {}",
                r.n,
                r.q,
                second.0,
                second.1
            );
            ensure!((r.first.0, r.first.1) == first && (r.second.0, r.second.1) == second, "report sides disagree");
        }
        ensure!(rep.finite_level_holds(), "{rels:?}: report marks a finite-level failure");
    }
    Ok(())
}

fn lemma_behavior() -> Outcome {
    let ring = a1_ring();
    let sop = parse_all(&ring, &["x", "y"]);
    let rep = ok(lemma_check(&ring, &sop, 3))?;
    let a = rep.tor1.normalized();
    ensure!(a.len() == 3, "expected 3 terms");
    ensure!(a.iter().all(|v| *v >= int(0)), "negative normalized Tor_1 {a:?}");
    ensure!(a[2] <= &a[0] / int(2), "last term {} exceeds half of first {}", a[2], a[0]);
    for &(n, h1, tor1, holds) in &rep.bounds {
        ensure!(h1 >= tor1 && holds, "n={n}: Koszul H_1 {h1} < Tor_1 {tor1}");
    }
    Ok(())
}

fn homology_cross_check() -> Outcome {
    for (p, vars, rels) in suite() {
        let ring = ok(quotient_ring(p, &vars, &rels))?;
        let s = ring.poly_ring();
        let power = |k: u32| vars.iter().map(|v| format!("{v}^{k}")).collect::<Vec<_>>();
        let mut ideals: Vec<Vec<String>> = vec![vars.iter().map(|v| v.to_string()).collect(), power(2)];
        let mixed: Vec<String> = power(2).into_iter().chain([format!("{}*{}", vars[0], vars[1])]).collect();
        ideals.push(mixed);
        for gens in &ideals {
            let gen_refs: Vec<&str> = gens.iter().map(|g| g.as_str()).collect();
            let polys = parse_all(&ring, &gen_refs);
            let res = ok(resolve_ideal(&ring, &ok(Ideal::new(s, polys.clone()))?, 2))?;
            for q in [p, p * p] {
                let h0 = ok(homology_length(&ok(frobenius_twist(&res, q))?, 0))?;
                let mut all = ring.relations().basis().to_vec();
                for g in &polys {
                    all.push(ok(s.frobenius(g, q))?);
                }
                let gb = ok(ok(Ideal::new(s, all))?.colength())?;
                ensure!(h0 == gb, "p={p} {rels:?} I={gens:?} q={q}: H_0 {h0}, GB colength {gb}");
                if q == p {
                    let dense: Vec<_> = rels
                        .iter()
                        .map(|r| poly(&vars, p, r))
                        .chain(gens.iter().map(|g| frobenius(&poly(&vars, p, g), q as u32, p)))
                        .collect();
                    let lin = degreewise_colength(vars.len(), p, &dense);
                    ensure!(h0 == lin, "p={p} {rels:?} I={gens:?} q={q}: H_0 {h0}, dense count {lin}");
                }
            }
        }
    }
    let ring = a1_ring();
    let m = ok(ring.maximal_ideal())?;
    for (n, q) in [(1u32, 3u32), (2, 9)] {
        let lib = ok(tor_length(&ring, &m, 1, n))?;
        let dense = a1::twisted_h1(3, q);
        ensure!(lib == dense, "A_1 Tor_1 at q={q}: library {lib}, dense oracle {dense}");
    }
    Ok(())
}

fn random_form(rng: &mut ChaCha8Rng, ring: &QuotientRing, degree: u32) -> Polynomial {
    let s = ring.poly_ring();
    let nv = s.nvars();
    let terms: Vec<(Monomial, i64)> = (0..3)
        .map(|_| {
            let mut e = vec![0u32; nv];
            for _ in 0..degree {
                e[rng.gen_range(0..nv)] += 1;
            }
            (Monomial::new(&e), rng.gen_range(1..=4))
        })
        .collect();
    ring.reduce(&s.from_terms(terms).unwrap())
}

fn random_matrix(rng: &mut ChaCha8Rng, ring: &QuotientRing, rows: usize, cols: usize) -> PolyMatrix {
    let entries = (0..rows * cols)
        .map(|_| match rng.gen_range(0..3) {
            0 => ring.poly_ring().zero(),
            1 => ring.poly_ring().constant(rng.gen_range(1..=4)),
            _ => random_form(rng, ring, 1),
        })
        .collect();
    PolyMatrix::from_entries(rows, cols, entries).unwrap()
}

fn minimal(c: &FreeComplex) -> bool {
    c.differentials().iter().all(|d| d.entries().iter().all(|f| f.terms().iter().all(|t| !t.mon.is_one())))
}

fn run_cli(file: &std::path::Path) -> Result<serde_json::Value, String> {
    let out = ok(Command::new(env!("CARGO_BIN_EXE_frobreg")).arg("run").arg(file).arg("--no-cache").output())?;
    ensure!(out.status.success(), "CLI failed: {}", String::from_utf8_lossy(&out.stderr));
    let mut v: serde_json::Value = ok(serde_json::from_slice(&out.stdout))?;
    v.as_object_mut().unwrap().remove("timing");
    Ok(v)
}

fn structural() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let rings: Vec<QuotientRing> =
        suite().iter().map(|(p, v, r)| quotient_ring(*p, v, r).unwrap()).collect();
    for case in 0..100 {
        let ring = &rings[case % rings.len()];
        let s = ring.poly_ring();
        let k = rng.gen_range(2..=3usize).min(s.nvars());
        let elems: Vec<Polynomial> = (0..k)
            .map(|_| {
                let deg = rng.gen_range(1..=2);
                random_form(&mut rng, ring, deg)
            })
            .collect();
        let kz = ok(koszul_complex(ring, &elems))?;
        let i = rng.gen_range(1..k);
        let (d, e) = (kz.differential(i), kz.differential(i + 1));
        let rows = rng.gen_range(1..=3);
        let u = random_matrix(&mut rng, ring, rows, d.rows());
        let cols = rng.gen_range(1..=3);
        let v = random_matrix(&mut rng, ring, e.cols(), cols);
        let a = ok(u.mul(s, d))?;
        let b = ok(e.mul(s, &v))?;
        let c = ok(FreeComplex::new(ring, a.rows(), vec![a, b]))?;
        let p = ring.characteristic();
        for q in [p, p * p] {
            let t = ok(frobenius_twist(&c, q))?;
            ensure!(t.verify_composition().is_ok(), "case {case}: twist by {q} breaks composition");
        }
    }

    for (p, vars, rels) in suite() {
        let ring = ok(quotient_ring(p, &vars, &rels))?;
        let squares: Vec<String> = vars.iter().map(|v| format!("{v}^2")).collect();
        let refs: Vec<&str> = squares.iter().map(|s| s.as_str()).collect();
        let mut redundant = parse_all(&ring, &vars);
        redundant.push(ring.poly_ring().parse(&format!("{}*{}", vars[0], vars[1])).unwrap());
        for gens in [parse_all(&ring, &vars), parse_all(&ring, &refs), redundant] {
            let res = ok(resolve_ideal(&ring, &ok(Ideal::new(ring.poly_ring(), gens))?, 3))?;
            ensure!(minimal(&res) && !res.has_unit_entry(), "p={p} {rels:?}: resolution has a constant entry");
        }
    }

    for _ in 0..50 {
        let p: u64 = [2, 3, 5][rng.gen_range(0..3)];
        let d = rng.gen_range(0..=3usize);
        let alpha: u64 = rng.gen_range(1..=50);
        let beta: u64 = rng.gen_range(0..=50);
        let values: Vec<u64> = (1..=3u32)
            .map(|n| {
                let q = p.pow(n);
                alpha * q.pow(d as u32) + if d == 0 { 0 } else { beta * q.pow(d as u32 - 1) }
            })
            .collect();
        let seq = ok(LengthSequence::new(SequenceKind::Colength, p, d, values))?;
        let got = extrapolate(&seq).richardson;
        ensure!(got == int(alpha), "p={p} d={d} α={alpha} β={beta}: extrapolated {got}");
    }

    let texts = [
        "p: 3\nvars: x y z\nrelations: x*y - z^2\ntask: check n_max=2 q_list=3,9 tol=0.05\n",
        "p: 2\nvars: x y\nrelations: x^2, x*y\ntask: corollary n_max=2\n",
        "p: 3\nvars: x y z\nrelations: x*y - z^2\nideal: x, y\ntask: lemma n_max=2\n",
        "p: 2\nvars: x y\nideal: x^2, x*y, y^3\ntask: monomial-ehk\n",
        "p: 2\nvars: x y z\ntask: tor i=1 n=2\n",
    ];
    let dir = ok(tempfile::tempdir())?;
    for (k, text) in texts.iter().enumerate() {
        let spec = ok(parse_taskfile(text))?;
        ensure!(ok(parse_taskfile(&print_taskfile(&spec)))? == spec, "task file {k} does not round-trip");
        let doc = ok(run_task(&spec, &RunOptions::default()))?;
        let parsed: serde_json::Value = ok(serde_json::from_str(&doc.emit(Format::Json)))?;
        let back = ok(ResultDocument::from_value(&parsed))?;
        ensure!(back == doc, "result document {k} does not round-trip");
        let again = ok(run_task(&spec, &RunOptions::default()))?;
        ensure!(again.to_value(false) == doc.to_value(false), "task {k} is not deterministic in-process");
        let file = dir.path().join(format!("task{k}.txt"));
        ok(std::fs::write(&file, text))?;
        let (first, second) = (run_cli(&file)?, run_cli(&file)?);
        ensure!(first == second, "task {k}: CLI output differs between runs");
        ensure!(first == doc.to_value(false), "task {k}: CLI output differs from the library document");
    }
    Ok(())
}

fn corollary_gate() -> Outcome {
    let rep = ok(corollary_check(&a1_ring(), 3, &rat(1, 20)))?;
    ensure!(rep.skipped.is_none(), "A_1 was skipped: {:?}", rep.skipped);
    ensure!(rep.depth.is_cm && rep.multiplicity == 2, "A_1 depth report {:?}, e = {}", rep.depth, rep.multiplicity);
    let check = rep.check.ok_or("no check on A_1")?;
    ensure!(check.holds, "corollary bound fails on A_1: {} > {}", check.lhs, check.rhs);

    let ring = ok(quotient_ring(2, &["x", "y"], &["x^2", "x*y"]))?;
    let depth = ok(cm_depth(&ring))?;
    ensure!(depth.depth == 0 && depth.dim == 1 && !depth.is_cm, "depth report {depth:?}");
    let rep = ok(corollary_check(&ring, 3, &rat(1, 20)))?;
    ensure!(rep.skipped.is_some() && rep.check.is_none(), "non-CM ring was not skipped");
    let spec = ok(parse_taskfile("p: 2\nvars: x y\nrelations: x^2, x*y\ntask: corollary\n"))?;
    let doc = ok(run_task(&spec, &RunOptions::default()))?;
    ensure!(doc.notices.iter().any(|n| n.contains("Cohen-Macaulay")), "no notice in {:?}", doc.notices);
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("Kunz identity on F_2[x,y,z]", kunz_identity, Duration::from_secs(10)),
        ("monomial oracle equivalence", monomial_oracle, Duration::from_secs(60)),
        ("A_1 singularity suite", a1_suite, Duration::from_secs(300)),
        ("finite-level inequalities", finite_inequalities, Duration::from_secs(600)),
        ("system-of-parameters lemma", lemma_behavior, Duration::from_secs(600)),
        ("homology cross-check", homology_cross_check, Duration::from_secs(600)),
        ("structural properties", structural, Duration::from_secs(600)),
        ("Cohen-Macaulay corollary gate", corollary_gate, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (k, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            if elapsed > *budget {
                Err(format!("took {elapsed:.1?}, budget {budget:?}"))
            } else {
                Ok(())
            }
        });
        match result {
            Ok(()) => println!("criterion {} {name}: PASS ({elapsed:.2?})", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({elapsed:.2?}) {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
