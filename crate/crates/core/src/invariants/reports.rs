use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::sequence::{extrapolate, non_shrinking_differences, LengthSequence, LimitEstimate, SequenceKind};
use crate::algebra::Polynomial;
use crate::charp::{
    check_primary, frobenius_twist, homology_length, koszul_complex, resolve_generators, resolve_ideal,
    twisted_homology, QuotientRing,
};
use crate::error::{Error, Result};
use crate::groebner::Ideal;

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn ideal_label(ring: &QuotientRing, ideal: &Ideal) -> String {
    let gens: Vec<String> = ideal.generators().iter().map(|g| ring.format(g)).collect();
    format!("({})", gens.join(", "))
}

fn ring_label(ring: &QuotientRing) -> String {
    let s = ring.poly_ring();
    let rels: Vec<String> = ring.relations().generators().iter().map(|g| ring.format(g)).collect();
    let base = format!("F_{}[{}]", ring.characteristic(), s.names().join(", "));
    if rels.is_empty() {
        base
    } else {
        format!("{base}/({})", rels.join(", "))
    }
}

fn check_n_max(n_max: u32) -> Result<()> {
    if n_max == 0 {
        return Err(Error::Precondition("n_max must be at least 1".into()));
    }
    Ok(())
}

/// `ℓ(R/I^[p^n])` for `n = 1..=n_max`.
pub fn ehk_sequence(ring: &QuotientRing, ideal: &Ideal, n_max: u32) -> Result<LengthSequence> {
    check_n_max(n_max)?;
    check_primary(ring, ideal)?;
    let values = (1..=n_max)
        .map(|n| ring.bracket_colength(ideal.generators(), ring.p_pow(n)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(LengthSequence::new(SequenceKind::Colength, ring.characteristic(), ring.dim(), values)?
        .with_labels(ring_label(ring), ideal_label(ring, ideal)))
}

/// `ℓ(Tor_i(R/I, F^n R))` for `n = 1..=n_max`, from one resolution of `R/I`.
pub fn ti_sequence(ring: &QuotientRing, ideal: &Ideal, i: usize, n_max: u32) -> Result<LengthSequence> {
    check_n_max(n_max)?;
    if i == 0 {
        return Err(Error::Precondition("t_i needs i >= 1".into()));
    }
    check_primary(ring, ideal)?;
    let res = resolve_ideal(ring, ideal, i + 1)?;
    let values = (1..=n_max).map(|n| twisted_homology(&res, i, ring.p_pow(n)?)).collect::<Result<Vec<_>>>()?;
    Ok(LengthSequence::new(SequenceKind::Tor(i), ring.characteristic(), ring.dim(), values)?
        .with_labels(ring_label(ring), ideal_label(ring, ideal)))
}

/// Result of Kunz's exact test at `q = p`.
#[derive(Clone, Debug, PartialEq)]
pub struct KunzResult {
    pub regular: bool,
    pub colength: u64,
    pub expected: u64,
}

/// `ℓ(R/m^[p]) == p^d`, which holds exactly when R is regular.
pub fn kunz_test(ring: &QuotientRing) -> Result<KunzResult> {
    let p = ring.characteristic();
    let colength = ring.bracket_colength(&ring.variables(), p)?;
    let expected = p.checked_pow(ring.dim() as u32).ok_or(Error::ExponentOverflow)?;
    Ok(KunzResult { regular: colength == expected, colength, expected })
}

/// A single inequality `lhs <= rhs + tolerance`.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub tolerance: BigRational,
    pub holds: bool,
    /// Reported but not part of any verdict.
    pub informational: bool,
}

impl Check {
    fn new(name: impl Into<String>, lhs: BigRational, rhs: BigRational, tolerance: BigRational) -> Self {
        let holds = lhs <= &rhs + &tolerance;
        Check { name: name.into(), lhs, rhs, tolerance, holds, informational: false }
    }

    fn informational(mut self) -> Self {
        self.informational = true;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Regular,
    NonRegular,
    Inconclusive,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Regular => "regular",
            Verdict::NonRegular => "non-regular",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// Length sequences for the maximal ideal: colengths, Tor_1(k) and Tor_2(k).
#[derive(Clone, Debug, PartialEq)]
pub struct MaximalSequences {
    pub colength: LengthSequence,
    pub tor1: LengthSequence,
    pub tor2: LengthSequence,
}

impl MaximalSequences {
    pub fn compute(ring: &QuotientRing, n_max: u32) -> Result<Self> {
        let m = ring.maximal_ideal()?;
        let colength = ehk_sequence(ring, &m, n_max)?;
        let res = resolve_ideal(ring, &m, 3)?;
        let mut t = [Vec::new(), Vec::new()];
        for n in 1..=n_max {
            let q = ring.p_pow(n)?;
            let twisted = frobenius_twist(&res, q)?;
            t[0].push(homology_length(&twisted, 1)?);
            t[1].push(homology_length(&twisted, 2)?);
        }
        let [t1, t2] = t;
        let label = |kind, v| {
            LengthSequence::new(kind, ring.characteristic(), ring.dim(), v)
                .map(|s| s.with_labels(ring_label(ring), ideal_label(ring, &m)))
        };
        Ok(MaximalSequences { colength, tor1: label(SequenceKind::Tor(1), t1)?, tor2: label(SequenceKind::Tor(2), t2)? })
    }

    pub fn estimates(&self) -> (LimitEstimate, LimitEstimate, LimitEstimate) {
        (extrapolate(&self.colength), extrapolate(&self.tor1), extrapolate(&self.tor2))
    }
}

fn effective_tol(tol: &BigRational, ests: &[&LimitEstimate]) -> BigRational {
    ests.iter()
        .map(|e| &e.error_indicator * int(2))
        .fold(tol.clone(), |a, b| if b > a { b } else { a })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegularityReport {
    pub kunz: KunzResult,
    pub d: usize,
    pub sequences: MaximalSequences,
    pub e_hk: LimitEstimate,
    pub t1: LimitEstimate,
    pub t2: LimitEstimate,
    /// `t_1 ≈ 0`, `t_2 ≈ 0` and `e_HK - 1 ≈ t_1`.
    pub criteria: Vec<Check>,
    pub verdict: Verdict,
    pub notices: Vec<String>,
}

/// Evaluates Kunz's test and the three limit criteria for `I = m`.
///
/// Only Kunz's exact identity can produce `Regular`. A failed Kunz test
/// with all numeric criteria passing is reported as `Inconclusive`.
pub fn regularity_report(ring: &QuotientRing, n_max: u32, tol: &BigRational) -> Result<RegularityReport> {
    let kunz = kunz_test(ring)?;
    let sequences = MaximalSequences::compute(ring, n_max)?;
    let (e_hk, t1, t2) = sequences.estimates();
    let zero = BigRational::zero();
    let one = int(1);
    let criteria = vec![
        Check::new("t1_vanishes", t1.richardson.abs(), zero.clone(), effective_tol(tol, &[&t1])),
        Check::new("t2_vanishes", t2.richardson.abs(), zero.clone(), effective_tol(tol, &[&t2])),
        Check::new(
            "ehk_minus_one_equals_t1",
            (&e_hk.richardson - &one - &t1.richardson).abs(),
            zero,
            effective_tol(tol, &[&e_hk, &t1]),
        ),
    ];
    let verdict = if kunz.regular {
        Verdict::Regular
    } else if criteria.iter().any(|c| !c.holds) {
        Verdict::NonRegular
    } else {
        Verdict::Inconclusive
    };
    let mut notices = Vec::new();
    let bad = non_shrinking_differences(&sequences.colength);
    if !bad.is_empty() {
        notices.push(format!("normalized colength differences grow at n = {bad:?}"));
    }
    Ok(RegularityReport { kunz, d: ring.dim(), sequences, e_hk, t1, t2, criteria, verdict, notices })
}

/// Exact lengths entering the finite-level inequalities at one `(n, q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct InequalityRow {
    pub n: u32,
    pub q: u64,
    /// ℓ(R/I^[q]).
    pub colength: u64,
    /// ℓ(F^n(R/I^[q])) = ℓ(R/I^[q p^n]).
    pub twisted_colength: u64,
    /// ℓ(F^n(k)) = ℓ(R/m^[p^n]).
    pub twisted_residue: u64,
    pub tor1_residue: u64,
    pub tor2_residue: u64,
    /// ℓ(Tor_1(R/I^[q], F^n R)).
    pub tor1_quotient: u64,
    pub first: (u128, u128, bool),
    pub second: (u128, u128, bool),
}

#[derive(Clone, Debug, PartialEq)]
pub struct InequalityReport {
    pub rows: Vec<InequalityRow>,
    pub estimate_checks: Vec<Check>,
    pub cm: bool,
}

impl InequalityReport {
    pub fn finite_level_holds(&self) -> bool {
        self.rows.iter().all(|r| r.first.2 && r.second.2)
    }
}

/// Finite-level inequalities for every `n <= n_max` and `q` in `q_list`,
/// plus the limit inequalities on estimates.
///
/// With `L = ℓ(R/I^[q])`:
/// `(L - 1) ℓ(Tor_1(k)) + ℓ(F^n(R/I^[q])) >= L ℓ(F^n k)` and
/// `(L - 1) ℓ(Tor_2(k)) + ℓ(Tor_1(R/I^[q])) + L ℓ(F^n k) >= L ℓ(Tor_1(k)) + ℓ(F^n(R/I^[q]))`.
pub fn inequality_suite(
    ring: &QuotientRing,
    ideal: &Ideal,
    n_max: u32,
    q_list: &[u64],
    tol: &BigRational,
    alternating_bound: usize,
) -> Result<InequalityReport> {
    check_n_max(n_max)?;
    check_primary(ring, ideal)?;
    for &q in q_list {
        ring.check_power_of_p(q)?;
    }
    let s = ring.poly_ring();
    let residue = resolve_ideal(ring, &ring.maximal_ideal()?, alternating_bound.max(2) + 1)?;
    let mut rows = Vec::new();
    for &q in q_list {
        let bracket: Vec<Polynomial> = ideal.generators().iter().map(|g| s.frobenius(g, q)).collect::<Result<_>>()?;
        let colength = ring.colength(&bracket)?;
        let quotient_res = resolve_generators(ring, &bracket, 2)?;
        for n in 1..=n_max {
            let pn = ring.p_pow(n)?;
            let twisted = frobenius_twist(&residue, pn)?;
            let tor1_residue = homology_length(&twisted, 1)?;
            let tor2_residue = homology_length(&twisted, 2)?;
            let twisted_residue = homology_length(&twisted, 0)?;
            let qpn = q.checked_mul(pn).ok_or(Error::ExponentOverflow)?;
            let twisted_colength = ring.bracket_colength(ideal.generators(), qpn)?;
            let tor1_quotient = twisted_homology(&quotient_res, 1, pn)?;
            let (l, t1, t2, fi, fk, tq) = (
                colength as u128,
                tor1_residue as u128,
                tor2_residue as u128,
                twisted_colength as u128,
                twisted_residue as u128,
                tor1_quotient as u128,
            );
            let lm1 = l.saturating_sub(1);
            let first = (lm1 * t1 + fi, l * fk);
            let second = (lm1 * t2 + tq + l * fk, l * t1 + fi);
            rows.push(InequalityRow {
                n,
                q,
                colength,
                twisted_colength,
                twisted_residue,
                tor1_residue,
                tor2_residue,
                tor1_quotient,
                first: (first.0, first.1, first.0 >= first.1),
                second: (second.0, second.1, second.0 >= second.1),
            });
        }
    }

    let cm = cm_depth(ring)?.is_cm;
    let colength = ehk_sequence(ring, &ring.maximal_ideal()?, n_max)?;
    let e_hk = extrapolate(&colength);
    let mut t = Vec::new();
    for i in 1..=alternating_bound.max(2) {
        let values = (1..=n_max)
            .map(|n| twisted_homology(&residue, i, ring.p_pow(n)?))
            .collect::<Result<Vec<_>>>()?;
        t.push(extrapolate(&LengthSequence::new(SequenceKind::Tor(i), ring.characteristic(), ring.dim(), values)?));
    }
    let one = int(1);
    let mut checks = vec![
        Check::new("ehk_minus_one_le_t1", &e_hk.richardson - &one, t[0].richardson.clone(), effective_tol(tol, &[&e_hk, &t[0]])),
        Check::new(
            "t1_minus_ehk_plus_one_le_t2",
            &t[0].richardson - &e_hk.richardson + &one,
            t[1].richardson.clone(),
            effective_tol(tol, &[&e_hk, &t[0], &t[1]]),
        ),
    ];
    // Σ_{j<=i} (-1)^{i-j} t_j + (-1)^i e_HK + (-1)^{i+1} >= 0, stated for Cohen–Macaulay rings.
    for i in 1..=alternating_bound {
        let sign = |k: usize| if k.is_multiple_of(2) { int(1) } else { int(-1) };
        let mut sum = sign(i) * &e_hk.richardson + sign(i + 1);
        for j in 1..=i {
            sum += sign(i - j) * &t[j - 1].richardson;
        }
        let mut used: Vec<&LimitEstimate> = t[..i].iter().collect();
        used.push(&e_hk);
        let c = Check::new(format!("alternating_sum_{i}"), -sum, BigRational::zero(), effective_tol(tol, &used));
        checks.push(if cm { c } else { c.informational() });
    }
    Ok(InequalityReport { rows, estimate_checks: checks, cm })
}

#[derive(Clone, Debug, PartialEq)]
pub struct LemmaReport {
    pub tor1: LengthSequence,
    pub koszul_h1: LengthSequence,
    /// Last normalized Tor_1 term below the first, or the sequence vanishes.
    pub tor1_decreasing: bool,
    pub koszul_decreasing: bool,
    /// `(n, ℓ(H_1(K(f^[p^n]))), ℓ(Tor_1(R/(f), F^n R)), bound holds)`.
    pub bounds: Vec<(u32, u64, u64, bool)>,
}

fn decreasing(s: &LengthSequence) -> bool {
    let a = s.normalized();
    s.all_zero() || a.last() < a.first()
}

/// Tor_1 of a system of parameters and its Koszul upper bound for `n = 1..=n_max`.
pub fn lemma_check(ring: &QuotientRing, sop: &[Polynomial], n_max: u32) -> Result<LemmaReport> {
    check_n_max(n_max)?;
    if sop.len() != ring.dim() {
        return Err(Error::Precondition(format!(
            "a system of parameters needs {} elements, got {}",
            ring.dim(),
            sop.len()
        )));
    }
    if let Some(g) = sop.iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(ring.format(g)));
    }
    let ideal = Ideal::new(ring.poly_ring(), sop.to_vec())?;
    check_primary(ring, &ideal)?;
    let tor1 = ti_sequence(ring, &ideal, 1, n_max)?;
    let koszul = koszul_complex(ring, sop)?;
    let h1 = (1..=n_max).map(|n| twisted_homology(&koszul, 1, ring.p_pow(n)?)).collect::<Result<Vec<_>>>()?;
    let koszul_h1 = LengthSequence::new(SequenceKind::KoszulH1, ring.characteristic(), ring.dim(), h1)?
        .with_labels(ring_label(ring), ideal_label(ring, &ideal));
    let bounds = (1..=n_max)
        .zip(koszul_h1.values.iter().zip(&tor1.values))
        .map(|(n, (&h, &t))| (n, h, t, h >= t))
        .collect();
    Ok(LemmaReport {
        tor1_decreasing: decreasing(&tor1),
        koszul_decreasing: decreasing(&koszul_h1),
        tor1,
        koszul_h1,
        bounds,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DepthReport {
    pub depth: usize,
    pub projective_dimension: usize,
    pub dim: usize,
    pub is_cm: bool,
}

/// Depth from the minimal resolution of `S/J` over `S` and `depth = m - pd`.
pub fn cm_depth(ring: &QuotientRing) -> Result<DepthReport> {
    let m = ring.nvars();
    let dim = ring.dim();
    if ring.is_polynomial_ring() {
        return Ok(DepthReport { depth: m, projective_dimension: 0, dim, is_cm: m == dim });
    }
    let s = QuotientRing::new(ring.poly_ring().clone(), Vec::new())?;
    let res = resolve_generators(&s, ring.relations().basis(), m + 1)?;
    let pd = res.ranks().iter().rposition(|&b| b > 0).unwrap_or(0);
    let depth = m.saturating_sub(pd);
    Ok(DepthReport { depth, projective_dimension: pd, dim, is_cm: depth == dim })
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorollaryReport {
    pub depth: DepthReport,
    /// Set when the Cohen–Macaulay hypothesis fails and the bound is not evaluated.
    pub skipped: Option<String>,
    pub multiplicity: i64,
    pub e_hk: Option<LimitEstimate>,
    pub t1: Option<LimitEstimate>,
    /// `e_HK - 1 <= ((e - 1) / e) t_1`.
    pub check: Option<Check>,
    /// `(e / (e - 1)) (e_HK - 1)` when `e > 1`.
    pub implied_t1_lower_bound: Option<BigRational>,
}

pub fn corollary_check(ring: &QuotientRing, n_max: u32, tol: &BigRational) -> Result<CorollaryReport> {
    let depth = cm_depth(ring)?;
    let multiplicity = ring.relations().hilbert_series()?.multiplicity();
    if !depth.is_cm {
        return Ok(CorollaryReport {
            skipped: Some(format!(
                "ring is not Cohen-Macaulay (depth {} < dim {}); bound not evaluated",
                depth.depth, depth.dim
            )),
            depth,
            multiplicity,
            e_hk: None,
            t1: None,
            check: None,
            implied_t1_lower_bound: None,
        });
    }
    let m = ring.maximal_ideal()?;
    let e_hk = extrapolate(&ehk_sequence(ring, &m, n_max)?);
    let t1 = extrapolate(&ti_sequence(ring, &m, 1, n_max)?);
    let e = int(multiplicity);
    let one = int(1);
    let factor = (&e - &one) / &e;
    let check = Check::new(
        "ehk_minus_one_le_scaled_t1",
        &e_hk.richardson - &one,
        &factor * &t1.richardson,
        effective_tol(tol, &[&e_hk, &t1]),
    );
    let implied = (multiplicity > 1).then(|| &e / (&e - &one) * (&e_hk.richardson - &one));
    Ok(CorollaryReport {
        depth,
        skipped: None,
        multiplicity,
        e_hk: Some(e_hk),
        t1: Some(t1),
        check: Some(check),
        implied_t1_lower_bound: implied,
    })
}
