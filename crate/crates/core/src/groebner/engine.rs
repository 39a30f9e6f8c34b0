//! Buchberger's algorithm for submodules of S^r.
//!
//! Pairs are processed by lowest (shifted) degree of their lcm, and pruned
//! with the Gebauer–Möller installation of Buchberger's two criteria. The
//! coprime-leading-term criterion is only sound for ideals, so it is applied
//! only when the ambient rank is one.

use super::limits;
use super::vector::{ModTerm, ModVec, VecArith};
use crate::algebra::Monomial;
use crate::error::Result;

#[derive(Clone, Debug)]
struct Lead {
    comp: u32,
    mon: Monomial,
    mask: u64,
}

impl Lead {
    fn of(v: &ModVec) -> Lead {
        let t = v.lead().expect("nonzero");
        Lead { comp: t.comp, mon: t.mon.clone(), mask: t.mon.support() }
    }

    #[inline]
    fn divides(&self, t: &ModTerm, mask: u64) -> bool {
        self.comp == t.comp && self.mask & !mask == 0 && self.mon.divides(&t.mon)
    }
}

/// A list of monic reducers with cached leading terms.
#[derive(Clone, Debug, Default)]
pub(crate) struct Reducer {
    elems: Vec<ModVec>,
    leads: Vec<Lead>,
}

impl Reducer {
    pub fn new(elems: Vec<ModVec>) -> Self {
        let leads = elems.iter().map(Lead::of).collect();
        Reducer { elems, leads }
    }

    pub fn into_elems(self) -> Vec<ModVec> {
        self.elems
    }

    fn push(&mut self, v: ModVec) {
        self.leads.push(Lead::of(&v));
        self.elems.push(v);
    }

    fn find(&self, t: &ModTerm, active: Option<&[usize]>, skip: Option<usize>) -> Option<usize> {
        let mask = t.mon.support();
        match active {
            Some(idx) => idx.iter().copied().find(|&i| Some(i) != skip && self.leads[i].divides(t, mask)),
            None => (0..self.leads.len()).find(|&i| Some(i) != skip && self.leads[i].divides(t, mask)),
        }
    }

    /// Full normal form of `f`; reducers restricted to `active` when given.
    pub fn reduce(&self, ar: &VecArith, mut f: ModVec, active: Option<&[usize]>, skip: Option<usize>) -> ModVec {
        let mut done: Vec<ModTerm> = Vec::new();
        let mut pos = 0;
        while pos < f.len() {
            let t = &f.terms()[pos];
            match self.find(t, active, skip) {
                Some(i) => {
                    let g = &self.elems[i];
                    let q = self.leads[i].mon.quotient_of(&t.mon).expect("divisor");
                    let c = ar.field.neg(t.coeff);
                    done.extend_from_slice(&f.terms()[..pos]);
                    f = ar.add_scaled_from(&f, pos, c, &q, g);
                    pos = 0;
                }
                None => pos += 1,
            }
        }
        done.extend_from_slice(f.terms());
        ModVec::from_sorted(done)
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    comp: u32,
    lcm: Monomial,
    degree: i64,
}

/// Computes the reduced Gröbner basis of the submodule generated by `gens`.
///
/// `shifts[c]` is the degree of the basis vector `e_c`; it only steers pair
/// selection. The output is monic, interreduced, and sorted by increasing
/// leading term.
pub(crate) fn groebner_basis(ar: &VecArith, rank: usize, gens: Vec<ModVec>, shifts: &[i64]) -> Result<Vec<ModVec>> {
    let shift = |c: u32| shifts.get(c as usize).copied().unwrap_or(0);
    let vdeg = |v: &ModVec| v.terms().iter().map(|t| t.mon.degree() as i64 + shift(t.comp)).max().unwrap_or(0);

    let mut input: Vec<ModVec> = gens.into_iter().filter(|v| !v.is_zero()).collect();
    input.sort_by(|a, b| {
        vdeg(a).cmp(&vdeg(b)).then_with(|| {
            let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
            ar.order.cmp(x.comp, &x.mon, y.comp, &y.mon)
        })
    });

    let mut basis = Reducer::default();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let ideal_case = rank == 1;

    let insert = |h: ModVec, basis: &mut Reducer, active: &mut Vec<usize>, pairs: &mut Vec<Pair>| {
        let k = basis.elems.len();
        basis.push(h);
        let hl = basis.leads[k].clone();

        // chain criterion on the existing pairs
        pairs.retain(|p| {
            if p.comp != hl.comp || !hl.mon.divides(&p.lcm) {
                return true;
            }
            let li = basis.leads[p.i].mon.lcm(&hl.mon);
            let lj = basis.leads[p.j].mon.lcm(&hl.mon);
            li == p.lcm || lj == p.lcm
        });

        let mut cand: Vec<(usize, Monomial, bool)> = active
            .iter()
            .copied()
            .filter(|&i| basis.leads[i].comp == hl.comp)
            .map(|i| {
                let l = &basis.leads[i].mon;
                (i, l.lcm(&hl.mon), l.is_coprime(&hl.mon))
            })
            .collect();
        // M: drop pairs whose lcm is a proper multiple of another new lcm
        let lcms: Vec<Monomial> = cand.iter().map(|c| c.1.clone()).collect();
        cand.retain(|(_, l, _)| !lcms.iter().any(|o| o != l && o.divides(l)));
        // F and B1: one representative per lcm, none if some member is coprime
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        let mut seen: Vec<Monomial> = Vec::new();
        for (i, l, _) in &cand {
            if seen.contains(l) {
                continue;
            }
            seen.push(l.clone());
            let coprime = ideal_case && cand.iter().any(|(_, l2, c)| l2 == l && *c);
            if !coprime {
                kept.push((*i, l.clone()));
            }
        }
        for (i, l) in kept {
            let degree = l.degree() as i64 + shift(hl.comp);
            pairs.push(Pair { i, j: k, comp: hl.comp, lcm: l, degree });
        }

        active.retain(|&i| !(basis.leads[i].comp == hl.comp && hl.mon.divides(&basis.leads[i].mon)));
        active.push(k);
    };

    let sort_pairs = |pairs: &mut Vec<Pair>| {
        // descending, so the next pair is popped from the back
        pairs.sort_by(|a, b| {
            b.degree
                .cmp(&a.degree)
                .then_with(|| ar.order.cmp(b.comp, &b.lcm, a.comp, &a.lcm))
                .then_with(|| (b.j, b.i).cmp(&(a.j, a.i)))
        });
    };

    for g in input {
        limits::check()?;
        let mut h = basis.reduce(ar, g, Some(&active), None);
        if h.is_zero() {
            continue;
        }
        h.make_monic(&ar.field);
        insert(h, &mut basis, &mut active, &mut pairs);
    }
    sort_pairs(&mut pairs);

    while let Some(pair) = pairs.pop() {
        limits::check()?;
        let (gi, gj) = (&basis.elems[pair.i], &basis.elems[pair.j]);
        let mi = basis.leads[pair.i].mon.quotient_of(&pair.lcm).expect("lcm");
        let mj = basis.leads[pair.j].mon.quotient_of(&pair.lcm).expect("lcm");
        let s = ar.add_scaled(&ar.add_scaled(&ModVec::zero(), 1, &mi, gi), ar.field.neg(1), &mj, gj);
        let mut h = basis.reduce(ar, s, Some(&active), None);
        if h.is_zero() {
            continue;
        }
        h.make_monic(&ar.field);
        insert(h, &mut basis, &mut active, &mut pairs);
        sort_pairs(&mut pairs);
    }

    Ok(interreduce(ar, basis.into_elems(), &active))
}

/// Minimalizes and tail-reduces a Gröbner basis; `active` indexes a subset
/// whose leading terms already generate the leading module.
pub(crate) fn interreduce(ar: &VecArith, elems: Vec<ModVec>, active: &[usize]) -> Vec<ModVec> {
    let mut minimal: Vec<ModVec> = Vec::new();
    let mut cands: Vec<ModVec> = active.iter().map(|&i| elems[i].clone()).collect();
    cands.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        ar.order.cmp(x.comp, &x.mon, y.comp, &y.mon)
    });
    for v in cands {
        let l = v.lead().unwrap();
        let redundant = minimal.iter().any(|m| {
            let ml = m.lead().unwrap();
            ml.comp == l.comp && ml.mon.divides(&l.mon)
        });
        if !redundant {
            minimal.push(v);
        }
    }
    let reducer = Reducer::new(minimal);
    let mut out = Vec::with_capacity(reducer.elems.len());
    for (i, v) in reducer.elems.iter().enumerate() {
        let mut r = reducer.reduce(ar, v.clone(), None, Some(i));
        r.make_monic(&ar.field);
        out.push(r);
    }
    out
}
