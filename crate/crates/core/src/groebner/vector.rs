//! Elements of free modules S^r under a position-over-term order.

use std::cmp::Ordering;

use crate::algebra::{Monomial, MonomialOrder, PolyRing, Polynomial, PrimeField, Term};

/// A term `coeff * mon * e_comp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModTerm {
    pub comp: u32,
    pub mon: Monomial,
    pub coeff: u32,
}

/// Position-over-term: lower component index dominates, then the monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    pub mon: MonomialOrder,
}

impl ModuleOrder {
    #[inline]
    pub fn cmp(&self, ac: u32, am: &Monomial, bc: u32, bm: &Monomial) -> Ordering {
        match bc.cmp(&ac) {
            Ordering::Equal => self.mon.cmp(am, bm),
            o => o,
        }
    }
}

/// A vector in S^r stored as a strictly descending list of nonzero terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ModVec {
    terms: Vec<ModTerm>,
}

impl ModVec {
    pub fn zero() -> Self {
        ModVec { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[ModTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&ModTerm> {
        self.terms.first()
    }

    pub(crate) fn from_sorted(terms: Vec<ModTerm>) -> Self {
        ModVec { terms }
    }

    /// Polynomial `f` placed in component `comp`.
    pub fn from_poly(f: &Polynomial, comp: usize) -> Self {
        ModVec {
            terms: f
                .terms()
                .iter()
                .map(|t| ModTerm { comp: comp as u32, mon: t.mon.clone(), coeff: t.coeff })
                .collect(),
        }
    }

    /// Column vector with entry `i` in component `offset + i`.
    pub fn from_column(column: &[Polynomial], offset: usize) -> Self {
        let mut terms = Vec::new();
        for (i, f) in column.iter().enumerate() {
            terms.extend(f.terms().iter().map(|t| ModTerm {
                comp: (offset + i) as u32,
                mon: t.mon.clone(),
                coeff: t.coeff,
            }));
        }
        ModVec { terms }
    }

    /// Concatenates vectors living in pairwise disjoint, increasing component ranges.
    pub fn concat(parts: Vec<ModVec>) -> Self {
        ModVec { terms: parts.into_iter().flat_map(|v| v.terms).collect() }
    }

    /// Entry in component `comp` as a polynomial.
    pub fn component(&self, comp: usize) -> Polynomial {
        Polynomial::from_sorted(
            self.terms
                .iter()
                .filter(|t| t.comp as usize == comp)
                .map(|t| Term { mon: t.mon.clone(), coeff: t.coeff })
                .collect(),
        )
    }

    /// Entries in components `start..start + len` as a column.
    pub fn to_column(&self, start: usize, len: usize) -> Vec<Polynomial> {
        let mut col = vec![Vec::new(); len];
        for t in &self.terms {
            let c = t.comp as usize;
            if c >= start && c < start + len {
                col[c - start].push(Term { mon: t.mon.clone(), coeff: t.coeff });
            }
        }
        col.into_iter().map(Polynomial::from_sorted).collect()
    }

    pub(crate) fn scale(&mut self, k: &PrimeField, c: u32) {
        for t in &mut self.terms {
            t.coeff = k.mul(t.coeff, c);
        }
    }

    pub(crate) fn make_monic(&mut self, k: &PrimeField) {
        if let Some(lc) = self.terms.first().map(|t| t.coeff) {
            if lc != 1 {
                self.scale(k, k.inv(lc));
            }
        }
    }
}

/// Arithmetic context: coefficient field plus module order.
#[derive(Clone, Debug)]
pub struct VecArith {
    pub field: PrimeField,
    pub order: ModuleOrder,
}

impl VecArith {
    pub fn new(ring: &PolyRing) -> Self {
        VecArith { field: *ring.field(), order: ModuleOrder { mon: ring.order() } }
    }

    /// `f[from..] + c * m * g`, merged. Terms of `f` before `from` are dropped.
    pub fn add_scaled_from(&self, f: &ModVec, from: usize, c: u32, m: &Monomial, g: &ModVec) -> ModVec {
        let k = &self.field;
        let ft = &f.terms[from..];
        let mut out = Vec::with_capacity(ft.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < ft.len() && j < g.terms.len() {
            let gt = &g.terms[j];
            let gm = gt.mon.mul(m);
            match self.order.cmp(ft[i].comp, &ft[i].mon, gt.comp, &gm) {
                Ordering::Greater => {
                    out.push(ft[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(ModTerm { comp: gt.comp, mon: gm, coeff: k.mul(gt.coeff, c) });
                    j += 1;
                }
                Ordering::Equal => {
                    let s = k.add(ft[i].coeff, k.mul(gt.coeff, c));
                    if s != 0 {
                        out.push(ModTerm { comp: gt.comp, mon: gm, coeff: s });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&ft[i..]);
        for gt in &g.terms[j..] {
            out.push(ModTerm { comp: gt.comp, mon: gt.mon.mul(m), coeff: k.mul(gt.coeff, c) });
        }
        ModVec { terms: out }
    }

    pub fn add_scaled(&self, f: &ModVec, c: u32, m: &Monomial, g: &ModVec) -> ModVec {
        self.add_scaled_from(f, 0, c, m, g)
    }
}
