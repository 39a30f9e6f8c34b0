use super::cache;
use super::engine::{groebner_basis, Reducer};
use super::hilbert::{monomial_numerator, HilbertSeries};
use super::staircase::count_standard;
use super::vector::{ModVec, VecArith};
use crate::algebra::{Monomial, PolyRing, Polynomial};
use crate::error::{Error, Result};

/// An ideal of S together with its reduced Gröbner basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: PolyRing,
    generators: Vec<Polynomial>,
    basis: Vec<Polynomial>,
}

/// Reduced Gröbner basis of the ideal generated by `gens` under the ring's order.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial]) -> Result<Ideal> {
    Ideal::new(ring, gens.to_vec())
}

pub(crate) fn compute_basis(ring: &PolyRing, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let ar = VecArith::new(ring);
    let vecs = gens.iter().map(|g| ModVec::from_poly(g, 0)).collect();
    let gb = groebner_basis(&ar, 1, vecs, &[0])?;
    Ok(gb.iter().map(|v| v.component(0)).collect())
}

impl Ideal {
    pub fn new(ring: &PolyRing, generators: Vec<Polynomial>) -> Result<Self> {
        let basis = match cache::current_store() {
            None => compute_basis(ring, &generators)?,
            Some(store) => {
                let key = cache::basis_key(ring, &generators);
                match store.load(&key).map(|text| cache::decode_basis(ring, &text)) {
                    Some(Some(basis)) => basis,
                    hit => {
                        if hit.is_some() {
                            store.corrupt(&key);
                        }
                        let basis = compute_basis(ring, &generators)?;
                        store.store(&key, &cache::encode_basis(&basis));
                        basis
                    }
                }
            }
        };
        Ok(Ideal { ring: ring.clone(), generators, basis })
    }

    pub fn zero(ring: &PolyRing) -> Self {
        Ideal { ring: ring.clone(), generators: Vec::new(), basis: Vec::new() }
    }

    /// The homogeneous maximal ideal (x_1, ..., x_m).
    pub fn maximal(ring: &PolyRing) -> Result<Self> {
        Self::new(ring, (0..ring.nvars()).map(|i| ring.var(i)).collect())
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(Polynomial::is_unit_constant)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.lead().unwrap().mon.clone()).collect()
    }

    fn reducer(&self) -> Reducer {
        Reducer::new(self.basis.iter().map(|g| ModVec::from_poly(g, 0)).collect())
    }

    /// Unique remainder of `f` on division by the reduced basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let ar = VecArith::new(&self.ring);
        self.reducer().reduce(&ar, ModVec::from_poly(f, 0), None, None).component(0)
    }

    pub fn normal_forms(&self, fs: &[Polynomial]) -> Vec<Polynomial> {
        let ar = VecArith::new(&self.ring);
        let red = self.reducer();
        fs.iter().map(|f| red.reduce(&ar, ModVec::from_poly(f, 0), None, None).component(0)).collect()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// `I + (extra)`, sharing the generator list.
    pub fn extend(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(extra);
        Ideal::new(&self.ring, gens)
    }

    /// The bracket power `I^[q]` generated by the `q`-th powers of the generators.
    pub fn bracket_power(&self, q: u64) -> Result<Ideal> {
        let gens = self.generators.iter().map(|g| self.ring.frobenius(g, q)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// `dim_k S/I`, counted as standard monomials.
    pub fn colength(&self) -> Result<u64> {
        let lts: Vec<Vec<u32>> = self.leading_monomials().iter().map(|m| m.exps().to_vec()).collect();
        count_standard(&lts, self.ring.nvars()).map_err(|v| Error::NotFiniteLength(self.ring.names()[v].clone()))
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.colength().is_ok()
    }

    /// Largest set of variables containing the support of no leading monomial.
    pub fn krull_dimension(&self) -> usize {
        let n = self.ring.nvars();
        if self.is_unit() {
            return 0;
        }
        assert!(n < 64, "krull_dimension supports fewer than 64 variables");
        let supports: Vec<u64> = self.leading_monomials().iter().map(Monomial::support).collect();
        let mut best = 0;
        for subset in 0u64..(1u64 << n) {
            let size = subset.count_ones() as usize;
            if size > best && supports.iter().all(|&s| s & !subset != 0) {
                best = size;
            }
        }
        best
    }

    /// Hilbert series of S/I over `(1 - t)^m`, not yet reduced.
    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        if let Some(g) = self.generators.iter().find(|g| !g.is_homogeneous()) {
            return Err(Error::NotHomogeneous(self.ring.format(g)));
        }
        let lts: Vec<Vec<u32>> = self.leading_monomials().iter().map(|m| m.exps().to_vec()).collect();
        Ok(HilbertSeries { numerator: monomial_numerator(&lts), denominator_exp: self.ring.nvars() })
    }
}

/// Checks the Gröbner property directly: every S-polynomial of two basis
/// elements reduces to zero against the basis.
pub fn is_groebner_basis(ring: &PolyRing, basis: &[Polynomial]) -> bool {
    let ar = VecArith::new(ring);
    let vecs: Vec<ModVec> = basis.iter().filter(|g| !g.is_zero()).map(|g| ModVec::from_poly(g, 0)).collect();
    let red = Reducer::new(vecs.clone());
    for i in 0..vecs.len() {
        for j in i + 1..vecs.len() {
            let (a, b) = (vecs[i].lead().unwrap(), vecs[j].lead().unwrap());
            let l = a.mon.lcm(&b.mon);
            let ma = a.mon.quotient_of(&l).unwrap();
            let mb = b.mon.quotient_of(&l).unwrap();
            let k = &ar.field;
            let s = ar.add_scaled(&ar.add_scaled(&ModVec::zero(), k.inv(a.coeff), &ma, &vecs[i]), k.neg(k.inv(b.coeff)), &mb, &vecs[j]);
            if !red.reduce(&ar, s, None, None).is_zero() {
                return false;
            }
        }
    }
    true
}
