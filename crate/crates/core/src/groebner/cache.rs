//! Pluggable persistence for reduced Gröbner bases of ideals.
//!
//! The engine only knows how to key and serialize a basis; where the bytes
//! live is up to the installed [`BasisStore`] (the CLI provides an on-disk one).

use std::fmt::Write as _;
use std::sync::{Arc, RwLock};

use sha2::{Digest, Sha256};

use crate::algebra::{Monomial, PolyRing, Polynomial};

pub trait BasisStore: Send + Sync {
    fn load(&self, key: &str) -> Option<String>;
    fn store(&self, key: &str, value: &str);
    /// Called when a stored value fails validation.
    fn corrupt(&self, key: &str) {
        log::warn!("discarding corrupt cache entry {key}");
    }
}

static STORE: RwLock<Option<Arc<dyn BasisStore>>> = RwLock::new(None);

/// Installs `store` process-wide, returning the previous one.
pub fn install_store(store: Option<Arc<dyn BasisStore>>) -> Option<Arc<dyn BasisStore>> {
    std::mem::replace(&mut *STORE.write().unwrap(), store)
}

pub(crate) fn current_store() -> Option<Arc<dyn BasisStore>> {
    STORE.read().unwrap().clone()
}

const HEADER: &str = "frobreg-gb v1";

fn encode_poly(f: &Polynomial) -> String {
    let mut s = String::new();
    for (i, t) in f.terms().iter().enumerate() {
        if i > 0 {
            s.push(';');
        }
        write!(s, "{}:", t.coeff).unwrap();
        let exps: Vec<String> = t.mon.exps().iter().map(u32::to_string).collect();
        s.push_str(&exps.join(","));
    }
    s
}

/// Content key from the characteristic, order, and sorted monic generators.
pub fn basis_key(ring: &PolyRing, gens: &[Polynomial]) -> String {
    let k = ring.field();
    let mut canon: Vec<String> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| encode_poly(&ring.scale(g, k.inv(g.lead().unwrap().coeff))))
        .collect();
    canon.sort();
    canon.dedup();
    let mut h = Sha256::new();
    h.update(format!("p={};order={};nvars={}\n", ring.characteristic(), ring.order().name(), ring.nvars()));
    for c in &canon {
        h.update(c.as_bytes());
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

pub(crate) fn encode_basis(basis: &[Polynomial]) -> String {
    let body: String = basis.iter().map(|f| encode_poly(f) + "\n").collect();
    let digest = hex::encode(Sha256::digest(body.as_bytes()));
    format!("{HEADER}\n{body}checksum {digest}\n")
}

pub(crate) fn decode_basis(ring: &PolyRing, text: &str) -> Option<Vec<Polynomial>> {
    let rest = text.strip_prefix(HEADER)?.strip_prefix('\n')?;
    let (body, tail) = rest.rsplit_once("checksum ")?;
    if hex::encode(Sha256::digest(body.as_bytes())) != tail.trim_end() {
        return None;
    }
    let k = ring.field();
    let mut out = Vec::new();
    for line in body.lines() {
        let mut pairs = Vec::new();
        for term in line.split(';').filter(|t| !t.is_empty()) {
            let (c, e) = term.split_once(':')?;
            let c: u32 = c.parse().ok()?;
            let exps: Vec<u32> = e.split(',').map(|x| x.parse().ok()).collect::<Option<_>>()?;
            if exps.len() != ring.nvars() || c == 0 || c >= k.characteristic() {
                return None;
            }
            pairs.push((Monomial::new(&exps), c as i64));
        }
        let f = ring.from_terms(pairs).ok()?;
        if f.is_zero() {
            return None;
        }
        out.push(f);
    }
    Some(out)
}
