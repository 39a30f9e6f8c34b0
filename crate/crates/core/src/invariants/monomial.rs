use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Exact Hilbert–Kunz multiplicity of a monomial ideal of finite colength in
/// a polynomial ring.
///
/// Equals the volume of `[0, ∞)^m` outside the union of the orthants
/// `a + [0, ∞)^m`, computed by inclusion–exclusion over generator subsets.
/// Subsets whose join leaves the bounding box contribute nothing and are
/// pruned together with all their supersets.
pub fn monomial_ehk_exact(gens: &[Vec<u32>]) -> Result<BigRational> {
    let m = gens.first().map(|g| g.len()).unwrap_or(0);
    if gens.iter().any(|g| g.len() != m) {
        return Err(Error::ArityMismatch { expected: m, found: gens.iter().map(|g| g.len()).find(|&l| l != m).unwrap() });
    }
    let mut minimal: Vec<Vec<u32>> = Vec::new();
    for g in gens {
        if !gens.iter().any(|h| h != g && divides(h, g)) && !minimal.contains(g) {
            minimal.push(g.clone());
        }
    }
    let mut bounds = vec![None::<u32>; m];
    for g in &minimal {
        let support: Vec<usize> = (0..m).filter(|&k| g[k] > 0).collect();
        if let [k] = support[..] {
            bounds[k] = Some(bounds[k].map_or(g[k], |b: u32| b.min(g[k])));
        }
        if support.is_empty() {
            return Ok(BigRational::from_integer(BigInt::from(0)));
        }
    }
    let bounds: Vec<u32> = bounds
        .into_iter()
        .enumerate()
        .map(|(k, b)| b.ok_or_else(|| Error::NotFiniteLength(format!("no pure power of variable {} in the ideal", k + 1))))
        .collect::<Result<_>>()?;
    let inside: Vec<&Vec<u32>> = minimal.iter().filter(|g| g.iter().zip(&bounds).all(|(a, b)| a < b)).collect();
    let boxvol: BigInt = bounds.iter().map(|&b| BigInt::from(b)).product();
    let mut union = BigInt::from(0);
    let mut join = vec![0u32; m];
    inclusion_exclusion(&inside, &bounds, 0, &mut join, 0, &mut union);
    Ok(BigRational::from_integer(boxvol - union))
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn inclusion_exclusion(gens: &[&Vec<u32>], bounds: &[u32], start: usize, join: &mut Vec<u32>, depth: usize, acc: &mut BigInt) {
    for i in start..gens.len() {
        let saved = join.clone();
        for (j, &a) in join.iter_mut().zip(gens[i].iter()) {
            *j = (*j).max(a);
        }
        if join.iter().zip(bounds).all(|(a, b)| a < b) {
            let vol: BigInt = join.iter().zip(bounds).map(|(&a, &b)| BigInt::from(b - a)).product();
            if depth.is_multiple_of(2) {
                *acc += vol;
            } else {
                *acc -= vol;
            }
            inclusion_exclusion(gens, bounds, i + 1, join, depth + 1, acc);
        }
        *join = saved;
    }
}
