//! Counting standard monomials of zero-dimensional monomial ideals.

/// Number of monomials in `nvars` variables divisible by none of `gens`.
///
/// Returns `Err(v)` with the index of a variable that has no pure power
/// among the generators (the count is infinite). A generator equal to `1`
/// yields zero.
pub fn count_standard(gens: &[Vec<u32>], nvars: usize) -> Result<u64, usize> {
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Ok(0);
    }
    for v in 0..nvars {
        let has_pure = gens.iter().any(|g| g[v] > 0 && g.iter().enumerate().all(|(i, &e)| i == v || e == 0));
        if !has_pure {
            return Err(v);
        }
    }
    Ok(count_rec(&minimalize(gens.to_vec()), nvars))
}

fn minimalize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort();
    gens.dedup();
    let divides = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);
    let snapshot = gens.clone();
    gens.retain(|g| !snapshot.iter().any(|h| h != g && divides(h, g)));
    gens
}

// Slices along the last variable: between consecutive breakpoints of its
// exponent the projected ideal is constant.
fn count_rec(gens: &[Vec<u32>], n: usize) -> u64 {
    if gens.iter().any(|g| g[..n].iter().all(|&e| e == 0)) {
        return 0;
    }
    if n == 0 {
        return 1;
    }
    let v = n - 1;
    let bound = gens
        .iter()
        .filter(|g| g[..v].iter().all(|&e| e == 0))
        .map(|g| g[v])
        .min()
        .expect("pure power of every variable");
    let mut breaks: Vec<u32> = gens.iter().map(|g| g[v]).filter(|&e| e < bound).collect();
    breaks.push(0);
    breaks.push(bound);
    breaks.sort_unstable();
    breaks.dedup();
    let mut total = 0u64;
    for w in breaks.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let slice: Vec<Vec<u32>> = gens.iter().filter(|g| g[v] <= lo).map(|g| g[..v].to_vec()).collect();
        let slice = minimalize(slice);
        total += count_rec(&slice, v) * (hi - lo) as u64;
    }
    total
}
