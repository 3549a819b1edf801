use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, ideal_contains, IdealPresentation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightResult {
    pub dimension: usize,
    pub height: usize,
    /// Always `"codimension"`: height is reported as `v - dim`, which is the
    /// minimum height over the top-dimensional minimal primes.
    pub convention: String,
}

/// Krull dimension of `k[T]/I`: the largest set of variables `U` such that
/// no leading monomial of the reduced basis is supported inside `U`.
pub fn dimension(ideal: &IdealPresentation) -> Result<usize> {
    let gb = groebner_basis(ideal)?;
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let nvars = ideal.nvars();
    if nvars > 64 {
        return Err(Error::InvalidArgument(format!(
            "{nvars} variables exceed the 64-variable limit"
        )));
    }
    let mut masks: Vec<u64> = gb
        .leading_monomials()
        .iter()
        .map(|m| m.support_mask())
        .collect();
    masks.sort_unstable();
    masks.dedup();
    let mut best = 0;
    grow(0, 0, 0, nvars, &masks, &mut best);
    Ok(best)
}

/// Branch-and-bound over variables in index order: each variable is either
/// added to the current independent set (when no support lands inside it)
/// or skipped.
fn grow(next: usize, set: u64, size: usize, nvars: usize, masks: &[u64], best: &mut usize) {
    if size > *best {
        *best = size;
    }
    if next == nvars || size + (nvars - next) <= *best {
        return;
    }
    let with = set | (1 << next);
    if masks.iter().all(|&m| m & !with != 0) {
        grow(next + 1, with, size + 1, nvars, masks, best);
    }
    grow(next + 1, set, size, nvars, masks, best);
}

pub fn height_poly(ideal: &IdealPresentation) -> Result<HeightResult> {
    let dimension = dimension(ideal)?;
    Ok(HeightResult {
        dimension,
        height: ideal.nvars() - dimension,
        convention: "codimension".to_string(),
    })
}

/// Height of `m` in `k[T]/I`, computed as `ht(m) - ht(I)`.
pub fn height_in_quotient(m: &IdealPresentation, ideal: &IdealPresentation) -> Result<usize> {
    m.check_same_ring(ideal)?;
    let hm = height_poly(m)?;
    let hi = height_poly(ideal)?;
    if !ideal_contains(ideal, m)? {
        return Err(Error::NotContained);
    }
    Ok(hm.height - hi.height)
}
