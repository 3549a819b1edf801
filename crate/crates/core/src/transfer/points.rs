use crate::error::{Error, Result};
use crate::groebner::IdealPresentation;
use crate::polyarith::{Coeff, Field};

/// Default cap on generator evaluations for [`search_witness_points`].
pub const DEFAULT_POINT_BUDGET: u128 = 1_000_000;

/// All points of `F_p^v` where every generator of `ideal` vanishes, in
/// lexicographic order of coordinates.
///
/// The search costs `p^v` times the number of generators evaluations and
/// refuses to start when that exceeds `budget`.
pub fn search_witness_points(
    ideal: &IdealPresentation,
    p: u64,
    budget: u128,
) -> Result<Vec<Vec<Coeff>>> {
    let field = Field::prime(p)?;
    if ideal.ring().field() != field {
        return Err(Error::FieldMismatch(format!(
            "point search over F_{p} needs an ideal over F_{p}, got {}",
            ideal.ring().field()
        )));
    }
    let v = ideal.nvars();
    let gens: Vec<_> = ideal.nonzero_generators().collect();
    let needed = u32::try_from(v)
        .ok()
        .and_then(|v| (p as u128).checked_pow(v))
        .and_then(|n| n.checked_mul(gens.len().max(1) as u128))
        .unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }

    let mut found = Vec::new();
    let mut digits = vec![0u64; v];
    loop {
        let point: Vec<Coeff> = digits.iter().map(|&d| field.from_i64(d as i64)).collect();
        let mut vanishes = true;
        for g in &gens {
            if !g.evaluate(&point)?.is_zero() {
                vanishes = false;
                break;
            }
        }
        if vanishes {
            found.push(point);
        }
        // odometer with the last coordinate fastest
        let mut k = v;
        loop {
            if k == 0 {
                return Ok(found);
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < p {
                break;
            }
            digits[k] = 0;
        }
    }
}
