use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, IdealPresentation};
use crate::polyarith::{Coeff, Monomial, Polynomial, Ring};

/// `J_b = (T_1 - b_1, ..., T_v - b_v)`.
pub fn point_ideal(ring: &Arc<Ring>, point: &[Coeff]) -> Result<IdealPresentation> {
    if point.len() != ring.nvars() {
        return Err(Error::Arity(format!(
            "point has {} coordinates, ring has {} variables",
            point.len(),
            ring.nvars()
        )));
    }
    let v = ring.nvars();
    let gens = point
        .iter()
        .enumerate()
        .map(|(i, b)| {
            Polynomial::from_terms(
                ring,
                [
                    (ring.field().one(), Monomial::var(v, i)),
                    (b.neg(), Monomial::one(v)),
                ],
            )
        })
        .collect::<Result<Vec<_>>>()?;
    if gens.is_empty() {
        // k[] itself: the maximal ideal is (0)
        return Ok(IdealPresentation::zero(ring));
    }
    IdealPresentation::new(ring, gens)
}

/// True iff `m = J_b`, which certifies `m` maximal with residue field `k`.
/// `false` means "not certified at this point", not "not maximal".
pub fn rational_maximal(m: &IdealPresentation, point: &[Coeff]) -> Result<bool> {
    let jb = point_ideal(m.ring(), point)?;
    ideal_equal(m, &jb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::{Field, MonomialOrder};

    fn ring(field: Field, names: &[&str]) -> Arc<Ring> {
        Ring::new(
            field,
            names.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::grevlex(),
        )
        .unwrap()
    }

    #[test]
    fn examples() {
        let r = ring(Field::Rational, &["x", "y"]);
        let m = IdealPresentation::parse(&r, "(x - 1, y - 2)").unwrap();
        let f = r.field();
        assert!(rational_maximal(&m, &[f.from_i64(1), f.from_i64(2)]).unwrap());
        assert!(!rational_maximal(&m, &[f.from_i64(2), f.from_i64(1)]).unwrap());

        let q = ring(Field::Rational, &["x"]);
        let m = IdealPresentation::parse(&q, "(x^2 + 1)").unwrap();
        for b in -5..=5 {
            assert!(!rational_maximal(&m, &[q.field().from_i64(b)]).unwrap());
        }

        let f5 = ring(Field::prime(5).unwrap(), &["x"]);
        let m = IdealPresentation::parse(&f5, "(x - 2, x^2 + 1)").unwrap();
        assert!(rational_maximal(&m, &[f5.field().from_i64(2)]).unwrap());
    }

    #[test]
    fn wrong_point_length() {
        let r = ring(Field::Rational, &["x", "y"]);
        let m = IdealPresentation::parse(&r, "(x, y)").unwrap();
        assert!(matches!(
            rational_maximal(&m, &[r.field().zero()]),
            Err(Error::Arity(_))
        ));
    }
}
