//! Gröbner bases and the ideal predicates built on them: membership,
//! inclusion, equality and vanishing in a quotient ring.

mod buchberger;
mod ideal;
mod reduce;

pub use buchberger::{buchberger, s_polynomial, GbLimits, GroebnerBasis};
pub use ideal::IdealPresentation;
pub use reduce::normal_form;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::Result;
use crate::polyarith::Polynomial;

const CACHE_CAPACITY: usize = 4096;

fn cache() -> &'static Mutex<HashMap<IdealPresentation, Arc<GroebnerBasis>>> {
    static CACHE: OnceLock<Mutex<HashMap<IdealPresentation, Arc<GroebnerBasis>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Memoized reduced Gröbner basis under default limits.
pub fn groebner_basis(ideal: &IdealPresentation) -> Result<Arc<GroebnerBasis>> {
    groebner_basis_with(ideal, &GbLimits::default())
}

/// Memoized reduced Gröbner basis. The lock is not held while computing, so
/// concurrent misses on the same key may both compute; the reduced basis is
/// unique, so whichever insert wins is the same value.
pub fn groebner_basis_with(
    ideal: &IdealPresentation,
    limits: &GbLimits,
) -> Result<Arc<GroebnerBasis>> {
    if let Some(gb) = cache().lock().expect("cache lock").get(ideal) {
        return Ok(gb.clone());
    }
    let gb = Arc::new(buchberger(ideal, limits)?);
    let mut map = cache().lock().expect("cache lock");
    if map.len() >= CACHE_CAPACITY {
        map.clear();
    }
    Ok(map.entry(ideal.clone()).or_insert(gb).clone())
}

/// `f` lies in the ideal generated by `ideal`.
pub fn ideal_member(f: &Polynomial, ideal: &IdealPresentation) -> Result<bool> {
    ideal.ring().check_same(f.ring())?;
    groebner_basis(ideal)?.contains(f)
}

/// `inner ⊆ outer`.
pub fn ideal_contains(inner: &IdealPresentation, outer: &IdealPresentation) -> Result<bool> {
    inner.check_same_ring(outer)?;
    let gb = groebner_basis(outer)?;
    for g in inner.nonzero_generators() {
        if !gb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Equality of ideals, decided by comparing reduced Gröbner bases.
pub fn ideal_equal(a: &IdealPresentation, b: &IdealPresentation) -> Result<bool> {
    a.check_same_ring(b)?;
    Ok(groebner_basis(a)?.basis() == groebner_basis(b)?.basis())
}

/// The residue of `f` in `k[T]/I` is zero.
pub fn quotient_is_zero(f: &Polynomial, ideal: &IdealPresentation) -> Result<bool> {
    ideal_member(f, ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::polyarith::{Field, MonomialOrder, Ring};

    fn ring(names: &[&str], order: MonomialOrder) -> Arc<crate::polyarith::Ring> {
        Ring::new(
            Field::Rational,
            names.iter().map(|s| s.to_string()).collect(),
            order,
        )
        .unwrap()
    }

    fn xy() -> Arc<Ring> {
        ring(&["x", "y"], MonomialOrder::grevlex())
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    fn ideal(r: &Arc<Ring>, s: &str) -> IdealPresentation {
        IdealPresentation::parse(r, s).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let r = xy();
        let x = p(&r, "x");
        assert!(normal_form(&x, std::slice::from_ref(&x)).unwrap().is_zero());
        assert_eq!(
            normal_form(&p(&r, "y"), std::slice::from_ref(&x)).unwrap(),
            p(&r, "y")
        );
        let nf = normal_form(&p(&r, "x^2*y"), &[p(&r, "x^2 - y")]).unwrap();
        assert_eq!(nf, p(&r, "y^2"));
    }

    #[test]
    fn normal_form_is_idempotent() {
        let r = xy();
        let g = [p(&r, "x^2 - y"), p(&r, "x*y - 1")];
        let f = p(&r, "x^3*y + 2*x*y^2 - y + 7");
        let once = normal_form(&f, &g).unwrap();
        assert_eq!(normal_form(&once, &g).unwrap(), once);
    }

    #[test]
    fn buchberger_examples() {
        let r = xy();
        let gb = buchberger(&ideal(&r, "(x^2 - y, x)"), &GbLimits::default()).unwrap();
        assert_eq!(gb.basis(), &[p(&r, "x"), p(&r, "y")]);

        let gb = buchberger(&IdealPresentation::zero(&r), &GbLimits::default()).unwrap();
        assert!(gb.basis().is_empty());

        let gb = buchberger(&ideal(&r, "(x - 1)"), &GbLimits::default()).unwrap();
        assert_eq!(gb.basis(), &[p(&r, "x - 1")]);

        let gb = buchberger(&ideal(&r, "(x*y - 1, x - y, 3)"), &GbLimits::default()).unwrap();
        assert!(gb.is_unit());
    }

    #[test]
    fn twisted_cubic_under_lex_and_grevlex() {
        let lex = ring(&["x", "y", "z"], MonomialOrder::lex());
        let gb = groebner_basis(&ideal(&lex, "(x^2 - y, x^3 - z)")).unwrap();
        let want: Vec<Polynomial> = ["x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"]
            .iter()
            .map(|s| p(&lex, s))
            .collect();
        assert_eq!(gb.basis(), want.as_slice());

        let grevlex = ring(&["x", "y", "z"], MonomialOrder::grevlex());
        let gb = groebner_basis(&ideal(&grevlex, "(x^2 - y, x^3 - z)")).unwrap();
        let want: Vec<Polynomial> = ["x^2 - y", "x*y - z", "y^2 - x*z"]
            .iter()
            .map(|s| p(&grevlex, s))
            .collect();
        assert_eq!(gb.basis(), want.as_slice());
    }

    #[test]
    fn degree_cap_is_reported() {
        let r = xy();
        let tight = GbLimits {
            max_pairs: 100,
            max_degree: 2,
        };
        let err = buchberger(&ideal(&r, "(x^3 - y)"), &tight).unwrap_err();
        assert!(matches!(err, Error::DegreeCapExceeded(_)));
        let few = GbLimits {
            max_pairs: 0,
            max_degree: 64,
        };
        let err = buchberger(&ideal(&r, "(x^2 - y, x*y - 1)"), &few).unwrap_err();
        assert!(matches!(err, Error::DegreeCapExceeded(_)));
    }

    #[test]
    fn membership_examples() {
        let r = xy();
        assert!(ideal_member(&p(&r, "x^2"), &ideal(&r, "(x)")).unwrap());
        assert!(!ideal_member(&p(&r, "y"), &ideal(&r, "(x)")).unwrap());
        assert!(ideal_member(&p(&r, "x + y"), &ideal(&r, "(x - y, 2*y)")).unwrap());
    }

    #[test]
    fn inclusion_and_equality() {
        let r = xy();
        assert!(ideal_contains(&ideal(&r, "(x^2)"), &ideal(&r, "(x)")).unwrap());
        assert!(!ideal_contains(&ideal(&r, "(x)"), &ideal(&r, "(x^2)")).unwrap());
        assert!(ideal_equal(&ideal(&r, "(x^2 - y, x)"), &ideal(&r, "(x, y)")).unwrap());
        let i = ideal(&r, "(x^3 - y*x, y^2 + 1)");
        assert!(ideal_equal(&i, &i).unwrap());
        let other = ring(&["x", "y"], MonomialOrder::lex());
        assert!(ideal_equal(&i, &ideal(&other, "(x)")).is_err());
    }

    #[test]
    fn quotient_vanishing() {
        let t = ring(&["T"], MonomialOrder::grevlex());
        assert!(quotient_is_zero(&p(&t, "T^2 - T^2"), &ideal(&t, "(T^3)")).unwrap());
        assert!(!quotient_is_zero(&p(&t, "T"), &ideal(&t, "(T^2)")).unwrap());
        let tt = ring(&["T1", "T2"], MonomialOrder::grevlex());
        assert!(quotient_is_zero(&p(&tt, "T1*T2 - 1"), &ideal(&tt, "(T1*T2 - 1)")).unwrap());
    }

    #[test]
    fn zero_generators_are_normalized() {
        let r = xy();
        let i = IdealPresentation::new(&r, vec![Polynomial::zero(&r), p(&r, "x")]).unwrap();
        assert_eq!(i.generators(), &[p(&r, "x")]);
        let z = IdealPresentation::new(&r, vec![Polynomial::zero(&r)]).unwrap();
        assert!(z.is_zero_ideal());
        assert!(IdealPresentation::new(&r, vec![]).is_err());
    }
}
