use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::IdealPresentation;
use crate::polyarith::{Coeff, Field, Polynomial};
use crate::transfer::{DiophantineSystem, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BadReason {
    /// Divides a coefficient denominator.
    Denominator,
    /// Kills the leading coefficient of a generator.
    LeadingCoeff,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadPrime {
    pub prime: u64,
    pub reasons: Vec<BadReason>,
}

/// The finite set of primes at which reduction of a witness breaks down.
///
/// Kept as the integers whose prime divisors are bad, so membership is exact
/// even when an integer is too large to factor completely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadPrimes {
    sources: Vec<(BigInt, BadReason)>,
}

const TRIAL_DIVISION_LIMIT: u64 = 1 << 20;

impl BadPrimes {
    /// Reasons `p` is bad, empty if it is good.
    pub fn reasons(&self, p: u64) -> Vec<BadReason> {
        let bp = BigInt::from(p);
        let set: BTreeSet<BadReason> = self
            .sources
            .iter()
            .filter(|(n, _)| n.is_multiple_of(&bp))
            .map(|(_, r)| *r)
            .collect();
        set.into_iter().collect()
    }

    pub fn is_bad(&self, p: u64) -> bool {
        !self.reasons(p).is_empty()
    }

    /// Every bad prime found by trial division, plus the cofactors that could
    /// not be split (each has only prime factors above the trial limit).
    pub fn factored(&self) -> (Vec<(u64, Vec<BadReason>)>, Vec<BigInt>) {
        let mut primes: BTreeMap<u64, BTreeSet<BadReason>> = BTreeMap::new();
        let mut rest = Vec::new();
        for (n, reason) in &self.sources {
            let (found, cofactor) = factor(n);
            for p in found {
                primes.entry(p).or_default().insert(*reason);
            }
            if let Some(c) = cofactor {
                rest.push(c);
            }
        }
        let listed = primes
            .into_iter()
            .map(|(p, r)| {
                let reasons = self.reasons(p);
                debug_assert!(r.iter().all(|x| reasons.contains(x)));
                (p, reasons)
            })
            .collect();
        rest.sort();
        rest.dedup();
        (listed, rest)
    }
}

/// Prime factors up to the trial limit, and whatever is left over. A
/// leftover below 2^63 that passes Miller-Rabin is reported as a prime.
fn factor(n: &BigInt) -> (Vec<u64>, Option<BigInt>) {
    let mut n = n.abs();
    let mut found = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_LIMIT && !n.is_one() {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        if n.is_multiple_of(&bd) {
            found.push(d);
            while n.is_multiple_of(&bd) {
                n /= &bd;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        return (found, None);
    }
    match n.to_u64() {
        Some(m) if crate::polyarith::is_prime(m) && m < (1 << 63) => {
            found.push(m);
            found.sort_unstable();
            (found, None)
        }
        _ => (found, Some(n)),
    }
}

/// Primes dividing a denominator anywhere in the witness, or the leading
/// coefficient of a generator of `I`, of `m`, or of an `x`-image.
pub fn bad_primes(sys: &DiophantineSystem, w: &Witness) -> Result<BadPrimes> {
    w.check_shape(sys)?;
    if w.ring.field() != Field::Rational {
        return Err(Error::FieldMismatch(
            "bad primes are defined for rational witnesses".into(),
        ));
    }
    let mut sources = Vec::new();
    let mut push = |n: &BigInt, reason| {
        if !n.abs().is_one() && !n.is_zero() {
            sources.push((n.abs(), reason));
        }
    };
    let point = w.point.iter().flatten();
    for c in w
        .polynomials()
        .flat_map(|f| f.terms().iter().map(|t| &t.coeff))
        .chain(point)
    {
        if let Some(q) = c.as_rational() {
            push(q.denom(), BadReason::Denominator);
        }
    }
    for g in w.generators() {
        if let Some(q) = g.leading_coeff().and_then(Coeff::as_rational) {
            push(q.numer(), BadReason::LeadingCoeff);
        }
    }
    sources.sort();
    sources.dedup();
    Ok(BadPrimes { sources })
}

/// Coefficient-wise reduction of a rational witness to `F_p`.
///
/// Fails with `BadPrime` on a denominator divisible by `p` and with
/// `DegenerateGenerator` when a generator of `I`, of `m`, or an `x`-image
/// loses its leading term (in particular when it becomes zero or a unit).
pub fn reduce_witness_mod_p(w: &Witness, p: u64) -> Result<Witness> {
    if w.ring.field() != Field::Rational {
        return Err(Error::FieldMismatch(
            "reduction expects a rational witness".into(),
        ));
    }
    let field = Field::prime(p)?;
    let ring = w.ring.with_field(field);
    let map = |f: &Polynomial| f.map_to_ring(&ring);
    let map_all = |fs: &[Polynomial]| fs.iter().map(map).collect::<Result<Vec<_>>>();

    let ideal_gens = map_all(w.ideal.generators())?;
    let maximal_gens = map_all(w.maximal.generators())?;
    let x_images = map_all(&w.x_images)?;
    let y_images = map_all(&w.y_images)?;
    let point = match &w.point {
        Some(b) => Some(
            b.iter()
                .map(|c| field.convert(c))
                .collect::<Result<Vec<_>>>()?,
        ),
        None => None,
    };

    let originals = w
        .ideal
        .generators()
        .iter()
        .chain(w.maximal.generators())
        .chain(&w.x_images);
    let reduced = ideal_gens.iter().chain(&maximal_gens).chain(&x_images);
    for (f, g) in originals.zip(reduced) {
        if !f.is_zero() && f.leading_monomial() != g.leading_monomial() {
            return Err(Error::DegenerateGenerator(p));
        }
    }

    Ok(Witness {
        ideal: IdealPresentation::new(&ring, ideal_gens)?,
        maximal: IdealPresentation::new(&ring, maximal_gens)?,
        point,
        x_images,
        y_images,
        claimed_n: w.claimed_n,
        domain_claim: w.domain_claim,
        ring,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::{MonomialOrder, Ring};
    use std::sync::Arc;

    fn t_ring() -> Arc<Ring> {
        Ring::new(Field::Rational, vec!["T".into()], MonomialOrder::grevlex()).unwrap()
    }

    fn case(m: &str, x: &str) -> (DiophantineSystem, Witness) {
        let sr = DiophantineSystem::standard_ring(1, 1);
        let sys = DiophantineSystem::new(
            &sr,
            1,
            1,
            vec![Polynomial::parse(&sr, "6*X1 - Y1^2").unwrap()],
        )
        .unwrap();
        let r = t_ring();
        let w = Witness {
            ideal: IdealPresentation::zero(&r),
            maximal: IdealPresentation::parse(&r, m).unwrap(),
            point: Some(vec![r.field().zero()]),
            x_images: vec![Polynomial::parse(&r, x).unwrap()],
            y_images: vec![Polynomial::parse(&r, "T").unwrap()],
            claimed_n: 1,
            domain_claim: false,
            ring: r,
        };
        (sys, w)
    }

    #[test]
    fn denominators() {
        let (sys, w) = case("(T)", "1/6*T^2");
        let bad = bad_primes(&sys, &w).unwrap();
        let (listed, rest) = bad.factored();
        assert_eq!(
            listed,
            vec![
                (2, vec![BadReason::Denominator]),
                (3, vec![BadReason::Denominator])
            ]
        );
        assert!(rest.is_empty());
        assert!(!bad.is_bad(5));
    }

    #[test]
    fn integer_monic_witness_has_none() {
        let (sys, w) = case("(T)", "T^2");
        assert_eq!(bad_primes(&sys, &w).unwrap().factored().0, vec![]);
    }

    #[test]
    fn leading_coefficients() {
        let (sys, w) = case("(6*T - 1)", "T^2");
        let bad = bad_primes(&sys, &w).unwrap();
        assert_eq!(bad.reasons(2), vec![BadReason::LeadingCoeff]);
        assert_eq!(bad.reasons(3), vec![BadReason::LeadingCoeff]);
        assert_eq!(
            reduce_witness_mod_p(&w, 3),
            Err(Error::DegenerateGenerator(3))
        );
    }

    #[test]
    fn large_factors_are_exact() {
        let (sys, mut w) = case("(T)", "T^2");
        w.x_images = vec![Polynomial::parse(&w.ring, "1/1000036000099*T^2").unwrap()];
        let bad = bad_primes(&sys, &w).unwrap();
        assert!(bad.is_bad(1000003));
        assert!(bad.is_bad(1000033));
        assert!(!bad.is_bad(1000037));
    }

    #[test]
    fn reduction_examples() {
        let (_, w) = case("(T)", "1/6*T^2");
        let w5 = reduce_witness_mod_p(&w, 5).unwrap();
        assert_eq!(w5.x_images[0].render(), "T^2");
        let w7 = reduce_witness_mod_p(&w, 7).unwrap();
        assert_eq!(w7.x_images[0].render(), "6*T^2");
        assert_eq!(w7.ring.field(), Field::Prime(7));
        assert_eq!(w7.claimed_n, 1);
        assert_eq!(reduce_witness_mod_p(&w, 2), Err(Error::BadPrime(2)));
        assert_eq!(reduce_witness_mod_p(&w, 9), Err(Error::NotPrime(9)));
    }
}
