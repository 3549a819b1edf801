//! Witness verification for Diophantine systems, in characteristic zero and
//! after reduction modulo primes.

mod points;
mod primes;
mod sweep;
mod verify;
mod witness;

pub use points::{search_witness_points, DEFAULT_POINT_BUDGET};
pub use primes::{bad_primes, reduce_witness_mod_p, BadPrime, BadPrimes, BadReason};
pub use sweep::{sweep, PrimeOutcome, PrimeSelection, PrimeStatus, SweepOutcome, SweepReport};
pub use verify::{
    verify_witness, witness_complexity, Caps, HeightCheck, ResidueCheck, VerificationResult,
};
pub use witness::{DiophantineSystem, Witness};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{normal_form, IdealPresentation};
    use crate::polyarith::{Field, MonomialOrder, Polynomial, Ring};

    // substituting then reducing mod p agrees with reducing then substituting
    #[test]
    fn substitution_commutes_with_reduction() {
        let sr = DiophantineSystem::standard_ring(2, 1);
        let f = Polynomial::parse(&sr, "6*X1*X2 - Y1^2 + 3*X1 - 5").unwrap();
        let t = Ring::new(
            Field::Rational,
            vec!["s".into(), "t".into()],
            MonomialOrder::grevlex(),
        )
        .unwrap();
        let imgs: Vec<_> = ["1/2*s^2 + t", "s - 1/3", "2*s*t"]
            .iter()
            .map(|x| Polynomial::parse(&t, x).unwrap())
            .collect();
        let ideal = IdealPresentation::parse(&t, "(s^2 - t)").unwrap();
        for p in [5u64, 7, 11, 13] {
            let tp = t.with_field(Field::prime(p).unwrap());
            let a = f
                .substitute(&t, &imgs)
                .unwrap()
                .reduce_coeffs_mod_p(p)
                .unwrap();
            let fp = f.reduce_coeffs_mod_p(p).unwrap();
            let imgs_p: Vec<_> = imgs
                .iter()
                .map(|x| x.reduce_coeffs_mod_p(p).unwrap())
                .collect();
            let b = fp.substitute(&tp, &imgs_p).unwrap();
            assert_eq!(a, b);

            let gens_p: Vec<_> = ideal
                .generators()
                .iter()
                .map(|g| g.reduce_coeffs_mod_p(p).unwrap())
                .collect();
            let na = normal_form(&a, &gens_p).unwrap();
            let nb = normal_form(&b, &gens_p).unwrap();
            assert_eq!(na, nb);
        }
    }
}
