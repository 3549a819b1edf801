use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, ideal_contains, IdealPresentation};
use crate::polyarith::Polynomial;

/// Outcome of deciding `Rad(I) = P` for a prime `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadicalOutcome {
    /// `I ⊆ P` and every generator of `P` has a power in `I`; the exponents
    /// are listed generator by generator.
    Equal { exponents: Vec<(Polynomial, u32)> },
    /// A generator of `I` lies outside `P`, so `Rad(I) ≠ P`.
    NotContainedInP { generator: Polynomial },
    /// No power up to `cap` of this generator of `P` lies in `I`. This is
    /// "not proven equal", not a disproof.
    GeneratorPowerNotFound { generator: Polynomial, cap: u32 },
}

impl RadicalOutcome {
    pub fn is_equal(&self) -> bool {
        matches!(self, RadicalOutcome::Equal { .. })
    }
}

/// Decides `Rad(I) = P` by checking `I ⊆ P` and searching, for each generator
/// `g` of `P`, the least `e <= cap` with `g^e ∈ I`.
///
/// `P` is assumed prime and not re-checked. Powers are reduced incrementally:
/// `NF(g^e) = NF(g * NF(g^(e-1)))`.
pub fn radical_equals(
    ideal: &IdealPresentation,
    prime: &IdealPresentation,
    exponent_cap: u32,
) -> Result<RadicalOutcome> {
    ideal.check_same_ring(prime)?;
    if exponent_cap == 0 {
        return Err(Error::InvalidArgument(
            "exponent cap must be at least 1".into(),
        ));
    }
    if !ideal_contains(ideal, prime)? {
        let gb = groebner_basis(prime)?;
        for g in ideal.nonzero_generators() {
            if !gb.contains(g)? {
                return Ok(RadicalOutcome::NotContainedInP {
                    generator: g.clone(),
                });
            }
        }
        unreachable!("containment failed, so some generator lies outside");
    }
    let gb = groebner_basis(ideal)?;
    let mut exponents = Vec::new();
    for g in prime.nonzero_generators() {
        let mut residue = gb.reduce(g)?;
        let mut e = 1;
        while !residue.is_zero() && e < exponent_cap {
            residue = gb.reduce(&(&residue * g))?;
            e += 1;
        }
        if !residue.is_zero() {
            return Ok(RadicalOutcome::GeneratorPowerNotFound {
                generator: g.clone(),
                cap: exponent_cap,
            });
        }
        exponents.push((g.clone(), e));
    }
    Ok(RadicalOutcome::Equal { exponents })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerCertificate {
    pub generator: String,
    pub exponent: u32,
}

/// Serializable form of [`RadicalOutcome`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum RadicalReport {
    Equal { exponents: Vec<PowerCertificate> },
    NotContainedInP { generator: String },
    GeneratorPowerNotFound { generator: String, cap: u32 },
}

impl From<&RadicalOutcome> for RadicalReport {
    fn from(o: &RadicalOutcome) -> Self {
        match o {
            RadicalOutcome::Equal { exponents } => RadicalReport::Equal {
                exponents: exponents
                    .iter()
                    .map(|(g, e)| PowerCertificate {
                        generator: g.render(),
                        exponent: *e,
                    })
                    .collect(),
            },
            RadicalOutcome::NotContainedInP { generator } => RadicalReport::NotContainedInP {
                generator: generator.render(),
            },
            RadicalOutcome::GeneratorPowerNotFound { generator, cap } => {
                RadicalReport::GeneratorPowerNotFound {
                    generator: generator.render(),
                    cap: *cap,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::{Field, MonomialOrder, Ring};
    use std::sync::Arc;

    fn ring(names: &[&str]) -> Arc<Ring> {
        Ring::new(
            Field::Rational,
            names.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::grevlex(),
        )
        .unwrap()
    }

    fn exps(o: &RadicalOutcome) -> Vec<(String, u32)> {
        match o {
            RadicalOutcome::Equal { exponents } => {
                exponents.iter().map(|(g, e)| (g.render(), *e)).collect()
            }
            other => panic!("expected Equal, got {other:?}"),
        }
    }

    #[test]
    fn power_found() {
        let r = ring(&["x", "y"]);
        let i = IdealPresentation::parse(&r, "(x^2, y)").unwrap();
        let p = IdealPresentation::parse(&r, "(x, y)").unwrap();
        let o = radical_equals(&i, &p, 4).unwrap();
        assert_eq!(exps(&o), vec![("x".into(), 2), ("y".into(), 1)]);
    }

    #[test]
    fn power_not_found_within_cap() {
        let r = ring(&["x", "y"]);
        let i = IdealPresentation::parse(&r, "(x)").unwrap();
        let p = IdealPresentation::parse(&r, "(x, y)").unwrap();
        let o = radical_equals(&i, &p, 8).unwrap();
        assert_eq!(
            o,
            RadicalOutcome::GeneratorPowerNotFound {
                generator: Polynomial::parse(&r, "y").unwrap(),
                cap: 8
            }
        );
    }

    #[test]
    fn rational_scalar_generator() {
        let r = ring(&["T"]);
        let i = IdealPresentation::parse(&r, "(1/6*T^2)").unwrap();
        let p = IdealPresentation::parse(&r, "(T)").unwrap();
        assert_eq!(
            exps(&radical_equals(&i, &p, 4).unwrap()),
            vec![("T".into(), 2)]
        );
        // cap below the needed exponent is inconclusive, not a disproof
        assert!(matches!(
            radical_equals(&i, &p, 1).unwrap(),
            RadicalOutcome::GeneratorPowerNotFound { cap: 1, .. }
        ));
    }

    #[test]
    fn not_contained() {
        let r = ring(&["x", "y"]);
        let i = IdealPresentation::parse(&r, "(x, y - 1)").unwrap();
        let p = IdealPresentation::parse(&r, "(x, y)").unwrap();
        assert_eq!(
            radical_equals(&i, &p, 4).unwrap(),
            RadicalOutcome::NotContainedInP {
                generator: Polynomial::parse(&r, "y - 1").unwrap()
            }
        );
        assert!(radical_equals(&i, &p, 0).is_err());
    }

    #[test]
    fn report_round_trips_through_json() {
        let r = ring(&["x", "y"]);
        let i = IdealPresentation::parse(&r, "(x^3, y^2)").unwrap();
        let p = IdealPresentation::parse(&r, "(x, y)").unwrap();
        let rep = RadicalReport::from(&radical_equals(&i, &p, 4).unwrap());
        let js = serde_json::to_string(&rep).unwrap();
        assert!(js.contains("\"verdict\":\"equal\""));
        assert_eq!(serde_json::from_str::<RadicalReport>(&js).unwrap(), rep);
    }
}
