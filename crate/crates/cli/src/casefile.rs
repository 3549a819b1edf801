//! Case files: a Diophantine system plus a witness, as JSON.
//!
//! ```json
//! {
//!   "ring": {"field": "Q", "vars": ["T"], "order": "grevlex"},
//!   "system": {"n": 1, "r": 1, "equations": [[{"coeff": "6", "exps": [1, 0]},
//!                                            {"coeff": "-1", "exps": [0, 2]}]]},
//!   "witness": {"I": [], "m": [[{"coeff": "1", "exps": [1]}]], "b": ["0"],
//!               "x": [[{"coeff": "1/6", "exps": [2]}]], "y": [[{"coeff": "1", "exps": [1]}]],
//!               "claimed_n": 1, "domain_claim": false}
//! }
//! ```
//!
//! System polynomials live in `X1..Xn, Y1..Yr` (exponent vectors of length
//! `n + r`); witness polynomials live in the ring's `vars`.

use std::path::Path;
use std::sync::Arc;

use idealkit::transfer::{DiophantineSystem, Witness};
use idealkit::{
    Error, Field, IdealPresentation, Monomial, MonomialOrder, OrderKind, Polynomial, Ring,
};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseFile {
    pub ring: RingSpec,
    pub system: SystemSpec,
    pub witness: WitnessSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub order: OrderKind,
}

/// `"Q"` or `{"Fp": p}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Prime(PrimeSpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrimeSpec {
    #[serde(rename = "Fp")]
    pub fp: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub coeff: String,
    pub exps: Vec<u32>,
}

pub type PolySpec = Vec<TermSpec>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemSpec {
    pub n: usize,
    pub r: usize,
    pub equations: Vec<PolySpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessSpec {
    #[serde(rename = "I")]
    pub ideal: Vec<PolySpec>,
    pub m: Vec<PolySpec>,
    pub b: Option<Vec<String>>,
    pub x: Vec<PolySpec>,
    pub y: Vec<PolySpec>,
    pub claimed_n: usize,
    pub domain_claim: bool,
}

impl FieldSpec {
    pub fn to_field(&self) -> Result<Field, Error> {
        match self {
            FieldSpec::Named(s) if s == "Q" => Ok(Field::Rational),
            FieldSpec::Named(s) => Err(Error::Parse(format!("unknown field {s:?}"))),
            FieldSpec::Prime(p) => Field::prime(p.fp),
        }
    }
}

impl CaseFile {
    pub fn load(path: &Path) -> Result<CaseFile, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        CaseFile::parse(&text)
    }

    pub fn parse(text: &str) -> Result<CaseFile, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Core(Error::Parse(e.to_string())))
    }

    pub fn to_problem(&self) -> Result<(DiophantineSystem, Witness), Error> {
        let order = match self.ring.order {
            OrderKind::Lex => MonomialOrder::lex(),
            OrderKind::Grevlex => MonomialOrder::grevlex(),
        };
        let ring = Ring::new(self.ring.field.to_field()?, self.ring.vars.clone(), order)?;

        let s = &self.system;
        let sys_ring = DiophantineSystem::standard_ring(s.n, s.r);
        let equations = polys(&sys_ring, &s.equations)?;
        let sys = DiophantineSystem::new(&sys_ring, s.n, s.r, equations)?;

        let w = &self.witness;
        let point = match &w.b {
            None => None,
            Some(b) => Some(
                b.iter()
                    .map(|c| ring.field().parse_coeff(c))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        };
        let witness = Witness {
            ideal: ideal(&ring, &w.ideal)?,
            maximal: ideal(&ring, &w.m)?,
            point,
            x_images: polys(&ring, &w.x)?,
            y_images: polys(&ring, &w.y)?,
            claimed_n: w.claimed_n,
            domain_claim: w.domain_claim,
            ring,
        };
        Ok((sys, witness))
    }
}

fn ideal(ring: &Arc<Ring>, gens: &[PolySpec]) -> Result<IdealPresentation, Error> {
    if gens.is_empty() {
        return Ok(IdealPresentation::zero(ring));
    }
    IdealPresentation::new(ring, polys(ring, gens)?)
}

fn polys(ring: &Arc<Ring>, specs: &[PolySpec]) -> Result<Vec<Polynomial>, Error> {
    specs.iter().map(|p| poly(ring, p)).collect()
}

fn poly(ring: &Arc<Ring>, spec: &PolySpec) -> Result<Polynomial, Error> {
    let terms = spec
        .iter()
        .map(|t| {
            if t.exps.len() != ring.nvars() {
                return Err(Error::Arity(format!(
                    "exponent vector {:?} has length {}, expected {}",
                    t.exps,
                    t.exps.len(),
                    ring.nvars()
                )));
            }
            Ok((
                ring.field().parse_coeff(&t.coeff)?,
                Monomial::new(t.exps.clone()),
            ))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Polynomial::from_terms(ring, terms)
}

/// Inverse of the term-list form, for writing case files.
pub fn poly_spec(f: &Polynomial) -> PolySpec {
    f.terms()
        .iter()
        .map(|t| TermSpec {
            coeff: t.coeff.to_exact_string(),
            exps: t.monomial.exponents().to_vec(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SIXTH: &str = r#"{
      "ring": {"field": "Q", "vars": ["T"], "order": "grevlex"},
      "system": {"n": 1, "r": 1, "equations": [[{"coeff": "6", "exps": [1, 0]}, {"coeff": "-1", "exps": [0, 2]}]]},
      "witness": {"I": [], "m": [[{"coeff": "1", "exps": [1]}]], "b": ["0"],
                  "x": [[{"coeff": "1/6", "exps": [2]}]], "y": [[{"coeff": "1", "exps": [1]}]],
                  "claimed_n": 1, "domain_claim": false}
    }"#;

    #[test]
    fn parses_the_documented_example() {
        let case = CaseFile::parse(SIXTH).unwrap();
        let (sys, w) = case.to_problem().unwrap();
        assert_eq!(sys.equations()[0].render(), "-Y1^2 + 6*X1");
        assert_eq!(w.x_images[0].render(), "1/6*T^2");
        assert!(w.ideal.is_zero_ideal());
        assert_eq!(poly_spec(&w.x_images[0]), case.witness.x[0]);
    }

    #[test]
    fn prime_field_spec() {
        let text = SIXTH.replace(r#""field": "Q""#, r#""field": {"Fp": 7}"#);
        let (_, w) = CaseFile::parse(&text).unwrap().to_problem().unwrap();
        assert_eq!(w.x_images[0].render(), "6*T^2");
    }

    #[test]
    fn rejects_bad_input() {
        let unknown = SIXTH.replace(r#""claimed_n""#, r#""extra": 1, "claimed_n""#);
        assert!(CaseFile::parse(&unknown).is_err());

        let float = SIXTH.replace(r#""1/6""#, r#""0.5""#);
        assert!(CaseFile::parse(&float).unwrap().to_problem().is_err());

        let arity = SIXTH.replace(r#""exps": [2]"#, r#""exps": [2, 0]"#);
        assert!(matches!(
            CaseFile::parse(&arity).unwrap().to_problem(),
            Err(Error::Arity(_))
        ));

        let frac_eq = SIXTH.replace(r#""coeff": "6""#, r#""coeff": "6/5""#);
        assert!(CaseFile::parse(&frac_eq).unwrap().to_problem().is_err());

        let field = SIXTH.replace(r#""field": "Q""#, r#""field": "R""#);
        assert!(CaseFile::parse(&field).unwrap().to_problem().is_err());
    }
}
