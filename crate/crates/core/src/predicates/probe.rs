use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, GroebnerBasis, IdealPresentation};
use crate::polyarith::{Coeff, Monomial, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeOutcome {
    /// `f, g ∉ P` but `f * g ∈ P`.
    NotPrime { f: Polynomial, g: Polynomial },
    /// No witness among `trials` sampled pairs.
    ProbablyPrime { trials: usize },
}

/// Serializable form of [`ProbeOutcome`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ProbeReport {
    NotPrime { f: String, g: String },
    ProbablyPrime { trials: usize },
}

impl From<&ProbeOutcome> for ProbeReport {
    fn from(o: &ProbeOutcome) -> Self {
        match o {
            ProbeOutcome::NotPrime { f, g } => ProbeReport::NotPrime {
                f: f.render(),
                g: g.render(),
            },
            ProbeOutcome::ProbablyPrime { trials } => {
                ProbeReport::ProbablyPrime { trials: *trials }
            }
        }
    }
}

const MAX_TERMS: usize = 3;
const SAMPLE_VALUES: [i64; 4] = [1, -1, 2, -2];

/// Seeded search for a zero-divisor pair modulo `P`.
///
/// Each trial draws two sparse polynomials of total degree at most
/// `degree_bound` (one to three terms, coefficients from `{±1, ±2}`). Pairs
/// with a factor already in `P` are discarded. A hit is shrunk term by term
/// and made monic before it is returned, so certificates come out small.
pub fn prime_probe(
    prime: &IdealPresentation,
    degree_bound: u32,
    trials: usize,
    seed: u64,
) -> Result<ProbeOutcome> {
    let gb = groebner_basis(prime)?;
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let ring = prime.ring();
    let monomials = Monomial::all_up_to_degree(ring.nvars(), degree_bound);
    let field = ring.field();
    let coeffs: Vec<Coeff> = SAMPLE_VALUES
        .iter()
        .map(|&v| field.from_i64(v))
        .filter(|c| !c.is_zero())
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample = |rng: &mut ChaCha8Rng| -> Polynomial {
        let n = rng.gen_range(1..=MAX_TERMS.min(monomials.len()));
        let terms: Vec<(Coeff, Monomial)> = (0..n)
            .map(|_| {
                let m = monomials[rng.gen_range(0..monomials.len())].clone();
                let c = coeffs[rng.gen_range(0..coeffs.len())].clone();
                (c, m)
            })
            .collect();
        Polynomial::from_terms(ring, terms).expect("sampled in the ring")
    };

    for _ in 0..trials {
        let f = sample(&mut rng);
        let g = sample(&mut rng);
        if is_witness(&gb, &f, &g)? {
            let (f, g) = shrink(&gb, f, g)?;
            return Ok(ProbeOutcome::NotPrime {
                f: f.monic(),
                g: g.monic(),
            });
        }
    }
    Ok(ProbeOutcome::ProbablyPrime { trials })
}

fn is_witness(gb: &GroebnerBasis, f: &Polynomial, g: &Polynomial) -> Result<bool> {
    if f.is_zero() || g.is_zero() || gb.contains(f)? || gb.contains(g)? {
        return Ok(false);
    }
    gb.contains(&(f * g))
}

/// Greedily drops terms and divides out variables while the pair stays a
/// witness.
fn shrink(
    gb: &GroebnerBasis,
    mut f: Polynomial,
    mut g: Polynomial,
) -> Result<(Polynomial, Polynomial)> {
    'outer: loop {
        for c in smaller(&f) {
            if is_witness(gb, &c, &g)? {
                f = c;
                continue 'outer;
            }
        }
        for c in smaller(&g) {
            if is_witness(gb, &f, &c)? {
                g = c;
                continue 'outer;
            }
        }
        return Ok((f, g));
    }
}

fn smaller(f: &Polynomial) -> Vec<Polynomial> {
    let ring = f.ring();
    let mut out = Vec::new();
    if f.len() > 1 {
        for skip in 0..f.len() {
            let terms = f
                .terms()
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != skip)
                .map(|(_, t)| (t.coeff.clone(), t.monomial.clone()));
            out.push(Polynomial::from_terms(ring, terms).expect("subset of f"));
        }
    }
    for v in 0..ring.nvars() {
        let x = Monomial::var(ring.nvars(), v);
        let divided: Option<Vec<(Coeff, Monomial)>> = f
            .terms()
            .iter()
            .map(|t| x.quotient_of(&t.monomial).map(|q| (t.coeff.clone(), q)))
            .collect();
        if let Some(terms) = divided {
            out.push(Polynomial::from_terms(ring, terms).expect("quotient of f"));
        }
    }
    out
}
