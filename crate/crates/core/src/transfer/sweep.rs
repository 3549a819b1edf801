use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyarith::is_prime;
use crate::transfer::{
    bad_primes, reduce_witness_mod_p, verify_witness, BadPrime, Caps, DiophantineSystem,
    VerificationResult, Witness,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeSelection {
    /// All primes in `lo..=hi`.
    Range { lo: u64, hi: u64 },
    /// Exactly these primes; each entry must be prime.
    List(Vec<u64>),
}

impl PrimeSelection {
    pub fn primes(&self) -> Result<Vec<u64>> {
        match self {
            PrimeSelection::Range { lo, hi } => Ok((*lo..=*hi).filter(|&p| is_prime(p)).collect()),
            PrimeSelection::List(ps) => {
                let mut ps = ps.clone();
                ps.sort_unstable();
                ps.dedup();
                if let Some(&q) = ps.iter().find(|&&p| !is_prime(p)) {
                    return Err(Error::NotPrime(q));
                }
                Ok(ps)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimeStatus {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeOutcome {
    pub prime: u64,
    pub status: PrimeStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complexity_d: Option<usize>,
    /// Only the residue-field check failed: the point does not certify `m`
    /// over `F_p`, which says nothing about whether a witness exists there.
    pub unresolved_over_prime_field: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<VerificationResult>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime_range: Option<[u64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime_list: Option<Vec<u64>>,
    pub bad_primes: Vec<BadPrime>,
    pub per_prime: Vec<PrimeOutcome>,
    /// Largest complexity among primes where verification ran.
    pub uniform_d: Option<usize>,
    pub char0_d: usize,
    pub all_passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SweepOutcome {
    Completed(SweepReport),
    /// The witness fails in characteristic zero; nothing was swept.
    Refused(VerificationResult),
}

/// Re-verifies a rational witness at every good prime of the selection.
///
/// Primes are checked independently on `jobs` worker threads; the report is
/// ordered by prime and does not depend on `jobs`.
pub fn sweep(
    sys: &DiophantineSystem,
    w: &Witness,
    selection: &PrimeSelection,
    caps: &Caps,
    jobs: usize,
) -> Result<SweepOutcome> {
    if jobs == 0 {
        return Err(Error::InvalidArgument("jobs must be at least 1".into()));
    }
    let primes = selection.primes()?;
    let char0 = verify_witness(sys, w, caps)?;
    if !char0.passed {
        return Ok(SweepOutcome::Refused(char0));
    }
    let bad = bad_primes(sys, w)?;

    let mut bad_list = Vec::new();
    let mut good = Vec::new();
    for &p in &primes {
        let reasons = bad.reasons(p);
        if reasons.is_empty() {
            good.push(p);
        } else {
            bad_list.push(BadPrime { prime: p, reasons });
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let per_prime: Vec<PrimeOutcome> = pool.install(|| {
        good.par_iter()
            .map(|&p| check_prime(sys, w, p, caps))
            .collect()
    });

    let uniform_d = per_prime.iter().filter_map(|o| o.complexity_d).max();
    let all_passed = per_prime.iter().all(|o| o.status == PrimeStatus::Pass);
    let (prime_range, prime_list) = match selection {
        PrimeSelection::Range { lo, hi } => (Some([*lo, *hi]), None),
        PrimeSelection::List(_) => (None, Some(primes)),
    };
    Ok(SweepOutcome::Completed(SweepReport {
        prime_range,
        prime_list,
        bad_primes: bad_list,
        per_prime,
        uniform_d,
        char0_d: char0.complexity_d.complexity,
        all_passed,
    }))
}

fn check_prime(sys: &DiophantineSystem, w: &Witness, p: u64, caps: &Caps) -> PrimeOutcome {
    let run = reduce_witness_mod_p(w, p).and_then(|wp| verify_witness(sys, &wp, caps));
    match run {
        Ok(res) => PrimeOutcome {
            prime: p,
            status: if res.passed {
                PrimeStatus::Pass
            } else {
                PrimeStatus::Fail
            },
            complexity_d: Some(res.complexity_d.complexity),
            unresolved_over_prime_field: !res.passed && res.passes_without_residue_check(),
            error: None,
            result: Some(res),
        },
        Err(e) => PrimeOutcome {
            prime: p,
            status: PrimeStatus::Error,
            complexity_d: None,
            unresolved_over_prime_field: false,
            error: Some(e.to_string()),
            result: None,
        },
    }
}
