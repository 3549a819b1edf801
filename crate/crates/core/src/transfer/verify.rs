use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{ideal_contains, quotient_is_zero, IdealPresentation};
use crate::predicates::{
    complexity, height_in_quotient, prime_probe, radical_equals, rational_maximal,
    ComplexityReport, ProbeReport, RadicalReport,
};
use crate::transfer::{DiophantineSystem, Witness};

/// Knobs for the inconclusive-by-nature searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub exponent_cap: u32,
    pub probe_trials: usize,
    pub probe_degree: u32,
    pub seed: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            exponent_cap: 16,
            probe_trials: 200,
            probe_degree: 2,
            seed: 0,
        }
    }
}

/// Residue-field check at the supplied point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ResidueCheck {
    /// `m = J_b` and every generator of `I` vanishes at `b`.
    Certified,
    Failed {
        reason: String,
    },
    /// No point supplied.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightCheck {
    pub computed: usize,
    pub claimed: usize,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationResult {
    /// `"Q"` or `"F_p"`.
    pub field: String,
    pub condition1: RadicalReport,
    pub condition2: Vec<bool>,
    pub condition3: ResidueCheck,
    pub height_check: HeightCheck,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime_probe_i: Option<ProbeReport>,
    pub complexity_d: ComplexityReport,
    pub passed: bool,
}

impl VerificationResult {
    /// Everything but the residue-field check holds.
    pub fn passes_without_residue_check(&self) -> bool {
        matches!(self.condition1, RadicalReport::Equal { .. })
            && self.condition2.iter().all(|&ok| ok)
            && self.height_check.matches
    }
}

/// Complexity aggregated over `I`, `m` and the images of the variables.
pub fn witness_complexity(w: &Witness) -> ComplexityReport {
    let mut report = complexity(&w.ideal).join(&complexity(&w.maximal));
    let images: Vec<_> = w.x_images.iter().chain(&w.y_images).cloned().collect();
    if !images.is_empty() {
        let tuple = IdealPresentation::new(&w.ring, images).expect("same ring");
        report = report.join(&complexity(&tuple));
    }
    report
}

/// Checks the three witness conditions and the height for `w` against `sys`.
///
/// The witness ring may be rational or prime; the system's integer
/// equations are mapped into it before substitution.
pub fn verify_witness(
    sys: &DiophantineSystem,
    w: &Witness,
    caps: &Caps,
) -> Result<VerificationResult> {
    w.check_shape(sys)?;
    if !ideal_contains(&w.ideal, &w.maximal)? {
        return Err(Error::NotContained);
    }
    let computed = height_in_quotient(&w.maximal, &w.ideal)?;

    let mut gens: Vec<_> = w.x_images.clone();
    gens.extend(w.ideal.generators().iter().cloned());
    let lifted = IdealPresentation::new(&w.ring, gens)?;
    let condition1 = RadicalReport::from(&radical_equals(&lifted, &w.maximal, caps.exponent_cap)?);

    let images: Vec<_> = w.x_images.iter().chain(&w.y_images).cloned().collect();
    let sys_ring = sys.ring().with_field(w.ring.field());
    let condition2 = sys
        .equations()
        .iter()
        .map(|f| {
            let f = f.map_to_ring(&sys_ring)?;
            let g = f.substitute(&w.ring, &images)?;
            quotient_is_zero(&g, &w.ideal)
        })
        .collect::<Result<Vec<bool>>>()?;

    let condition3 = match &w.point {
        None => ResidueCheck::NotApplicable,
        Some(b) => {
            if !rational_maximal(&w.maximal, b)? {
                ResidueCheck::Failed {
                    reason: "m differs from the ideal of the point".into(),
                }
            } else {
                let mut failing = None;
                for g in w.ideal.nonzero_generators() {
                    if !g.evaluate(b)?.is_zero() {
                        failing = Some(g.render());
                        break;
                    }
                }
                match failing {
                    None => ResidueCheck::Certified,
                    Some(g) => ResidueCheck::Failed {
                        reason: format!("{g} does not vanish at the point"),
                    },
                }
            }
        }
    };

    let prime_probe_i = if w.domain_claim {
        let o = prime_probe(&w.ideal, caps.probe_degree, caps.probe_trials, caps.seed)?;
        Some(ProbeReport::from(&o))
    } else {
        None
    };

    let height_check = HeightCheck {
        computed,
        claimed: w.claimed_n,
        matches: computed == w.claimed_n,
    };
    let mut result = VerificationResult {
        field: w.ring.field().to_string(),
        condition1,
        condition2,
        condition3,
        height_check,
        prime_probe_i,
        complexity_d: witness_complexity(w),
        passed: false,
    };
    result.passed = result.passes_without_residue_check()
        && !matches!(result.condition3, ResidueCheck::Failed { .. });
    Ok(result)
}
