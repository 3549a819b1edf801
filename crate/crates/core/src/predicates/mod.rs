//! Complexity-bounded ideal predicates as decision procedures.
//!
//! Everything here bottoms out in reduced Gröbner bases. Where an exact
//! decision is out of reach the result says so: radical equality is
//! searched up to an exponent cap, primality is a seeded Monte-Carlo probe,
//! and maximality is only certified for ideals of the form
//! `(T_1 - b_1, ..., T_v - b_v)`.

mod dimension;
mod maximal;
mod probe;
mod radical;

pub use dimension::{dimension, height_in_quotient, height_poly, HeightResult};
pub use maximal::{point_ideal, rational_maximal};
pub use probe::{prime_probe, ProbeOutcome, ProbeReport};
pub use radical::{radical_equals, PowerCertificate, RadicalOutcome, RadicalReport};

use serde::{Deserialize, Serialize};

use crate::groebner::IdealPresentation;

/// Complexity of a given presentation: `max(v, max generator degree)`.
///
/// This bounds the existential complexity from above; no search over other
/// presentations is attempted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityReport {
    pub nvars: usize,
    pub max_degree: u32,
    pub complexity: usize,
    pub generator_count: usize,
}

impl ComplexityReport {
    /// Componentwise maximum; used when several presentations must share one
    /// bound.
    pub fn join(&self, other: &ComplexityReport) -> ComplexityReport {
        ComplexityReport {
            nvars: self.nvars.max(other.nvars),
            max_degree: self.max_degree.max(other.max_degree),
            complexity: self.complexity.max(other.complexity),
            generator_count: self.generator_count.max(other.generator_count),
        }
    }
}

pub fn complexity(ideal: &IdealPresentation) -> ComplexityReport {
    let max_degree = ideal
        .nonzero_generators()
        .filter_map(|g| g.degree())
        .max()
        .unwrap_or(0);
    let nvars = ideal.nvars();
    ComplexityReport {
        nvars,
        max_degree,
        complexity: nvars.max(max_degree as usize),
        generator_count: ideal.nonzero_generators().count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::{Field, MonomialOrder, Ring};

    fn ideal(names: &[&str], s: &str) -> IdealPresentation {
        let r = Ring::new(
            Field::Rational,
            names.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::grevlex(),
        )
        .unwrap();
        IdealPresentation::parse(&r, s).unwrap()
    }

    #[test]
    fn complexity_examples() {
        assert_eq!(complexity(&ideal(&["x", "y"], "(x^3 + y)")).complexity, 3);
        assert_eq!(complexity(&ideal(&["x"], "(x)")).complexity, 1);
        let c = complexity(&ideal(&["x", "y"], "(x - y, 2*y)"));
        assert_eq!((c.complexity, c.max_degree, c.generator_count), (2, 1, 2));
        let z = complexity(&ideal(&["x", "y", "z"], "(0)"));
        assert_eq!((z.complexity, z.max_degree, z.generator_count), (3, 0, 0));
    }
}
