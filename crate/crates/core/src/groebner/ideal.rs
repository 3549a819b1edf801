use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyarith::{split_generators, MonomialOrder, Polynomial, Ring};

/// Generators of an ideal in a fixed ambient ring.
///
/// Zero generators are dropped; the zero ideal is the single generator `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealPresentation {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
}

impl IdealPresentation {
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidArgument(
                "an ideal needs at least one generator".into(),
            ));
        }
        for g in &generators {
            ring.check_same(g.ring())?;
        }
        let mut generators: Vec<Polynomial> =
            generators.into_iter().filter(|g| !g.is_zero()).collect();
        if generators.is_empty() {
            generators.push(Polynomial::zero(ring));
        }
        Ok(IdealPresentation {
            ring: ring.clone(),
            generators,
        })
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        IdealPresentation {
            ring: ring.clone(),
            generators: vec![Polynomial::zero(ring)],
        }
    }

    /// Parses `(f1, f2, ...)` in the given ring.
    pub fn parse(ring: &Arc<Ring>, text: &str) -> Result<Self> {
        let gens = split_generators(text)?
            .iter()
            .map(|g| Polynomial::parse(ring, g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }

    /// Generators with the zero placeholder removed.
    pub fn nonzero_generators(&self) -> impl Iterator<Item = &Polynomial> {
        self.generators.iter().filter(|g| !g.is_zero())
    }

    /// The sum `self + other`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let gens = self
            .generators
            .iter()
            .chain(&other.generators)
            .cloned()
            .collect();
        Self::new(&self.ring, gens)
    }

    pub fn check_same_ring(&self, other: &Self) -> Result<()> {
        self.ring.check_same(&other.ring)
    }
}

impl fmt::Display for IdealPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(Polynomial::render).collect();
        write!(f, "({})", gens.join(", "))
    }
}
