use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::IdealPresentation;
use crate::polyarith::{Coeff, Field, Polynomial, Ring};

/// Equations `F_1, ..., F_l` over `Z` in `X_1..X_n, Y_1..Y_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiophantineSystem {
    n: usize,
    r: usize,
    ring: Arc<Ring>,
    equations: Vec<Polynomial>,
}

impl DiophantineSystem {
    /// `ring` must be a rational ring in `n + r` variables, the first `n`
    /// standing for the `X`'s. Every coefficient must be an integer.
    pub fn new(ring: &Arc<Ring>, n: usize, r: usize, equations: Vec<Polynomial>) -> Result<Self> {
        if ring.field() != Field::Rational {
            return Err(Error::FieldMismatch(
                "a system is defined over the integers".into(),
            ));
        }
        if ring.nvars() != n + r {
            return Err(Error::Arity(format!(
                "system ring has {} variables, expected n + r = {}",
                ring.nvars(),
                n + r
            )));
        }
        for (a, f) in equations.iter().enumerate() {
            ring.check_same(f.ring())?;
            if !f.has_integer_coeffs() {
                return Err(Error::InvalidArgument(format!(
                    "equation {} has a non-integer coefficient",
                    a + 1
                )));
            }
        }
        Ok(DiophantineSystem {
            n,
            r,
            ring: ring.clone(),
            equations,
        })
    }

    /// Ring `Q[X1..Xn, Y1..Yr]` with the default order.
    pub fn standard_ring(n: usize, r: usize) -> Arc<Ring> {
        let names = (1..=n)
            .map(|i| format!("X{i}"))
            .chain((1..=r).map(|j| format!("Y{j}")))
            .collect();
        Ring::new(Field::Rational, names, Default::default()).expect("distinct names")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn equations(&self) -> &[Polynomial] {
        &self.equations
    }
}

/// Semi-parametric witness data `(S = k[T]/I, m, b, x, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub ring: Arc<Ring>,
    pub ideal: IdealPresentation,
    pub maximal: IdealPresentation,
    /// Rational point certifying `k -> S/m` is an isomorphism, if known.
    pub point: Option<Vec<Coeff>>,
    pub x_images: Vec<Polynomial>,
    pub y_images: Vec<Polynomial>,
    pub claimed_n: usize,
    /// `I` is claimed prime; the verifier attaches a primality probe.
    pub domain_claim: bool,
}

impl Witness {
    pub(crate) fn check_shape(&self, sys: &DiophantineSystem) -> Result<()> {
        if self.x_images.len() != sys.n() {
            return Err(Error::Arity(format!(
                "{} x-images for n = {}",
                self.x_images.len(),
                sys.n()
            )));
        }
        if self.y_images.len() != sys.r() {
            return Err(Error::Arity(format!(
                "{} y-images for r = {}",
                self.y_images.len(),
                sys.r()
            )));
        }
        self.ring.check_same(self.ideal.ring())?;
        self.ring.check_same(self.maximal.ring())?;
        for f in self.x_images.iter().chain(&self.y_images) {
            self.ring.check_same(f.ring())?;
        }
        if let Some(b) = &self.point {
            if b.len() != self.ring.nvars() {
                return Err(Error::Arity(format!(
                    "point has {} coordinates, ring has {} variables",
                    b.len(),
                    self.ring.nvars()
                )));
            }
            if b.iter().any(|c| !self.ring.field().contains(c)) {
                return Err(Error::FieldMismatch(
                    "point lies outside the witness field".into(),
                ));
            }
        }
        Ok(())
    }

    /// Every polynomial carried by the witness, generators first.
    pub(crate) fn polynomials(&self) -> impl Iterator<Item = &Polynomial> {
        self.ideal
            .generators()
            .iter()
            .chain(self.maximal.generators())
            .chain(&self.x_images)
            .chain(&self.y_images)
    }

    /// Generators whose leading coefficient must survive reduction: those of
    /// `I`, of `m`, and the `x`-images, which generate `(x) + I`.
    pub(crate) fn generators(&self) -> impl Iterator<Item = &Polynomial> {
        self.ideal
            .nonzero_generators()
            .chain(self.maximal.nonzero_generators())
            .chain(self.x_images.iter().filter(|x| !x.is_zero()))
    }
}
