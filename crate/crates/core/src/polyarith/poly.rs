use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::coeff::{Coeff, Field};
use super::monomial::Monomial;
use super::ring::Ring;
use crate::error::{Error, Result};

/// A coefficient-monomial pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coeff,
    pub monomial: Monomial,
}

/// Sparse multivariate polynomial in canonical form: terms strictly
/// descending under the ring's order, no zero coefficients.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.hash(state);
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, ring.field().one()).expect("one lies in its own field")
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Result<Self> {
        Self::from_terms(ring, [(c, Monomial::one(ring.nvars()))])
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Result<Self> {
        if i >= ring.nvars() {
            return Err(Error::Arity(format!(
                "variable index {i} out of {}",
                ring.nvars()
            )));
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: vec![Term {
                coeff: ring.field().one(),
                monomial: Monomial::var(ring.nvars(), i),
            }],
        })
    }

    /// Builds a polynomial from arbitrary terms, validating lengths and
    /// fields and canonicalizing.
    pub fn from_terms(
        ring: &Arc<Ring>,
        terms: impl IntoIterator<Item = (Coeff, Monomial)>,
    ) -> Result<Self> {
        let mut out = Vec::new();
        for (coeff, monomial) in terms {
            if monomial.nvars() != ring.nvars() {
                return Err(Error::LengthMismatch {
                    expected: ring.nvars(),
                    got: monomial.nvars(),
                });
            }
            if !ring.field().contains(&coeff) {
                return Err(Error::FieldMismatch(format!(
                    "coefficient in {} for ring over {}",
                    coeff.field(),
                    ring.field()
                )));
            }
            out.push(Term { coeff, monomial });
        }
        Ok(Self::canonical(ring.clone(), out))
    }

    /// Integer-coefficient shorthand, mostly for tests and fixtures.
    pub fn from_int_terms(ring: &Arc<Ring>, terms: &[(i64, &[u32])]) -> Result<Self> {
        let f = ring.field();
        Self::from_terms(
            ring,
            terms
                .iter()
                .map(|(c, e)| (f.from_i64(*c), Monomial::new(e.to_vec()))),
        )
    }

    fn canonical(ring: Arc<Ring>, mut terms: Vec<Term>) -> Self {
        let order = ring.order().clone();
        terms.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = last.coeff.add(&t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial { ring, terms: out }
    }

    /// Re-sorts and merges the term list. Idempotent on canonical input.
    pub fn canonicalize(&self) -> Self {
        Self::canonical(self.ring.clone(), self.terms.clone())
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Total degree; `None` stands for the degree of zero (minus infinity).
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other, |c| c.clone()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other, Coeff::neg))
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.neg(),
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for t in &small.terms {
            acc = acc.merge(&big.mul_term(&t.coeff, &t.monomial), |c| c.clone());
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Coeff) -> Result<Self> {
        if !self.field().contains(c) {
            return Err(Error::FieldMismatch(format!(
                "scalar in {} for ring over {}",
                c.field(),
                self.field()
            )));
        }
        Ok(self.mul_term(c, &Monomial::one(self.ring.nvars())))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `c * m * self`; multiplying by a monomial preserves the order.
    pub(crate) fn mul_term(&self, c: &Coeff, m: &Monomial) -> Self {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.mul(c),
                    monomial: t.monomial.mul(m),
                })
                .collect(),
        }
    }

    /// `self - c * m * g` in one merge pass.
    pub(crate) fn sub_mul_term(&self, c: &Coeff, m: &Monomial, g: &Self) -> Self {
        let neg = c.neg();
        let shifted = g.mul_term(&neg, m);
        self.merge(&shifted, |c| c.clone())
    }

    fn merge(&self, other: &Self, map_other: impl Fn(&Coeff) -> Coeff) -> Self {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].monomial, &b[j].monomial) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        coeff: map_other(&b[j].coeff),
                        monomial: b[j].monomial.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].coeff.add(&map_other(&b[j].coeff));
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            monomial: a[i].monomial.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| Term {
            coeff: map_other(&t.coeff),
            monomial: t.monomial.clone(),
        }));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        (!self.terms.is_empty()).then(|| self.terms.remove(0))
    }

    /// Caller guarantees canonical order and nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.inv().expect("leading coefficient is nonzero");
                self.mul_term(&inv, &Monomial::one(self.ring.nvars()))
            }
        }
    }

    /// Value at a point of `k^v`.
    pub fn evaluate(&self, point: &[Coeff]) -> Result<Coeff> {
        if point.len() != self.ring.nvars() {
            return Err(Error::Arity(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.ring.nvars()
            )));
        }
        let field = self.field();
        if let Some(c) = point.iter().find(|c| !field.contains(c)) {
            return Err(Error::FieldMismatch(format!(
                "coordinate in {} for {}",
                c.field(),
                field
            )));
        }
        let mut acc = field.zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (x, &e) in point.iter().zip(t.monomial.exponents()) {
                if e > 0 {
                    v = v.mul(&x.pow(e));
                }
            }
            acc = acc.add(&v);
        }
        Ok(acc)
    }

    /// Replaces variable `i` by `images[i]` in the target ring, mapping each
    /// coefficient into the target field.
    pub fn substitute(&self, target: &Arc<Ring>, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::Arity(format!(
                "{} images for {} variables",
                images.len(),
                self.ring.nvars()
            )));
        }
        for img in images {
            target.check_same(&img.ring)?;
        }
        // powers are cached per variable
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|g| vec![Polynomial::one(target), g.clone()])
            .collect();
        let tf = target.field();
        let mut acc = Polynomial::zero(target);
        for t in &self.terms {
            let mut prod = Polynomial::constant(target, tf.convert(&t.coeff)?)?;
            for (i, &e) in t.monomial.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                prod = &prod * &cache[e as usize];
            }
            acc = &acc + &prod;
        }
        Ok(acc)
    }

    /// Same polynomial read in another ring with the same variables,
    /// converting every coefficient.
    pub fn map_to_ring(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        if target.nvars() != self.ring.nvars() {
            return Err(Error::Arity(format!(
                "cannot move a polynomial in {} variables to a ring with {}",
                self.ring.nvars(),
                target.nvars()
            )));
        }
        let tf = target.field();
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((tf.convert(&t.coeff)?, t.monomial.clone())))
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(target, terms)
    }

    /// Maps every coefficient `a/b` to `a * b^-1 mod p`.
    pub fn reduce_coeffs_mod_p(&self, p: u64) -> Result<Polynomial> {
        if self.field() != Field::Rational {
            return Err(Error::FieldMismatch(format!(
                "coefficient reduction expects a rational polynomial, got {}",
                self.field()
            )));
        }
        let target = self.ring.with_field(Field::prime(p)?);
        self.map_to_ring(&target)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms
            .iter()
            .all(|t| t.coeff.as_rational().is_some_and(|q| q.is_integer()))
    }

    /// Text form `c*x1^e1*...*xv^ev + ...` using the ring's variable names.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let names = self.ring.names();
        let mut s = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = if neg { t.coeff.neg() } else { t.coeff.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = t.monomial.render(names);
            match (abs.is_one(), t.monomial.is_one()) {
                (_, true) => s.push_str(&abs.to_string()),
                (true, false) => s.push_str(&mono),
                (false, false) => {
                    s.push_str(&abs.to_string());
                    s.push('*');
                    s.push_str(&mono);
                }
            }
        }
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

macro_rules! ring_op {
    ($tr:ident, $method:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            /// Panics on ambient mismatch; use the inherent method for a `Result`.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                Polynomial::$method(self, rhs).expect("polynomials share a ring")
            }
        }
    };
}

ring_op!(Add, add);
ring_op!(Sub, sub);
ring_op!(Mul, mul);

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}
