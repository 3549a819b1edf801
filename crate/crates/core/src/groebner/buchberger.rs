use std::collections::HashSet;
use std::sync::Arc;

use super::ideal::IdealPresentation;
use super::reduce::reduce_unchecked;
use crate::error::{Error, Result};
use crate::polyarith::{Monomial, Polynomial, Ring};

/// Resource caps for Buchberger's algorithm. Exceeding either one aborts
/// with [`Error::DegreeCapExceeded`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GbLimits {
    /// Maximum number of critical pairs taken from the queue.
    pub max_pairs: usize,
    /// Maximum total degree of any basis element.
    pub max_degree: u32,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits {
            max_pairs: 100_000,
            max_degree: 64,
        }
    }
}

/// A reduced Gröbner basis: monic, inter-reduced, sorted by descending
/// leading monomial. Unique for a given ideal and order.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    basis: Vec<Polynomial>,
    source: IdealPresentation,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.basis == other.basis
    }
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Basis elements; empty for the zero ideal.
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn source(&self) -> &IdealPresentation {
        &self.source
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| {
                g.leading_monomial()
                    .expect("basis elements are nonzero")
                    .clone()
            })
            .collect()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_unit()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(f.ring())?;
        let refs: Vec<&Polynomial> = self.basis.iter().collect();
        Ok(reduce_unchecked(f, &refs))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }
}

/// `S(f, g) = (L / LT(f)) f - (L / LT(g)) g` with `L = lcm(LM(f), LM(g))`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.ring().check_same(g.ring())?;
    let (Some(tf), Some(tg)) = (f.leading_term(), g.leading_term()) else {
        return Ok(Polynomial::zero(f.ring()));
    };
    let l = tf.monomial.lcm(&tg.monomial);
    let mf = tf.monomial.quotient_of(&l).expect("lcm is a multiple");
    let mg = tg.monomial.quotient_of(&l).expect("lcm is a multiple");
    let a = f.mul_term(&tf.coeff.inv()?, &mf);
    let b = g.mul_term(&tg.coeff.inv()?, &mg);
    a.sub(&b)
}

/// Buchberger's algorithm with the product and chain criteria and the
/// normal selection strategy (smallest lcm by degree, then by the order).
pub fn buchberger(ideal: &IdealPresentation, limits: &GbLimits) -> Result<GroebnerBasis> {
    let ring = ideal.ring().clone();
    let order = ring.order().clone();
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in ideal.nonzero_generators() {
        let g = g.monic();
        if basis.contains(&g) {
            continue;
        }
        check_degree(&g, limits)?;
        basis.push(g);
    }
    if let Some(u) = basis.iter().find(|g| g.is_unit()) {
        let one = u.monic();
        return Ok(GroebnerBasis {
            ring,
            basis: vec![one],
            source: ideal.clone(),
        });
    }

    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    let lm = |basis: &[Polynomial], i: usize| -> Monomial {
        basis[i].leading_monomial().expect("nonzero").clone()
    };

    let mut taken = 0usize;
    let mut unit_found = false;
    while !pending.is_empty() {
        // normal strategy with a deterministic tie-break on indices
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = lm(&basis, a.0).lcm(&lm(&basis, a.1));
                let lb = lm(&basis, b.0).lcm(&lm(&basis, b.1));
                la.degree()
                    .cmp(&lb.degree())
                    .then_with(|| order.cmp(&la, &lb))
                    .then_with(|| a.cmp(b))
            })
            .expect("nonempty");
        pending.remove(&(i, j));
        taken += 1;
        if taken > limits.max_pairs {
            return Err(Error::DegreeCapExceeded(format!(
                "more than {} critical pairs",
                limits.max_pairs
            )));
        }

        let (li, lj) = (lm(&basis, i), lm(&basis, j));
        if li.is_coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis, k).divides(&l)
                && !pending.contains(&ordered(i, k))
                && !pending.contains(&ordered(j, k))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j])?;
        let refs: Vec<&Polynomial> = basis.iter().collect();
        let r = reduce_unchecked(&s, &refs);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        check_degree(&r, limits)?;
        if r.is_unit() {
            unit_found = true;
            basis = vec![r];
            break;
        }
        let new = basis.len();
        basis.push(r);
        for k in 0..new {
            pending.insert((k, new));
        }
    }

    let basis = if unit_found {
        basis
    } else {
        reduce_basis(basis, &ring)
    };
    Ok(GroebnerBasis {
        ring,
        basis,
        source: ideal.clone(),
    })
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn check_degree(g: &Polynomial, limits: &GbLimits) -> Result<()> {
    match g.degree() {
        Some(d) if d > limits.max_degree => Err(Error::DegreeCapExceeded(format!(
            "basis element of degree {d} exceeds {}",
            limits.max_degree
        ))),
        _ => Ok(()),
    }
}

/// Minimalizes and inter-reduces a Gröbner basis, then sorts it.
fn reduce_basis(basis: Vec<Polynomial>, ring: &Arc<Ring>) -> Vec<Polynomial> {
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial().expect("nonzero").clone())
        .collect();
    let mut keep: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = lms
            .iter()
            .enumerate()
            .any(|(k, lk)| k != i && lk.divides(&lms[i]) && (lk != &lms[i] || k < i));
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<&Polynomial> = keep
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, g)| g)
            .collect();
        // leading terms of the others never divide LM(keep[i]), so the lead survives
        reduced.push(reduce_unchecked(&keep[i], &others).monic());
    }
    let order = ring.order().clone();
    reduced.sort_by(|a, b| {
        let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
        order.cmp(lb, la)
    });
    reduced
}
