//! Exact coefficients, monomials, monomial orders and sparse polynomials.

mod coeff;
mod monomial;
mod order;
mod parse;
mod poly;
mod ring;

pub use coeff::{is_prime, parse_rational, Coeff, Field, Fp};
pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use parse::{scan_variables, split_generators};
pub use poly::{Polynomial, Term};
pub use ring::Ring;

use std::cmp::Ordering;

use crate::error::Result;

/// Compares two monomials under `order`.
pub fn compare(order: &MonomialOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    order.compare(a, b)
}

/// Maps each coefficient `a/b` of a rational polynomial to `a * b^-1 mod p`.
pub fn reduce_coeffs_mod_p(f: &Polynomial, p: u64) -> Result<Polynomial> {
    f.reduce_coeffs_mod_p(p)
}
