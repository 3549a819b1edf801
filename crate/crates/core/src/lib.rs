//! Exact commutative-algebra kernel for complexity-bounded ideal predicates.
//!
//! The crate is organised bottom-up:
//!
//! - [`polyarith`]: rationals, prime fields, monomial orders, sparse polynomials.
//! - [`groebner`]: Buchberger's algorithm, normal forms, membership, inclusion
//!   and equality of ideals.
//! - [`predicates`]: complexity, dimension and height, radical equality,
//!   a seeded primality probe, rational maximality.
//! - [`encoding`]: the fixed-size coefficient code of an ideal of bounded
//!   complexity.
//! - [`transfer`]: verification of semi-parametric witnesses for integer
//!   polynomial systems, bad primes, reduction mod `p` and prime sweeps.

pub mod encoding;
pub mod error;
pub mod groebner;
pub mod polyarith;
pub mod predicates;
pub mod transfer;

pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, IdealPresentation};
pub use polyarith::{Coeff, Field, Monomial, MonomialOrder, OrderKind, Polynomial, Ring};
