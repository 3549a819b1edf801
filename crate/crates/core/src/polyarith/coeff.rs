//! Exact coefficients: arbitrary-precision rationals and prime-field residues.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficient field of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// The prime field of order `p`. Rejects composites and moduli that do
    /// not fit the widened-product arithmetic.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 63 {
            return Err(Error::InvalidArgument(format!("modulus {p} is too large")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match *self {
            Field::Rational => Coeff::Rational(BigRational::zero()),
            Field::Prime(p) => Coeff::Modular(Fp {
                value: 0,
                modulus: p,
            }),
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match *self {
            Field::Rational => Coeff::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Coeff::Modular(Fp::from_i128(v as i128, p)),
        }
    }

    /// Image of a rational number in this field.
    pub fn from_rational(&self, q: &BigRational) -> Result<Coeff> {
        match *self {
            Field::Rational => Ok(Coeff::Rational(q.clone())),
            Field::Prime(p) => {
                let num = Fp::from_bigint(q.numer(), p);
                let den = Fp::from_bigint(q.denom(), p);
                if den.value == 0 {
                    return Err(Error::BadPrime(p));
                }
                Ok(Coeff::Modular(num.mul(&den.inv()?)))
            }
        }
    }

    /// Maps a coefficient from any field into this one. Rationals map through
    /// `from_rational`; residues only map into their own field.
    pub fn convert(&self, c: &Coeff) -> Result<Coeff> {
        match c {
            Coeff::Rational(q) => self.from_rational(q),
            Coeff::Modular(x) => match *self {
                Field::Prime(p) if p == x.modulus => Ok(c.clone()),
                _ => Err(Error::FieldMismatch(format!(
                    "cannot map a residue mod {} into {self}",
                    x.modulus
                ))),
            },
        }
    }

    pub fn contains(&self, c: &Coeff) -> bool {
        c.field() == *self
    }

    /// Parses an exact coefficient string: an integer or `num/den`.
    pub fn parse_coeff(&self, s: &str) -> Result<Coeff> {
        let q = parse_rational(s)?;
        self.from_rational(&q).map_err(|e| match e {
            Error::BadPrime(p) => Error::Parse(format!("{s:?} has a denominator divisible by {p}")),
            other => other,
        })
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact coefficient: {s:?}"));
    let int = |t: &str| -> Result<BigInt> {
        let t = t.trim();
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(int(s)?)),
        Some((n, d)) => {
            let den = int(d)?;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(int(n)?, den))
        }
    }
}

/// Deterministic primality test for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    primal_check::miller_rabin(n)
}

/// Residue modulo a word-sized prime, kept in `0..modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: u64, modulus: u64) -> Self {
        Fp {
            value: value % modulus,
            modulus,
        }
    }

    fn from_i128(v: i128, p: u64) -> Self {
        Fp {
            value: v.rem_euclid(p as i128) as u64,
            modulus: p,
        }
    }

    fn from_bigint(v: &BigInt, p: u64) -> Self {
        let r = v.mod_floor(&BigInt::from(p));
        Fp {
            value: r.to_u64().expect("residue fits a word"),
            modulus: p,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn add(&self, o: &Fp) -> Fp {
        let s = (self.value as u128 + o.value as u128) % self.modulus as u128;
        Fp {
            value: s as u64,
            modulus: self.modulus,
        }
    }

    fn neg(&self) -> Fp {
        if self.value == 0 {
            *self
        } else {
            Fp {
                value: self.modulus - self.value,
                modulus: self.modulus,
            }
        }
    }

    fn mul(&self, o: &Fp) -> Fp {
        let m = (self.value as u128 * o.value as u128) % self.modulus as u128;
        Fp {
            value: m as u64,
            modulus: self.modulus,
        }
    }

    fn pow(&self, mut e: u64) -> Fp {
        let mut base = *self;
        let mut acc = Fp {
            value: 1 % self.modulus,
            modulus: self.modulus,
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    fn inv(&self) -> Result<Fp> {
        if self.value == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.modulus - 2))
    }
}

/// An exact field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Modular(Fp),
}

impl Coeff {
    pub fn field(&self) -> Field {
        match self {
            Coeff::Rational(_) => Field::Rational,
            Coeff::Modular(x) => Field::Prime(x.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_zero(),
            Coeff::Modular(x) => x.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_one(),
            Coeff::Modular(x) => x.value == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coeff::Rational(q) => Some(q),
            Coeff::Modular(_) => None,
        }
    }

    fn mismatch(&self, other: &Coeff) -> ! {
        panic!(
            "coefficient field mismatch: {} vs {}",
            self.field(),
            other.field()
        )
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a + b),
            (Coeff::Modular(a), Coeff::Modular(b)) if a.modulus == b.modulus => {
                Coeff::Modular(a.add(b))
            }
            _ => self.mismatch(other),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(-a),
            Coeff::Modular(a) => Coeff::Modular(a.neg()),
        }
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a * b),
            (Coeff::Modular(a), Coeff::Modular(b)) if a.modulus == b.modulus => {
                Coeff::Modular(a.mul(b))
            }
            _ => self.mismatch(other),
        }
    }

    pub fn inv(&self) -> Result<Coeff> {
        match self {
            Coeff::Rational(a) => {
                if a.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Coeff::Rational(a.recip()))
                }
            }
            Coeff::Modular(a) => a.inv().map(Coeff::Modular),
        }
    }

    pub fn div(&self, other: &Coeff) -> Result<Coeff> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: u32) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(num_traits::pow(a.clone(), e as usize)),
            Coeff::Modular(a) => Coeff::Modular(a.pow(e as u64)),
        }
    }

    /// Reduces a rational coefficient `a/b` to `a * b^-1 mod p`.
    pub fn reduce_mod(&self, p: u64) -> Result<Coeff> {
        Field::prime(p)?.convert(self)
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_negative(),
            Coeff::Modular(_) => false,
        }
    }

    /// Exact string form: `n`, `n/d` for rationals, the canonical residue for
    /// prime-field elements.
    pub fn to_exact_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Coeff::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Coeff::Modular(x) => write!(f, "{}", x.value),
        }
    }
}
