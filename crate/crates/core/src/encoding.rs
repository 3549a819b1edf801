//! Fixed-size coefficient code of an ideal of complexity at most `d`.
//!
//! With `D = C(n+d, n)` monomials of degree `<= d`, an ideal whose normalized
//! generators have pairwise distinct leading monomials has at most `D`
//! generators. The code stores exactly `D` rows of `D` coefficients each,
//! zero-padded, with columns listing the monomials in descending order.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::IdealPresentation;
use crate::polyarith::{Coeff, Field, Monomial, MonomialOrder, OrderKind, Polynomial, Ring};

/// `C(n+d, n)`, the number of monomials of degree at most `d` in `n`
/// variables. Requires `1 <= n <= d`.
pub fn code_size(n: usize, d: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "code size needs at least one variable".into(),
        ));
    }
    if d < n {
        return Err(Error::InvalidArgument(format!(
            "complexity {d} is below the variable count {n}"
        )));
    }
    let size = binomial(n + d, n)?;
    assert!(
        size <= binomial(2 * d, d)?,
        "C(n+d, n) <= C(2d, d) whenever n <= d"
    );
    usize::try_from(size)
        .map_err(|_| Error::InvalidArgument(format!("C({}, {n}) overflows", n + d)))
}

fn binomial(n: usize, k: usize) -> Result<u128> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or_else(|| Error::InvalidArgument(format!("C({n}, {k}) overflows")))?
            / (i as u128 + 1);
    }
    Ok(acc)
}

/// Rewrites the generators so that all are monic with pairwise distinct
/// leading monomials, by repeatedly replacing `f_j` with `f_j - f_i` on a
/// leading-monomial collision. Generators are processed in ascending order
/// (comparing term sequences), so the simpler of two colliding generators is
/// the one kept. Zeros are dropped.
pub fn normalize_generators(ideal: &IdealPresentation) -> IdealPresentation {
    let order = ideal.order().clone();
    let mut gens: Vec<Polynomial> = ideal.nonzero_generators().map(Polynomial::monic).collect();
    gens.sort_by(|a, b| {
        for (ta, tb) in a.terms().iter().zip(b.terms()) {
            match order.cmp(&ta.monomial, &tb.monomial) {
                std::cmp::Ordering::Equal => continue,
                o => return o,
            }
        }
        a.len().cmp(&b.len())
    });
    let mut out: Vec<Polynomial> = Vec::new();
    for mut g in gens {
        while let Some(lm) = g.leading_monomial().cloned() {
            match out.iter().find(|h| h.leading_monomial() == Some(&lm)) {
                Some(h) => g = (&g - h).monic(),
                None => break,
            }
        }
        if !g.is_zero() {
            out.push(g);
        }
    }
    if out.is_empty() {
        return IdealPresentation::zero(ideal.ring());
    }
    IdealPresentation::new(ideal.ring(), out).expect("same ring, nonempty")
}

/// Monomials of degree `<= d` in descending order; the code's column labels.
pub fn code_monomials(nvars: usize, d: usize, order: &MonomialOrder) -> Vec<Monomial> {
    let mut ms = Monomial::all_up_to_degree(nvars, d as u32);
    ms.sort_by(|a, b| order.cmp(b, a));
    ms
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealCode {
    pub nvars: usize,
    pub complexity: usize,
    pub order: MonomialOrder,
    pub field: Field,
    /// `D` rows of `D` coefficients.
    pub rows: Vec<Vec<Coeff>>,
}

pub fn encode_ideal(ideal: &IdealPresentation, d: usize) -> Result<IdealCode> {
    let n = ideal.nvars();
    if n > d {
        return Err(Error::ComplexityExceeded(d));
    }
    let size = code_size(n, d)?;
    let normalized = normalize_generators(ideal);
    if normalized
        .nonzero_generators()
        .any(|g| g.degree().unwrap_or(0) as usize > d)
    {
        return Err(Error::ComplexityExceeded(d));
    }
    let columns = code_monomials(n, d, ideal.order());
    let field = ideal.ring().field();
    let mut rows: Vec<Vec<Coeff>> = normalized
        .nonzero_generators()
        .map(|g| {
            let mut row = vec![field.zero(); size];
            let mut col = 0;
            for t in g.terms() {
                // both sequences descend under the same order
                while columns[col] != t.monomial {
                    col += 1;
                }
                row[col] = t.coeff.clone();
            }
            row
        })
        .collect();
    if rows.len() > size {
        return Err(Error::ComplexityExceeded(d));
    }
    rows.resize(size, vec![field.zero(); size]);
    Ok(IdealCode {
        nvars: n,
        complexity: d,
        order: ideal.order().clone(),
        field,
        rows,
    })
}

/// Reads the nonzero rows back as generators, in a ring with variables
/// `x1..xn`. An all-zero code decodes to the zero ideal.
pub fn decode_ideal(code: &IdealCode) -> Result<IdealPresentation> {
    let size =
        code_size(code.nvars, code.complexity).map_err(|e| Error::MalformedCode(e.to_string()))?;
    if code.rows.len() != size {
        return Err(Error::MalformedCode(format!(
            "expected {size} rows, found {}",
            code.rows.len()
        )));
    }
    let ring = code_ring(code)?;
    let columns = code_monomials(code.nvars, code.complexity, &code.order);
    let mut gens = Vec::new();
    for (i, row) in code.rows.iter().enumerate() {
        if row.len() != size {
            return Err(Error::MalformedCode(format!(
                "row {i} has {} entries, expected {size}",
                row.len()
            )));
        }
        if let Some(c) = row.iter().find(|c| !code.field.contains(c)) {
            return Err(Error::MalformedCode(format!(
                "row {i} holds an element of {}",
                c.field()
            )));
        }
        let g = Polynomial::from_terms(&ring, row.iter().cloned().zip(columns.iter().cloned()))?;
        if !g.is_zero() {
            gens.push(g);
        }
    }
    if gens.is_empty() {
        return Ok(IdealPresentation::zero(&ring));
    }
    IdealPresentation::new(&ring, gens)
}

fn code_ring(code: &IdealCode) -> Result<Arc<Ring>> {
    let names = (1..=code.nvars).map(|i| format!("x{i}")).collect();
    Ring::new(code.field, names, code.order.clone())
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CodeJson {
    nvars: usize,
    complexity: usize,
    order: OrderKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    priority: Option<Vec<usize>>,
    field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    modulus: Option<u64>,
    rows: Vec<Vec<String>>,
}

impl IdealCode {
    /// JSON object `{nvars, complexity, order, field, [modulus], rows}` with
    /// coefficients as exact strings.
    pub fn to_json(&self) -> String {
        let (field, modulus) = match self.field {
            Field::Rational => ("Q".to_string(), None),
            Field::Prime(p) => ("Fp".to_string(), Some(p)),
        };
        let js = CodeJson {
            nvars: self.nvars,
            complexity: self.complexity,
            order: self.order.kind(),
            priority: self.order.priority().map(<[usize]>::to_vec),
            field,
            modulus,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(Coeff::to_exact_string).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&js).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<IdealCode> {
        let js: CodeJson =
            serde_json::from_str(text).map_err(|e| Error::MalformedCode(e.to_string()))?;
        let field = match (js.field.as_str(), js.modulus) {
            ("Q", None) => Field::Rational,
            ("Fp", Some(p)) => Field::prime(p)?,
            (f, m) => {
                return Err(Error::MalformedCode(format!(
                    "bad field {f:?} with modulus {m:?}"
                )))
            }
        };
        let order = match js.priority {
            None => match js.order {
                OrderKind::Lex => MonomialOrder::lex(),
                OrderKind::Grevlex => MonomialOrder::grevlex(),
            },
            Some(p) => MonomialOrder::with_priority(js.order, p)?,
        };
        let rows = js
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| parse_code_coeff(field, s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let code = IdealCode {
            nvars: js.nvars,
            complexity: js.complexity,
            order,
            field,
            rows,
        };
        decode_ideal(&code)?;
        Ok(code)
    }
}

/// Only canonical spellings are accepted, so that parsing and printing are
/// inverse to each other.
fn parse_code_coeff(field: Field, s: &str) -> Result<Coeff> {
    let c = field
        .parse_coeff(s)
        .map_err(|e| Error::MalformedCode(e.to_string()))?;
    if c.to_exact_string() != s {
        return Err(Error::MalformedCode(format!(
            "non-canonical coefficient {s:?}"
        )));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_equal;

    fn ring(names: &[&str], order: MonomialOrder) -> Arc<Ring> {
        Ring::new(
            Field::Rational,
            names.iter().map(|s| s.to_string()).collect(),
            order,
        )
        .unwrap()
    }

    #[test]
    fn sizes() {
        assert_eq!(code_size(2, 3).unwrap(), 10);
        assert_eq!(code_size(1, 1).unwrap(), 2);
        assert_eq!(code_size(2, 2).unwrap(), 6);
        assert!(code_size(3, 2).is_err());
        assert!(code_size(0, 2).is_err());
    }

    #[test]
    fn normalization_examples() {
        let r = ring(&["x", "y"], MonomialOrder::lex());
        let gens = |s| {
            normalize_generators(&IdealPresentation::parse(&r, s).unwrap())
                .generators()
                .iter()
                .map(Polynomial::render)
                .collect::<Vec<_>>()
        };
        assert_eq!(gens("(2*x, x)"), vec!["x"]);
        assert_eq!(gens("(x + y, x)"), vec!["x", "y"]);
        assert_eq!(gens("(x)"), vec!["x"]);
        assert_eq!(gens("(0)"), vec!["0"]);
    }

    #[test]
    fn encode_single_variable() {
        let r = ring(&["x"], MonomialOrder::lex());
        let code = encode_ideal(&IdealPresentation::parse(&r, "(x)").unwrap(), 1).unwrap();
        let f = Field::Rational;
        assert_eq!(
            code.rows,
            vec![vec![f.one(), f.zero()], vec![f.zero(), f.zero()]]
        );
        assert!(ideal_equal(
            &decode_ideal(&code).unwrap(),
            &IdealPresentation::parse(&code_ring(&code).unwrap(), "(x1)").unwrap()
        )
        .unwrap());
    }

    #[test]
    fn zero_ideal_and_overflow() {
        let r = ring(&["x", "y"], MonomialOrder::grevlex());
        let code = encode_ideal(&IdealPresentation::zero(&r), 2).unwrap();
        assert!(code.rows.iter().flatten().all(Coeff::is_zero));
        assert!(decode_ideal(&code).unwrap().is_zero_ideal());

        let x = ring(&["x"], MonomialOrder::grevlex());
        let cubic = IdealPresentation::parse(&x, "(x^3)").unwrap();
        assert_eq!(encode_ideal(&cubic, 2), Err(Error::ComplexityExceeded(2)));
        assert_eq!(
            encode_ideal(&IdealPresentation::zero(&r), 1),
            Err(Error::ComplexityExceeded(1))
        );
    }

    #[test]
    fn rational_round_trip() {
        let r = ring(&["x", "y"], MonomialOrder::grevlex());
        let i = IdealPresentation::parse(&r, "(x - y, 2*y)").unwrap();
        let code = encode_ideal(&i, 2).unwrap();
        let back = decode_ideal(&code).unwrap();
        let i_in_code_ring =
            IdealPresentation::parse(&code_ring(&code).unwrap(), "(x1 - x2, 2*x2)").unwrap();
        assert!(ideal_equal(&back, &i_in_code_ring).unwrap());
        let js = code.to_json();
        let again = IdealCode::from_json(&js).unwrap();
        assert_eq!(again, code);
        assert_eq!(again.to_json(), js);
    }

    #[test]
    fn json_rejects_malformed_codes() {
        let r = Ring::with_prefix(Field::Prime(7), "x", 1, MonomialOrder::grevlex());
        let code = encode_ideal(&IdealPresentation::parse(&r, "(3*x1 + 1)").unwrap(), 1).unwrap();
        let js = code.to_json();
        assert!(js.contains("\"modulus\": 7"));
        assert_eq!(IdealCode::from_json(&js).unwrap(), code);

        assert!(IdealCode::from_json(&js.replace("\"5\"", "\"12\"")).is_err());
        assert!(IdealCode::from_json(&js.replace("\"modulus\": 7", "\"modulus\": 8")).is_err());
        let short = r#"{"nvars":1,"complexity":1,"order":"lex","field":"Q","rows":[["1","0"]]}"#;
        assert!(matches!(
            IdealCode::from_json(short),
            Err(Error::MalformedCode(_))
        ));
        let extra = r#"{"nvars":1,"complexity":1,"order":"lex","field":"Q","rows":[["1","0"],["0","0"]],"x":1}"#;
        assert!(IdealCode::from_json(extra).is_err());
        let ok =
            r#"{"nvars":1,"complexity":1,"order":"lex","field":"Q","rows":[["1","0"],["0","0"]]}"#;
        assert!(IdealCode::from_json(ok).is_ok());
        let noncanon = r#"{"nvars":1,"complexity":1,"order":"lex","field":"Q","rows":[["2/2","0"],["0","0"]]}"#;
        assert!(IdealCode::from_json(noncanon).is_err());
    }
}
