use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    Grevlex,
}

/// A monomial order together with a variable priority permutation.
///
/// `priority[k]` is the index of the variable ranked `k`-th; the identity
/// ranks `x_1 > x_2 > ... > x_v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Option<Vec<usize>>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::grevlex()
    }
}

impl MonomialOrder {
    pub fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            priority: None,
        }
    }

    pub fn grevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::Grevlex,
            priority: None,
        }
    }

    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; priority.len()];
        for &i in &priority {
            if i >= priority.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidArgument(format!(
                    "variable priority {priority:?} is not a permutation"
                )));
            }
        }
        let identity = priority.iter().enumerate().all(|(k, &i)| k == i);
        Ok(MonomialOrder {
            kind,
            priority: (!identity).then_some(priority),
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> Option<&[usize]> {
        self.priority.as_deref()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::LengthMismatch {
                expected: a.nvars(),
                got: b.nvars(),
            });
        }
        if let Some(p) = &self.priority {
            if p.len() != a.nvars() {
                return Err(Error::LengthMismatch {
                    expected: p.len(),
                    got: a.nvars(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison for callers that already hold same-ring monomials.
    pub(crate) fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        let at = |e: &[u32], k: usize| match &self.priority {
            Some(p) => e[p[k]],
            None => e[k],
        };
        let n = ea.len();
        match self.kind {
            OrderKind::Lex => {
                for k in 0..n {
                    match at(ea, k).cmp(&at(eb, k)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Grevlex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    o => return o,
                }
                // smaller exponent in the last differing variable wins
                for k in (0..n).rev() {
                    match at(ea, k).cmp(&at(eb, k)) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            OrderKind::Lex => write!(f, "lex"),
            OrderKind::Grevlex => write!(f, "grevlex"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_compares_first_exponent() {
        let lex = MonomialOrder::lex();
        assert_eq!(
            lex.compare(&m(&[2, 0]), &m(&[1, 3])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn grevlex_breaks_degree_ties_on_last_variable() {
        let g = MonomialOrder::grevlex();
        assert_eq!(g.compare(&m(&[1, 1]), &m(&[2, 0])).unwrap(), Ordering::Less);
        assert_eq!(
            g.compare(&m(&[0, 3]), &m(&[2, 0])).unwrap(),
            Ordering::Greater
        );
        // x*z^... classic: x1*x3 < x2^2 in grevlex, opposite in lex
        assert_eq!(
            g.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            MonomialOrder::lex()
                .compare(&m(&[1, 0, 1]), &m(&[0, 2, 0]))
                .unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn reflexive_and_length_checked() {
        for o in [MonomialOrder::lex(), MonomialOrder::grevlex()] {
            assert_eq!(
                o.compare(&m(&[3, 1]), &m(&[3, 1])).unwrap(),
                Ordering::Equal
            );
            assert!(matches!(
                o.compare(&m(&[1]), &m(&[1, 0])),
                Err(Error::LengthMismatch { .. })
            ));
        }
    }

    #[test]
    fn priority_permutes_variables() {
        let o = MonomialOrder::with_priority(OrderKind::Lex, vec![1, 0]).unwrap();
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 1])).unwrap(), Ordering::Less);
        assert!(MonomialOrder::with_priority(OrderKind::Lex, vec![0, 0]).is_err());
        assert_eq!(
            MonomialOrder::with_priority(OrderKind::Grevlex, vec![0, 1, 2]).unwrap(),
            MonomialOrder::grevlex()
        );
    }
}
