use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::coeff::Field;
use super::order::MonomialOrder;
use crate::error::{Error, Result};

/// Ambient polynomial ring `k[x_1, ..., x_v]` with a fixed monomial order.
///
/// Identity is `(field, v, order)`; variable names are display metadata.
#[derive(Debug, Clone)]
pub struct Ring {
    field: Field,
    names: Vec<String>,
    order: MonomialOrder,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.names.len() == other.names.len()
            && self.order == other.order
    }
}

impl Eq for Ring {}

impl Hash for Ring {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.names.len().hash(state);
        self.order.hash(state);
    }
}

impl Ring {
    pub fn new(field: Field, names: Vec<String>, order: MonomialOrder) -> Result<Arc<Ring>> {
        if let Some(p) = order.priority() {
            if p.len() != names.len() {
                return Err(Error::LengthMismatch {
                    expected: names.len(),
                    got: p.len(),
                });
            }
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || names[..i].contains(n) {
                return Err(Error::InvalidArgument(format!(
                    "bad or duplicate variable name {n:?}"
                )));
            }
        }
        Ok(Arc::new(Ring {
            field,
            names,
            order,
        }))
    }

    /// Ring with variables named `{prefix}1 .. {prefix}v`.
    pub fn with_prefix(
        field: Field,
        prefix: &str,
        nvars: usize,
        order: MonomialOrder,
    ) -> Arc<Ring> {
        let names = (1..=nvars).map(|i| format!("{prefix}{i}")).collect();
        Ring::new(field, names, order).expect("generated names are distinct")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and order over another coefficient field.
    pub fn with_field(&self, field: Field) -> Arc<Ring> {
        Arc::new(Ring {
            field,
            names: self.names.clone(),
            order: self.order.clone(),
        })
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(format!(
                "{}[{} vars, {}] vs {}[{} vars, {}]",
                self.field,
                self.nvars(),
                self.order,
                other.field,
                other.nvars(),
                other.order
            )))
        }
    }
}
