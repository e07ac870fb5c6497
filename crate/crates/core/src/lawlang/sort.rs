use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use indexmap::IndexMap;

use crate::relcore::Obj;
use crate::structures::{unit, Witnesses};

use super::LawError;

/// A sort expression: a named object, the unit, a product or a power.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sort {
    Named(String),
    Unit,
    Prod(Box<Sort>, Box<Sort>),
    Power(Box<Sort>),
    NePower(Box<Sort>),
}

impl Sort {
    pub fn named(s: &str) -> Sort {
        Sort::Named(s.to_string())
    }

    pub fn prod(a: Sort, b: Sort) -> Sort {
        Sort::Prod(Box::new(a), Box::new(b))
    }

    pub fn symbols(&self, out: &mut BTreeSet<String>) {
        match self {
            Sort::Named(n) => {
                out.insert(n.clone());
            }
            Sort::Unit => {}
            Sort::Prod(a, b) => {
                a.symbols(out);
                b.symbols(out);
            }
            Sort::Power(a) | Sort::NePower(a) => a.symbols(out),
        }
    }

    /// Resolves to a concrete object given the objects bound to named sorts.
    pub fn resolve(&self, binding: &IndexMap<String, Arc<Obj>>, w: &Witnesses) -> Result<Arc<Obj>, LawError> {
        Ok(match self {
            Sort::Named(n) => binding
                .get(n)
                .cloned()
                .ok_or_else(|| LawError::UnknownIdentifier { kind: "sort", name: n.clone() })?,
            Sort::Unit => unit(),
            Sort::Prod(a, b) => {
                let (a, b) = (a.resolve(binding, w)?, b.resolve(binding, w)?);
                w.product(&a, &b)?.obj.clone()
            }
            Sort::Power(a) => w.power(&a.resolve(binding, w)?)?.obj.clone(),
            Sort::NePower(a) => w.nepower(&a.resolve(binding, w)?)?.obj.clone(),
        })
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sort::Named(n) => f.write_str(n),
            Sort::Unit => f.write_str("1"),
            Sort::Prod(a, b) => {
                write!(f, "{a}*")?;
                if matches!(**b, Sort::Prod(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            Sort::Power(a) => write!(f, "P({a})"),
            Sort::NePower(a) => write!(f, "NP({a})"),
        }
    }
}
