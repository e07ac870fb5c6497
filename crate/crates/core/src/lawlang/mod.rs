//! A small typed language of relation terms and conditional laws, with a
//! parser, printer, typechecker, evaluator and an assignment-search checker.

mod ast;
mod catalog;
mod check;
mod compile;
mod generate;
mod lexer;
mod parser;
mod sort;
mod typecheck;

use thiserror::Error;

use crate::relcore::RelError;
use crate::structures::StructureError;

pub use ast::{Atom, BinOp, Const, Def, Formula, Law, Pred, Term, UnOp, VarDecl};
pub use catalog::{catalog, catalog_entry, CatalogEntry, LawKind};
pub use check::{
    cap_from_env, check_law, check_law_with, replay, CheckOptions, CheckReport, Strategy, Violation, DEFAULT_CAP,
    VIOLATION_LIMIT,
};
pub use compile::{eval_term, Compiled, Env};
pub use parser::{parse_formula, parse_law, parse_sort, parse_term};
pub use sort::Sort;
pub use typecheck::{typecheck_law, typecheck_term, Scope};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LawError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown {kind} `{name}`")]
    UnknownIdentifier { kind: &'static str, name: String },
    #[error("`{0}` declared twice")]
    DuplicateDeclaration(String),
    #[error("sort mismatch in {op}: {left} vs {right}")]
    SortMismatch { op: String, left: String, right: String },
    #[error("missing witness: {0}")]
    MissingWitness(String),
    #[error("{assignments} assignments exceed the exhaustive cap of {cap}; use the random strategy or raise RELCAT_CAP")]
    ExhaustionCapExceeded { assignments: u128, cap: u64 },
    #[error("cannot bind sorts: {0}")]
    NoBinding(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Rel(#[from] RelError),
}
