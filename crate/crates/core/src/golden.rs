//! The 3-chain counterexample: six matrices with their known values.

use serde::Serialize;

use crate::lawlang::LawError;
use crate::model::Model;

/// Label, term and expected inline value of each matrix.
pub const GOLDEN: [(&str, &str, &str); 6] = [
    ("ubd_E(X)", "ubd(E, X)", "(0 1)"),
    ("lbd_E(ubd_E(X))", "lbd(E, ubd(E, X))", "(1 1)"),
    ("lub_E(X)", "lub(E, X)", "(0 1)"),
    ("lub_E(X);C^T", "lub(E, X) ; conv(C)", "(1 0)"),
    ("X;C^T", "X ; conv(C)", "(u 0)"),
    ("(X;C^T)**", "star(star(X ; conv(C)))", "(1 0)"),
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExampleRow {
    pub label: &'static str,
    pub term: &'static str,
    pub computed: String,
    pub expected: &'static str,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExampleReport {
    pub model: String,
    pub rows: Vec<ExampleRow>,
    pub all_match: bool,
}

/// Evaluates the six terms over `model` and compares with the golden values.
pub fn paper_example(model: &Model) -> Result<ExampleReport, LawError> {
    let mut rows = Vec::with_capacity(GOLDEN.len());
    for (label, term, expected) in GOLDEN {
        let computed = model.eval(term)?.inline();
        rows.push(ExampleRow { label, term, matches: computed == expected, computed, expected });
    }
    let all_match = rows.iter().all(|r| r.matches);
    Ok(ExampleReport { model: model.id.clone(), rows, all_match })
}
