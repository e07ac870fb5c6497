//! Sweeps generated models (lattice builders times carrier sizes) for
//! violations of one law.

use std::sync::Arc;

use serde::Serialize;

use crate::lattice::{HeytingAlgebra, LatticeError};
use crate::lawlang::{check_law_with, CheckOptions, CheckReport, Law, LawError};
use crate::model::Model;
use crate::relcore::Obj;
use crate::structures::StructureError;

pub const DEFAULT_LATTICES: &[&str] = &["chain:2", "chain:3", "chain:4", "prod(bool,bool)"];
pub const DEFAULT_MAX_CARRIER: usize = 3;

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub lattices: Vec<String>,
    pub max_carrier: usize,
    pub check: CheckOptions,
    /// Keep going after the first violating model.
    pub all: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            lattices: DEFAULT_LATTICES.iter().map(|s| s.to_string()).collect(),
            max_carrier: DEFAULT_MAX_CARRIER,
            check: CheckOptions::default(),
            all: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ModelOutcome {
    Checked { report: CheckReport },
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModelResult {
    pub lattice: String,
    pub sizes: Vec<(String, usize)>,
    #[serde(flatten)]
    pub outcome: ModelOutcome,
}

impl ModelResult {
    pub fn violated(&self) -> bool {
        matches!(&self.outcome, ModelOutcome::Checked { report } if report.violations_total > 0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub law: String,
    pub models_checked: u64,
    pub models_skipped: u64,
    pub results: Vec<ModelResult>,
}

impl SearchReport {
    pub fn violating(&self) -> impl Iterator<Item = &ModelResult> {
        self.results.iter().filter(|r| r.violated())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SearchError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Law(#[from] LawError),
    #[error("every generated model exceeds the exhaustive cap of {cap} assignments; use --strategy random or raise RELCAT_CAP")]
    AllSkipped { cap: u64 },
}

fn skippable(e: &LawError) -> bool {
    matches!(
        e,
        LawError::ExhaustionCapExceeded { .. }
            | LawError::MissingWitness(_)
            | LawError::Structure(StructureError::PowerTooLarge { .. })
    )
}

/// Carrier size tuples in lexicographic order, the first symbol most significant.
fn size_tuples(k: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out.into_iter().flat_map(|t| (1..=max).map(move |s| [t.clone(), vec![s]].concat())).collect();
    }
    out
}

pub fn search(law: &Law, cfg: &SearchConfig) -> Result<SearchReport, SearchError> {
    let symbols = law.sort_symbols_ordered();
    let mut report = SearchReport { law: law.id.clone(), models_checked: 0, models_skipped: 0, results: Vec::new() };
    let mut cap_skips = 0u64;
    'outer: for spec in &cfg.lattices {
        let alg = Arc::new(HeytingAlgebra::from_builder(spec)?);
        for sizes in size_tuples(symbols.len(), cfg.max_carrier) {
            let objs = symbols
                .iter()
                .zip(&sizes)
                .map(|(s, &n)| Obj::sized(s.clone(), n).expect("positive size"))
                .collect();
            let id = format!(
                "{spec} {}",
                symbols.iter().zip(&sizes).map(|(s, n)| format!("|{s}|={n}")).collect::<Vec<_>>().join(" ")
            );
            let model = Model::bare(id.trim(), alg.clone(), objs);
            let sizes: Vec<(String, usize)> = symbols.iter().cloned().zip(sizes).collect();
            let outcome = match check_law_with(law, &model, &cfg.check) {
                Ok(r) => {
                    report.models_checked += 1;
                    ModelOutcome::Checked { report: r }
                }
                Err(e) if skippable(&e) => {
                    report.models_skipped += 1;
                    if matches!(e, LawError::ExhaustionCapExceeded { .. }) {
                        cap_skips += 1;
                    }
                    ModelOutcome::Skipped { reason: e.to_string() }
                }
                Err(e) => return Err(e.into()),
            };
            let result = ModelResult { lattice: spec.clone(), sizes, outcome };
            let stop = result.violated() && !cfg.all;
            report.results.push(result);
            if stop {
                break 'outer;
            }
        }
    }
    if report.models_checked == 0 && cap_skips > 0 {
        return Err(SearchError::AllSkipped { cap: cfg.check.cap });
    }
    Ok(report)
}
