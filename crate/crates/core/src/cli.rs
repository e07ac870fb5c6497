//! The `relcat` command line driver.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::lawlang::{
    cap_from_env, catalog, catalog_entry, check_law_with, CatalogEntry, CheckOptions, CheckReport, LawError, LawKind,
    Strategy,
};
use crate::model::{example_files, Model, ModelError};
use crate::golden::paper_example;
use crate::search::{search, ModelOutcome, SearchConfig, SearchError, DEFAULT_LATTICES, DEFAULT_MAX_CARRIER};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Law(#[from] LawError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("unknown law `{0}`; run `relcat laws` for the catalog")]
    UnknownLaw(String),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Exhaustive,
    Random,
}

#[derive(Debug, Parser)]
#[command(name = "relcat", version, about = "Finite models of Heyting categories and law checking")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct StrategyOpts {
    #[arg(long, value_enum, default_value = "exhaustive")]
    pub strategy: StrategyArg,
    #[arg(long, default_value_t = 500)]
    pub samples: u64,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check catalog laws against one or more model files.
    Check {
        #[arg(long, num_args = 1.., required = true)]
        model: Vec<PathBuf>,
        #[arg(long, default_value = "all")]
        laws: String,
        #[command(flatten)]
        opts: StrategyOpts,
    },
    /// Evaluate a term over a model (the embedded 3-chain model by default).
    Eval {
        term: String,
        #[arg(long)]
        model: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Search generated models for a violation of a law.
    Search {
        #[arg(long, alias = "laws")]
        law: String,
        #[arg(long, default_value_t = DEFAULT_MAX_CARRIER)]
        max_carrier: usize,
        #[arg(long, value_delimiter = ',')]
        lattices: Option<Vec<String>>,
        /// Report every violating model instead of stopping at the first.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        opts: StrategyOpts,
    },
    /// Reproduce the six matrices of the 3-chain counterexample.
    PaperExample {
        #[arg(long)]
        model: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the law catalog.
    Laws {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write the example model files.
    InitExamples {
        #[arg(long, default_value = ".")]
        dir: PathBuf,
        #[arg(long)]
        force: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
    ExpectedFailConfirmed,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Vacuous => "VACUOUS",
            Status::ExpectedFailConfirmed => "EXPECTED-FAIL-CONFIRMED",
            Status::Skipped => "SKIPPED",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LawResult {
    pub law: String,
    pub model: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<CheckReport>,
}

fn strategy(opts: &StrategyOpts) -> Result<Strategy, CliError> {
    match opts.strategy {
        StrategyArg::Exhaustive => Ok(Strategy::Exhaustive),
        StrategyArg::Random => {
            let seed = opts.seed.ok_or_else(|| CliError::Usage("--strategy random needs --seed".into()))?;
            if opts.samples == 0 {
                return Err(CliError::Usage("--samples must be positive".into()));
            }
            Ok(Strategy::Random { samples: opts.samples, seed })
        }
    }
}

fn check_options(opts: &StrategyOpts) -> Result<CheckOptions, CliError> {
    if opts.workers == Some(0) {
        return Err(CliError::Usage("--workers must be positive".into()));
    }
    Ok(CheckOptions { workers: opts.workers, ..CheckOptions::new(strategy(opts)?) })
}

fn select_laws(spec: &str) -> Result<(Vec<&'static CatalogEntry>, bool), CliError> {
    if spec.trim() == "all" {
        return Ok((catalog().iter().collect(), true));
    }
    let laws = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|id| catalog_entry(id).ok_or_else(|| CliError::UnknownLaw(id.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    if laws.is_empty() {
        return Err(CliError::Usage("no laws selected".into()));
    }
    Ok((laws, false))
}

fn load(path: &Path) -> Result<Model, CliError> {
    Ok(Model::load(path)?)
}

/// Runs one catalog law on one model and classifies the outcome.
pub fn check_entry(entry: &CatalogEntry, model: &Model, opts: &CheckOptions) -> Result<LawResult, LawError> {
    let law = entry.law();
    let mk = |status, reason: Option<String>, report| LawResult {
        law: entry.id.to_string(),
        model: model.id.clone(),
        status,
        reason,
        report,
    };
    if entry.kind == LawKind::Axiom {
        let symbols = law.sort_symbols_ordered();
        let missing: Vec<&str> = symbols
            .iter()
            .filter(|s| !model.objects.contains_key(*s))
            .map(String::as_str)
            .chain(law.vars.iter().filter(|v| !model.relations.contains_key(&v.name)).map(|v| v.name.as_str()))
            .collect();
        if !missing.is_empty() {
            return Ok(mk(Status::Skipped, Some(format!("model has no candidate for {}", missing.join(", "))), None));
        }
    }
    if let LawKind::ExpectedFail { fixture } = entry.kind {
        if model.id != fixture {
            return Ok(mk(Status::Skipped, Some(format!("expected-fail law; its fixture is `{fixture}`")), None));
        }
    }
    let report = check_law_with(&law, model, opts)?;
    let (status, reason) = match entry.kind {
        LawKind::ExpectedFail { .. } if report.violations_total > 0 => (Status::ExpectedFailConfirmed, None),
        LawKind::ExpectedFail { .. } => (Status::Fail, Some("expected a violation in the fixture, found none".into())),
        _ if report.violations_total > 0 => (Status::Fail, None),
        _ if report.vacuous => (Status::Vacuous, Some("no assignment satisfies the assumptions".into())),
        _ => (Status::Pass, None),
    };
    Ok(mk(status, reason, Some(report)))
}

fn write_json(out: &mut dyn Write, v: &serde_json::Value) {
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn header(command: &str, strategy: Option<Strategy>, cap: u64) -> serde_json::Map<String, serde_json::Value> {
    let mut m = serde_json::Map::new();
    m.insert("tool".into(), json!("relcat"));
    m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    m.insert("command".into(), json!(command));
    if let Some(s) = strategy {
        m.insert("strategy".into(), json!(s));
        m.insert(
            "seed".into(),
            match s {
                Strategy::Random { seed, .. } => json!(seed),
                Strategy::Exhaustive => serde_json::Value::Null,
            },
        );
    }
    m.insert("cap".into(), json!(cap));
    m
}

fn describe(report: &CheckReport) -> String {
    let mut s = format!(
        "{}: {} assignments, {} satisfying, {} violations",
        report.strategy, report.assignments, report.satisfying, report.violations_total
    );
    if !report.fixed.is_empty() {
        s.push_str(&format!(" (fixed: {})", report.fixed.join(", ")));
    }
    s
}

fn print_witness(out: &mut dyn Write, report: &CheckReport) {
    if let Some(v) = report.violations.first() {
        let sorts: Vec<String> = v.sorts.iter().map(|(s, o)| format!("{s}={o}")).collect();
        if !sorts.is_empty() && v.sorts.iter().any(|(s, o)| s != o) {
            let _ = writeln!(out, "    sorts: {}", sorts.join(" "));
        }
        for (name, r) in &v.binding {
            let _ = writeln!(out, "    {name} = {}", r.inline());
        }
    }
}

fn cmd_check(models: &[PathBuf], laws: &str, opts: &StrategyOpts, out: &mut dyn Write) -> Result<i32, CliError> {
    let (entries, all) = select_laws(laws)?;
    let copts = check_options(opts)?;
    let models: Vec<Model> = models.iter().map(|p| load(p)).collect::<Result<_, _>>()?;
    let start = Instant::now();
    let mut results = Vec::new();
    for model in &models {
        for e in &entries {
            match check_entry(e, model, &copts) {
                Ok(r) => results.push(r),
                Err(err) if all => results.push(LawResult {
                    law: e.id.to_string(),
                    model: model.id.clone(),
                    status: Status::Skipped,
                    reason: Some(err.to_string()),
                    report: None,
                }),
                Err(err) => return Err(err.into()),
            }
        }
    }
    let failed = results.iter().any(|r| r.status == Status::Fail);
    match opts.format {
        Format::Json => {
            let mut m = header("check", Some(copts.strategy), copts.cap);
            m.insert("results".into(), json!(results));
            m.insert("elapsed_ms".into(), json!(start.elapsed().as_millis() as u64));
            write_json(out, &serde_json::Value::Object(m));
        }
        Format::Text => {
            let width = results.iter().map(|r| r.law.len()).max().unwrap_or(0);
            for r in &results {
                let detail = match (&r.report, &r.reason) {
                    (Some(rep), Some(reason)) => format!("{}; {reason}", describe(rep)),
                    (Some(rep), None) => describe(rep),
                    (None, Some(reason)) => reason.clone(),
                    (None, None) => String::new(),
                };
                let _ = writeln!(out, "{:<23} {:<width$}  [{}] {detail}", r.status.label(), r.law, r.model);
                if let Some(rep) = &r.report {
                    if matches!(r.status, Status::Fail | Status::ExpectedFailConfirmed) {
                        print_witness(out, rep);
                    }
                }
            }
        }
    }
    Ok(if failed { EXIT_VIOLATION } else { EXIT_OK })
}

fn cmd_eval(term: &str, model: Option<&Path>, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let model = match model {
        Some(p) => load(p)?,
        None => Model::paper(),
    };
    let r = model.eval(term)?;
    match format {
        Format::Text => {
            let _ = writeln!(out, "{r}");
        }
        Format::Json => {
            let mut m = header("eval", None, cap_from_env());
            m.insert("model".into(), json!(model.id));
            m.insert("term".into(), json!(term));
            m.insert("value".into(), json!(r));
            write_json(out, &serde_json::Value::Object(m));
        }
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    law: &str,
    max_carrier: usize,
    lattices: Option<&[String]>,
    all: bool,
    opts: &StrategyOpts,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let entry = catalog_entry(law.trim()).ok_or_else(|| CliError::UnknownLaw(law.to_string()))?;
    if max_carrier == 0 {
        return Err(CliError::Usage("--max-carrier must be positive".into()));
    }
    let lattices: Vec<String> = match lattices {
        Some(l) => l.iter().map(|s| if s.trim() == "bool" { "chain:2".to_string() } else { s.trim().to_string() }).collect(),
        None => DEFAULT_LATTICES.iter().map(|s| s.to_string()).collect(),
    };
    let cfg = SearchConfig { lattices, max_carrier, check: check_options(opts)?, all };
    let start = Instant::now();
    let report = search(&entry.law(), &cfg)?;
    let found = report.violating().count();
    let expected_fail = matches!(entry.kind, LawKind::ExpectedFail { .. });
    let code = if (found > 0) == expected_fail { EXIT_OK } else { EXIT_VIOLATION };
    match opts.format {
        Format::Json => {
            let mut m = header("search", Some(cfg.check.strategy), cfg.check.cap);
            m.insert("max_carrier".into(), json!(max_carrier));
            m.insert("lattices".into(), json!(cfg.lattices));
            m.insert("expected_fail".into(), json!(expected_fail));
            m.insert("report".into(), json!(report));
            m.insert("elapsed_ms".into(), json!(start.elapsed().as_millis() as u64));
            write_json(out, &serde_json::Value::Object(m));
        }
        Format::Text => {
            for r in &report.results {
                let sizes: Vec<String> = r.sizes.iter().map(|(s, n)| format!("|{s}|={n}")).collect();
                let where_ = format!("{} {}", r.lattice, sizes.join(" "));
                match &r.outcome {
                    ModelOutcome::Checked { report: rep } => {
                        let tag = if rep.violations_total > 0 {
                            "VIOLATION"
                        } else if rep.vacuous {
                            "vacuous"
                        } else {
                            "ok"
                        };
                        let _ = writeln!(out, "{tag:<9} {where_}  {}", describe(rep));
                        if rep.violations_total > 0 {
                            print_witness(out, rep);
                        }
                    }
                    ModelOutcome::Skipped { reason } => {
                        let _ = writeln!(out, "{:<9} {where_}  {reason}", "skipped");
                    }
                }
            }
            let _ = writeln!(
                out,
                "{}: {} models checked, {} skipped, {} violating",
                report.law, report.models_checked, report.models_skipped, found
            );
        }
    }
    Ok(code)
}

fn cmd_paper_example(model: Option<&Path>, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let model = match model {
        Some(p) => load(p)?,
        None => Model::paper(),
    };
    let report = paper_example(&model)?;
    match format {
        Format::Text => {
            for r in &report.rows {
                let mark = if r.matches { "ok" } else { "MISMATCH" };
                let _ = writeln!(out, "{:<16} = {:<8} {mark}", r.label, r.computed);
                if !r.matches {
                    let _ = writeln!(out, "{:<16}   expected {}", "", r.expected);
                }
            }
        }
        Format::Json => {
            let mut m = header("paper-example", None, cap_from_env());
            m.insert("report".into(), json!(report));
            write_json(out, &serde_json::Value::Object(m));
        }
    }
    Ok(if report.all_match { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_laws(format: Format, out: &mut dyn Write) -> i32 {
    match format {
        Format::Json => {
            let mut m = header("laws", None, cap_from_env());
            m.insert("laws".into(), json!(catalog()));
            write_json(out, &serde_json::Value::Object(m));
        }
        Format::Text => {
            for e in catalog() {
                let kind = match e.kind {
                    LawKind::Holds => String::new(),
                    LawKind::Axiom => " [axiom]".into(),
                    LawKind::ExpectedFail { fixture } => format!(" [expected fail in {fixture}]"),
                };
                let _ = writeln!(out, "{:<18} {}{kind}", e.id, e.anchor);
            }
        }
    }
    EXIT_OK
}

fn cmd_init_examples(dir: &Path, force: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.display().to_string(), source })?;
    for (name, text) in example_files() {
        let path = dir.join(name);
        if path.exists() && !force {
            return Err(CliError::Usage(format!("{} exists; pass --force to overwrite", path.display())));
        }
        std::fs::write(&path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        let _ = writeln!(out, "wrote {}", path.display());
    }
    Ok(EXIT_OK)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Check { model, laws, opts } => cmd_check(&model, &laws, &opts, out),
        Command::Eval { term, model, format } => cmd_eval(&term, model.as_deref(), format, out),
        Command::Search { law, max_carrier, lattices, all, opts } => {
            cmd_search(&law, max_carrier, lattices.as_deref(), all, &opts, out)
        }
        Command::PaperExample { model, format } => cmd_paper_example(model.as_deref(), format, out),
        Command::Laws { format } => Ok(cmd_laws(format, out)),
        Command::InitExamples { dir, force } => cmd_init_examples(&dir, force, out),
    }
}

/// Parses arguments and runs a command; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if matches!(e, CliError::Search(SearchError::AllSkipped { .. }) | CliError::Law(LawError::ExhaustionCapExceeded { .. })) {
                let _ = writeln!(err, "hint: use --strategy random --samples N --seed N, or raise RELCAT_CAP");
            }
            EXIT_INPUT
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["relcat"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn eval_on_embedded_model() {
        let (code, out, _) = run_str(&["eval", "ubd(E,X)"]);
        assert_eq!((code, out.as_str()), (0, "(0 1)\n"));
        assert_eq!(run_str(&["eval", "dom(X)"]).1, "(u)\n");
        assert_eq!(run_str(&["eval", "I[A] ; X"]).1, "(0 u)\n");
        let (code, _, err) = run_str(&["eval", "X ; X"]);
        assert_eq!(code, 2);
        assert!(err.contains("sort mismatch"));
    }

    #[test]
    fn paper_example_passes() {
        let (code, out, _) = run_str(&["paper-example"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 6);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["check", "--model", "nope.json"]).0, 2);
        assert_eq!(run_str(&["search", "--law", "nope"]).0, 2);
        assert_eq!(run_str(&["search", "--law", "schroeder", "--strategy", "random"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["--version"]).0, 0);
    }

    #[test]
    fn laws_listing() {
        let (code, out, _) = run_str(&["laws"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), catalog().len());
    }
}
