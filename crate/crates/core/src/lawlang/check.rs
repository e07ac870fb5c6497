use std::sync::Arc;

use indexmap::IndexMap;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::lattice::Elem;
use crate::model::Model;
use crate::relcore::{Obj, Rel};

use super::ast::Law;
use super::compile::{Compiled, Env};
use super::generate::{generate, plan, Gen};
use super::typecheck::{typecheck_law, Scope};
use super::LawError;

/// Default exhaustive cap on the number of assignments.
pub const DEFAULT_CAP: u64 = 1_000_000;
/// Violations kept in a report; the total is always counted.
pub const VIOLATION_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Strategy {
    Exhaustive,
    Random { samples: u64, seed: u64 },
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Strategy::Exhaustive => f.write_str("exhaustive"),
            Strategy::Random { samples, seed } => write!(f, "random({samples}, seed={seed})"),
        }
    }
}

/// The cap from `RELCAT_CAP`, or the default.
pub fn cap_from_env() -> u64 {
    std::env::var("RELCAT_CAP").ok().and_then(|s| s.trim().parse().ok()).filter(|&c| c > 0).unwrap_or(DEFAULT_CAP)
}

#[derive(Debug, Clone)]
pub struct CheckOptions {
    pub strategy: Strategy,
    pub cap: u64,
    /// `None` uses the global rayon pool.
    pub workers: Option<usize>,
    /// Candidate values per variable; a variable listed here ranges over
    /// exactly the entries whose sort matches the binding.
    pub fixed: IndexMap<String, Vec<Rel>>,
    /// Bind law variables to model relations of the same name and sort.
    pub use_model_relations: bool,
    /// Sweep every sort symbol over every model object even when the
    /// model has objects with the symbols' names.
    pub sweep_sorts: bool,
    pub violation_limit: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            strategy: Strategy::Exhaustive,
            cap: cap_from_env(),
            workers: None,
            fixed: IndexMap::new(),
            use_model_relations: true,
            sweep_sorts: false,
            violation_limit: VIOLATION_LIMIT,
        }
    }
}

impl CheckOptions {
    pub fn new(strategy: Strategy) -> Self {
        CheckOptions { strategy, ..Default::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    /// Position in the enumeration order, or the sample number.
    pub index: u64,
    pub sorts: IndexMap<String, String>,
    pub binding: IndexMap<String, Rel>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub law: String,
    pub model: String,
    pub strategy: Strategy,
    pub bindings: u64,
    pub assignments: u64,
    pub satisfying: u64,
    pub violations_total: u64,
    pub violations: Vec<Violation>,
    pub vacuous: bool,
    pub fixed: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations_total == 0
    }
}

enum Domain {
    Values(Vec<Rel>),
    Enumerate { elems: Vec<Elem>, src: Arc<Obj>, tgt: Arc<Obj> },
}

impl Domain {
    fn size(&self) -> u128 {
        match self {
            Domain::Values(v) => v.len() as u128,
            Domain::Enumerate { elems, src, tgt } => {
                let cells = (src.size() * tgt.size()) as u32;
                (elems.len() as u128).checked_pow(cells).unwrap_or(u128::MAX)
            }
        }
    }

    /// The `k`-th value; the first entry is the most significant digit.
    fn value(&self, alg: &Arc<crate::lattice::HeytingAlgebra>, mut k: u128) -> Rel {
        match self {
            Domain::Values(v) => v[k as usize].clone(),
            Domain::Enumerate { elems, src, tgt } => {
                let cells = src.size() * tgt.size();
                let base = elems.len() as u128;
                let mut entries = vec![elems[0]; cells];
                for slot in entries.iter_mut().rev() {
                    *slot = elems[(k % base) as usize];
                    k /= base;
                }
                Rel::from_entries(alg, src, tgt, entries).expect("sizes agree")
            }
        }
    }

    fn random<R: Rng>(&self, g: Gen, alg: &Arc<crate::lattice::HeytingAlgebra>, rng: &mut R, earlier: &[Rel]) -> Rel {
        match self {
            Domain::Values(v) => v[rng.gen_range(0..v.len())].clone(),
            Domain::Enumerate { src, tgt, elems } => {
                let g = if elems.len() == 2 && g == Gen::Uniform { Gen::Crisp } else { g };
                generate(g, alg, src, tgt, rng, earlier)
            }
        }
    }
}

struct Instance {
    sorts: IndexMap<String, String>,
    compiled: Compiled,
    domains: Vec<Domain>,
    size: u128,
}

fn binding_candidates(law: &Law, model: &Model, opts: &CheckOptions) -> Result<Vec<IndexMap<String, Arc<Obj>>>, LawError> {
    let symbols = law.sort_symbols_ordered();
    if !opts.sweep_sorts && symbols.iter().all(|s| model.objects.contains_key(s)) {
        return Ok(vec![symbols.iter().map(|s| (s.clone(), model.objects[s].clone())).collect()]);
    }
    if model.objects.is_empty() {
        return Err(LawError::NoBinding(format!("model `{}` has no objects", model.id)));
    }
    let objs: Vec<&Arc<Obj>> = model.objects.values().collect();
    let mut out = Vec::new();
    let mut digits = vec![0usize; symbols.len()];
    loop {
        out.push(symbols.iter().zip(&digits).map(|(s, &d)| (s.clone(), objs[d].clone())).collect());
        let mut pos = symbols.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < objs.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

fn instantiate(
    law: &Law,
    scope: &Scope,
    model: &Model,
    opts: &CheckOptions,
    binding: IndexMap<String, Arc<Obj>>,
) -> Result<Instance, LawError> {
    let compiled = Compiled::new(law, scope, Env { binding: &binding, w: &model.witnesses })?;
    let alg = &model.alg;
    let mut domains = Vec::new();
    let mut size: u128 = 1;
    for (v, (s, t)) in law.vars.iter().zip(&compiled.var_sorts) {
        let fits = |r: &&Rel| r.source() == s && r.target() == t;
        let d = if let Some(list) = opts.fixed.get(&v.name) {
            Domain::Values(list.iter().filter(fits).cloned().collect())
        } else if let Some(r) = model.relations.get(&v.name).filter(|r| opts.use_model_relations && fits(r)) {
            Domain::Values(vec![r.clone()])
        } else if v.crisp {
            Domain::Enumerate { elems: vec![alg.bot(), alg.top()], src: s.clone(), tgt: t.clone() }
        } else {
            Domain::Enumerate { elems: alg.elements().collect(), src: s.clone(), tgt: t.clone() }
        };
        size = size.saturating_mul(d.size());
        domains.push(d);
    }
    let sorts = binding.iter().map(|(k, o)| (k.clone(), o.name().to_string())).collect();
    Ok(Instance { sorts, compiled, domains, size })
}

#[derive(Default)]
struct Tally {
    satisfying: u64,
    total: u64,
    kept: Vec<Violation>,
}

impl Tally {
    fn merge(mut self, other: Tally, limit: usize) -> Tally {
        self.satisfying += other.satisfying;
        self.total += other.total;
        for v in other.kept {
            if self.kept.len() < limit {
                self.kept.push(v);
            }
        }
        self
    }
}

fn violation(inst: &Instance, index: u64, vals: &[Rel]) -> Violation {
    Violation {
        index,
        sorts: inst.sorts.clone(),
        binding: inst.compiled.vars.iter().cloned().zip(vals.iter().cloned()).collect(),
    }
}

/// Evaluates every assumption whose variables are all assigned once the
/// variable at `level` is set.
fn hypotheses_at(inst: &Instance, level: usize, vals: &[&Rel]) -> Result<bool, LawError> {
    for (a, max) in &inst.compiled.assumptions {
        let due = match max {
            Some(m) => *m == level,
            None => level == 0,
        };
        if due && !inst.compiled.eval_atom(a, vals)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn dfs(
    inst: &Instance,
    alg: &Arc<crate::lattice::HeytingAlgebra>,
    level: usize,
    offset: u128,
    vals: &mut Vec<Rel>,
    tally: &mut Tally,
    limit: usize,
) -> Result<(), LawError> {
    let n = inst.domains.len();
    if level == n {
        let refs: Vec<&Rel> = vals.iter().collect();
        tally.satisfying += 1;
        if !inst.compiled.conclusion_holds(&refs)? {
            tally.total += 1;
            if tally.kept.len() < limit {
                tally.kept.push(violation(inst, offset as u64, vals));
            }
        }
        return Ok(());
    }
    let stride: u128 = inst.domains[level + 1..].iter().map(Domain::size).product();
    for k in 0..inst.domains[level].size() {
        vals.push(inst.domains[level].value(alg, k));
        let refs: Vec<&Rel> = vals.iter().collect();
        if hypotheses_at(inst, level, &refs)? {
            dfs(inst, alg, level + 1, offset + k * stride, vals, tally, limit)?;
        }
        vals.pop();
    }
    Ok(())
}

fn run_exhaustive(insts: &[Instance], model: &Model, limit: usize) -> Result<Tally, LawError> {
    // one task per binding and first-variable value, in enumeration order
    let mut tasks = Vec::new();
    let mut base: u128 = 0;
    for (b, inst) in insts.iter().enumerate() {
        if inst.domains.is_empty() {
            tasks.push((b, None, base));
        } else {
            let stride = inst.size / inst.domains[0].size().max(1);
            for k in 0..inst.domains[0].size() {
                tasks.push((b, Some(k), base + k * stride));
            }
        }
        base += inst.size;
    }
    let alg = &model.alg;
    let tallies: Vec<Result<Tally, LawError>> = tasks
        .par_iter()
        .map(|&(b, first, offset)| {
            let inst = &insts[b];
            let mut tally = Tally::default();
            let mut vals = Vec::new();
            match first {
                None => {
                    if hypotheses_at(inst, 0, &[])? {
                        dfs(inst, alg, 0, offset, &mut vals, &mut tally, limit)?;
                    }
                }
                Some(k) => {
                    vals.push(inst.domains[0].value(alg, k));
                    let refs: Vec<&Rel> = vals.iter().collect();
                    if hypotheses_at(inst, 0, &refs)? {
                        dfs(inst, alg, 1, offset, &mut vals, &mut tally, limit)?;
                    }
                }
            }
            Ok(tally)
        })
        .collect();
    let mut acc = Tally::default();
    for t in tallies {
        acc = acc.merge(t?, limit);
    }
    Ok(acc)
}

fn run_random(
    insts: &[Instance],
    gens: &[Gen],
    model: &Model,
    samples: u64,
    seed: u64,
    limit: usize,
) -> Result<Tally, LawError> {
    let alg = &model.alg;
    let live: Vec<&Instance> = insts.iter().filter(|i| i.size > 0).collect();
    if live.is_empty() {
        return Ok(Tally::default());
    }
    let tallies: Vec<Result<Tally, LawError>> = (0..samples)
        .into_par_iter()
        .map(|s| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(s);
            let inst = live[rng.gen_range(0..live.len())];
            let mut vals: Vec<Rel> = Vec::with_capacity(gens.len());
            for (d, g) in inst.domains.iter().zip(gens) {
                let v = d.random(*g, alg, &mut rng, &vals);
                vals.push(v);
            }
            let refs: Vec<&Rel> = vals.iter().collect();
            let mut tally = Tally::default();
            if inst.compiled.assumptions_hold(&refs)? {
                tally.satisfying = 1;
                if !inst.compiled.conclusion_holds(&refs)? {
                    tally.total = 1;
                    tally.kept.push(violation(inst, s, &vals));
                }
            }
            Ok(tally)
        })
        .collect();
    let mut acc = Tally::default();
    for t in tallies {
        acc = acc.merge(t?, limit);
    }
    Ok(acc)
}

pub fn check_law(law: &Law, model: &Model, strategy: Strategy) -> Result<CheckReport, LawError> {
    check_law_with(law, model, &CheckOptions::new(strategy))
}

pub fn check_law_with(law: &Law, model: &Model, opts: &CheckOptions) -> Result<CheckReport, LawError> {
    let scope = typecheck_law(law)?;
    let bindings = binding_candidates(law, model, opts)?;
    let insts: Vec<Instance> = bindings
        .into_iter()
        .map(|b| instantiate(law, &scope, model, opts, b))
        .collect::<Result<_, _>>()?;
    let total: u128 = insts.iter().fold(0u128, |acc, i| acc.saturating_add(i.size));
    let fixed: Vec<String> = law
        .vars
        .iter()
        .enumerate()
        .filter(|(k, _)| insts.iter().all(|i| matches!(i.domains[*k], Domain::Values(_))))
        .map(|(_, v)| v.name.clone())
        .collect();
    let limit = opts.violation_limit;
    let run = || match opts.strategy {
        Strategy::Exhaustive => {
            if total > opts.cap as u128 {
                return Err(LawError::ExhaustionCapExceeded { assignments: total, cap: opts.cap });
            }
            run_exhaustive(&insts, model, limit)
        }
        Strategy::Random { samples, seed } => run_random(&insts, &plan(law), model, samples, seed, limit),
    };
    let tally = match opts.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(run)?,
        None => run()?,
    };
    let assignments = match opts.strategy {
        Strategy::Exhaustive => total as u64,
        Strategy::Random { samples, .. } => samples,
    };
    Ok(CheckReport {
        law: law.id.clone(),
        model: model.id.clone(),
        strategy: opts.strategy,
        bindings: insts.len() as u64,
        assignments,
        satisfying: tally.satisfying,
        violations_total: tally.total,
        violations: tally.kept,
        vacuous: tally.satisfying == 0,
        fixed,
    })
}

/// Re-evaluates a reported violation: `Ok(true)` when the assumptions hold
/// and the conclusion fails under its binding.
pub fn replay(law: &Law, model: &Model, v: &Violation) -> Result<bool, LawError> {
    let scope = typecheck_law(law)?;
    let binding: IndexMap<String, Arc<Obj>> = v
        .sorts
        .iter()
        .map(|(s, o)| {
            model
                .objects
                .get(o)
                .cloned()
                .map(|obj| (s.clone(), obj))
                .ok_or_else(|| LawError::UnknownIdentifier { kind: "sort", name: o.clone() })
        })
        .collect::<Result<_, _>>()?;
    let c = Compiled::new(law, &scope, Env { binding: &binding, w: &model.witnesses })?;
    let vals: Vec<&Rel> = law.vars.iter().map(|d| &v.binding[&d.name]).collect();
    Ok(c.assumptions_hold(&vals)? && !c.conclusion_holds(&vals)?)
}
