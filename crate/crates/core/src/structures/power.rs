use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::lattice::{Elem, HeytingAlgebra};
use crate::relcore::{Obj, Rel};

use super::{split, unit, StructureError, Witnesses, DEFAULT_SAMPLES};

/// How a "for every Q" condition was checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Regime {
    Exhaustive { cases: u64 },
    Sampled { samples: usize, seed: u64 },
}

pub(crate) const EXHAUSTIVE_LIMIT: u128 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerChecks {
    /// `syq(ε,ε) = I`
    pub syq_identity: bool,
    /// `syq(Q,ε)` total for every `Q: A -> 1` and `Q: A -> A`.
    pub totality: bool,
    pub regime: Regime,
}

impl PowerChecks {
    pub fn verified(&self) -> bool {
        self.syq_identity && self.totality
    }
}

/// The object of all L-valued characteristic functions on `A`.
#[derive(Debug, Clone)]
pub struct PowerWitness {
    pub base: Arc<Obj>,
    pub obj: Arc<Obj>,
    pub eps: Rel,
    pub checks: PowerChecks,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NePowerChecks {
    /// `syq(ϵ,ϵ) = I`
    pub syq_identity: bool,
    /// `dom(syq(Q,ϵ)) = dom(Q^T)` for every `Q: A -> 1` and `Q: A -> A`.
    pub dom_condition: bool,
    pub regime: Regime,
    /// For Boolean algebras the witness is also derived by splitting
    /// `dom(ε^T)`; records whether both routes produced the same matrix.
    pub split_route_agrees: Option<bool>,
}

impl NePowerChecks {
    pub fn verified(&self) -> bool {
        self.syq_identity && self.dom_condition && self.split_route_agrees != Some(false)
    }
}

/// Candidate non-empty power: functions whose join is top.
#[derive(Debug, Clone)]
pub struct NePowerWitness {
    pub base: Arc<Obj>,
    pub obj: Arc<Obj>,
    pub eps: Rel,
    pub checks: NePowerChecks,
}

/// Every function `carrier(A) -> L`, lexicographic in the value tuple with
/// the first carrier element most significant.
fn all_functions(alg: &HeytingAlgebra, n: usize) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    let mut cur = vec![Elem(0); n];
    loop {
        out.push(cur.clone());
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if cur[pos].index() + 1 < alg.len() {
                cur[pos] = Elem(cur[pos].0 + 1);
                break;
            }
            cur[pos] = Elem(0);
        }
    }
}

fn function_label(alg: &HeytingAlgebra, f: &[Elem]) -> String {
    let names: Vec<&str> = f.iter().map(|&e| alg.name(e)).collect();
    let sep = if names.iter().all(|s| s.chars().count() == 1) { "" } else { "," };
    names.join(sep)
}

fn power_size(alg: &HeytingAlgebra, a: &Obj) -> u128 {
    (alg.len() as u128).checked_pow(a.size() as u32).unwrap_or(u128::MAX)
}

fn membership(alg: &Arc<HeytingAlgebra>, a: &Arc<Obj>, name: String, funcs: &[Vec<Elem>]) -> Result<(Arc<Obj>, Rel), StructureError> {
    let carrier = funcs.iter().map(|f| function_label(alg, f)).collect();
    let obj = Obj::new(name, carrier)?;
    let eps = Rel::from_fn(alg, a, &obj, |x, f| funcs[f][x]);
    Ok((obj, eps))
}

/// Runs `check` on every `Q: A -> 1` and `Q: A -> A`, exhaustively when the
/// count is small, otherwise on a seeded sample of each sort.
fn for_every_q(
    alg: &Arc<HeytingAlgebra>,
    a: &Arc<Obj>,
    seed: u64,
    mut check: impl FnMut(&Rel) -> Result<bool, StructureError>,
) -> Result<(bool, Regime), StructureError> {
    let targets = [unit(), a.clone()];
    let counts: Vec<u128> = targets
        .iter()
        .map(|b| (alg.len() as u128).checked_pow((a.size() * b.size()) as u32).unwrap_or(u128::MAX))
        .collect();
    let total = counts.iter().fold(0u128, |s, c| s.saturating_add(*c));
    let mut ok = true;
    if total <= EXHAUSTIVE_LIMIT {
        for b in &targets {
            for f in all_functions(alg, a.size() * b.size()) {
                let q = Rel::from_entries(alg, a, b, f)?;
                ok &= check(&q)?;
            }
        }
        Ok((ok, Regime::Exhaustive { cases: total as u64 }))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for b in &targets {
            for _ in 0..DEFAULT_SAMPLES {
                let q = Rel::from_fn(alg, a, b, |_, _| Elem(rng.gen_range(0..alg.len()) as u8));
                ok &= check(&q)?;
            }
        }
        Ok((ok, Regime::Sampled { samples: DEFAULT_SAMPLES, seed }))
    }
}

impl PowerWitness {
    pub fn new(alg: &Arc<HeytingAlgebra>, a: &Arc<Obj>, bound: u64, seed: u64) -> Result<Self, StructureError> {
        let size = power_size(alg, a);
        if size > bound as u128 {
            return Err(StructureError::PowerTooLarge { object: a.name().to_string(), size, bound });
        }
        let funcs = all_functions(alg, a.size());
        let (obj, eps) = membership(alg, a, format!("P({})", a.name()), &funcs)?;
        let syq_identity = eps.syq(&eps)? == Rel::identity(alg, &obj);
        let (totality, regime) = for_every_q(alg, a, seed, |q| Ok(q.syq(&eps)?.is_total()))?;
        Ok(PowerWitness { base: a.clone(), obj, eps, checks: PowerChecks { syq_identity, totality, regime } })
    }

    /// Existential image `syq(R^T, ε)` of `R: B -> A`.
    pub fn existential_image(&self, r: &Rel) -> Result<Rel, StructureError> {
        Ok(r.converse().syq(&self.eps)?)
    }
}

impl NePowerWitness {
    pub(crate) fn new(w: &Witnesses, a: &Arc<Obj>) -> Result<Self, StructureError> {
        let alg = w.algebra();
        let size = power_size(alg, a);
        if size > w.power_bound() as u128 {
            return Err(StructureError::PowerTooLarge {
                object: a.name().to_string(),
                size,
                bound: w.power_bound(),
            });
        }
        let funcs: Vec<Vec<Elem>> = all_functions(alg, a.size())
            .into_iter()
            .filter(|f| f.iter().fold(alg.bot(), |acc, &x| alg.join(acc, x)) == alg.top())
            .collect();
        let (obj, eps) = membership(alg, a, format!("NP({})", a.name()), &funcs)?;
        let syq_identity = eps.syq(&eps)? == Rel::identity(alg, &obj);
        let (dom_condition, regime) =
            for_every_q(alg, a, w.sample_seed, |q| Ok(q.syq(&eps)?.dom() == q.converse().dom()))?;

        let split_route_agrees = if alg.is_boolean() {
            let p = w.power(a)?;
            let x = p.eps.converse().dom();
            let s = split(&x, &format!("NP({})", a.name()))?;
            let derived = p.eps.compose(&s.r.converse())?;
            Some(derived.entries() == eps.entries() && s.obj.size() == obj.size())
        } else {
            None
        };
        Ok(NePowerWitness {
            base: a.clone(),
            obj,
            eps,
            checks: NePowerChecks { syq_identity, dom_condition, regime, split_route_agrees },
        })
    }
}
