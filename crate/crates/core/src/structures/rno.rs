use std::sync::Arc;

use serde::Serialize;

use crate::relcore::{Obj, Rel, RelError};

use super::{unit, CheckItem, GroupCandidate, StructureError, Witnesses};

/// How `Z` in `neg = π^T;(add;Z^T ⊓ ρ)` is read.
pub const Z_DEFINITION: &str = "Z := top[R,1];zero (the constant-zero map)";

/// `(R, i, C, add)` with `i: 1 -> R`, `C: R -> R`, `add: R×R -> R`.
#[derive(Debug, Clone)]
pub struct RnoCandidate {
    pub r: Arc<Obj>,
    pub i: Rel,
    pub c: Rel,
    pub add: Rel,
}

/// Constructions derived from a candidate once `add` is a map and `i` a point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Derived {
    pub zero: Rel,
    pub z: Rel,
    pub z_definition: &'static str,
    pub neg: Rel,
    pub succ: Rel,
    pub prec: Rel,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RnoReport {
    pub object: String,
    pub axioms: Vec<CheckItem>,
    /// Whether the non-empty power used by axiom 4 passed its own checks.
    pub nepower_verified: Option<bool>,
    pub derived: Option<Derived>,
    /// Statements proved under all ten axioms; evaluated here regardless, so
    /// they only carry weight when `all_axioms_hold` is true.
    pub conditional: Vec<CheckItem>,
    pub all_axioms_hold: bool,
}

impl RnoReport {
    pub fn axiom(&self, k: usize) -> Option<bool> {
        self.axioms.get(k).and_then(|i| i.holds)
    }

    pub fn failed_axioms(&self) -> Vec<usize> {
        (0..self.axioms.len()).filter(|&k| self.axiom(k) == Some(false)).collect()
    }
}

fn item(name: &str, holds: bool) -> CheckItem {
    CheckItem { name: name.to_string(), holds: Some(holds), detail: None }
}

fn all_top(r: &Rel) -> bool {
    r.entries().iter().all(|&e| e == r.algebra().top())
}

fn axiom4(w: &Witnesses, r: &Arc<Obj>, c: &Rel) -> Result<(CheckItem, Option<bool>), StructureError> {
    let np = match w.nepower(r) {
        Ok(np) => np,
        Err(StructureError::PowerTooLarge { size, bound, .. }) => {
            return Ok((
                CheckItem {
                    name: "axiom4".into(),
                    holds: None,
                    detail: Some(format!("non-empty power too large ({size} > {bound})")),
                },
                None,
            ))
        }
        Err(e) => return Err(e),
    };
    let eps = &np.eps;
    let ci = c.join(&Rel::identity(w.algebra(), r))?;
    let lhs = eps.lres(&c.rres(&eps.converse())?)?;
    let rhs = eps.lres(&ci)?.compose(&eps.lres(&ci.converse())?.converse())?;
    let verified = np.checks.verified();
    let mut it = item("axiom4", lhs.leq(&rhs)?);
    if !verified {
        it.detail = Some("evaluated over an unverified non-empty power candidate".into());
    }
    Ok((it, Some(verified)))
}

/// Whether all ten axioms hold, stopping at the first failure. Axiom 4 is
/// evaluated last and counts as failed when its power is unavailable.
pub fn rno_axioms_hold(w: &Witnesses, cand: &RnoCandidate) -> Result<bool, StructureError> {
    let alg = w.algebra();
    let r = &cand.r;
    let i = &cand.i;
    if !i.is_point() || !cand.add.is_map() {
        return Ok(false);
    }
    let rr = w.product(r, r)?;
    let add = cand.add.retyped(&rr.obj, r)?;
    let c = cand.c.retyped(r, r)?;
    let id = Rel::identity(alg, r);
    let ct = c.converse();
    if !all_top(&id.join(&c)?.join(&ct)?)
        || c.meet(&ct)?.entries().iter().any(|&e| e != alg.bot())
        || !c.is_dense()?
        || !all_top(&rr.pi.converse().compose(&add)?)
        || !i.leq(&i.compose(&w.fork(&id, &id)?)?.compose(&add)?.compose(&ct)?)?
    {
        return Ok(false);
    }
    let lhs7 = add.compose(&c)?.compose(&add.converse())?;
    let rhs7 = rr
        .pi
        .compose(&c)?
        .compose(&rr.pi.converse())?
        .join(&rr.rho.compose(&c)?.compose(&rr.rho.converse())?)?;
    if !lhs7.leq(&rhs7)? {
        return Ok(false);
    }
    let lhs5 = w.tensor(&id, &add)?.compose(&add)?;
    let rhs5 = w
        .tensor(&id, &w.swap(r, r)?)?
        .compose(&w.assoc(r, r, r)?)?
        .compose(&w.tensor(&add, &id)?)?
        .compose(&add)?;
    if lhs5 != rhs5 {
        return Ok(false);
    }
    Ok(axiom4(w, r, &c)?.0.holds == Some(true))
}

/// Checks the ten axioms and, where they make sense, the derived statements.
pub fn rno_check(w: &Witnesses, cand: &RnoCandidate) -> Result<RnoReport, StructureError> {
    let alg = w.algebra();
    let r = &cand.r;
    let one = unit();
    let rr = w.product(r, r)?;
    let add = cand.add.retyped(&rr.obj, r)?;
    let c = cand.c.retyped(r, r)?;
    let i = &cand.i;
    if **i.source() != *one || **i.target() != **r {
        return Err(StructureError::Rel(RelError::TypeMismatch {
            op: "rno point",
            left: i.sort_string(),
            right: format!("1 -> {}", r.name()),
        }));
    }
    let id = Rel::identity(alg, r);
    let ct = c.converse();
    let (pi, rho) = (&rr.pi, &rr.rho);

    let mut axioms = Vec::with_capacity(10);
    axioms.push(item("axiom0", add.is_map()));
    axioms.push(item("axiom1", all_top(&id.join(&c)?.join(&ct)?)));
    axioms.push(item("axiom2", c.meet(&ct)?.entries().iter().all(|&e| e == alg.bot())));
    axioms.push(item("axiom3", c.is_dense()?));
    let (a4, nepower_verified) = axiom4(w, r, &c)?;
    axioms.push(a4);
    let lhs5 = w.tensor(&id, &add)?.compose(&add)?;
    let rhs5 = w
        .tensor(&id, &w.swap(r, r)?)?
        .compose(&w.assoc(r, r, r)?)?
        .compose(&w.tensor(&add, &id)?)?
        .compose(&add)?;
    axioms.push(item("axiom5", lhs5 == rhs5));
    axioms.push(item("axiom6", all_top(&pi.converse().compose(&add)?)));
    let lhs7 = add.compose(&c)?.compose(&add.converse())?;
    let rhs7 = pi.compose(&c)?.compose(&pi.converse())?.join(&rho.compose(&c)?.compose(&rho.converse())?)?;
    axioms.push(item("axiom7", lhs7.leq(&rhs7)?));
    axioms.push(item("axiom8", i.is_point()));
    let rhs9 = i.compose(&w.fork(&id, &id)?)?.compose(&add)?.compose(&ct)?;
    axioms.push(item("axiom9", i.leq(&rhs9)?));
    let all_axioms_hold = axioms.iter().all(|a| a.holds == Some(true));

    let mut derived = None;
    let mut conditional = Vec::new();
    if add.is_map() && i.is_point() {
        let top_1r = Rel::top(alg, &one, r);
        let top_r1 = Rel::top(alg, r, &one);
        let zero = top_1r.compose(&add.converse().meet(&pi.converse())?)?.compose(rho)?;
        let z = top_r1.compose(&zero)?;
        let neg = pi.converse().compose(&add.compose(&z.converse())?.meet(rho)?)?;
        let ti = top_r1.compose(i)?;
        let succ = w.fork(&id, &ti)?.compose(&add)?;
        let prec = w.fork(&id, &ti.compose(&neg)?)?.compose(&add)?;

        let group = GroupCandidate { a: r.clone(), e: zero.clone(), f: add.clone(), n: neg.clone() };
        let g = super::group_check(w, &group)?;
        let mut add_group = item("addGroup", g.all_pass());
        if !g.all_pass() {
            add_group.detail = Some(format!("failed: {}", g.failures().join(", ")));
        }
        conditional.push(add_group);
        conditional.push(item("cLinearDense", c.is_linear_strict_order()? && c.is_dense()?));
        let add_c = add.compose(&c)?;
        conditional.push(item(
            "addMono1",
            w.tensor(&id, &c)?.compose(&add)?.leq(&add_c)? && w.tensor(&c, &id)?.compose(&add)?.leq(&add_c)?,
        ));
        conditional.push(item("addMono2", w.tensor(&c, &c)?.compose(&add)?.leq(&add_c)?));
        let e = id.join(&c)?;
        conditional.push(item("addMono3", w.tensor(&e, &e)?.compose(&add)?.leq(&add.compose(&e)?)?));
        conditional.push(item(
            "shiftBijective",
            succ.is_bijection() && c.compose(&succ)?.leq(&succ.compose(&c)?)? && succ.converse() == prec,
        ));
        conditional.push(item("props1", succ.compose(&neg)? == neg.compose(&prec)?));
        conditional.push(item("props2", zero.leq(&i.compose(&ct)?)?));
        conditional.push(item("props3", succ.leq(&c)? && prec.leq(&ct)?));
        conditional.push(item("props4", c.is_total() && c.is_surjective()));
        derived = Some(Derived { zero, z, z_definition: Z_DEFINITION, neg, succ, prec });
    }
    Ok(RnoReport {
        object: r.name().to_string(),
        axioms,
        nepower_verified,
        derived,
        conditional,
        all_axioms_hold,
    })
}
