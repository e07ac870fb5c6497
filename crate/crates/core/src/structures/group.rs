use std::sync::Arc;

use serde::Serialize;

use crate::lattice::Elem;
use crate::relcore::{Obj, Rel};

use super::{unit, StructureError, Witnesses};

/// `(A, e, f, n)` with `e: 1 -> A`, `f: A×A -> A`, `n: A -> A`.
#[derive(Debug, Clone)]
pub struct GroupCandidate {
    pub a: Arc<Obj>,
    pub e: Rel,
    pub f: Rel,
    pub n: Rel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    /// `None` when the item was not checked.
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckItem {
    fn new(name: &str, holds: bool) -> Self {
        CheckItem { name: name.to_string(), holds: Some(holds), detail: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub object: String,
    pub items: Vec<CheckItem>,
}

impl GroupReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.holds != Some(false))
    }

    pub fn failures(&self) -> Vec<&str> {
        self.items.iter().filter(|i| i.holds == Some(false)).map(|i| i.name.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.items.iter().find(|i| i.name == name).and_then(|i| i.holds)
    }
}

/// Carrier size up to which the map-pair property is checked.
pub const MAP_PAIR_CARRIER_LIMIT: usize = 3;
const MAP_ENUMERATION_LIMIT: u128 = 65536;

/// The cyclic group of order `k` with its addition table.
pub fn cyclic_group(w: &Witnesses, k: usize) -> Result<GroupCandidate, StructureError> {
    let alg = w.algebra();
    let a = Obj::new(format!("Z{k}"), (0..k).map(|i| i.to_string()).collect())?;
    let aa = w.product(&a, &a)?;
    let crisp = |b: bool| if b { alg.top() } else { alg.bot() };
    let e = Rel::from_fn(alg, &unit(), &a, |_, j| crisp(j == 0));
    let f = Rel::from_fn(alg, &aa.obj, &a, |p, z| crisp((p / k + p % k) % k == z));
    let n = Rel::from_fn(alg, &a, &a, |x, y| crisp((k - x) % k == y));
    Ok(GroupCandidate { a, e, f, n })
}

fn maps_on(w: &Witnesses, a: &Arc<Obj>) -> Vec<Rel> {
    let alg = w.algebra();
    let n = a.size();
    let cells = (n * n) as u32;
    if (alg.len() as u128).pow(cells) <= MAP_ENUMERATION_LIMIT {
        let total = alg.len().pow(cells);
        (0..total)
            .map(|mut code| {
                Rel::from_fn(alg, a, a, |_, _| {
                    let e = Elem((code % alg.len()) as u8);
                    code /= alg.len();
                    e
                })
            })
            .filter(|r| r.is_map())
            .collect()
    } else {
        (0..n.pow(n as u32))
            .map(|code| {
                Rel::from_fn(alg, a, a, |x, y| {
                    if (code / n.pow(x as u32)) % n == y {
                        alg.top()
                    } else {
                        alg.bot()
                    }
                })
            })
            .collect()
    }
}

/// The definition only: `e` a point, `f` and `n` maps, and the four axioms.
pub fn is_abelian_group(w: &Witnesses, g: &GroupCandidate) -> Result<bool, StructureError> {
    let alg = w.algebra();
    let a = &g.a;
    let aa = w.product(a, a)?;
    if g.f.rows() != aa.obj.size() || !g.e.is_point() {
        return Ok(false);
    }
    let f = g.f.retyped(&aa.obj, a)?;
    if !f.is_map() || !g.n.is_map() {
        return Ok(false);
    }
    let id = Rel::identity(alg, a);
    let top_e = Rel::top(alg, a, &unit()).compose(&g.e)?;
    Ok(w.tensor(&id, &f)?.compose(&f)? == w.assoc(a, a, a)?.compose(&w.tensor(&f, &id)?)?.compose(&f)?
        && w.fork(&id, &top_e)?.compose(&f)? == id
        && w.fork(&id, &g.n)?.compose(&f)? == top_e
        && w.swap(a, a)?.compose(&f)? == f)
}

/// Checks the four group axioms and the derived properties.
pub fn group_check(w: &Witnesses, g: &GroupCandidate) -> Result<GroupReport, StructureError> {
    let alg = w.algebra();
    let a = &g.a;
    let one = unit();
    let aa = w.product(a, a)?;
    let f = g.f.retyped(&aa.obj, a)?;
    let (e, n) = (&g.e, &g.n);
    if **e.source() != *one || **e.target() != **a {
        return Err(StructureError::Rel(crate::relcore::RelError::TypeMismatch {
            op: "group neutral element",
            left: e.sort_string(),
            right: format!("1 -> {}", a.name()),
        }));
    }
    let n = n.retyped(a, a)?;
    let id = Rel::identity(alg, a);
    let top_e = Rel::top(alg, a, &one).compose(e)?;
    let i_f = w.tensor(&id, &f)?.compose(&f)?;
    let f_i = w.tensor(&f, &id)?.compose(&f)?;
    let assoc = w.assoc(a, a, a)?;

    let mut items = vec![
        CheckItem::new("e is a point", e.is_point()),
        CheckItem::new("f is a map", f.is_map()),
        CheckItem::new("n is a map", n.is_map()),
        CheckItem::new("associative", i_f == assoc.compose(&f_i)?),
        CheckItem::new("neutral", w.fork(&id, &top_e)?.compose(&f)? == id),
        CheckItem::new("inverse", w.fork(&id, &n)?.compose(&f)? == top_e),
        CheckItem::new("commutative", w.swap(a, a)?.compose(&f)? == f),
        CheckItem::new("props1", assoc.converse().compose(&i_f)? == f_i),
        CheckItem::new(
            "props2",
            w.fork(&top_e, &id)?.compose(&f)? == id && w.fork(&n, &id)?.compose(&f)? == top_e,
        ),
    ];
    if a.size() <= MAP_PAIR_CARRIER_LIMIT {
        let maps = maps_on(w, a);
        let mut ok = true;
        let mut detail = None;
        'outer: for gm in &maps {
            let gn = gm.compose(&n)?;
            for h in &maps {
                if w.fork(gm, h)?.compose(&f)? == top_e && gn != *h {
                    ok = false;
                    detail = Some(format!("g = {}, h = {}", gm.inline(), h.inline()));
                    break 'outer;
                }
            }
        }
        items.push(CheckItem { name: "props3".into(), holds: Some(ok), detail });
    } else {
        items.push(CheckItem {
            name: "props3".into(),
            holds: None,
            detail: Some(format!("carrier larger than {MAP_PAIR_CARRIER_LIMIT}")),
        });
    }
    items.push(CheckItem::new("props4", w.tensor(&n, &n)?.compose(&f)?.compose(&n)? == f));
    Ok(GroupReport { object: a.name().to_string(), items })
}
