//! Brute-force oracles shared by the integration and acceptance targets.
//!
//! Each oracle recomputes an operation from its defining universal property
//! by scanning every candidate matrix; none of them calls the operation it
//! checks.

#![allow(dead_code)]

use std::sync::Arc;

use relcat::lattice::{Elem, HeytingAlgebra};
use relcat::relcore::{Obj, Rel};

/// Every relation `a -> b`, entries counted in mixed radix.
pub fn all_rels(alg: &Arc<HeytingAlgebra>, a: &Arc<Obj>, b: &Arc<Obj>) -> Vec<Rel> {
    let cells = a.size() * b.size();
    let k = alg.len();
    let total = k.pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let mut entries = vec![Elem(0); cells];
            for e in entries.iter_mut().rev() {
                *e = Elem((code % k) as u8);
                code /= k;
            }
            Rel::from_entries(alg, a, b, entries).unwrap()
        })
        .collect()
}

fn entrywise_leq(x: &Rel, y: &Rel) -> bool {
    let alg = x.algebra();
    x.entries().iter().zip(y.entries()).all(|(&p, &q)| alg.leq(p, q))
}

/// Composition recomputed as a sup of meets.
pub fn compose(x: &Rel, y: &Rel) -> Rel {
    let alg = x.algebra().clone();
    Rel::from_fn(&alg, x.source(), y.target(), |i, j| {
        (0..x.cols()).fold(alg.bot(), |acc, l| alg.join(acc, alg.meet(x.get(i, l), y.get(l, j))))
    })
}

pub fn converse(x: &Rel) -> Rel {
    Rel::from_fn(x.algebra(), x.target(), x.source(), |i, j| x.get(j, i))
}

/// The join of every candidate satisfying `ok`, and a check that it satisfies `ok` itself.
fn greatest(cands: Vec<Rel>, ok: impl Fn(&Rel) -> bool) -> Rel {
    let alg = cands[0].algebra().clone();
    let sat: Vec<&Rel> = cands.iter().filter(|c| ok(c)).collect();
    let first = sat.first().expect("bottom always qualifies");
    let join = Rel::from_fn(&alg, first.source(), first.target(), |i, j| {
        sat.iter().fold(alg.bot(), |acc, c| alg.join(acc, c.get(i, j)))
    });
    assert!(ok(&join), "the candidate set has no greatest element");
    join
}

/// `lres(Q, R)` is the greatest `Y` with `Q;Y <= R`.
pub fn lres(q: &Rel, r: &Rel) -> Rel {
    let cands = all_rels(q.algebra(), q.target(), r.target());
    greatest(cands, |y| entrywise_leq(&compose(q, y), r))
}

/// `rres(R, S)` is the greatest `Y` with `Y;S <= R`.
pub fn rres(r: &Rel, s: &Rel) -> Rel {
    let cands = all_rels(r.algebra(), r.source(), s.source());
    greatest(cands, |y| entrywise_leq(&compose(y, s), r))
}

/// `syq(Q, R)` is the greatest `Y` with `Q;Y <= R` and `Y;R^T <= Q^T`.
pub fn syq(q: &Rel, r: &Rel) -> Rel {
    let (qt, rt) = (converse(q), converse(r));
    let cands = all_rels(q.algebra(), q.target(), r.target());
    greatest(cands, |y| entrywise_leq(&compose(q, y), r) && entrywise_leq(&compose(y, &rt), &qt))
}

/// Least upper bounds over crisp data, by sets: `lub_E(X)(b, a)` holds when
/// `a` bounds the image of `b` under `X` from above and lies below every
/// other such bound. `E` orders `a` below `a'` when `E(a, a')` is top.
pub fn lub_crisp(e: &Rel, x: &Rel) -> Rel {
    let alg = e.algebra().clone();
    let n = e.rows();
    let top = alg.top();
    let below = |p: usize, q: usize| e.get(p, q) == top;
    let is_ub = |b: usize, a: usize| (0..n).all(|p| x.get(b, p) != top || below(p, a));
    Rel::from_fn(&alg, x.source(), e.source(), |b, a| {
        let least = is_ub(b, a) && (0..n).all(|a2| !is_ub(b, a2) || below(a, a2));
        if least { top } else { alg.bot() }
    })
}

/// Every crisp partial order on `a`.
pub fn crisp_orders(alg: &Arc<HeytingAlgebra>, a: &Arc<Obj>) -> Vec<Rel> {
    let n = a.size();
    (0u32..1 << (n * n))
        .filter_map(|bits| {
            let on = |i: usize, j: usize| bits >> (i * n + j) & 1 == 1;
            let refl = (0..n).all(|i| on(i, i));
            let anti = (0..n).all(|i| (0..n).all(|j| i == j || !(on(i, j) && on(j, i))));
            let trans = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(on(i, j) && on(j, k)) || on(i, k))));
            (refl && anti && trans)
                .then(|| Rel::from_fn(alg, a, a, |i, j| if on(i, j) { alg.top() } else { alg.bot() }))
        })
        .collect()
}

/// Every linear order `i <= j` on `n` points, as `perm[i]`-ranked matrices.
pub fn linear_orders(alg: &Arc<HeytingAlgebra>, a: &Arc<Obj>) -> Vec<Rel> {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        perms(n - 1)
            .into_iter()
            .flat_map(|p| {
                (0..n).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    q
                })
            })
            .collect()
    }
    perms(a.size())
        .into_iter()
        .map(|rank| Rel::from_fn(alg, a, a, |i, j| if rank[i] <= rank[j] { alg.top() } else { alg.bot() }))
        .collect()
}
