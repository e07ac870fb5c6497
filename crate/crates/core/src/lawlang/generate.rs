use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::lattice::{Elem, HeytingAlgebra};
use crate::relcore::{Obj, Rel};

use super::ast::{Atom, Law, Pred, Term};

/// How a random value for one variable is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Gen {
    Uniform,
    Crisp,
    Map,
    Univalent,
    Total,
    Injective,
    Surjective,
    Bijection,
    PartialIdentity,
    StrictLinear,
    LinearOrdering,
    Complementable,
    ComplementOf(usize),
}

/// Picks a generator per variable from the assumptions that constrain that
/// variable alone. Assumptions are still evaluated on every sample.
pub(crate) fn plan(law: &Law) -> Vec<Gen> {
    let var_index = |t: &Term| match t {
        Term::Var(v) => law.vars.iter().position(|d| &d.name == v),
        _ => None,
    };
    let mut gens: Vec<Gen> = law.vars.iter().map(|v| if v.crisp { Gen::Crisp } else { Gen::Uniform }).collect();
    let rank = |g: Gen| match g {
        Gen::Uniform => 0,
        Gen::Crisp => 1,
        Gen::Complementable => 2,
        Gen::Univalent | Gen::Total | Gen::Injective | Gen::Surjective => 3,
        Gen::PartialIdentity => 4,
        Gen::Map => 5,
        Gen::StrictLinear | Gen::LinearOrdering => 6,
        Gen::Bijection => 7,
        Gen::ComplementOf(_) => 8,
    };
    for a in &law.assumptions {
        let Atom::Pred(p, args) = a else { continue };
        if *p == Pred::Complemented {
            if let (Some(i), Some(j)) = (var_index(&args[0]), var_index(&args[1])) {
                let (first, second) = (i.min(j), i.max(j));
                if first != second {
                    if rank(gens[first]) < rank(Gen::Complementable) {
                        gens[first] = Gen::Complementable;
                    }
                    gens[second] = Gen::ComplementOf(first);
                }
            }
            continue;
        }
        let Some(i) = var_index(&args[0]) else { continue };
        let g = match p {
            Pred::Map | Pred::Point => Gen::Map,
            Pred::Univalent => Gen::Univalent,
            Pred::Total => Gen::Total,
            Pred::Injective => Gen::Injective,
            Pred::Surjective => Gen::Surjective,
            Pred::Bijection => Gen::Bijection,
            Pred::PartialIdentity => Gen::PartialIdentity,
            Pred::LinearStrictOrder | Pred::StrictOrder => Gen::StrictLinear,
            Pred::Ordering => Gen::LinearOrdering,
            Pred::Crisp => Gen::Crisp,
            _ => continue,
        };
        if rank(g) > rank(gens[i]) {
            gens[i] = g;
        }
    }
    gens
}

fn random_elem<R: Rng>(alg: &HeytingAlgebra, rng: &mut R) -> Elem {
    Elem(rng.gen_range(0..alg.len()) as u8)
}

fn nonzero_elem<R: Rng>(alg: &HeytingAlgebra, rng: &mut R) -> Elem {
    let candidates: Vec<Elem> = alg.elements().filter(|&e| e != alg.bot()).collect();
    *candidates.choose(rng).unwrap_or(&alg.top())
}

fn crisp(alg: &HeytingAlgebra, b: bool) -> Elem {
    if b {
        alg.top()
    } else {
        alg.bot()
    }
}

/// Rows with at most one non-bottom entry; `total` forces a top entry.
fn functional<R: Rng>(alg: &Arc<HeytingAlgebra>, s: &Arc<Obj>, t: &Arc<Obj>, rng: &mut R, total: bool, fuzzy: bool) -> Rel {
    let m = t.size();
    let choice: Vec<Option<(usize, Elem)>> = (0..s.size())
        .map(|_| {
            if !total && rng.gen_range(0..=m) == m {
                None
            } else {
                let v = if fuzzy && !total { nonzero_elem(alg, rng) } else { alg.top() };
                Some((rng.gen_range(0..m), v))
            }
        })
        .collect();
    Rel::from_fn(alg, s, t, |i, j| match choice[i] {
        Some((c, v)) if c == j => v,
        _ => alg.bot(),
    })
}

pub(crate) fn generate<R: Rng>(
    g: Gen,
    alg: &Arc<HeytingAlgebra>,
    s: &Arc<Obj>,
    t: &Arc<Obj>,
    rng: &mut R,
    earlier: &[Rel],
) -> Rel {
    let square = s.size() == t.size();
    match g {
        Gen::Uniform => Rel::from_fn(alg, s, t, |_, _| random_elem(alg, rng)),
        Gen::Crisp => Rel::from_fn(alg, s, t, |_, _| crisp(alg, rng.gen_bool(0.5))),
        Gen::Map => functional(alg, s, t, rng, true, false),
        Gen::Univalent => functional(alg, s, t, rng, false, true),
        Gen::Injective => functional(alg, t, s, rng, false, true).converse(),
        Gen::Surjective => functional(alg, t, s, rng, true, false).converse().join(&Rel::from_fn(alg, s, t, |_, _| {
            if rng.gen_bool(0.25) {
                random_elem(alg, rng)
            } else {
                alg.bot()
            }
        }))
        .expect("same sort"),
        Gen::Total => functional(alg, s, t, rng, true, false)
            .join(&Rel::from_fn(alg, s, t, |_, _| if rng.gen_bool(0.25) { random_elem(alg, rng) } else { alg.bot() }))
            .expect("same sort"),
        Gen::Bijection if square => {
            let mut p: Vec<usize> = (0..t.size()).collect();
            p.shuffle(rng);
            Rel::from_fn(alg, s, t, |i, j| crisp(alg, p[i] == j))
        }
        Gen::PartialIdentity if square => Rel::from_fn(alg, s, t, |i, j| if i == j { random_elem(alg, rng) } else { alg.bot() }),
        Gen::StrictLinear | Gen::LinearOrdering if square => {
            let mut p: Vec<usize> = (0..s.size()).collect();
            p.shuffle(rng);
            let refl = g == Gen::LinearOrdering;
            Rel::from_fn(alg, s, t, |i, j| crisp(alg, p[i] < p[j] || (refl && i == j)))
        }
        Gen::Complementable => {
            let c: Vec<Elem> = alg.elements().filter(|&e| alg.complement(e).is_some()).collect();
            Rel::from_fn(alg, s, t, |_, _| *c.choose(rng).expect("bot is complemented"))
        }
        Gen::ComplementOf(k) => match earlier.get(k) {
            Some(x) if x.source() == s && x.target() == t => {
                Rel::from_fn(alg, s, t, |i, j| alg.complement(x.get(i, j)).unwrap_or_else(|| alg.neg(x.get(i, j))))
            }
            _ => Rel::from_fn(alg, s, t, |_, _| random_elem(alg, rng)),
        },
        _ => Rel::from_fn(alg, s, t, |_, _| random_elem(alg, rng)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lawlang::parse_law;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn plans_follow_assumptions() {
        let law = parse_law(
            "law x ; var f : A -> B ; var Q, R : A -> A ; var X : A -> B crisp ; var C : A -> A \
             ; assume map(f) ; assume complemented(Q,R) ; assume linear_strict_order(C) ; conclude f = f",
        )
        .unwrap();
        assert_eq!(
            plan(&law),
            vec![Gen::Map, Gen::Complementable, Gen::ComplementOf(1), Gen::Crisp, Gen::StrictLinear]
        );
    }

    #[test]
    fn generated_values_satisfy_their_shape() {
        let alg = Arc::new(HeytingAlgebra::chain(3).unwrap());
        let a = Obj::sized("A", 3).unwrap();
        let b = Obj::sized("B", 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            assert!(generate(Gen::Map, &alg, &a, &b, &mut rng, &[]).is_map());
            assert!(generate(Gen::Univalent, &alg, &a, &b, &mut rng, &[]).is_univalent());
            assert!(generate(Gen::Total, &alg, &a, &b, &mut rng, &[]).is_total());
            assert!(generate(Gen::Injective, &alg, &b, &a, &mut rng, &[]).is_injective());
            assert!(generate(Gen::Surjective, &alg, &a, &b, &mut rng, &[]).is_surjective());
            assert!(generate(Gen::Bijection, &alg, &a, &a, &mut rng, &[]).is_bijection());
            assert!(generate(Gen::PartialIdentity, &alg, &a, &a, &mut rng, &[]).is_partial_identity().unwrap());
            assert!(generate(Gen::StrictLinear, &alg, &a, &a, &mut rng, &[]).is_linear_strict_order().unwrap());
            assert!(generate(Gen::LinearOrdering, &alg, &a, &a, &mut rng, &[]).is_ordering().unwrap());
            let q = generate(Gen::Complementable, &alg, &a, &b, &mut rng, &[]);
            let r = generate(Gen::ComplementOf(0), &alg, &a, &b, &mut rng, std::slice::from_ref(&q));
            assert!(q.is_complemented_pair(&r).unwrap());
        }
    }
}
