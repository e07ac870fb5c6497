mod common;

use std::sync::Arc;

use relcat::lattice::HeytingAlgebra;
use relcat::relcore::{Obj, Rel};

fn objs() -> Vec<Arc<Obj>> {
    vec![Obj::sized("P", 1).unwrap(), Obj::sized("Q", 2).unwrap()]
}

#[test]
fn residuals_and_syq_match_on_boolean_carriers() {
    let alg = Arc::new(HeytingAlgebra::boolean());
    let os = objs();
    let mut checked = 0;
    for a in &os {
        for b in &os {
            for c in &os {
                let qs = common::all_rels(&alg, a, b);
                let rs = common::all_rels(&alg, a, c);
                for q in &qs {
                    for r in &rs {
                        assert_eq!(q.lres(r).unwrap(), common::lres(q, r), "lres {q} / {r}");
                        assert_eq!(q.syq(r).unwrap(), common::syq(q, r), "syq {q} / {r}");
                    }
                }
                let ss = common::all_rels(&alg, c, b);
                for r in &common::all_rels(&alg, a, b) {
                    for s in &ss {
                        assert_eq!(r.rres(s).unwrap(), common::rres(r, s), "rres {r} / {s}");
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn residuals_match_on_the_three_chain() {
    let alg = Arc::new(HeytingAlgebra::chain(3).unwrap());
    let os = objs();
    let (p, q2) = (&os[0], &os[1]);
    for q in &common::all_rels(&alg, q2, p) {
        for r in &common::all_rels(&alg, q2, q2) {
            assert_eq!(q.lres(r).unwrap(), common::lres(q, r));
            assert_eq!(q.syq(r).unwrap(), common::syq(q, r));
        }
    }
    for r in &common::all_rels(&alg, p, q2) {
        for s in &common::all_rels(&alg, q2, q2) {
            assert_eq!(r.rres(s).unwrap(), common::rres(r, s));
        }
    }
}

#[test]
fn lub_matches_set_semantics() {
    let alg = Arc::new(HeytingAlgebra::boolean());
    for n in 1..=3 {
        let a = Obj::sized("A", n).unwrap();
        for m in 1..=2 {
            let b = Obj::sized("B", m).unwrap();
            for e in common::crisp_orders(&alg, &a) {
                for x in common::all_rels(&alg, &b, &a) {
                    assert_eq!(Rel::lub(&e, &x).unwrap(), common::lub_crisp(&e, &x), "E={e} X={x}");
                }
            }
        }
    }
}

#[test]
fn order_enumerators_count_correctly() {
    let alg = Arc::new(HeytingAlgebra::boolean());
    let sizes = [(1, 1, 1), (2, 3, 2), (3, 19, 6)];
    for (n, posets, linear) in sizes {
        let a = Obj::sized("A", n).unwrap();
        assert_eq!(common::crisp_orders(&alg, &a).len(), posets);
        assert_eq!(common::linear_orders(&alg, &a).len(), linear);
    }
}
