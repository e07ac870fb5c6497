use std::sync::Arc;

use proptest::prelude::*;
use relcat::lattice::{Elem, HeytingAlgebra};
use relcat::lawlang::{
    catalog, check_law_with, parse_formula, parse_law, parse_term, replay, BinOp, CheckOptions, Const, Sort, Strategy as CheckStrategy,
    Term, UnOp,
};
use relcat::model::{Model, CHAIN3_MODEL_JSON};
use relcat::relcore::{Obj, Rel};

const BUILDERS: [&str; 4] = ["chain:2", "chain:3", "prod(bool,bool)", "prod(chain:3,bool)"];

fn algebra(i: usize) -> Arc<HeytingAlgebra> {
    Arc::new(HeytingAlgebra::from_builder(BUILDERS[i]).unwrap())
}

fn objs() -> [Arc<Obj>; 3] {
    [Obj::sized("A", 1).unwrap(), Obj::sized("B", 2).unwrap(), Obj::sized("C", 3).unwrap()]
}

/// Raw material for relations: an algebra, three carrier choices and entry seeds.
#[derive(Debug, Clone)]
struct World {
    alg: Arc<HeytingAlgebra>,
    sorts: [Arc<Obj>; 3],
    seeds: Vec<u8>,
}

impl World {
    fn rel(&self, slot: usize, s: usize, t: usize) -> Rel {
        let (a, b) = (&self.sorts[s], &self.sorts[t]);
        let k = self.alg.len();
        Rel::from_fn(&self.alg, a, b, |i, j| {
            let seed = self.seeds[(slot * 9 + i * 3 + j) % self.seeds.len()];
            Elem(seed % k as u8)
        })
    }
}

fn world() -> impl Strategy<Value = World> {
    (0..BUILDERS.len(), [0usize..3, 0usize..3, 0usize..3], prop::collection::vec(any::<u8>(), 64)).prop_map(
        |(i, idx, seeds)| {
            let os = objs();
            World { alg: algebra(i), sorts: idx.map(|j| os[j].clone()), seeds }
        },
    )
}

fn leq(x: &Rel, y: &Rel) -> bool {
    x.leq(y).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn residual_adjunctions(w in world()) {
        // Q: 0->1, R: 0->2, X: 1->2
        let (q, r, x) = (w.rel(0, 0, 1), w.rel(1, 0, 2), w.rel(2, 1, 2));
        prop_assert_eq!(leq(&q.compose(&x).unwrap(), &r), leq(&x, &q.lres(&r).unwrap()));
        // X: 0->1, R: 1->2, S: 0->2
        let (x, r, s) = (w.rel(3, 0, 1), w.rel(4, 1, 2), w.rel(5, 0, 2));
        prop_assert_eq!(leq(&x.compose(&r).unwrap(), &s), leq(&x, &s.rres(&r).unwrap()));
    }

    #[test]
    fn rres_agrees_with_the_converse_route(w in world()) {
        let (s, r) = (w.rel(0, 0, 2), w.rel(1, 1, 2));
        let direct = s.rres(&r).unwrap();
        let via = r.converse().lres(&s.converse()).unwrap().converse();
        prop_assert_eq!(direct, via);
    }

    #[test]
    fn schroeder_equivalences(w in world()) {
        let (q, r, s) = (w.rel(0, 0, 1), w.rel(1, 1, 2), w.rel(2, 0, 2));
        let a = leq(&q.compose(&r).unwrap(), &s.star());
        let b = leq(&q.converse().compose(&s).unwrap(), &r.star());
        let c = leq(&s.compose(&r.converse()).unwrap(), &q.star());
        prop_assert_eq!(a, b);
        prop_assert_eq!(b, c);
    }

    #[test]
    fn residuals_of_negations(w in world()) {
        let (q, r, s) = (w.rel(0, 0, 1), w.rel(1, 0, 2), w.rel(2, 1, 2));
        prop_assert_eq!(q.converse().star(), q.star().converse());
        // R: 0->2, S: 1->2
        let lhs = r.star().rres(&s).unwrap();
        let rhs = r.star().star().compose(&s.converse()).unwrap().star();
        prop_assert_eq!(lhs, rhs);
        let lhs = q.lres(&r.star()).unwrap();
        let rhs = q.converse().compose(&r.star().star()).unwrap().star();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn star_laws(w in world()) {
        let (q, r) = (w.rel(0, 0, 1), w.rel(1, 0, 1));
        prop_assert_eq!(q.star().star().star(), q.star());
        prop_assert_eq!(q.join(&r).unwrap().star(), q.star().meet(&r.star()).unwrap());
        prop_assert_eq!(q.meet(&r).unwrap().star().star(), q.star().star().meet(&r.star().star()).unwrap());
    }

    #[test]
    fn composition_is_a_category_with_modular_law(w in world()) {
        let (q, r, s) = (w.rel(0, 0, 1), w.rel(1, 1, 2), w.rel(2, 2, 0));
        let assoc_l = q.compose(&r).unwrap().compose(&s).unwrap();
        let assoc_r = q.compose(&r.compose(&s).unwrap()).unwrap();
        prop_assert_eq!(assoc_l, assoc_r);
        let alg = &w.alg;
        prop_assert_eq!(Rel::identity(alg, &w.sorts[0]).compose(&q).unwrap(), q.clone());
        prop_assert_eq!(q.compose(&Rel::identity(alg, &w.sorts[1])).unwrap(), q.clone());
        let t = w.rel(3, 0, 2);
        let lhs = q.compose(&r).unwrap().meet(&t).unwrap();
        let rhs = q.compose(&r.meet(&q.converse().compose(&t).unwrap()).unwrap()).unwrap();
        prop_assert!(leq(&lhs, &rhs));
    }

    #[test]
    fn domain_restricts_nothing(w in world()) {
        let r = w.rel(0, 0, 1);
        prop_assert_eq!(r.dom().compose(&r).unwrap(), r.clone());
        prop_assert!(r.dom().is_partial_identity().unwrap());
    }

    #[test]
    fn partial_identities_compose_as_meets(w in world()) {
        let alg = &w.alg;
        let id = Rel::identity(alg, &w.sorts[0]);
        let (i, j) = (w.rel(0, 0, 0).meet(&id).unwrap(), w.rel(1, 0, 0).meet(&id).unwrap());
        prop_assert_eq!(i.converse(), i.clone());
        prop_assert_eq!(i.compose(&j).unwrap(), i.meet(&j).unwrap());
    }

    #[test]
    fn residual_cancellation(w in world()) {
        let (q, r) = (w.rel(0, 0, 1), w.rel(1, 0, 2));
        prop_assert!(leq(&q.compose(&q.lres(&r).unwrap()).unwrap(), &r));
        let s = w.rel(2, 1, 2);
        prop_assert!(leq(&r.rres(&s).unwrap().compose(&s).unwrap(), &r));
        prop_assert_eq!(q.syq(&r).unwrap().converse(), r.syq(&q).unwrap());
    }

    #[test]
    fn lattice_residuation(i in 0..BUILDERS.len()) {
        let alg = algebra(i);
        for x in alg.elements() {
            prop_assert_eq!(alg.imp(x, x), alg.top());
            prop_assert_eq!(alg.imp(alg.top(), x), x);
            for y in alg.elements() {
                prop_assert!(alg.leq(alg.meet(x, alg.imp(x, y)), y));
                for z in alg.elements() {
                    prop_assert_eq!(alg.leq(alg.meet(x, z), y), alg.leq(z, alg.imp(x, y)));
                }
            }
        }
    }
}

fn sort() -> impl Strategy<Value = Sort> {
    let leaf = prop_oneof![Just(Sort::named("A")), Just(Sort::named("B")), Just(Sort::Unit)];
    leaf.prop_recursive(2, 6, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Sort::Prod(Box::new(a), Box::new(b))),
            inner.clone().prop_map(|a| Sort::Power(Box::new(a))),
            inner.prop_map(|a| Sort::NePower(Box::new(a))),
        ]
    })
}

fn constant() -> impl Strategy<Value = Const> {
    prop_oneof![
        sort().prop_map(Const::Id),
        (sort(), sort()).prop_map(|(a, b)| Const::Top(a, b)),
        (sort(), sort()).prop_map(|(a, b)| Const::Pi(a, b)),
        sort().prop_map(Const::Eps),
        (sort(), sort(), sort()).prop_map(|(a, b, c)| Const::Assoc(a, b, c)),
    ]
}

const BINOPS: [BinOp; 14] = [
    BinOp::Comp,
    BinOp::Meet,
    BinOp::Join,
    BinOp::Impl,
    BinOp::LRes,
    BinOp::RRes,
    BinOp::Syq,
    BinOp::Ubd,
    BinOp::Lbd,
    BinOp::Lub,
    BinOp::Glb,
    BinOp::Fork,
    BinOp::Pair,
    BinOp::Tensor,
];

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["Q", "R", "X", "E"]).prop_map(|v| Term::Var(v.to_string())),
        constant().prop_map(Term::Const),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (prop::sample::select(vec![UnOp::Conv, UnOp::Star, UnOp::Dom]), inner.clone())
                .prop_map(|(op, t)| Term::Un(op, Box::new(t))),
            (prop::sample::select(BINOPS.to_vec()), inner.clone(), inner)
                .prop_map(|(op, l, r)| Term::Bin(op, Box::new(l), Box::new(r))),
        ]
    })
}

proptest! {
    #[test]
    fn terms_round_trip(t in term()) {
        let printed = t.to_string();
        let parsed = parse_term(&printed).unwrap();
        prop_assert_eq!(&parsed, &t);
        prop_assert_eq!(parsed.to_string(), printed);
    }

    #[test]
    fn formulas_round_trip(l in term(), r in term(), a in term(), b in term()) {
        let text = format!("{l} <= {r} and {a} = {b} => {r} = {l} <=> {b} <= {a}");
        let f = parse_formula(&text).unwrap();
        let printed = f.to_string();
        prop_assert_eq!(parse_formula(&printed).unwrap(), f);
    }

    #[test]
    fn random_violations_replay(seed in any::<u64>()) {
        let law = relcat::lawlang::catalog_entry("downClosedNoStar").unwrap().law();
        let model = Model::from_json(CHAIN3_MODEL_JSON).unwrap();
        let opts = CheckOptions::new(CheckStrategy::Random { samples: 200, seed });
        let report = check_law_with(&law, &model, &opts).unwrap();
        for v in &report.violations {
            prop_assert!(replay(&law, &model, v).unwrap());
        }
        prop_assert_eq!(&report, &check_law_with(&law, &model, &opts).unwrap());
        prop_assert!(!report.vacuous || report.violations_total == 0);
    }
}

#[test]
fn catalog_laws_print_idempotently() {
    for e in catalog() {
        let once = e.law().to_string();
        let twice = parse_law(&once).unwrap().to_string();
        assert_eq!(once, twice, "{}", e.id);
    }
}
