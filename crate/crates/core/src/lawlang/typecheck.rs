use std::collections::BTreeSet;

use indexmap::IndexMap;

use super::ast::{Atom, BinOp, Const, Formula, Law, Pred, Term, UnOp};
use super::{LawError, Sort};

/// Declared relations and definitions, plus the known sort symbols.
#[derive(Debug, Clone, Default)]
pub struct Scope {
    pub vars: IndexMap<String, (Sort, Sort)>,
    pub defs: IndexMap<String, Term>,
    /// `None` admits every sort symbol.
    pub sorts: Option<BTreeSet<String>>,
}

pub type Typing = (Sort, Sort);

fn show(t: &Typing) -> String {
    format!("{} -> {}", t.0, t.1)
}

fn mismatch<T>(op: &str, l: &Typing, r: &Typing) -> Result<T, LawError> {
    Err(LawError::SortMismatch { op: op.to_string(), left: show(l), right: show(r) })
}

fn prod(a: &Sort, b: &Sort) -> Sort {
    Sort::prod(a.clone(), b.clone())
}

impl Scope {
    pub fn for_law(law: &Law) -> Result<Scope, LawError> {
        let mut scope = Scope::default();
        for v in &law.vars {
            scope.vars.insert(v.name.clone(), (v.source.clone(), v.target.clone()));
        }
        for d in &law.defs {
            typecheck_term(&d.body, &scope)?;
            scope.defs.insert(d.name.clone(), d.body.clone());
        }
        Ok(scope)
    }

    fn check_sort(&self, s: &Sort) -> Result<(), LawError> {
        if let Some(known) = &self.sorts {
            let mut used = BTreeSet::new();
            s.symbols(&mut used);
            if let Some(u) = used.into_iter().find(|u| !known.contains(u)) {
                return Err(LawError::UnknownIdentifier { kind: "sort", name: u });
            }
        }
        Ok(())
    }
}

fn const_type(c: &Const) -> Typing {
    match c {
        Const::Id(a) => (a.clone(), a.clone()),
        Const::Bot(a, b) | Const::Top(a, b) => (a.clone(), b.clone()),
        Const::Pi(a, b) => (prod(a, b), a.clone()),
        Const::Rho(a, b) => (prod(a, b), b.clone()),
        Const::Eps(a) => (a.clone(), Sort::Power(Box::new(a.clone()))),
        Const::NeEps(a) => (a.clone(), Sort::NePower(Box::new(a.clone()))),
        Const::Assoc(a, b, c) => (prod(a, &prod(b, c)), prod(&prod(a, b), c)),
        Const::Swap(a, b) => (prod(a, b), prod(b, a)),
    }
}

/// Computes the sort `A -> B` of a term.
pub fn typecheck_term(t: &Term, scope: &Scope) -> Result<Typing, LawError> {
    match t {
        Term::Var(v) => {
            if let Some(ty) = scope.vars.get(v) {
                Ok(ty.clone())
            } else if let Some(body) = scope.defs.get(v) {
                typecheck_term(body, scope)
            } else {
                Err(LawError::UnknownIdentifier { kind: "relation", name: v.clone() })
            }
        }
        Term::Const(c) => {
            for s in c.sorts() {
                scope.check_sort(s)?;
            }
            Ok(const_type(c))
        }
        Term::Un(op, x) => {
            let (a, b) = typecheck_term(x, scope)?;
            Ok(match op {
                UnOp::Conv => (b, a),
                UnOp::Star => (a, b),
                UnOp::Dom => (a.clone(), a),
            })
        }
        Term::Bin(op, l, r) => {
            let lt = typecheck_term(l, scope)?;
            let rt = typecheck_term(r, scope)?;
            let name = op.name();
            match op {
                BinOp::Meet | BinOp::Join | BinOp::Impl => {
                    if lt != rt {
                        return mismatch(name, &lt, &rt);
                    }
                    Ok(lt)
                }
                BinOp::Comp => {
                    if lt.1 != rt.0 {
                        return mismatch(name, &lt, &rt);
                    }
                    Ok((lt.0, rt.1))
                }
                // Q: A -> B, R: A -> C  gives  B -> C
                BinOp::LRes | BinOp::Syq => {
                    if lt.0 != rt.0 {
                        return mismatch(name, &lt, &rt);
                    }
                    Ok((lt.1, rt.1))
                }
                // S: A -> C, R: B -> C  gives  A -> B
                BinOp::RRes => {
                    if lt.1 != rt.1 {
                        return mismatch(name, &lt, &rt);
                    }
                    Ok((lt.0, rt.0))
                }
                // E: A -> A, X: B -> A  gives  B -> A
                BinOp::Ubd | BinOp::Lbd | BinOp::Lub | BinOp::Glb => {
                    if lt.0 != lt.1 || rt.1 != lt.0 {
                        return mismatch(name, &lt, &rt);
                    }
                    Ok(rt)
                }
                BinOp::Fork => {
                    if lt.0 != rt.0 {
                        return mismatch(name, &lt, &rt);
                    }
                    Ok((lt.0, prod(&lt.1, &rt.1)))
                }
                BinOp::Pair => {
                    if lt.1 != rt.1 {
                        return mismatch(name, &lt, &rt);
                    }
                    Ok((prod(&lt.0, &rt.0), lt.1))
                }
                BinOp::Tensor => Ok((prod(&lt.0, &rt.0), prod(&lt.1, &rt.1))),
            }
        }
    }
}

pub fn typecheck_atom(a: &Atom, scope: &Scope) -> Result<(), LawError> {
    match a {
        Atom::Leq(l, r) | Atom::Eq(l, r) => {
            let lt = typecheck_term(l, scope)?;
            let rt = typecheck_term(r, scope)?;
            if lt != rt {
                return mismatch(if matches!(a, Atom::Leq(..)) { "<=" } else { "=" }, &lt, &rt);
            }
            Ok(())
        }
        Atom::Pred(p, args) => {
            let ts: Vec<Typing> = args.iter().map(|t| typecheck_term(t, scope)).collect::<Result<_, _>>()?;
            let unit_to = |t: &Typing| t.0 == Sort::Unit;
            match p {
                Pred::Complemented => {
                    if ts[0] != ts[1] {
                        return mismatch(p.name(), &ts[0], &ts[1]);
                    }
                }
                Pred::AbelianGroup | Pred::Rno => {
                    // (e|i: 1 -> A, f|C, n|add) with the sorts of a group or RNO
                    let a = ts[0].1.clone();
                    let sq = (a.clone(), a.clone());
                    let op = (prod(&a, &a), a.clone());
                    let (second, third) = if *p == Pred::AbelianGroup { (&op, &sq) } else { (&sq, &op) };
                    if !unit_to(&ts[0]) {
                        return mismatch(p.name(), &ts[0], &(Sort::Unit, a));
                    }
                    if ts[1] != *second {
                        return mismatch(p.name(), &ts[1], second);
                    }
                    if ts[2] != *third {
                        return mismatch(p.name(), &ts[2], third);
                    }
                }
                _ if p.needs_square() => {
                    if ts[0].0 != ts[0].1 {
                        return mismatch(p.name(), &ts[0], &(ts[0].0.clone(), ts[0].0.clone()));
                    }
                }
                Pred::Point if !unit_to(&ts[0]) => {
                    return mismatch(p.name(), &ts[0], &(Sort::Unit, ts[0].1.clone()));
                }
                _ => {}
            }
            Ok(())
        }
    }
}

pub fn typecheck_formula(f: &Formula, scope: &Scope) -> Result<(), LawError> {
    for a in f.atoms() {
        typecheck_atom(a, scope)?;
    }
    Ok(())
}

/// Checks every definition, assumption and the conclusion of a law.
pub fn typecheck_law(law: &Law) -> Result<Scope, LawError> {
    let scope = Scope::for_law(law)?;
    for a in &law.assumptions {
        typecheck_atom(a, &scope)?;
    }
    typecheck_formula(&law.conclusion, &scope)?;
    Ok(scope)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lawlang::{parse_law, parse_term};

    fn scope(vars: &[(&str, &str, &str)]) -> Scope {
        let mut s = Scope::default();
        for (n, a, b) in vars {
            s.vars.insert(n.to_string(), (Sort::named(a), Sort::named(b)));
        }
        s
    }

    #[test]
    fn composition() {
        let s = scope(&[("Q", "A", "B"), ("R", "B", "C"), ("T", "C", "D")]);
        assert_eq!(typecheck_term(&parse_term("Q;R").unwrap(), &s).unwrap(), (Sort::named("A"), Sort::named("C")));
        assert!(matches!(
            typecheck_term(&parse_term("Q;T").unwrap(), &s),
            Err(LawError::SortMismatch { .. })
        ));
    }

    #[test]
    fn bounds_and_products() {
        let s = scope(&[("E", "A", "A"), ("X", "B", "A"), ("Q", "C", "A"), ("R", "C", "B")]);
        assert_eq!(typecheck_term(&parse_term("ubd(E,X)").unwrap(), &s).unwrap(), (Sort::named("B"), Sort::named("A")));
        let f = typecheck_term(&parse_term("fork(Q,R);pi[A,B]").unwrap(), &s).unwrap();
        assert_eq!(f, (Sort::named("C"), Sort::named("A")));
        let a = typecheck_term(&parse_term("assoc[A,B,C]").unwrap(), &s).unwrap();
        assert_eq!(a.0.to_string(), "A*(B*C)");
        assert_eq!(a.1.to_string(), "A*B*C");
    }

    #[test]
    fn residual_typing() {
        let s = scope(&[("Q", "A", "B"), ("R", "A", "C"), ("S", "D", "C")]);
        assert_eq!(typecheck_term(&parse_term("lres(Q,R)").unwrap(), &s).unwrap(), (Sort::named("B"), Sort::named("C")));
        assert_eq!(typecheck_term(&parse_term("rres(S,R)").unwrap(), &s).unwrap(), (Sort::named("D"), Sort::named("A")));
        assert!(typecheck_term(&parse_term("rres(S,Q)").unwrap(), &s).is_err());
    }

    #[test]
    fn predicates() {
        assert!(typecheck_law(&parse_law("law x ; var Q : A -> B ; assume transitive(Q) ; conclude Q = Q").unwrap()).is_err());
        assert!(typecheck_law(
            &parse_law("law x ; var e : 1 -> A ; var f : A*A -> A ; var n : A -> A ; assume abelian_group(e,f,n) ; conclude n = n")
                .unwrap()
        )
        .is_ok());
        let mut s = scope(&[("Q", "A", "A")]);
        s.sorts = Some(["A".to_string()].into_iter().collect());
        assert!(matches!(
            typecheck_term(&parse_term("Q ; I[B]").unwrap(), &s),
            Err(LawError::UnknownIdentifier { kind: "sort", .. })
        ));
    }
}
