use std::borrow::Cow;
use std::collections::BTreeSet;
use std::sync::Arc;

use indexmap::IndexMap;

use crate::relcore::{Obj, Rel};
use crate::structures::{
    is_abelian_group, rno_axioms_hold, GroupCandidate, ProductWitness, RnoCandidate, StructureError, Witnesses,
};

use super::ast::{Atom, BinOp, Const, Formula, Law, Pred, Term, UnOp};
use super::typecheck::{typecheck_term, Scope};
use super::LawError;

/// Objects bound to sort symbols, plus the witnesses of the algebra.
#[derive(Clone)]
pub struct Env<'a> {
    pub binding: &'a IndexMap<String, Arc<Obj>>,
    pub w: &'a Arc<Witnesses>,
}

#[derive(Debug, Clone)]
pub(crate) enum Node {
    Var(usize),
    Const(Rel),
    Un(UnOp, Box<Node>),
    Bin(BinOp, Box<Node>, Box<Node>),
    Fork(Arc<ProductWitness>, Box<Node>, Box<Node>),
    Pair(Arc<ProductWitness>, Box<Node>, Box<Node>),
    Tensor(Arc<ProductWitness>, Arc<ProductWitness>, Box<Node>, Box<Node>),
}

#[derive(Debug, Clone)]
pub(crate) enum CAtom {
    Leq(Node, Node),
    Eq(Node, Node),
    Pred(Pred, Vec<Node>),
}

#[derive(Debug, Clone)]
pub(crate) enum CFormula {
    Atom(CAtom),
    And(Vec<CFormula>),
    Implies(Box<CFormula>, Box<CFormula>),
    Iff(Vec<CFormula>),
}

/// A law instantiated at one sort binding.
pub struct Compiled {
    pub(crate) w: Arc<Witnesses>,
    pub vars: Vec<String>,
    pub var_sorts: Vec<(Arc<Obj>, Arc<Obj>)>,
    /// Each assumption with the largest variable index it reads.
    pub(crate) assumptions: Vec<(CAtom, Option<usize>)>,
    pub(crate) conclusion: CFormula,
}

type Typed = (Node, Arc<Obj>, Arc<Obj>);

struct Compiler<'a> {
    env: Env<'a>,
    scope: &'a Scope,
    index: IndexMap<String, usize>,
    sorts: Vec<(Arc<Obj>, Arc<Obj>)>,
}

fn missing(what: String, e: StructureError) -> LawError {
    match e {
        StructureError::PowerTooLarge { .. } => LawError::Structure(e),
        other => LawError::MissingWitness(format!("{what}: {other}")),
    }
}

impl<'a> Compiler<'a> {
    fn constant(&self, c: &Const) -> Result<Rel, LawError> {
        let w = self.env.w;
        let alg = w.algebra();
        let r = |s: &super::Sort| s.resolve(self.env.binding, w);
        Ok(match c {
            Const::Id(a) => Rel::identity(alg, &r(a)?),
            Const::Bot(a, b) => Rel::bottom(alg, &r(a)?, &r(b)?),
            Const::Top(a, b) => Rel::top(alg, &r(a)?, &r(b)?),
            Const::Pi(a, b) => w.product(&r(a)?, &r(b)?)?.pi.clone(),
            Const::Rho(a, b) => w.product(&r(a)?, &r(b)?)?.rho.clone(),
            Const::Eps(a) => {
                let p = w.power(&r(a)?).map_err(|e| missing(c.to_string(), e))?;
                if !p.checks.verified() {
                    return Err(LawError::MissingWitness(format!(
                        "P({}) over this algebra fails the power axioms",
                        p.base.name()
                    )));
                }
                p.eps.clone()
            }
            Const::NeEps(a) => {
                let p = w.nepower(&r(a)?).map_err(|e| missing(c.to_string(), e))?;
                if !p.checks.verified() {
                    return Err(LawError::MissingWitness(format!(
                        "NP({}) over this algebra fails the non-empty power axioms",
                        p.base.name()
                    )));
                }
                p.eps.clone()
            }
            Const::Assoc(a, b, cc) => w.assoc(&r(a)?, &r(b)?, &r(cc)?)?,
            Const::Swap(a, b) => w.swap(&r(a)?, &r(b)?)?,
        })
    }

    fn term(&self, t: &Term) -> Result<Typed, LawError> {
        let w = self.env.w;
        Ok(match t {
            Term::Var(v) => {
                if let Some(&i) = self.index.get(v) {
                    (Node::Var(i), self.sorts[i].0.clone(), self.sorts[i].1.clone())
                } else if let Some(body) = self.scope.defs.get(v) {
                    self.term(body)?
                } else {
                    return Err(LawError::UnknownIdentifier { kind: "relation", name: v.clone() });
                }
            }
            Term::Const(c) => {
                let rel = self.constant(c)?;
                let (s, t) = (rel.source().clone(), rel.target().clone());
                (Node::Const(rel), s, t)
            }
            Term::Un(op, x) => {
                let (n, a, b) = self.term(x)?;
                let (s, t) = match op {
                    UnOp::Conv => (b, a),
                    UnOp::Star => (a, b),
                    UnOp::Dom => (a.clone(), a),
                };
                (Node::Un(*op, Box::new(n)), s, t)
            }
            Term::Bin(op, l, r) => {
                let (ln, la, lb) = self.term(l)?;
                let (rn, ra, rb) = self.term(r)?;
                let (l, r) = (Box::new(ln), Box::new(rn));
                match op {
                    BinOp::Meet | BinOp::Join | BinOp::Impl => (Node::Bin(*op, l, r), la, lb),
                    BinOp::Comp => (Node::Bin(*op, l, r), la, rb),
                    BinOp::LRes | BinOp::Syq => (Node::Bin(*op, l, r), lb, rb),
                    BinOp::RRes => (Node::Bin(*op, l, r), la, ra),
                    BinOp::Ubd | BinOp::Lbd | BinOp::Lub | BinOp::Glb => (Node::Bin(*op, l, r), ra, rb),
                    BinOp::Fork => {
                        let p = w.product(&lb, &rb)?;
                        let o = p.obj.clone();
                        (Node::Fork(p, l, r), la, o)
                    }
                    BinOp::Pair => {
                        let p = w.product(&la, &ra)?;
                        let o = p.obj.clone();
                        (Node::Pair(p, l, r), o, lb)
                    }
                    BinOp::Tensor => {
                        let src = w.product(&la, &ra)?;
                        let tgt = w.product(&lb, &rb)?;
                        let (s, t) = (src.obj.clone(), tgt.obj.clone());
                        (Node::Tensor(src, tgt, l, r), s, t)
                    }
                }
            }
        })
    }

    fn atom(&self, a: &Atom) -> Result<CAtom, LawError> {
        Ok(match a {
            Atom::Leq(l, r) => CAtom::Leq(self.term(l)?.0, self.term(r)?.0),
            Atom::Eq(l, r) => CAtom::Eq(self.term(l)?.0, self.term(r)?.0),
            Atom::Pred(p, args) => {
                CAtom::Pred(*p, args.iter().map(|t| self.term(t).map(|x| x.0)).collect::<Result<_, _>>()?)
            }
        })
    }

    fn formula(&self, f: &Formula) -> Result<CFormula, LawError> {
        Ok(match f {
            Formula::Atom(a) => CFormula::Atom(self.atom(a)?),
            Formula::And(fs) => CFormula::And(fs.iter().map(|f| self.formula(f)).collect::<Result<_, _>>()?),
            Formula::Iff(fs) => CFormula::Iff(fs.iter().map(|f| self.formula(f)).collect::<Result<_, _>>()?),
            Formula::Implies(a, b) => CFormula::Implies(Box::new(self.formula(a)?), Box::new(self.formula(b)?)),
        })
    }
}

fn max_var_node(n: &Node) -> Option<usize> {
    match n {
        Node::Var(i) => Some(*i),
        Node::Const(_) => None,
        Node::Un(_, x) => max_var_node(x),
        Node::Bin(_, l, r) | Node::Fork(_, l, r) | Node::Pair(_, l, r) | Node::Tensor(_, _, l, r) => {
            max_var_node(l).max(max_var_node(r))
        }
    }
}

fn max_var_atom(a: &CAtom) -> Option<usize> {
    match a {
        CAtom::Leq(l, r) | CAtom::Eq(l, r) => max_var_node(l).max(max_var_node(r)),
        CAtom::Pred(_, args) => args.iter().filter_map(max_var_node).max(),
    }
}

fn eval_node<'v>(n: &'v Node, vals: &[&'v Rel]) -> Result<Cow<'v, Rel>, LawError> {
    Ok(match n {
        Node::Var(i) => Cow::Borrowed(vals[*i]),
        Node::Const(r) => Cow::Borrowed(r),
        Node::Un(op, x) => {
            let x = eval_node(x, vals)?;
            Cow::Owned(match op {
                UnOp::Conv => x.converse(),
                UnOp::Star => x.star(),
                UnOp::Dom => x.dom(),
            })
        }
        Node::Bin(op, l, r) => {
            let (l, r) = (eval_node(l, vals)?, eval_node(r, vals)?);
            Cow::Owned(match op {
                BinOp::Comp => l.compose(&r)?,
                BinOp::Meet => l.meet(&r)?,
                BinOp::Join => l.join(&r)?,
                BinOp::Impl => l.imp(&r)?,
                BinOp::LRes => l.lres(&r)?,
                BinOp::RRes => l.rres(&r)?,
                BinOp::Syq => l.syq(&r)?,
                BinOp::Ubd => Rel::ubd(&l, &r)?,
                BinOp::Lbd => Rel::lbd(&l, &r)?,
                BinOp::Lub => Rel::lub(&l, &r)?,
                BinOp::Glb => Rel::glb(&l, &r)?,
                BinOp::Fork | BinOp::Pair | BinOp::Tensor => unreachable!("resolved at compile time"),
            })
        }
        Node::Fork(p, l, r) => Cow::Owned(p.fork(&*eval_node(l, vals)?, &*eval_node(r, vals)?)?),
        Node::Pair(p, l, r) => Cow::Owned(p.pair(&*eval_node(l, vals)?, &*eval_node(r, vals)?)?),
        Node::Tensor(s, t, l, r) => {
            Cow::Owned(ProductWitness::tensor(s, t, &*eval_node(l, vals)?, &*eval_node(r, vals)?)?)
        }
    })
}

impl Compiled {
    /// Instantiates a law at a sort binding.
    pub fn new(law: &Law, scope: &Scope, env: Env<'_>) -> Result<Compiled, LawError> {
        let mut index = IndexMap::new();
        let mut sorts = Vec::new();
        for (i, v) in law.vars.iter().enumerate() {
            index.insert(v.name.clone(), i);
            sorts.push((v.source.resolve(env.binding, env.w)?, v.target.resolve(env.binding, env.w)?));
        }
        let c = Compiler { env: env.clone(), scope, index, sorts };
        let assumptions = law
            .assumptions
            .iter()
            .map(|a| c.atom(a).map(|ca| (ca.clone(), max_var_atom(&ca))))
            .collect::<Result<_, _>>()?;
        let conclusion = c.formula(&law.conclusion)?;
        Ok(Compiled {
            w: env.w.clone(),
            vars: law.vars.iter().map(|v| v.name.clone()).collect(),
            var_sorts: c.sorts,
            assumptions,
            conclusion,
        })
    }

    pub(crate) fn eval_atom(&self, a: &CAtom, vals: &[&Rel]) -> Result<bool, LawError> {
        match a {
            CAtom::Leq(l, r) => Ok(eval_node(l, vals)?.leq(&*eval_node(r, vals)?)?),
            CAtom::Eq(l, r) => Ok(eval_node(l, vals)? == eval_node(r, vals)?),
            CAtom::Pred(p, args) => {
                let xs: Vec<Cow<Rel>> = args.iter().map(|n| eval_node(n, vals)).collect::<Result<_, _>>()?;
                eval_pred(*p, &xs, &self.w)
            }
        }
    }

    pub(crate) fn eval_formula(&self, f: &CFormula, vals: &[&Rel]) -> Result<bool, LawError> {
        Ok(match f {
            CFormula::Atom(a) => self.eval_atom(a, vals)?,
            CFormula::And(fs) => {
                for f in fs {
                    if !self.eval_formula(f, vals)? {
                        return Ok(false);
                    }
                }
                true
            }
            CFormula::Implies(a, b) => !self.eval_formula(a, vals)? || self.eval_formula(b, vals)?,
            CFormula::Iff(fs) => {
                let first = self.eval_formula(&fs[0], vals)?;
                for f in &fs[1..] {
                    if self.eval_formula(f, vals)? != first {
                        return Ok(false);
                    }
                }
                true
            }
        })
    }

    pub fn assumptions_hold(&self, vals: &[&Rel]) -> Result<bool, LawError> {
        for (a, _) in &self.assumptions {
            if !self.eval_atom(a, vals)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn conclusion_holds(&self, vals: &[&Rel]) -> Result<bool, LawError> {
        self.eval_formula(&self.conclusion, vals)
    }
}

pub(crate) fn eval_pred(p: Pred, xs: &[Cow<Rel>], w: &Arc<Witnesses>) -> Result<bool, LawError> {
    let x = &xs[0];
    Ok(match p {
        Pred::Univalent => x.is_univalent(),
        Pred::Total => x.is_total(),
        Pred::Injective => x.is_injective(),
        Pred::Surjective => x.is_surjective(),
        Pred::Map => x.is_map(),
        Pred::Bijection => x.is_bijection(),
        Pred::Point => x.is_point(),
        Pred::Transitive => x.is_transitive()?,
        Pred::Dense => x.is_dense()?,
        Pred::Asymmetric => x.is_asymmetric()?,
        Pred::StrictOrder => x.is_strict_order()?,
        Pred::LinearStrictOrder => x.is_linear_strict_order()?,
        Pred::Reflexive => x.is_reflexive()?,
        Pred::Antisymmetric => x.is_antisymmetric()?,
        Pred::Symmetric => x.is_symmetric()?,
        Pred::Ordering => x.is_ordering()?,
        Pred::Per => x.is_per()?,
        Pred::PartialIdentity => x.is_partial_identity()?,
        Pred::Regular => x.is_regular(),
        Pred::Crisp => x.is_crisp(),
        Pred::Complemented => x.is_complemented_pair(&xs[1])?,
        Pred::AbelianGroup => {
            let g = GroupCandidate {
                a: x.target().clone(),
                e: x.clone().into_owned(),
                f: xs[1].clone().into_owned(),
                n: xs[2].clone().into_owned(),
            };
            is_abelian_group(w, &g)?
        }
        Pred::Rno => {
            let c = RnoCandidate {
                r: x.target().clone(),
                i: x.clone().into_owned(),
                c: xs[1].clone().into_owned(),
                add: xs[2].clone().into_owned(),
            };
            rno_axioms_hold(w, &c)?
        }
    })
}

/// Typechecks and evaluates a closed term whose free names are given
/// values in `vals`.
pub fn eval_term(
    t: &Term,
    scope: &Scope,
    env: Env<'_>,
    vals: &IndexMap<String, Rel>,
) -> Result<Rel, LawError> {
    typecheck_term(t, scope)?;
    let mut used = BTreeSet::new();
    t.free_vars(&mut used);
    let mut index = IndexMap::new();
    let mut sorts = Vec::new();
    let mut refs = Vec::new();
    for (i, (name, r)) in vals.iter().enumerate() {
        index.insert(name.clone(), i);
        sorts.push((r.source().clone(), r.target().clone()));
        refs.push(r);
    }
    let c = Compiler { env, scope, index, sorts };
    let (node, _, _) = c.term(t)?;
    Ok(eval_node(&node, &refs)?.into_owned())
}
