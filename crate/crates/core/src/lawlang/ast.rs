use std::collections::BTreeSet;
use std::fmt;

use super::Sort;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnOp {
    Conv,
    Star,
    Dom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Comp,
    Meet,
    Join,
    Impl,
    LRes,
    RRes,
    Syq,
    Ubd,
    Lbd,
    Lub,
    Glb,
    Fork,
    Pair,
    Tensor,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Const {
    Id(Sort),
    Bot(Sort, Sort),
    Top(Sort, Sort),
    Pi(Sort, Sort),
    Rho(Sort, Sort),
    Eps(Sort),
    NeEps(Sort),
    Assoc(Sort, Sort, Sort),
    Swap(Sort, Sort),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Const(Const),
    Un(UnOp, Box<Term>),
    Bin(BinOp, Box<Term>, Box<Term>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pred {
    Univalent,
    Total,
    Injective,
    Surjective,
    Map,
    Bijection,
    Point,
    Transitive,
    Dense,
    Asymmetric,
    StrictOrder,
    LinearStrictOrder,
    Reflexive,
    Antisymmetric,
    Symmetric,
    Ordering,
    Per,
    PartialIdentity,
    Regular,
    Crisp,
    Complemented,
    AbelianGroup,
    Rno,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Atom {
    Leq(Term, Term),
    Eq(Term, Term),
    Pred(Pred, Vec<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(Atom),
    And(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Vec<Formula>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarDecl {
    pub name: String,
    pub source: Sort,
    pub target: Sort,
    pub crisp: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Def {
    pub name: String,
    pub body: Term,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Law {
    pub id: String,
    /// Sort symbols declared without a variable mentioning them.
    pub sorts: Vec<String>,
    pub vars: Vec<VarDecl>,
    pub defs: Vec<Def>,
    pub assumptions: Vec<Atom>,
    pub conclusion: Formula,
}

impl UnOp {
    pub fn name(self) -> &'static str {
        match self {
            UnOp::Conv => "conv",
            UnOp::Star => "star",
            UnOp::Dom => "dom",
        }
    }

    pub fn from_name(s: &str) -> Option<UnOp> {
        Some(match s {
            "conv" => UnOp::Conv,
            "star" => UnOp::Star,
            "dom" => UnOp::Dom,
            _ => return None,
        })
    }
}

impl BinOp {
    pub fn name(self) -> &'static str {
        match self {
            BinOp::Comp => ";",
            BinOp::Meet => "&",
            BinOp::Join => "|",
            BinOp::Impl => "->",
            BinOp::LRes => "lres",
            BinOp::RRes => "rres",
            BinOp::Syq => "syq",
            BinOp::Ubd => "ubd",
            BinOp::Lbd => "lbd",
            BinOp::Lub => "lub",
            BinOp::Glb => "glb",
            BinOp::Fork => "fork",
            BinOp::Pair => "pair",
            BinOp::Tensor => "tensor",
        }
    }

    pub fn from_name(s: &str) -> Option<BinOp> {
        Some(match s {
            "lres" => BinOp::LRes,
            "rres" => BinOp::RRes,
            "syq" => BinOp::Syq,
            "ubd" => BinOp::Ubd,
            "lbd" => BinOp::Lbd,
            "lub" => BinOp::Lub,
            "glb" => BinOp::Glb,
            "fork" => BinOp::Fork,
            "pair" => BinOp::Pair,
            "tensor" => BinOp::Tensor,
            _ => return None,
        })
    }

    /// Binding strength of infix operators; `None` for function syntax.
    pub fn precedence(self) -> Option<u8> {
        match self {
            BinOp::Comp => Some(4),
            BinOp::Meet => Some(3),
            BinOp::Join => Some(2),
            BinOp::Impl => Some(1),
            _ => None,
        }
    }
}

const PREDICATES: &[(&str, Pred, usize)] = &[
    ("univalent", Pred::Univalent, 1),
    ("total", Pred::Total, 1),
    ("injective", Pred::Injective, 1),
    ("surjective", Pred::Surjective, 1),
    ("map", Pred::Map, 1),
    ("bijection", Pred::Bijection, 1),
    ("point", Pred::Point, 1),
    ("transitive", Pred::Transitive, 1),
    ("dense", Pred::Dense, 1),
    ("asymmetric", Pred::Asymmetric, 1),
    ("strict_order", Pred::StrictOrder, 1),
    ("linear_strict_order", Pred::LinearStrictOrder, 1),
    ("reflexive", Pred::Reflexive, 1),
    ("antisymmetric", Pred::Antisymmetric, 1),
    ("symmetric", Pred::Symmetric, 1),
    ("ordering", Pred::Ordering, 1),
    ("per", Pred::Per, 1),
    ("partial_identity", Pred::PartialIdentity, 1),
    ("regular", Pred::Regular, 1),
    ("crisp", Pred::Crisp, 1),
    ("complemented", Pred::Complemented, 2),
    ("abelian_group", Pred::AbelianGroup, 3),
    ("rno", Pred::Rno, 3),
];

impl Pred {
    pub fn name(self) -> &'static str {
        PREDICATES.iter().find(|p| p.1 == self).map(|p| p.0).expect("listed predicate")
    }

    pub fn arity(self) -> usize {
        PREDICATES.iter().find(|p| p.1 == self).map(|p| p.2).expect("listed predicate")
    }

    pub fn from_name(s: &str) -> Option<Pred> {
        PREDICATES.iter().find(|p| p.0 == s).map(|p| p.1)
    }

    pub fn all() -> impl Iterator<Item = Pred> {
        PREDICATES.iter().map(|p| p.1)
    }

    /// Predicates that only make sense on a square sort.
    pub fn needs_square(self) -> bool {
        matches!(
            self,
            Pred::Transitive
                | Pred::Dense
                | Pred::Asymmetric
                | Pred::StrictOrder
                | Pred::LinearStrictOrder
                | Pred::Reflexive
                | Pred::Antisymmetric
                | Pred::Symmetric
                | Pred::Ordering
                | Pred::Per
                | Pred::PartialIdentity
        )
    }
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn un(op: UnOp, t: Term) -> Term {
        Term::Un(op, Box::new(t))
    }

    pub fn bin(op: BinOp, l: Term, r: Term) -> Term {
        Term::Bin(op, Box::new(l), Box::new(r))
    }

    pub fn free_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Const(_) => {}
            Term::Un(_, t) => t.free_vars(out),
            Term::Bin(_, l, r) => {
                l.free_vars(out);
                r.free_vars(out);
            }
        }
    }

    pub fn sort_symbols(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(_) => {}
            Term::Const(c) => c.sorts().iter().for_each(|s| s.symbols(out)),
            Term::Un(_, t) => t.sort_symbols(out),
            Term::Bin(_, l, r) => {
                l.sort_symbols(out);
                r.sort_symbols(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Term::Bin(op, ..) => op.precedence().unwrap_or(9),
            _ => 9,
        }
    }
}

impl Const {
    pub fn name(&self) -> &'static str {
        match self {
            Const::Id(_) => "I",
            Const::Bot(..) => "bot",
            Const::Top(..) => "top",
            Const::Pi(..) => "pi",
            Const::Rho(..) => "rho",
            Const::Eps(_) => "eps",
            Const::NeEps(_) => "neps",
            Const::Assoc(..) => "assoc",
            Const::Swap(..) => "swap",
        }
    }

    pub fn arity(name: &str) -> Option<usize> {
        Some(match name {
            "I" | "eps" | "neps" => 1,
            "bot" | "top" | "pi" | "rho" | "swap" => 2,
            "assoc" => 3,
            _ => return None,
        })
    }

    pub fn build(name: &str, mut s: Vec<Sort>) -> Option<Const> {
        if Const::arity(name) != Some(s.len()) {
            return None;
        }
        let mut next = || s.remove(0);
        Some(match name {
            "I" => Const::Id(next()),
            "eps" => Const::Eps(next()),
            "neps" => Const::NeEps(next()),
            "bot" => Const::Bot(next(), next()),
            "top" => Const::Top(next(), next()),
            "pi" => Const::Pi(next(), next()),
            "rho" => Const::Rho(next(), next()),
            "swap" => Const::Swap(next(), next()),
            "assoc" => Const::Assoc(next(), next(), next()),
            _ => return None,
        })
    }

    pub fn sorts(&self) -> Vec<&Sort> {
        match self {
            Const::Id(a) | Const::Eps(a) | Const::NeEps(a) => vec![a],
            Const::Bot(a, b) | Const::Top(a, b) | Const::Pi(a, b) | Const::Rho(a, b) | Const::Swap(a, b) => {
                vec![a, b]
            }
            Const::Assoc(a, b, c) => vec![a, b, c],
        }
    }
}

impl Atom {
    pub fn terms(&self) -> Vec<&Term> {
        match self {
            Atom::Leq(l, r) | Atom::Eq(l, r) => vec![l, r],
            Atom::Pred(_, args) => args.iter().collect(),
        }
    }
}

impl Formula {
    pub fn atoms(&self) -> Vec<&Atom> {
        match self {
            Formula::Atom(a) => vec![a],
            Formula::And(fs) | Formula::Iff(fs) => fs.iter().flat_map(|f| f.atoms()).collect(),
            Formula::Implies(a, b) => {
                let mut v = a.atoms();
                v.extend(b.atoms());
                v
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Iff(_) => 1,
            Formula::Implies(..) => 2,
            Formula::And(_) => 3,
            Formula::Atom(_) => 4,
        }
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, t: &Term, min: u8) -> fmt::Result {
    if t.precedence() < min {
        write!(f, "({t})")
    } else {
        write!(f, "{t}")
    }
}

impl fmt::Display for Const {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sorts: Vec<String> = self.sorts().iter().map(|s| s.to_string()).collect();
        write!(f, "{}[{}]", self.name(), sorts.join(","))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Const(c) => write!(f, "{c}"),
            Term::Un(op, t) => write!(f, "{}({t})", op.name()),
            Term::Bin(op, l, r) => match op.precedence() {
                Some(p) => {
                    // `->` groups to the right, the others to the left.
                    let (lmin, rmin) = if *op == BinOp::Impl { (p + 1, p) } else { (p, p + 1) };
                    write_child(f, l, lmin)?;
                    write!(f, " {} ", op.name())?;
                    write_child(f, r, rmin)
                }
                None => write!(f, "{}({l},{r})", op.name()),
            },
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Leq(l, r) => write!(f, "{l} <= {r}"),
            Atom::Eq(l, r) => write!(f, "{l} = {r}"),
            Atom::Pred(p, args) => {
                let args: Vec<String> = args.iter().map(|a| a.to_string()).collect();
                write!(f, "{}({})", p.name(), args.join(","))
            }
        }
    }
}

fn write_formula(f: &mut fmt::Formatter<'_>, x: &Formula, min: u8) -> fmt::Result {
    if x.precedence() < min {
        write!(f, "({x})")
    } else {
        write!(f, "{x}")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::And(fs) | Formula::Iff(fs) => {
                let (sep, min) = if matches!(self, Formula::And(_)) { (" and ", 4) } else { (" <=> ", 2) };
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(sep)?;
                    }
                    write_formula(f, x, min)?;
                }
                Ok(())
            }
            Formula::Implies(a, b) => {
                write_formula(f, a, 3)?;
                f.write_str(" => ")?;
                write_formula(f, b, 2)
            }
        }
    }
}

impl fmt::Display for VarDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "var {} : {} -> {}", self.name, self.source, self.target)?;
        if self.crisp {
            f.write_str(" crisp")?;
        }
        Ok(())
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "law {}", self.id)?;
        if !self.sorts.is_empty() {
            write!(f, "\n; sort {}", self.sorts.join(", "))?;
        }
        for v in &self.vars {
            write!(f, "\n; {v}")?;
        }
        for d in &self.defs {
            write!(f, "\n; def {} = {}", d.name, d.body)?;
        }
        for a in &self.assumptions {
            write!(f, "\n; assume {a}")?;
        }
        write!(f, "\n; conclude {}", self.conclusion)
    }
}

impl Law {
    /// Every sort symbol the law mentions.
    pub fn sort_symbols(&self) -> BTreeSet<String> {
        let mut out: BTreeSet<String> = self.sorts.iter().cloned().collect();
        for v in &self.vars {
            v.source.symbols(&mut out);
            v.target.symbols(&mut out);
        }
        for d in &self.defs {
            d.body.sort_symbols(&mut out);
        }
        for a in self.assumptions.iter().chain(self.conclusion.atoms()) {
            for t in a.terms() {
                t.sort_symbols(&mut out);
            }
        }
        out
    }

    /// Sort symbols in first-mention order.
    pub fn sort_symbols_ordered(&self) -> Vec<String> {
        let mut seen = Vec::new();
        let mut push = |s: &Sort| {
            let mut order = Vec::new();
            collect_ordered(s, &mut order);
            for n in order {
                if !seen.contains(&n) {
                    seen.push(n);
                }
            }
        };
        for s in &self.sorts {
            push(&Sort::Named(s.clone()));
        }
        for v in &self.vars {
            push(&v.source);
            push(&v.target);
        }
        for s in self.sort_symbols() {
            if !seen.contains(&s) {
                seen.push(s);
            }
        }
        seen
    }
}

fn collect_ordered(s: &Sort, out: &mut Vec<String>) {
    match s {
        Sort::Named(n) => out.push(n.clone()),
        Sort::Unit => {}
        Sort::Prod(a, b) => {
            collect_ordered(a, out);
            collect_ordered(b, out);
        }
        Sort::Power(a) | Sort::NePower(a) => collect_ordered(a, out),
    }
}
