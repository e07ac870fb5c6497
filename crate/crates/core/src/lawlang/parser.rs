use std::collections::BTreeSet;

use super::ast::{Atom, BinOp, Const, Def, Formula, Law, Pred, Term, UnOp, VarDecl};
use super::lexer::{lex, Tok, Token, KEYWORDS};
use super::{LawError, Sort};

const CLAUSES: &[&str] = &["law", "sort", "var", "def", "assume", "conclude"];

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

type PResult<T> = Result<T, LawError>;

fn err_pos(e: &LawError) -> (usize, usize) {
    match e {
        LawError::Syntax { line, col, .. } => (*line, *col),
        _ => (0, 0),
    }
}

impl Parser {
    fn new(text: &str) -> PResult<Self> {
        Ok(Parser { toks: lex(text)?, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> PResult<T> {
        let t = &self.toks[self.pos];
        Err(LawError::Syntax { line: t.line, col: t.col, msg: msg.into() })
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {}, found {}", tok.describe(), self.peek().describe()))
        }
    }

    fn ident(&mut self, what: &str) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => {
                self.bump();
                Ok(s)
            }
            t => self.error(format!("expected {what}, found {}", t.describe())),
        }
    }

    fn end(&mut self) -> PResult<()> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            self.error(format!("unexpected {}", self.peek().describe()))
        }
    }

    fn at_clause_break(&self) -> bool {
        *self.peek() == Tok::Semi && CLAUSES.iter().any(|k| self.peek_at(1).is_keyword(k))
    }

    // sorts

    fn sort(&mut self) -> PResult<Sort> {
        let mut s = self.sort_atom()?;
        while *self.peek() == Tok::Star {
            self.bump();
            s = Sort::prod(s, self.sort_atom()?);
        }
        Ok(s)
    }

    fn sort_atom(&mut self) -> PResult<Sort> {
        match self.peek().clone() {
            Tok::Num(n) if n == "1" => {
                self.bump();
                Ok(Sort::Unit)
            }
            Tok::LParen => {
                self.bump();
                let s = self.sort()?;
                self.expect(Tok::RParen)?;
                Ok(s)
            }
            Tok::Ident(n) if (n == "P" || n == "NP") && *self.peek_at(1) == Tok::LParen => {
                self.bump();
                self.bump();
                let s = self.sort()?;
                self.expect(Tok::RParen)?;
                Ok(if n == "P" { Sort::Power(Box::new(s)) } else { Sort::NePower(Box::new(s)) })
            }
            Tok::Ident(_) => Ok(Sort::Named(self.ident("a sort")?)),
            t => self.error(format!("expected a sort, found {}", t.describe())),
        }
    }

    // terms

    fn term(&mut self) -> PResult<Term> {
        let l = self.term_join()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let r = self.term()?;
            return Ok(Term::bin(BinOp::Impl, l, r));
        }
        Ok(l)
    }

    fn term_join(&mut self) -> PResult<Term> {
        let mut t = self.term_meet()?;
        while *self.peek() == Tok::Bar {
            self.bump();
            t = Term::bin(BinOp::Join, t, self.term_meet()?);
        }
        Ok(t)
    }

    fn term_meet(&mut self) -> PResult<Term> {
        let mut t = self.term_comp()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            t = Term::bin(BinOp::Meet, t, self.term_comp()?);
        }
        Ok(t)
    }

    fn term_comp(&mut self) -> PResult<Term> {
        let mut t = self.term_atom()?;
        while *self.peek() == Tok::Semi && !self.at_clause_break() {
            self.bump();
            t = Term::bin(BinOp::Comp, t, self.term_atom()?);
        }
        Ok(t)
    }

    fn term_atom(&mut self) -> PResult<Term> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            Tok::Ident(name) if *self.peek_at(1) == Tok::LParen => {
                if let Some(op) = UnOp::from_name(&name) {
                    self.bump();
                    self.bump();
                    let t = self.term()?;
                    self.expect(Tok::RParen)?;
                    Ok(Term::un(op, t))
                } else if let Some(op) = BinOp::from_name(&name) {
                    self.bump();
                    self.bump();
                    let l = self.term()?;
                    self.expect(Tok::Comma)?;
                    let r = self.term()?;
                    self.expect(Tok::RParen)?;
                    Ok(Term::bin(op, l, r))
                } else {
                    self.error(format!("unknown function `{name}`"))
                }
            }
            Tok::Ident(name) if *self.peek_at(1) == Tok::LBrack => {
                let Some(arity) = Const::arity(&name) else {
                    return self.error(format!("unknown constant `{name}`"));
                };
                self.bump();
                self.bump();
                let mut sorts = vec![self.sort()?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    sorts.push(self.sort()?);
                }
                if sorts.len() != arity {
                    return self.error(format!("`{name}` takes {arity} sort(s), got {}", sorts.len()));
                }
                self.expect(Tok::RBrack)?;
                Ok(Term::Const(Const::build(&name, sorts).expect("arity checked")))
            }
            Tok::Ident(_) => Ok(Term::Var(self.ident("a relation")?)),
            t => self.error(format!("expected a term, found {}", t.describe())),
        }
    }

    // formulas

    fn formula(&mut self) -> PResult<Formula> {
        let first = self.implication()?;
        if *self.peek() != Tok::Iff {
            return Ok(first);
        }
        let mut parts = vec![first];
        while *self.peek() == Tok::Iff {
            self.bump();
            parts.push(self.implication()?);
        }
        Ok(Formula::Iff(parts))
    }

    fn implication(&mut self) -> PResult<Formula> {
        let l = self.conjunction()?;
        if *self.peek() == Tok::Implies {
            self.bump();
            let r = self.implication()?;
            return Ok(Formula::Implies(Box::new(l), Box::new(r)));
        }
        Ok(l)
    }

    fn conjunction(&mut self) -> PResult<Formula> {
        let first = self.primary()?;
        if !self.peek().is_keyword("and") {
            return Ok(first);
        }
        let mut parts = vec![first];
        while self.peek().is_keyword("and") {
            self.bump();
            parts.push(self.primary()?);
        }
        Ok(Formula::And(parts))
    }

    fn primary(&mut self) -> PResult<Formula> {
        let start = self.pos;
        let as_atom = self.atom();
        match as_atom {
            Ok(a) => Ok(Formula::Atom(a)),
            Err(e1) if self.toks[start].tok == Tok::LParen => {
                let after_atom = self.pos;
                self.pos = start;
                self.bump();
                let inner = self.formula().and_then(|f| self.expect(Tok::RParen).map(|_| f));
                match inner {
                    Ok(f) => Ok(f),
                    Err(e2) => {
                        if err_pos(&e1) >= err_pos(&e2) {
                            self.pos = after_atom;
                            Err(e1)
                        } else {
                            Err(e2)
                        }
                    }
                }
            }
            Err(e) => Err(e),
        }
    }

    fn atom(&mut self) -> PResult<Atom> {
        if let Tok::Ident(name) = self.peek().clone() {
            if let Some(p) = Pred::from_name(&name) {
                if *self.peek_at(1) == Tok::LParen {
                    self.bump();
                    self.bump();
                    let mut args = vec![self.term()?];
                    while *self.peek() == Tok::Comma {
                        self.bump();
                        args.push(self.term()?);
                    }
                    self.expect(Tok::RParen)?;
                    if args.len() != p.arity() {
                        return self.error(format!("`{name}` takes {} argument(s), got {}", p.arity(), args.len()));
                    }
                    return Ok(Atom::Pred(p, args));
                }
            }
        }
        let l = self.term()?;
        match self.peek() {
            Tok::Leq => {
                self.bump();
                Ok(Atom::Leq(l, self.term()?))
            }
            Tok::Eq => {
                self.bump();
                Ok(Atom::Eq(l, self.term()?))
            }
            t => self.error(format!("expected `<=` or `=`, found {}", t.describe())),
        }
    }

    // laws

    fn law(&mut self) -> PResult<Law> {
        if !self.peek().is_keyword("law") {
            return self.error("expected `law`");
        }
        self.bump();
        let id = self.ident("a law identifier")?;
        let mut law = Law {
            id,
            sorts: Vec::new(),
            vars: Vec::new(),
            defs: Vec::new(),
            assumptions: Vec::new(),
            conclusion: Formula::And(Vec::new()),
        };
        let mut concluded = false;
        while *self.peek() == Tok::Semi {
            self.bump();
            let kw = match self.peek() {
                Tok::Ident(k) if CLAUSES.contains(&k.as_str()) && k != "law" => k.clone(),
                t => return self.error(format!("expected a clause keyword, found {}", t.describe())),
            };
            self.bump();
            match kw.as_str() {
                "sort" => {
                    law.sorts.push(self.ident("a sort name")?);
                    while *self.peek() == Tok::Comma {
                        self.bump();
                        law.sorts.push(self.ident("a sort name")?);
                    }
                }
                "var" => {
                    let mut names = vec![self.ident("a variable name")?];
                    while *self.peek() == Tok::Comma {
                        self.bump();
                        names.push(self.ident("a variable name")?);
                    }
                    self.expect(Tok::Colon)?;
                    let source = self.sort()?;
                    self.expect(Tok::Arrow)?;
                    let target = self.sort()?;
                    let crisp = self.peek().is_keyword("crisp");
                    if crisp {
                        self.bump();
                    }
                    for name in names {
                        law.vars.push(VarDecl { name, source: source.clone(), target: target.clone(), crisp });
                    }
                }
                "def" => {
                    let name = self.ident("a definition name")?;
                    self.expect(Tok::Eq)?;
                    let body = self.term()?;
                    law.defs.push(Def { name, body });
                }
                "assume" => law.assumptions.push(self.atom()?),
                "conclude" => {
                    if concluded {
                        return self.error("second `conclude` clause");
                    }
                    law.conclusion = self.formula()?;
                    concluded = true;
                }
                _ => unreachable!(),
            }
        }
        self.end()?;
        if !concluded {
            return self.error("law has no `conclude` clause");
        }
        Ok(law)
    }
}

pub fn parse_sort(text: &str) -> Result<Sort, LawError> {
    let mut p = Parser::new(text)?;
    let s = p.sort()?;
    p.end()?;
    Ok(s)
}

pub fn parse_term(text: &str) -> Result<Term, LawError> {
    let mut p = Parser::new(text)?;
    let t = p.term()?;
    p.end()?;
    Ok(t)
}

pub fn parse_formula(text: &str) -> Result<Formula, LawError> {
    let mut p = Parser::new(text)?;
    let f = p.formula()?;
    p.end()?;
    Ok(f)
}

/// Parses a law and checks that every variable, definition and sort it uses
/// is declared.
pub fn parse_law(text: &str) -> Result<Law, LawError> {
    let mut p = Parser::new(text)?;
    let law = p.law()?;
    check_scope(&law)?;
    Ok(law)
}

fn check_scope(law: &Law) -> Result<(), LawError> {
    let mut names: BTreeSet<String> = BTreeSet::new();
    let mut sorts: BTreeSet<String> = law.sorts.iter().cloned().collect();
    for v in &law.vars {
        if !names.insert(v.name.clone()) {
            return Err(LawError::DuplicateDeclaration(v.name.clone()));
        }
        v.source.symbols(&mut sorts);
        v.target.symbols(&mut sorts);
    }
    let check_term = |t: &Term, names: &BTreeSet<String>| -> Result<(), LawError> {
        let mut used = BTreeSet::new();
        t.free_vars(&mut used);
        if let Some(u) = used.iter().find(|u| !names.contains(*u)) {
            return Err(LawError::UnknownIdentifier { kind: "relation", name: u.clone() });
        }
        let mut used = BTreeSet::new();
        t.sort_symbols(&mut used);
        if let Some(u) = used.iter().find(|u| !sorts.contains(*u)) {
            return Err(LawError::UnknownIdentifier { kind: "sort", name: u.clone() });
        }
        Ok(())
    };
    for d in &law.defs {
        check_term(&d.body, &names)?;
        if !names.insert(d.name.clone()) {
            return Err(LawError::DuplicateDeclaration(d.name.clone()));
        }
    }
    for a in law.assumptions.iter().chain(law.conclusion.atoms()) {
        for t in a.terms() {
            check_term(t, &names)?;
        }
    }
    Ok(())
}
