//! Finite Heyting algebras: the truth-value carriers of every relation.
//!
//! An algebra is built from a partial order; meet, join and the relative
//! pseudo-complement are computed once by exhaustive scan and stored as
//! lookup tables, so every relation operation downstream is table lookups.

use std::fmt;

use thiserror::Error;

/// Index of an element inside its [`HeytingAlgebra`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Elem(pub u8);

impl Elem {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("an algebra needs at least one element")]
    Empty,
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("order is not antisymmetric: `{0}` and `{1}` lie below each other")]
    NotAPartialOrder(String, String),
    #[error("not a lattice: `{0}` and `{1}` have no {2}")]
    NotALattice(String, String, &'static str),
    #[error("not distributive: {0} meet ({1} join {2}) differs from the distributed form")]
    NotDistributive(String, String, String),
    #[error("chain size must be at least 1")]
    InvalidSize,
    #[error("algebra has {0} elements, at most 255 are supported")]
    TooLarge(usize),
    #[error("cannot parse lattice builder `{0}`")]
    BadBuilder(String),
}

/// A finite Heyting algebra with precomputed operation tables.
#[derive(Clone, PartialEq, Eq)]
pub struct HeytingAlgebra {
    names: Vec<String>,
    leq: Vec<bool>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    imp: Vec<Elem>,
    complement: Vec<Option<Elem>>,
    bot: Elem,
    top: Elem,
}

impl fmt::Debug for HeytingAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HeytingAlgebra").field("elements", &self.names).finish()
    }
}

impl HeytingAlgebra {
    /// Builds the algebra whose order is the reflexive-transitive closure of
    /// `cover`.
    pub fn from_order<S: AsRef<str>>(elements: &[S], cover: &[(S, S)]) -> Result<Self, LatticeError> {
        let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        check_names(&names)?;
        let n = names.len();
        let lookup = |s: &str| {
            names
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| LatticeError::UnknownElement(s.to_string()))
        };
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (lo, hi) in cover {
            let (a, b) = (lookup(lo.as_ref())?, lookup(hi.as_ref())?);
            leq[a * n + b] = true;
        }
        // Warshall closure
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Self::from_leq(names, leq)
    }

    /// The linear order `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::InvalidSize);
        }
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Self::chain_named(&names)
    }

    /// A chain whose elements carry the given labels, listed bottom to top.
    pub fn chain_named<S: AsRef<str>>(labels: &[S]) -> Result<Self, LatticeError> {
        if labels.is_empty() {
            return Err(LatticeError::InvalidSize);
        }
        let names: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        check_names(&names)?;
        let n = names.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in i..n {
                leq[i * n + j] = true;
            }
        }
        Self::from_leq(names, leq)
    }

    /// The two-element Boolean algebra `0 < 1`.
    pub fn boolean() -> Self {
        Self::chain(2).expect("two-element chain")
    }

    /// Componentwise product of two algebras.
    pub fn product(l1: &HeytingAlgebra, l2: &HeytingAlgebra) -> Result<Self, LatticeError> {
        let short = l1.names.iter().chain(&l2.names).all(|s| s.chars().count() == 1);
        let mut names = Vec::with_capacity(l1.len() * l2.len());
        for a in &l1.names {
            for b in &l2.names {
                names.push(if short { format!("{a}{b}") } else { format!("({a},{b})") });
            }
        }
        check_names(&names)?;
        let (n1, n2) = (l1.len(), l2.len());
        let n = n1 * n2;
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[x * n + y] = l1.leq_idx(x / n2, y / n2) && l2.leq_idx(x % n2, y % n2);
            }
        }
        Self::from_leq(names, leq)
    }

    /// Parses the shorthand builders `chain:n`, `bool` and `prod(a,b)`.
    pub fn from_builder(spec: &str) -> Result<Self, LatticeError> {
        let s = spec.trim();
        if s == "bool" {
            return Ok(Self::boolean());
        }
        if let Some(n) = s.strip_prefix("chain:") {
            let n: usize = n.trim().parse().map_err(|_| LatticeError::BadBuilder(spec.to_string()))?;
            return Self::chain(n);
        }
        if let Some(inner) = s.strip_prefix("prod(").and_then(|r| r.strip_suffix(')')) {
            let mut depth = 0usize;
            for (i, c) in inner.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => depth = depth.saturating_sub(1),
                    ',' if depth == 0 => {
                        let a = Self::from_builder(&inner[..i])?;
                        let b = Self::from_builder(&inner[i + 1..])?;
                        return Self::product(&a, &b);
                    }
                    _ => {}
                }
            }
        }
        Err(LatticeError::BadBuilder(spec.to_string()))
    }

    fn from_leq(names: Vec<String>, leq: Vec<bool>) -> Result<Self, LatticeError> {
        let n = names.len();
        if n > 255 {
            return Err(LatticeError::TooLarge(n));
        }
        let le = |a: usize, b: usize| leq[a * n + b];
        for a in 0..n {
            for b in (a + 1)..n {
                if le(a, b) && le(b, a) {
                    return Err(LatticeError::NotAPartialOrder(names[a].clone(), names[b].clone()));
                }
            }
        }
        let mut meet = vec![Elem(0); n * n];
        let mut join = vec![Elem(0); n * n];
        for x in 0..n {
            for y in 0..n {
                let lower: Vec<usize> = (0..n).filter(|&z| le(z, x) && le(z, y)).collect();
                let glb = lower.iter().copied().find(|&m| lower.iter().all(|&z| le(z, m)));
                let upper: Vec<usize> = (0..n).filter(|&z| le(x, z) && le(y, z)).collect();
                let lub = upper.iter().copied().find(|&m| upper.iter().all(|&z| le(m, z)));
                match (glb, lub) {
                    (Some(g), Some(l)) => {
                        meet[x * n + y] = Elem(g as u8);
                        join[x * n + y] = Elem(l as u8);
                    }
                    (None, _) => {
                        return Err(LatticeError::NotALattice(names[x].clone(), names[y].clone(), "meet"))
                    }
                    (_, None) => {
                        return Err(LatticeError::NotALattice(names[x].clone(), names[y].clone(), "join"))
                    }
                }
            }
        }
        let bot = (0..n).find(|&b| (0..n).all(|x| le(b, x))).expect("finite lattice has a bottom");
        let top = (0..n).find(|&t| (0..n).all(|x| le(x, t))).expect("finite lattice has a top");

        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = meet[x * n + join[y * n + z].index()];
                    let rhs = join[meet[x * n + y].index() * n + meet[x * n + z].index()];
                    if lhs != rhs {
                        return Err(LatticeError::NotDistributive(
                            names[x].clone(),
                            names[y].clone(),
                            names[z].clone(),
                        ));
                    }
                }
            }
        }

        // x -> y is the join of every z with z meet x <= y
        let mut imp = vec![Elem(0); n * n];
        for x in 0..n {
            for y in 0..n {
                let mut acc = bot;
                for z in 0..n {
                    if le(meet[z * n + x].index(), y) {
                        acc = join[acc * n + z].index();
                    }
                }
                imp[x * n + y] = Elem(acc as u8);
            }
        }
        let complement = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| meet[x * n + y].index() == bot && join[x * n + y].index() == top)
                    .map(|y| Elem(y as u8))
            })
            .collect();

        let alg = HeytingAlgebra {
            names,
            leq,
            meet,
            join,
            imp,
            complement,
            bot: Elem(bot as u8),
            top: Elem(top as u8),
        };
        debug_assert!(alg.residuation_holds());
        Ok(alg)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.len()).map(|i| Elem(i as u8))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.names[e.index()]
    }

    pub fn elem(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name).map(|i| Elem(i as u8))
    }

    #[inline]
    pub fn bot(&self) -> Elem {
        self.bot
    }

    #[inline]
    pub fn top(&self) -> Elem {
        self.top
    }

    #[inline]
    fn leq_idx(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq_idx(a.index(), b.index())
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a.index() * self.len() + b.index()]
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a.index() * self.len() + b.index()]
    }

    /// Relative pseudo-complement `a -> b`.
    #[inline]
    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.imp[a.index() * self.len() + b.index()]
    }

    /// Pseudo-complement `a -> bot`.
    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.imp(a, self.bot)
    }

    /// The lattice complement of `a`, if it has one.
    pub fn complement(&self, a: Elem) -> Option<Elem> {
        self.complement[a.index()]
    }

    pub fn is_crisp(&self, a: Elem) -> bool {
        a == self.bot || a == self.top
    }

    /// Every element has a complement.
    pub fn is_boolean(&self) -> bool {
        self.complement.iter().all(Option::is_some)
    }

    /// Exhaustive check of `x meet z <= y  <=>  z <= x -> y`.
    pub fn residuation_holds(&self) -> bool {
        let all: Vec<Elem> = self.elements().collect();
        all.iter().all(|&x| {
            all.iter().all(|&y| {
                all.iter().all(|&z| self.leq(self.meet(x, z), y) == self.leq(z, self.imp(x, y)))
            })
        })
    }

    /// Same order up to relabelling, with elements matched by position.
    pub fn same_shape(&self, other: &HeytingAlgebra) -> bool {
        self.leq == other.leq
    }
}

fn check_names(names: &[String]) -> Result<(), LatticeError> {
    if names.is_empty() {
        return Err(LatticeError::Empty);
    }
    for (i, a) in names.iter().enumerate() {
        if names[..i].contains(a) {
            return Err(LatticeError::DuplicateElement(a.clone()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(l: &HeytingAlgebra, s: &str) -> Elem {
        l.elem(s).unwrap()
    }

    /// Residuation scan done the slow way: the largest z with x meet z <= y.
    fn imp_oracle(l: &HeytingAlgebra, x: Elem, y: Elem) -> Elem {
        let ok: Vec<Elem> = l.elements().filter(|&z| l.leq(l.meet(x, z), y)).collect();
        *ok.iter().find(|&&m| ok.iter().all(|&z| l.leq(z, m))).unwrap()
    }

    fn assert_heyting_laws(l: &HeytingAlgebra) {
        assert!(l.residuation_holds());
        for x in l.elements() {
            assert_eq!(l.imp(x, x), l.top());
            assert_eq!(l.imp(l.top(), x), x);
            assert!(l.leq(l.bot(), x) && l.leq(x, l.top()));
            for y in l.elements() {
                assert!(l.leq(l.meet(x, l.imp(x, y)), y));
                assert_eq!(l.imp(x, y), imp_oracle(l, x, y));
            }
        }
    }

    #[test]
    fn three_chain_from_cover() {
        let l = HeytingAlgebra::from_order(&["0", "u", "1"], &[("0", "u"), ("u", "1")]).unwrap();
        assert_eq!(l.imp(el(&l, "u"), el(&l, "0")), el(&l, "0"));
        assert_eq!(l.imp(el(&l, "0"), el(&l, "u")), el(&l, "1"));
        assert_eq!(l.imp(el(&l, "u"), el(&l, "1")), el(&l, "1"));
        assert_heyting_laws(&l);
        assert!(!l.is_boolean());
        assert_eq!(l.complement(el(&l, "u")), None);
    }

    #[test]
    fn two_element_is_classical() {
        let l = HeytingAlgebra::from_order(&["0", "1"], &[("0", "1")]).unwrap();
        let (f, t) = (el(&l, "0"), el(&l, "1"));
        assert_eq!(l.imp(f, f), t);
        assert_eq!(l.imp(f, t), t);
        assert_eq!(l.imp(t, f), f);
        assert_eq!(l.imp(t, t), t);
        assert!(l.is_boolean());
        assert_eq!(l, HeytingAlgebra::boolean());
    }

    #[test]
    fn pentagon_and_diamond_are_rejected() {
        let n5 = HeytingAlgebra::from_order(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
        );
        assert!(matches!(n5, Err(LatticeError::NotDistributive(..))));
        let m3 = HeytingAlgebra::from_order(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        );
        assert!(matches!(m3, Err(LatticeError::NotDistributive(..))));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            HeytingAlgebra::from_order(&["0", "0"], &[]),
            Err(LatticeError::DuplicateElement("0".into()))
        );
        assert_eq!(
            HeytingAlgebra::from_order(&["0", "1"], &[("0", "2")]),
            Err(LatticeError::UnknownElement("2".into()))
        );
        assert!(matches!(
            HeytingAlgebra::from_order(&["a", "b"], &[]),
            Err(LatticeError::NotALattice(..))
        ));
        assert!(matches!(
            HeytingAlgebra::from_order(&["a", "b"], &[("a", "b"), ("b", "a")]),
            Err(LatticeError::NotAPartialOrder(..))
        ));
        assert_eq!(HeytingAlgebra::chain(0), Err(LatticeError::InvalidSize));
        let empty: [&str; 0] = [];
        assert_eq!(HeytingAlgebra::from_order(&empty, &[]), Err(LatticeError::Empty));
    }

    #[test]
    fn chains() {
        assert_eq!(HeytingAlgebra::chain(2).unwrap(), HeytingAlgebra::boolean());
        let c4 = HeytingAlgebra::chain(4).unwrap();
        assert_eq!(c4.imp(Elem(2), Elem(1)), Elem(1));
        for n in 1..=5 {
            let c = HeytingAlgebra::chain(n).unwrap();
            assert_heyting_laws(&c);
            for x in c.elements() {
                for y in c.elements() {
                    let expect = if x <= y { c.top() } else { y };
                    assert_eq!(c.imp(x, y), expect);
                }
            }
            let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            let cover: Vec<(String, String)> =
                (1..n).map(|i| ((i - 1).to_string(), i.to_string())).collect();
            assert_eq!(HeytingAlgebra::from_order(&labels, &cover).unwrap(), c);
        }
    }

    #[test]
    fn products() {
        let b = HeytingAlgebra::boolean();
        let sq = HeytingAlgebra::product(&b, &b).unwrap();
        assert_eq!(sq.len(), 4);
        assert!(sq.is_boolean());
        assert_heyting_laws(&sq);
        assert_eq!(sq.imp(el(&sq, "10"), el(&sq, "01")), el(&sq, "01"));
        assert_eq!(sq.imp(el(&sq, "11"), el(&sq, "10")), el(&sq, "10"));

        let c3 = HeytingAlgebra::chain(3).unwrap();
        let unit = HeytingAlgebra::chain(1).unwrap();
        assert!(HeytingAlgebra::product(&unit, &c3).unwrap().same_shape(&c3));

        let six = HeytingAlgebra::product(&b, &c3).unwrap();
        assert_eq!(six.len(), 6);
        assert_heyting_laws(&six);
    }

    #[test]
    fn builders() {
        assert_eq!(HeytingAlgebra::from_builder("bool").unwrap(), HeytingAlgebra::boolean());
        assert_eq!(HeytingAlgebra::from_builder("chain:3").unwrap(), HeytingAlgebra::chain(3).unwrap());
        let sq = HeytingAlgebra::from_builder("prod(bool, bool)").unwrap();
        assert_eq!(sq.len(), 4);
        let nested = HeytingAlgebra::from_builder("prod(prod(bool,bool),chain:3)").unwrap();
        assert_eq!(nested.len(), 12);
        assert!(HeytingAlgebra::from_builder("chain:x").is_err());
        assert!(HeytingAlgebra::from_builder("lattice").is_err());
    }
}
