//! L-valued relations between finite objects, stored as dense matrices.
//!
//! Composition is the sup-of-meets product and the residuals are the
//! inf-of-implications products; everything else is pointwise.

mod predicates;

use std::fmt;
use std::sync::Arc;

use serde::ser::{Serialize, SerializeStruct, Serializer};
use thiserror::Error;

use crate::lattice::{Elem, HeytingAlgebra};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RelError {
    #[error("type mismatch in {op}: {left} vs {right}")]
    TypeMismatch { op: &'static str, left: String, right: String },
    #[error("relations live over different Heyting algebras")]
    AlgebraMismatch,
    #[error("object `{0}` has an empty carrier")]
    EmptyCarrier(String),
    #[error("object `{0}` lists carrier element `{1}` twice")]
    DuplicateCarrierElement(String, String),
    #[error("matrix for {sort} should be {rows}x{cols}")]
    Dimensions { sort: String, rows: usize, cols: usize },
    #[error("`{0}` is not an element of the algebra")]
    UnknownElement(String),
}

/// A named finite carrier set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Obj {
    name: String,
    carrier: Vec<String>,
}

impl Obj {
    pub fn new<S: Into<String>>(name: S, carrier: Vec<String>) -> Result<Arc<Obj>, RelError> {
        let name = name.into();
        if carrier.is_empty() {
            return Err(RelError::EmptyCarrier(name));
        }
        for (i, c) in carrier.iter().enumerate() {
            if carrier[..i].contains(c) {
                return Err(RelError::DuplicateCarrierElement(name, c.clone()));
            }
        }
        Ok(Arc::new(Obj { name, carrier }))
    }

    /// An object with `n` generated carrier labels.
    pub fn sized<S: Into<String>>(name: S, n: usize) -> Result<Arc<Obj>, RelError> {
        let name = name.into();
        let stem = name.to_lowercase();
        Obj::new(name, (0..n).map(|i| format!("{stem}{i}")).collect())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn carrier(&self) -> &[String] {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn index_of(&self, element: &str) -> Option<usize> {
        self.carrier.iter().position(|c| c == element)
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

pub(crate) fn same_algebra(a: &Arc<HeytingAlgebra>, b: &Arc<HeytingAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// An L-valued relation `source -> target`.
#[derive(Clone)]
pub struct Rel {
    alg: Arc<HeytingAlgebra>,
    source: Arc<Obj>,
    target: Arc<Obj>,
    entries: Vec<Elem>,
}

impl PartialEq for Rel {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.entries == other.entries
            && same_algebra(&self.alg, &other.alg)
    }
}

impl Eq for Rel {}

impl fmt::Debug for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rel {} -> {} = {}", self.source.name, self.target.name, self.inline())
    }
}

/// Rows in parentheses, one per line: `(0 u)`.
impl fmt::Display for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows() {
            if i > 0 {
                f.write_str("\n")?;
            }
            f.write_str(&self.row_string(i))?;
        }
        Ok(())
    }
}

impl Serialize for Rel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let matrix: Vec<Vec<&str>> = (0..self.rows())
            .map(|i| (0..self.cols()).map(|j| self.alg.name(self.get(i, j))).collect())
            .collect();
        let mut st = serializer.serialize_struct("Rel", 3)?;
        st.serialize_field("from", self.source.name())?;
        st.serialize_field("to", self.target.name())?;
        st.serialize_field("matrix", &matrix)?;
        st.end()
    }
}

fn sort_string(a: &Obj, b: &Obj) -> String {
    format!("{} -> {}", a.name, b.name)
}

impl Rel {
    pub fn from_fn(
        alg: &Arc<HeytingAlgebra>,
        source: &Arc<Obj>,
        target: &Arc<Obj>,
        mut f: impl FnMut(usize, usize) -> Elem,
    ) -> Rel {
        let (n, m) = (source.size(), target.size());
        let mut entries = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                entries.push(f(i, j));
            }
        }
        Rel { alg: alg.clone(), source: source.clone(), target: target.clone(), entries }
    }

    pub fn from_entries(
        alg: &Arc<HeytingAlgebra>,
        source: &Arc<Obj>,
        target: &Arc<Obj>,
        entries: Vec<Elem>,
    ) -> Result<Rel, RelError> {
        if entries.len() != source.size() * target.size()
            || entries.iter().any(|e| e.index() >= alg.len())
        {
            return Err(RelError::Dimensions {
                sort: sort_string(source, target),
                rows: source.size(),
                cols: target.size(),
            });
        }
        Ok(Rel { alg: alg.clone(), source: source.clone(), target: target.clone(), entries })
    }

    /// Builds a relation from rows of element names.
    pub fn from_names<S: AsRef<str>>(
        alg: &Arc<HeytingAlgebra>,
        source: &Arc<Obj>,
        target: &Arc<Obj>,
        rows: &[Vec<S>],
    ) -> Result<Rel, RelError> {
        if rows.len() != source.size() || rows.iter().any(|r| r.len() != target.size()) {
            return Err(RelError::Dimensions {
                sort: sort_string(source, target),
                rows: source.size(),
                cols: target.size(),
            });
        }
        let mut entries = Vec::with_capacity(source.size() * target.size());
        for row in rows {
            for name in row {
                let name = name.as_ref();
                entries.push(alg.elem(name).ok_or_else(|| RelError::UnknownElement(name.to_string()))?);
            }
        }
        Ok(Rel { alg: alg.clone(), source: source.clone(), target: target.clone(), entries })
    }

    pub fn identity(alg: &Arc<HeytingAlgebra>, a: &Arc<Obj>) -> Rel {
        Rel::from_fn(alg, a, a, |i, j| if i == j { alg.top() } else { alg.bot() })
    }

    pub fn bottom(alg: &Arc<HeytingAlgebra>, a: &Arc<Obj>, b: &Arc<Obj>) -> Rel {
        Rel::from_fn(alg, a, b, |_, _| alg.bot())
    }

    pub fn top(alg: &Arc<HeytingAlgebra>, a: &Arc<Obj>, b: &Arc<Obj>) -> Rel {
        Rel::from_fn(alg, a, b, |_, _| alg.top())
    }

    pub fn algebra(&self) -> &Arc<HeytingAlgebra> {
        &self.alg
    }

    pub fn source(&self) -> &Arc<Obj> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Obj> {
        &self.target
    }

    pub fn rows(&self) -> usize {
        self.source.size()
    }

    pub fn cols(&self) -> usize {
        self.target.size()
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.entries[i * self.cols() + j]
    }

    pub fn sort_string(&self) -> String {
        sort_string(&self.source, &self.target)
    }

    pub fn is_square(&self) -> bool {
        self.source == self.target
    }

    /// Every entry is bottom or top.
    pub fn is_crisp(&self) -> bool {
        self.entries.iter().all(|&e| self.alg.is_crisp(e))
    }

    pub fn row_string(&self, i: usize) -> String {
        let cells: Vec<&str> = (0..self.cols()).map(|j| self.alg.name(self.get(i, j))).collect();
        format!("({})", cells.join(" "))
    }

    /// All rows on one line.
    pub fn inline(&self) -> String {
        (0..self.rows()).map(|i| self.row_string(i)).collect::<Vec<_>>().join(" ")
    }

    /// Same data, relabelled endpoints. Used when two constructions build
    /// isomorphic objects under different names.
    pub fn retyped(&self, source: &Arc<Obj>, target: &Arc<Obj>) -> Result<Rel, RelError> {
        Rel::from_entries(&self.alg, source, target, self.entries.clone())
    }

    fn check_algebra(&self, other: &Rel) -> Result<(), RelError> {
        if same_algebra(&self.alg, &other.alg) {
            Ok(())
        } else {
            Err(RelError::AlgebraMismatch)
        }
    }

    fn same_sort(&self, other: &Rel, op: &'static str) -> Result<(), RelError> {
        self.check_algebra(other)?;
        if self.source != other.source || self.target != other.target {
            return Err(RelError::TypeMismatch { op, left: self.sort_string(), right: other.sort_string() });
        }
        Ok(())
    }

    fn pointwise(&self, other: &Rel, op: &'static str, f: impl Fn(Elem, Elem) -> Elem) -> Result<Rel, RelError> {
        self.same_sort(other, op)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| f(a, b)).collect();
        Ok(Rel { alg: self.alg.clone(), source: self.source.clone(), target: self.target.clone(), entries })
    }

    pub fn meet(&self, other: &Rel) -> Result<Rel, RelError> {
        let alg = self.alg.clone();
        self.pointwise(other, "meet", |a, b| alg.meet(a, b))
    }

    pub fn join(&self, other: &Rel) -> Result<Rel, RelError> {
        let alg = self.alg.clone();
        self.pointwise(other, "join", |a, b| alg.join(a, b))
    }

    /// Pointwise relative pseudo-complement `self -> other`.
    pub fn imp(&self, other: &Rel) -> Result<Rel, RelError> {
        let alg = self.alg.clone();
        self.pointwise(other, "implication", |a, b| alg.imp(a, b))
    }

    /// Pseudo-complement `self -> bottom`.
    pub fn star(&self) -> Rel {
        let entries = self.entries.iter().map(|&a| self.alg.neg(a)).collect();
        Rel { alg: self.alg.clone(), source: self.source.clone(), target: self.target.clone(), entries }
    }

    pub fn converse(&self) -> Rel {
        let (n, m) = (self.rows(), self.cols());
        let mut entries = Vec::with_capacity(n * m);
        for j in 0..m {
            for i in 0..n {
                entries.push(self.entries[i * m + j]);
            }
        }
        Rel { alg: self.alg.clone(), source: self.target.clone(), target: self.source.clone(), entries }
    }

    /// `(self ; other)(a,c) = join_b self(a,b) meet other(b,c)`.
    pub fn compose(&self, other: &Rel) -> Result<Rel, RelError> {
        self.check_algebra(other)?;
        if self.target != other.source {
            return Err(RelError::TypeMismatch {
                op: "composition",
                left: self.sort_string(),
                right: other.sort_string(),
            });
        }
        let alg = &self.alg;
        let (n, k, m) = (self.rows(), self.cols(), other.cols());
        let mut entries = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                let mut acc = alg.bot();
                for l in 0..k {
                    acc = alg.join(acc, alg.meet(self.entries[i * k + l], other.entries[l * m + j]));
                }
                entries.push(acc);
            }
        }
        Ok(Rel { alg: alg.clone(), source: self.source.clone(), target: other.target.clone(), entries })
    }

    /// Left residual `self \ other` for `self: A -> B`, `other: A -> C`:
    /// `(b,c) = meet_a self(a,b) -> other(a,c)`.
    pub fn lres(&self, other: &Rel) -> Result<Rel, RelError> {
        self.check_algebra(other)?;
        if self.source != other.source {
            return Err(RelError::TypeMismatch {
                op: "left residual",
                left: self.sort_string(),
                right: other.sort_string(),
            });
        }
        let alg = &self.alg;
        let (k, n, m) = (self.rows(), self.cols(), other.cols());
        let mut entries = Vec::with_capacity(n * m);
        for b in 0..n {
            for c in 0..m {
                let mut acc = alg.top();
                for a in 0..k {
                    acc = alg.meet(acc, alg.imp(self.entries[a * n + b], other.entries[a * m + c]));
                }
                entries.push(acc);
            }
        }
        Ok(Rel { alg: alg.clone(), source: self.target.clone(), target: other.target.clone(), entries })
    }

    /// Right residual `self / other` for `self: A -> C`, `other: B -> C`:
    /// `(a,b) = meet_c other(b,c) -> self(a,c)`.
    pub fn rres(&self, other: &Rel) -> Result<Rel, RelError> {
        self.check_algebra(other)?;
        if self.target != other.target {
            return Err(RelError::TypeMismatch {
                op: "right residual",
                left: self.sort_string(),
                right: other.sort_string(),
            });
        }
        let alg = &self.alg;
        let (n, m, k) = (self.rows(), other.rows(), self.cols());
        let mut entries = Vec::with_capacity(n * m);
        for a in 0..n {
            for b in 0..m {
                let mut acc = alg.top();
                for c in 0..k {
                    acc = alg.meet(acc, alg.imp(other.entries[b * k + c], self.entries[a * k + c]));
                }
                entries.push(acc);
            }
        }
        Ok(Rel { alg: alg.clone(), source: self.source.clone(), target: other.source.clone(), entries })
    }

    /// Symmetric quotient `(self \ other) meet (self^T / other^T)`.
    pub fn syq(&self, other: &Rel) -> Result<Rel, RelError> {
        let left = self.lres(other)?;
        let right = self.converse().rres(&other.converse())?;
        left.meet(&right)
    }

    /// `dom R = I meet R;R^T`, a partial identity on the source.
    pub fn dom(&self) -> Rel {
        let rrt = self.compose(&self.converse()).expect("R;R^T is well typed");
        Rel::identity(&self.alg, &self.source).meet(&rrt).expect("same sort")
    }

    pub fn leq(&self, other: &Rel) -> Result<bool, RelError> {
        self.same_sort(other, "inclusion")?;
        Ok(self.entries.iter().zip(&other.entries).all(|(&a, &b)| self.alg.leq(a, b)))
    }

    /// Upper bounds `ubd_E(X) = X^T \ E` for `E: A -> A`, `X: B -> A`.
    pub fn ubd(e: &Rel, x: &Rel) -> Result<Rel, RelError> {
        bound_sorts(e, x, "ubd")?;
        x.converse().lres(e)
    }

    /// Lower bounds `lbd_E(X) = X^T \ E^T`.
    pub fn lbd(e: &Rel, x: &Rel) -> Result<Rel, RelError> {
        bound_sorts(e, x, "lbd")?;
        x.converse().lres(&e.converse())
    }

    /// `lub_E(X) = ubd_E(X) meet lbd_E(ubd_E(X))`.
    pub fn lub(e: &Rel, x: &Rel) -> Result<Rel, RelError> {
        let u = Rel::ubd(e, x)?;
        u.meet(&Rel::lbd(e, &u)?)
    }

    /// `glb_E(X) = lbd_E(X) meet ubd_E(lbd_E(X))`.
    pub fn glb(e: &Rel, x: &Rel) -> Result<Rel, RelError> {
        let l = Rel::lbd(e, x)?;
        l.meet(&Rel::ubd(e, &l)?)
    }
}

fn bound_sorts(e: &Rel, x: &Rel, op: &'static str) -> Result<(), RelError> {
    e.check_algebra(x)?;
    if !e.is_square() || x.target != e.source {
        return Err(RelError::TypeMismatch { op, left: e.sort_string(), right: x.sort_string() });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn chain3() -> Arc<HeytingAlgebra> {
        Arc::new(HeytingAlgebra::from_order(&["0", "u", "1"], &[("0", "u"), ("u", "1")]).unwrap())
    }

    fn rel(alg: &Arc<HeytingAlgebra>, a: &Arc<Obj>, b: &Arc<Obj>, rows: &[&[&str]]) -> Rel {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        Rel::from_names(alg, a, b, &rows).unwrap()
    }

    /// Every matrix of the given sort over the algebra.
    fn all_rels(alg: &Arc<HeytingAlgebra>, a: &Arc<Obj>, b: &Arc<Obj>) -> Vec<Rel> {
        let cells = a.size() * b.size();
        let base = alg.len();
        let total = base.pow(cells as u32);
        (0..total)
            .map(|mut code| {
                let mut entries = vec![Elem(0); cells];
                for slot in entries.iter_mut().rev() {
                    *slot = Elem((code % base) as u8);
                    code /= base;
                }
                Rel::from_entries(alg, a, b, entries).unwrap()
            })
            .collect()
    }

    #[test]
    fn constants() {
        let b = Arc::new(HeytingAlgebra::boolean());
        let two = Obj::sized("A", 2).unwrap();
        let one = Obj::sized("U", 1).unwrap();
        assert_eq!(Rel::identity(&b, &two).to_string(), "(1 0)\n(0 1)");
        assert_eq!(Rel::bottom(&b, &one, &two).to_string(), "(0 0)");
        let l = chain3();
        assert_eq!(Rel::top(&l, &one, &two).to_string(), "(1 1)");
    }

    #[test]
    fn star_and_join() {
        let l = chain3();
        let a = Obj::sized("A", 1).unwrap();
        let b = Obj::sized("B", 2).unwrap();
        let q = rel(&l, &a, &b, &[&["u", "0"]]);
        assert_eq!(q.star().to_string(), "(0 1)");
        assert_eq!(q.star().star().to_string(), "(1 0)");
        assert_eq!(Rel::bottom(&l, &a, &b).star(), Rel::top(&l, &a, &b));
        assert_eq!(Rel::top(&l, &a, &b).star(), Rel::bottom(&l, &a, &b));
        let p = rel(&l, &a, &b, &[&["0", "u"]]);
        assert_eq!(p.join(&q).unwrap().to_string(), "(u u)");
    }

    #[test]
    fn converse_and_compose() {
        let l = chain3();
        let a = Obj::sized("A", 1).unwrap();
        let b = Obj::sized("B", 2).unwrap();
        let c = rel(&l, &b, &b, &[&["0", "1"], &["0", "0"]]);
        assert_eq!(c.converse().to_string(), "(0 0)\n(1 0)");
        assert_eq!(c.converse().converse(), c);
        assert_eq!(Rel::identity(&l, &b).converse(), Rel::identity(&l, &b));
        let lub = rel(&l, &a, &b, &[&["0", "1"]]);
        assert_eq!(lub.compose(&c.converse()).unwrap().to_string(), "(1 0)");
        let x = rel(&l, &a, &b, &[&["0", "u"]]);
        assert_eq!(x.compose(&c.converse()).unwrap().to_string(), "(u 0)");
        assert_eq!(Rel::identity(&l, &a).compose(&x).unwrap(), x);
        let q = rel(&l, &b, &b, &[&["u", "0"], &["1", "u"]]);
        let lhs = q.join(&c).unwrap().converse();
        assert_eq!(lhs, q.converse().join(&c.converse()).unwrap());
        assert!(matches!(x.compose(&x), Err(RelError::TypeMismatch { .. })));
    }

    #[test]
    fn residuals() {
        let l = chain3();
        let a = Obj::sized("A", 1).unwrap();
        let b = Obj::sized("B", 2).unwrap();
        let x = rel(&l, &a, &b, &[&["0", "u"]]);
        let e = rel(&l, &b, &b, &[&["1", "1"], &["0", "1"]]);
        assert_eq!(x.converse().lres(&e).unwrap().to_string(), "(0 1)");
        assert_eq!(Rel::identity(&l, &b).lres(&e).unwrap(), e);
        assert_eq!(e.rres(&Rel::identity(&l, &b)).unwrap(), e);
    }

    #[test]
    fn rres_matches_converse_route() {
        let l = chain3();
        let b = Obj::sized("B", 2).unwrap();
        let all = all_rels(&l, &b, &b);
        for s in all.iter().step_by(7) {
            for r in all.iter().step_by(5) {
                let direct = s.rres(r).unwrap();
                let via = r.converse().lres(&s.converse()).unwrap().converse();
                assert_eq!(direct, via);
            }
        }
    }

    #[test]
    fn adjunctions_exhaustive_boolean() {
        let l = Arc::new(HeytingAlgebra::boolean());
        let b = Obj::sized("B", 2).unwrap();
        let all = all_rels(&l, &b, &b);
        assert_eq!(all.len(), 16);
        for q in &all {
            for r in &all {
                let lr = q.lres(r).unwrap();
                let rr = r.rres(q).unwrap();
                let sq = q.syq(r).unwrap();
                for x in &all {
                    assert_eq!(x.leq(&lr).unwrap(), q.compose(x).unwrap().leq(r).unwrap());
                    assert_eq!(x.compose(q).unwrap().leq(r).unwrap(), x.leq(&rr).unwrap());
                    let both = q.compose(x).unwrap().leq(r).unwrap()
                        && r.compose(&x.converse()).unwrap().leq(q).unwrap();
                    assert_eq!(x.leq(&sq).unwrap(), both);
                }
            }
        }
    }

    #[test]
    fn syq_examples() {
        let b = Arc::new(HeytingAlgebra::boolean());
        let one = Obj::sized("A", 1).unwrap();
        let pow = Obj::sized("P", 2).unwrap();
        let eps = rel(&b, &one, &pow, &[&["0", "1"]]);
        assert_eq!(eps.syq(&eps).unwrap(), Rel::identity(&b, &pow));
        let two = Obj::sized("B", 2).unwrap();
        assert_eq!(
            Rel::bottom(&b, &two, &one).syq(&Rel::bottom(&b, &two, &pow)).unwrap(),
            Rel::top(&b, &one, &pow)
        );
        let q = rel(&b, &two, &two, &[&["1", "0"], &["1", "1"]]);
        let r = rel(&b, &two, &two, &[&["0", "1"], &["1", "1"]]);
        assert_eq!(q.syq(&r).unwrap().converse(), r.syq(&q).unwrap());
    }

    #[test]
    fn domains() {
        let l = chain3();
        let a = Obj::sized("A", 1).unwrap();
        let b = Obj::sized("B", 2).unwrap();
        let x = rel(&l, &a, &b, &[&["0", "u"]]);
        assert_eq!(x.dom().to_string(), "(u)");
        assert_eq!(x.dom().compose(&x).unwrap(), x);
        assert_eq!(Rel::bottom(&l, &b, &a).dom(), Rel::bottom(&l, &b, &b));
        let f = rel(&l, &b, &a, &[&["1"], &["1"]]);
        assert_eq!(f.dom(), Rel::identity(&l, &b));
    }

    #[test]
    fn bounds_on_three_chain_model() {
        let l = chain3();
        let a = Obj::sized("A", 1).unwrap();
        let b = Obj::sized("B", 2).unwrap();
        let c = rel(&l, &b, &b, &[&["0", "1"], &["0", "0"]]);
        let e = Rel::identity(&l, &b).join(&c).unwrap();
        let x = rel(&l, &a, &b, &[&["0", "u"]]);
        let ubd = Rel::ubd(&e, &x).unwrap();
        assert_eq!(ubd.to_string(), "(0 1)");
        assert_eq!(Rel::lbd(&e, &ubd).unwrap().to_string(), "(1 1)");
        assert_eq!(Rel::lub(&e, &x).unwrap().to_string(), "(0 1)");
        assert_eq!(Rel::ubd(&e, &Rel::bottom(&l, &a, &b)).unwrap(), Rel::top(&l, &a, &b));
        assert!(matches!(Rel::ubd(&x, &x), Err(RelError::TypeMismatch { .. })));
    }

    #[test]
    fn crisp_lub_matches_order_theory() {
        let l = Arc::new(HeytingAlgebra::boolean());
        let a = Obj::sized("A", 1).unwrap();
        let b = Obj::sized("B", 3).unwrap();
        // 0 < 1 < 2
        let e = Rel::from_fn(&l, &b, &b, |i, j| if i <= j { l.top() } else { l.bot() });
        let x = rel(&l, &a, &b, &[&["1", "1", "0"]]);
        assert_eq!(Rel::lub(&e, &x).unwrap().to_string(), "(0 1 0)");
        assert_eq!(Rel::glb(&e, &x).unwrap().to_string(), "(1 0 0)");
    }

    #[test]
    fn mismatches() {
        let l = chain3();
        let b = Arc::new(HeytingAlgebra::boolean());
        let a = Obj::sized("A", 1).unwrap();
        let two = Obj::sized("B", 2).unwrap();
        let p = Rel::top(&l, &a, &two);
        let q = Rel::top(&b, &a, &two);
        assert_eq!(p.meet(&q), Err(RelError::AlgebraMismatch));
        assert!(matches!(p.meet(&Rel::top(&l, &two, &a)), Err(RelError::TypeMismatch { .. })));
        assert!(matches!(Obj::new("E", vec![]), Err(RelError::EmptyCarrier(_))));
        assert!(matches!(
            Obj::new("D", vec!["x".into(), "x".into()]),
            Err(RelError::DuplicateCarrierElement(..))
        ));
        assert!(matches!(
            Rel::from_names(&l, &a, &two, &[vec!["0", "v"]]),
            Err(RelError::UnknownElement(_))
        ));
        assert!(matches!(Rel::from_names(&l, &a, &two, &[vec!["0"]]), Err(RelError::Dimensions { .. })));
    }
}
