use std::sync::Arc;

use crate::lattice::HeytingAlgebra;
use crate::relcore::{Obj, Rel, RelError};

use super::StructureError;

/// A relational product `A×B` with crisp projections.
#[derive(Debug, Clone)]
pub struct ProductWitness {
    pub left: Arc<Obj>,
    pub right: Arc<Obj>,
    pub obj: Arc<Obj>,
    pub pi: Rel,
    pub rho: Rel,
}

pub(crate) fn product_name(a: &str, b: &str) -> String {
    let wrap = |s: &str| if s.contains('*') { format!("({s})") } else { s.to_string() };
    format!("{}*{}", wrap(a), wrap(b))
}

impl ProductWitness {
    /// Pair carrier in lexicographic order; the four product axioms are
    /// verified before returning.
    pub fn new(alg: &Arc<HeytingAlgebra>, a: &Arc<Obj>, b: &Arc<Obj>) -> Result<Self, StructureError> {
        let mut carrier = Vec::with_capacity(a.size() * b.size());
        for x in a.carrier() {
            for y in b.carrier() {
                carrier.push(format!("({x},{y})"));
            }
        }
        let obj = Obj::new(product_name(a.name(), b.name()), carrier)?;
        let m = b.size();
        let crisp = |hit: bool| if hit { alg.top() } else { alg.bot() };
        let pi = Rel::from_fn(alg, &obj, a, |p, x| crisp(p / m == x));
        let rho = Rel::from_fn(alg, &obj, b, |p, y| crisp(p % m == y));
        let w = ProductWitness { left: a.clone(), right: b.clone(), obj, pi, rho };
        w.verify(alg)?;
        Ok(w)
    }

    fn verify(&self, alg: &Arc<HeytingAlgebra>) -> Result<(), StructureError> {
        let (pi, rho) = (&self.pi, &self.rho);
        if !pi.converse().compose(pi)?.leq(&Rel::identity(alg, &self.left))? {
            return Err(StructureError::AxiomViolation("pi^T;pi <= I".into()));
        }
        if !rho.converse().compose(rho)?.leq(&Rel::identity(alg, &self.right))? {
            return Err(StructureError::AxiomViolation("rho^T;rho <= I".into()));
        }
        let sharp = pi.compose(&pi.converse())?.meet(&rho.compose(&rho.converse())?)?;
        if sharp != Rel::identity(alg, &self.obj) {
            return Err(StructureError::AxiomViolation("pi;pi^T meet rho;rho^T = I".into()));
        }
        if pi.converse().compose(rho)? != Rel::top(alg, &self.left, &self.right) {
            return Err(StructureError::AxiomViolation("pi^T;rho = top".into()));
        }
        Ok(())
    }

    fn mismatch(&self, op: &'static str, a: &Obj, b: &Obj) -> StructureError {
        StructureError::Rel(RelError::TypeMismatch {
            op,
            left: format!("{}*{}", self.left.name(), self.right.name()),
            right: format!("{}*{}", a.name(), b.name()),
        })
    }

    /// `Q◁R` for `Q: C -> A`, `R: C -> B`.
    pub fn fork(&self, q: &Rel, r: &Rel) -> Result<Rel, StructureError> {
        if **q.target() != *self.left || **r.target() != *self.right {
            return Err(self.mismatch("fork", q.target(), r.target()));
        }
        Ok(q.compose(&self.pi.converse())?.meet(&r.compose(&self.rho.converse())?)?)
    }

    /// `Q▷S` for `Q: A -> C`, `S: B -> C`.
    pub fn pair(&self, q: &Rel, s: &Rel) -> Result<Rel, StructureError> {
        if **q.source() != *self.left || **s.source() != *self.right {
            return Err(self.mismatch("pair", q.source(), s.source()));
        }
        Ok(self.pi.compose(q)?.meet(&self.rho.compose(s)?)?)
    }

    /// `Q⊗T` for `Q: A -> C`, `T: B -> D`, with `src = A×B`, `tgt = C×D`.
    pub fn tensor(src: &ProductWitness, tgt: &ProductWitness, q: &Rel, t: &Rel) -> Result<Rel, StructureError> {
        if **q.source() != *src.left || **t.source() != *src.right {
            return Err(src.mismatch("tensor", q.source(), t.source()));
        }
        if **q.target() != *tgt.left || **t.target() != *tgt.right {
            return Err(tgt.mismatch("tensor", q.target(), t.target()));
        }
        let l = src.pi.compose(q)?.compose(&tgt.pi.converse())?;
        let r = src.rho.compose(t)?.compose(&tgt.rho.converse())?;
        Ok(l.meet(&r)?)
    }
}
