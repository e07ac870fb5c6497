//! Categorical constructions over finite carriers: the unit, relational
//! products, relational powers, splittings, and the structure checkers for
//! abelian groups and real-number-object candidates.

mod group;
mod power;
mod product;
mod rno;
mod split;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::lattice::HeytingAlgebra;
use crate::relcore::{Obj, Rel, RelError};

pub use group::{cyclic_group, group_check, is_abelian_group, CheckItem, GroupCandidate, GroupReport};
pub use power::{NePowerChecks, NePowerWitness, PowerChecks, PowerWitness, Regime};
pub use product::ProductWitness;
pub use rno::{rno_axioms_hold, rno_check, Derived, RnoCandidate, RnoReport, Z_DEFINITION};
pub use split::{split, Splitting};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error(transparent)]
    Rel(#[from] RelError),
    #[error("axiom violated by construction: {0}")]
    AxiomViolation(String),
    #[error("no product registered for {0}")]
    MissingProduct(String),
    #[error("power of `{object}` would have {size} elements (bound {bound})")]
    PowerTooLarge { object: String, size: u128, bound: u64 },
    #[error("relation is not a partial equivalence")]
    NotPer,
    #[error("relation has entries other than bottom and top")]
    NotCrisp,
    #[error("missing structure: {0}")]
    MissingStructure(String),
}

pub const DEFAULT_POWER_BOUND: u64 = 256;
pub const DEFAULT_SAMPLES: usize = 500;

/// The canonical one-element object.
pub fn unit() -> Arc<Obj> {
    Obj::new("1", vec!["*".to_string()]).expect("one-element carrier")
}

/// `I_A = top_AA` and `top_{B,A}` is total for every registered `B`.
pub fn is_unit(alg: &Arc<HeytingAlgebra>, a: &Arc<Obj>, registered: &[Arc<Obj>]) -> bool {
    Rel::identity(alg, a) == Rel::top(alg, a, a) && registered.iter().all(|b| Rel::top(alg, b, a).is_total())
}

type ProductCache = HashMap<(Arc<Obj>, Arc<Obj>), Arc<ProductWitness>>;

/// Builds and caches product and power witnesses over one algebra.
///
/// Shared by reference between workers; construction is serialised by the
/// internal locks and every witness is immutable once built.
pub struct Witnesses {
    alg: Arc<HeytingAlgebra>,
    power_bound: u64,
    sample_seed: u64,
    products: Mutex<ProductCache>,
    powers: Mutex<HashMap<Arc<Obj>, Arc<PowerWitness>>>,
    nepowers: Mutex<HashMap<Arc<Obj>, Arc<NePowerWitness>>>,
}

impl Witnesses {
    pub fn new(alg: Arc<HeytingAlgebra>) -> Self {
        Witnesses::with_bound(alg, DEFAULT_POWER_BOUND)
    }

    pub fn with_bound(alg: Arc<HeytingAlgebra>, power_bound: u64) -> Self {
        Witnesses {
            alg,
            power_bound,
            sample_seed: 0,
            products: Mutex::new(HashMap::new()),
            powers: Mutex::new(HashMap::new()),
            nepowers: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &Arc<HeytingAlgebra> {
        &self.alg
    }

    pub fn power_bound(&self) -> u64 {
        self.power_bound
    }

    pub fn product(&self, a: &Arc<Obj>, b: &Arc<Obj>) -> Result<Arc<ProductWitness>, StructureError> {
        let key = (a.clone(), b.clone());
        if let Some(w) = self.products.lock().unwrap().get(&key) {
            return Ok(w.clone());
        }
        let w = Arc::new(ProductWitness::new(&self.alg, a, b)?);
        Ok(self.products.lock().unwrap().entry(key).or_insert(w).clone())
    }

    pub fn power(&self, a: &Arc<Obj>) -> Result<Arc<PowerWitness>, StructureError> {
        if let Some(w) = self.powers.lock().unwrap().get(a) {
            return Ok(w.clone());
        }
        let w = Arc::new(PowerWitness::new(&self.alg, a, self.power_bound, self.sample_seed)?);
        Ok(self.powers.lock().unwrap().entry(a.clone()).or_insert(w).clone())
    }

    pub fn nepower(&self, a: &Arc<Obj>) -> Result<Arc<NePowerWitness>, StructureError> {
        if let Some(w) = self.nepowers.lock().unwrap().get(a) {
            return Ok(w.clone());
        }
        let w = Arc::new(NePowerWitness::new(self, a)?);
        Ok(self.nepowers.lock().unwrap().entry(a.clone()).or_insert(w).clone())
    }

    /// `Q◁R = Q;π^T ⊓ R;ρ^T`
    pub fn fork(&self, q: &Rel, r: &Rel) -> Result<Rel, StructureError> {
        self.product(q.target(), r.target())?.fork(q, r)
    }

    /// `Q▷S = π;Q ⊓ ρ;S`
    pub fn pair(&self, q: &Rel, s: &Rel) -> Result<Rel, StructureError> {
        self.product(q.source(), s.source())?.pair(q, s)
    }

    /// `Q⊗T = π;Q;π^T ⊓ ρ;T;ρ^T`
    pub fn tensor(&self, q: &Rel, t: &Rel) -> Result<Rel, StructureError> {
        let src = self.product(q.source(), t.source())?;
        let tgt = self.product(q.target(), t.target())?;
        ProductWitness::tensor(&src, &tgt, q, t)
    }

    /// `assoc: A×(B×C) -> (A×B)×C` from its defining meet of three terms.
    pub fn assoc(&self, a: &Arc<Obj>, b: &Arc<Obj>, c: &Arc<Obj>) -> Result<Rel, StructureError> {
        let bc = self.product(b, c)?;
        let a_bc = self.product(a, &bc.obj)?;
        let ab = self.product(a, b)?;
        let ab_c = self.product(&ab.obj, c)?;
        let t1 = a_bc.pi.compose(&ab.pi.converse())?.compose(&ab_c.pi.converse())?;
        let t2 = a_bc
            .rho
            .compose(&bc.pi)?
            .compose(&ab.rho.converse())?
            .compose(&ab_c.pi.converse())?;
        let t3 = a_bc.rho.compose(&bc.rho)?.compose(&ab_c.rho.converse())?;
        Ok(t1.meet(&t2)?.meet(&t3)?)
    }

    /// `swap: A×B -> B×A`, `π;ρ^T ⊓ ρ;π^T`.
    pub fn swap(&self, a: &Arc<Obj>, b: &Arc<Obj>) -> Result<Rel, StructureError> {
        let ab = self.product(a, b)?;
        let ba = self.product(b, a)?;
        Ok(ab.pi.compose(&ba.rho.converse())?.meet(&ab.rho.compose(&ba.pi.converse())?)?)
    }
}
