//! Boolean properties of relations, each evaluated exactly by its defining
//! inclusion or equation.

use super::{Rel, RelError};

impl Rel {
    fn require_square(&self, op: &'static str) -> Result<(), RelError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(RelError::TypeMismatch { op, left: self.sort_string(), right: "a square sort".into() })
        }
    }

    fn id_source(&self) -> Rel {
        Rel::identity(&self.alg, &self.source)
    }

    fn id_target(&self) -> Rel {
        Rel::identity(&self.alg, &self.target)
    }

    fn compose_ok(&self, other: &Rel) -> Rel {
        self.compose(other).expect("composition of a relation with its converse")
    }

    /// `Q^T;Q <= I`
    pub fn is_univalent(&self) -> bool {
        self.converse().compose_ok(self).leq(&self.id_target()).unwrap_or(false)
    }

    /// `I <= Q;Q^T`
    pub fn is_total(&self) -> bool {
        self.id_source().leq(&self.compose_ok(&self.converse())).unwrap_or(false)
    }

    pub fn is_injective(&self) -> bool {
        self.converse().is_univalent()
    }

    pub fn is_surjective(&self) -> bool {
        self.converse().is_total()
    }

    pub fn is_map(&self) -> bool {
        self.is_univalent() && self.is_total()
    }

    pub fn is_bijection(&self) -> bool {
        self.is_map() && self.is_injective() && self.is_surjective()
    }

    /// A map whose source has exactly one element.
    pub fn is_point(&self) -> bool {
        self.source.size() == 1 && self.is_map()
    }

    /// `C;C <= C`
    pub fn is_transitive(&self) -> Result<bool, RelError> {
        self.require_square("transitive")?;
        self.compose(self)?.leq(self)
    }

    /// `C <= C;C`
    pub fn is_dense(&self) -> Result<bool, RelError> {
        self.require_square("dense")?;
        self.leq(&self.compose(self)?)
    }

    /// `C meet C^T = bot`
    pub fn is_asymmetric(&self) -> Result<bool, RelError> {
        self.require_square("asymmetric")?;
        let m = self.meet(&self.converse())?;
        Ok(m.entries.iter().all(|&e| e == self.alg.bot()))
    }

    pub fn is_strict_order(&self) -> Result<bool, RelError> {
        Ok(self.is_transitive()? && self.is_asymmetric()?)
    }

    /// Strict order with `I join C join C^T = top`.
    pub fn is_linear_strict_order(&self) -> Result<bool, RelError> {
        if !self.is_strict_order()? {
            return Ok(false);
        }
        let cover = self.id_source().join(self)?.join(&self.converse())?;
        Ok(cover.entries.iter().all(|&e| e == self.alg.top()))
    }

    pub fn is_reflexive(&self) -> Result<bool, RelError> {
        self.require_square("reflexive")?;
        self.id_source().leq(self)
    }

    /// `E meet E^T <= I`
    pub fn is_antisymmetric(&self) -> Result<bool, RelError> {
        self.require_square("antisymmetric")?;
        self.meet(&self.converse())?.leq(&self.id_source())
    }

    pub fn is_symmetric(&self) -> Result<bool, RelError> {
        self.require_square("symmetric")?;
        Ok(self.converse() == *self)
    }

    /// Reflexive, transitive and antisymmetric.
    pub fn is_ordering(&self) -> Result<bool, RelError> {
        Ok(self.is_reflexive()? && self.is_transitive()? && self.is_antisymmetric()?)
    }

    /// Symmetric and transitive.
    pub fn is_per(&self) -> Result<bool, RelError> {
        Ok(self.is_symmetric()? && self.is_transitive()?)
    }

    /// `i <= I`
    pub fn is_partial_identity(&self) -> Result<bool, RelError> {
        self.require_square("partial identity")?;
        self.leq(&self.id_source())
    }

    /// `Q** = Q`
    pub fn is_regular(&self) -> bool {
        self.star().star() == *self
    }

    /// `Q meet R = bot` and `Q join R = top`.
    pub fn is_complemented_pair(&self, other: &Rel) -> Result<bool, RelError> {
        let m = self.meet(other)?;
        let j = self.join(other)?;
        Ok(m.entries.iter().all(|&e| e == self.alg.bot()) && j.entries.iter().all(|&e| e == self.alg.top()))
    }
}
