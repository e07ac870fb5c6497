use std::sync::Arc;

use crate::relcore::{Obj, Rel};

use super::StructureError;

/// An object `B` with `R: B -> A` such that `R;R^T = I` and `R^T;R = X`.
#[derive(Debug, Clone)]
pub struct Splitting {
    pub obj: Arc<Obj>,
    pub r: Rel,
}

/// Splits a crisp partial equivalence into its equivalence classes, ordered
/// by their first member. Classes are labelled by their members.
pub fn split(x: &Rel, name: &str) -> Result<Splitting, StructureError> {
    if !x.is_crisp() {
        return Err(StructureError::NotCrisp);
    }
    if !x.is_per()? {
        return Err(StructureError::NotPer);
    }
    let alg = x.algebra();
    let top = alg.top();
    let n = x.rows();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; n];
    for a in 0..n {
        if seen[a] || x.get(a, a) != top {
            continue;
        }
        let class: Vec<usize> = (0..n).filter(|&b| x.get(a, b) == top).collect();
        for &b in &class {
            seen[b] = true;
        }
        classes.push(class);
    }
    if classes.is_empty() {
        return Err(StructureError::AxiomViolation("split of an empty partial equivalence".into()));
    }
    let carrier = x.source().carrier();
    let labels = classes
        .iter()
        .map(|c| format!("{{{}}}", c.iter().map(|&i| carrier[i].as_str()).collect::<Vec<_>>().join(",")))
        .collect();
    let obj = Obj::new(name, labels)?;
    let r = Rel::from_fn(alg, &obj, x.source(), |k, a| if classes[k].contains(&a) { top } else { alg.bot() });
    if r.compose(&r.converse())? != Rel::identity(alg, &obj) {
        return Err(StructureError::AxiomViolation("R;R^T = I".into()));
    }
    if r.converse().compose(&r)? != *x {
        return Err(StructureError::AxiomViolation("R^T;R = X".into()));
    }
    Ok(Splitting { obj, r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{Elem, HeytingAlgebra};

    #[test]
    fn two_classes() {
        let alg = Arc::new(HeytingAlgebra::boolean());
        let a = Obj::new("A", vec!["a".into(), "b".into(), "c".into()]).unwrap();
        let x = Rel::from_names(&alg, &a, &a, &[vec!["1", "1", "0"], vec!["1", "1", "0"], vec!["0", "0", "1"]]).unwrap();
        let s = split(&x, "B").unwrap();
        assert_eq!(s.obj.carrier(), &["{a,b}", "{c}"]);
        assert_eq!(s.r.to_string(), "(1 1 0)\n(0 0 1)");
    }

    #[test]
    fn identity_splits_to_identity() {
        let alg = Arc::new(HeytingAlgebra::chain(3).unwrap());
        let a = Obj::sized("A", 3).unwrap();
        let s = split(&Rel::identity(&alg, &a), "B").unwrap();
        assert_eq!(s.r.entries(), Rel::identity(&alg, &a).entries());
    }

    #[test]
    fn partial_domain() {
        let alg = Arc::new(HeytingAlgebra::boolean());
        let a = Obj::sized("A", 3).unwrap();
        let x = Rel::from_names(&alg, &a, &a, &[vec!["0", "0", "0"], vec!["0", "1", "1"], vec!["0", "1", "1"]]).unwrap();
        let s = split(&x, "B").unwrap();
        assert_eq!(s.obj.size(), 1);
        assert_eq!(s.r.to_string(), "(0 1 1)");
    }

    #[test]
    fn rejects_non_per_and_fuzzy() {
        let alg = Arc::new(HeytingAlgebra::chain_named(&["0", "u", "1"]).unwrap());
        let a = Obj::sized("A", 1).unwrap();
        let u = Rel::from_names(&alg, &a, &a, &[vec!["u"]]).unwrap();
        assert_eq!(split(&u, "B").unwrap_err(), StructureError::NotCrisp);
        let b = Obj::sized("B", 2).unwrap();
        let asym = Rel::from_names(&alg, &b, &b, &[vec!["1", "1"], vec!["0", "1"]]).unwrap();
        assert_eq!(split(&asym, "S").unwrap_err(), StructureError::NotPer);
    }

    #[test]
    fn fuzzy_point_has_no_small_splitting() {
        // Search every R: S -> A with |S| <= 2 for R;R^T = I and R^T;R = (u).
        let alg = Arc::new(HeytingAlgebra::chain_named(&["0", "u", "1"]).unwrap());
        let a = Obj::sized("A", 1).unwrap();
        let x = Rel::from_names(&alg, &a, &a, &[vec!["u"]]).unwrap();
        for size in 1..=2 {
            let s = Obj::sized("S", size).unwrap();
            for code in 0..3usize.pow(size as u32) {
                let r = Rel::from_fn(&alg, &s, &a, |i, _| Elem(((code / 3usize.pow(i as u32)) % 3) as u8));
                let ok = r.compose(&r.converse()).unwrap() == Rel::identity(&alg, &s)
                    && r.converse().compose(&r).unwrap() == x;
                assert!(!ok);
            }
        }
    }
}
