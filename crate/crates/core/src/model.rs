//! Models: a Heyting algebra, named objects, named relations and term
//! definitions, loaded from JSON or built in code.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{HeytingAlgebra, LatticeError};
use crate::lawlang::{eval_term, parse_sort, parse_term, typecheck_term, Env, LawError, Scope, Sort, Term};
use crate::relcore::{Obj, Rel, RelError};
use crate::structures::{Witnesses, DEFAULT_POWER_BOUND};

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid model JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Rel(#[from] RelError),
    #[error("in `{name}`: {source}")]
    Law { name: String, source: LawError },
    #[error("`{0}` is defined twice")]
    Duplicate(String),
}

/// The algebra part of a model file.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum LatticeSpec {
    /// `chain:n`, `bool` or `prod(a,b)`.
    Builder(String),
    Chain { chain: Vec<String> },
    Order { elements: Vec<String>, cover: Vec<(String, String)> },
}

impl LatticeSpec {
    pub fn build(&self) -> Result<HeytingAlgebra, LatticeError> {
        match self {
            LatticeSpec::Builder(s) => HeytingAlgebra::from_builder(s),
            LatticeSpec::Chain { chain } => HeytingAlgebra::chain_named(chain),
            LatticeSpec::Order { elements, cover } => {
                let cover: Vec<(&str, &str)> = cover.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
                let elements: Vec<&str> = elements.iter().map(String::as_str).collect();
                HeytingAlgebra::from_order(&elements, &cover)
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ObjSpec {
    Size(usize),
    Carrier(Vec<String>),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RelSpec {
    pub from: String,
    pub to: String,
    pub matrix: Vec<Vec<String>>,
}

/// On-disk form of a model.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ModelSpec {
    pub id: String,
    pub lattice: LatticeSpec,
    #[serde(default)]
    pub objects: IndexMap<String, ObjSpec>,
    #[serde(default)]
    pub relations: IndexMap<String, RelSpec>,
    #[serde(default)]
    pub defs: IndexMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power_bound: Option<u64>,
}

/// A loaded model.
pub struct Model {
    pub id: String,
    pub alg: Arc<HeytingAlgebra>,
    pub witnesses: Arc<Witnesses>,
    pub objects: IndexMap<String, Arc<Obj>>,
    pub relations: IndexMap<String, Rel>,
    pub relation_sorts: IndexMap<String, (Sort, Sort)>,
    pub defs: IndexMap<String, Term>,
}

pub const PAPER_MODEL_JSON: &str = r#"{
  "id": "paper3chain",
  "lattice": { "chain": ["0", "u", "1"] },
  "objects": { "A": ["a"], "B": ["b1", "b2"] },
  "relations": {
    "C": { "from": "B", "to": "B", "matrix": [["0", "1"], ["0", "0"]] },
    "X": { "from": "A", "to": "B", "matrix": [["0", "u"]] }
  },
  "defs": { "E": "I[B] | C" }
}
"#;

pub const BOOL2_MODEL_JSON: &str = r#"{
  "id": "bool2",
  "lattice": "bool",
  "objects": { "A": 2, "B": 2, "C": 2, "D": 2 }
}
"#;

pub const CHAIN3_MODEL_JSON: &str = r#"{
  "id": "chain3",
  "lattice": { "chain": ["0", "u", "1"] },
  "objects": { "A": 1, "B": 2 }
}
"#;

pub const Z3_MODEL_JSON: &str = r#"{
  "id": "z3group",
  "lattice": "bool",
  "objects": { "G": ["0", "1", "2"] },
  "relations": {
    "e": { "from": "1", "to": "G", "matrix": [["1", "0", "0"]] },
    "n": { "from": "G", "to": "G", "matrix": [["1", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]] },
    "f": { "from": "G*G", "to": "G", "matrix": [
      ["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"],
      ["0", "1", "0"], ["0", "0", "1"], ["1", "0", "0"],
      ["0", "0", "1"], ["1", "0", "0"], ["0", "1", "0"]
    ] }
  }
}
"#;

/// Example files written by `init-examples`.
pub fn example_files() -> Vec<(&'static str, &'static str)> {
    vec![
        ("paper3chain.json", PAPER_MODEL_JSON),
        ("bool2.json", BOOL2_MODEL_JSON),
        ("chain3.json", CHAIN3_MODEL_JSON),
        ("z3group.json", Z3_MODEL_JSON),
    ]
}

fn law_err(name: &str) -> impl Fn(LawError) -> ModelError + '_ {
    move |source| ModelError::Law { name: name.to_string(), source }
}

impl Model {
    pub fn from_json(text: &str) -> Result<Model, ModelError> {
        let spec: ModelSpec = serde_json::from_str(text)?;
        Model::from_spec(&spec)
    }

    pub fn load(path: &Path) -> Result<Model, ModelError> {
        let text = fs::read_to_string(path)
            .map_err(|source| ModelError::Io { path: path.display().to_string(), source })?;
        Model::from_json(&text)
    }

    /// The 3-chain model with the strict order C and the relation X.
    pub fn paper() -> Model {
        Model::from_json(PAPER_MODEL_JSON).expect("embedded model is valid")
    }

    /// A model with no relations over the given algebra and objects.
    pub fn bare(id: &str, alg: Arc<HeytingAlgebra>, objects: Vec<Arc<Obj>>) -> Model {
        let witnesses = Arc::new(Witnesses::new(alg.clone()));
        Model {
            id: id.to_string(),
            alg,
            witnesses,
            objects: objects.into_iter().map(|o| (o.name().to_string(), o)).collect(),
            relations: IndexMap::new(),
            relation_sorts: IndexMap::new(),
            defs: IndexMap::new(),
        }
    }

    pub fn from_spec(spec: &ModelSpec) -> Result<Model, ModelError> {
        let alg = Arc::new(spec.lattice.build()?);
        let bound = spec.power_bound.unwrap_or(DEFAULT_POWER_BOUND);
        let witnesses = Arc::new(Witnesses::with_bound(alg.clone(), bound));
        let mut objects = IndexMap::new();
        for (name, o) in &spec.objects {
            let obj = match o {
                ObjSpec::Size(n) => Obj::sized(name.clone(), *n)?,
                ObjSpec::Carrier(c) => Obj::new(name.clone(), c.clone())?,
            };
            objects.insert(name.clone(), obj);
        }
        let mut model = Model {
            id: spec.id.clone(),
            alg,
            witnesses,
            objects,
            relations: IndexMap::new(),
            relation_sorts: IndexMap::new(),
            defs: IndexMap::new(),
        };
        for (name, r) in &spec.relations {
            let src = parse_sort(&r.from).map_err(law_err(name))?;
            let tgt = parse_sort(&r.to).map_err(law_err(name))?;
            let s = src.resolve(&model.objects, &model.witnesses).map_err(law_err(name))?;
            let t = tgt.resolve(&model.objects, &model.witnesses).map_err(law_err(name))?;
            let rel = Rel::from_names(&model.alg, &s, &t, &r.matrix)?;
            model.add_relation(name, src, tgt, rel)?;
        }
        for (name, body) in &spec.defs {
            let t = parse_term(body).map_err(law_err(name))?;
            model.add_def(name, t)?;
        }
        Ok(model)
    }

    pub fn add_relation(&mut self, name: &str, src: Sort, tgt: Sort, rel: Rel) -> Result<(), ModelError> {
        if self.relations.contains_key(name) || self.defs.contains_key(name) {
            return Err(ModelError::Duplicate(name.to_string()));
        }
        self.relations.insert(name.to_string(), rel);
        self.relation_sorts.insert(name.to_string(), (src, tgt));
        Ok(())
    }

    pub fn add_def(&mut self, name: &str, body: Term) -> Result<(), ModelError> {
        if self.relations.contains_key(name) || self.defs.contains_key(name) {
            return Err(ModelError::Duplicate(name.to_string()));
        }
        typecheck_term(&body, &self.scope()).map_err(law_err(name))?;
        self.defs.insert(name.to_string(), body);
        Ok(())
    }

    /// Relations and definitions as a typing scope over the model's objects.
    pub fn scope(&self) -> Scope {
        Scope {
            vars: self.relation_sorts.clone(),
            defs: self.defs.clone(),
            sorts: Some(self.objects.keys().cloned().collect()),
        }
    }

    pub fn env(&self) -> Env<'_> {
        Env { binding: &self.objects, w: &self.witnesses }
    }

    /// Parses, typechecks and evaluates a term over the model.
    pub fn eval(&self, text: &str) -> Result<Rel, LawError> {
        let t = parse_term(text)?;
        self.eval_term(&t)
    }

    pub fn eval_term(&self, t: &Term) -> Result<Rel, LawError> {
        eval_term(t, &self.scope(), self.env(), &self.relations)
    }

    pub fn to_spec(&self) -> ModelSpec {
        ModelSpec {
            id: self.id.clone(),
            lattice: LatticeSpec::Order {
                elements: self.alg.names().to_vec(),
                cover: self
                    .alg
                    .elements()
                    .flat_map(|a| self.alg.elements().map(move |b| (a, b)))
                    .filter(|&(a, b)| {
                        a != b
                            && self.alg.leq(a, b)
                            && !self.alg.elements().any(|c| c != a && c != b && self.alg.leq(a, c) && self.alg.leq(c, b))
                    })
                    .map(|(a, b)| (self.alg.name(a).to_string(), self.alg.name(b).to_string()))
                    .collect(),
            },
            objects: self.objects.iter().map(|(n, o)| (n.clone(), ObjSpec::Carrier(o.carrier().to_vec()))).collect(),
            relations: self
                .relations
                .iter()
                .map(|(n, r)| {
                    let (s, t) = &self.relation_sorts[n];
                    let matrix = (0..r.rows())
                        .map(|i| (0..r.cols()).map(|j| self.alg.name(r.get(i, j)).to_string()).collect())
                        .collect();
                    (n.clone(), RelSpec { from: s.to_string(), to: t.to_string(), matrix })
                })
                .collect(),
            defs: self.defs.iter().map(|(n, t)| (n.clone(), t.to_string())).collect(),
            power_bound: Some(self.witnesses.power_bound()),
        }
    }
}
