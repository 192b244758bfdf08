//! JSON documents for graphs, random variables and diagonal elements.
//!
//! Output is canonical: object keys sorted, no whitespace, scalars as
//! rational strings.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphSpec, Word};
use crate::opcalc::{DiagonalElement, Letter, RandomVariable};
use crate::scalar::Scalar;

/// Graph field of a variable document: inline, or a path relative to the
/// document.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphRef {
    Inline(GraphSpec),
    File(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermSpec {
    pub word: Vec<String>,
    #[serde(default)]
    pub star: bool,
    pub re: String,
    #[serde(default = "zero_string")]
    pub im: String,
}

fn zero_string() -> String {
    "0".into()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VariableSpec {
    pub graph: GraphRef,
    #[serde(default)]
    pub terms: Vec<TermSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct ScalarSpec {
    re: String,
    #[serde(default = "zero_string")]
    im: String,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn load_graph(path: &Path) -> Result<Graph> {
    Graph::from_json(&read(path)?)
}

/// Parses a variable document; relative graph paths resolve against `base`.
pub fn parse_variable(text: &str, base: &Path) -> Result<RandomVariable> {
    let spec: VariableSpec = serde_json::from_str(text)?;
    let graph = match &spec.graph {
        GraphRef::Inline(g) => Graph::load(g)?,
        GraphRef::File(p) => load_graph(&base.join(p))?,
    };
    variable_from_spec(Arc::new(graph), &spec.terms)
}

/// Builds a variable over a known graph from its term list.
pub fn variable_from_spec(graph: Arc<Graph>, terms: &[TermSpec]) -> Result<RandomVariable> {
    let mut a = RandomVariable::zero(graph.clone());
    for t in terms {
        let w = graph.word_from_ids(&t.word)?;
        a.add_term(Letter::new(w, t.star), Scalar::from_strs(&t.re, &t.im)?);
    }
    Ok(a)
}

pub fn load_variable(path: &Path) -> Result<RandomVariable> {
    let base: PathBuf = path.parent().map(Path::to_path_buf).unwrap_or_default();
    parse_variable(&read(path)?, &base)
}

pub fn scalar_json(c: &Scalar) -> Value {
    json!({ "re": c.re_string(), "im": c.im_string() })
}

pub fn word_json(g: &Graph, w: &Word) -> Value {
    json!(g.word_ids(w))
}

pub fn graph_json(g: &Graph) -> Value {
    serde_json::to_value(g.spec()).expect("graph spec serializes")
}

/// A variable with its graph inlined and terms in canonical order.
pub fn variable_json(a: &RandomVariable) -> Value {
    let g = a.graph();
    let terms: Vec<Value> = a
        .terms()
        .map(|(l, c)| {
            json!({
                "word": g.word_ids(l.word()),
                "star": l.star(),
                "re": c.re_string(),
                "im": c.im_string(),
            })
        })
        .collect();
    json!({ "graph": graph_json(g), "terms": terms })
}

/// `{"v1": {"re": .., "im": ..}}`, zero entries omitted.
pub fn diagonal_json(g: &Graph, d: &DiagonalElement) -> Value {
    let map: Map<String, Value> = d
        .iter()
        .map(|(v, c)| (g.vertex_name(v).to_string(), scalar_json(c)))
        .collect();
    Value::Object(map)
}

pub fn parse_diagonal(g: &Graph, text: &str) -> Result<DiagonalElement> {
    let raw: std::collections::BTreeMap<String, ScalarSpec> = serde_json::from_str(text)?;
    raw.into_iter()
        .map(|(v, s)| Ok((g.vertex(&v)?, Scalar::from_strs(&s.re, &s.im)?)))
        .collect()
}

pub fn load_diagonal(g: &Graph, path: &Path) -> Result<DiagonalElement> {
    parse_diagonal(g, &read(path)?)
}

/// Compact JSON with sorted keys.
pub fn canonical(v: &Value) -> String {
    // serde_json's default map is ordered by key
    serde_json::to_string(v).expect("JSON value serializes")
}
