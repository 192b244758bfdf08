//! Directed multigraphs and their free semigroupoid of admissible path words.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub src: VertexId,
    pub dst: VertexId,
}

/// Serialized form of a graph, as read from and written to JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<EdgeSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSpec {
    pub id: String,
    pub src: String,
    pub dst: String,
}

impl EdgeSpec {
    pub fn new(id: &str, src: &str, dst: &str) -> Self {
        EdgeSpec {
            id: id.to_string(),
            src: src.to_string(),
            dst: dst.to_string(),
        }
    }
}

/// A finite directed multigraph. Vertices and edges are stored sorted by id,
/// so index order coincides with lexicographic id order.
#[derive(Clone, Debug)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, VertexId>,
    edge_index: HashMap<String, EdgeId>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph, checking id uniqueness and edge endpoints.
    pub fn load(spec: &GraphSpec) -> Result<Graph> {
        if spec.vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut vertices = spec.vertices.clone();
        vertices.sort();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateId(w[0].clone()));
        }
        let vertex_index: HashMap<String, VertexId> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), VertexId(i)))
            .collect();

        let mut edge_specs: Vec<&EdgeSpec> = spec.edges.iter().collect();
        edge_specs.sort_by(|a, b| a.id.cmp(&b.id));
        let mut edges = Vec::with_capacity(edge_specs.len());
        let mut edge_index = HashMap::new();
        for (i, e) in edge_specs.into_iter().enumerate() {
            if vertex_index.contains_key(&e.id) || edge_index.contains_key(&e.id) {
                return Err(Error::DuplicateId(e.id.clone()));
            }
            let endpoint = |name: &String| {
                vertex_index
                    .get(name)
                    .copied()
                    .ok_or_else(|| Error::DanglingEndpoint {
                        edge: e.id.clone(),
                        vertex: name.clone(),
                    })
            };
            let src = endpoint(&e.src)?;
            let dst = endpoint(&e.dst)?;
            edge_index.insert(e.id.clone(), EdgeId(i));
            edges.push(Edge {
                id: e.id.clone(),
                src,
                dst,
            });
        }
        Ok(Graph {
            vertices,
            edges,
            vertex_index,
            edge_index,
        })
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let spec: GraphSpec = serde_json::from_str(text)?;
        Graph::load(&spec)
    }

    pub fn spec(&self) -> GraphSpec {
        GraphSpec {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeSpec::new(&e.id, self.vertex_name(e.src), self.vertex_name(e.dst)))
                .collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edge_by_name(&self, name: &str) -> Option<EdgeId> {
        self.edge_index.get(name).copied()
    }

    /// The vertex word `v`.
    pub fn vertex_word(&self, name: &str) -> Result<Word> {
        Ok(Word::vertex(self.vertex(name)?))
    }

    /// The single-edge word `e`.
    pub fn edge_word(&self, e: EdgeId) -> Word {
        let edge = self.edge(e);
        Word {
            edges: vec![e],
            source: edge.src,
            range: edge.dst,
        }
    }

    /// Builds a path word from edge ids, checking admissibility.
    pub fn path(&self, edges: &[EdgeId]) -> Result<Word> {
        let (first, rest) = edges
            .split_first()
            .ok_or_else(|| Error::InadmissibleWord("empty edge sequence".into()))?;
        let mut word = self.edge_word(*first);
        for &e in rest {
            word = word.concat(&self.edge_word(e)).ok_or_else(|| {
                Error::InadmissibleWord(format!(
                    "{} followed by {}",
                    self.format_word(&word),
                    self.edge(e).id
                ))
            })?;
        }
        Ok(word)
    }

    /// Resolves a list of identifiers: a single vertex id, or a sequence of edge ids.
    pub fn word_from_ids<S: AsRef<str>>(&self, ids: &[S]) -> Result<Word> {
        match ids {
            [] => Err(Error::Parse("empty word".into())),
            [one] if self.vertex_index.contains_key(one.as_ref()) => self.vertex_word(one.as_ref()),
            _ => {
                let edges = ids
                    .iter()
                    .map(|id| {
                        let id = id.as_ref();
                        if self.vertex_index.contains_key(id) {
                            Err(Error::InadmissibleWord(format!(
                                "vertex `{id}` inside an edge sequence"
                            )))
                        } else {
                            self.edge_by_name(id)
                                .ok_or_else(|| Error::UnknownId(id.to_string()))
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                self.path(&edges)
            }
        }
    }

    /// Parses the whitespace-separated word literal syntax, e.g. `"e1 e2"` or `"v1"`.
    pub fn parse_word(&self, literal: &str) -> Result<Word> {
        let ids: Vec<&str> = literal.split_whitespace().collect();
        self.word_from_ids(&ids)
    }

    /// Identifier list of a word: `[v]` for a vertex, the edge ids otherwise.
    pub fn word_ids(&self, w: &Word) -> Vec<String> {
        if w.is_vertex() {
            vec![self.vertex_name(w.source).to_string()]
        } else {
            w.edges.iter().map(|&e| self.edge(e).id.clone()).collect()
        }
    }

    pub fn format_word(&self, w: &Word) -> String {
        self.word_ids(w).join(" ")
    }

    /// Every word of length at most `max_len`: vertices first, then by
    /// length and lexicographic edge-id order.
    pub fn enumerate_paths(&self, max_len: usize) -> Vec<Word> {
        let mut out: Vec<Word> = self.vertex_ids().map(Word::vertex).collect();
        let mut frontier: Vec<Word> = Vec::new();
        for len in 1..=max_len {
            let next: Vec<Word> = if len == 1 {
                self.edge_ids().map(|e| self.edge_word(e)).collect()
            } else {
                frontier
                    .iter()
                    .flat_map(|w| {
                        self.edge_ids()
                            .filter(move |&e| self.edge(e).src == w.range)
                            .map(move |e| w.concat(&self.edge_word(e)).expect("admissible"))
                    })
                    .collect()
            };
            if next.is_empty() {
                break;
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// Basic loops of length at most `max_len`.
    pub fn basic_loops(&self, max_len: usize) -> Vec<Word> {
        self.enumerate_paths(max_len)
            .into_iter()
            .filter(Word::is_basic_loop)
            .collect()
    }
}

/// An element of the free semigroupoid: a vertex (empty edge list) or an
/// admissible, nonempty edge sequence. Source and range are cached so that
/// concatenation needs no graph lookup.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    edges: Vec<EdgeId>,
    source: VertexId,
    range: VertexId,
}

impl Word {
    pub fn vertex(v: VertexId) -> Word {
        Word {
            edges: Vec::new(),
            source: v,
            range: v,
        }
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn source_word(&self) -> Word {
        Word::vertex(self.source)
    }

    pub fn range_word(&self) -> Word {
        Word::vertex(self.range)
    }

    pub fn is_loop(&self) -> bool {
        !self.is_vertex() && self.source == self.range
    }

    /// A loop that is not a proper power of a shorter loop.
    pub fn is_basic_loop(&self) -> bool {
        self.is_loop() && self.period() == self.len()
    }

    /// Whether the word is based at `v`: either the vertex itself or a loop `v w v`.
    pub fn is_based_at(&self, v: VertexId) -> bool {
        self.source == v && self.range == v
    }

    /// Concatenation in the free semigroupoid; `None` when `r(self) != s(other)`.
    pub fn concat(&self, other: &Word) -> Option<Word> {
        if self.range != other.source {
            return None;
        }
        let mut edges = Vec::with_capacity(self.edges.len() + other.edges.len());
        edges.extend_from_slice(&self.edges);
        edges.extend_from_slice(&other.edges);
        Some(Word {
            edges,
            source: self.source,
            range: other.range,
        })
    }

    /// If `self = prefix · rest`, returns `rest`.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        if prefix.is_vertex() {
            return (self.source == prefix.source).then(|| self.clone());
        }
        if !self.edges.starts_with(&prefix.edges) {
            return None;
        }
        let rest = &self.edges[prefix.len()..];
        Some(if rest.is_empty() {
            Word::vertex(self.range)
        } else {
            Word {
                edges: rest.to_vec(),
                source: prefix.range,
                range: self.range,
            }
        })
    }

    /// If `self = rest · suffix`, returns `rest`.
    pub fn strip_suffix(&self, suffix: &Word) -> Option<Word> {
        if suffix.is_vertex() {
            return (self.range == suffix.range).then(|| self.clone());
        }
        if !self.edges.ends_with(&suffix.edges) {
            return None;
        }
        let rest = &self.edges[..self.len() - suffix.len()];
        Some(if rest.is_empty() {
            Word::vertex(self.source)
        } else {
            Word {
                edges: rest.to_vec(),
                source: self.source,
                range: suffix.source,
            }
        })
    }

    /// `self^k` for a loop and `k >= 1`.
    pub fn power(&self, k: usize) -> Option<Word> {
        if k == 0 || (k > 1 && !self.is_loop() && !self.is_vertex()) {
            return None;
        }
        let mut out = self.clone();
        for _ in 1..k {
            out = out.concat(self)?;
        }
        Some(out)
    }

    /// Smallest `d` dividing the length such that the edge sequence repeats with period `d`.
    fn period(&self) -> usize {
        let n = self.len();
        (1..=n)
            .filter(|d| n.is_multiple_of(*d))
            .find(|&d| (d..n).all(|i| self.edges[i] == self.edges[i - d]))
            .unwrap_or(n)
    }

    /// The basic loop `p` with `self = p^k`.
    pub fn primitive_root(&self) -> Result<Word> {
        if !self.is_loop() {
            return Err(Error::NotALoop(format!("{self:?}")));
        }
        let d = self.period();
        let root = &self.edges[..d];
        Ok(Word {
            edges: root.to_vec(),
            source: self.source,
            range: self.source,
        })
    }

    /// Canonical representative of the word's diagram: the primitive root for
    /// loops, the word itself otherwise.
    pub fn diagram(&self) -> Word {
        if self.is_loop() {
            self.primitive_root().expect("loop")
        } else {
            self.clone()
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.edges.cmp(&other.edges))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_vertex() {
            write!(f, "v#{}", self.source.0)
        } else {
            let ids: Vec<String> = self.edges.iter().map(|e| format!("e#{}", e.0)).collect();
            write!(f, "{}", ids.join("."))
        }
    }
}

/// Whether two finite paths have different diagrams.
pub fn diagram_distinct(w1: &Word, w2: &Word) -> Result<bool> {
    for w in [w1, w2] {
        if w.is_vertex() {
            return Err(Error::VertexInput(format!("{w:?}")));
        }
    }
    Ok(w1.diagram() != w2.diagram())
}

/// Pairwise diagram-distinctness of two sets of finite paths.
pub fn diagram_distinct_sets<'a, I, J>(xs: I, ys: J) -> Result<bool>
where
    I: IntoIterator<Item = &'a Word>,
    J: IntoIterator<Item = &'a Word> + Clone,
{
    for x in xs {
        for y in ys.clone() {
            if !diagram_distinct(x, y)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
