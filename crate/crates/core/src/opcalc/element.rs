//! Fourier expansions, diagonal elements and general (reduced) elements.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::reduce::{Letter, Mode, NormalForm};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, Word};
use crate::scalar::Scalar;

/// An element of the diagonal subalgebra: `sum_v q_v L[v]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DiagonalElement {
    entries: BTreeMap<VertexId, Scalar>,
}

impl DiagonalElement {
    pub fn zero() -> DiagonalElement {
        DiagonalElement::default()
    }

    /// `sum_v L[v]` over every vertex of the graph.
    pub fn unit(g: &Graph) -> DiagonalElement {
        g.vertex_ids().map(|v| (v, Scalar::one())).collect()
    }

    pub fn projection(v: VertexId) -> DiagonalElement {
        DiagonalElement::single(v, Scalar::one())
    }

    pub fn single(v: VertexId, q: Scalar) -> DiagonalElement {
        let mut d = DiagonalElement::zero();
        d.add_entry(v, q);
        d
    }

    pub fn add_entry(&mut self, v: VertexId, q: Scalar) {
        let slot = self.entries.entry(v).or_insert_with(Scalar::zero);
        *slot += q;
        if slot.is_zero() {
            self.entries.remove(&v);
        }
    }

    pub fn get(&self, v: VertexId) -> Scalar {
        self.entries.get(&v).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &Scalar)> {
        self.entries.iter().map(|(v, q)| (*v, q))
    }

    pub fn support(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.entries.keys().copied()
    }

    pub fn add(&self, other: &DiagonalElement) -> DiagonalElement {
        let mut out = self.clone();
        for (v, q) in other.iter() {
            out.add_entry(v, q.clone());
        }
        out
    }

    pub fn sub(&self, other: &DiagonalElement) -> DiagonalElement {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> DiagonalElement {
        self.iter().map(|(v, q)| (v, q * c)).collect()
    }

    /// Entrywise product, since `L[u] L[v] = delta_{u,v} L[v]`.
    pub fn mul(&self, other: &DiagonalElement) -> DiagonalElement {
        self.iter()
            .filter_map(|(v, q)| other.entries.get(&v).map(|p| (v, q * p)))
            .collect()
    }

    pub fn conj(&self) -> DiagonalElement {
        self.iter().map(|(v, q)| (v, q.conj())).collect()
    }
}

impl FromIterator<(VertexId, Scalar)> for DiagonalElement {
    fn from_iter<I: IntoIterator<Item = (VertexId, Scalar)>>(iter: I) -> Self {
        let mut d = DiagonalElement::zero();
        for (v, q) in iter {
            d.add_entry(v, q);
        }
        d
    }
}

/// Finite linear combination of reduced pairs `L[alpha] L*[beta]`.
/// Products of Fourier terms land here.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneralElement {
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl GeneralElement {
    pub fn zero() -> GeneralElement {
        GeneralElement::default()
    }

    pub fn unit(g: &Graph) -> GeneralElement {
        GeneralElement::from(&DiagonalElement::unit(g))
    }

    /// `c · nf`, expanding the identity over the vertices of `g`.
    pub fn from_normal_form(g: &Graph, nf: &NormalForm, c: Scalar) -> GeneralElement {
        let mut out = GeneralElement::zero();
        match nf {
            NormalForm::Zero => {}
            NormalForm::Identity => {
                for v in g.vertex_ids() {
                    out.add_term(Word::vertex(v), Word::vertex(v), c.clone());
                }
            }
            NormalForm::Pair { alpha, beta } => out.add_term(alpha.clone(), beta.clone(), c),
        }
        out
    }

    pub fn from_letter(letter: &Letter, c: Scalar) -> GeneralElement {
        let mut out = GeneralElement::zero();
        if let NormalForm::Pair { alpha, beta } = NormalForm::of_letter(letter) {
            out.add_term(alpha, beta, c);
        }
        out
    }

    pub fn add_term(&mut self, alpha: Word, beta: Word, c: Scalar) {
        let key = (alpha, beta);
        let slot = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (NormalForm, &Scalar)> {
        self.terms
            .iter()
            .map(|((a, b), c)| (NormalForm::pair(a.clone(), b.clone()), c))
    }

    pub fn add(&self, other: &GeneralElement) -> GeneralElement {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> GeneralElement {
        let mut out = GeneralElement::zero();
        for ((a, b), x) in &self.terms {
            out.add_term(a.clone(), b.clone(), x * c);
        }
        out
    }

    /// Bilinear product; every cross term reduced in the given mode.
    pub fn mul_mode(&self, other: &GeneralElement, mode: Mode) -> GeneralElement {
        let mut out = GeneralElement::zero();
        for ((a1, b1), c1) in &self.terms {
            let left = NormalForm::pair(a1.clone(), b1.clone());
            for ((a2, b2), c2) in &other.terms {
                let right = NormalForm::pair(a2.clone(), b2.clone());
                if let NormalForm::Pair { alpha, beta } = left.times(&right, mode) {
                    out.add_term(alpha, beta, c1 * c2);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &GeneralElement) -> GeneralElement {
        self.mul_mode(other, Mode::CuntzKrieger)
    }

    pub fn adjoint(&self) -> GeneralElement {
        let mut out = GeneralElement::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(b.clone(), a.clone(), c.conj());
        }
        out
    }

    /// The diagonal part: coefficients of the vertex pairs `L[v] L*[v]`.
    pub fn expectation(&self) -> DiagonalElement {
        self.terms
            .iter()
            .filter(|((a, b), _)| a.is_vertex() && b.is_vertex())
            .map(|((a, _), c)| (a.source(), c.clone()))
            .collect()
    }
}

impl From<&DiagonalElement> for GeneralElement {
    fn from(d: &DiagonalElement) -> GeneralElement {
        let mut out = GeneralElement::zero();
        for (v, q) in d.iter() {
            out.add_term(Word::vertex(v), Word::vertex(v), q.clone());
        }
        out
    }
}

/// A Fourier expansion `sum p_w L[w]^{u_w}` over a graph.
#[derive(Clone, Debug)]
pub struct RandomVariable {
    graph: Arc<Graph>,
    terms: BTreeMap<Letter, Scalar>,
}

impl PartialEq for RandomVariable {
    fn eq(&self, other: &Self) -> bool {
        same_graph(&self.graph, &other.graph) && self.terms == other.terms
    }
}

fn same_graph(a: &Arc<Graph>, b: &Arc<Graph>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl RandomVariable {
    pub fn zero(graph: Arc<Graph>) -> RandomVariable {
        RandomVariable {
            graph,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(graph: Arc<Graph>, terms: I) -> RandomVariable
    where
        I: IntoIterator<Item = (Letter, Scalar)>,
    {
        let mut rv = RandomVariable::zero(graph);
        for (l, c) in terms {
            rv.add_term(l, c);
        }
        rv
    }

    /// `L[w] + L*[w]`.
    pub fn symmetric(graph: Arc<Graph>, w: &Word) -> RandomVariable {
        RandomVariable::from_terms(
            graph,
            [
                (Letter::creation(w.clone()), Scalar::one()),
                (Letter::annihilation(w.clone()), Scalar::one()),
            ],
        )
    }

    /// The single generator `L[w]` or `L*[w]`.
    pub fn generator(graph: Arc<Graph>, letter: Letter) -> RandomVariable {
        RandomVariable::from_terms(graph, [(letter, Scalar::one())])
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn add_term(&mut self, letter: Letter, c: Scalar) {
        let slot = self
            .terms
            .entry(letter.clone())
            .or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&letter);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Letter, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, letter: &Letter) -> Scalar {
        self.terms.get(letter).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The support `F+(G:a)`.
    pub fn support(&self) -> BTreeSet<Word> {
        self.terms.keys().map(|l| l.word().clone()).collect()
    }

    /// `V(G:a)`.
    pub fn vertex_support(&self) -> BTreeSet<Word> {
        self.support().into_iter().filter(Word::is_vertex).collect()
    }

    /// `FP(G:a)`.
    pub fn path_support(&self) -> BTreeSet<Word> {
        self.support()
            .into_iter()
            .filter(|w| !w.is_vertex())
            .collect()
    }

    /// `FP_*(G:a)`: paths carried with both `L[w]` and `L*[w]`.
    pub fn star_support(&self) -> BTreeSet<Word> {
        self.path_support()
            .into_iter()
            .filter(|w| {
                self.terms.contains_key(&Letter::creation(w.clone()))
                    && self.terms.contains_key(&Letter::annihilation(w.clone()))
            })
            .collect()
    }

    /// `FP_*^c(G:a)`.
    pub fn non_star_support(&self) -> BTreeSet<Word> {
        let star = self.star_support();
        self.path_support()
            .into_iter()
            .filter(|w| !star.contains(w))
            .collect()
    }

    /// `(a_d, a_(*), a_(non-*))`.
    pub fn decompose(&self) -> (RandomVariable, RandomVariable, RandomVariable) {
        let star = self.star_support();
        let mut diag = RandomVariable::zero(self.graph.clone());
        let mut paired = diag.clone();
        let mut rest = diag.clone();
        for (l, c) in &self.terms {
            let target = if l.is_vertex() {
                &mut diag
            } else if star.contains(l.word()) {
                &mut paired
            } else {
                &mut rest
            };
            target.add_term(l.clone(), c.clone());
        }
        (diag, paired, rest)
    }

    pub fn is_diagonal(&self) -> bool {
        self.terms.keys().all(Letter::is_vertex)
    }

    pub fn adjoint(&self) -> RandomVariable {
        RandomVariable::from_terms(
            self.graph.clone(),
            self.terms.iter().map(|(l, c)| (l.adjoint(), c.conj())),
        )
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.adjoint() == *self
    }

    pub fn check_same_graph(&self, other: &RandomVariable) -> Result<()> {
        if same_graph(&self.graph, &other.graph) {
            Ok(())
        } else {
            Err(Error::GraphMismatch)
        }
    }

    pub fn add(&self, other: &RandomVariable) -> Result<RandomVariable> {
        self.check_same_graph(other)?;
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> RandomVariable {
        RandomVariable::from_terms(
            self.graph.clone(),
            self.terms.iter().map(|(l, x)| (l.clone(), x * c)),
        )
    }

    /// `E(a) = sum_{v in V(G:a)} p_v L[v]`.
    pub fn expectation(&self) -> DiagonalElement {
        self.terms
            .iter()
            .filter(|(l, _)| l.is_vertex())
            .map(|(l, c)| (l.word().source(), c.clone()))
            .collect()
    }

    pub fn diagonal_part(&self) -> DiagonalElement {
        self.expectation()
    }

    pub fn to_general(&self) -> GeneralElement {
        let mut out = GeneralElement::zero();
        for (l, c) in &self.terms {
            out = out.add(&GeneralElement::from_letter(l, c.clone()));
        }
        out
    }

    /// Keeps only the terms whose word satisfies the predicate.
    pub fn filter_terms<F: Fn(&Letter) -> bool>(&self, keep: F) -> RandomVariable {
        RandomVariable::from_terms(
            self.graph.clone(),
            self.terms
                .iter()
                .filter(|(l, _)| keep(l))
                .map(|(l, c)| (l.clone(), c.clone())),
        )
    }
}

/// Operands accepted by [`multiply`].
pub enum Operand<'a> {
    Variable(&'a RandomVariable),
    General(&'a GeneralElement),
    Diagonal(&'a DiagonalElement),
}

impl Operand<'_> {
    fn to_general(&self) -> GeneralElement {
        match self {
            Operand::Variable(a) => a.to_general(),
            Operand::General(x) => (*x).clone(),
            Operand::Diagonal(d) => GeneralElement::from(*d),
        }
    }
}

/// Bilinear product reduced in CK mode.
pub fn multiply(x: Operand<'_>, y: Operand<'_>) -> Result<GeneralElement> {
    if let (Operand::Variable(a), Operand::Variable(b)) = (&x, &y) {
        a.check_same_graph(b)?;
    }
    Ok(x.to_general().mul(&y.to_general()))
}
