//! Vertex and diagonal compressions.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::freeprob::{mixed_cumulants_vanish, trivial_cumulants, MixedCheck};
use crate::graph::{Graph, VertexId, Word};
use crate::opcalc::{DiagonalElement, GeneralElement, RandomVariable};
use crate::scalar::Scalar;

fn check_vertex(g: &Graph, v: VertexId) -> Result<()> {
    if v.0 < g.vertex_count() {
        Ok(())
    } else {
        Err(Error::UnknownVertex(format!("#{}", v.0)))
    }
}

/// Whether `L[v] L[w] L[v]` is nonzero: `w` is `v` or a loop based at `v`.
fn survives(w: &Word, v: VertexId) -> bool {
    w.source() == v && w.range() == v
}

/// `L[v0] a L[v0]`, keeping the base variable alongside.
#[derive(Clone, Debug, PartialEq)]
pub struct CompressedVariable {
    base: RandomVariable,
    vertex: VertexId,
    compressed: RandomVariable,
}

impl CompressedVariable {
    pub fn base(&self) -> &RandomVariable {
        &self.base
    }

    pub fn vertex(&self) -> VertexId {
        self.vertex
    }

    pub fn variable(&self) -> &RandomVariable {
        &self.compressed
    }

    pub fn into_variable(self) -> RandomVariable {
        self.compressed
    }

    /// `E_{v0}` as the diagonal element `q L[v0]`.
    pub fn expectation(&self) -> DiagonalElement {
        DiagonalElement::single(self.vertex, compressed_expectation(self))
    }
}

pub fn compress_vertex(a: &RandomVariable, v0: VertexId) -> Result<CompressedVariable> {
    check_vertex(a.graph(), v0)?;
    Ok(CompressedVariable {
        base: a.clone(),
        vertex: v0,
        compressed: a.filter_terms(|l| survives(l.word(), v0)),
    })
}

/// The `v0`-entry of `E(x)`.
pub fn compressed_expectation(x: &CompressedVariable) -> Scalar {
    x.compressed.expectation().get(x.vertex)
}

/// Support loops of `a` based at `v0`.
pub fn loops_at(a: &RandomVariable, v0: VertexId) -> BTreeSet<Word> {
    a.path_support()
        .into_iter()
        .filter(|w| survives(w, v0))
        .collect()
}

/// Support loops of `a` based at `v0` that carry both `L[w]` and `L*[w]`.
pub fn star_loops_at(a: &RandomVariable, v0: VertexId) -> BTreeSet<Word> {
    a.star_support()
        .into_iter()
        .filter(|w| survives(w, v0))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Moment,
    RTransform,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesKind::Moment => "moment",
            SeriesKind::RTransform => "rtransform",
        })
    }
}

/// Coefficients `c_1..c_N` of a compressed series.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesCoefficients {
    pub kind: SeriesKind,
    pub vertex: VertexId,
    pub coefficients: Vec<Scalar>,
}

fn check_series_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::OrderTooSmall { order, min: 1 });
    }
    Ok(())
}

/// `c_n = E_{v0}(a_{v0}^n)`.
pub fn compressed_moment_series(
    a: &RandomVariable,
    v0: VertexId,
    order: usize,
) -> Result<SeriesCoefficients> {
    check_series_order(order)?;
    let x = compress_vertex(a, v0)?.into_variable().to_general();
    let mut power = x.clone();
    let mut coefficients = Vec::with_capacity(order);
    for n in 1..=order {
        if n > 1 {
            power = power.mul(&x);
        }
        coefficients.push(power.expectation().get(v0));
    }
    Ok(SeriesCoefficients {
        kind: SeriesKind::Moment,
        vertex: v0,
        coefficients,
    })
}

/// `c_n` = the `v0`-entry of the trivial `n`-th cumulant of `a_{v0}`.
pub fn compressed_r_transform(
    a: &RandomVariable,
    v0: VertexId,
    order: usize,
) -> Result<SeriesCoefficients> {
    check_series_order(order)?;
    let x = compress_vertex(a, v0)?.into_variable();
    let coefficients = trivial_cumulants(&x, order)?
        .iter()
        .map(|k| k.get(v0))
        .collect();
    Ok(SeriesCoefficients {
        kind: SeriesKind::RTransform,
        vertex: v0,
        coefficients,
    })
}

/// `P_V(a) = sum_j L[v_j] a L[v_j]`.
pub fn diagonal_compress(a: &RandomVariable, vs: &[VertexId]) -> Result<RandomVariable> {
    if vs.is_empty() {
        return Err(Error::Precondition("empty vertex set".into()));
    }
    let mut seen = BTreeSet::new();
    for &v in vs {
        check_vertex(a.graph(), v)?;
        if !seen.insert(v) {
            return Err(Error::RepeatedVertex(a.graph().vertex_name(v).to_string()));
        }
    }
    vs.iter()
        .try_fold(RandomVariable::zero(a.graph().clone()), |acc, &v| {
            acc.add(compress_vertex(a, v)?.variable())
        })
}

/// Support loops of `a` based at both `vi` and `vj`.
pub fn loop_intersection(a: &RandomVariable, vi: VertexId, vj: VertexId) -> Result<BTreeSet<Word>> {
    check_vertex(a.graph(), vi)?;
    check_vertex(a.graph(), vj)?;
    if vi == vj {
        return Err(Error::Precondition(
            "loop intersection needs distinct vertices".into(),
        ));
    }
    let lj = loops_at(a, vj);
    Ok(loops_at(a, vi).intersection(&lj).cloned().collect())
}

/// Mixed cumulants of the two compressions at `v0`.
pub fn compressed_freeness_check(
    a: &RandomVariable,
    b: &RandomVariable,
    v0: VertexId,
    max_order: usize,
) -> Result<MixedCheck> {
    let x = compress_vertex(a, v0)?;
    let y = compress_vertex(b, v0)?;
    mixed_cumulants_vanish(x.variable(), y.variable(), max_order)
}

/// `x^m` as a general element, `x^0` being the unit.
pub fn power(x: &RandomVariable, m: usize) -> GeneralElement {
    let g = x.to_general();
    (0..m).fold(GeneralElement::unit(x.graph()), |acc, _| acc.mul(&g))
}
