//! Truncated Fock-space representation used as a numerical oracle.
//!
//! Letters act on `l2` of the paths of length at most `L` as sparse
//! partial permutation matrices. An identity is only checked on basis
//! vectors that cannot leave the truncation under the operators involved.

use std::collections::HashMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::{Graph, Word};
use crate::opcalc::{reduce, Letter, Mode, Monomial, NormalForm};

/// Numerical tolerance of every check.
pub const TOLERANCE: f64 = 1e-12;

/// The basis `{xi_w : |w| <= L}` in path enumeration order.
#[derive(Clone, Debug)]
pub struct TruncatedBasis {
    max_len: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl TruncatedBasis {
    pub fn new(g: &Graph, max_len: usize) -> TruncatedBasis {
        let words = g.enumerate_paths(max_len);
        let index = words
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        TruncatedBasis {
            max_len,
            words,
            index,
        }
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn position(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Positions of the words of length at most `len`.
    pub fn interior(&self, len: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.words[i].len() <= len)
            .collect()
    }
}

/// Column-sparse complex matrix over a truncated basis.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    cols: Vec<Vec<(usize, Complex64)>>,
    /// Columns whose image was cut off by the truncation.
    boundary: Vec<usize>,
}

impl OperatorMatrix {
    pub fn zero(dim: usize) -> OperatorMatrix {
        OperatorMatrix {
            cols: vec![Vec::new(); dim],
            boundary: Vec::new(),
        }
    }

    pub fn identity(dim: usize) -> OperatorMatrix {
        OperatorMatrix {
            cols: (0..dim)
                .map(|j| vec![(j, Complex64::new(1.0, 0.0))])
                .collect(),
            boundary: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, Complex64)] {
        &self.cols[j]
    }

    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.cols[j]
            .iter()
            .filter(|(r, _)| *r == i)
            .map(|(_, x)| *x)
            .sum()
    }

    fn push(&mut self, row: usize, col: usize, x: Complex64) {
        self.cols[col].push((row, x));
    }

    /// Image of the sparse vector `v`.
    pub fn apply(&self, v: &[(usize, Complex64)]) -> Vec<(usize, Complex64)> {
        compact(
            v.iter()
                .flat_map(|&(j, x)| self.cols[j].iter().map(move |&(i, a)| (i, a * x))),
        )
    }

    /// `self * other`.
    pub fn mul(&self, other: &OperatorMatrix) -> OperatorMatrix {
        OperatorMatrix {
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
            boundary: Vec::new(),
        }
    }

    pub fn add(&self, other: &OperatorMatrix) -> OperatorMatrix {
        OperatorMatrix {
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| compact(a.iter().chain(b).copied()))
                .collect(),
            boundary: Vec::new(),
        }
    }

    pub fn adjoint(&self) -> OperatorMatrix {
        let mut out = OperatorMatrix::zero(self.dim());
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, x) in col {
                out.push(j, i, x.conj());
            }
        }
        for c in &mut out.cols {
            c.sort_by_key(|(i, _)| *i);
        }
        out
    }

    /// Largest entrywise difference over the given columns.
    pub fn max_diff_on(&self, other: &OperatorMatrix, cols: &[usize]) -> f64 {
        let mut worst = 0.0f64;
        for &j in cols {
            let diff = compact(
                self.cols[j]
                    .iter()
                    .copied()
                    .chain(other.cols[j].iter().map(|&(i, x)| (i, -x))),
            );
            for (_, x) in diff {
                worst = worst.max(x.norm());
            }
        }
        worst
    }
}

/// Sums entries with equal index and drops exact zeros.
fn compact<I: IntoIterator<Item = (usize, Complex64)>>(v: I) -> Vec<(usize, Complex64)> {
    let mut acc: HashMap<usize, Complex64> = HashMap::new();
    for (i, x) in v {
        *acc.entry(i).or_default() += x;
    }
    let mut out: Vec<(usize, Complex64)> =
        acc.into_iter().filter(|(_, x)| x.norm() != 0.0).collect();
    out.sort_by_key(|(i, _)| *i);
    out
}

/// The matrix of a letter on the truncated space.
pub fn represent(letter: &Letter, basis: &TruncatedBasis) -> Result<OperatorMatrix> {
    let w = letter.word();
    if w.len() > basis.max_len() {
        return Err(Error::TruncationExceeded {
            len: w.len(),
            margin: basis.max_len(),
        });
    }
    let one = Complex64::new(1.0, 0.0);
    let mut m = OperatorMatrix::zero(basis.dim());
    for (j, h) in basis.words().iter().enumerate() {
        if letter.star() {
            // L*[w] xi_{w h} = xi_h
            if let Some(rest) = h.strip_prefix(w) {
                let i = basis.position(&rest).expect("suffix of a basis word");
                m.push(i, j, one);
            }
        } else if let Some(wh) = w.concat(h) {
            match basis.position(&wh) {
                Some(i) => m.push(i, j, one),
                None => m.boundary.push(j),
            }
        }
    }
    Ok(m)
}

fn represent_normal_form(nf: &NormalForm, basis: &TruncatedBasis) -> Result<OperatorMatrix> {
    Ok(match nf {
        NormalForm::Zero => OperatorMatrix::zero(basis.dim()),
        NormalForm::Identity => OperatorMatrix::identity(basis.dim()),
        NormalForm::Pair { alpha, beta } => {
            let c = represent(&Letter::creation(alpha.clone()), basis)?;
            let a = represent(&Letter::annihilation(beta.clone()), basis)?;
            c.mul(&a)
        }
    })
}

fn product(letters: &[Letter], basis: &TruncatedBasis) -> Result<OperatorMatrix> {
    letters
        .iter()
        .try_fold(OperatorMatrix::identity(basis.dim()), |acc, l| {
            Ok(acc.mul(&represent(l, basis)?))
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// A relation that is known not to hold in the representation, together
    /// with a concrete violation.
    Counterexample,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Counterexample => "counterexample",
        }
    }
}

/// A basis vector on which two sides of a relation differ.
#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    pub operator: String,
    pub vector: String,
    pub observed: f64,
    pub expected: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationCheck {
    pub relation: String,
    pub status: Status,
    pub max_error: f64,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationReport {
    pub truncation: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    /// Whether every representation-true relation passed.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, relation: &str) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| c.relation == relation)
    }
}

fn relation(name: &str, max_error: f64) -> RelationCheck {
    RelationCheck {
        relation: name.to_string(),
        status: if max_error <= TOLERANCE {
            Status::Pass
        } else {
            Status::Fail
        },
        max_error,
        counterexamples: Vec::new(),
    }
}

/// Checks the relations that hold on the Fock space and exhibits the failure
/// of `L[w] L*[w] = L[s(w)]`. Paths up to length `L / 2` are tested.
pub fn verify_relations(g: &Graph, max_len: usize) -> Result<RelationReport> {
    if max_len < 2 {
        return Err(Error::OrderTooSmall {
            order: max_len,
            min: 2,
        });
    }
    let basis = TruncatedBasis::new(g, max_len);
    let dim = basis.dim();
    let paths: Vec<Word> = g
        .enumerate_paths(max_len / 2)
        .into_iter()
        .filter(|w| !w.is_vertex())
        .collect();

    let mut isometry = 0.0f64;
    let mut partial = 0.0f64;
    let mut ck = RelationCheck {
        relation: "range_projection_collapse".into(),
        status: Status::Pass,
        max_error: 0.0,
        counterexamples: Vec::new(),
    };
    for w in &paths {
        let c = represent(&Letter::creation(w.clone()), &basis)?;
        let a = represent(&Letter::annihilation(w.clone()), &basis)?;
        let interior = basis.interior(max_len - w.len());
        let r = represent(&Letter::creation(w.range_word()), &basis)?;
        isometry = isometry.max(a.mul(&c).max_diff_on(&r, &interior));
        partial = partial.max(c.mul(&a).mul(&c).max_diff_on(&c, &interior));

        let s = represent(&Letter::creation(w.source_word()), &basis)?;
        let cc = c.mul(&a);
        let err = cc.max_diff_on(&s, &interior);
        ck.max_error = ck.max_error.max(err);
        let v = basis.position(&w.source_word()).expect("vertex in basis");
        let observed = cc.entry(v, v).re;
        if (observed - 1.0).abs() > TOLERANCE {
            ck.counterexamples.push(Counterexample {
                operator: format!("L[{0}]L*[{0}]", g.format_word(w)),
                vector: g.format_word(&w.source_word()),
                observed,
                expected: 1.0,
            });
        }
    }
    if !ck.counterexamples.is_empty() {
        ck.status = Status::Counterexample;
    }

    let all = basis.interior(max_len);
    let mut projection = 0.0f64;
    let mut resolution = OperatorMatrix::zero(dim);
    for v in g.vertex_ids() {
        let p = represent(&Letter::creation(Word::vertex(v)), &basis)?;
        projection = projection
            .max(p.mul(&p).max_diff_on(&p, &all))
            .max(p.adjoint().max_diff_on(&p, &all));
        resolution = resolution.add(&p);
    }
    let identity = resolution.max_diff_on(&OperatorMatrix::identity(dim), &all);

    Ok(RelationReport {
        truncation: max_len,
        checks: vec![
            relation("isometry", isometry),
            relation("partial_isometry", partial),
            relation("vertex_projection", projection),
            relation("identity_resolution", identity),
            ck,
        ],
    })
}

/// Outcome of comparing a monomial's matrix with its Toeplitz normal form.
#[derive(Clone, Debug, PartialEq)]
pub struct CrossCheck {
    pub normal_form: NormalForm,
    pub max_error: f64,
}

impl CrossCheck {
    pub fn matches(&self) -> bool {
        self.max_error <= TOLERANCE
    }
}

/// Compares the product of the represented letters with the represented
/// Toeplitz normal form on words of length at most `L - c`, where `c` is the
/// total creation length. The coefficient scales both sides alike.
pub fn cross_check_reduction(m: &Monomial, g: &Graph, max_len: usize) -> Result<CrossCheck> {
    let margin: usize = m
        .letters
        .iter()
        .filter(|l| !l.star())
        .map(|l| l.word().len())
        .sum();
    let longest = m.letters.iter().map(|l| l.word().len()).max().unwrap_or(0);
    if margin > max_len || longest > max_len {
        return Err(Error::TruncationExceeded {
            len: margin.max(longest),
            margin: max_len,
        });
    }
    let basis = TruncatedBasis::new(g, max_len);
    let lhs = product(&m.letters, &basis)?;
    let normal_form = reduce(&m.letters, Mode::Toeplitz);
    let rhs = represent_normal_form(&normal_form, &basis)?;
    let max_error = lhs.max_diff_on(&rhs, &basis.interior(max_len - margin));
    Ok(CrossCheck {
        normal_form,
        max_error,
    })
}
