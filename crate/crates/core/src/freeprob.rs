//! Amalgamated moments and cumulants over the diagonal subalgebra.
//!
//! Every slot of a moment or cumulant is carried as a [`GeneralElement`], so
//! multilinearity comes for free: a slot holding a sum of Fourier terms is
//! expanded by the product itself.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{diagram_distinct_sets, Graph};
use crate::ncpart::{NcLattice, NoncrossingPartition};
use crate::opcalc::{
    reduce, star_axis_property, DiagonalElement, GeneralElement, Letter, Mode, RandomVariable,
};

/// Largest order accepted by the cumulant routines.
pub const MAX_ORDER: usize = 8;

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::OrderOutOfBounds {
            order: n,
            min: 1,
            max: MAX_ORDER,
        });
    }
    Ok(())
}

/// Slots `d_1 a_1, ..., d_n a_n` of a moment `E(d_1 a_1 ... d_n a_n)`.
#[derive(Clone, Debug)]
pub struct MomentRequest {
    pub d: Vec<DiagonalElement>,
    pub a: Vec<RandomVariable>,
}

impl MomentRequest {
    pub fn new(d: Vec<DiagonalElement>, a: Vec<RandomVariable>) -> Result<MomentRequest> {
        if d.len() != a.len() {
            return Err(Error::LengthMismatch {
                expected: a.len(),
                got: d.len(),
            });
        }
        if let Some(first) = a.first() {
            for x in &a[1..] {
                first.check_same_graph(x)?;
            }
        }
        Ok(MomentRequest { d, a })
    }

    /// All `d_i` equal to the unit.
    pub fn trivial(a: Vec<RandomVariable>) -> Result<MomentRequest> {
        let d = a.iter().map(|x| DiagonalElement::unit(x.graph())).collect();
        MomentRequest::new(d, a)
    }

    /// `n` copies of `a` with unit `d_i`.
    pub fn power(a: &RandomVariable, n: usize) -> MomentRequest {
        MomentRequest::trivial(vec![a.clone(); n]).expect("one graph")
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// The slots `d_i a_i` as general elements.
    pub fn items(&self) -> Vec<GeneralElement> {
        self.d
            .iter()
            .zip(&self.a)
            .map(|(d, a)| GeneralElement::from(d).mul(&a.to_general()))
            .collect()
    }
}

/// Ordered CK product of the items.
pub fn product(items: &[GeneralElement]) -> Option<GeneralElement> {
    let (first, rest) = items.split_first()?;
    Some(rest.iter().fold(first.clone(), |acc, x| acc.mul(x)))
}

/// `E(x_1 ... x_n)`.
pub fn moment_of(items: &[GeneralElement]) -> DiagonalElement {
    product(items).map_or_else(DiagonalElement::zero, |p| p.expectation())
}

pub fn moment(req: &MomentRequest) -> Result<DiagonalElement> {
    if req.is_empty() {
        return Err(Error::OrderTooSmall { order: 0, min: 1 });
    }
    Ok(moment_of(&req.items()))
}

/// Nested evaluation along `p`: an interval block is replaced by `f` of its
/// items, and the resulting diagonal value becomes a left factor of the next
/// remaining item (or a right factor of the previous one when nothing
/// follows). Repeats until every block is consumed.
pub fn nested_eval<F>(
    p: &NoncrossingPartition,
    items: &[GeneralElement],
    mut f: F,
) -> Result<DiagonalElement>
where
    F: FnMut(&[GeneralElement]) -> Result<DiagonalElement>,
{
    if p.n() != items.len() {
        return Err(Error::LengthMismatch {
            expected: p.n(),
            got: items.len(),
        });
    }
    let mut values: Vec<GeneralElement> = items.to_vec();
    let mut live: Vec<usize> = (0..items.len()).collect();
    let mut blocks = p.blocks0();
    let mut last = DiagonalElement::zero();
    while !blocks.is_empty() {
        let (bi, start) = blocks
            .iter()
            .enumerate()
            .find_map(|(bi, b)| {
                let start = live.iter().position(|&x| x == b[0])?;
                let contiguous = b
                    .iter()
                    .enumerate()
                    .all(|(k, &x)| live.get(start + k) == Some(&x));
                contiguous.then_some((bi, start))
            })
            .expect("a noncrossing partition always has an interval block");
        let block = blocks.remove(bi);
        let args: Vec<GeneralElement> = block.iter().map(|&x| values[x].clone()).collect();
        let e = f(&args)?;
        if e.is_zero() {
            return Ok(DiagonalElement::zero());
        }
        live.drain(start..start + block.len());
        let d = GeneralElement::from(&e);
        if let Some(&next) = live.get(start) {
            values[next] = d.mul(&values[next]);
        } else if start > 0 {
            let prev = live[start - 1];
            values[prev] = values[prev].mul(&d);
        } else {
            last = e;
        }
    }
    Ok(last)
}

/// Partition-dependent moment `Ê(π)`.
pub fn partition_moment(
    p: &NoncrossingPartition,
    items: &[GeneralElement],
) -> Result<DiagonalElement> {
    nested_eval(p, items, |block| Ok(moment_of(block)))
}

/// A cumulant with its per-partition breakdown.
#[derive(Clone, Debug, PartialEq)]
pub struct CumulantReport {
    pub n: usize,
    pub value: DiagonalElement,
    /// Partitions with nonzero `Ê(π)`, each with `Ê(π)` and `μ(π, 1_n)`.
    pub contributions: Vec<(NoncrossingPartition, DiagonalElement, i64)>,
}

/// `k_n(x_1, ..., x_n) = sum_π Ê(π) μ(π, 1_n)`.
pub fn cumulant_of(items: &[GeneralElement]) -> Result<CumulantReport> {
    let n = items.len();
    check_order(n)?;
    let lattice = NcLattice::get(n)?;
    let mut value = DiagonalElement::zero();
    let mut contributions = Vec::new();
    for (pi, mu) in lattice.with_mobius() {
        let e = partition_moment(pi, items)?;
        if e.is_zero() {
            continue;
        }
        value = value.add(&e.scale(&mu.into()));
        contributions.push((pi.clone(), e, mu));
    }
    Ok(CumulantReport {
        n,
        value,
        contributions,
    })
}

pub fn cumulant(req: &MomentRequest) -> Result<CumulantReport> {
    cumulant_of(&req.items())
}

/// `k_n(a, ..., a)` for `n = 1..=max_order`.
pub fn trivial_cumulants(a: &RandomVariable, max_order: usize) -> Result<Vec<DiagonalElement>> {
    check_order(max_order)?;
    let x = a.to_general();
    (1..=max_order)
        .map(|n| Ok(cumulant_of(&vec![x.clone(); n])?.value))
        .collect()
}

/// `k_π` nested in the same way as `Ê(π)`.
pub fn partition_cumulant(
    p: &NoncrossingPartition,
    items: &[GeneralElement],
) -> Result<DiagonalElement> {
    nested_eval(p, items, |block| Ok(cumulant_of(block)?.value))
}

fn letter_items(letters: &[Letter]) -> Vec<GeneralElement> {
    letters
        .iter()
        .map(|l| GeneralElement::from_letter(l, crate::Scalar::from_int(1)))
        .collect()
}

/// Whether `Ê(π)` of the monomial is nonzero.
pub fn pi_connected(p: &NoncrossingPartition, letters: &[Letter]) -> Result<bool> {
    Ok(!partition_moment(p, &letter_items(letters))?.is_zero())
}

/// The connected partitions of a monomial and the sum of their Möbius weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuMultiplier {
    pub mu: i64,
    pub connected: Vec<NoncrossingPartition>,
}

pub fn mu_multiplier(letters: &[Letter]) -> Result<MuMultiplier> {
    check_order(letters.len())?;
    let lattice = NcLattice::get(letters.len())?;
    let items = letter_items(letters);
    let mut mu = 0;
    let mut connected = Vec::new();
    for (pi, m) in lattice.with_mobius() {
        if !partition_moment(pi, &items)?.is_zero() {
            mu += m;
            connected.push(pi.clone());
        }
    }
    Ok(MuMultiplier { mu, connected })
}

/// `k_n = μ · E(reduce(m))` for a monomial with the `*`-axis property.
pub fn cumulant_shortcut(letters: &[Letter]) -> Result<DiagonalElement> {
    if !star_axis_property(letters) {
        return Err(Error::Precondition(
            "monomial lacks the *-axis property".into(),
        ));
    }
    let mu = mu_multiplier(letters)?.mu;
    let nf = reduce(letters, Mode::CuntzKrieger);
    // a nonempty letter sequence never reduces to the abstract identity
    let e = match nf.as_vertex() {
        Some(v) => DiagonalElement::projection(v),
        None => DiagonalElement::zero(),
    };
    Ok(e.scale(&mu.into()))
}

/// One slot of a mixed cumulant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    A,
    AStar,
    B,
    BStar,
}

impl Slot {
    fn is_a(self) -> bool {
        matches!(self, Slot::A | Slot::AStar)
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Slot::A => "a",
            Slot::AStar => "a*",
            Slot::B => "b",
            Slot::BStar => "b*",
        })
    }
}

/// A nonzero cumulant found by exhaustive search.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub slots: Vec<Slot>,
    pub value: DiagonalElement,
}

/// Result of a bounded-order exhaustive cumulant search.
#[derive(Clone, Debug, PartialEq)]
pub struct MixedCheck {
    pub max_order: usize,
    pub witness: Option<Witness>,
}

impl MixedCheck {
    pub fn vanish(&self) -> bool {
        self.witness.is_none()
    }
}

/// Tuples over `alphabet` of length `n`, in lexicographic order.
fn tuples(alphabet: &[Slot], n: usize) -> impl Iterator<Item = Vec<Slot>> + '_ {
    let total = alphabet.len().pow(n as u32);
    (0..total).map(move |mut k| {
        let mut t = vec![alphabet[0]; n];
        for slot in t.iter_mut().rev() {
            *slot = alphabet[k % alphabet.len()];
            k /= alphabet.len();
        }
        t
    })
}

/// Searches cumulants over slot tuples accepted by `keep`. A tuple is skipped
/// when folding equal elements onto their first slot gives another accepted
/// tuple, since that one has the same cumulant.
fn search<K>(
    elements: &[(Slot, GeneralElement)],
    min_order: usize,
    max_order: usize,
    keep: K,
) -> Result<MixedCheck>
where
    K: Fn(&[Slot]) -> bool,
{
    check_order(max_order)?;
    let element = |s: Slot| &elements.iter().find(|(t, _)| *t == s).unwrap().1;
    let canonical = |s: Slot| elements.iter().find(|(_, y)| y == element(s)).unwrap().0;
    let full: Vec<Slot> = elements.iter().map(|(s, _)| *s).collect();
    for n in min_order..=max_order {
        for t in tuples(&full, n) {
            if !keep(&t) {
                continue;
            }
            let canon: Vec<Slot> = t.iter().map(|&s| canonical(s)).collect();
            if canon != t && keep(&canon) {
                continue;
            }
            let items: Vec<GeneralElement> = t.iter().map(|&s| element(s).clone()).collect();
            let value = cumulant_of(&items)?.value;
            if !value.is_zero() {
                return Ok(MixedCheck {
                    max_order,
                    witness: Some(Witness { slots: t, value }),
                });
            }
        }
    }
    Ok(MixedCheck {
        max_order,
        witness: None,
    })
}

/// Exhaustive mixed trivial cumulants of `(a, a*, b, b*)` up to `max_order`.
pub fn mixed_cumulants_vanish(
    a: &RandomVariable,
    b: &RandomVariable,
    max_order: usize,
) -> Result<MixedCheck> {
    a.check_same_graph(b)?;
    if max_order < 2 {
        return Err(Error::OrderOutOfBounds {
            order: max_order,
            min: 2,
            max: MAX_ORDER,
        });
    }
    let elements = [
        (Slot::A, a.to_general()),
        (Slot::AStar, a.adjoint().to_general()),
        (Slot::B, b.to_general()),
        (Slot::BStar, b.adjoint().to_general()),
    ];
    search(&elements, 2, max_order, |t| {
        t.iter().any(|s| s.is_a()) && t.iter().any(|s| !s.is_a())
    })
}

/// Outcome of the support-based freeness test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// The path supports are pairwise diagram-distinct.
    Certified,
    Unknown,
}

pub fn freeness_certificate(a: &RandomVariable, b: &RandomVariable) -> Result<Certificate> {
    a.check_same_graph(b)?;
    let (pa, pb) = (a.path_support(), b.path_support());
    Ok(if diagram_distinct_sets(&pa, &pb)? {
        Certificate::Certified
    } else {
        Certificate::Unknown
    })
}

/// Shape of a variable, used as a hint next to the computed verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructuralHint {
    /// `L[w] + L*[w]` for a loop `w`.
    SymmetricLoop,
    /// `L[w] + L*[w]` for a non-loop path `w`.
    SymmetricPath,
    /// A single creation or annihilation generator.
    SingleGenerator,
    Diagonal,
    General,
}

impl StructuralHint {
    pub fn of(a: &RandomVariable) -> StructuralHint {
        let terms: Vec<(&Letter, &crate::Scalar)> = a.terms().collect();
        let one = crate::Scalar::from_int(1);
        if a.is_diagonal() {
            return StructuralHint::Diagonal;
        }
        match terms.as_slice() {
            [(l, _)] if !l.is_vertex() => StructuralHint::SingleGenerator,
            [(l1, c1), (l2, c2)]
                if **c1 == one
                    && **c2 == one
                    && l1.word() == l2.word()
                    && l1.star() != l2.star() =>
            {
                if l1.word().is_loop() {
                    StructuralHint::SymmetricLoop
                } else {
                    StructuralHint::SymmetricPath
                }
            }
            _ => StructuralHint::General,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            StructuralHint::SymmetricLoop => "symmetric loop generator",
            StructuralHint::SymmetricPath => "symmetric path generator",
            StructuralHint::SingleGenerator => "single generator",
            StructuralHint::Diagonal => "diagonal",
            StructuralHint::General => "general",
        }
    }
}

/// Verdicts of [`classify`], valid up to `max_order`.
#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub max_order: usize,
    pub semicircular: bool,
    pub even: bool,
    pub r_diagonal: bool,
    pub hint: StructuralHint,
    /// Trivial cumulants `k_1..k_max_order`.
    pub cumulants: Vec<DiagonalElement>,
    /// First non-alternating cumulant of `(a, a*)` that does not vanish.
    pub r_diagonal_witness: Option<Witness>,
}

/// Whether a tuple over `{a, a*}` alternates and has even length.
pub fn is_alternating(t: &[Slot]) -> bool {
    t.len().is_multiple_of(2) && t.windows(2).all(|w| w[0] != w[1])
}

/// Non-alternating cumulants of `(a, a*)` for orders `1..=max_order`.
pub fn r_diagonal_check(a: &RandomVariable, max_order: usize) -> Result<MixedCheck> {
    let elements = [
        (Slot::A, a.to_general()),
        (Slot::AStar, a.adjoint().to_general()),
    ];
    search(&elements, 1, max_order, |t| !is_alternating(t))
}

pub fn classify(a: &RandomVariable, max_order: usize) -> Result<Classification> {
    if max_order % 2 == 1 {
        return Err(Error::OddOrder(max_order));
    }
    if max_order < 4 {
        return Err(Error::OrderOutOfBounds {
            order: max_order,
            min: 4,
            max: MAX_ORDER,
        });
    }
    let cumulants = trivial_cumulants(a, max_order)?;
    let sa = a.is_self_adjoint();
    let vanish = |pred: &dyn Fn(usize) -> bool| {
        cumulants
            .iter()
            .enumerate()
            .all(|(i, k)| !pred(i + 1) || k.is_zero())
    };
    let semicircular = sa && vanish(&|n| n != 2) && !cumulants[1].is_zero();
    let even = sa && vanish(&|n| n % 2 == 1);
    let rd = r_diagonal_check(a, max_order)?;
    Ok(Classification {
        max_order,
        semicircular,
        even,
        r_diagonal: rd.vanish(),
        hint: StructuralHint::of(a),
        cumulants,
        r_diagonal_witness: rd.witness,
    })
}

/// `L[w] + L*[w]` for a word given by its literal.
pub fn symmetric_generator(g: &Arc<Graph>, literal: &str) -> Result<RandomVariable> {
    Ok(RandomVariable::symmetric(
        g.clone(),
        &g.parse_word(literal)?,
    ))
}
