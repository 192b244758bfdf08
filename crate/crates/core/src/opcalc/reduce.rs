//! Reduction of generator monomials to normal form `L[alpha] L*[beta]`.

use std::fmt;

use crate::graph::{Graph, Word};
use crate::scalar::Scalar;

/// A generator letter: the creation operator `L[w]` or the annihilation
/// operator `L*[w]`. Vertex letters are projections and always carry
/// `star == false`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    word: Word,
    star: bool,
}

impl Letter {
    pub fn new(word: Word, star: bool) -> Letter {
        let star = star && !word.is_vertex();
        Letter { word, star }
    }

    pub fn creation(word: Word) -> Letter {
        Letter::new(word, false)
    }

    pub fn annihilation(word: Word) -> Letter {
        Letter::new(word, true)
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn star(&self) -> bool {
        self.star
    }

    pub fn adjoint(&self) -> Letter {
        Letter::new(self.word.clone(), !self.star)
    }

    pub fn is_vertex(&self) -> bool {
        self.word.is_vertex()
    }

    /// Rendering in the CLI word-expression syntax, e.g. `e1.e2*`.
    pub fn display(&self, g: &Graph) -> String {
        let mut s = g.word_ids(&self.word).join(".");
        if self.star {
            s.push('*');
        }
        s
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}[{:?}]", if self.star { "*" } else { "" }, self.word)
    }
}

/// A coefficient times an ordered product of letters. The empty product is the unit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial {
    pub letters: Vec<Letter>,
    pub coefficient: Scalar,
}

impl Monomial {
    pub fn new(letters: Vec<Letter>) -> Monomial {
        Monomial {
            letters,
            coefficient: num_traits::One::one(),
        }
    }

    pub fn with_coefficient(letters: Vec<Letter>, coefficient: Scalar) -> Monomial {
        Monomial {
            letters,
            coefficient,
        }
    }

    /// Reverses the letters, flips stars and conjugates the coefficient.
    pub fn adjoint(&self) -> Monomial {
        Monomial {
            letters: self.letters.iter().rev().map(Letter::adjoint).collect(),
            coefficient: self.coefficient.conj(),
        }
    }

    pub fn reduce(&self, mode: Mode) -> NormalForm {
        reduce(&self.letters, mode)
    }
}

/// Which relations the reduction applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Only relations that hold for the operators on the Fock space.
    Toeplitz,
    /// Additionally rewrites `L[w] L*[w]` to `L[s(w)]` after every step.
    CuntzKrieger,
}

/// Reduced form of a monomial (coefficient not included).
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum NormalForm {
    Zero,
    /// The empty product, `sum_v L[v]`.
    Identity,
    /// `L[alpha] L*[beta]` with `r(alpha) = r(beta)`.
    Pair {
        alpha: Word,
        beta: Word,
    },
}

impl NormalForm {
    pub fn pair(alpha: Word, beta: Word) -> NormalForm {
        debug_assert_eq!(alpha.range(), beta.range());
        NormalForm::Pair { alpha, beta }
    }

    pub fn of_letter(letter: &Letter) -> NormalForm {
        let w = letter.word();
        if letter.star() {
            NormalForm::pair(w.range_word(), w.clone())
        } else {
            NormalForm::pair(w.clone(), w.range_word())
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, NormalForm::Zero)
    }

    /// The vertex `v` when the form is the projection `L[v]`.
    pub fn as_vertex(&self) -> Option<crate::graph::VertexId> {
        match self {
            NormalForm::Pair { alpha, beta } if alpha.is_vertex() && beta.is_vertex() => {
                Some(alpha.source())
            }
            _ => None,
        }
    }

    pub fn adjoint(&self) -> NormalForm {
        match self {
            NormalForm::Pair { alpha, beta } => NormalForm::pair(beta.clone(), alpha.clone()),
            other => other.clone(),
        }
    }

    /// A shortest letter sequence that reduces back to this form.
    pub fn letters(&self) -> Option<Vec<Letter>> {
        match self {
            NormalForm::Zero => None,
            NormalForm::Identity => Some(Vec::new()),
            NormalForm::Pair { alpha, beta } => Some(match (alpha.is_vertex(), beta.is_vertex()) {
                (true, true) => vec![Letter::creation(alpha.clone())],
                (false, true) => vec![Letter::creation(alpha.clone())],
                (true, false) => vec![Letter::annihilation(beta.clone())],
                (false, false) => vec![
                    Letter::creation(alpha.clone()),
                    Letter::annihilation(beta.clone()),
                ],
            }),
        }
    }

    /// Right multiplication by one letter.
    pub fn times_letter(&self, letter: &Letter, mode: Mode) -> NormalForm {
        let next = match self {
            NormalForm::Zero => return NormalForm::Zero,
            NormalForm::Identity => NormalForm::of_letter(letter),
            NormalForm::Pair { alpha, beta } => {
                let gamma = letter.word();
                if letter.star() {
                    // L*[beta] L*[gamma] = L*[gamma beta]
                    match gamma.concat(beta) {
                        Some(gb) => NormalForm::pair(alpha.clone(), gb),
                        None => NormalForm::Zero,
                    }
                } else if let Some(rest) = gamma.strip_prefix(beta) {
                    // gamma = beta rest: L*[beta] L[gamma] = L[rest]
                    let range = rest.range_word();
                    let alpha = alpha.concat(&rest).expect("range matches source");
                    NormalForm::pair(alpha, range)
                } else if let Some(rest) = beta.strip_prefix(gamma) {
                    // beta = gamma rest: L*[beta] L[gamma] = L*[rest]
                    NormalForm::pair(alpha.clone(), rest)
                } else {
                    NormalForm::Zero
                }
            }
        };
        match mode {
            Mode::Toeplitz => next,
            Mode::CuntzKrieger => next.collapse(),
        }
    }

    /// Exhaustive application of `L[w] L*[w] = L[s(w)]`.
    pub fn collapse(self) -> NormalForm {
        let mut current = self;
        loop {
            let NormalForm::Pair { alpha, beta } = &current else {
                return current;
            };
            let next = if !beta.is_vertex() {
                alpha.strip_suffix(beta).map(|head| {
                    let r = head.range_word();
                    NormalForm::pair(head, r)
                })
            } else {
                None
            }
            .or_else(|| {
                if alpha.is_vertex() {
                    return None;
                }
                beta.strip_suffix(alpha).map(|head| {
                    let r = head.range_word();
                    NormalForm::pair(r, head)
                })
            });
            match next {
                Some(n) if n != current => current = n,
                _ => return current,
            }
        }
    }

    /// Product of two normal forms, folding the right factor's letters in.
    pub fn times(&self, other: &NormalForm, mode: Mode) -> NormalForm {
        match other.letters() {
            None => NormalForm::Zero,
            Some(letters) => letters
                .iter()
                .fold(self.clone(), |acc, l| acc.times_letter(l, mode)),
        }
    }

    pub fn display(&self, g: &Graph) -> String {
        match self {
            NormalForm::Zero => "0".to_string(),
            NormalForm::Identity => "1".to_string(),
            NormalForm::Pair { alpha, beta } => match self.letters() {
                Some(ls) if ls.len() == 1 => format!("L[{}]", ls[0].display(g)),
                _ => format!(
                    "L[{}] L*[{}]",
                    g.word_ids(alpha).join("."),
                    g.word_ids(beta).join(".")
                ),
            },
        }
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalForm::Zero => write!(f, "Zero"),
            NormalForm::Identity => write!(f, "Identity"),
            NormalForm::Pair { alpha, beta } => write!(f, "Pair({alpha:?}, {beta:?})"),
        }
    }
}

/// Left-to-right reduction of a letter sequence starting from the unit.
pub fn reduce(letters: &[Letter], mode: Mode) -> NormalForm {
    letters
        .iter()
        .fold(NormalForm::Identity, |acc, l| acc.times_letter(l, mode))
}
