//! Lattice paths of monomials and the `*`-axis property.

use super::reduce::{reduce, Letter, Mode};

/// Connected step sequence in the integer plane starting at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticePath {
    /// Path of a monomial that reduces to zero.
    Empty,
    Steps(Vec<(i64, i64)>),
}

impl LatticePath {
    /// Vertex letters step `(0, 1)`; `L[w]` steps `(|w|, |w|)`; `L*[w]` steps `(-|w|, -|w|)`.
    pub fn of(letters: &[Letter]) -> LatticePath {
        if reduce(letters, Mode::CuntzKrieger).is_zero() {
            return LatticePath::Empty;
        }
        LatticePath::Steps(
            letters
                .iter()
                .map(|l| {
                    let k = l.word().len() as i64;
                    if l.is_vertex() {
                        (0, 1)
                    } else if l.star() {
                        (-k, -k)
                    } else {
                        (k, k)
                    }
                })
                .collect(),
        )
    }

    pub fn endpoint(&self) -> Option<(i64, i64)> {
        match self {
            LatticePath::Empty => None,
            LatticePath::Steps(steps) => Some(
                steps
                    .iter()
                    .fold((0, 0), |(x, y), (dx, dy)| (x + dx, y + dy)),
            ),
        }
    }

    /// Nonempty and ending on the vertical axis.
    pub fn has_star_axis_property(&self) -> bool {
        matches!(self.endpoint(), Some((0, _)))
    }
}

pub fn lattice_path(letters: &[Letter]) -> LatticePath {
    LatticePath::of(letters)
}

pub fn star_axis_property(letters: &[Letter]) -> bool {
    LatticePath::of(letters).has_star_axis_property()
}
