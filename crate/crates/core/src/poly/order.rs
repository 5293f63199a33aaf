use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;

/// The term orders supported by the Gröbner engine. Variable 0 is the first
/// variable of the ring's sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TermOrder {
    /// Degree, then reverse lexicographic over the variable sequence. On
    /// Kazhdan-Lusztig ideals this picks the diagonal term of each minor.
    GradedDiagonal,
    /// Exponent of variable 0 first (larger wins), then graded-diagonal.
    EliminateFirst,
    /// Pure lexicographic with variable 0 largest.
    Lex,
}

impl TermOrder {
    pub const ALL: [TermOrder; 3] = [TermOrder::GradedDiagonal, TermOrder::EliminateFirst, TermOrder::Lex];

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::GradedDiagonal => grevlex(a, b),
            TermOrder::EliminateFirst => a.exponent(0).cmp(&b.exponent(0)).then_with(|| grevlex(a, b)),
            TermOrder::Lex => a.exponents().cmp(b.exponents()),
        }
    }

    /// Whether the order refines total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, TermOrder::GradedDiagonal)
    }
}

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}
