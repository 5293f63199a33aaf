//! Exact multivariate polynomial arithmetic over ℚ and the Gröbner machinery
//! built on it.

pub mod det;
pub mod groebner;
pub mod monomial;
pub mod monomial_ideal;
pub mod order;
pub mod polynomial;
pub mod ring;
pub mod text;

pub use det::determinant;
pub use groebner::{buchberger, ideal_equal, initial_ideal, normal_form, try_buchberger, GroebnerBasis};
pub use monomial::Monomial;
pub use monomial_ideal::{hilbert_numerator, minimalize, monomial_degree, monomial_dimension};
pub use order::TermOrder;
pub use polynomial::{coeff, homogenize_t, set_t_to_one, Coeff, Polynomial, Term};
pub use ring::{is_homogeneous, Grading, GradingMode, VariableRing};
pub use text::{format_polynomial, parse_polynomial};
