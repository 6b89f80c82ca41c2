//! Exact multivariate polynomial arithmetic over the rationals.

mod monomial;
mod morphism;
mod polynomial;
mod ring;
pub mod syntax;

pub use monomial::Monomial;
pub use morphism::RingMorphism;
pub use polynomial::Polynomial;
pub use ring::PolyRing;

/// Exact rational coefficient; always stored in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
