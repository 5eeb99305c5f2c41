//! Exact integers, rationals, polynomials and matrices.
//!
//! No floating point is used anywhere below this module.

mod irreducible;
mod matrix;
mod poly;
mod recurrence;

pub use irreducible::{irreducibility_certificate, primes_below, IrreducibilityCertificate};
pub use matrix::{char_poly, hankel, rank_exact, solve, ExactMatrix};
pub(crate) use matrix::char_poly_int as matrix_int_char_poly;
pub use poly::{poly_divides, Poly};
pub use recurrence::{extend_recurrence, hankel_rank, min_recurrence, RecurrenceFit, RecurrenceSpec};

pub use num_bigint::BigInt;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Lifts an integer into the rationals.
pub fn rat(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Lifts a slice of integers into the rationals.
pub fn rats(values: &[BigInt]) -> Vec<Rational> {
    values.iter().cloned().map(Rational::from_integer).collect()
}
