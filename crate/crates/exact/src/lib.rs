//! Exact arithmetic for flat-band computations.
//!
//! Rationals and Gaussian rationals, dense univariate and sparse Laurent and
//! multivariate polynomials, real algebraic numbers with Sturm isolation,
//! number fields `Q(a)(i)`, determinants over commutative rings and integer HNF.

pub mod algebraic;
pub mod factor;
pub mod gaussian;
pub mod lattice;
pub mod laurent;
pub mod matrix;
pub mod mpoly;
pub mod numfield;
pub mod ring;
pub mod sturm;
pub mod unipoly;

pub use algebraic::{real_roots, AlgebraicNumber, RealAlgebraic};
pub use gaussian::Gaussian;
pub use laurent::LaurentPoly;
pub use mpoly::MPoly;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use numfield::{field_of, NumberFieldElement};
pub use ring::{format_rational, parse_rational, rat, ratio, Conj, Field, RationalAlgebra, Ring};
pub use unipoly::UniPoly;

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum ExactError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}
