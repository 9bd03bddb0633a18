//! Cluster-algebra mutation machinery and Markov-type Diophantine equations.
//!
//! Containers are generic over the scalar: exchange matrices over any exact
//! signed integer type ([`scalar::IntScalar`]), polynomials and rational
//! functions over any exact field ([`scalar::FieldScalar`]). The aliases
//! below pick arbitrary precision, which is what every public algorithm uses.

pub mod dioph;
mod error;
pub mod laurent;
pub mod matrix;
pub mod mutclass;
pub mod scalar;
pub mod seeds;

pub use error::Error;

use num_bigint::BigInt;
use num_rational::BigRational;

pub type IntMatrix = matrix::ExchangeMatrix<BigInt>;
/// Machine-word matrices for hot search loops.
pub type SmallMatrix = matrix::ExchangeMatrix<i64>;
pub type QPoly = laurent::Poly<BigRational>;
pub type QRationalFn = laurent::RationalFn<BigRational>;
pub type QLaurentPoly = laurent::LaurentPoly<BigRational>;
