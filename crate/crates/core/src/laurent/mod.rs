//! Exact polynomial, rational-function and Laurent-polynomial arithmetic.

mod gcd;
#[allow(clippy::module_inception)]
mod laurent;
mod parse;
mod poly;
mod ratfn;
mod reductive;
mod sequence;

pub use gcd::{content_in, gcd, gcd_many, pseudo_rem};
pub use laurent::LaurentPoly;
pub use parse::{max_variable, parse_expr};
pub use poly::{Monomial, Poly};
pub use ratfn::RationalFn;
pub use reductive::{is_reductive, ReductivityWitness};
pub use sequence::{check_sequence_reductivity, cluster_sequence, SequenceProduct, SequenceReport};
