//! Reductivity of two-variable Laurent polynomials.
//!
//! Write `L = f / (x1^u x2^v)` with `(u, v)` as small as possible. `L` is
//! reductive when `f` has a term `x1^u' x2^v'` with `u' >= u`, `v' >= v` and
//! `(u', v') != (u, v)`. Equivalently, `L` itself has a term whose exponents
//! are all nonnegative and not both zero. Such a term grows without bound
//! along every ray, which is what makes level sets finite.

use super::laurent::LaurentPoly;
use crate::scalar::FieldScalar;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductivityWitness {
    pub base_exponents: (u32, u32),
    pub witness_term: (u32, u32),
    /// Exponents of `x1^(u'-u) x2^(v'-v)`.
    pub cofactor_monomial: (u32, u32),
}

/// Returns the graded-lex largest witness, or `None` when `L` is not
/// reductive. Only nonnegative coefficients are in scope.
pub fn is_reductive<C: FieldScalar>(
    l: &LaurentPoly<C>,
) -> Result<Option<ReductivityWitness>, Error> {
    if l.nvars() != 2 {
        return Err(Error::Dimension {
            expected: 2,
            got: l.nvars(),
        });
    }
    if !l.has_nonnegative_coeffs() {
        return Err(Error::NegativeCoefficient);
    }
    let u = l.denominator_exponents();
    let (u, v) = (u[0], u[1]);
    let best = l
        .terms()
        .map(|(e, _)| (e[0], e[1]))
        .filter(|&(a, b)| a >= 0 && b >= 0 && (a, b) != (0, 0))
        .max_by_key(|&(a, b)| (a + b, a, b));
    Ok(best.map(|(a, b)| ReductivityWitness {
        base_exponents: (u, v),
        witness_term: (a as u32 + u, b as u32 + v),
        cofactor_monomial: (a as u32, b as u32),
    }))
}
