//! Equations `F(T(x)) = F(t)` for a monic integer polynomial `F`.
//!
//! `G(X) = F(X) - F(t)` is monic with integer coefficients, and a rational
//! root of such a polynomial is an integer. So `T(x)` must be a positive
//! integer root of `G`, and the question reduces to `T(x) = v` for the
//! admissible levels `v` of the base family.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::family::{Family, Tuple};
use super::roots::positive_integer_roots;
use crate::laurent::Monomial;
use crate::{Error, QPoly};

pub const NON_MONIC_EXPLANATION: &str = "F must be monic: the reduction relies on every rational root of \
F(X) - F(t) being an integer, which fails otherwise. With the rank-2 Markov invariant \
(x1^2 + x2^2 + 1)/(x1 x2), F(X) = 4X^2 - 17X + 18 and t = 2 admit the solution (2, 2), and \
F(X) = 3X^2 - 20X + 36 and t = 3 admit (1, 3) and (10, 3); none of them is reached from (1, 1) by mutations";

#[derive(Clone, Debug)]
pub struct FComposed {
    pub base: Family,
    /// Univariate polynomial in `x1` standing for `X`.
    pub f: QPoly,
    pub t: BigInt,
}

#[derive(Clone, Debug)]
pub struct FComposedDecision {
    pub base: Family,
    pub f_at_t: BigInt,
    /// Positive integer roots of `F(X) - F(t)`.
    pub roots_of_g: Vec<BigInt>,
    /// Admissible levels `v` with `F(v) = F(t)`.
    pub admissible_hits: Vec<u64>,
    /// Fundamental solutions generating the solution set.
    pub generators: Vec<Tuple>,
    pub solvable: bool,
}

/// Integer coefficients, low to high, of a monic non-constant `F`.
pub fn validate_f(f: &QPoly) -> Result<Vec<BigInt>, Error> {
    if f.nvars() != 1 {
        return Err(Error::Dimension {
            expected: 1,
            got: f.nvars(),
        });
    }
    let deg = f.degree_in(0).unwrap_or(0);
    if deg == 0 {
        return Err(Error::Domain("F must be non-constant".into()));
    }
    let coeffs: Vec<BigRational> = (0..=deg).map(|d| f.coeff(&Monomial(vec![d]))).collect();
    if coeffs.iter().any(|c| !c.is_integer()) {
        return Err(Error::Domain("F must have integer coefficients".into()));
    }
    if !coeffs[deg as usize].is_one() {
        return Err(Error::Domain(NON_MONIC_EXPLANATION.into()));
    }
    Ok(coeffs.iter().map(|c| c.to_integer()).collect())
}

pub fn solve_f_composed(spec: &FComposed) -> Result<FComposedDecision, Error> {
    let coeffs = validate_f(&spec.f)?;
    let eval = |x: &BigInt| {
        coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    };
    let f_at_t = eval(&spec.t);
    let mut g = coeffs.clone();
    g[0] -= &f_at_t;
    let roots_of_g = positive_integer_roots(&g).expect("non-constant");
    let admissible_hits: Vec<u64> = spec
        .base
        .admissible_values()
        .iter()
        .copied()
        .filter(|&v| eval(&BigInt::from(v)) == f_at_t)
        .collect();
    let generators = admissible_hits
        .iter()
        .filter_map(|&v| spec.base.fundamental(v))
        .collect();
    Ok(FComposedDecision {
        base: spec.base,
        f_at_t,
        roots_of_g,
        solvable: !admissible_hits.is_empty(),
        admissible_hits,
        generators,
    })
}

/// Whether `F(T(x)) = F(t)` holds exactly at `x`. No monic requirement.
pub fn f_composed_holds(base: Family, f: &QPoly, t: &BigInt, x: &[BigInt]) -> bool {
    if x.len() != base.rank() || x.iter().any(|v| !v.is_positive()) {
        return false;
    }
    let pt: Vec<BigRational> = x
        .iter()
        .map(|v| BigRational::from_integer(v.clone()))
        .collect();
    let Some(tx) = base.invariant().eval(&pt) else {
        return false;
    };
    f.eval(&[tx]) == f.eval(&[BigRational::from_integer(t.clone())])
}
