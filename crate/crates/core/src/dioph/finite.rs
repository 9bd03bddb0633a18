//! Finite-type equations `T(x1, x2) = T(a, b)` with `T` built from a
//! rank-2 finite-type catalog.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::family::Tuple;
use super::roots::{clear_denominators, positive_integer_roots};
use crate::laurent::{is_reductive, ReductivityWitness};
use crate::seeds::{
    build_invariant, enumerate_finite_type, FiniteType, InvariantSpec, SymmetricFn,
};
use crate::{Error, QLaurentPoly, QPoly, QRationalFn};

#[derive(Clone, Debug)]
pub struct FiniteTypeEquation {
    pub invariant: InvariantSpec,
    /// Positive integer point `(a, b)` fixing the level.
    pub point: (BigInt, BigInt),
}

impl FiniteTypeEquation {
    /// `Φ = e1` with the `F` that reproduces the classic equation for each
    /// type, at `(1, 1)`:
    ///
    /// * `A1xA1`, `F = X1 + X2`: `x1^2 x2 + x1 x2^2 + 2 x1 + 2 x2 = 6 x1 x2`
    /// * `A2`, `F = X1`: `x1^2 x2 + x1 x2^2 + x1^2 + x2^2 + 2 x1 + 2 x2 + 1 = 9 x1 x2`
    /// * `B2`, `F = X1`: `x2^4 + x1^2 x2^2 + 2 x2^2 + x1^2 + 2 x1 + 1 = 8 x1 x2^2`
    /// * `G2`, `F = X2`: `x2^4 + x1 x2^3 + x2^3 + x1^2 x2 + 2 x1 x2 + x1^2 + x2 + 2 x1 + 1 = 11 x1 x2^2`
    pub fn standard(ty: FiniteType) -> Self {
        let x = |i| QPoly::var(2, i);
        let f = match ty {
            FiniteType::A1xA1 => &x(0) + &x(1),
            FiniteType::A2 | FiniteType::B2 => x(0),
            FiniteType::G2 => x(1),
        };
        FiniteTypeEquation {
            invariant: InvariantSpec {
                ty,
                phi: SymmetricFn::Elementary(1),
                f,
            },
            point: (BigInt::one(), BigInt::one()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSolution {
    pub x: Tuple,
    /// Catalog word taking `(a, b)` here, when the solution lies in the
    /// mutation orbit of `(a, b)`.
    pub orbit_word: Option<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct FiniteSolveReport {
    pub invariant: QRationalFn,
    /// `T(a, b)`.
    pub level: BigRational,
    pub witness: ReductivityWitness,
    /// `floor(T(a, b)) + 1`, the bound on `min(x1, x2)`.
    pub min_bound: BigInt,
    pub solutions: Vec<FiniteSolution>,
}

/// All positive integer solutions.
///
/// With `T = f / (x1^u x2^v)`, the equation is `f - T(a, b) x1^u x2^v = 0`.
/// For each value `m` of `min(x1, x2)` up to `floor(T(a, b)) + 1`, fixing
/// one coordinate to `m` leaves a univariate polynomial in the other whose
/// positive integer roots are found exactly (they divide the constant term
/// after clearing denominators and lie below the Cauchy bound). `max_scan`
/// limits that bound.
pub fn solve_finite_type(
    eq: &FiniteTypeEquation,
    max_scan: &BigInt,
) -> Result<FiniteSolveReport, Error> {
    let (a, b) = &eq.point;
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::Domain("the initial point must be positive".into()));
    }
    let built = build_invariant(&eq.invariant)?;
    if built.constant.is_some() {
        return Err(Error::Domain("the built invariant is constant".into()));
    }
    let laurent = QLaurentPoly::from_rational(&built.value)
        .ok_or_else(|| Error::Domain("the built invariant is not a Laurent polynomial".into()))?;
    let witness = is_reductive(&laurent)?.ok_or_else(|| {
        Error::Domain("the built invariant is not reductive; finiteness is not guaranteed".into())
    })?;

    let big = |v: &BigInt| BigRational::from_integer(v.clone());
    let level = laurent.eval(&[big(a), big(b)]).expect("positive point");
    let (f, mono) = laurent.split();
    let p = &f - &QPoly::monomial(2, mono, level.clone());
    let min_bound = level.floor().to_integer() + 1;

    let mut found = BTreeSet::new();
    let mut m = BigInt::one();
    while m <= min_bound {
        for fixed in 0..2 {
            let mut images = vec![QPoly::var(1, 0), QPoly::var(1, 0)];
            images[fixed] = QPoly::constant(1, big(&m));
            let uni = p.compose(&images);
            let deg = uni.degree_in(0).unwrap_or(0) as usize;
            let coeffs: Vec<BigRational> = (0..=deg)
                .map(|d| uni.coeff(&crate::laurent::Monomial(vec![d as u32])))
                .collect();
            let ints = clear_denominators(&coeffs);
            check_scan(&ints, max_scan)?;
            let roots = positive_integer_roots(&ints).ok_or_else(|| {
                Error::Domain(format!(
                    "infinitely many solutions with a coordinate equal to {m}"
                ))
            })?;
            for y in roots.into_iter().filter(|y| *y >= m) {
                let mut x = vec![y.clone(), y];
                x[fixed] = m.clone();
                found.insert(x);
            }
        }
        m += 1u32;
    }

    let orbit = orbit_of(eq.invariant.ty, a, b);
    let solutions = found
        .into_iter()
        .map(|x| {
            let orbit_word = orbit.get(&x).cloned();
            FiniteSolution { x, orbit_word }
        })
        .collect();
    Ok(FiniteSolveReport {
        invariant: built.value,
        level,
        witness,
        min_bound,
        solutions,
    })
}

fn check_scan(coeffs: &[BigInt], max_scan: &BigInt) -> Result<(), Error> {
    let lo = match coeffs.iter().position(|c| !c.is_zero()) {
        Some(i) => i,
        None => return Ok(()),
    };
    if coeffs[lo].abs() > *max_scan && coeffs.iter().rposition(|c| !c.is_zero()) != Some(lo) {
        let lead = coeffs
            .iter()
            .rev()
            .find(|c| !c.is_zero())
            .expect("nonzero")
            .abs();
        let cauchy = coeffs
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_default()
            + 1;
        if cauchy > *max_scan {
            return Err(Error::Domain(format!(
                "root scan would exceed the cap {max_scan}"
            )));
        }
    }
    Ok(())
}

/// Integer points of the catalog clusters evaluated at `(a, b)`, with the
/// word reaching each.
fn orbit_of(ty: FiniteType, a: &BigInt, b: &BigInt) -> BTreeMap<Tuple, Vec<usize>> {
    let cat = enumerate_finite_type(ty);
    let pt = [
        BigRational::from_integer(a.clone()),
        BigRational::from_integer(b.clone()),
    ];
    let mut out = BTreeMap::new();
    for ((c1, c2), w) in cat.clusters.iter().zip(&cat.words) {
        let (Some(v1), Some(v2)) = (c1.eval(&pt), c2.eval(&pt)) else {
            continue;
        };
        if v1.is_integer() && v2.is_integer() && v1.is_positive() && v2.is_positive() {
            out.entry(vec![v1.to_integer(), v2.to_integer()])
                .or_insert_with(|| w.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_expr;

    #[test]
    fn standard_equations_are_the_classic_ones() {
        let cases = [
            (
                FiniteType::A1xA1,
                "(x1^2*x2 + x1*x2^2 + 2*x1 + 2*x2)/(x1*x2)",
                6,
            ),
            (
                FiniteType::A2,
                "(x1^2*x2 + x1*x2^2 + x1^2 + x2^2 + 2*x1 + 2*x2 + 1)/(x1*x2)",
                9,
            ),
            (
                FiniteType::B2,
                "(x2^4 + x1^2*x2^2 + 2*x2^2 + x1^2 + 2*x1 + 1)/(x1*x2^2)",
                8,
            ),
            (
                FiniteType::G2,
                "(x2^4 + x1*x2^3 + x2^3 + x1^2*x2 + 2*x1*x2 + x1^2 + x2 + 2*x1 + 1)/(x1*x2^2)",
                11,
            ),
        ];
        for (ty, expr, level) in cases {
            let built = build_invariant(&FiniteTypeEquation::standard(ty).invariant)
                .unwrap()
                .value;
            let t = parse_expr(expr, 2).unwrap();
            let ratio = (&built / &t)
                .constant_value()
                .unwrap_or_else(|| panic!("{ty}: {built} vs {t}"));
            let one = BigRational::one();
            assert_eq!(
                t.eval(&[one.clone(), one]).unwrap(),
                BigRational::from_integer(level.into())
            );
            assert!(ratio.is_positive());
        }
    }

    #[test]
    fn a2_solutions_are_cluster_values() {
        let r = solve_finite_type(
            &FiniteTypeEquation::standard(FiniteType::A2),
            &BigInt::from(1_000_000),
        )
        .unwrap();
        assert!(!r.solutions.is_empty());
        assert!(r.solutions.iter().all(|s| s.orbit_word.is_some()));
    }
}
