//! Integer roots of univariate polynomials and square tests.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// `{x^2 mod m : x in 0..m}`, sorted.
pub fn square_residues(m: u64) -> Vec<u64> {
    assert!(m >= 2, "modulus must be at least 2");
    let mut seen = vec![false; m as usize];
    for x in 0..m {
        seen[((x as u128 * x as u128) % m as u128) as usize] = true;
    }
    (0..m).filter(|&r| seen[r as usize]).collect()
}

/// Evaluate `sum c_i y^i` (coefficients low to high).
pub fn eval_int(coeffs: &[BigInt], y: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * y + c)
}

/// Clear denominators of rational coefficients.
pub fn clear_denominators(coeffs: &[BigRational]) -> Vec<BigInt> {
    let l = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
        .collect()
}

/// Positive integer roots, ascending. `None` when the polynomial is
/// identically zero.
///
/// After dividing out the largest power of `y`, a positive integer root
/// divides the constant term and is at most the Cauchy bound
/// `1 + max |c_i / c_n|`; candidates are scanned up to the smaller of the two.
pub fn positive_integer_roots(coeffs: &[BigInt]) -> Option<Vec<BigInt>> {
    let hi = coeffs.iter().rposition(|c| !c.is_zero())?;
    let lo = coeffs.iter().position(|c| !c.is_zero())?;
    let p = &coeffs[lo..=hi];
    if p.len() == 1 {
        return Some(Vec::new());
    }
    let lead = p[p.len() - 1].abs();
    let max_ratio = p[..p.len() - 1]
        .iter()
        .map(|c| c.abs().div_ceil(&lead))
        .max()
        .unwrap_or_default();
    let cap = (max_ratio + 1u32).min(p[0].abs());
    let mut out = Vec::new();
    let mut y = BigInt::one();
    while y <= cap {
        if (&p[0] % &y).is_zero() && eval_int(p, &y).is_zero() {
            out.push(y.clone());
        }
        y += 1u32;
    }
    Some(out)
}
