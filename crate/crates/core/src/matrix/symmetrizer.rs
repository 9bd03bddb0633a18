use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExchangeMatrix;

/// Propagate ratios `d_j = d_i * b_ij / (-b_ji)` over each connected
/// component, check every edge, then clear denominators per component.
pub(super) fn minimal_symmetrizer(b: &ExchangeMatrix<BigInt>) -> Option<Vec<BigInt>> {
    let n = b.n();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    for comp in b.components() {
        let root = comp[0];
        d[root] = Some(BigRational::one());
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            let di = d[i].clone().expect("visited");
            for j in 0..n {
                let (bij, bji) = (b.get(i, j), b.get(j, i));
                if bij.is_zero() && bji.is_zero() {
                    continue;
                }
                if bij.is_zero() || bji.is_zero() || bij.is_positive() == bji.is_positive() {
                    return None;
                }
                let want = &di * BigRational::new(bij.clone(), -bji.clone());
                match &d[j] {
                    Some(dj) if *dj != want => return None,
                    Some(_) => {}
                    None => {
                        d[j] = Some(want);
                        stack.push(j);
                    }
                }
            }
        }
        let lcm = comp
            .iter()
            .map(|&v| d[v].as_ref().expect("visited").denom().clone())
            .fold(BigInt::one(), |a, x| a.lcm(&x));
        let scaled: Vec<BigInt> = comp
            .iter()
            .map(|&v| (d[v].clone().unwrap() * &lcm).to_integer())
            .collect();
        let g = scaled.iter().fold(BigInt::zero(), |a, x| a.gcd(x));
        for (&v, s) in comp.iter().zip(scaled) {
            d[v] = Some(BigRational::from_integer(s / &g));
        }
    }
    Some(
        d.into_iter()
            .map(|v| v.expect("every vertex visited").to_integer())
            .collect(),
    )
}
