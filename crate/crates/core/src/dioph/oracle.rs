//! Brute-force oracles. Independent of the mutation machinery: they only
//! evaluate the equations.

use num_bigint::BigInt;
use rayon::prelude::*;

use super::family::{Family, Tuple};

fn sides_i128(family: Family, x: &[i128], k: i128) -> Option<(i128, i128)> {
    let sq = |v: i128| v.checked_mul(v);
    Some(match family {
        Family::Markov3 => {
            let l = sq(x[0])?.checked_add(sq(x[1])?)?.checked_add(sq(x[2])?)?;
            (
                l,
                k.checked_mul(x[0])?.checked_mul(x[1])?.checked_mul(x[2])?,
            )
        }
        Family::Lampe3 => {
            let (b2, c2) = (sq(x[1])?, sq(x[2])?);
            let l = sq(x[0])?
                .checked_add(sq(b2)?)?
                .checked_add(sq(c2)?)?
                .checked_add(2 * x[0] * b2)?
                .checked_add(2 * x[0] * c2)?;
            (l, k.checked_mul(x[0])?.checked_mul(b2)?.checked_mul(c2)?)
        }
        Family::Rank2Markov => (
            sq(x[0])?.checked_add(sq(x[1])?)?.checked_add(1)?,
            k.checked_mul(x[0])?.checked_mul(x[1])?,
        ),
        Family::Rank2Quartic => {
            let b2 = sq(x[1])?;
            (
                sq(b2)?.checked_add(sq(x[0] + 1)?)?,
                k.checked_mul(x[0])?.checked_mul(b2)?,
            )
        }
    })
}

fn holds(family: Family, x: &[i128], k: u64) -> bool {
    match sides_i128(family, x, k as i128) {
        Some((l, r)) => l == r,
        None => {
            let big: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
            family.is_solution(&big, k)
        }
    }
}

fn to_tuple(x: &[i128]) -> Tuple {
    x.iter().map(|&v| BigInt::from(v)).collect()
}

/// Every solution with all coordinates in `1..=bound`, sorted.
///
/// Rank 3: loops over `(x2, x3)` and solves the equation, which is monic
/// quadratic in `x1`, exactly. Rank 2: double loop.
pub fn brute_force(family: Family, k: u64, bound: u64) -> Vec<Tuple> {
    let n = bound as i128;
    let mut out: Vec<Tuple> = match family.rank() {
        2 => (1..=n)
            .into_par_iter()
            .flat_map_iter(|a| {
                (1..=n)
                    .filter(move |&b| holds(family, &[a, b], k))
                    .map(move |b| to_tuple(&[a, b]))
            })
            .collect(),
        _ => (1..=n)
            .into_par_iter()
            .flat_map_iter(|b| {
                (1..=n).flat_map(move |c| {
                    first_coordinate_roots(family, k, b, c, n)
                        .into_iter()
                        .map(move |a| to_tuple(&[a, b, c]))
                })
            })
            .collect(),
    };
    out.sort();
    out
}

/// Roots `a` in `1..=bound` of `a^2 + p a + q = 0`.
fn first_coordinate_roots(family: Family, k: u64, b: i128, c: i128, bound: i128) -> Vec<i128> {
    let k = BigInt::from(k);
    let (b, c) = (BigInt::from(b), BigInt::from(c));
    let (p, q) = match family {
        Family::Markov3 => (-(&k * &b * &c), &b * &b + &c * &c),
        Family::Lampe3 => {
            let (bb, cc) = (&b * &b, &c * &c);
            (2 * &bb + 2 * &cc - &k * &bb * &cc, &bb * &bb + &cc * &cc)
        }
        _ => unreachable!("rank-3 families only"),
    };
    let d: BigInt = &p * &p - 4 * &q;
    if d < BigInt::from(0) {
        return Vec::new();
    }
    let r = d.sqrt();
    if &r * &r != d {
        return Vec::new();
    }
    let mut roots = Vec::new();
    for num in [-&p - &r, -&p + &r] {
        if num > BigInt::from(0) && (&num % 2u32) == BigInt::from(0) {
            let a = num / 2u32;
            if a <= BigInt::from(bound) {
                let a = i128::try_from(a).expect("bounded");
                if !roots.contains(&a) {
                    roots.push(a);
                }
            }
        }
    }
    roots
}

/// Every solution in the box by evaluating every point. Slow; used to
/// validate [`brute_force`].
pub fn brute_force_exhaustive(family: Family, k: u64, bound: u64) -> Vec<Tuple> {
    let n = bound as i128;
    let rank = family.rank();
    let mut out: Vec<Tuple> = (1..=n)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut found = Vec::new();
            if rank == 2 {
                for b in 1..=n {
                    if holds(family, &[a, b], k) {
                        found.push(to_tuple(&[a, b]));
                    }
                }
            } else {
                for b in 1..=n {
                    for c in 1..=n {
                        if holds(family, &[a, b, c], k) {
                            found.push(to_tuple(&[a, b, c]));
                        }
                    }
                }
            }
            found
        })
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_oracle_matches_exhaustive() {
        for family in [Family::Markov3, Family::Lampe3] {
            for k in [1, 3, 7] {
                assert_eq!(
                    brute_force(family, k, 40),
                    brute_force_exhaustive(family, k, 40),
                    "{family} {k}"
                );
            }
        }
    }

    #[test]
    fn small_markov_box() {
        let sols = brute_force(Family::Markov3, 3, 5);
        // (1,1,1), three permutations of (1,1,2), six of (1,2,5).
        assert_eq!(sols.len(), 10);
    }
}
