//! Mutation classes and the search for sign-equivalent exchange matrices.
//!
//! A matrix is sign-equivalent when its mutation class is exactly `{B, -B}`.
//! For irreducible `B` this is the same as `μ_i(B) = -B` for every `i`, and
//! that pointwise test is what the exhaustive search runs on every
//! candidate.

use std::collections::{BTreeMap, HashSet, VecDeque};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::matrix::format::{int_from_json, int_to_json};
use crate::matrix::{matrix_from_json, matrix_to_json, ExchangeMatrix, Permutation};
use crate::scalar::IntScalar;
use crate::{Error, IntMatrix};

/// Default class budget for the general sign-equivalence path.
pub const DEFAULT_CLASS_BUDGET: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassSize {
    Exact(usize),
    ExceededBudget,
}

#[derive(Clone, Debug)]
pub struct MutationClassReport<T> {
    pub representative: ExchangeMatrix<T>,
    pub class_size: ClassSize,
    pub is_sign_equivalent: bool,
    /// Breadth-first order. Present only when the class fits the budget.
    pub members: Option<Vec<ExchangeMatrix<T>>>,
}

/// Breadth-first closure of `b` under all mutations, compared entrywise.
///
/// Fails if some mutation leaves the sign-skew-symmetric matrices, which can
/// happen only for non-symmetrizable input.
pub fn mutation_class<T: IntScalar + std::hash::Hash>(
    b: &ExchangeMatrix<T>,
    budget: usize,
) -> Result<MutationClassReport<T>, Error> {
    assert!(budget >= 1, "budget must be positive");
    let mut seen: HashSet<ExchangeMatrix<T>> = HashSet::new();
    let mut order = vec![b.clone()];
    let mut queue = VecDeque::from([b.clone()]);
    seen.insert(b.clone());
    let mut exceeded = false;
    'bfs: while let Some(m) = queue.pop_front() {
        for k in 1..=m.n() {
            let next = m.mutate(k)?;
            if seen.insert(next.clone()) {
                if seen.len() > budget {
                    exceeded = true;
                    break 'bfs;
                }
                order.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    let neg = -b;
    let is_sign_equivalent = !exceeded && !b.is_zero() && order.len() == 2 && order.contains(&neg);
    Ok(MutationClassReport {
        representative: b.clone(),
        class_size: if exceeded {
            ClassSize::ExceededBudget
        } else {
            ClassSize::Exact(order.len())
        },
        is_sign_equivalent,
        members: (!exceeded).then_some(order),
    })
}

/// Every single mutation sends `b` to `-b`.
pub fn negated_by_every_mutation<T: IntScalar>(b: &ExchangeMatrix<T>) -> bool {
    let neg = -b;
    (1..=b.n()).all(|k| b.mutate_raw(k).map_or(false, |m| m == neg))
}

/// `[B] = {B, -B}`.
pub fn check_sign_equivalent<T: IntScalar + std::hash::Hash>(b: &ExchangeMatrix<T>) -> bool {
    if b.is_zero() {
        return false;
    }
    if b.is_irreducible() {
        return negated_by_every_mutation(b);
    }
    // A class {B, -B} has two elements, so a budget of 3 decides it.
    mutation_class(b, 3).map_or(false, |r| r.is_sign_equivalent)
}

/// Blocks of a matrix after reordering its vertices by component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// `permute(B, perm)` is block diagonal.
    pub perm: Permutation,
    pub blocks: Vec<IntMatrix>,
    pub zero_block: usize,
}

/// Split into irreducible blocks (components with an edge) followed by a
/// zero block collecting isolated vertices.
pub fn decompose(b: &IntMatrix) -> Decomposition {
    let mut order = Vec::with_capacity(b.n());
    let mut isolated = Vec::new();
    let mut blocks = Vec::new();
    for comp in b.components() {
        if comp.len() == 1 {
            isolated.push(comp[0]);
        } else {
            blocks.push(b.submatrix(&comp));
            order.extend(comp);
        }
    }
    let zero_block = isolated.len();
    order.extend(isolated);
    Decomposition {
        perm: Permutation::new(order).expect("components partition the vertices"),
        blocks,
        zero_block,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    /// Least matrix of the orbit under permutations and global sign.
    pub representative: IntMatrix,
    /// Number of distinct matrices in that orbit.
    pub orbit_size: usize,
    /// Minimal skew-symmetrizer, when one exists.
    pub symmetrizer: Option<Vec<BigInt>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignEquivalentCatalog {
    pub rank: usize,
    pub entry_bound: u32,
    pub found: Vec<CatalogEntry>,
    /// Candidates examined, i.e. sign-skew-symmetric matrices in the box.
    pub candidates: u64,
    pub required_symmetrizable: bool,
}

impl SignEquivalentCatalog {
    pub fn to_json(&self) -> Value {
        let found: Vec<Value> = self
            .found
            .iter()
            .map(|e| {
                json!({
                    "representative": matrix_to_json(&e.representative),
                    "orbit_size": e.orbit_size,
                    "symmetrizer": e.symmetrizer.as_ref().map(|d| d.iter().map(int_to_json).collect::<Vec<_>>()),
                })
            })
            .collect();
        json!({
            "rank": self.rank,
            "entry_bound": self.entry_bound,
            "required_symmetrizable": self.required_symmetrizable,
            "candidates": self.candidates,
            "found": found,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let bad = |what: &str| Error::Parse(format!("catalog JSON: {what}"));
        let count = |key: &str| {
            v[key]
                .as_u64()
                .ok_or_else(|| bad(&format!("missing {key}")))
        };
        let mut found = Vec::new();
        for e in v["found"].as_array().ok_or_else(|| bad("missing found"))? {
            let symmetrizer = match &e["symmetrizer"] {
                Value::Null => None,
                Value::Array(d) => Some(
                    d.iter()
                        .map(int_from_json)
                        .collect::<Result<Vec<BigInt>, _>>()?,
                ),
                _ => return Err(bad("symmetrizer must be an array or null")),
            };
            found.push(CatalogEntry {
                representative: matrix_from_json(&e["representative"])?,
                orbit_size: e["orbit_size"]
                    .as_u64()
                    .ok_or_else(|| bad("missing orbit_size"))? as usize,
                symmetrizer,
            });
        }
        Ok(SignEquivalentCatalog {
            rank: count("rank")? as usize,
            entry_bound: u32::try_from(count("entry_bound")?)
                .map_err(|_| bad("entry_bound too large"))?,
            found,
            candidates: count("candidates")?,
            required_symmetrizable: v["required_symmetrizable"]
                .as_bool()
                .ok_or_else(|| bad("missing required_symmetrizable"))?,
        })
    }
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    /// Keep only skew-symmetrizable matrices.
    pub require_symmetrizable: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            require_symmetrizable: true,
        }
    }
}

/// Exhaustive search for irreducible sign-equivalent matrices of rank `n`
/// with `|b_ij| <= entry_bound`, reported one per orbit of permutations and
/// global sign. Parallel via rayon; the output order is deterministic.
///
/// This corroborates a classification inside a box. It proves nothing
/// about larger entries.
pub fn classify_irreducible_sign_equivalent(
    n: usize,
    entry_bound: u32,
    opts: &ClassifyOptions,
) -> Result<SignEquivalentCatalog, Error> {
    if !(1..=4).contains(&n) {
        return Err(Error::UnsupportedRank(n));
    }
    let bound = entry_bound as i64;
    // Admissible (b_ij, b_ji) for one off-diagonal pair.
    let mut pairs: Vec<(i64, i64)> = vec![(0, 0)];
    for a in 1..=bound {
        for c in 1..=bound {
            pairs.push((a, -c));
            pairs.push((-a, c));
        }
    }
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let total = (pairs.len() as u64).pow(slots.len() as u32);

    let hits: Vec<Vec<i64>> = (0..total)
        .into_par_iter()
        .fold(Vec::new, |mut acc, mut code| {
            let mut e = [0i64; 16];
            for &(i, j) in &slots {
                let (a, c) = pairs[(code % pairs.len() as u64) as usize];
                code /= pairs.len() as u64;
                e[i * n + j] = a;
                e[j * n + i] = c;
            }
            let e = &e[..n * n];
            if negated_by_all_flat(e, n) {
                acc.push(e.to_vec());
            }
            acc
        })
        .reduce(Vec::new, |mut a, b| {
            a.extend(b);
            a
        });

    let mut orbits: BTreeMap<Vec<i64>, CatalogEntry> = BTreeMap::new();
    for e in hits {
        let m = ExchangeMatrix::<i64>::from_rows(e.chunks(n).map(<[i64]>::to_vec).collect())
            .expect("candidates are sign-skew-symmetric");
        if m.is_zero() || !m.is_irreducible() {
            continue;
        }
        let sym = m.skew_symmetrizer();
        if opts.require_symmetrizable && sym.is_none() {
            continue;
        }
        let key = m.orbit_key();
        orbits
            .entry(key.entries().to_vec())
            .or_insert_with(|| CatalogEntry {
                representative: key.to_big(),
                orbit_size: orbit_size(&key),
                symmetrizer: key
                    .skew_symmetrizer()
                    .map(|d| d.into_iter().map(BigInt::from).collect()),
            });
    }

    Ok(SignEquivalentCatalog {
        rank: n,
        entry_bound,
        found: orbits.into_values().collect(),
        candidates: total,
        required_symmetrizable: opts.require_symmetrizable,
    })
}

fn orbit_size<T: IntScalar + std::hash::Hash>(b: &ExchangeMatrix<T>) -> usize {
    let mut set = HashSet::new();
    for s in Permutation::all(b.n()) {
        let p = b.permute(&s).expect("same size");
        set.insert(-&p);
        set.insert(p);
    }
    set.len()
}

/// `μ_k(B) = -B` for all `k`, on a flat row-major `i64` matrix, with no
/// allocation. Only entries off row and column `k` need checking, since
/// those are negated by definition.
fn negated_by_all_flat(e: &[i64], n: usize) -> bool {
    for k in 0..n {
        for i in 0..n {
            if i == k {
                continue;
            }
            let bik = e[i * n + k];
            for j in 0..n {
                if j == k || j == i {
                    continue;
                }
                let bkj = e[k * n + j];
                let v = e[i * n + j] + bik.max(0) * bkj + bik * (-bkj).max(0);
                if v != -e[i * n + j] {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn torus_class_has_two_members() {
        let b0 = m(&[&[0, 2, -2], &[-2, 0, 2], &[2, -2, 0]]);
        let r = mutation_class(&b0, 10).unwrap();
        assert_eq!(r.class_size, ClassSize::Exact(2));
        assert!(r.is_sign_equivalent);
    }

    #[test]
    fn zero_class_is_a_singleton() {
        let r = mutation_class(&IntMatrix::zero(2), 10).unwrap();
        assert_eq!(r.class_size, ClassSize::Exact(1));
        assert!(!r.is_sign_equivalent);
        assert!(!check_sign_equivalent(&IntMatrix::zero(2)));
    }

    #[test]
    fn a3_is_not_sign_equivalent() {
        let a3 = m(&[&[0, 1, 0], &[-1, 0, 1], &[0, -1, 0]]);
        assert!(!check_sign_equivalent(&a3));
        assert!(matches!(
            mutation_class(&a3, 2).unwrap().class_size,
            ClassSize::ExceededBudget
        ));
    }

    #[test]
    fn flat_check_agrees_with_matrix_check() {
        let b = m(&[&[0, 1, -1], &[-4, 0, 2], &[4, -2, 0]]);
        let flat: Vec<i64> = b.entries().iter().map(|v| v.try_into().unwrap()).collect();
        assert!(negated_by_all_flat(&flat, 3));
        assert!(negated_by_every_mutation(&b));
    }

    #[test]
    fn decomposition_finds_components() {
        let a2 = m(&[&[0, 1], &[-1, 0]]);
        let b0 = m(&[&[0, 2, -2], &[-2, 0, 2], &[2, -2, 0]]);
        let d = decompose(&b0.direct_sum(&a2));
        assert_eq!(d.blocks, vec![b0.clone(), a2.clone()]);
        assert_eq!(d.zero_block, 0);

        let z = a2.direct_sum(&IntMatrix::zero(1));
        let shuffled = z
            .permute(&Permutation::from_one_based(&[3, 1, 2]).unwrap())
            .unwrap();
        let d = decompose(&shuffled);
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].orbit_key(), a2.orbit_key());
        assert_eq!(d.zero_block, 1);
        assert_eq!(
            shuffled.permute(&d.perm).unwrap().submatrix(&[0, 1]),
            d.blocks[0]
        );
    }
}
