//! Exchange matrices and their mutation.
//!
//! Matrix entries are addressed 0-based; mutation directions are 1-based,
//! as they are written in mutation words.

pub(crate) mod format;
mod permutation;
mod symmetrizer;

use std::ops::Neg;

use num_traits::Zero;

pub use format::{matrix_from_json, matrix_to_json, parse_matrix};
pub use permutation::{AllPermutations, Permutation};

use crate::scalar::{from_bigint, to_bigint, IntScalar};
use crate::Error;

/// A square, sign-skew-symmetric integer matrix.
///
/// Values are immutable: every operation returns a new matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExchangeMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

fn pos<T>(x: &T) -> T
where
    T: IntScalar,
{
    if x.is_positive() {
        x.clone()
    } else {
        T::zero()
    }
}

impl<T: IntScalar> ExchangeMatrix<T> {
    /// Build from rows, checking shape and sign-skew-symmetry.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, Error> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Dimension {
                expected: 1,
                got: 0,
            });
        }
        let mut entries = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: r.len(),
                });
            }
            entries.extend(r);
        }
        let m = ExchangeMatrix { n, entries };
        if let Some((i, j)) = m.sign_skew_violation() {
            return Err(Error::NotSignSkewSymmetric { i, j });
        }
        Ok(m)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, Error> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| T::from_i64(v).expect("entry fits the scalar type"))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn zero(n: usize) -> Self {
        ExchangeMatrix {
            n,
            entries: vec![T::zero(); n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `b_ij`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.n).map(<[T]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn max_abs_entry(&self) -> T {
        self.entries
            .iter()
            .map(|e| e.abs())
            .max()
            .unwrap_or_else(T::zero)
    }

    /// First `(i, j)` breaking sign-skew-symmetry, if any.
    pub fn sign_skew_violation(&self) -> Option<(usize, usize)> {
        let n = self.n;
        for i in 0..n {
            if !self.get(i, i).is_zero() {
                return Some((i, i));
            }
            for j in i + 1..n {
                let (a, b) = (self.get(i, j), self.get(j, i));
                let ok = if a.is_zero() || b.is_zero() {
                    a.is_zero() && b.is_zero()
                } else {
                    a.is_positive() != b.is_positive()
                };
                if !ok {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Mutation in direction `k` (1-based).
    ///
    /// For a skew-symmetrizable input the result is again an exchange matrix.
    /// Without a symmetrizer the result can fail to be sign-skew-symmetric,
    /// which is reported as [`Error::LostSignSkewSymmetry`].
    pub fn mutate(&self, k: usize) -> Result<Self, Error> {
        let out = self.mutate_raw(k)?;
        match out.sign_skew_violation() {
            None => Ok(out),
            Some((i, j)) => Err(Error::LostSignSkewSymmetry {
                k,
                i: i + 1,
                j: j + 1,
            }),
        }
    }

    /// Mutation formula without the output check.
    pub fn mutate_raw(&self, k: usize) -> Result<Self, Error> {
        let n = self.n;
        if k == 0 || k > n {
            return Err(Error::DirectionOutOfRange { k, n });
        }
        let k = k - 1;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let b = self.get(i, j);
                let v = if i == k || j == k {
                    -b.clone()
                } else {
                    let bik = self.get(i, k);
                    let bkj = self.get(k, j);
                    b.clone() + pos(bik) * bkj.clone() + bik.clone() * pos(&-bkj.clone())
                };
                entries.push(v);
            }
        }
        Ok(ExchangeMatrix { n, entries })
    }

    /// Apply a mutation word of 1-based directions, left to right.
    pub fn mutate_word(&self, word: &[usize]) -> Result<Self, Error> {
        word.iter().try_fold(self.clone(), |m, &k| m.mutate(k))
    }

    /// `(σB)_ij = b_{σ(i)σ(j)}`.
    pub fn permute(&self, sigma: &Permutation) -> Result<Self, Error> {
        if sigma.n() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: sigma.n(),
            });
        }
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(sigma.apply(i), sigma.apply(j)).clone());
            }
        }
        Ok(ExchangeMatrix { n, entries })
    }

    /// Minimal positive integer diagonal `D` with `DB` skew-symmetric,
    /// normalised to gcd 1 on each connected component.
    pub fn skew_symmetrizer(&self) -> Option<Vec<T>> {
        let big = self.to_big();
        symmetrizer::minimal_symmetrizer(&big)?
            .iter()
            .map(from_bigint)
            .collect()
    }

    pub fn is_skew_symmetrizable(&self) -> bool {
        self.skew_symmetrizer().is_some()
    }

    /// Connected components of the support graph, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            let mut members = vec![];
            comp[s] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for w in 0..n {
                    if comp[w] == usize::MAX
                        && (!self.get(v, w).is_zero() || !self.get(w, v).is_zero())
                    {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Connected support graph.
    pub fn is_irreducible(&self) -> bool {
        self.components().len() == 1
    }

    /// Lexicographically least `permute(self, σ)` over `σ ∈ S_n`, comparing
    /// entries row by row. Cost is `n!`.
    pub fn canonical_form(&self) -> Self {
        self.canonical_with_perm().0
    }

    /// Canonical form together with a permutation reaching it.
    pub fn canonical_with_perm(&self) -> (Self, Permutation) {
        let mut best: Option<(Self, Permutation)> = None;
        for sigma in Permutation::all(self.n) {
            let cand = self.permute(&sigma).expect("same size");
            if best
                .as_ref()
                .map_or(true, |(b, _)| cand.entries < b.entries)
            {
                best = Some((cand, sigma));
            }
        }
        best.expect("S_n is nonempty")
    }

    /// Least element of the orbit under permutations and global sign.
    pub fn orbit_key(&self) -> Self {
        let a = self.canonical_form();
        let b = (-self).canonical_form();
        if a.entries <= b.entries {
            a
        } else {
            b
        }
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        let mut m = Self::zero(n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.entries[i * n + j] = self.get(i, j).clone();
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                m.entries[(i + self.n) * n + j + self.n] = other.get(i, j).clone();
            }
        }
        m
    }

    /// Principal submatrix on the given indices, in that order.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        let n = idx.len();
        let mut entries = Vec::with_capacity(n * n);
        for &i in idx {
            for &j in idx {
                entries.push(self.get(i, j).clone());
            }
        }
        ExchangeMatrix { n, entries }
    }

    pub fn to_big(&self) -> ExchangeMatrix<num_bigint::BigInt> {
        ExchangeMatrix {
            n: self.n,
            entries: self.entries.iter().map(to_bigint).collect(),
        }
    }

    /// Convert to another scalar type; `None` on overflow.
    pub fn convert<U: IntScalar>(&self) -> Option<ExchangeMatrix<U>> {
        let entries = self
            .entries
            .iter()
            .map(|v| from_bigint(&to_bigint(v)))
            .collect::<Option<Vec<U>>>()?;
        Some(ExchangeMatrix { n: self.n, entries })
    }
}

impl<T: IntScalar> Neg for &ExchangeMatrix<T> {
    type Output = ExchangeMatrix<T>;

    fn neg(self) -> ExchangeMatrix<T> {
        ExchangeMatrix {
            n: self.n,
            entries: self.entries.iter().map(|v| -v.clone()).collect(),
        }
    }
}

impl<T: IntScalar> Neg for ExchangeMatrix<T> {
    type Output = ExchangeMatrix<T>;

    fn neg(self) -> ExchangeMatrix<T> {
        -&self
    }
}
