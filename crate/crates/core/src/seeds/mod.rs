//! Seeds, their mutation, rank-2 finite-type catalogs and mutation
//! invariants.

mod finite_type;
mod invariant;

use num_traits::{Signed, ToPrimitive, Zero};

pub use finite_type::{bfs_ordered_clusters, enumerate_finite_type, FiniteType, FiniteTypeCatalog};
pub use invariant::{
    build_invariant, is_symmetric, verify_invariant, BuiltInvariant, InvariantReport,
    InvariantSpec, SymmetricFn, Verdict,
};

use crate::{Error, IntMatrix, QRationalFn};

/// A cluster of rational functions in the initial variables together with
/// its exchange matrix, labelled by the word that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    pub cluster: Vec<QRationalFn>,
    pub matrix: IntMatrix,
    /// 1-based directions from the initial seed; immediate repeats cancel.
    pub word: Vec<usize>,
}

impl Seed {
    /// `(x1, .., xn)` with the given matrix.
    pub fn initial(matrix: IntMatrix) -> Self {
        let n = matrix.n();
        Seed {
            cluster: (0..n).map(|i| QRationalFn::var(n, i)).collect(),
            matrix,
            word: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.n()
    }

    /// `x_k' = (prod x_j^[b_jk]+ + prod x_j^[-b_jk]+) / x_k`, with the matrix
    /// mutated alongside.
    pub fn mutate(&self, k: usize) -> Result<Seed, Error> {
        let n = self.rank();
        if k == 0 || k > n {
            return Err(Error::DirectionOutOfRange { k, n });
        }
        let matrix = self.matrix.mutate(k)?;
        let kk = k - 1;
        let nv = self.cluster[0].nvars();
        let mut plus = QRationalFn::one(nv);
        let mut minus = QRationalFn::one(nv);
        for j in 0..n {
            let b = self.matrix.get(j, kk);
            if b.is_zero() {
                continue;
            }
            let e = b
                .abs()
                .to_i32()
                .ok_or_else(|| Error::Domain("exchange exponent too large".into()))?;
            let f = self.cluster[j].pow(e)?;
            if b.is_positive() {
                plus = &plus * &f;
            } else {
                minus = &minus * &f;
            }
        }
        let mut cluster = self.cluster.clone();
        cluster[kk] = (&plus + &minus).checked_div(&self.cluster[kk])?;
        let mut word = self.word.clone();
        if word.last() == Some(&k) {
            word.pop();
        } else {
            word.push(k);
        }
        Ok(Seed {
            cluster,
            matrix,
            word,
        })
    }

    pub fn mutate_word(&self, word: &[usize]) -> Result<Seed, Error> {
        word.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }
}
