use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use super::Seed;
use crate::{Error, IntMatrix, QRationalFn};

/// Rank-2 cluster algebras of finite type, with initial matrix
/// `[[0, m], [-n, 0]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiniteType {
    A1xA1,
    A2,
    B2,
    G2,
}

impl FiniteType {
    pub const ALL: [FiniteType; 4] = [
        FiniteType::A1xA1,
        FiniteType::A2,
        FiniteType::B2,
        FiniteType::G2,
    ];

    /// `(m, n)` of the initial matrix.
    pub fn params(self) -> (i64, i64) {
        match self {
            FiniteType::A1xA1 => (0, 0),
            FiniteType::A2 => (1, 1),
            FiniteType::B2 => (1, 2),
            FiniteType::G2 => (1, 3),
        }
    }

    pub fn matrix(self) -> IntMatrix {
        let (m, n) = self.params();
        IntMatrix::from_i64_rows(&[&[0, m], &[-n, 0]]).expect("valid rank-2 matrix")
    }

    /// Number of clusters `m`: 4, 10, 6, 8.
    pub fn cluster_count(self) -> usize {
        match self {
            FiniteType::A1xA1 => 4,
            FiniteType::A2 => 10,
            FiniteType::B2 => 6,
            FiniteType::G2 => 8,
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiniteType::A1xA1 => "A1xA1",
            FiniteType::A2 => "A2",
            FiniteType::B2 => "B2",
            FiniteType::G2 => "G2",
        })
    }
}

impl FromStr for FiniteType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s
            .to_ascii_uppercase()
            .replace(['×', '_', ' '], "X")
            .as_str()
        {
            "A1XA1" | "A1A1" => Ok(FiniteType::A1xA1),
            "A2" => Ok(FiniteType::A2),
            "B2" => Ok(FiniteType::B2),
            "G2" => Ok(FiniteType::G2),
            _ => Err(Error::Parse(format!(
                "unknown finite type {s:?} (expected A1xA1, A2, B2 or G2)"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FiniteTypeCatalog {
    pub ty: FiniteType,
    /// Ordered clusters, row `i` reached from row `i - 1` by `μ1` for odd
    /// `i` and `μ2` for even `i` (1-based rows).
    pub clusters: Vec<(QRationalFn, QRationalFn)>,
    pub words: Vec<Vec<usize>>,
    /// Number of distinct clusters when pairs are taken unordered. Smaller
    /// than `clusters.len()` for `A2`, whose second half repeats the first
    /// with the entries swapped.
    pub unordered_count: usize,
}

/// The rows of the rank-2 catalog, walking `μ1, μ2, μ1, ...` from the
/// initial seed until the ordered cluster comes back.
pub fn enumerate_finite_type(ty: FiniteType) -> FiniteTypeCatalog {
    let start = Seed::initial(ty.matrix());
    let mut clusters = Vec::new();
    let mut words = Vec::new();
    let mut seed = start.clone();
    let mut step = 0usize;
    loop {
        clusters.push((seed.cluster[0].clone(), seed.cluster[1].clone()));
        words.push(seed.word.clone());
        seed = seed
            .mutate(1 + step % 2)
            .expect("finite-type mutation is defined");
        step += 1;
        if seed.cluster == start.cluster {
            break;
        }
        assert!(step < 64, "finite type walk did not close");
    }
    let unordered: HashSet<[String; 2]> = clusters
        .iter()
        .map(|(a, b)| {
            let mut k = [a.to_string(), b.to_string()];
            k.sort();
            k
        })
        .collect();
    FiniteTypeCatalog {
        ty,
        unordered_count: unordered.len(),
        clusters,
        words,
    }
}

/// All ordered clusters reachable by breadth-first search over seeds in
/// both directions. Used to confirm the walk above misses nothing.
pub fn bfs_ordered_clusters(ty: FiniteType, limit: usize) -> Vec<(QRationalFn, QRationalFn)> {
    let start = Seed::initial(ty.matrix());
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        let key = (s.cluster[0].to_string(), s.cluster[1].to_string());
        if !seen.insert(key) {
            continue;
        }
        out.push((s.cluster[0].clone(), s.cluster[1].clone()));
        if out.len() >= limit {
            break;
        }
        for k in 1..=2 {
            queue.push_back(s.mutate(k).expect("finite-type mutation is defined"));
        }
    }
    out
}
