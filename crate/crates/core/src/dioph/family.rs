use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::laurent::parse_expr;
use crate::{Error, IntMatrix, QRationalFn};

/// A positive integer point, in the order of the cluster variables.
pub type Tuple = Vec<BigInt>;

/// The equation families `T(x) = k` handled by descent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `x1^2 + x2^2 + x3^2 = k x1 x2 x3`
    Markov3,
    /// `x1^2 + x2^4 + x3^4 + 2 x1 x2^2 + 2 x1 x3^2 = k x1 x2^2 x3^2`
    Lampe3,
    /// `x1^2 + x2^2 + 1 = k x1 x2`
    Rank2Markov,
    /// `x2^4 + x1^2 + 2 x1 + 1 = k x1 x2^2`
    Rank2Quartic,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Markov3,
        Family::Lampe3,
        Family::Rank2Markov,
        Family::Rank2Quartic,
    ];

    pub fn rank(self) -> usize {
        match self {
            Family::Markov3 | Family::Lampe3 => 3,
            Family::Rank2Markov | Family::Rank2Quartic => 2,
        }
    }

    /// Initial exchange matrix of the cluster algebra whose mutations act on
    /// the solutions.
    pub fn matrix(self) -> IntMatrix {
        let rows: &[&[i64]] = match self {
            Family::Markov3 => &[&[0, 2, -2], &[-2, 0, 2], &[2, -2, 0]],
            Family::Lampe3 => &[&[0, 1, -1], &[-4, 0, 2], &[4, -2, 0]],
            Family::Rank2Markov => &[&[0, 2], &[-2, 0]],
            Family::Rank2Quartic => &[&[0, 1], &[-4, 0]],
        };
        IntMatrix::from_i64_rows(rows).expect("family matrices are valid")
    }

    /// The Laurent mutation invariant `T` with `T(x) = k` the equation.
    pub fn invariant_expr(self) -> &'static str {
        match self {
            Family::Markov3 => "(x1^2 + x2^2 + x3^2)/(x1*x2*x3)",
            Family::Lampe3 => "(x1^2 + x2^4 + x3^4 + 2*x1*x2^2 + 2*x1*x3^2)/(x1*x2^2*x3^2)",
            Family::Rank2Markov => "(x1^2 + x2^2 + 1)/(x1*x2)",
            Family::Rank2Quartic => "(x2^4 + x1^2 + 2*x1 + 1)/(x1*x2^2)",
        }
    }

    pub fn invariant(self) -> QRationalFn {
        parse_expr(self.invariant_expr(), self.rank()).expect("built-in invariant parses")
    }

    /// The values of `k` with positive integer solutions.
    pub fn admissible_values(self) -> &'static [u64] {
        match self {
            Family::Markov3 => &[1, 3],
            Family::Lampe3 => &[7],
            Family::Rank2Markov => &[3],
            Family::Rank2Quartic => &[5],
        }
    }

    /// Root of the solution tree for an admissible `k`.
    pub fn fundamental(self, k: u64) -> Option<Tuple> {
        let t = |v: &[i64]| Some(v.iter().map(|&x| BigInt::from(x)).collect());
        match (self, k) {
            (Family::Markov3, 3) => t(&[1, 1, 1]),
            (Family::Markov3, 1) => t(&[3, 3, 3]),
            (Family::Lampe3, 7) => t(&[1, 1, 1]),
            (Family::Rank2Markov, 3) => t(&[1, 1]),
            (Family::Rank2Quartic, 5) => t(&[1, 1]),
            _ => None,
        }
    }

    /// `(lhs, rhs)` of the cleared equation at `x`.
    pub fn sides(self, x: &[BigInt], k: &BigInt) -> Result<(BigInt, BigInt), Error> {
        if x.len() != self.rank() {
            return Err(Error::Dimension {
                expected: self.rank(),
                got: x.len(),
            });
        }
        let sq = |v: &BigInt| v * v;
        Ok(match self {
            Family::Markov3 => (sq(&x[0]) + sq(&x[1]) + sq(&x[2]), k * &x[0] * &x[1] * &x[2]),
            Family::Lampe3 => {
                let (b2, c2) = (sq(&x[1]), sq(&x[2]));
                let lhs = sq(&x[0]) + sq(&b2) + sq(&c2) + 2 * &x[0] * &b2 + 2 * &x[0] * &c2;
                (lhs, k * &x[0] * b2 * c2)
            }
            Family::Rank2Markov => (sq(&x[0]) + sq(&x[1]) + 1, k * &x[0] * &x[1]),
            Family::Rank2Quartic => {
                let b2 = sq(&x[1]);
                (sq(&b2) + sq(&(&x[0] + 1)), k * &x[0] * b2)
            }
        })
    }

    /// Whether `x` is a positive integer solution for parameter `k`.
    pub fn is_solution(self, x: &[BigInt], k: u64) -> bool {
        if x.len() != self.rank() || x.iter().any(|v| !v.is_positive()) {
            return false;
        }
        let (l, r) = self.sides(x, &BigInt::from(k)).expect("length checked");
        l == r
    }

    /// The unique `k` with `x` a solution, if `T(x)` is a positive integer.
    pub fn level(self, x: &[BigInt]) -> Option<u64> {
        if x.len() != self.rank() || x.iter().any(|v| !v.is_positive()) {
            return None;
        }
        let (num, den) = self.sides(x, &BigInt::one()).ok()?;
        if den.is_zero() || !(&num % &den).is_zero() {
            return None;
        }
        u64::try_from(num / den).ok()
    }

    /// `μ_dir` on a solution. Directions are 1-based.
    pub fn mutate_solution(self, x: &[BigInt], k: u64, dir: usize) -> Result<Tuple, Error> {
        let n = self.rank();
        if dir == 0 || dir > n {
            return Err(Error::DirectionOutOfRange { k: dir, n });
        }
        if !self.is_solution(x, k) {
            return Err(Error::Domain(format!(
                "{} is not a solution of {self} with k = {k}",
                fmt_tuple(x)
            )));
        }
        let kk = BigInt::from(k);
        let i = dir - 1;
        let mut out = x.to_vec();
        out[i] = match self {
            // Linear Vieta complements.
            Family::Markov3 => {
                let others: BigInt = (0..3).filter(|&j| j != i).map(|j| &x[j]).product();
                kk * others - &x[i]
            }
            Family::Rank2Markov => kk * &x[1 - i] - &x[i],
            Family::Lampe3 => {
                let sq = |v: &BigInt| v * v;
                let num = match i {
                    0 => sq(&sq(&x[1])) + sq(&sq(&x[2])),
                    1 => &x[0] + sq(&x[2]),
                    _ => &x[0] + sq(&x[1]),
                };
                exact_div(num, &x[i])?
            }
            Family::Rank2Quartic => {
                let num = if i == 0 { x[1].pow(4) + 1 } else { &x[0] + 1 };
                exact_div(num, &x[i])?
            }
        };
        Ok(out)
    }
}

fn exact_div(num: BigInt, den: &BigInt) -> Result<BigInt, Error> {
    if !(&num % den).is_zero() {
        // Unreachable for solutions: the Vieta relation forces divisibility.
        return Err(Error::Domain(format!("non-exact division {num} / {den}")));
    }
    Ok(num / den)
}

pub fn fmt_tuple(x: &[BigInt]) -> String {
    let parts: Vec<String> = x.iter().map(BigInt::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Parse `5,2,1` or `(5, 2, 1)`.
pub fn parse_tuple(s: &str) -> Result<Tuple, Error> {
    let inner = s
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<BigInt>()
                .map_err(|e| Error::Parse(format!("bad tuple entry {p:?}: {e}")))
        })
        .collect()
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Markov3 => "markov3",
            Family::Lampe3 => "lampe3",
            Family::Rank2Markov => "rank2-markov",
            Family::Rank2Quartic => "rank2-quartic",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "markov3" | "markov" => Ok(Family::Markov3),
            "lampe3" | "lampe" => Ok(Family::Lampe3),
            "rank2-markov" | "rank2markov" => Ok(Family::Rank2Markov),
            "rank2-quartic" | "rank2quartic" => Ok(Family::Rank2Quartic),
            _ => Err(Error::Parse(format!(
                "unknown family {s:?} (expected markov3, lampe3, rank2-markov or rank2-quartic)"
            ))),
        }
    }
}
