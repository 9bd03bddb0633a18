//! Descent to the fundamental solution.

use num_bigint::BigInt;

use super::family::{Family, Tuple};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JumpRule {
    /// Jump at the maximal coordinate (rank-3 Markov, rank-2 Markov).
    MaxCoordinate,
    /// Jump at the maximal entry of `(a, b^2, c^2)`.
    Hatted,
    /// Compare `a` with `b^2`.
    Rank2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentStep {
    pub tuple: Tuple,
    /// 1-based direction applied to `tuple`.
    pub direction: usize,
    pub rule: JumpRule,
    /// The measure at `tuple`.
    pub measure: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Terminal {
    Fundamental(Tuple),
    /// No jump lowers the measure and the tuple is not fundamental.
    Stuck(Tuple),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentTrace {
    pub steps: Vec<DescentStep>,
    pub terminal: Terminal,
}

impl DescentTrace {
    pub fn reached_fundamental(&self) -> bool {
        matches!(self.terminal, Terminal::Fundamental(_))
    }

    /// Directions taking the fundamental solution to the start, in the order
    /// they are applied.
    pub fn word(&self) -> Vec<usize> {
        self.steps.iter().rev().map(|s| s.direction).collect()
    }
}

fn rule(family: Family) -> JumpRule {
    match family {
        Family::Markov3 | Family::Rank2Markov => JumpRule::MaxCoordinate,
        Family::Lampe3 => JumpRule::Hatted,
        Family::Rank2Quartic => JumpRule::Rank2,
    }
}

/// The quantity that strictly drops along the descent.
pub fn measure(family: Family, x: &[BigInt]) -> BigInt {
    match family {
        Family::Markov3 | Family::Rank2Markov => x.iter().max().cloned().unwrap_or_default(),
        Family::Lampe3 => hatted(x).into_iter().max().unwrap_or_default(),
        Family::Rank2Quartic => (&x[0]).max(&(&x[1] * &x[1])).clone(),
    }
}

fn hatted(x: &[BigInt]) -> Vec<BigInt> {
    vec![x[0].clone(), &x[1] * &x[1], &x[2] * &x[2]]
}

/// Directions in the order the descent tries them.
fn preferred(family: Family, x: &[BigInt]) -> Vec<usize> {
    let by_max = |v: &[BigInt]| {
        let m = v.iter().max().expect("nonempty");
        let first = v.iter().position(|e| e == m).expect("max exists") + 1;
        let mut order = vec![first];
        order.extend((1..=v.len()).filter(|&d| d != first));
        order
    };
    match family {
        Family::Markov3 | Family::Rank2Markov => by_max(x),
        Family::Lampe3 => by_max(&hatted(x)),
        Family::Rank2Quartic => {
            if x[0] > &x[1] * &x[1] {
                vec![1, 2]
            } else {
                vec![2, 1]
            }
        }
    }
}

/// Descend from `x`. Absent when `x` is not a solution or `k` admits no
/// fundamental solution.
pub fn is_reachable(family: Family, k: u64, x: &[BigInt]) -> Option<DescentTrace> {
    let root = family.fundamental(k)?;
    if !family.is_solution(x, k) {
        return None;
    }
    let mut steps = Vec::new();
    let mut cur = x.to_vec();
    loop {
        if cur == root {
            return Some(DescentTrace {
                steps,
                terminal: Terminal::Fundamental(cur),
            });
        }
        let m = measure(family, &cur);
        // The preferred direction always works on solutions; the others
        // are a fallback that keeps the strict-decrease invariant.
        let next = preferred(family, &cur).into_iter().find_map(|d| {
            let y = family.mutate_solution(&cur, k, d).ok()?;
            (measure(family, &y) < m).then_some((d, y))
        });
        match next {
            Some((direction, y)) => {
                steps.push(DescentStep {
                    tuple: cur,
                    direction,
                    rule: rule(family),
                    measure: m,
                });
                cur = y;
            }
            None => {
                return Some(DescentTrace {
                    steps,
                    terminal: Terminal::Stuck(cur),
                })
            }
        }
    }
}

/// Apply `word` to the fundamental solution.
pub fn replay(family: Family, k: u64, word: &[usize]) -> Option<Tuple> {
    let mut x = family.fundamental(k)?;
    for &d in word {
        x = family.mutate_solution(&x, k, d).ok()?;
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[i64]) -> Tuple {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn markov_descent() {
        let tr = is_reachable(Family::Markov3, 3, &t(&[5, 2, 1])).unwrap();
        assert!(tr.reached_fundamental());
        assert_eq!(tr.word().len(), 2);
        assert_eq!(
            replay(Family::Markov3, 3, &tr.word()).unwrap(),
            t(&[5, 2, 1])
        );
        assert!(is_reachable(Family::Markov3, 3, &t(&[2, 2, 2])).is_none());
    }

    #[test]
    fn lampe_descent() {
        let tr = is_reachable(Family::Lampe3, 7, &t(&[2, 1, 1])).unwrap();
        assert_eq!(tr.word(), vec![1]);
    }

    #[test]
    fn unsolvable_level_has_no_trace() {
        assert!(is_reachable(Family::Markov3, 2, &t(&[1, 1, 1])).is_none());
    }
}
