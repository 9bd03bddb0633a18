//! Building and checking mutation invariants.

use std::fmt;

use num_rational::BigRational;

use super::{enumerate_finite_type, FiniteType, Seed};
use crate::mutclass::check_sign_equivalent;
use crate::{Error, IntMatrix, QPoly, QRationalFn};

/// A symmetric polynomial in the `m` cluster slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymmetricFn {
    /// Elementary symmetric polynomial `e_d`.
    Elementary(u32),
    /// Power sum `p_d`.
    PowerSum(u32),
    /// An explicit polynomial, checked for symmetry before use.
    Explicit(QPoly),
}

impl SymmetricFn {
    /// Evaluate at the given arguments.
    pub fn evaluate(&self, args: &[QRationalFn]) -> Result<QRationalFn, Error> {
        let nv = args.first().map_or(0, QRationalFn::nvars);
        match self {
            SymmetricFn::Elementary(d) => {
                let d = *d as usize;
                let mut e = vec![QRationalFn::zero(nv); d + 1];
                e[0] = QRationalFn::one(nv);
                for u in args {
                    for j in (1..=d).rev() {
                        e[j] = &e[j] + &(&e[j - 1] * u);
                    }
                }
                Ok(e.swap_remove(d))
            }
            SymmetricFn::PowerSum(d) => {
                let mut acc = QRationalFn::zero(nv);
                for u in args {
                    acc = &acc + &u.pow(*d as i32)?;
                }
                Ok(acc)
            }
            SymmetricFn::Explicit(p) => {
                if p.nvars() != args.len() {
                    return Err(Error::Dimension {
                        expected: args.len(),
                        got: p.nvars(),
                    });
                }
                if !is_symmetric(p) {
                    return Err(Error::Domain("explicit polynomial is not symmetric".into()));
                }
                QRationalFn::from_poly(p.clone()).substitute(args)
            }
        }
    }
}

/// Invariance under `(1 2)` and the full cycle, which generate `S_m`.
pub fn is_symmetric(p: &QPoly) -> bool {
    let m = p.nvars();
    if m < 2 {
        return true;
    }
    let relabel = |f: &dyn Fn(usize) -> usize| {
        let mut out = QPoly::zero(m);
        for (mono, c) in p.terms() {
            let mut e = vec![0; m];
            for (i, &x) in mono.0.iter().enumerate() {
                e[f(i)] = x;
            }
            out.add_term(crate::laurent::Monomial(e), c.clone());
        }
        out
    };
    let swap = |i: usize| match i {
        0 => 1,
        1 => 0,
        i => i,
    };
    let cycle = |i: usize| (i + 1) % m;
    relabel(&swap) == *p && relabel(&cycle) == *p
}

impl fmt::Display for SymmetricFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetricFn::Elementary(d) => write!(f, "e{d}"),
            SymmetricFn::PowerSum(d) => write!(f, "p{d}"),
            SymmetricFn::Explicit(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct InvariantSpec {
    pub ty: FiniteType,
    pub phi: SymmetricFn,
    /// Polynomial in `X1, X2`.
    pub f: QPoly,
}

#[derive(Clone, Debug)]
pub struct BuiltInvariant {
    pub value: QRationalFn,
    /// Set when `Φ(F(..), ..)` collapses to a constant. Legal, but useless
    /// for equations.
    pub constant: Option<BigRational>,
}

/// `Φ(F(c_{1;1}, c_{2;1}), .., F(c_{1;m}, c_{2;m}))` over the catalog rows.
pub fn build_invariant(spec: &InvariantSpec) -> Result<BuiltInvariant, Error> {
    if spec.f.nvars() != 2 {
        return Err(Error::Dimension {
            expected: 2,
            got: spec.f.nvars(),
        });
    }
    let cat = enumerate_finite_type(spec.ty);
    if let SymmetricFn::Explicit(p) = &spec.phi {
        if p.nvars() != cat.clusters.len() {
            return Err(Error::Dimension {
                expected: cat.clusters.len(),
                got: p.nvars(),
            });
        }
    }
    let f = QRationalFn::from_poly(spec.f.clone());
    let args = cat
        .clusters
        .iter()
        .map(|(a, b)| f.substitute(&[a.clone(), b.clone()]))
        .collect::<Result<Vec<_>, _>>()?;
    let value = spec.phi.evaluate(&args)?;
    let constant = value.constant_value();
    Ok(BuiltInvariant { value, constant })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The matrix is sign-equivalent, so every seed has the same mutation
    /// rule up to sign and depth 1 covers all of them.
    Proven,
    /// Every word up to this length was checked. Not a proof.
    NoCounterexample { depth: usize },
    /// `T` changes after this word.
    Counterexample { word: Vec<usize> },
}

#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub holds: bool,
    pub verdict: Verdict,
    pub seeds_checked: usize,
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invariant: {}", self.holds)?;
        match &self.verdict {
            Verdict::Proven => write!(f, " (sign-equivalent matrix: depth 1 covers every seed)"),
            Verdict::NoCounterexample { depth } => {
                write!(f, " (no counterexample to depth {depth})")
            }
            Verdict::Counterexample { word } => {
                let w: Vec<String> = word.iter().map(usize::to_string).collect();
                write!(f, " (counterexample word: {})", w.join(" "))
            }
        }?;
        write!(f, ", {} seeds checked", self.seeds_checked)
    }
}

/// Check `T(x_t) = T(x)` on every seed reachable by a word of length at
/// most `depth` (words never repeat a direction twice in a row, since that
/// would undo the previous step).
pub fn verify_invariant(
    t: &QRationalFn,
    b: &IntMatrix,
    depth: usize,
) -> Result<InvariantReport, Error> {
    if t.nvars() != b.n() {
        return Err(Error::Dimension {
            expected: b.n(),
            got: t.nvars(),
        });
    }
    if t.is_constant() {
        return Err(Error::Domain(
            "constant functions are trivially invariant".into(),
        ));
    }
    let sign_eq = check_sign_equivalent(b);
    let walk_depth = if sign_eq { depth.min(1) } else { depth };

    let mut seeds_checked = 0;
    let mut stack = vec![(Seed::initial(b.clone()), Vec::<usize>::new())];
    while let Some((seed, word)) = stack.pop() {
        if word.len() == walk_depth {
            continue;
        }
        // Push in reverse so words are explored in increasing order.
        for k in (1..=b.n()).rev() {
            if word.last() == Some(&k) {
                continue;
            }
            let next = seed.mutate(k)?;
            let mut w = word.clone();
            w.push(k);
            let (num, den) = t.substitute_raw(&next.cluster)?;
            seeds_checked += 1;
            if !t.equals_fraction(&num, &den) {
                return Ok(InvariantReport {
                    holds: false,
                    verdict: Verdict::Counterexample { word: w },
                    seeds_checked,
                });
            }
            stack.push((next, w));
        }
    }
    let verdict = if sign_eq && depth >= 1 {
        Verdict::Proven
    } else {
        Verdict::NoCounterexample { depth }
    };
    Ok(InvariantReport {
        holds: true,
        verdict,
        seeds_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_expr;

    #[test]
    fn markov_invariant_on_torus() {
        let b0 = IntMatrix::from_i64_rows(&[&[0, 2, -2], &[-2, 0, 2], &[2, -2, 0]]).unwrap();
        let t = parse_expr("(x1^2+x2^2+x3^2)/(x1*x2*x3)", 3).unwrap();
        let r = verify_invariant(&t, &b0, 1).unwrap();
        assert!(r.holds);
        assert_eq!(r.verdict, Verdict::Proven);
    }

    #[test]
    fn cluster_variable_is_not_invariant() {
        let a2 = IntMatrix::from_i64_rows(&[&[0, 1], &[-1, 0]]).unwrap();
        let t = parse_expr("x1", 2).unwrap();
        let r = verify_invariant(&t, &a2, 3).unwrap();
        assert_eq!(r.verdict, Verdict::Counterexample { word: vec![1] });
    }

    #[test]
    fn a1xa1_product_is_constant_four() {
        let m = 4;
        let mut phi = QPoly::one(m);
        for i in 0..m {
            phi = &phi * &QPoly::var(m, i);
        }
        let spec = InvariantSpec {
            ty: FiniteType::A1xA1,
            phi: SymmetricFn::Explicit(phi),
            f: QPoly::var(2, 0),
        };
        let built = build_invariant(&spec).unwrap();
        assert_eq!(built.constant, Some(BigRational::from_integer(4.into())));
    }

    #[test]
    fn symmetry_check() {
        let p = &QPoly::var(3, 0) + &QPoly::var(3, 1);
        assert!(!is_symmetric(&p));
        assert!(is_symmetric(&(&p + &QPoly::var(3, 2))));
    }
}
