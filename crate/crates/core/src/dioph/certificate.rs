//! Solvability decisions with auditable certificates.
//!
//! An unsolvable `(family, k)` is certified in two parts. Floor checks show
//! every solution stays in a region (say `min(a, b, c) >= 2`). Descent
//! checks show every solution in that region has a neighbour with strictly
//! smaller measure that is again a solution in the region. Together they
//! give an infinite descent in the positive integers, so no solution exists.
//! Each check is a finite computation: a polynomial that has only
//! nonnegative coefficients and a positive constant after shifting its
//! variables to the region, a residue table, or an integer root scan.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::family::{fmt_tuple, Family, Tuple};
use super::oracle::brute_force;
use super::roots::{is_square, positive_integer_roots, square_residues};
use crate::laurent::parse_expr;
use crate::QPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    /// A fundamental solution satisfies the equation.
    Fundamental,
    /// Nonnegative coefficients and positive constant after a shift.
    Positivity,
    /// Two polynomials agree after a substitution.
    Identity,
    /// No solution modulo `m`.
    Residue,
    /// An integer is not a perfect square.
    NotSquare,
    /// A univariate polynomial has no positive integer root.
    NoRoot,
    /// Reduction to another family's decision.
    Reduction,
    /// A lower bound on some coordinate.
    Floor,
    /// A strictly decreasing jump inside the floor region.
    Descent,
    /// Direct search in a small box (corroboration only).
    Search,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub kind: CheckKind,
    pub claim: String,
    pub detail: String,
    pub holds: bool,
    pub nested: Vec<Check>,
}

impl Check {
    fn leaf(
        kind: CheckKind,
        claim: impl Into<String>,
        detail: impl Into<String>,
        holds: bool,
    ) -> Self {
        Check {
            kind,
            claim: claim.into(),
            detail: detail.into(),
            holds,
            nested: Vec::new(),
        }
    }

    fn group(kind: CheckKind, claim: impl Into<String>, nested: Vec<Check>) -> Self {
        let holds = nested.iter().all(|c| c.holds);
        Check {
            kind,
            claim: claim.into(),
            detail: String::new(),
            holds,
            nested,
        }
    }

    /// Number of checks in this subtree.
    pub fn count(&self) -> usize {
        1 + self.nested.iter().map(Check::count).sum::<usize>()
    }

    fn write_indented(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        let mark = if self.holds { "ok" } else { "FAILED" };
        writeln!(
            f,
            "{:indent$}[{mark}] {:?}: {}",
            "",
            self.kind,
            self.claim,
            indent = 2 * depth
        )?;
        if !self.detail.is_empty() {
            writeln!(f, "{:indent$}  {}", "", self.detail, indent = 2 * depth)?;
        }
        for c in &self.nested {
            c.write_indented(f, depth + 1)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub checks: Vec<Check>,
    /// The region every solution is confined to, in words.
    pub floors: String,
    /// How the checks combine.
    pub argument: String,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn check_count(&self) -> usize {
        self.checks.iter().map(Check::count).sum()
    }
}

#[derive(Clone, Debug)]
pub struct Decision {
    pub family: Family,
    pub k: u64,
    pub solvable: bool,
    pub fundamental: Option<Tuple>,
    pub certificate: Certificate,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.fundamental {
            Some(x) => writeln!(
                f,
                "{} k={}: solvable, fundamental solution {}",
                self.family,
                self.k,
                fmt_tuple(x)
            )?,
            None => writeln!(f, "{} k={}: unsolvable", self.family, self.k)?,
        }
        if !self.certificate.floors.is_empty() {
            writeln!(f, "floors: {}", self.certificate.floors)?;
        }
        writeln!(f, "argument: {}", self.certificate.argument)?;
        for c in &self.certificate.checks {
            c.write_indented(f, 0)?;
        }
        write!(
            f,
            "certificate: {} ({} checks)",
            if self.certificate.holds() {
                "valid"
            } else {
                "INVALID"
            },
            self.certificate.check_count()
        )
    }
}

// Symbolic helpers. Letters name the variables of a small polynomial ring:
// a, b, c are the coordinates, A, B, C the squared coordinates of the
// hatted form, s, t, u are shift variables ranging over the nonnegative
// integers.
const VARS: &[u8] = b"abcABCstu";
const SHIFT: [usize; 3] = [6, 7, 8];

fn sym(src: &str) -> QPoly {
    let mut s = String::with_capacity(src.len() * 2);
    for ch in src.chars() {
        match VARS.iter().position(|&v| v as char == ch) {
            Some(i) => s.push_str(&format!("x{}", i + 1)),
            None => s.push(ch),
        }
    }
    let r = parse_expr(&s, VARS.len()).expect("certificate expression parses");
    assert!(
        r.is_polynomial(),
        "certificate expression must be a polynomial"
    );
    r.numer().clone()
}

fn unsym(p: &QPoly) -> String {
    let mut s = p.to_string();
    for (i, v) in VARS.iter().enumerate() {
        s = s.replace(&format!("x{}", i + 1), &(*v as char).to_string());
    }
    s
}

fn substitute(p: &QPoly, subs: &[(char, &str)]) -> QPoly {
    let n = VARS.len();
    let images: Vec<QPoly> = (0..n)
        .map(|i| match subs.iter().find(|(v, _)| *v as u8 == VARS[i]) {
            Some((_, e)) => sym(e),
            None => QPoly::var(n, i),
        })
        .collect();
    p.compose(&images)
}

fn describe_subs(subs: &[(char, &str)]) -> String {
    subs.iter()
        .map(|(v, e)| format!("{v} = {e}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// `expr > 0` on the region described by `subs`, where the shifted
/// polynomial must only involve `s, t, u`.
fn positivity(claim: impl Into<String>, expr: &str, subs: &[(char, &str)]) -> Check {
    let q = substitute(&sym(expr), subs);
    let only_shift = (0..VARS.len()).all(|i| SHIFT.contains(&i) || !q.uses_var(i));
    let zero = crate::laurent::Monomial(vec![0; VARS.len()]);
    let holds = only_shift && q.has_nonnegative_coeffs() && q.coeff(&zero).is_positive();
    let detail = format!("{expr} with {}: {}", describe_subs(subs), unsym(&q));
    Check::leaf(CheckKind::Positivity, claim, detail, holds)
}

fn identity(claim: impl Into<String>, lhs: &str, rhs: &str, subs: &[(char, &str)]) -> Check {
    let l = substitute(&sym(lhs), subs);
    let r = substitute(&sym(rhs), subs);
    let detail = format!("{lhs} = {rhs} under {}", describe_subs(subs));
    Check::leaf(CheckKind::Identity, claim, detail, l == r)
}

fn not_square(claim: impl Into<String>, n: BigInt) -> Check {
    let holds = !is_square(&n);
    Check::leaf(CheckKind::NotSquare, claim, format!("value {n}"), holds)
}

fn no_root(claim: impl Into<String>, coeffs: &[BigInt], shown: String) -> Check {
    let roots = positive_integer_roots(coeffs);
    let holds = matches!(&roots, Some(r) if r.is_empty());
    let detail = match roots {
        Some(r) if r.is_empty() => format!("{shown}: no positive integer root"),
        Some(r) => format!("{shown}: roots {}", fmt_tuple(&r)),
        None => format!("{shown}: identically zero"),
    };
    Check::leaf(CheckKind::NoRoot, claim, detail, holds)
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// No `s` with `g(s)` a square mod `m`.
fn square_obstruction(
    claim: impl Into<String>,
    m: u64,
    shown: &str,
    g: impl Fn(u64) -> u64,
) -> Check {
    let sq = square_residues(m);
    let bad: Vec<u64> = (0..m).filter(|&s| sq.contains(&(g(s) % m))).collect();
    let detail = format!("{shown} mod {m} over all s, against squares {sq:?}");
    Check::leaf(CheckKind::Residue, claim, detail, bad.is_empty())
}

/// No `(b, c)` with the Lampe equation at a fixed `a` holding mod `m`.
fn lampe_residue(k: u64, a: u64, m: u64) -> Check {
    let sq = square_residues(m);
    let (k, a, mm) = (k as u128 % m as u128, a as u128, m as u128);
    let mut hits = 0usize;
    for &b2 in &sq {
        for &c2 in &sq {
            let (b2, c2) = (b2 as u128, c2 as u128);
            let lhs = (a * a + b2 * b2 + c2 * c2 + 2 * a * b2 + 2 * a * c2) % mm;
            let rhs = (k * (a % mm) % mm * b2 % mm * c2) % mm;
            if lhs == rhs {
                hits += 1;
            }
        }
    }
    Check::leaf(
        CheckKind::Residue,
        format!("a = {a} is impossible modulo {m}"),
        format!(
            "checked {} pairs (b^2, c^2) of square residues mod {m}",
            sq.len() * sq.len()
        ),
        hits == 0,
    )
}

fn search(family: Family, k: u64, bound: u64) -> Check {
    let found = brute_force(family, k, bound);
    let detail = match found.first() {
        None => format!("no solution with every coordinate in 1..={bound}"),
        Some(x) => format!("found {}", fmt_tuple(x)),
    };
    Check::leaf(
        CheckKind::Search,
        "direct search in a small box",
        detail,
        found.is_empty(),
    )
}

fn reduction(claim: impl Into<String>, family: Family, k: u64) -> Check {
    let sub = decide(family, k);
    let holds = !sub.solvable && sub.certificate.holds();
    let mut c = Check::group(CheckKind::Reduction, claim, sub.certificate.checks);
    c.detail = format!(
        "{family} with k = {k} is unsolvable ({})",
        sub.certificate.floors
    );
    c.holds = holds;
    c
}

/// Decide whether `T(x) = k` has a positive integer solution.
pub fn decide(family: Family, k: u64) -> Decision {
    if let Some(x) = family.fundamental(k) {
        let holds = family.is_solution(&x, k);
        let check = Check::leaf(
            CheckKind::Fundamental,
            format!("{} solves the equation", fmt_tuple(&x)),
            "",
            holds,
        );
        let argument =
            "every solution is reached from the fundamental solution by mutations".into();
        return Decision {
            family,
            k,
            solvable: true,
            fundamental: Some(x),
            certificate: Certificate {
                checks: vec![check],
                floors: String::new(),
                argument,
            },
        };
    }
    let certificate = if k == 0 {
        zero_level(family)
    } else {
        match family {
            Family::Markov3 => markov3(k),
            Family::Rank2Markov => rank2_markov(k),
            Family::Rank2Quartic => rank2_quartic(k),
            Family::Lampe3 => lampe3(k),
        }
    };
    Decision {
        family,
        k,
        solvable: false,
        fundamental: None,
        certificate,
    }
}

fn zero_level(family: Family) -> Certificate {
    let (expr, subs): (&str, &[(char, &str)]) = match family {
        Family::Markov3 => (
            "a^2 + b^2 + c^2",
            &[('a', "1+s"), ('b', "1+t"), ('c', "1+u")],
        ),
        Family::Lampe3 => (
            "a^2 + b^4 + c^4 + 2*a*b^2 + 2*a*c^2",
            &[('a', "1+s"), ('b', "1+t"), ('c', "1+u")],
        ),
        Family::Rank2Markov => ("a^2 + b^2 + 1", &[('a', "1+s"), ('b', "1+t")]),
        Family::Rank2Quartic => ("b^4 + a^2 + 2*a + 1", &[('a', "1+s"), ('b', "1+t")]),
    };
    Certificate {
        checks: vec![positivity("the left side is positive", expr, subs)],
        floors: String::new(),
        argument: "with k = 0 the right side vanishes".into(),
    }
}

fn markov3(k: u64) -> Certificate {
    let floor = reduction(
        "a coordinate equal to 1 leaves x^2 + y^2 + 1 = k x y",
        Family::Rank2Markov,
        k,
    );
    let descent = Check::group(
        CheckKind::Descent,
        "for a >= b >= c >= 2, f(t) = t^2 - k b c t + b^2 + c^2 has f(b) < 0, so the jump a' = k b c - a gives a' < b < a",
        vec![positivity("-f(b) > 0", &format!("{k}*b^2*c - 2*b^2 - c^2"), &[('c', "2+t"), ('b', "2+t+s")])],
    );
    Certificate {
        checks: vec![floor, descent, search(Family::Markov3, k, 64)],
        floors: "min(a, b, c) >= 2".into(),
        argument: "every solution has min >= 2 and, jumping at its maximal coordinate, a solution with strictly \
                   smaller maximum; infinite descent is impossible"
            .into(),
    }
}

fn rank2_markov(k: u64) -> Certificate {
    let kk = BigInt::from(k);
    if k <= 2 {
        let pos = positivity(
            format!("x^2 + y^2 + 1 > {k} x y (x >= y by symmetry)"),
            &format!("a^2 + b^2 + 1 - {k}*a*b"),
            &[('b', "1+t"), ('a', "1+t+s")],
        );
        return Certificate {
            checks: vec![pos],
            floors: String::new(),
            argument: "the left side always exceeds the right side".into(),
        };
    }
    let floor = Check::group(
        CheckKind::Floor,
        "a = 1 forces b^2 - k b + 2 = 0 (and symmetrically for b)",
        vec![
            not_square("the discriminant k^2 - 8 is not a square", &kk * &kk - 8),
            no_root(
                "no positive integer root",
                &[BigInt::from(2), -kk.clone(), BigInt::from(1)],
                format!("b^2 - {k} b + 2"),
            ),
        ],
    );
    let descent = Check::group(
        CheckKind::Descent,
        "for a >= b >= 2, f(t) = t^2 - k b t + b^2 + 1 has f(b) < 0, so the jump a' = k b - a gives a' < b < a",
        vec![positivity("-f(b) = (k - 2) b^2 - 1 > 0", &format!("{k}*b^2 - 2*b^2 - 1"), &[('b', "2+t")])],
    );
    Certificate {
        checks: vec![floor, descent, search(Family::Rank2Markov, k, 200)],
        floors: "min(a, b) >= 2".into(),
        argument: "every solution has min >= 2 and a neighbour with strictly smaller maximum; infinite descent is \
                   impossible"
            .into(),
    }
}

fn rank2_quartic(k: u64) -> Certificate {
    let kk = BigInt::from(k);
    let vieta = "viewing the equation as t^2 - k a t + (a+1)^2 = 0 in t = b^2, both roots b^2 and b'^2 are \
                 squares of integers";
    match k {
        1 | 2 => Certificate {
            checks: vec![positivity(
                "the discriminant k^2 a^2 - 4 (a+1)^2 in t = b^2 is negative",
                &format!("4*(a+1)^2 - {}*a^2", k * k),
                &[('a', "1+t")],
            )],
            floors: String::new(),
            argument: "no real b^2 solves the equation".into(),
        },
        3 => Certificate {
            checks: vec![
                identity(
                    format!("{vieta}; (b - b')^2 = a - 2 = s^2 and the discriminant is s^2 (5 s^2 + 12)"),
                    "9*a^2 - 4*(a+1)^2",
                    "s^2*(5*s^2 + 12)",
                    &[('a', "s^2 + 2")],
                ),
                square_obstruction("for s > 0, 5 s^2 + 12 must be a square", 9, "5 s^2 + 12", |s| 5 * s * s + 12),
                no_root("s = 0 gives a = 2 and b^4 - 6 b^2 + 9 = 0", &ints(&[9, 0, -6, 0, 1]), "b^4 - 6 b^2 + 9".into()),
            ],
            floors: String::new(),
            argument: "an integer pair would make the discriminant a square".into(),
        },
        4 => Certificate {
            checks: vec![
                identity(
                    format!("{vieta}; (b - b')^2 = 2 (a - 1) forces a = 2 s^2 + 1 and the discriminant is 16 s^2 (3 s^2 + 2)"),
                    "16*a^2 - 4*(a+1)^2",
                    "16*s^2*(3*s^2 + 2)",
                    &[('a', "2*s^2 + 1")],
                ),
                square_obstruction("for s > 0, 3 s^2 + 2 must be a square", 3, "3 s^2 + 2", |s| 3 * s * s + 2),
                no_root("s = 0 gives a = 1 and b^4 - 4 b^2 + 4 = 0", &ints(&[4, 0, -4, 0, 1]), "b^4 - 4 b^2 + 4".into()),
            ],
            floors: String::new(),
            argument: "an integer pair would make the discriminant a square".into(),
        },
        _ => {
            let a_floor = Check::group(
                CheckKind::Floor,
                "a = 1 forces b^4 - k b^2 + 4 = 0",
                vec![
                    not_square("k^2 - 16 is not a square", &kk * &kk - 16),
                    no_root("no positive integer root", &[BigInt::from(4), BigInt::zero(), -kk.clone(), BigInt::zero(), BigInt::from(1)], format!("b^4 - {k} b^2 + 4")),
                ],
            );
            let b_floor = Check::group(
                CheckKind::Floor,
                "b = 1 forces a^2 + (2 - k) a + 2 = 0",
                vec![
                    not_square("k^2 - 4k - 4 is not a square", &kk * &kk - 4 * &kk - 4),
                    no_root("no positive integer root", &[BigInt::from(2), 2 - kk.clone(), BigInt::from(1)], format!("a^2 + {} a + 2", 2 - kk.clone())),
                ],
            );
            let not_square_point = positivity(
                "a = b^2 would give (k - 2) a^2 - 2 a - 1 = 0",
                &format!("{k}*a^2 - 2*a^2 - 2*a - 1"),
                &[('a', "1+t")],
            );
            let descent = Check::group(
                CheckKind::Descent,
                "measure max(a, b^2): if a > b^2 jump a' = (b^4 + 1)/a < b^2; if a < b^2 jump b' = (a + 1)/b with b'^2 < a",
                vec![
                    positivity(
                        "a > b^2, b >= 2: a b^2 > b^4 + 1",
                        "a*b^2 - b^4 - 1",
                        &[('b', "2+t"), ('a', "(2+t)^2 + 1 + s")],
                    ),
                    positivity(
                        "a < b^2: the roots b^2, b'^2 differ, as (k^2 - 4) a^2 - 8 a - 4 > 0",
                        &format!("{}*a^2 - 8*a - 4", k * k - 4),
                        &[('a', "1+t")],
                    ),
                    positivity(
                        "a < b^2: b'^2 = a would force (k - 1) a^2 = (a + 1)^2; with b b' = a + 1 and b > b' this gives b'^2 < a",
                        &format!("{k}*a^2 - a^2 - (a+1)^2"),
                        &[('a', "1+t")],
                    ),
                ],
            );
            Certificate {
                checks: vec![a_floor, b_floor, not_square_point, descent, search(Family::Rank2Quartic, k, 200)],
                floors: "a >= 2, b >= 2, a != b^2".into(),
                argument: "every solution lies in the floor region and has a neighbour with strictly smaller \
                           max(a, b^2); infinite descent is impossible"
                    .into(),
            }
        }
    }
}

/// Lower bounds `(A0, C0)` on `A = a` and on `B, C = b^2, c^2`.
fn lampe_floors(k: u64) -> (u64, u64) {
    match k {
        1 => (7, 9),
        2 => (4, 4),
        3 => (2, 4),
        _ => (1, 4),
    }
}

fn lampe3(k: u64) -> Certificate {
    let (a0, c0) = lampe_floors(k);
    let mut checks = Vec::new();

    // b, c >= 2.
    let claim = "b = 1 (or c = 1) leaves c^4 + (a + 1)^2 = (k - 2) a c^2";
    checks.push(if k <= 2 {
        let expr = format!("c^4 + (a+1)^2 + {}*a*c^2", 2 - k);
        Check::group(
            CheckKind::Floor,
            claim,
            vec![positivity(
                "the left side exceeds the right side",
                &expr,
                &[('a', "1+s"), ('c', "1+t")],
            )],
        )
    } else {
        reduction(claim, Family::Rank2Quartic, k - 2)
    });

    // B, C >= 9 when k = 1.
    if k == 1 {
        let expr = "A^2 + B^2 + 16 + 2*A*B + 8*A - 4*A*B";
        checks.push(Check::group(
            CheckKind::Floor,
            "c = 2 (C = 4) gives (A - B)^2 + 8 A + 16 = 0 (likewise b = 2)",
            vec![
                positivity("case A >= B", expr, &[('B', "1+t"), ('A', "1+t+s")]),
                positivity("case B > A", expr, &[('A', "1+t"), ('B', "2+t+s")]),
            ],
        ));
    }

    // A >= A0.
    let mut a_checks = Vec::new();
    for a in 1..a0 {
        let method = match (k, a) {
            (1, 1) | (1, 2) | (2, 1) => None,
            (1, 3) | (2, 3) => Some(27),
            (1, 4) => Some(9),
            (1, 5) => Some(125),
            (1, 6) => Some(216),
            (2, 2) => Some(16),
            (3, 1) => Some(3),
            _ => unreachable!("no floor rule for k = {k}, a = {a}"),
        };
        a_checks.push(match method {
            Some(m) => lampe_residue(k, a, m),
            None => {
                let expr = format!(
                    "{} + B^2 + C^2 + {}*B + {}*C - {}*B*C",
                    a * a,
                    2 * a,
                    2 * a,
                    k * a
                );
                positivity(
                    format!("a = {a}: the left side exceeds the right side (B >= C)"),
                    &expr,
                    &[('C', "1+t"), ('B', "1+t+s")],
                )
            }
        });
    }
    if !a_checks.is_empty() {
        checks.push(Check::group(
            CheckKind::Floor,
            format!("A = a >= {a0}"),
            a_checks,
        ));
    }

    // Descent on the hatted form with B >= C.
    let c0s = c0.to_string();
    let mut cases = vec![
        positivity(
            "A >= B >= C: f(B) < 0 for f(t) = t^2 + (2B + 2C - kBC) t + B^2 + C^2, so A' < B < A",
            &format!("{k}*B^2*C - 4*B^2 - 2*B*C - C^2"),
            &[('C', &format!("{c0}+t")), ('B', &format!("{c0}+t+s"))],
        ),
        positivity(
            "B > A >= C: g(A) < 0 for g(t) = t^2 + (2A - kAC) t + (A + C)^2, so B' < A < B",
            &format!("{k}*A^2*C - 4*A^2 - 2*A*C - C^2"),
            &[('C', &format!("{c0}+t")), ('A', &format!("{c0}+t+s"))],
        ),
    ];
    let g_c = format!("{k}*A*C^2 - 2*C^2 - 4*A*C - A^2");
    for a in a0..c0.saturating_sub(1) {
        cases.push(positivity(
            format!("B > C > A = {a}: g(C) < 0, so B' < C < B"),
            &g_c,
            &[('A', &a.to_string()), ('C', &format!("{c0s}+s"))],
        ));
    }
    let am = a0.max(c0 - 1);
    cases.push(positivity(
        format!("B > C > A >= {am}: g(C) < 0, so B' < C < B"),
        &g_c,
        &[('A', &format!("{am}+t")), ('C', &format!("{}+t+s", am + 1))],
    ));
    checks.push(Check::group(
        CheckKind::Descent,
        "on (A, B, C) = (a, b^2, c^2) the hatted jump at the maximal coordinate strictly lowers max(A, B, C)",
        cases,
    ));
    checks.push(search(Family::Lampe3, k, 30));

    Certificate {
        checks,
        floors: format!("A >= {a0}, B >= {c0}, C >= {c0} for (A, B, C) = (a, b^2, c^2)"),
        argument: "every solution lies in the floor region and its hatted jump at the maximal coordinate is again \
                   a solution there with smaller maximum; infinite descent is impossible"
            .into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decisions_match_the_solvability_tables() {
        for family in Family::ALL {
            for k in 0..=20 {
                let d = decide(family, k);
                assert_eq!(
                    d.solvable,
                    family.admissible_values().contains(&k),
                    "{family} {k}"
                );
                assert!(d.certificate.holds(), "{family} {k}:\n{d}");
            }
        }
    }

    #[test]
    fn large_k_certificates_hold() {
        for family in Family::ALL {
            for k in [97, 1000] {
                assert!(decide(family, k).certificate.holds(), "{family} {k}");
            }
        }
    }

    #[test]
    fn broken_positivity_is_reported() {
        let c = positivity("false claim", "b^2 - 5", &[('b', "1+t")]);
        assert!(!c.holds);
    }
}
