//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion:
//!
//! ```text
//! cargo test -p cluster-dioph --test acceptance -- --nocapture
//! ```
//!
//! Criteria that cannot pass as stated are listed in `KNOWN_FAILURES` with
//! the reason; the test fails if the set of failing criteria differs from
//! that list in either direction.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cluster_dioph::dioph::{
    brute_force, decide, enumerate_tree, f_composed_holds, is_reachable, replay, solve_f_composed,
    solve_finite_type, FComposed, Family, FiniteTypeEquation, Terminal, Tuple,
    NON_MONIC_EXPLANATION,
};
use cluster_dioph::laurent::{check_sequence_reductivity, is_reductive, parse_expr};
use cluster_dioph::mutclass::{classify_irreducible_sign_equivalent, ClassifyOptions};
use cluster_dioph::seeds::{enumerate_finite_type, verify_invariant, FiniteType};
use cluster_dioph::{IntMatrix, QLaurentPoly, QPoly, QRationalFn};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criterion number and why it cannot pass.
const KNOWN_FAILURES: &[(usize, &str)] = &[(
    10,
    "three displayed type-A2 products (first column, 8 to 10 factors) drop a factor (x2+1)/x1; \
     the exact products are checked separately and differ from the display by exactly that factor",
)];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_i64_rows(rows).unwrap()
}

fn known_rank3() -> Vec<IntMatrix> {
    vec![
        m(&[&[0, 2, -2], &[-2, 0, 2], &[2, -2, 0]]),
        m(&[&[0, 1, -1], &[-4, 0, 2], &[4, -2, 0]]),
        m(&[&[0, -4, 4], &[1, 0, -2], &[-1, 2, 0]]),
    ]
}

fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(f)
}

fn classification() -> Outcome {
    let opts = ClassifyOptions::default();
    let start = Instant::now();
    let (r3, r1, r4) = single_threaded(|| {
        (
            classify_irreducible_sign_equivalent(3, 4, &opts).unwrap(),
            classify_irreducible_sign_equivalent(1, 4, &opts).unwrap(),
            classify_irreducible_sign_equivalent(4, 3, &opts).unwrap(),
        )
    });
    let elapsed = start.elapsed();
    let found: BTreeSet<Vec<BigInt>> = r3
        .found
        .iter()
        .map(|e| e.representative.orbit_key().entries().to_vec())
        .collect();
    let table: BTreeSet<Vec<BigInt>> = known_rank3()
        .iter()
        .map(|b| b.orbit_key().entries().to_vec())
        .collect();
    ensure(r3.found.len() == 3, || {
        format!("rank 3 found {} orbits", r3.found.len())
    })?;
    ensure(found == table, || {
        "rank 3 orbits differ from the table".into()
    })?;
    ensure(r1.found.is_empty(), || "rank 1 is not empty".into())?;
    ensure(r4.found.is_empty(), || {
        format!("rank 4 found {}", r4.found.len())
    })?;
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "3 orbits at rank 3, none at ranks 1 and 4, {:.1?} on one thread",
        elapsed
    ))
}

fn fast_path() -> Outcome {
    let mut corpus = known_rank3();
    for b in 1..=4 {
        for c in 1..=4 {
            corpus.push(m(&[&[0, b], &[-c, 0]]));
        }
    }
    let mut slowest = Duration::ZERO;
    for b in &corpus {
        let neg = -b;
        for i in 1..=b.n() {
            let start = Instant::now();
            let out = b.mutate(i).unwrap();
            let t = start.elapsed();
            slowest = slowest.max(t);
            ensure(out == neg, || format!("mu_{i} of {b} is not -B"))?;
        }
    }
    ensure(slowest < Duration::from_millis(1), || {
        format!("slowest mutation {slowest:?}")
    })?;
    Ok(format!(
        "{} matrices, slowest single mutation {slowest:?}",
        corpus.len()
    ))
}

fn expected_rows(ty: FiniteType) -> Vec<(&'static str, &'static str)> {
    let g4 = "(x2^6+3*x1*x2^3+2*x2^3+x1^3+3*x1^2+3*x1+1)/(x1^2*x2^3)";
    let g6 = "(x2^3+x1^3+3*x1^2+3*x1+1)/(x1*x2^3)";
    match ty {
        FiniteType::A1xA1 => vec![
            ("x1", "x2"),
            ("2/x1", "x2"),
            ("2/x1", "2/x2"),
            ("x1", "2/x2"),
        ],
        FiniteType::A2 => vec![
            ("x1", "x2"),
            ("(x2+1)/x1", "x2"),
            ("(x2+1)/x1", "(x1+x2+1)/(x1*x2)"),
            ("(x1+1)/x2", "(x1+x2+1)/(x1*x2)"),
            ("(x1+1)/x2", "x1"),
            ("x2", "x1"),
            ("x2", "(x2+1)/x1"),
            ("(x1+x2+1)/(x1*x2)", "(x2+1)/x1"),
            ("(x1+x2+1)/(x1*x2)", "(x1+1)/x2"),
            ("x1", "(x1+1)/x2"),
        ],
        FiniteType::B2 => vec![
            ("x1", "x2"),
            ("(x2^2+1)/x1", "x2"),
            ("(x2^2+1)/x1", "(x2^2+x1+1)/(x1*x2)"),
            ("(x2^2+x1^2+2*x1+1)/(x1*x2^2)", "(x2^2+x1+1)/(x1*x2)"),
            ("(x2^2+x1^2+2*x1+1)/(x1*x2^2)", "(x1+1)/x2"),
            ("x1", "(x1+1)/x2"),
        ],
        FiniteType::G2 => vec![
            ("x1", "x2"),
            ("(x2^3+1)/x1", "x2"),
            ("(x2^3+1)/x1", "(x2^3+x1+1)/(x1*x2)"),
            (g4, "(x2^3+x1+1)/(x1*x2)"),
            (g4, "(x2^3+x1^2+2*x1+1)/(x1*x2^2)"),
            (g6, "(x2^3+x1^2+2*x1+1)/(x1*x2^2)"),
            (g6, "(x1+1)/x2"),
            ("x1", "(x1+1)/x2"),
        ],
    }
}

fn unordered(a: &QRationalFn, b: &QRationalFn) -> [String; 2] {
    let mut k = [a.to_string(), b.to_string()];
    k.sort();
    k
}

fn catalogs() -> Outcome {
    let mut counts = Vec::new();
    for ty in FiniteType::ALL {
        let cat = enumerate_finite_type(ty);
        let rows: BTreeSet<[String; 2]> = expected_rows(ty)
            .into_iter()
            .map(|(a, b)| unordered(&parse_expr(a, 2).unwrap(), &parse_expr(b, 2).unwrap()))
            .collect();
        ensure(cat.clusters.len() == ty.cluster_count(), || {
            format!("{ty}: {} clusters", cat.clusters.len())
        })?;
        for (a, b) in &cat.clusters {
            ensure(rows.contains(&unordered(a, b)), || {
                format!("{ty}: ({a}, {b}) is not a table row")
            })?;
        }
        counts.push(format!("{ty} {}", cat.clusters.len()));
    }
    Ok(format!(
        "{}; every cluster is a table row",
        counts.join(", ")
    ))
}

fn invariants() -> Outcome {
    let cases = [
        (
            Family::Markov3.invariant(),
            Family::Markov3.matrix(),
            "T1 on the torus matrix",
        ),
        (
            Family::Lampe3.invariant(),
            Family::Lampe3.matrix(),
            "T2 on the Lampe matrix",
        ),
        (
            Family::Rank2Markov.invariant(),
            m(&[&[0, 2], &[-2, 0]]),
            "rank-2 T1 on A(2,-2)",
        ),
        (
            Family::Rank2Quartic.invariant(),
            m(&[&[0, 1], &[-4, 0]]),
            "rank-2 T2 on A(1,-4)",
        ),
    ];
    for (t, b, name) in &cases {
        let r = verify_invariant(t, b, 1).unwrap();
        ensure(r.holds, || format!("{name}: {r}"))?;
    }
    Ok("4 invariants hold at depth 1".into())
}

fn solvability() -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    for family in Family::ALL {
        let bound = match family {
            Family::Markov3 => 200,
            Family::Lampe3 => 60,
            _ => 500,
        };
        let mut solvable = Vec::new();
        for k in 0..=20u64 {
            let d = decide(family, k);
            ensure(d.certificate.holds(), || {
                format!("{family} k={k}: certificate fails")
            })?;
            let boxed = !brute_force(family, k, bound).is_empty();
            ensure(boxed == d.solvable, || {
                format!("{family} k={k}: decide {} vs box {boxed}", d.solvable)
            })?;
            if d.solvable {
                solvable.push(k);
            }
            checks += d.certificate.check_count();
        }
        ensure(solvable == family.admissible_values(), || {
            format!("{family}: solvable for {solvable:?}")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "84 decisions agree with the boxes, {checks} certificate checks, {elapsed:.1?}"
    ))
}

fn tree_matches_box(family: Family, k: u64, bound: u64) -> Result<usize, String> {
    let tree = enumerate_tree(family, k, &BigInt::from(bound)).map_err(|e| e.to_string())?;
    let brute = brute_force(family, k, bound);
    ensure(tree.sorted_tuples() == brute, || {
        format!("{family}: tree {} vs box {}", tree.len(), brute.len())
    })?;
    let root = family.fundamental(k).unwrap();
    for x in &brute {
        let trace = is_reachable(family, k, x).ok_or_else(|| format!("{x:?} not reachable"))?;
        ensure(
            trace.terminal == Terminal::Fundamental(root.clone()),
            || format!("{x:?} stuck"),
        )?;
        ensure(replay(family, k, &trace.word()).as_ref() == Some(x), || {
            format!("{x:?} does not replay")
        })?;
    }
    Ok(brute.len())
}

fn trees() -> Outcome {
    let markov = tree_matches_box(Family::Markov3, 3, 1000)?;
    let lampe = tree_matches_box(Family::Lampe3, 7, 200)?;
    Ok(format!(
        "Markov {markov} solutions, Lampe {lampe} solutions, every word replays"
    ))
}

fn scaling() -> Outcome {
    let ones = enumerate_tree(Family::Markov3, 1, &BigInt::from(3000)).unwrap();
    let threes = enumerate_tree(Family::Markov3, 3, &BigInt::from(1000)).unwrap();
    ensure(ones.len() == threes.len(), || {
        format!("{} vs {} nodes", ones.len(), threes.len())
    })?;
    for (a, b) in ones.nodes.iter().zip(&threes.nodes) {
        let scaled: Tuple = b.tuple.iter().map(|v| v * 3).collect();
        ensure(
            a.tuple == scaled && a.parent == b.parent && a.dir == b.dir,
            || format!("{:?} vs {scaled:?}", a.tuple),
        )?;
    }
    Ok(format!("{} nodes match elementwise", ones.len()))
}

/// The displayed integer equations, `lhs - rhs` at `(x1, x2)`.
fn displayed_equation(ty: FiniteType, x1: i128, x2: i128) -> i128 {
    match ty {
        FiniteType::A1xA1 => x1 * x1 * x2 + x1 * x2 * x2 + 2 * x1 + 2 * x2 - 6 * x1 * x2,
        FiniteType::A2 => {
            x1 * x1 * x2 + x1 * x2 * x2 + x1 * x1 + x2 * x2 + 2 * x1 + 2 * x2 + 1 - 9 * x1 * x2
        }
        FiniteType::B2 => {
            x2.pow(4) + x1 * x1 * x2 * x2 + 2 * x2 * x2 + x1 * x1 + 2 * x1 + 1 - 8 * x1 * x2 * x2
        }
        FiniteType::G2 => {
            x2.pow(4)
                + x1 * x2.pow(3)
                + x2.pow(3)
                + x1 * x1 * x2
                + 2 * x1 * x2
                + x1 * x1
                + x2
                + 2 * x1
                + 1
                - 11 * x1 * x2 * x2
        }
    }
}

fn finite_type() -> Outcome {
    let mut summary = Vec::new();
    for ty in FiniteType::ALL {
        let eq = FiniteTypeEquation::standard(ty);
        let report =
            solve_finite_type(&eq, &BigInt::from(1_000_000)).map_err(|e| format!("{ty}: {e}"))?;
        let got: BTreeSet<(i128, i128)> = report
            .solutions
            .iter()
            .map(|s| {
                (
                    i128::try_from(&s.x[0]).unwrap(),
                    i128::try_from(&s.x[1]).unwrap(),
                )
            })
            .collect();
        let brute: BTreeSet<(i128, i128)> = (1..=500)
            .flat_map(|a| (1..=500).map(move |b| (a, b)))
            .filter(|&(a, b)| displayed_equation(ty, a, b) == 0)
            .collect();
        ensure(got == brute, || {
            format!("{ty}: solver {got:?} vs box {brute:?}")
        })?;
        let cap = report.level.floor().to_integer() + 1;
        ensure(report.min_bound == cap, || {
            format!("{ty}: min bound {}", report.min_bound)
        })?;
        for &(a, b) in &got {
            ensure(BigInt::from(a.min(b)) <= cap, || {
                format!("{ty}: ({a}, {b}) beyond the bound")
            })?;
        }
        summary.push(format!("{ty} {}", got.len()));
    }
    Ok(format!("solution counts {}", summary.join(", ")))
}

fn laurent(src: &str) -> QLaurentPoly {
    QLaurentPoly::from_rational(&parse_expr(src, 2).unwrap()).unwrap()
}

fn random_laurent(rng: &mut ChaCha8Rng) -> QLaurentPoly {
    let terms = rng.gen_range(1..=4);
    QLaurentPoly::from_terms(
        2,
        (0..terms).map(|_| {
            let c = BigRational::from_integer(BigInt::from(rng.gen_range(1..=4)));
            (vec![rng.gen_range(-3..=3), rng.gen_range(-3..=3)], c)
        }),
    )
}

fn reductivity() -> Outcome {
    for src in [
        Family::Rank2Markov.invariant_expr(),
        Family::Rank2Quartic.invariant_expr(),
    ] {
        ensure(is_reductive(&laurent(src)).unwrap().is_none(), || {
            format!("{src} is reductive")
        })?;
    }
    for ty in FiniteType::ALL {
        let report =
            solve_finite_type(&FiniteTypeEquation::standard(ty), &BigInt::from(1_000_000)).unwrap();
        let l = QLaurentPoly::from_rational(&report.invariant).unwrap();
        ensure(is_reductive(&l).unwrap().is_some(), || {
            format!("{ty} is not reductive")
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed());
    let mut exercised = 0;
    for _ in 0..1000 {
        let (a, b) = (random_laurent(&mut rng), random_laurent(&mut rng));
        if is_reductive(&a).unwrap().is_some() {
            exercised += 1;
            ensure(is_reductive(&(&a + &b)).unwrap().is_some(), || {
                format!("sum of {a} and {b}")
            })?;
            if is_reductive(&b).unwrap().is_some() {
                ensure(is_reductive(&(&a * &b)).unwrap().is_some(), || {
                    format!("product of {a} and {b}")
                })?;
            }
        }
    }
    Ok(format!("affine invariants not reductive, 4 finite-type forms reductive, closure on 1000 pairs ({exercised} with a reductive summand)"))
}

fn seed() -> u64 {
    std::env::var("CLUSTER_DIOPH_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(20_241_018)
}

/// Products exactly as displayed, `(column, factors, value)`.
fn displayed_products(ty: FiniteType) -> Vec<(usize, usize, String)> {
    let rows: Vec<(&str, &str)> = match ty {
        FiniteType::A1xA1 => vec![("2", "x2^2"), ("2*x1", "2*x2"), ("4", "4")],
        FiniteType::A2 => vec![
            ("x2+1", "x2^2"),
            ("x2*(x2+1)", "x1*x2^2"),
            ("x2^2*(x2+1)", "x2^2*(x2+1)"),
            ("x2*(x2+1)*(x1+1)", "x1*x2^2*(x2+1)"),
            ("x1*x2*(x2+1)*(x1+1)", "x1*x2*(x2+1)*(x1+1)"),
            ("x2*(x2+1)^2*(x1+1)", "(x2+1)*(x1+1)*(x1+x2+1)"),
            ("(x2+1)*(x1+1)*(x1+x2+1)", "(x2+1)^2*(x1+1)*(x1+x2+1)/x1"),
            (
                "(x2+1)*(x1+1)^2*(x1+x2+1)/x2",
                "(x2+1)^2*(x1+1)*(x1+x2+1)^2/(x1^2*x2)",
            ),
            (
                "(x2+1)*(x1+1)^2*(x1+x2+1)^2/(x1*x2^2)",
                "(x2+1)^2*(x1+1)^2*(x1+x2+1)^2/(x1^2*x2^2)",
            ),
        ],
        FiniteType::B2 => vec![
            ("x2^2+1", "x2^2"),
            ("x1*(x2^2+1)", "x2*(x1+1)"),
            ("(x2^2+1)^2", "(x2^2+x1+1)*(x1+1)/x1"),
            (
                "(x2^2+1)^2*(x2^2+x1^2+2*x1+1)/(x1*x2^2)",
                "(x1+1)^2*(x2^2+x1+1)/(x1*x2)",
            ),
            (
                "(x2^2+1)^2*(x2^2+x1^2+2*x1+1)^2/(x1^2*x2^4)",
                "(x1+1)^2*(x2^2+x1+1)^2/(x1^2*x2^2)",
            ),
        ],
        FiniteType::G2 => vec![
            ("x2^3+1", "x2^2"),
            ("x1*(x2^3+1)", "x2*(x1+1)"),
            ("(x2^3+1)^2", "(x1+1)*(x2^3+x1+1)/x1"),
            ("(x2^3+1)^2*P/(x1*x2^3)", "(x1+1)^2*(x2^3+x1+1)/(x1*x2)"),
            (
                "(x2^3+1)^2*P^2/(x1^2*x2^6)",
                "(x1+1)^2*(x2^3+x1+1)*(x2^3+x1^2+2*x1+1)/(x1^2*x2^3)",
            ),
            (
                "(x2^3+1)^2*P^2*Q/(x1^4*x2^9)",
                "(x1+1)^2*(x2^3+x1+1)*(x2^3+x1^2+2*x1+1)^2/(x1^3*x2^5)",
            ),
            (
                "(x2^3+1)^2*P^2*Q^2/(x1^6*x2^12)",
                "(x1+1)^2*(x2^3+x1+1)^2*(x2^3+x1^2+2*x1+1)^2/(x1^4*x2^6)",
            ),
        ],
    };
    let expand = |s: &str| {
        s.replace('P', "(x2^3+x1^3+3*x1^2+3*x1+1)")
            .replace('Q', "(x2^6+3*x1*x2^3+2*x2^3+x1^3+3*x1^2+3*x1+1)")
    };
    rows.iter()
        .enumerate()
        .flat_map(|(j, (a, b))| [(1, j + 2, expand(a)), (2, j + 2, expand(b))])
        .collect()
}

fn sequence_products() -> Outcome {
    let mut total = 0;
    let mut mismatches = Vec::new();
    for ty in FiniteType::ALL {
        let report = check_sequence_reductivity(ty);
        for (c, len, shown) in displayed_products(ty) {
            total += 1;
            let got = &report
                .product(c, len)
                .ok_or_else(|| format!("{ty}: no product F{c} x{len}"))?
                .value;
            let shown = parse_expr(&shown, 2).unwrap();
            if *got != shown {
                // Quantify the disagreement for the record.
                let ratio = got.checked_div(&shown).unwrap();
                mismatches.push(format!("{ty} F{c} x{len}: computed/displayed = {ratio}"));
            }
        }
        if ty == FiniteType::A1xA1 {
            let flat: Vec<(usize, usize)> = report
                .non_reductive()
                .iter()
                .map(|p| (p.component, p.prefix_len))
                .collect();
            ensure(flat == [(1, 2), (1, 4), (2, 4)], || {
                format!("A1xA1 non-reductive products {flat:?}")
            })?;
        } else {
            ensure(report.non_reductive().is_empty(), || {
                format!("{ty}: a product is not reductive")
            })?;
        }
    }
    if mismatches.is_empty() {
        Ok(format!("all {total} displayed products reproduced"))
    } else {
        Err(format!(
            "{} of {total} displayed products differ: {}",
            mismatches.len(),
            mismatches.join("; ")
        ))
    }
}

fn poly(src: &str) -> QPoly {
    parse_expr(src, 1).unwrap().numer().clone()
}

fn no_solution_in_box(family: Family, f: &QPoly, t: &BigInt, side: i64) -> bool {
    let r = 1..=side;
    if family.rank() == 2 {
        !r.clone().any(|a| {
            r.clone()
                .any(|b| f_composed_holds(family, f, t, &[a.into(), b.into()]))
        })
    } else {
        !r.clone().any(|a| {
            r.clone().any(|b| {
                r.clone()
                    .any(|c| f_composed_holds(family, f, t, &[a.into(), b.into(), c.into()]))
            })
        })
    }
}

fn f_composed() -> Outcome {
    let tup = |v: &[i64]| -> Tuple { v.iter().map(|&x| BigInt::from(x)).collect() };
    // (family, F, t, expected generators); unsolvable when empty.
    let suite: Vec<(Family, &str, i64, Vec<Tuple>)> = vec![
        (Family::Rank2Markov, "(x1-3)*(x1-4)", 4, vec![tup(&[1, 1])]),
        (Family::Rank2Markov, "x1^2", -3, vec![tup(&[1, 1])]),
        (Family::Rank2Markov, "x1^2 - 5*x1", 1, vec![]),
        (Family::Rank2Quartic, "x1^3", 5, vec![tup(&[1, 1])]),
        (
            Family::Rank2Quartic,
            "(x1-5)*(x1+1)",
            -1,
            vec![tup(&[1, 1])],
        ),
        (Family::Rank2Quartic, "x1^2", 4, vec![]),
        (
            Family::Markov3,
            "(x1-1)*(x1-3)",
            1,
            vec![tup(&[3, 3, 3]), tup(&[1, 1, 1])],
        ),
        (Family::Markov3, "x1", 1, vec![tup(&[3, 3, 3])]),
        (
            Family::Markov3,
            "x1^2 - 4*x1",
            3,
            vec![tup(&[3, 3, 3]), tup(&[1, 1, 1])],
        ),
        (Family::Markov3, "x1^2", -3, vec![tup(&[1, 1, 1])]),
        (Family::Markov3, "x1^2", 2, vec![]),
        (Family::Lampe3, "x1^2 - 49", -7, vec![tup(&[1, 1, 1])]),
        (Family::Lampe3, "x1", 6, vec![]),
    ];
    for (family, f, t, expected) in &suite {
        let fp = poly(f);
        let tv = BigInt::from(*t);
        let d = solve_f_composed(&FComposed {
            base: *family,
            f: fp.clone(),
            t: tv.clone(),
        })
        .map_err(|e| e.to_string())?;
        ensure(d.solvable == !expected.is_empty(), || {
            format!("{family} F={f} t={t}: solvable {}", d.solvable)
        })?;
        ensure(&d.generators == expected, || {
            format!("{family} F={f} t={t}: generators {:?}", d.generators)
        })?;
        for g in &d.generators {
            ensure(f_composed_holds(*family, &fp, &tv, g), || {
                format!("{family} F={f}: {g:?} fails")
            })?;
        }
        if expected.is_empty() {
            let side = if family.rank() == 2 { 60 } else { 12 };
            ensure(no_solution_in_box(*family, &fp, &tv, side), || {
                format!("{family} F={f} t={t}: box has a solution")
            })?;
        }
    }
    for (f, t, sols) in [
        ("4*x1^2 - 17*x1 + 18", 2, vec![tup(&[2, 2])]),
        ("3*x1^2 - 20*x1 + 36", 3, vec![tup(&[1, 3]), tup(&[10, 3])]),
    ] {
        let fp = poly(f);
        let err = solve_f_composed(&FComposed {
            base: Family::Rank2Markov,
            f: fp.clone(),
            t: t.into(),
        })
        .err()
        .ok_or_else(|| format!("non-monic {f} accepted"))?;
        ensure(err.to_string() == NON_MONIC_EXPLANATION, || {
            format!("unexpected message: {err}")
        })?;
        for s in &sols {
            ensure(
                f_composed_holds(Family::Rank2Markov, &fp, &BigInt::from(t), s),
                || format!("{s:?} fails {f}"),
            )?;
            let reached = is_reachable(Family::Rank2Markov, 3, s)
                .map_or(false, |tr| tr.reached_fundamental());
            ensure(!reached, || format!("{s:?} is in the orbit of (1, 1)"))?;
        }
    }
    Ok(format!(
        "{} decisions, both non-monic examples refused with the explanation",
        suite.len()
    ))
}

#[test]
fn acceptance() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("classification", classification),
        ("sign-equivalence fast path", fast_path),
        ("finite-type catalogs", catalogs),
        ("invariant verification", invariants),
        ("solvability tables", solvability),
        ("tree/oracle equivalence", trees),
        ("scaling bijection", scaling),
        ("finite-type equations", finite_type),
        ("reductivity suite", reductivity),
        ("cluster-sequence products", sequence_products),
        ("F-composed decisions", f_composed),
    ];
    let mut failed = BTreeSet::new();
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        let n = i + 1;
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        match outcome {
            Ok(detail) => println!("PASS {n:>2} {name}: {detail}"),
            Err(detail) => {
                println!("FAIL {n:>2} {name}: {detail}");
                if let Some((_, why)) = KNOWN_FAILURES.iter().find(|(k, _)| *k == n) {
                    println!("        known: {why}");
                }
                failed.insert(n);
            }
        }
    }
    let known: BTreeSet<usize> = KNOWN_FAILURES.iter().map(|(n, _)| *n).collect();
    assert_eq!(
        failed, known,
        "failing criteria differ from the recorded ones"
    );
}

/// The exact products that stand in for the three mismatched displays.
#[test]
fn corrected_a2_products() {
    let r = check_sequence_reductivity(FiniteType::A2);
    for (len, shown) in [
        (8, "(x2+1)*(x1+1)*(x1+x2+1)"),
        (9, "(x2+1)*(x1+1)^2*(x1+x2+1)/x2"),
        (10, "(x2+1)*(x1+1)^2*(x1+x2+1)^2/(x1*x2^2)"),
    ] {
        let got = &r.product(1, len).unwrap().value;
        assert_eq!(
            got.checked_div(&parse_expr(shown, 2).unwrap()).unwrap(),
            parse_expr("(x2+1)/x1", 2).unwrap()
        );
        assert!(r.product(1, len).unwrap().reductive);
    }
}
