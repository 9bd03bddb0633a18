use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use cluster_dioph::dioph::{
    decide, enumerate_tree, fmt_tuple, is_reachable, parse_tuple, solve_f_composed,
    solve_finite_type, Check, Decision, FComposed, Family, FiniteTypeEquation, Terminal, Tuple,
};
use cluster_dioph::laurent::parse_expr;
use cluster_dioph::matrix::matrix_to_json;
use cluster_dioph::mutclass::{classify_irreducible_sign_equivalent, ClassifyOptions};
use cluster_dioph::seeds::{
    enumerate_finite_type, verify_invariant, FiniteType, InvariantSpec, Seed, SymmetricFn, Verdict,
};
use cluster_dioph::{Error, IntMatrix, QPoly};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "cluster-dioph",
    version,
    about = "Cluster mutations and Markov-type Diophantine equations"
)]
struct Cli {
    /// Worker threads for searches (default: all cores).
    #[arg(long, global = true, env = "CLUSTER_DIOPH_THREADS")]
    threads: Option<usize>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Search for irreducible sign-equivalent exchange matrices.
    Classify {
        #[arg(long)]
        rank: usize,
        /// Largest absolute entry.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        bound: u32,
        /// Keep matrices without a skew-symmetrizer.
        #[arg(long)]
        allow_non_symmetrizable: bool,
    },
    /// Mutate an exchange matrix along a word.
    Mutate {
        #[command(flatten)]
        matrix: MatrixArg,
        /// Directions, 1-based, e.g. `1,2,1`.
        #[arg(long, value_delimiter = ',')]
        word: Vec<usize>,
        /// Also print the cluster variables.
        #[arg(long)]
        cluster: bool,
    },
    /// List the clusters of a rank-2 finite type.
    Enumerate {
        #[arg(long = "type", value_parser = parse_type)]
        ty: FiniteType,
    },
    /// Check that an expression is unchanged by mutation.
    VerifyInvariant {
        #[command(flatten)]
        matrix: MatrixArg,
        /// Rational expression in `x1..xn`.
        #[arg(long)]
        expr: String,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Decide solvability of `T(x) = k`, or of `F(T(x)) = F(t)` with `--compose`.
    Solve {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, required_unless_present = "compose", conflicts_with = "compose")]
        k: Option<u64>,
        /// Monic integer polynomial in `X`.
        #[arg(long, requires = "t")]
        compose: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<BigInt>,
    },
    /// Solve the equation built from a finite-type invariant.
    SolveFinite {
        #[arg(long = "type", value_parser = parse_type)]
        ty: FiniteType,
        /// `e<d>`, `p<d>`, or a symmetric polynomial in `x1..xm`.
        /// Defaults to the classic equation for the type.
        #[arg(long, requires = "f")]
        phi: Option<String>,
        /// Polynomial in `x1, x2`.
        #[arg(long, requires = "phi")]
        f: Option<String>,
        /// Point fixing the level.
        #[arg(long, default_value = "1,1")]
        point: String,
        /// Cap on the root scan.
        #[arg(long, default_value = "1000000")]
        max_scan: BigInt,
    },
    /// Enumerate the solution tree inside a box.
    Tree {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        bound: BigInt,
        /// Collapse coordinate permutations.
        #[arg(long)]
        sorted: bool,
    },
    /// Descend from a solution to the fundamental one.
    Member {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        tuple: String,
    },
}

#[derive(Args)]
struct MatrixArg {
    /// A matrix file, or the matrix inline as `0 2 -2; -2 0 2; 2 -2 0`.
    #[arg(long)]
    matrix: String,
}

impl MatrixArg {
    fn load(&self) -> Result<IntMatrix, Failure> {
        let text = if Path::new(&self.matrix).is_file() {
            std::fs::read_to_string(&self.matrix)
                .with_context(|| format!("reading {}", self.matrix))
                .map_err(Failure::Usage)?
        } else {
            self.matrix.clone()
        };
        let m: IntMatrix = text.parse().map_err(usage)?;
        if let Some((i, j)) = m.sign_skew_violation() {
            return Err(Failure::Usage(anyhow!(
                "matrix is not sign-skew-symmetric at ({}, {})",
                i + 1,
                j + 1
            )));
        }
        Ok(m)
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_type(s: &str) -> Result<FiniteType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    /// Bad input: exit 2.
    Usage(anyhow::Error),
    /// The library refused: exit 1.
    Domain(anyhow::Error),
}

fn usage(e: Error) -> Failure {
    Failure::Usage(e.into())
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.into()),
            _ => Failure::Domain(e.into()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("refused: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

fn tuple_json(t: &Tuple) -> Value {
    serde_json::from_str(&format!(
        "[{}]",
        t.iter()
            .map(BigInt::to_string)
            .collect::<Vec<_>>()
            .join(",")
    ))
    .expect("integers")
}

fn words(w: &[usize]) -> String {
    if w.is_empty() {
        "(empty)".into()
    } else {
        w.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let mut out = String::new();
    match &cli.cmd {
        Cmd::Classify {
            rank,
            bound,
            allow_non_symmetrizable,
        } => {
            let opts = ClassifyOptions {
                require_symmetrizable: !allow_non_symmetrizable,
            };
            let cat = classify_irreducible_sign_equivalent(*rank, *bound, &opts)?;
            if cli.json {
                return Ok(pretty(&cat.to_json()));
            }
            writeln!(
                out,
                "rank {rank}, entries up to {bound}: {} orbit(s) among {} candidates",
                cat.found.len(),
                cat.candidates
            )
            .unwrap();
            for e in &cat.found {
                let d = e.symmetrizer.as_ref().map_or("none".into(), |d| {
                    d.iter()
                        .map(BigInt::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                });
                writeln!(
                    out,
                    "{}  (orbit size {}, symmetrizer {d})",
                    e.representative, e.orbit_size
                )
                .unwrap();
            }
        }
        Cmd::Mutate {
            matrix,
            word,
            cluster,
        } => {
            let b = matrix.load()?;
            let seed = Seed::initial(b).mutate_word(word)?;
            if cli.json {
                let mut v = json!({"word": word, "matrix": matrix_to_json(&seed.matrix)});
                if *cluster {
                    v["cluster"] = seed
                        .cluster
                        .iter()
                        .map(|x| Value::String(x.to_string()))
                        .collect();
                }
                return Ok(pretty(&v));
            }
            writeln!(out, "{}", seed.matrix).unwrap();
            if *cluster {
                for (i, x) in seed.cluster.iter().enumerate() {
                    writeln!(out, "x{} = {x}", i + 1).unwrap();
                }
            }
        }
        Cmd::Enumerate { ty } => {
            let cat = enumerate_finite_type(*ty);
            if cli.json {
                let rows: Vec<Value> = cat
                    .clusters
                    .iter()
                    .zip(&cat.words)
                    .map(
                        |((a, b), w)| json!({"word": w, "cluster": [a.to_string(), b.to_string()]}),
                    )
                    .collect();
                return Ok(pretty(&json!({
                    "type": ty.to_string(),
                    "matrix": matrix_to_json(&ty.matrix()),
                    "ordered_count": cat.clusters.len(),
                    "unordered_count": cat.unordered_count,
                    "clusters": rows,
                })));
            }
            writeln!(
                out,
                "{ty}: {} ordered rows, {} distinct clusters",
                cat.clusters.len(),
                cat.unordered_count
            )
            .unwrap();
            for (i, (a, b)) in cat.clusters.iter().enumerate() {
                writeln!(out, "{:>2}  ({a}, {b})", i + 1).unwrap();
            }
        }
        Cmd::VerifyInvariant {
            matrix,
            expr,
            depth,
        } => {
            let b = matrix.load()?;
            let t = parse_expr(expr, b.n()).map_err(usage)?;
            let r = verify_invariant(&t, &b, *depth)?;
            if cli.json {
                let verdict = match &r.verdict {
                    Verdict::Proven => json!({"kind": "proven"}),
                    Verdict::NoCounterexample { depth } => {
                        json!({"kind": "no-counterexample", "depth": depth})
                    }
                    Verdict::Counterexample { word } => {
                        json!({"kind": "counterexample", "word": word})
                    }
                };
                return Ok(pretty(
                    &json!({"invariant": r.holds, "verdict": verdict, "seeds_checked": r.seeds_checked}),
                ));
            }
            writeln!(out, "{r}").unwrap();
        }
        Cmd::Solve {
            family, k: Some(k), ..
        } => {
            let d = decide(*family, *k);
            if cli.json {
                return Ok(pretty(&decision_json(&d)));
            }
            writeln!(out, "{d}").unwrap();
        }
        Cmd::Solve {
            family,
            compose: Some(f),
            t: Some(t),
            ..
        } => {
            let f = parse_expr(&f.replace('X', "x1"), 1).map_err(usage)?;
            if f.denom() != &QPoly::one(1) {
                return Err(Failure::Usage(anyhow!("F must be a polynomial")));
            }
            let d = solve_f_composed(&FComposed {
                base: *family,
                f: f.numer().clone(),
                t: t.clone(),
            })?;
            if cli.json {
                return Ok(pretty(&json!({
                    "family": family.to_string(),
                    "f_at_t": d.f_at_t.to_string(),
                    "roots_of_g": d.roots_of_g.iter().map(BigInt::to_string).collect::<Vec<_>>(),
                    "admissible_hits": d.admissible_hits,
                    "generators": d.generators.iter().map(tuple_json).collect::<Vec<_>>(),
                    "solvable": d.solvable,
                })));
            }
            let roots: Vec<String> = d.roots_of_g.iter().map(BigInt::to_string).collect();
            writeln!(
                out,
                "{family}: F(t) = {}, positive integer roots of F(X) - F(t): {}",
                d.f_at_t,
                if roots.is_empty() {
                    "none".into()
                } else {
                    roots.join(", ")
                }
            )
            .unwrap();
            if d.solvable {
                let gens: Vec<String> = d.generators.iter().map(|g| fmt_tuple(g)).collect();
                writeln!(out, "solvable, generated by {}", gens.join(" and ")).unwrap();
            } else {
                writeln!(out, "unsolvable: no admissible level is a root").unwrap();
            }
        }
        Cmd::Solve { .. } => unreachable!("clap enforces --k or --compose with --t"),
        Cmd::SolveFinite {
            ty,
            phi,
            f,
            point,
            max_scan,
        } => {
            let mut eq = FiniteTypeEquation::standard(*ty);
            if let (Some(phi), Some(f)) = (phi, f) {
                let m = enumerate_finite_type(*ty).clusters.len();
                eq.invariant = InvariantSpec {
                    ty: *ty,
                    phi: parse_phi(phi, m)?,
                    f: parse_poly(f, 2)?,
                };
            }
            let p = parse_tuple(point).map_err(usage)?;
            if p.len() != 2 {
                return Err(Failure::Usage(anyhow!("--point needs two coordinates")));
            }
            eq.point = (p[0].clone(), p[1].clone());
            let r = solve_finite_type(&eq, max_scan)?;
            if cli.json {
                let sols: Vec<Value> = r
                    .solutions
                    .iter()
                    .map(|s| json!({"x": tuple_json(&s.x), "orbit_word": s.orbit_word}))
                    .collect();
                return Ok(pretty(&json!({
                    "type": ty.to_string(),
                    "invariant": r.invariant.to_string(),
                    "level": r.level.to_string(),
                    "min_bound": r.min_bound.to_string(),
                    "solutions": sols,
                })));
            }
            writeln!(out, "T = {}", r.invariant).unwrap();
            writeln!(out, "T(x) = {}, min(x1, x2) <= {}", r.level, r.min_bound).unwrap();
            writeln!(out, "{} solution(s)", r.solutions.len()).unwrap();
            for s in &r.solutions {
                let orbit = s
                    .orbit_word
                    .as_ref()
                    .map_or("not in the orbit of the point".into(), |w| {
                        format!("word {}", words(w))
                    });
                writeln!(out, "{}  {orbit}", fmt_tuple(&s.x)).unwrap();
            }
        }
        Cmd::Tree {
            family,
            k,
            bound,
            sorted,
        } => {
            if bound <= &BigInt::from(0) {
                return Err(Failure::Usage(anyhow!("--bound must be positive")));
            }
            let tree = enumerate_tree(*family, *k, bound)?;
            if *sorted {
                let view = tree.sorted_view();
                if cli.json {
                    return Ok(pretty(
                        &json!({"family": family.to_string(), "k": k, "bound": bound.to_string(), "sorted": view.iter().map(tuple_json).collect::<Vec<_>>()}),
                    ));
                }
                writeln!(
                    out,
                    "{family} k={k}, max coordinate <= {bound}: {} up to permutation",
                    view.len()
                )
                .unwrap();
                for t in &view {
                    writeln!(out, "{}", fmt_tuple(t)).unwrap();
                }
            } else {
                if cli.json {
                    return Ok(pretty(&tree.to_json()));
                }
                writeln!(
                    out,
                    "{family} k={k}, max coordinate <= {bound}: {} nodes, {} pruned edges",
                    tree.len(),
                    tree.pruned.len()
                )
                .unwrap();
                for (i, n) in tree.nodes.iter().enumerate() {
                    writeln!(
                        out,
                        "{i:>4}  {}  word {}",
                        fmt_tuple(&n.tuple),
                        words(&tree.word(i))
                    )
                    .unwrap();
                }
            }
        }
        Cmd::Member { family, k, tuple } => {
            let x = parse_tuple(tuple).map_err(usage)?;
            if x.len() != family.rank() {
                return Err(Failure::Usage(anyhow!(
                    "{family} needs {} coordinates",
                    family.rank()
                )));
            }
            if !family.is_solution(&x, *k) {
                return Err(Failure::Domain(anyhow!(
                    "{} is not a positive solution of {family} with k={k}",
                    fmt_tuple(&x)
                )));
            }
            let trace = is_reachable(*family, *k, &x).expect("solutions descend");
            let member = trace.reached_fundamental();
            if cli.json {
                let steps: Vec<Value> = trace
                    .steps
                    .iter()
                    .map(|s| json!({"t": tuple_json(&s.tuple), "dir": s.direction, "measure": s.measure.to_string()}))
                    .collect();
                let terminal = match &trace.terminal {
                    Terminal::Fundamental(t) | Terminal::Stuck(t) => tuple_json(t),
                };
                return Ok(pretty(
                    &json!({"member": member, "steps": steps, "terminal": terminal, "word": trace.word()}),
                ));
            }
            writeln!(out, "member: {member}").unwrap();
            for s in &trace.steps {
                writeln!(out, "{}  --mu{}-->", fmt_tuple(&s.tuple), s.direction).unwrap();
            }
            match &trace.terminal {
                Terminal::Fundamental(t) => writeln!(out, "{}  fundamental", fmt_tuple(t)).unwrap(),
                Terminal::Stuck(t) => writeln!(out, "{}  stuck", fmt_tuple(t)).unwrap(),
            }
            writeln!(
                out,
                "word from the fundamental solution: {}",
                words(&trace.word())
            )
            .unwrap();
        }
    }
    Ok(out)
}

fn parse_poly(src: &str, nvars: usize) -> Result<QPoly, Failure> {
    let r = parse_expr(src, nvars).map_err(usage)?;
    if r.denom() != &QPoly::one(nvars) {
        return Err(Failure::Usage(anyhow!("{src:?} is not a polynomial")));
    }
    Ok(r.numer().clone())
}

fn parse_phi(src: &str, m: usize) -> Result<SymmetricFn, Failure> {
    let s = src.trim();
    let degree = |rest: &str| rest.parse::<u32>().ok().filter(|d| *d > 0);
    if let Some(d) = s.strip_prefix('e').and_then(degree) {
        return Ok(SymmetricFn::Elementary(d));
    }
    if let Some(d) = s.strip_prefix('p').and_then(degree) {
        return Ok(SymmetricFn::PowerSum(d));
    }
    parse_poly(s, m).map(SymmetricFn::Explicit)
}

fn check_json(c: &Check) -> Value {
    json!({
        "kind": format!("{:?}", c.kind),
        "claim": c.claim,
        "detail": c.detail,
        "holds": c.holds,
        "nested": c.nested.iter().map(check_json).collect::<Vec<_>>(),
    })
}

fn decision_json(d: &Decision) -> Value {
    json!({
        "family": d.family.to_string(),
        "k": d.k,
        "solvable": d.solvable,
        "fundamental": d.fundamental.as_ref().map(tuple_json),
        "certificate": {
            "valid": d.certificate.holds(),
            "floors": d.certificate.floors,
            "argument": d.certificate.argument,
            "checks": d.certificate.checks.iter().map(check_json).collect::<Vec<_>>(),
        },
    })
}
