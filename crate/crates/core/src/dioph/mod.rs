//! Markov-type Diophantine equations: mutation of solutions, decisions with
//! descent certificates, solution trees, brute-force oracles, finite-type
//! equations and compositions with monic polynomials.

mod certificate;
mod composed;
mod descent;
mod family;
mod finite;
mod hatted;
mod oracle;
mod roots;
mod tree;

pub use certificate::{decide, Certificate, Check, CheckKind, Decision};
pub use composed::{
    f_composed_holds, solve_f_composed, validate_f, FComposed, FComposedDecision,
    NON_MONIC_EXPLANATION,
};
pub use descent::{is_reachable, measure, replay, DescentStep, DescentTrace, JumpRule, Terminal};
pub use family::{fmt_tuple, parse_tuple, Family, Tuple};
pub use finite::{solve_finite_type, FiniteSolution, FiniteSolveReport, FiniteTypeEquation};
pub use hatted::{hatted_mutation, lampe_mutation, square_map};
pub use oracle::{brute_force, brute_force_exhaustive};
pub use roots::{is_square, positive_integer_roots, square_residues};
pub use tree::{enumerate_tree, PrunedEdge, SolutionNode, SolutionTree};
