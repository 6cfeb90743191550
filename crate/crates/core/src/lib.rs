//! Exact arithmetic for minimal 3-folds of general type with baskets of
//! terminal quotient singularities.
//!
//! The crate computes plurigenera through Reid's formula
//!
//! ```text
//! P_m = (1/12) m(m-1)(2m-1) K³ - (2m-1) χ(O) + l(m),   m ≥ 2,
//! ```
//!
//! where `l(m)` is the basket correction term, and builds on it:
//!
//! - [`basket`]: the basket data model, modular arithmetic, and the local
//!   correction term `l(Q, m)`;
//! - [`reid`]: the formula itself, the grouped `Δ`-functionals, the table
//!   of `∇'`/`Λ'` invariants, and symbolic identity expansion;
//! - [`search`]: exhaustive enumeration of all basket multisets hitting a
//!   target invariant vector, with exact pruning and the `K³`/Miyaoka-Reid
//!   elimination filters;
//! - [`verify`]: a harness reproducing every published computation (table,
//!   identity constants, case lists, plurigenus sequences, index bounds,
//!   birationality bounds) and reporting any discrepancy.
//!
//! Everything is computed with arbitrary-precision rationals; there is no
//! floating point anywhere, and all public values are immutable and safe
//! to share across threads.

pub mod basket;
pub mod rational;
pub mod reid;
pub mod search;
pub mod verify;

pub use basket::{canonical_types, mod_inverse, Basket, BasketError, QuotientSingularity};
pub use rational::{ParseRationalError, Rational};
pub use reid::{
    apply_f, apply_g, build_table, delta, lambda_vector, nabla_vector, plurigenus, solve_k3,
    BasketRow, GeometrySpec, IdentityExpansion, LinearCombination, ReidError,
};
pub use search::{
    enumerate, enumerate_with_filters, AnnotatedSolution, CandidateRow, FilteredSearch,
    SearchError, SearchProblem, SolutionMultiset, VectorFamily,
};
pub use verify::{
    birationality_bound, bound_branches, check_index_bounds, reproduce_all, BoundBranch,
    BoundError, BoundQuery, CaseReport, ImageDim, IndexBoundReport, ReproductionReport, Verdict,
};
