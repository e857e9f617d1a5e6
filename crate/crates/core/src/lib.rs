//! Exact invariants of the 2-connected 7-manifolds `M_{a,b}` obtained as
//! free `S³` quotients of cohomogeneity-one manifolds, and a search layer
//! that classifies the homotopy spheres among them by their Eells-Kuiper
//! invariant.
//!
//! The crate is layered bottom-up:
//!
//! * [`rational`], [`poly`], [`cyclotomic`]: exact arithmetic in ℚ and in
//!   cyclotomic fields ℚ(ζ_N);
//! * [`dedekind`]: the generalized Dedekind sums `D(q; p1, p2, p3)`, exact
//!   and numeric;
//! * [`invariants`]: validity, `n`, `m`, cohomology, orbifold data,
//!   characteristic numbers, `μ`, its adiabatic decomposition and the
//!   exotic-sphere class;
//! * [`search`]: deterministic parallel scans of parameter boxes;
//! * [`cli`]: the `exotic7` command-line front end.

pub mod cli;
pub mod cyclotomic;
pub mod dedekind;
pub mod invariants;
mod numeric;
pub mod poly;
pub mod rational;
pub mod search;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicElement, CyclotomicError, CyclotomicField};
pub use dedekind::{
    dedekind_sum_exact, dedekind_sum_numeric, q3_closed_form, triple_dedekind_sum, DedekindArgs,
    DedekindError,
};
pub use invariants::{
    classify, cohomology, eells_kuiper, ek_decomposition, m_invariant, n_invariant,
    orbifold_report, validate, InvariantError, InvariantReport, ManifoldParams, ParamTriple,
};
pub use poly::RationalPolynomial;
pub use rational::Rational;
pub use search::{corollary_table, enumerate_valid, run_search, SearchResult, SearchSpec};
