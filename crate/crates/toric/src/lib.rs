//! Binomial Groebner bases for toric ideals of graphs.
//!
//! Binomials are pure differences of monomials and reduction never creates
//! coefficients, so the whole engine works on exponent vectors. Variable
//! `k` is the `k`-th edge in the graph's sorted edge list.

pub mod binomial;
pub mod fan;
pub mod gb;
pub mod ideal;
pub mod kn;
pub mod lattice;
pub mod lp;
pub mod monomial;
pub mod oracle;
pub mod order;
pub mod search;

use thiserror::Error;

pub use binomial::{Binomial, BinomialIdeal, Provenance};
pub use fan::{grobner_fan, has_quadratic_gb_certified, Certification, FanResult};
pub use gb::{buchberger, is_quadratic_gb, normal_form, satisfies_buchberger_criterion, ReducedGB};
pub use ideal::{four_cycle_generators, toric_ideal, walk_binomial};
pub use kn::{eliminate_to_subgraph_gb, kn_circular_gb};
pub use lattice::{incidence_matrix, lattice_kernel_basis};
pub use monomial::{Monomial, MAX_VARS};
pub use oracle::quad_generation_oracle;
pub use order::TermOrder;
pub use search::{random_weight_search, random_weight_search_in, SearchOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error("{0} variables exceed the supported maximum of {MAX_VARS}")]
    TooManyVariables(usize),
    #[error("exponent does not fit the monomial representation")]
    ExponentOverflow,
    #[error("weights must be positive, found {0}")]
    NonPositiveWeight(i64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("binomial with equal terms is zero")]
    ZeroBinomial,
    #[error("closed walk of odd length {0}")]
    OddWalk(usize),
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("complete graph size {0} outside 4..=9")]
    KnOutOfRange(usize),
    #[error("edge {0:?} is not on the polygon boundary")]
    NotOnBoundary((usize, usize)),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}
