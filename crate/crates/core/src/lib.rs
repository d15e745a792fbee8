//! Exact computations for variational GIT of pairs `(X, H)`, where `X` is a
//! degree `d` hypersurface in `P^{n+1}` and `H` a hyperplane, polarized by
//! `O(1, t)`; the log CM line bundle and Donaldson–Futaki weights attached to
//! one-parameter degenerations; closed-form volume and angle thresholds; and
//! the torus centroid criterion for anticanonical sections of the cubic
//! surface with three `A2` singularities.
//!
//! Everything that decides a sign is computed over exact rationals.

pub mod bounds;
pub mod candidates;
pub mod cm;
pub mod engine;
pub mod error;
pub mod job;
pub mod one_param;
pub mod poly;
pub mod rational;
pub mod series;
pub mod torus;

pub use candidates::{generate_candidates, load_candidates, CandidateSet};
pub use engine::{limit_pair, mu_t, verdict_in_coords, PairState, StabilityVerdict, VerdictKind};
pub use error::{Error, Result};
pub use one_param::OneParamSubgroup;
pub use poly::{parse_polynomial, Monomial, SparsePolynomial};
pub use rational::Rational;
