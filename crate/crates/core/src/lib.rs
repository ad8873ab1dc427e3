//! Conservative belief updating.
//!
//! An agent with prior `mu` who observes event `A` holds the posterior
//! `delta(A) * mu + (1 - delta(A)) * B(mu, A)`, where `B` is Bayesian
//! conditioning and `delta(A)` in `[0, 1]` is the weight kept on the prior.
//! The crate covers the single-prior expected-utility model, brute-force
//! audits of the behavioral axioms that characterize it, recovery of the
//! weights from choice data, and the multiple-prior (credal set) extension.

pub mod acts;
pub mod audit;
pub mod belief;
pub mod error;
pub mod identification;
pub mod lp;
pub mod multiprior;
pub mod sampling;

pub use acts::{
    certainty_equivalent, expected_utility, prefers, splice, Act, Comparison, Conditioning,
    ConservativeSeuModel, Utility, UtilityKind,
};
pub use belief::{
    bayes_update, conservative_update, event_prob, mix_beliefs, Belief, Event, StateSpace,
};
pub use error::{Error, Result};

/// Normalization tolerance for probability vectors.
pub const EPS_SUM: f64 = 1e-12;
/// Indifference band for preference and equality comparisons.
pub const EPS_CMP: f64 = 1e-9;
/// Fit tolerance for projections and feasibility solves.
pub const EPS_FIT: f64 = 1e-6;
/// Events are 64-bit masks.
pub const MAX_STATES: usize = 64;
