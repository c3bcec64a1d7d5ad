//! Markov chains induced by Moore machines under a probability assignment on
//! atoms, analysed in exact rational arithmetic.
//!
//! Step convention: the chain's initial vector already includes the first
//! letter, `Ξ₀(q) = Σ_{ω : δ(q₀, ω) = q} Pr(ω)`, so `n_step_distribution(n)`
//! is the distribution of the machine state after exactly `n` letters.

mod chain;
mod classify;
mod dist;
mod limit;
mod linalg;
mod rational;
mod support;

pub use chain::{ChainJson, MarkovChain};
pub use classify::{CommClass, StateClassification};
pub use dist::Dist;
pub use limit::LimitVector;
pub use rational::{format_f64, parse_rational, to_f64};
pub use support::{SupportSequence, DEFAULT_SUPPORT_CAP};
