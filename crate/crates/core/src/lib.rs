//! Conditional events as stochastic processes.
//!
//! A conditional `(φ|ψ)` is a pair of past-time temporal formulas. Read over a
//! growing word of atoms it yields, after every letter, a value in
//! `{0, 1, ⊥}`: the value of `φ` when `ψ` holds, `⊥` otherwise. This crate
//!
//! * parses and evaluates such conditionals directly ([`logic`]),
//! * compiles them into minimal three-valued Moore machines ([`automata`]),
//! * turns a machine plus a probability assignment on atoms into a Markov
//!   chain and solves it exactly over the rationals ([`chains`]),
//! * computes time-indexed and asymptotic conditional probabilities and
//!   classifies events as regular, strange or degenerate ([`probability`]),
//! * implements the three-valued connective systems used to combine
//!   conditionals ([`connectives`]).
//!
//! ```
//! use condevents::prelude::*;
//!
//! let events = EventSet::parse("a b").unwrap();
//! let pair = parse_conditional("(a | b)", &events).unwrap();
//! let dist = Dist::parse("mode independent\na = 1/3\nb = 1/2\n", Some(&events)).unwrap();
//! let event = CondEvent::new(pair, dist).unwrap();
//! let result = asymptotic_probability(&event, &HeuristicConfig::default()).unwrap();
//! assert_eq!(result.value().unwrap().to_string(), "1/3");
//! ```

pub mod automata;
pub mod chains;
pub mod cli;
pub mod connectives;
mod error;
pub mod logic;
pub mod probability;

pub use error::{Error, Result};

/// Exact rational numbers used for every probability in the crate.
pub type Rational = num_rational::BigRational;

pub mod prelude {
    pub use crate::automata::{
        compile, compile_formula, is_counter_free, minimize, product_with_table, MooreMachine,
        TruthTable3,
    };
    pub use crate::chains::{Dist, LimitVector, MarkovChain, StateClassification};
    pub use crate::connectives::{and_star, negate, reduce, table_of, Connective, Kind, System};
    pub use crate::logic::{
        eval_conditional, eval_formula, parse_conditional, parse_formula, trace_conditional, Atom,
        CondPair, EventSet, Formula, ThreeVal, Word,
    };
    pub use crate::probability::{
        asymptotic_probability, bayes_check, classify_event, pr_of_formula, simulate_pr_n,
        CondEvent, EventClass, HeuristicConfig, PrnValue, Verdict,
    };
    pub use crate::Rational;
}
