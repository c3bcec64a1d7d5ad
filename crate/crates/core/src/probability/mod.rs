//! Conditional events: time-indexed probabilities `Pr_n`, the asymptotic
//! probability, classification, Bayes cross-checks and a sampling oracle.

mod asymptotic;
mod bayes;
mod classify;
mod report;
mod simulate;

pub use asymptotic::{
    asymptotic_probability, pr_of_formula, AsymptoticResult, HeuristicConfig, Method,
    ResidueLimits, Verdict,
};
pub use bayes::{bayes_check, BayesReport};
pub use classify::{classify_event, EventClass};
pub use report::{event_report, AsymptoticJson, BayesJson, EventReport};
pub use simulate::{simulate_pr_n, Simulation};

use std::fmt;

use num_traits::Zero;

use crate::automata::{compile, MooreMachine};
use crate::chains::{Dist, MarkovChain};
use crate::logic::{CondPair, ThreeVal};
use crate::{Rational, Result};

/// A compiled conditional together with a distribution on atoms and the
/// Markov chain they induce.
#[derive(Debug, Clone)]
pub struct CondEvent {
    source: Option<CondPair>,
    machine: MooreMachine,
    dist: Dist,
    chain: MarkovChain,
}

impl CondEvent {
    /// Compiles and minimizes `pair` over the events of `dist`.
    pub fn new(pair: CondPair, dist: Dist) -> Result<Self> {
        let machine = compile(&pair, dist.events())?;
        let chain = MarkovChain::induce(&machine, &dist)?;
        Ok(CondEvent {
            source: Some(pair),
            machine,
            dist,
            chain,
        })
    }

    /// An event given directly by a machine, with no formula behind it.
    pub fn from_machine(machine: MooreMachine, dist: Dist) -> Result<Self> {
        let chain = MarkovChain::induce(&machine, &dist)?;
        Ok(CondEvent {
            source: None,
            machine,
            dist,
            chain,
        })
    }

    pub fn source(&self) -> Option<&CondPair> {
        self.source.as_ref()
    }

    pub fn machine(&self) -> &MooreMachine {
        &self.machine
    }

    pub fn dist(&self) -> &Dist {
        &self.dist
    }

    pub fn chain(&self) -> &MarkovChain {
        &self.chain
    }

    /// The source formula, or a placeholder for machine-only events.
    pub fn describe(&self) -> String {
        match &self.source {
            Some(c) => c.show(self.dist.events()),
            None => format!("<machine with {} states>", self.machine.num_states()),
        }
    }

    /// `Pr_n` for `n ≥ 1`.
    pub fn pr_n(&self, n: usize) -> PrnValue {
        PrnValue::from_dist(&self.chain.n_step_distribution(n), self.chain.outputs())
    }

    /// `Pr_1 … Pr_upto`.
    pub fn pr_n_table(&self, upto: usize) -> Vec<PrnValue> {
        self.chain
            .distributions()
            .take(upto)
            .map(|v| PrnValue::from_dist(&v, self.chain.outputs()))
            .collect()
    }
}

/// `Pr_n(c)`: a rational in `[0, 1]`, or undefined when the conditional has
/// probability 0 of being defined at time `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PrnValue {
    Value(Rational),
    Undefined,
}

impl PrnValue {
    /// Mass on output 1 over mass on outputs {0, 1}.
    pub fn from_dist(v: &[Rational], outputs: &[ThreeVal]) -> Self {
        let mut num = Rational::zero();
        let mut den = Rational::zero();
        for (p, h) in v.iter().zip(outputs) {
            match h {
                ThreeVal::True => {
                    num += p;
                    den += p;
                }
                ThreeVal::False => den += p,
                ThreeVal::Undefined => {}
            }
        }
        if den.is_zero() {
            PrnValue::Undefined
        } else {
            PrnValue::Value(num / den)
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            PrnValue::Value(q) => Some(q),
            PrnValue::Undefined => None,
        }
    }
}

impl fmt::Display for PrnValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrnValue::Value(q) => write!(f, "{q}"),
            PrnValue::Undefined => f.write_str("undef"),
        }
    }
}
