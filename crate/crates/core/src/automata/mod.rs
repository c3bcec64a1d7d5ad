//! Three-valued Moore machines: compilation from conditionals, minimization,
//! counter-freeness and product constructions.

mod compile;
mod export;
mod minimize;
mod monoid;
mod product;
mod table;

pub use compile::{compile, compile_formula, compile_unminimized};
pub use export::MachineJson;
pub use minimize::minimize;
pub use monoid::{is_counter_free, transition_monoid_size, DEFAULT_MONOID_CAP};
pub use product::product_with_table;
pub use table::TruthTable3;

use crate::logic::{Atom, EventSet, ThreeVal};
use crate::{Error, Result};

/// A deterministic machine over the atoms of an [`EventSet`] with an output in
/// `{0, 1, ⊥}` on every state. Transitions are stored densely, one row of
/// `2^|E|` targets per state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MooreMachine {
    events: EventSet,
    transitions: Vec<u32>,
    outputs: Vec<ThreeVal>,
    initial: usize,
}

impl MooreMachine {
    /// Builds a machine from a dense transition table (`transitions[q][atom]`).
    pub fn new(
        events: EventSet,
        transitions: Vec<Vec<usize>>,
        outputs: Vec<ThreeVal>,
        initial: usize,
    ) -> Result<Self> {
        let n = outputs.len();
        if transitions.len() != n {
            return Err(Error::InvalidMachine(format!(
                "{} transition rows for {n} states",
                transitions.len()
            )));
        }
        if initial >= n {
            return Err(Error::InvalidMachine(format!(
                "initial state {initial} out of range"
            )));
        }
        let width = events.atom_count();
        let mut flat = Vec::with_capacity(n * width);
        for (q, row) in transitions.iter().enumerate() {
            if row.len() != width {
                return Err(Error::InvalidMachine(format!(
                    "state {q} has {} transitions, expected {width}",
                    row.len()
                )));
            }
            for &t in row {
                if t >= n {
                    return Err(Error::InvalidMachine(format!("state {q} targets {t}")));
                }
                flat.push(t as u32);
            }
        }
        Ok(MooreMachine {
            events,
            transitions: flat,
            outputs,
            initial,
        })
    }

    pub(crate) fn from_parts(
        events: EventSet,
        transitions: Vec<u32>,
        outputs: Vec<ThreeVal>,
        initial: usize,
    ) -> Self {
        debug_assert_eq!(transitions.len(), outputs.len() * events.atom_count());
        MooreMachine {
            events,
            transitions,
            outputs,
            initial,
        }
    }

    pub fn events(&self) -> &EventSet {
        &self.events
    }

    pub fn num_states(&self) -> usize {
        self.outputs.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn output(&self, q: usize) -> ThreeVal {
        self.outputs[q]
    }

    pub fn outputs(&self) -> &[ThreeVal] {
        &self.outputs
    }

    pub fn step(&self, q: usize, atom: Atom) -> usize {
        self.transitions[q * self.events.atom_count() + atom.index()] as usize
    }

    /// Transition targets of `q`, indexed by atom.
    pub fn row(&self, q: usize) -> &[u32] {
        let w = self.events.atom_count();
        &self.transitions[q * w..(q + 1) * w]
    }

    /// `δ̂(q₀, w)`; the initial state for the empty word.
    pub fn run(&self, word: &[Atom]) -> usize {
        word.iter().fold(self.initial, |q, &a| self.step(q, a))
    }

    /// `h(δ̂(q₀, ω₁)) … h(δ̂(q₀, ω₁…ωₙ))`.
    pub fn run_trace(&self, word: &[Atom]) -> Vec<ThreeVal> {
        word.iter()
            .scan(self.initial, |q, &a| {
                *q = self.step(*q, a);
                Some(self.outputs[*q])
            })
            .collect()
    }

    /// States reachable from the initial state, in BFS order over atoms.
    pub fn reachable(&self) -> Vec<usize> {
        let mut seen = vec![false; self.num_states()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            i += 1;
            for &t in self.row(q) {
                let t = t as usize;
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                }
            }
        }
        order
    }
}
