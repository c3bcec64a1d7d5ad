//! Subformula-vector compilation.
//!
//! A state records, after the last consumed letter, the value of every
//! formula whose past value is needed later (arguments of `Y`, every `S`
//! node) together with the two roots. One extra state stands for the empty
//! history. The successor of a state on an atom is obtained by evaluating the
//! subformula DAG bottom-up with the recurrences
//! `Y g ← g(prev)` and `f S g ← g ∨ (f ∧ (f S g)(prev))`.

use std::collections::HashMap;

use super::{minimize, MooreMachine};
use crate::logic::{Atom, CondPair, EventSet, Formula, ThreeVal};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    True,
    False,
    Var(usize),
    Not(usize),
    Or(usize, usize),
    Prev(usize),
    Since(usize, usize),
}

#[derive(Default)]
struct Dag {
    nodes: Vec<Node>,
    index: HashMap<Node, usize>,
}

impl Dag {
    fn add(&mut self, node: Node) -> usize {
        *self.index.entry(node).or_insert_with(|| {
            self.nodes.push(node);
            self.nodes.len() - 1
        })
    }

    /// Interns a core formula; children always precede their parents.
    fn intern(&mut self, f: &Formula) -> usize {
        let node = match f {
            Formula::True => Node::True,
            Formula::False => Node::False,
            Formula::Var(i) => Node::Var(*i),
            Formula::Not(g) => Node::Not(self.intern(g)),
            Formula::Or(a, b) => {
                let a = self.intern(a);
                Node::Or(a, self.intern(b))
            }
            Formula::Prev(g) => Node::Prev(self.intern(g)),
            Formula::Since(a, b) => {
                let a = self.intern(a);
                Node::Since(a, self.intern(b))
            }
            other => return self.intern(&other.expand()),
        };
        self.add(node)
    }
}

type Bits = Box<[u64]>;

struct Stepper {
    dag: Dag,
    roots: Vec<usize>,
    /// node -> slot in the state vector
    slot_of: Vec<Option<usize>>,
    slots: usize,
}

impl Stepper {
    fn new(formulas: &[&Formula]) -> Self {
        let mut dag = Dag::default();
        let roots: Vec<usize> = formulas.iter().map(|f| dag.intern(f)).collect();
        let mut slot_of = vec![None; dag.nodes.len()];
        let mut slots = 0;
        let mut assign = |id: usize, slot_of: &mut Vec<Option<usize>>| {
            if slot_of[id].is_none() {
                slot_of[id] = Some(slots);
                slots += 1;
            }
        };
        for &r in &roots {
            assign(r, &mut slot_of);
        }
        for (id, node) in dag.nodes.iter().enumerate() {
            match *node {
                Node::Prev(g) => assign(g, &mut slot_of),
                Node::Since(..) => assign(id, &mut slot_of),
                _ => {}
            }
        }
        Stepper {
            dag,
            roots,
            slot_of,
            slots,
        }
    }

    fn get(bits: &[u64], slot: usize) -> bool {
        bits[slot / 64] >> (slot % 64) & 1 == 1
    }

    /// Successor state vector, and the root values at the new position.
    fn step(&self, prev: Option<&[u64]>, atom: Atom, vals: &mut Vec<bool>) -> Bits {
        let past = |id: usize| prev.is_some_and(|p| Self::get(p, self.slot_of[id].unwrap()));
        vals.clear();
        for (id, node) in self.dag.nodes.iter().enumerate() {
            let v = match *node {
                Node::True => true,
                Node::False => false,
                Node::Var(i) => atom.contains(i),
                Node::Not(g) => !vals[g],
                Node::Or(a, b) => vals[a] || vals[b],
                Node::Prev(g) => past(g),
                Node::Since(a, b) => vals[b] || (vals[a] && past(id)),
            };
            vals.push(v);
        }
        let mut bits = vec![0u64; self.slots.div_ceil(64).max(1)];
        for (id, slot) in self.slot_of.iter().enumerate() {
            if let Some(s) = *slot {
                if vals[id] {
                    bits[s / 64] |= 1 << (s % 64);
                }
            }
        }
        bits.into_boxed_slice()
    }

    fn root(&self, bits: &[u64], i: usize) -> bool {
        Self::get(bits, self.slot_of[self.roots[i]].unwrap())
    }
}

fn check_vars(f: &Formula, events: &EventSet) -> Result<()> {
    match f.max_var() {
        Some(i) if i >= events.len() => Err(Error::UnknownEvent(format!("#{i}"))),
        _ => Ok(()),
    }
}

/// Explores the reachable subformula vectors. State 0 is the empty history.
fn explore(
    events: &EventSet,
    stepper: &Stepper,
    output: impl Fn(&[u64]) -> ThreeVal,
) -> MooreMachine {
    let width = events.atom_count();
    let mut states: Vec<Option<Bits>> = vec![None];
    let mut outputs = vec![ThreeVal::Undefined];
    let mut index: HashMap<Bits, usize> = HashMap::new();
    let mut transitions: Vec<u32> = Vec::new();
    let mut vals = Vec::with_capacity(stepper.dag.nodes.len());
    let mut q = 0;
    while q < states.len() {
        for atom in events.atoms() {
            let next = stepper.step(states[q].as_deref(), atom, &mut vals);
            let target = match index.get(&next) {
                Some(&t) => t,
                None => {
                    let t = states.len();
                    outputs.push(output(&next));
                    index.insert(next.clone(), t);
                    states.push(Some(next));
                    t
                }
            };
            transitions.push(target as u32);
        }
        q += 1;
    }
    debug_assert_eq!(transitions.len(), states.len() * width);
    MooreMachine::from_parts(events.clone(), transitions, outputs, 0)
}

/// The subformula-vector machine for `c` before minimization.
pub fn compile_unminimized(c: &CondPair, events: &EventSet) -> Result<MooreMachine> {
    check_vars(&c.consequent, events)?;
    check_vars(&c.antecedent, events)?;
    let stepper = Stepper::new(&[&c.consequent, &c.antecedent]);
    Ok(explore(events, &stepper, |bits| {
        ThreeVal::conditional(stepper.root(bits, 0), stepper.root(bits, 1))
    }))
}

/// Compiles a conditional into its minimal Moore machine.
pub fn compile(c: &CondPair, events: &EventSet) -> Result<MooreMachine> {
    Ok(minimize(&compile_unminimized(c, events)?))
}

/// Compiles a single formula into a minimal machine with outputs in `{0, 1}`.
pub fn compile_formula(f: &Formula, events: &EventSet) -> Result<MooreMachine> {
    check_vars(f, events)?;
    let stepper = Stepper::new(&[f]);
    Ok(minimize(&explore(events, &stepper, |bits| {
        stepper.root(bits, 0).into()
    })))
}
