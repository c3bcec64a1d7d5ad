use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::MooreMachine;
use crate::logic::{EventSet, ThreeVal};
use crate::{Error, Result};

/// JSON form of a machine: one transition record per (state, atom).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MachineJson {
    pub events: Vec<String>,
    pub states: Vec<StateJson>,
    pub initial: usize,
    pub transitions: Vec<TransitionJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateJson {
    pub id: usize,
    pub output: ThreeVal,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransitionJson {
    pub from: usize,
    /// Names of the events true in the atom, sorted.
    pub atom: Vec<String>,
    pub to: usize,
}

impl MooreMachine {
    pub fn to_json_value(&self) -> MachineJson {
        let e = self.events();
        MachineJson {
            events: e.names().to_vec(),
            states: (0..self.num_states())
                .map(|id| StateJson {
                    id,
                    output: self.output(id),
                })
                .collect(),
            initial: self.initial(),
            transitions: (0..self.num_states())
                .flat_map(|q| {
                    e.atoms().map(move |a| TransitionJson {
                        from: q,
                        atom: e.members(a).into_iter().map(String::from).collect(),
                        to: self.step(q, a),
                    })
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("machine serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: MachineJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidMachine(e.to_string()))?;
        MooreMachine::try_from(j)
    }

    /// Graphviz rendering; parallel transitions share one edge labelled with
    /// their atoms.
    pub fn to_dot(&self) -> String {
        let e = self.events();
        let mut out = String::from("digraph moore {\n  rankdir=LR;\n  start [shape=point];\n");
        for q in 0..self.num_states() {
            let _ = writeln!(out, "  q{q} [shape=circle, label=\"{}\"];", self.output(q));
        }
        let _ = writeln!(out, "  start -> q{};", self.initial());
        for q in 0..self.num_states() {
            let mut edges: BTreeMap<usize, Vec<String>> = BTreeMap::new();
            for a in e.atoms() {
                edges
                    .entry(self.step(q, a))
                    .or_default()
                    .push(e.show_atom(a));
            }
            for (t, atoms) in edges {
                let _ = writeln!(out, "  q{q} -> q{t} [label=\"{}\"];", atoms.join(" "));
            }
        }
        out.push_str("}\n");
        out
    }
}

impl TryFrom<MachineJson> for MooreMachine {
    type Error = Error;

    fn try_from(j: MachineJson) -> Result<Self> {
        let events = EventSet::new(j.events)?;
        let n = j.states.len();
        let mut outputs = vec![ThreeVal::Undefined; n];
        for s in &j.states {
            *outputs.get_mut(s.id).ok_or_else(|| {
                Error::InvalidMachine(format!("state id {} out of range", s.id))
            })? = s.output;
        }
        let mut rows = vec![vec![usize::MAX; events.atom_count()]; n];
        for t in &j.transitions {
            let names: Vec<&str> = t.atom.iter().map(String::as_str).collect();
            let atom = events.atom(&names)?;
            let row = rows
                .get_mut(t.from)
                .ok_or_else(|| Error::InvalidMachine(format!("state {} out of range", t.from)))?;
            row[atom.index()] = t.to;
        }
        if rows.iter().flatten().any(|&t| t == usize::MAX) {
            return Err(Error::InvalidMachine(
                "transition table is not total".into(),
            ));
        }
        MooreMachine::new(events, rows, outputs, j.initial)
    }
}
