use std::collections::HashMap;

use super::{MooreMachine, TruthTable3};
use crate::{Error, Result};

/// Synchronous product whose output combines the component outputs through
/// `table`. Only the reachable part of `Q₁ × Q₂` is built.
pub fn product_with_table(
    table: &TruthTable3,
    m1: &MooreMachine,
    m2: &MooreMachine,
) -> Result<MooreMachine> {
    if m1.events() != m2.events() {
        return Err(Error::EventMismatch(format!(
            "`{}` vs `{}`",
            m1.events(),
            m2.events()
        )));
    }
    let start = (m1.initial(), m2.initial());
    let mut pairs = vec![start];
    let mut index = HashMap::from([(start, 0usize)]);
    let mut transitions = Vec::new();
    let mut outputs = Vec::new();
    let mut i = 0;
    while i < pairs.len() {
        let (p, q) = pairs[i];
        outputs.push(table.apply(m1.output(p), m2.output(q)));
        for atom in m1.events().atoms() {
            let next = (m1.step(p, atom), m2.step(q, atom));
            let id = *index.entry(next).or_insert_with(|| {
                pairs.push(next);
                pairs.len() - 1
            });
            transitions.push(id as u32);
        }
        i += 1;
    }
    Ok(MooreMachine::from_parts(
        m1.events().clone(),
        transitions,
        outputs,
        0,
    ))
}
