use std::collections::HashMap;

use super::MooreMachine;
use crate::logic::ThreeVal;

/// Moore partition refinement restricted to `states`, which must be closed
/// under transitions. Returns the class of every listed state.
fn refine(m: &MooreMachine, states: &[usize]) -> HashMap<usize, usize> {
    let mut class: HashMap<usize, usize> =
        states.iter().map(|&q| (q, m.output(q).index())).collect();
    let mut count = usize::MAX;
    loop {
        let mut sigs: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut next = HashMap::with_capacity(states.len());
        for &q in states {
            let mut sig = Vec::with_capacity(m.row(q).len() + 1);
            sig.push(class[&q]);
            sig.extend(m.row(q).iter().map(|&t| class[&(t as usize)]));
            let n = sigs.len();
            next.insert(q, *sigs.entry(sig).or_insert(n));
        }
        class = next;
        if sigs.len() == count {
            return class;
        }
        count = sigs.len();
    }
}

/// Returns the trace-equivalent machine with the fewest states.
///
/// Outputs are only ever read after a letter has been consumed, so when the
/// initial state has no incoming transition its own output is unobservable:
/// it is then merged into any class with the same successors (preferring a
/// `⊥` class), and kept apart otherwise. States are renumbered in BFS order
/// from the initial state, atoms in bitmask order.
pub fn minimize(m: &MooreMachine) -> MooreMachine {
    let reach = m.reachable();
    let q0 = m.initial();
    let entered = reach
        .iter()
        .any(|&q| m.row(q).iter().any(|&t| t as usize == q0));

    let (mut class, rest): (HashMap<usize, usize>, Vec<usize>) = if entered {
        (refine(m, &reach), reach.clone())
    } else {
        let rest: Vec<usize> = reach.iter().copied().filter(|&q| q != q0).collect();
        (refine(m, &rest), rest)
    };

    if !entered {
        let row_of = |q: usize, class: &HashMap<usize, usize>| -> Vec<usize> {
            m.row(q).iter().map(|&t| class[&(t as usize)]).collect()
        };
        let init_row = row_of(q0, &class);
        // one representative per class, in first-seen order
        let mut reps: Vec<usize> = Vec::new();
        let mut seen = HashMap::new();
        for &q in &rest {
            if seen.insert(class[&q], q).is_none() {
                reps.push(q);
            }
        }
        let matching: Vec<usize> = reps
            .into_iter()
            .filter(|&q| row_of(q, &class) == init_row)
            .collect();
        let chosen = matching
            .iter()
            .copied()
            .find(|&q| m.output(q) == ThreeVal::Undefined)
            .or_else(|| matching.first().copied());
        let c = match chosen {
            Some(q) => class[&q],
            None => class.values().max().map_or(0, |&c| c + 1),
        };
        class.insert(q0, c);
    }

    // BFS renumbering over classes
    let width = m.events().atom_count();
    let mut rep_of_class: HashMap<usize, usize> = HashMap::new();
    for &q in reach.iter() {
        rep_of_class.entry(class[&q]).or_insert(q);
    }
    // the initial class is represented by a state with observable output when merged
    if let Some(&q) = rest.iter().find(|&&q| class[&q] == class[&q0]) {
        rep_of_class.insert(class[&q0], q);
    }
    let mut number: HashMap<usize, usize> = HashMap::new();
    let mut order = vec![class[&q0]];
    number.insert(class[&q0], 0);
    let mut transitions = Vec::with_capacity(rep_of_class.len() * width);
    let mut outputs = Vec::with_capacity(rep_of_class.len());
    let mut i = 0;
    while i < order.len() {
        let rep = rep_of_class[&order[i]];
        outputs.push(m.output(rep));
        for &t in m.row(rep) {
            let c = class[&(t as usize)];
            let id = *number.entry(c).or_insert_with(|| {
                order.push(c);
                order.len() - 1
            });
            transitions.push(id as u32);
        }
        i += 1;
    }
    MooreMachine::from_parts(m.events().clone(), transitions, outputs, 0)
}
