//! Counter-freeness via aperiodicity of the transition monoid.

use std::collections::HashSet;

use super::MooreMachine;
use crate::{Error, Result};

pub const DEFAULT_MONOID_CAP: usize = 1_000_000;

type Transformation = Box<[u32]>;

/// `t` followed by `g`.
fn then(t: &[u32], g: &[u32]) -> Transformation {
    t.iter().map(|&q| g[q as usize]).collect()
}

/// Whether `t^k = t^(k+1)` for some `k ≤ n`, `n` the number of states.
fn is_aperiodic(t: &[u32]) -> bool {
    let mut power: Transformation = t.into();
    for _ in 0..=t.len() {
        let next = then(&power, t);
        if next == power {
            return true;
        }
        power = next;
    }
    false
}

fn generators(m: &MooreMachine) -> Vec<Transformation> {
    let n = m.num_states();
    let mut gens: Vec<Transformation> = m
        .events()
        .atoms()
        .map(|a| (0..n).map(|q| m.step(q, a) as u32).collect())
        .collect();
    gens.sort();
    gens.dedup();
    gens
}

/// Closes the letter transformations under composition, calling `visit` on
/// each new element; stops early when `visit` returns false.
fn close(
    m: &MooreMachine,
    cap: usize,
    mut visit: impl FnMut(&[u32]) -> bool,
) -> Result<(usize, bool)> {
    let gens = generators(m);
    let mut seen: HashSet<Transformation> = HashSet::new();
    let mut queue: Vec<Transformation> = Vec::new();
    for g in &gens {
        if seen.insert(g.clone()) {
            if !visit(g) {
                return Ok((seen.len(), false));
            }
            queue.push(g.clone());
        }
    }
    let mut i = 0;
    while i < queue.len() {
        let t = queue[i].clone();
        i += 1;
        for g in &gens {
            let u = then(&t, g);
            if !seen.contains(&u) {
                if seen.len() >= cap {
                    return Err(Error::MonoidTooLarge { cap });
                }
                if !visit(&u) {
                    return Ok((seen.len() + 1, false));
                }
                seen.insert(u.clone());
                queue.push(u);
            }
        }
    }
    Ok((seen.len(), true))
}

/// True iff no nonempty word permutes two or more states cyclically, i.e.
/// every element of the transition monoid is aperiodic.
pub fn is_counter_free(m: &MooreMachine, cap: usize) -> Result<bool> {
    close(m, cap, is_aperiodic).map(|(_, ok)| ok)
}

/// Number of transformations induced by nonempty words.
pub fn transition_monoid_size(m: &MooreMachine, cap: usize) -> Result<usize> {
    close(m, cap, |_| true).map(|(n, _)| n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::fixtures::{ab_machine, four_state_swap};
    use crate::automata::{compile, MooreMachine};
    use crate::logic::{parse_conditional, EventSet, ThreeVal};

    #[test]
    fn present_tense_machine_is_counter_free() {
        assert!(is_counter_free(&ab_machine(), DEFAULT_MONOID_CAP).unwrap());
        let e = EventSet::parse("a b").unwrap();
        let m = compile(&parse_conditional("(a | b)", &e).unwrap(), &e).unwrap();
        assert!(is_counter_free(&m, DEFAULT_MONOID_CAP).unwrap());
    }

    #[test]
    fn swapping_automaton_has_a_counter() {
        let m = four_state_swap();
        assert!(!is_counter_free(&m, DEFAULT_MONOID_CAP).unwrap());
        // a·a∁ maps 2 -> 3 and 3 -> 2 (indices 1 and 2 here)
        let w = m.events().parse_word("{a} {}").unwrap();
        let from = |q: usize| w.iter().fold(q, |q, &a| m.step(q, a));
        assert_eq!(from(1), 2);
        assert_eq!(from(2), 1);
    }

    #[test]
    fn single_state_is_counter_free() {
        let e = EventSet::parse("a").unwrap();
        let m = MooreMachine::new(e, vec![vec![0, 0]], vec![ThreeVal::True], 0).unwrap();
        assert!(is_counter_free(&m, DEFAULT_MONOID_CAP).unwrap());
        assert_eq!(transition_monoid_size(&m, 10).unwrap(), 1);
    }

    #[test]
    fn parity_counter_is_detected() {
        let e = EventSet::parse("a").unwrap();
        let m = MooreMachine::new(
            e,
            vec![vec![0, 1], vec![1, 0]],
            vec![ThreeVal::False, ThreeVal::True],
            0,
        )
        .unwrap();
        assert!(!is_counter_free(&m, DEFAULT_MONOID_CAP).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let m = four_state_swap();
        assert!(matches!(
            transition_monoid_size(&m, 2),
            Err(Error::MonoidTooLarge { cap: 2 })
        ));
    }
}
