use num_integer::Integer;

use super::MarkovChain;

/// A communication class of the chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommClass {
    pub states: Vec<usize>,
    /// Bottom class of the communication order (no positive edge leaves it).
    pub ergodic: bool,
    /// gcd of cycle lengths inside the class; `None` for transient classes.
    pub period: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateClassification {
    pub classes: Vec<CommClass>,
    pub class_of: Vec<usize>,
}

impl StateClassification {
    pub fn ergodic(&self) -> impl Iterator<Item = (usize, &CommClass)> {
        self.classes.iter().enumerate().filter(|(_, c)| c.ergodic)
    }

    pub fn is_transient(&self, state: usize) -> bool {
        !self.classes[self.class_of[state]].ergodic
    }
}

/// Tarjan's algorithm over positive-probability edges, iteratively.
fn strongly_connected(x: &MarkovChain) -> Vec<Vec<usize>> {
    let n = x.num_states();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut sccs = Vec::new();
    let mut counter = 0;
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut next)) = call.last_mut() {
            if let Some(&(w, _)) = x.successors(v).get(*next) {
                *next += 1;
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    sccs.push(comp);
                }
            }
        }
    }
    sccs
}

/// Period by BFS layering: gcd of `depth(u) + 1 − depth(v)` over class edges.
fn period(x: &MarkovChain, states: &[usize], class_of: &[usize], class: usize) -> usize {
    let mut depth = vec![usize::MAX; x.num_states()];
    let start = states[0];
    depth[start] = 0;
    let mut queue = std::collections::VecDeque::from([start]);
    let mut g = 0usize;
    while let Some(u) = queue.pop_front() {
        for &(v, _) in x.successors(u) {
            if class_of[v] != class {
                continue;
            }
            if depth[v] == usize::MAX {
                depth[v] = depth[u] + 1;
                queue.push_back(v);
            } else {
                g = g.gcd(&(depth[u] + 1).abs_diff(depth[v]));
            }
        }
    }
    g
}

impl MarkovChain {
    /// Communication classes, ergodic/transient status and periods, using
    /// positive-probability edges only.
    pub fn classify_states(&self) -> StateClassification {
        let sccs = strongly_connected(self);
        let mut class_of = vec![0; self.num_states()];
        for (c, comp) in sccs.iter().enumerate() {
            for &s in comp {
                class_of[s] = c;
            }
        }
        let classes = sccs
            .iter()
            .enumerate()
            .map(|(c, comp)| {
                let ergodic = comp
                    .iter()
                    .all(|&s| self.successors(s).iter().all(|&(t, _)| class_of[t] == c));
                CommClass {
                    states: comp.clone(),
                    ergodic,
                    period: ergodic.then(|| period(self, comp, &class_of, c)),
                }
            })
            .collect();
        StateClassification { classes, class_of }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::fixtures::ab_machine;
    use crate::chains::chain::tests::{q, swap};
    use crate::chains::Dist;

    #[test]
    fn fully_mixing_chain_is_one_aperiodic_class() {
        let m = ab_machine();
        let d = Dist::independent(m.events(), &[q(1, 2), q(1, 2)]).unwrap();
        let c = MarkovChain::induce(&m, &d).unwrap().classify_states();
        assert_eq!(c.classes.len(), 1);
        assert!(c.classes[0].ergodic);
        assert_eq!(c.classes[0].period, Some(1));
    }

    #[test]
    fn certain_antecedent_leaves_undefined_state_transient() {
        let m = ab_machine();
        let d = Dist::independent(m.events(), &[q(1, 2), q(1, 1)]).unwrap();
        let c = MarkovChain::induce(&m, &d).unwrap().classify_states();
        // states: 0 = "1", 1 = "0", 2 = "⊥"
        assert!(c.is_transient(2));
        let (_, erg) = c.ergodic().next().unwrap();
        assert_eq!(erg.states, [0, 1]);
        assert_eq!(erg.period, Some(1));
        assert_eq!(c.ergodic().count(), 1);
    }

    #[test]
    fn swap_has_period_two() {
        let c = swap().classify_states();
        assert_eq!(c.classes.len(), 1);
        assert_eq!(c.classes[0].period, Some(2));
    }

    #[test]
    fn long_path_is_one_class_per_state() {
        let n = 1_500;
        let mut rows = vec![vec![Rational::from_integer(0.into()); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[(i + 1).min(n - 1)] = Rational::from_integer(1.into());
        }
        let mut init = vec![Rational::from_integer(0.into()); n];
        init[0] = Rational::from_integer(1.into());
        let x = MarkovChain::new(rows, init, vec![crate::logic::ThreeVal::True; n]).unwrap();
        let c = x.classify_states();
        assert_eq!(c.classes.len(), n);
        assert_eq!(c.ergodic().count(), 1);
    }

    use crate::Rational;
}
