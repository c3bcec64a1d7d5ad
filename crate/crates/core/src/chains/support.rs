use std::collections::HashMap;

use num_traits::Zero;

use super::MarkovChain;
use crate::{Error, Result};

pub const DEFAULT_SUPPORT_CAP: usize = 1 << 20;

/// The eventually periodic sequence `R_n` of supports of the state
/// distribution at positions `n = 1, 2, …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSequence {
    /// Number of positions before the cycle starts.
    pub preperiod: usize,
    /// Sorted state sets, `cycle[k]` is `R_{preperiod + 1 + k}`.
    pub cycle: Vec<Vec<usize>>,
    /// `R_1 … R_preperiod`.
    pub prefix: Vec<Vec<usize>>,
}

impl SupportSequence {
    /// `R_n` for `n ≥ 1`.
    pub fn at(&self, n: usize) -> &[usize] {
        assert!(n >= 1);
        if n <= self.preperiod {
            &self.prefix[n - 1]
        } else {
            &self.cycle[(n - self.preperiod - 1) % self.cycle.len()]
        }
    }
}

type Set = Box<[u64]>;

fn to_states(set: &[u64]) -> Vec<usize> {
    (0..set.len() * 64)
        .filter(|&i| set[i / 64] >> (i % 64) & 1 == 1)
        .collect()
}

impl MarkovChain {
    /// Iterates `R_{n+1} = succ(R_n)` until a set repeats.
    pub fn support_sequence(&self, cap: usize) -> Result<SupportSequence> {
        let n = self.num_states();
        let words = n.div_ceil(64).max(1);
        let mut current: Set = vec![0u64; words].into_boxed_slice();
        for (i, p) in self.initial().iter().enumerate() {
            if !p.is_zero() {
                current[i / 64] |= 1 << (i % 64);
            }
        }
        let mut seen: HashMap<Set, usize> = HashMap::new();
        let mut history: Vec<Set> = Vec::new();
        loop {
            if let Some(&first) = seen.get(&current) {
                let states: Vec<Vec<usize>> = history.iter().map(|s| to_states(s)).collect();
                return Ok(SupportSequence {
                    preperiod: first,
                    prefix: states[..first].to_vec(),
                    cycle: states[first..].to_vec(),
                });
            }
            if history.len() >= cap {
                return Err(Error::SupportCapExceeded { cap });
            }
            let mut next: Set = vec![0u64; words].into_boxed_slice();
            for i in to_states(&current) {
                for &(j, _) in self.successors(i) {
                    next[j / 64] |= 1 << (j % 64);
                }
            }
            seen.insert(current.clone(), history.len());
            history.push(current);
            current = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::fixtures::ab_machine;
    use crate::chains::chain::tests::{into_absorbing, q, swap};
    use crate::chains::Dist;

    #[test]
    fn absorbing_chain_support() {
        let s = into_absorbing()
            .support_sequence(DEFAULT_SUPPORT_CAP)
            .unwrap();
        assert_eq!(s.preperiod, 1);
        assert_eq!(s.cycle, [vec![1]]);
        assert_eq!(s.at(1), [0]);
        assert_eq!(s.at(7), [1]);
    }

    #[test]
    fn mixing_chain_support_is_everything() {
        let m = ab_machine();
        let d = Dist::independent(m.events(), &[q(1, 3), q(1, 3)]).unwrap();
        let s = MarkovChain::induce(&m, &d)
            .unwrap()
            .support_sequence(DEFAULT_SUPPORT_CAP)
            .unwrap();
        assert_eq!(s.cycle, [vec![0, 1, 2]]);
    }

    #[test]
    fn periodic_support_cycles() {
        let s = swap().support_sequence(DEFAULT_SUPPORT_CAP).unwrap();
        assert_eq!(s.preperiod, 0);
        assert_eq!(s.cycle, [vec![0], vec![1]]);
        assert!(matches!(
            swap().support_sequence(1),
            Err(Error::SupportCapExceeded { cap: 1 })
        ));
    }
}
