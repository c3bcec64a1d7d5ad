use num_traits::{One, Zero};

use super::linalg::solve;
use super::{MarkovChain, StateClassification};
use crate::{Rational, Result};

/// `lim Pr(X_n = i)` for every state, when it exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitVector {
    values: Option<Vec<Rational>>,
}

impl LimitVector {
    pub fn exists(&self) -> bool {
        self.values.is_some()
    }

    pub fn values(&self) -> Option<&[Rational]> {
        self.values.as_deref()
    }
}

impl MarkovChain {
    /// Stationary distribution of the irreducible class `states`.
    fn stationary(&self, states: &[usize]) -> Result<Vec<Rational>> {
        let k = states.len();
        let mut local = vec![usize::MAX; self.num_states()];
        for (i, &s) in states.iter().enumerate() {
            local[s] = i;
        }
        // rows: balance equations for all but the last state, then Σπ = 1
        let mut a = vec![vec![Rational::zero(); k]; k];
        for (i, &s) in states.iter().enumerate() {
            for (t, p) in self.successors(s) {
                let j = local[*t];
                if j + 1 < k {
                    a[j][i] += p;
                }
            }
            if i + 1 < k {
                a[i][i] -= Rational::one();
            }
            a[k - 1][i] = Rational::one();
        }
        let mut b = vec![vec![Rational::zero()]; k];
        b[k - 1][0] = Rational::one();
        Ok(solve(a, b)?
            .into_iter()
            .map(|mut r| r.pop().unwrap())
            .collect())
    }

    /// Probability of eventually entering each class from the initial vector
    /// (zero for transient classes). Solves `(I − Q) B = R` over the
    /// transient states.
    pub fn absorption_probabilities(&self, cls: &StateClassification) -> Result<Vec<Rational>> {
        let transient: Vec<usize> = (0..self.num_states())
            .filter(|&s| cls.is_transient(s))
            .collect();
        let ergodic: Vec<usize> = cls.ergodic().map(|(c, _)| c).collect();
        let mut column = vec![usize::MAX; cls.classes.len()];
        for (k, &c) in ergodic.iter().enumerate() {
            column[c] = k;
        }
        let mut result = vec![Rational::zero(); cls.classes.len()];
        for (s, p) in self.initial().iter().enumerate() {
            if !cls.is_transient(s) {
                result[cls.class_of[s]] += p;
            }
        }
        if transient.is_empty() {
            return Ok(result);
        }
        let mut pos = vec![usize::MAX; self.num_states()];
        for (i, &s) in transient.iter().enumerate() {
            pos[s] = i;
        }
        let t = transient.len();
        let mut a = vec![vec![Rational::zero(); t]; t];
        let mut r = vec![vec![Rational::zero(); ergodic.len()]; t];
        for (i, &s) in transient.iter().enumerate() {
            a[i][i] += Rational::one();
            for (target, p) in self.successors(s) {
                if cls.is_transient(*target) {
                    a[i][pos[*target]] -= p;
                } else {
                    r[i][column[cls.class_of[*target]]] += p;
                }
            }
        }
        let b = solve(a, r)?;
        for (i, &s) in transient.iter().enumerate() {
            let mass = &self.initial()[s];
            if mass.is_zero() {
                continue;
            }
            for (k, &c) in ergodic.iter().enumerate() {
                result[c] += mass * &b[i][k];
            }
        }
        Ok(result)
    }

    /// The limiting state distribution: for each recurrent class entered with
    /// positive probability, its stationary vector scaled by the absorption
    /// probability. Does not exist when such a class is periodic.
    pub fn limiting_distribution(&self) -> Result<LimitVector> {
        let cls = self.classify_states();
        let absorbed = self.absorption_probabilities(&cls)?;
        let mut values = vec![Rational::zero(); self.num_states()];
        for (c, class) in cls.ergodic() {
            if absorbed[c].is_zero() {
                continue;
            }
            if class.period != Some(1) {
                return Ok(LimitVector { values: None });
            }
            let pi = self.stationary(&class.states)?;
            for (s, p) in class.states.iter().zip(pi) {
                values[*s] = &absorbed[c] * p;
            }
        }
        Ok(LimitVector {
            values: Some(values),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::fixtures::four_state_swap;
    use crate::chains::chain::tests::{chain, into_absorbing, q, swap};
    use crate::chains::Dist;

    #[test]
    fn absorbing_chain_limit() {
        let l = into_absorbing().limiting_distribution().unwrap();
        assert_eq!(l.values().unwrap(), [q(0, 1), q(1, 1)]);
    }

    #[test]
    fn periodic_chain_has_no_limit() {
        assert!(!swap().limiting_distribution().unwrap().exists());
    }

    #[test]
    fn unreachable_periodic_class_does_not_matter() {
        // state 0 absorbing and initial; states 1,2 swap but are never entered
        let x = chain(
            &[
                &[(1, 1), (0, 1), (0, 1)],
                &[(0, 1), (0, 1), (1, 1)],
                &[(0, 1), (1, 1), (0, 1)],
            ],
            &[(1, 1), (0, 1), (0, 1)],
        );
        let l = x.limiting_distribution().unwrap();
        assert_eq!(l.values().unwrap(), [q(1, 1), q(0, 1), q(0, 1)]);
    }

    #[test]
    fn split_absorption_sums_to_one() {
        // 0 -> {1 w.p. 1/3, 2 w.p. 1/2, 0 w.p. 1/6}; 1, 2 absorbing
        let x = chain(
            &[
                &[(1, 6), (1, 3), (1, 2)],
                &[(0, 1), (1, 1), (0, 1)],
                &[(0, 1), (0, 1), (1, 1)],
            ],
            &[(1, 1), (0, 1), (0, 1)],
        );
        let cls = x.classify_states();
        let a = x.absorption_probabilities(&cls).unwrap();
        assert_eq!(a.iter().sum::<Rational>(), q(1, 1));
        let l = x.limiting_distribution().unwrap();
        assert_eq!(l.values().unwrap(), [q(0, 1), q(2, 5), q(3, 5)]);
    }

    #[test]
    fn swapping_automaton_still_has_a_limit() {
        let m = four_state_swap();
        for p in [q(1, 4), q(1, 2), q(3, 4)] {
            let d = Dist::independent(m.events(), &[p]).unwrap();
            let x = MarkovChain::induce(&m, &d).unwrap();
            let cls = x.classify_states();
            assert!(cls.ergodic().all(|(_, c)| c.period == Some(1)));
            let l = x.limiting_distribution().unwrap();
            assert_eq!(l.values().unwrap().iter().sum::<Rational>(), q(1, 1));
        }
    }
}
