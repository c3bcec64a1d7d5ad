use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{to_f64, Dist};
use crate::automata::MooreMachine;
use crate::logic::ThreeVal;
use crate::{Error, Rational, Result};

/// A finite Markov chain with exact rational transition probabilities and a
/// three-valued label on every state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovChain {
    matrix: Vec<Vec<Rational>>,
    initial: Vec<Rational>,
    outputs: Vec<ThreeVal>,
    /// positive entries of each row
    succ: Vec<Vec<(usize, Rational)>>,
}

impl MarkovChain {
    /// Validates that `matrix` is square and stochastic and `initial` is a
    /// distribution.
    pub fn new(
        matrix: Vec<Vec<Rational>>,
        initial: Vec<Rational>,
        outputs: Vec<ThreeVal>,
    ) -> Result<Self> {
        let n = matrix.len();
        if initial.len() != n || outputs.len() != n {
            return Err(Error::InvalidChain(format!(
                "{n} rows, {} initial entries, {} outputs",
                initial.len(),
                outputs.len()
            )));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidChain(format!(
                    "row {i} has {} entries",
                    row.len()
                )));
            }
            if row.iter().any(|p| *p < Rational::zero()) {
                return Err(Error::InvalidChain(format!("row {i} has a negative entry")));
            }
            let sum: Rational = row.iter().sum();
            if !sum.is_one() {
                return Err(Error::InvalidChain(format!("row {i} sums to {sum}")));
            }
        }
        if initial.iter().any(|p| *p < Rational::zero())
            || !initial.iter().sum::<Rational>().is_one()
        {
            return Err(Error::InvalidChain(
                "initial vector is not a distribution".into(),
            ));
        }
        let succ = matrix
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, p)| !p.is_zero())
                    .map(|(j, p)| (j, p.clone()))
                    .collect()
            })
            .collect();
        Ok(MarkovChain {
            matrix,
            initial,
            outputs,
            succ,
        })
    }

    /// `p(q, q') = Σ_{ω : δ(q, ω) = q'} Pr(ω)`, with the first letter folded
    /// into the initial vector.
    pub fn induce(m: &MooreMachine, d: &Dist) -> Result<Self> {
        if m.events() != d.events() {
            return Err(Error::EventMismatch(format!(
                "machine over `{}`, distribution over `{}`",
                m.events(),
                d.events()
            )));
        }
        let n = m.num_states();
        let mut matrix = vec![vec![Rational::zero(); n]; n];
        for (q, row) in matrix.iter_mut().enumerate() {
            for (atom, p) in d.support() {
                row[m.step(q, atom)] += p;
            }
        }
        let mut initial = vec![Rational::zero(); n];
        for (atom, p) in d.support() {
            initial[m.step(m.initial(), atom)] += p;
        }
        MarkovChain::new(matrix, initial, m.outputs().to_vec())
    }

    pub fn num_states(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn initial(&self) -> &[Rational] {
        &self.initial
    }

    pub fn outputs(&self) -> &[ThreeVal] {
        &self.outputs
    }

    /// Positive-probability successors of state `i`.
    pub fn successors(&self, i: usize) -> &[(usize, Rational)] {
        &self.succ[i]
    }

    /// One step: `v · Π`.
    pub fn advance(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); v.len()];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, p) in &self.succ[i] {
                out[*j] += vi * p;
            }
        }
        out
    }

    /// `Ξ₀ · Π^(n−1)`: the state distribution after `n ≥ 1` letters.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn n_step_distribution(&self, n: usize) -> Vec<Rational> {
        assert!(n >= 1, "positions start at 1");
        self.distributions().nth(n - 1).unwrap()
    }

    /// The exact distributions at positions 1, 2, 3, …
    pub fn distributions(&self) -> impl Iterator<Item = Vec<Rational>> + '_ {
        std::iter::successors(Some(self.initial.clone()), move |v| Some(self.advance(v)))
    }

    /// Floating-point version of [`MarkovChain::n_step_distribution`].
    pub fn n_step_f64(&self, n: usize) -> Vec<f64> {
        assert!(n >= 1, "positions start at 1");
        let succ: Vec<Vec<(usize, f64)>> = self
            .succ
            .iter()
            .map(|row| row.iter().map(|(j, p)| (*j, to_f64(p))).collect())
            .collect();
        let mut v: Vec<f64> = self.initial.iter().map(to_f64).collect();
        for _ in 1..n {
            let mut next = vec![0.0; v.len()];
            for (i, vi) in v.iter().enumerate() {
                for (j, p) in &succ[i] {
                    next[*j] += vi * p;
                }
            }
            v = next;
        }
        v
    }

    pub fn to_json_value(&self) -> ChainJson {
        ChainJson {
            states: self.num_states(),
            step_convention: "initial = distribution after the first letter".into(),
            matrix: self
                .matrix
                .iter()
                .map(|row| row.iter().map(ToString::to_string).collect())
                .collect(),
            initial: self.initial.iter().map(ToString::to_string).collect(),
            outputs: self.outputs.clone(),
        }
    }
}

/// JSON form of a chain; rationals as `p/q` strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainJson {
    pub states: usize,
    pub step_convention: String,
    pub matrix: Vec<Vec<String>>,
    pub initial: Vec<String>,
    pub outputs: Vec<ThreeVal>,
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::automata::fixtures::ab_machine;
    use crate::logic::EventSet;

    pub fn q(p: i64, r: i64) -> Rational {
        Rational::new(p.into(), r.into())
    }

    pub fn chain(rows: &[&[(i64, i64)]], initial: &[(i64, i64)]) -> MarkovChain {
        let n = rows.len();
        MarkovChain::new(
            rows.iter()
                .map(|r| r.iter().map(|&(p, s)| q(p, s)).collect())
                .collect(),
            initial.iter().map(|&(p, s)| q(p, s)).collect(),
            vec![ThreeVal::Undefined; n],
        )
        .unwrap()
    }

    /// 1 → 2 → 2, starting in 1.
    pub fn into_absorbing() -> MarkovChain {
        chain(&[&[(0, 1), (1, 1)], &[(0, 1), (1, 1)]], &[(1, 1), (0, 1)])
    }

    /// Two states exchanging mass deterministically.
    pub fn swap() -> MarkovChain {
        chain(&[&[(0, 1), (1, 1)], &[(1, 1), (0, 1)]], &[(1, 1), (0, 1)])
    }

    #[test]
    fn hand_built_chain_edge_weights() {
        let m = ab_machine();
        let e = m.events().clone();
        let d = Dist::independent(&e, &[q(1, 3), q(1, 4)]).unwrap();
        let x = MarkovChain::induce(&m, &d).unwrap();
        let (ba, ba_c, b_c) = (q(1, 12), q(2, 12), q(3, 4));
        for row in x.matrix() {
            // states: 0 = "1", 1 = "0", 2 = "⊥"
            assert_eq!(row, &[ba.clone(), ba_c.clone(), b_c.clone()]);
        }
        assert_eq!(x.initial(), &[ba.clone(), ba_c, b_c]);
        for n in 1..6 {
            assert_eq!(x.n_step_distribution(n)[0], ba);
        }
    }

    #[test]
    fn point_mass_gives_a_deterministic_matrix() {
        let m = ab_machine();
        let e = m.events().clone();
        let d = Dist::point(&e, e.atom(&["b"]).unwrap()).unwrap();
        let x = MarkovChain::induce(&m, &d).unwrap();
        for row in x.matrix() {
            assert!(row.iter().all(|p| p.is_zero() || p.is_one()));
        }
    }

    #[test]
    fn n_step_on_small_chains() {
        let x = into_absorbing();
        assert_eq!(x.n_step_distribution(1), x.initial());
        assert_eq!(x.n_step_distribution(3), [q(0, 1), q(1, 1)]);
        assert_eq!(x.n_step_f64(3), [0.0, 1.0]);
    }

    #[test]
    fn invalid_chains_are_rejected() {
        let bad = MarkovChain::new(
            vec![vec![q(1, 2), q(1, 3)], vec![q(0, 1), q(1, 1)]],
            vec![q(1, 1), q(0, 1)],
            vec![ThreeVal::Undefined; 2],
        );
        assert!(matches!(bad, Err(Error::InvalidChain(_))));
        let other = EventSet::parse("x").unwrap();
        assert!(MarkovChain::induce(&ab_machine(), &Dist::uniform(&other)).is_err());
    }
}
