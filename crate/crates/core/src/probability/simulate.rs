use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::CondEvent;
use crate::chains::to_f64;
use crate::logic::{Atom, ThreeVal};

/// Outcome counts of the `n`-th trace letter over sampled words.
#[derive(Debug, Clone, PartialEq)]
pub struct Simulation {
    pub n: usize,
    pub samples: usize,
    pub ones: usize,
    pub zeros: usize,
    pub undefined: usize,
    /// `#1 / (#1 + #0)`, absent without defined outcomes.
    pub estimate: Option<f64>,
    pub stderr: Option<f64>,
}

/// Draws `samples` words of length `n` with i.i.d. letters from the event's
/// distribution, using a ChaCha8 generator seeded with `seed`.
///
/// # Panics
/// If `n` or `samples` is zero.
pub fn simulate_pr_n(e: &CondEvent, n: usize, samples: usize, seed: u64) -> Simulation {
    assert!(n >= 1 && samples >= 1);
    let m = e.machine();
    let weights: Vec<f64> = e.dist().probs().iter().map(to_f64).collect();
    let letters = WeightedIndex::new(&weights).expect("a distribution has positive mass");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut ones, mut zeros, mut undefined) = (0, 0, 0);
    for _ in 0..samples {
        let mut q = m.initial();
        for _ in 0..n {
            q = m.step(q, Atom(letters.sample(&mut rng) as u32));
        }
        match m.output(q) {
            ThreeVal::True => ones += 1,
            ThreeVal::False => zeros += 1,
            ThreeVal::Undefined => undefined += 1,
        }
    }
    let defined = ones + zeros;
    let (estimate, stderr) = if defined == 0 {
        (None, None)
    } else {
        let p = ones as f64 / defined as f64;
        (Some(p), Some((p * (1.0 - p) / defined as f64).sqrt()))
    };
    Simulation {
        n,
        samples,
        ones,
        zeros,
        undefined,
        estimate,
        stderr,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::probability::fixtures::*;

    #[test]
    fn simple_conditional_near_half() {
        let e = event("(a | b)", "a b", &[q(1, 2), q(1, 2)]);
        let s = simulate_pr_n(&e, 10, 20_000, 7);
        let (p, se) = (s.estimate.unwrap(), s.stderr.unwrap());
        assert!((p - 0.5).abs() < 3.0 * se + 1e-9, "{p} ± {se}");
        assert_eq!(s, simulate_pr_n(&e, 10, 20_000, 7));
        assert_eq!(s.ones + s.zeros + s.undefined, 20_000);
    }

    #[test]
    fn never_defined_has_no_estimate() {
        let e = event("(a | false)", "a", &[q(1, 2)]);
        let s = simulate_pr_n(&e, 5, 100, 0);
        assert_eq!((s.undefined, s.estimate), (100, None));
    }

    #[test]
    fn odd_time_of_alternation_is_one() {
        let e = event(C1, "a", &[q(1, 2)]);
        let s = simulate_pr_n(&e, 7, 5_000, 3);
        assert_eq!(s.zeros, 0);
        assert!(s.ones > 0);
        assert_eq!(s.estimate, Some(1.0));
    }
}
