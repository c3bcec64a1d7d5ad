use super::{asymptotic_probability, pr_of_formula, AsymptoticResult, CondEvent, HeuristicConfig};
use crate::chains::Dist;
use crate::logic::{CondPair, Formula};
use crate::{Rational, Result};
use num_traits::Zero;

/// `Pr((φ|ψ))` next to `Pr(φ ∧ ψ) / Pr(ψ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BayesReport {
    pub lhs: AsymptoticResult,
    /// `None` when `Pr(ψ) = 0`.
    pub rhs: Option<Rational>,
    /// `None` unless both sides are values.
    pub equal: Option<bool>,
}

pub fn bayes_check(c: &CondPair, d: &Dist) -> Result<BayesReport> {
    let event = CondEvent::new(c.clone(), d.clone())?;
    let lhs = asymptotic_probability(&event, &HeuristicConfig::default())?;
    let both = Formula::and(c.consequent.clone(), c.antecedent.clone());
    let num = pr_of_formula(&both, d)?;
    let den = pr_of_formula(&c.antecedent, d)?;
    let rhs = match (num.value(), den.value()) {
        (Some(n), Some(d)) if !d.is_zero() => Some(n / d),
        _ => None,
    };
    let equal = match (lhs.value(), &rhs) {
        (Some(l), Some(r)) => Some(l == r),
        _ => None,
    };
    Ok(BayesReport { lhs, rhs, equal })
}
