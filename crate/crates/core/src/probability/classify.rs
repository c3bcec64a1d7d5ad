use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::CondEvent;
use crate::chains::DEFAULT_SUPPORT_CAP;
use crate::logic::ThreeVal;
use crate::{Error, Rational, Result};

/// Asymptotic behaviour of the probability of being defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EventClass {
    /// Defined with probability bounded away from zero in the limit.
    Regular,
    /// Vanishing probability of being defined, yet possibly defined at every
    /// time.
    Strange,
    /// Undefined with certainty at infinitely many, but not almost all, times.
    Degenerate,
    /// Undefined with certainty at all but finitely many times.
    StrictlyDegenerate,
}

impl fmt::Display for EventClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EventClass::Regular => "Regular",
            EventClass::Strange => "Strange",
            EventClass::Degenerate => "Degenerate",
            EventClass::StrictlyDegenerate => "StrictlyDegenerate",
        })
    }
}

/// Classification together with the limiting distribution it was based on.
pub(crate) fn analyse(e: &CondEvent) -> Result<(EventClass, Option<Vec<Rational>>)> {
    let chain = e.chain();
    let limit = chain.limiting_distribution()?;
    let limit = limit
        .values()
        .ok_or(Error::NoLimitingDistribution)?
        .to_vec();
    let outputs = chain.outputs();
    let defined: Rational = limit
        .iter()
        .zip(outputs)
        .filter(|(_, h)| h.is_defined())
        .map(|(p, _)| p)
        .sum();
    if !defined.is_zero() {
        return Ok((EventClass::Regular, Some(limit)));
    }
    let support = chain.support_sequence(DEFAULT_SUPPORT_CAP)?;
    let blank = support
        .cycle
        .iter()
        .filter(|states| states.iter().all(|&s| outputs[s] == ThreeVal::Undefined))
        .count();
    let class = if blank == support.cycle.len() {
        EventClass::StrictlyDegenerate
    } else if blank > 0 {
        EventClass::Degenerate
    } else {
        EventClass::Strange
    };
    Ok((class, None))
}

pub fn classify_event(e: &CondEvent) -> Result<EventClass> {
    analyse(e).map(|(c, _)| c)
}
