use std::fmt;

use super::classify::analyse;
use super::{CondEvent, EventClass, PrnValue};
use crate::chains::Dist;
use crate::logic::{CondPair, Formula};
use crate::{Rational, Result};

/// Bounds for the exact periodic-pattern search used on events that are not
/// regular.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeuristicConfig {
    /// Number of exact `Pr_n` values computed.
    pub window: usize,
    pub max_period: usize,
    pub max_preperiod: usize,
}

impl Default for HeuristicConfig {
    fn default() -> Self {
        HeuristicConfig {
            window: 256,
            max_period: 64,
            max_preperiod: 128,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Value(Rational),
    /// Residue classes converge to different values.
    NoLimit,
    Undetermined(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Value(q) => write!(f, "Value {q}"),
            Verdict::NoLimit => f.write_str("NoLimit"),
            Verdict::Undetermined(note) => write!(f, "Undetermined ({note})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    BayesLimit,
    StrangeHeuristic,
    None,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::BayesLimit => "bayes-limit",
            Method::StrangeHeuristic => "strange-heuristic",
            Method::None => "none",
        })
    }
}

/// `Pr_n` depends only on `n mod period` for `n ≥ start`; `values[r]` is the
/// common value at `n ≡ r`, `None` when no such `n` in the window is defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueLimits {
    pub period: usize,
    pub start: usize,
    pub values: Vec<Option<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticResult {
    pub class: EventClass,
    pub verdict: Verdict,
    pub method: Method,
    pub residues: Option<ResidueLimits>,
}

impl AsymptoticResult {
    pub fn value(&self) -> Option<&Rational> {
        match &self.verdict {
            Verdict::Value(q) => Some(q),
            _ => None,
        }
    }
}

/// Smallest period, then smallest start, for which the defined values of
/// `table` (where `table[i]` is `Pr_{i+1}`) repeat exactly.
fn find_pattern(table: &[PrnValue], cfg: &HeuristicConfig) -> Option<ResidueLimits> {
    let n_max = table.len();
    for period in 1..=cfg.max_period {
        'start: for start in 1..=cfg.max_preperiod {
            if start + 2 * period > n_max {
                break;
            }
            let mut values: Vec<Option<&Rational>> = vec![None; period];
            for n in start..=n_max {
                if let PrnValue::Value(v) = &table[n - 1] {
                    let slot = &mut values[n % period];
                    match slot {
                        Some(w) if *w != v => continue 'start,
                        Some(_) => {}
                        None => *slot = Some(v),
                    }
                }
            }
            return Some(ResidueLimits {
                period,
                start,
                values: values.into_iter().map(|v| v.cloned()).collect(),
            });
        }
    }
    None
}

fn heuristic(table: &[PrnValue], cfg: &HeuristicConfig) -> (Verdict, Option<ResidueLimits>) {
    let Some(pattern) = find_pattern(table, cfg) else {
        return (
            Verdict::Undetermined(format!(
                "no period ≤ {} with start ≤ {} in the first {} values",
                cfg.max_period, cfg.max_preperiod, cfg.window
            )),
            None,
        );
    };
    let mut defined = pattern.values.iter().flatten();
    let verdict = match defined.next() {
        None => Verdict::Undetermined("no defined values in the window".into()),
        Some(first) => {
            if defined.all(|v| v == first) {
                Verdict::Value(first.clone())
            } else {
                Verdict::NoLimit
            }
        }
    };
    (verdict, Some(pattern))
}

/// `lim Pr_n`: exact for regular events, otherwise a bounded search for an
/// eventually periodic pattern in the exact values.
pub fn asymptotic_probability(e: &CondEvent, cfg: &HeuristicConfig) -> Result<AsymptoticResult> {
    let (class, limit) = analyse(e)?;
    Ok(match class {
        EventClass::Regular => {
            let limit = limit.expect("regular events carry their limit");
            let PrnValue::Value(v) = PrnValue::from_dist(&limit, e.chain().outputs()) else {
                unreachable!("regular events have positive defined mass")
            };
            AsymptoticResult {
                class,
                verdict: Verdict::Value(v),
                method: Method::BayesLimit,
                residues: None,
            }
        }
        EventClass::StrictlyDegenerate => AsymptoticResult {
            class,
            verdict: Verdict::Undetermined("undefined cofinitely".into()),
            method: Method::None,
            residues: None,
        },
        EventClass::Strange | EventClass::Degenerate => {
            let table = e.pr_n_table(cfg.window);
            let (verdict, residues) = heuristic(&table, cfg);
            AsymptoticResult {
                class,
                verdict,
                method: Method::StrangeHeuristic,
                residues,
            }
        }
    })
}

/// `Pr(φ)`, the asymptotic probability of `(φ | true)`.
pub fn pr_of_formula(f: &Formula, d: &Dist) -> Result<AsymptoticResult> {
    let e = CondEvent::new(CondPair::unconditional(f.clone()), d.clone())?;
    asymptotic_probability(&e, &HeuristicConfig::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{parse_formula, EventSet};
    use crate::probability::fixtures::*;

    fn run(text: &str, events: &str, marginals: &[Rational]) -> AsymptoticResult {
        asymptotic_probability(&event(text, events, marginals), &HeuristicConfig::default())
            .unwrap()
    }

    #[test]
    fn simple_conditional_follows_bayes() {
        let r = run("(a | b)", "a b", &[q(1, 3), q(1, 2)]);
        assert_eq!(r.value(), Some(&q(1, 3)));
        assert_eq!(r.method, Method::BayesLimit);
        assert_eq!(r.class, EventClass::Regular);
    }

    #[test]
    fn alternating_fixture_has_no_limit() {
        let r = run(C1, "a", &[q(1, 2)]);
        assert_eq!(r.verdict, Verdict::NoLimit);
        let res = r.residues.unwrap();
        assert_eq!(res.period, 2);
        assert_eq!(res.values, [Some(q(0, 1)), Some(q(1, 1))]);
    }

    #[test]
    fn free_start_alternation() {
        let r = run(C2, "a", &[q(1, 2)]);
        assert_eq!(r.value(), Some(&q(1, 2)));
        assert_eq!(r.method, Method::StrangeHeuristic);
        let r = run(C2, "a", &[q(1, 3)]);
        assert_eq!(r.verdict, Verdict::NoLimit);
        assert_eq!(r.residues.unwrap().values, [Some(q(1, 2)), Some(q(1, 3))]);
    }

    #[test]
    fn self_conditional_is_one() {
        let pair = format!("({ALTERNATING} | {ALTERNATING})");
        let r = run(&pair, "a", &[q(1, 3)]);
        assert_eq!(r.class, EventClass::Strange);
        assert_eq!(r.value(), Some(&q(1, 1)));
    }

    #[test]
    fn never_defined() {
        let r = run("(a | false)", "a", &[q(1, 3)]);
        assert_eq!(
            r.verdict,
            Verdict::Undetermined("undefined cofinitely".into())
        );
    }

    #[test]
    fn formulas() {
        let e = EventSet::parse("a").unwrap();
        let d = Dist::independent(&e, &[q(1, 3)]).unwrap();
        let pr = |t: &str| pr_of_formula(&parse_formula(t, &e).unwrap(), &d).unwrap();
        assert_eq!(pr("a").value(), Some(&q(1, 3)));
        assert_eq!(pr("once a").value(), Some(&q(1, 1)));
        assert_eq!(pr("false").value(), Some(&q(0, 1)));
        assert_eq!(pr("Y a and not a").value(), Some(&q(2, 9)));
    }

    #[test]
    fn pattern_search_skips_undefined() {
        use PrnValue::*;
        let cfg = HeuristicConfig {
            window: 12,
            max_period: 4,
            max_preperiod: 4,
        };
        let mut table = vec![Value(q(1, 7))];
        for n in 2..=12 {
            table.push(if n % 3 == 0 {
                Undefined
            } else {
                Value(q(1, 2))
            });
        }
        let (v, res) = heuristic(&table, &cfg);
        assert_eq!(v, Verdict::Value(q(1, 2)));
        let res = res.unwrap();
        assert_eq!((res.period, res.start), (1, 2));
        let chaotic: Vec<_> = (1..=12).map(|n| Value(q(1, n))).collect();
        assert!(matches!(
            heuristic(&chaotic, &cfg).0,
            Verdict::Undetermined(_)
        ));
    }
}
