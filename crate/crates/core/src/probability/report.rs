use serde::Serialize;

use super::{asymptotic_probability, bayes_check, CondEvent, EventClass, HeuristicConfig, Verdict};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AsymptoticJson {
    pub verdict: String,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub period: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub start: Option<usize>,
    /// Indexed by `n mod period`; `"undef"` for residues never defined.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residues: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BayesJson {
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub equal: Option<bool>,
}

/// Everything the `prob` command prints, in machine-readable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EventReport {
    pub formula: String,
    pub dist_digest: String,
    pub class: EventClass,
    pub asymptotic: AsymptoticJson,
    pub pr_n_table: Vec<(usize, String)>,
    /// Only for events built from a formula.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bayes: Option<BayesJson>,
}

pub fn event_report(e: &CondEvent, cfg: &HeuristicConfig, table_n: usize) -> Result<EventReport> {
    let result = asymptotic_probability(e, cfg)?;
    let (verdict, note) = match &result.verdict {
        Verdict::Value(_) => ("Value", None),
        Verdict::NoLimit => ("NoLimit", None),
        Verdict::Undetermined(n) => ("Undetermined", Some(n.clone())),
    };
    let residues = result.residues.as_ref();
    let asymptotic = AsymptoticJson {
        verdict: verdict.into(),
        method: result.method.to_string(),
        value: result.value().map(ToString::to_string),
        note,
        period: residues.map(|r| r.period),
        start: residues.map(|r| r.start),
        residues: residues.map(|r| {
            r.values
                .iter()
                .map(|v| v.as_ref().map_or("undef".into(), ToString::to_string))
                .collect()
        }),
    };
    let bayes = match e.source() {
        Some(pair) => {
            let b = bayes_check(pair, e.dist())?;
            Some(BayesJson {
                lhs: b.lhs.value().map(ToString::to_string),
                rhs: b.rhs.as_ref().map(ToString::to_string),
                equal: b.equal,
            })
        }
        None => None,
    };
    Ok(EventReport {
        formula: e.describe(),
        dist_digest: e.dist().digest(),
        class: result.class,
        asymptotic,
        pr_n_table: e
            .pr_n_table(table_n)
            .iter()
            .enumerate()
            .map(|(i, v)| (i + 1, v.to_string()))
            .collect(),
        bayes,
    })
}
