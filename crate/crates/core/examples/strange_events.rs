//! Conditionals whose antecedent becomes improbable: strange and degenerate
//! events, and the periodic-pattern search behind their verdicts.

use condevents::prelude::*;
use condevents::probability::bayes_check;

fn main() -> condevents::Result<()> {
    let events = EventSet::parse("a")?;
    let alternating = "hist((Y a -> not a) and (Y not a -> a) and (not Y true -> a))";
    let cases = [
        format!("(a | {alternating})"),
        "(a | hist((Y a -> not a) and (Y not a -> a)))".to_string(),
        format!("({alternating} | {alternating})"),
        "(a | false)".to_string(),
    ];
    for p in ["1/2", "1/3"] {
        let dist = Dist::parse(&format!("a = {p}\n"), Some(&events))?;
        println!("Pr(a) = {p}");
        for text in &cases {
            let c = parse_conditional(text, &events)?;
            let e = CondEvent::new(c.clone(), dist.clone())?;
            let r = asymptotic_probability(&e, &HeuristicConfig::default())?;
            let first: Vec<String> = e.pr_n_table(6).iter().map(ToString::to_string).collect();
            println!(
                "  {text}\n    {} / {}  Pr_1..6 = {}",
                r.class,
                r.verdict,
                first.join(" ")
            );
            if let Some(res) = &r.residues {
                let values: Vec<String> = res
                    .values
                    .iter()
                    .enumerate()
                    .map(|(r, v)| match v {
                        Some(v) => format!("n≡{r}: {v}"),
                        None => format!("n≡{r}: undef"),
                    })
                    .collect();
                println!(
                    "    period {} from n = {}: {}",
                    res.period,
                    res.start,
                    values.join(", ")
                );
            }
            let b = bayes_check(&c, &dist)?;
            if b.rhs.is_none() {
                println!("    Pr(φ ∧ ψ) / Pr(ψ) is undefined");
            }
        }
    }
    Ok(())
}
