//! Sampling words and reading the n-th letter of the trace, next to the exact
//! value.

use condevents::prelude::*;

fn main() -> condevents::Result<()> {
    let events = EventSet::parse("a b")?;
    let dist = Dist::parse("a = 1/2\nb = 1/3\n", Some(&events))?;
    for text in ["(a | b)", "(a | Y b and not b)", "(once a | b)"] {
        let e = CondEvent::new(parse_conditional(text, &events)?, dist.clone())?;
        for n in [1, 5, 20] {
            let s = simulate_pr_n(&e, n, 50_000, 42);
            let exact = e.pr_n(n).to_string();
            match (s.estimate, s.stderr) {
                (Some(p), Some(se)) => {
                    println!("{text:<22} n={n:<3} exact {exact:<10} sampled {p:.4} ± {se:.4}")
                }
                _ => println!("{text:<22} n={n:<3} exact {exact:<10} sampled: never defined"),
            }
        }
    }
    Ok(())
}
