//! The Markov chain induced by a machine and a distribution, solved exactly.

use condevents::prelude::*;

fn main() -> condevents::Result<()> {
    let events = EventSet::parse("a b")?;
    let dist = Dist::parse("a = 1/3\nb = 1/4\n", Some(&events))?;
    let c = parse_conditional("(a | b or Y b)", &events)?;
    let m = compile(&c, &events)?;
    let chain = MarkovChain::induce(&m, &dist)?;

    println!("states: {}", chain.num_states());
    for (i, row) in chain.matrix().iter().enumerate() {
        let row: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("  {i} [{}]  {}", chain.outputs()[i], row.join("  "));
    }
    let cls = chain.classify_states();
    for c in &cls.classes {
        println!(
            "class {:?} ergodic {} period {:?}",
            c.states, c.ergodic, c.period
        );
    }
    let limit = chain.limiting_distribution()?;
    let limit = limit.values().expect("aperiodic");
    for (i, p) in limit.iter().enumerate() {
        let after = chain.n_step_f64(60)[i];
        println!("lim Pr(X_n = {i}) = {p}   (n = 60: {after:.9})");
    }
    Ok(())
}
