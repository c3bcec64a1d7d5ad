//! Two of three prisoners are pardoned and the guard names one of the
//! pardoned, flipping a coin when both A and B go free. Given that the guard
//! said "B", what is the chance that A goes free?

use condevents::prelude::*;
use condevents::probability::event_report;

const PRISONERS: &str = "(Y AB or Y AC | (Y AB and (H or T)) or (Y BC and H))";

fn main() -> condevents::Result<()> {
    let events = EventSet::parse("AB BC AC H T")?;
    let fair = Dist::parse(
        "{AB H} = 1/6\n{AB T} = 1/6\n{BC H} = 1/6\n{BC T} = 1/6\n{AC H} = 1/6\n{AC T} = 1/6\n",
        Some(&events),
    )?;
    let c = parse_conditional(PRISONERS, &events)?;
    let e = CondEvent::new(c, fair)?;
    println!("machine: {} states", e.machine().num_states());
    let r = event_report(&e, &HeuristicConfig::default(), 6)?;
    println!(
        "{} -> {} {:?}",
        r.class, r.asymptotic.verdict, r.asymptotic.value
    );

    // a biased coin and biased pardons
    let text =
        "{AB H} = 1/5\n{AB T} = 1/5\n{BC H} = 1/10\n{BC T} = 3/10\n{AC H} = 1/10\n{AC T} = 1/10\n";
    let biased = Dist::parse(text, Some(&events))?;
    let e = CondEvent::new(parse_conditional(PRISONERS, &events)?, biased)?;
    let v = asymptotic_probability(&e, &HeuristicConfig::default())?;
    // Pr(AB) / (Pr(BC) Pr(H) + Pr(AB)) = (2/5) / (2/5 · 2/5 + 2/5)
    println!("biased: {}", v.verdict);
    Ok(())
}
