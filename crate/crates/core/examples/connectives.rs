//! The three connective systems as tables and as rewrites of `(φ|ψ)` pairs,
//! checked against each other on one word.

use condevents::connectives::{apply_pointwise, Kind, System};
use condevents::prelude::*;

fn main() -> condevents::Result<()> {
    let events = EventSet::parse("a b c d")?;
    let x = parse_conditional("(a | b)", &events)?;
    let y = parse_conditional("(c | d)", &events)?;
    let word = events.parse_word("{a,b} {d} {c,d} {b} {}")?;
    let tx = trace_conditional(&x, &word);
    let ty = trace_conditional(&y, &word);
    let show = |t: &[ThreeVal]| {
        t.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("x: {}\ny: {}", show(&tx), show(&ty));

    for system in System::ALL {
        for kind in Kind::ALL {
            let table = table_of(system, kind);
            let reduced = reduce(system, kind, &x, &y);
            let m = compile(&reduced, &events)?;
            let pointwise: Vec<_> = tx
                .iter()
                .zip(&ty)
                .map(|(u, v)| apply_pointwise(&table, *u, *v))
                .collect();
            assert_eq!(m.run_trace(&word), pointwise);
            println!(
                "{:<8} {}   {}",
                Connective::Binary(system, kind).to_string(),
                show(&pointwise),
                reduced.show(&events)
            );
        }
    }
    println!("neg      {}", negate(&x).show(&events));
    let star = and_star(&x, &y);
    println!(
        "star-and {}   {}",
        show(&trace_conditional(&star, &word)),
        star.show(&events)
    );
    print!("\nGNW and:\n{}", table_of(System::Gnw, Kind::And));
    Ok(())
}
