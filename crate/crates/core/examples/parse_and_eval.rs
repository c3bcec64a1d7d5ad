//! Parse a conditional and follow its value letter by letter.

use condevents::prelude::*;

fn main() -> condevents::Result<()> {
    let events = EventSet::parse("a b")?;
    let c = parse_conditional("(a | b)", &events)?;
    let word = events.parse_word("{a,b} {} {b} {a}")?;
    println!("{}", c.show(&events));
    for (letter, v) in word.iter().zip(trace_conditional(&c, &word)) {
        println!("  {:<6} {v}", events.show_atom(*letter));
    }

    // derived operators are ordinary syntax
    let f = parse_formula("a S (b and not Y a)", &events)?;
    let w = events.parse_word("{} {b} {a} {a}")?;
    println!(
        "{} at the end of the word: {}",
        f.show(&events),
        eval_formula(&f, &w)
    );
    println!("expanded: {}", f.expand().show(&events));
    Ok(())
}
