//! Compile `(a | b)` to its minimal Moore machine and print it as DOT.
//!
//! `cargo run --example compile_to_dot | dot -Tsvg > ab.svg`

use condevents::automata::compile_unminimized;
use condevents::prelude::*;

fn main() -> condevents::Result<()> {
    let events = EventSet::parse("a b")?;
    let c = parse_conditional("(a | b)", &events)?;
    let raw = compile_unminimized(&c, &events)?;
    let m = minimize(&raw);
    eprintln!(
        "{} states before minimization, {} after",
        raw.num_states(),
        m.num_states()
    );
    print!("{}", m.to_dot());
    Ok(())
}
