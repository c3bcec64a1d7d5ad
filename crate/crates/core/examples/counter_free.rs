//! Compiled conditionals are always counter-free. A machine that counts
//! modulo two is not.

use condevents::automata::{transition_monoid_size, DEFAULT_MONOID_CAP};
use condevents::prelude::*;

fn main() -> condevents::Result<()> {
    let events = EventSet::parse("a b")?;
    for text in ["(a | b)", "(a S b | once a)", "(Y Y a | hist (a or b))"] {
        let m = compile(&parse_conditional(text, &events)?, &events)?;
        println!(
            "{text:<26} states {:>2}  monoid {:>3}  counter-free {}",
            m.num_states(),
            transition_monoid_size(&m, DEFAULT_MONOID_CAP)?,
            is_counter_free(&m, DEFAULT_MONOID_CAP)?
        );
    }

    let one = EventSet::parse("a")?;
    let parity = MooreMachine::new(
        one,
        vec![vec![0, 1], vec![1, 0]],
        vec![ThreeVal::False, ThreeVal::True],
        0,
    )?;
    println!(
        "parity of a: counter-free {}",
        is_counter_free(&parity, DEFAULT_MONOID_CAP)?
    );
    Ok(())
}
