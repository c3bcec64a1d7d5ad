//! Past-time temporal logic over finite words of atoms, and its three-valued
//! extension to conditional pairs `(φ|ψ)`.

mod eval;
mod events;
mod formula;
mod parser;
mod three;

pub use eval::{eval_conditional, eval_formula, formula_values, trace_conditional};
pub use events::{Atom, EventSet, Word, MAX_EVENTS};
pub use formula::{CondPair, Formula};
pub use parser::{parse_conditional, parse_formula, ParseError};
pub use three::ThreeVal;
