//! Present-tense connectives on conditionals, given both as three-valued
//! truth tables and as syntactic rules on `(φ|ψ)` pairs, plus the past-tense
//! conjunction `∧*`.

use std::fmt;
use std::str::FromStr;

use crate::automata::TruthTable3;
use crate::logic::{CondPair, Formula, ThreeVal};

/// Which three-valued logic a connective is taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum System {
    /// Sobociński: `⊥` is neutral.
    Sac,
    /// Łukasiewicz / strong Kleene: min and max under `0 < ⊥ < 1`.
    Gnw,
    /// Bochvar: `⊥` is absorbing.
    Sch,
}

impl System {
    pub const ALL: [System; 3] = [System::Sac, System::Gnw, System::Sch];

    fn prefix(self) -> &'static str {
        match self {
            System::Sac => "sac",
            System::Gnw => "gnw",
            System::Sch => "sch",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    And,
    Or,
}

impl Kind {
    pub const ALL: [Kind; 2] = [Kind::And, Kind::Or];
}

/// A named operation on conditionals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Connective {
    Binary(System, Kind),
    Neg,
    StarAnd,
}

impl Connective {
    pub fn arity(self) -> usize {
        match self {
            Connective::Neg => 1,
            _ => 2,
        }
    }

    /// Applies the syntactic rule. `second` is ignored for negation.
    ///
    /// # Panics
    /// If a binary connective is given no second argument.
    pub fn apply(self, first: &CondPair, second: Option<&CondPair>) -> CondPair {
        match self {
            Connective::Neg => negate(first),
            Connective::Binary(s, k) => reduce(s, k, first, second.expect("binary connective")),
            Connective::StarAnd => and_star(first, second.expect("binary connective")),
        }
    }
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Connective::Binary(s, Kind::And) => write!(f, "{}-and", s.prefix()),
            Connective::Binary(s, Kind::Or) => write!(f, "{}-or", s.prefix()),
            Connective::Neg => f.write_str("neg"),
            Connective::StarAnd => f.write_str("star-and"),
        }
    }
}

impl FromStr for Connective {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let all = System::ALL
            .into_iter()
            .flat_map(|s| Kind::ALL.map(|k| Connective::Binary(s, k)))
            .chain([Connective::Neg, Connective::StarAnd]);
        for c in all {
            if c.to_string() == s {
                return Ok(c);
            }
        }
        Err(format!("unknown connective `{s}`"))
    }
}

/// `∼`: swaps 0 and 1, fixes `⊥`.
pub fn negation(v: ThreeVal) -> ThreeVal {
    match v {
        ThreeVal::True => ThreeVal::False,
        ThreeVal::False => ThreeVal::True,
        ThreeVal::Undefined => ThreeVal::Undefined,
    }
}

/// Rank in the order `0 < ⊥ < 1`.
fn rank(v: ThreeVal) -> u8 {
    match v {
        ThreeVal::False => 0,
        ThreeVal::Undefined => 1,
        ThreeVal::True => 2,
    }
}

fn classical(k: Kind, x: bool, y: bool) -> bool {
    match k {
        Kind::And => x && y,
        Kind::Or => x || y,
    }
}

pub fn table_of(system: System, kind: Kind) -> TruthTable3 {
    use ThreeVal::Undefined;
    TruthTable3::from_fn(move |x, y| match system {
        System::Sac => match (x, y) {
            (Undefined, v) | (v, Undefined) => v,
            _ => classical(kind, x == ThreeVal::True, y == ThreeVal::True).into(),
        },
        System::Gnw => {
            let pick_x = match kind {
                Kind::And => rank(x) <= rank(y),
                Kind::Or => rank(x) >= rank(y),
            };
            if pick_x {
                x
            } else {
                y
            }
        }
        System::Sch => match (x, y) {
            (Undefined, _) | (_, Undefined) => Undefined,
            _ => classical(kind, x == ThreeVal::True, y == ThreeVal::True).into(),
        },
    })
}

pub fn apply_pointwise(t: &TruthTable3, v1: ThreeVal, v2: ThreeVal) -> ThreeVal {
    t.apply(v1, v2)
}

fn parts(c: &CondPair) -> (Formula, Formula) {
    (c.consequent.clone(), c.antecedent.clone())
}

fn not(f: &Formula) -> Formula {
    Formula::not(f.clone())
}

/// The rule for `(a|b) ∘ (c|d)`, with `a, b, c, d` the component formulas.
pub fn reduce(system: System, kind: Kind, c1: &CondPair, c2: &CondPair) -> CondPair {
    let (a, b) = parts(c1);
    let (c, d) = parts(c2);
    let all = |fs: &[&Formula]| Formula::all(fs.iter().map(|f| (*f).clone()));
    let abcd = all(&[&a, &b, &c, &d]);
    let ab = all(&[&a, &b]);
    let cd = all(&[&c, &d]);
    let b_or_d = Formula::or(b.clone(), d.clone());
    let bd = all(&[&b, &d]);
    match (system, kind) {
        (System::Sac, Kind::And) => CondPair::new(
            Formula::any([abcd, all(&[&a, &b, &not(&d)]), all(&[&c, &d, &not(&b)])]),
            b_or_d,
        ),
        (System::Gnw, Kind::And) => CondPair::new(
            abcd.clone(),
            Formula::any([all(&[&not(&a), &b]), all(&[&not(&c), &d]), abcd]),
        ),
        (System::Sch, Kind::And) => CondPair::new(abcd, bd),
        (System::Sac, Kind::Or) => CondPair::new(Formula::or(ab, cd), b_or_d),
        (System::Gnw, Kind::Or) => CondPair::new(
            Formula::or(ab.clone(), cd.clone()),
            Formula::any([ab, cd, bd]),
        ),
        (System::Sch, Kind::Or) => CondPair::new(Formula::or(ab, cd), bd),
    }
}

/// The Łukasiewicz conjunction rule with antecedent `a∁d ∨ c∁d ∨ abcd`.
/// It disagrees with the table (e.g. `0 ∧ ⊥` comes out `⊥`); kept so the
/// difference stays checkable.
pub fn gnw_and_asymmetric(c1: &CondPair, c2: &CondPair) -> CondPair {
    let (a, b) = parts(c1);
    let (c, d) = parts(c2);
    let abcd = Formula::all([a.clone(), b, c.clone(), d.clone()]);
    CondPair::new(
        abcd.clone(),
        Formula::any([
            Formula::and(not(&a), d.clone()),
            Formula::and(not(&c), d),
            abcd,
        ]),
    )
}

/// `∼(a|b) = (a∁|b)`.
pub fn negate(c: &CondPair) -> CondPair {
    CondPair::new(not(&c.consequent), c.antecedent.clone())
}

/// Conjunction of the most recent defined values; an argument that has never
/// been defined counts as false.
pub fn and_star(c1: &CondPair, c2: &CondPair) -> CondPair {
    let (a, b) = parts(c1);
    let (c, d) = parts(c2);
    let latest = |x: Formula, y: Formula| Formula::since(not(&y), Formula::and(x, y));
    CondPair::new(
        Formula::and(latest(a, b.clone()), latest(c, d.clone())),
        Formula::or(b, d),
    )
}
