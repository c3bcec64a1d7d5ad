use std::fmt;

use super::EventSet;

/// Abstract syntax of past-time temporal formulas. `Var` holds an index into
/// the ambient [`EventSet`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    True,
    False,
    Var(usize),
    Not(Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    /// "previously": true at a position with a predecessor where the argument held.
    Prev(Box<Formula>),
    /// `left S right`: `right` held at some earlier-or-current position and
    /// `left` held at every position after it.
    Since(Box<Formula>, Box<Formula>),
    Once(Box<Formula>),
    Hist(Box<Formula>),
}

#[allow(clippy::should_implement_trait)]
impl Formula {
    pub fn var(i: usize) -> Self {
        Formula::Var(i)
    }

    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn prev(f: Formula) -> Self {
        Formula::Prev(Box::new(f))
    }

    pub fn since(a: Formula, b: Formula) -> Self {
        Formula::Since(Box::new(a), Box::new(b))
    }

    pub fn once(f: Formula) -> Self {
        Formula::Once(Box::new(f))
    }

    pub fn hist(f: Formula) -> Self {
        Formula::Hist(Box::new(f))
    }

    /// Left-nested conjunction of all items; `true` when empty.
    pub fn all(items: impl IntoIterator<Item = Formula>) -> Self {
        items
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or(Formula::True)
    }

    /// Left-nested disjunction of all items; `false` when empty.
    pub fn any(items: impl IntoIterator<Item = Formula>) -> Self {
        items
            .into_iter()
            .reduce(Formula::or)
            .unwrap_or(Formula::False)
    }

    /// Rewrites the derived connectives (`and`, `->`, `<->`, `once`, `hist`)
    /// into `not`, `or`, `Y` and `S`.
    pub fn expand(&self) -> Formula {
        use Formula::*;
        match self {
            True => True,
            False => False,
            Var(i) => Var(*i),
            Not(f) => Formula::not(f.expand()),
            Or(a, b) => Formula::or(a.expand(), b.expand()),
            And(a, b) => Formula::not(Formula::or(
                Formula::not(a.expand()),
                Formula::not(b.expand()),
            )),
            Implies(a, b) => Formula::or(Formula::not(a.expand()), b.expand()),
            Iff(a, b) => {
                let (a, b) = (a.expand(), b.expand());
                let forward = Formula::or(Formula::not(a.clone()), b.clone());
                let backward = Formula::or(Formula::not(b), a);
                Formula::not(Formula::or(Formula::not(forward), Formula::not(backward)))
            }
            Prev(f) => Formula::prev(f.expand()),
            Since(a, b) => Formula::since(a.expand(), b.expand()),
            Once(f) => Formula::since(True, f.expand()),
            Hist(f) => Formula::not(Formula::since(True, Formula::not(f.expand()))),
        }
    }

    /// True when no derived connective occurs.
    pub fn is_core(&self) -> bool {
        use Formula::*;
        match self {
            True | False | Var(_) => true,
            Not(f) | Prev(f) => f.is_core(),
            Or(a, b) | Since(a, b) => a.is_core() && b.is_core(),
            And(..) | Implies(..) | Iff(..) | Once(_) | Hist(_) => false,
        }
    }

    /// Highest event index mentioned, if any.
    pub fn max_var(&self) -> Option<usize> {
        use Formula::*;
        match self {
            True | False => None,
            Var(i) => Some(*i),
            Not(f) | Prev(f) | Once(f) | Hist(f) => f.max_var(),
            Or(a, b) | And(a, b) | Implies(a, b) | Iff(a, b) | Since(a, b) => {
                a.max_var().max(b.max_var())
            }
        }
    }

    pub fn depth(&self) -> usize {
        use Formula::*;
        match self {
            True | False | Var(_) => 0,
            Not(f) | Prev(f) | Once(f) | Hist(f) => 1 + f.depth(),
            Or(a, b) | And(a, b) | Implies(a, b) | Iff(a, b) | Since(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    /// Renders the formula in the concrete grammar, naming variables from `events`.
    pub fn show<'a>(&'a self, events: &'a EventSet) -> Show<'a> {
        Show {
            formula: self,
            events,
        }
    }
}

/// Binding strength, higher binds tighter.
fn level(f: &Formula) -> u8 {
    use Formula::*;
    match f {
        Iff(..) => 0,
        Implies(..) => 1,
        Or(..) => 2,
        And(..) => 3,
        Since(..) => 4,
        _ => 5,
    }
}

fn binary_parts(f: &Formula) -> Option<(&Formula, &'static str, &Formula)> {
    use Formula::*;
    match f {
        Iff(a, b) => Some((a, "<->", b)),
        Implies(a, b) => Some((a, "->", b)),
        Or(a, b) => Some((a, "or", b)),
        And(a, b) => Some((a, "and", b)),
        Since(a, b) => Some((a, "S", b)),
        _ => None,
    }
}

pub struct Show<'a> {
    formula: &'a Formula,
    events: &'a EventSet,
}

impl Show<'_> {
    fn child<'b>(&'b self, f: &'b Formula) -> Show<'b> {
        Show {
            formula: f,
            events: self.events,
        }
    }
}

impl fmt::Display for Show<'_> {
    // Binary children are parenthesised unless they continue a left-nested
    // chain of the same operator; unary operands only when they are binary.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Formula::*;
        let this = self.formula;
        if let Some((left, op, right)) = binary_parts(this) {
            let same = |c: &Formula| std::mem::discriminant(c) == std::mem::discriminant(this);
            if level(left) < 5 && !same(left) {
                write!(f, "({})", self.child(left))?;
            } else {
                write!(f, "{}", self.child(left))?;
            }
            write!(f, " {op} ")?;
            if level(right) < 5 {
                write!(f, "({})", self.child(right))
            } else {
                write!(f, "{}", self.child(right))
            }
        } else {
            let (kw, arg) = match this {
                True => return f.write_str("true"),
                False => return f.write_str("false"),
                Var(i) => return f.write_str(self.events.name(*i)),
                Not(a) => ("not", a),
                Prev(a) => ("Y", a),
                Once(a) => ("once", a),
                Hist(a) => ("hist", a),
                _ => unreachable!(),
            };
            if level(arg) < 5 {
                write!(f, "{kw} ({})", self.child(arg))
            } else {
                write!(f, "{kw} {}", self.child(arg))
            }
        }
    }
}

/// A conditional `(consequent | antecedent)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CondPair {
    pub consequent: Formula,
    pub antecedent: Formula,
}

impl CondPair {
    pub fn new(consequent: Formula, antecedent: Formula) -> Self {
        CondPair {
            consequent,
            antecedent,
        }
    }

    /// `(φ | true)`, the unconditional embedding of `φ`.
    pub fn unconditional(f: Formula) -> Self {
        CondPair::new(f, Formula::True)
    }

    pub fn show(&self, events: &EventSet) -> String {
        format!(
            "({} | {})",
            self.consequent.show(events),
            self.antecedent.show(events)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printer_parenthesises_mixed_operators() {
        let e = EventSet::parse("a b c d").unwrap();
        let (a, b, c, d) = (
            Formula::var(0),
            Formula::var(1),
            Formula::var(2),
            Formula::var(3),
        );
        let f = Formula::or(
            Formula::all([a.clone(), b.clone(), c.clone()]),
            Formula::and(c, Formula::not(d)),
        );
        assert_eq!(f.show(&e).to_string(), "(a and b and c) or (c and not d)");
        let g = Formula::since(Formula::not(b.clone()), Formula::and(a.clone(), b.clone()));
        assert_eq!(g.show(&e).to_string(), "not b S (a and b)");
        let h = Formula::and(a.clone(), Formula::and(b.clone(), a.clone()));
        assert_eq!(h.show(&e).to_string(), "a and (b and a)");
        assert_eq!(
            Formula::prev(Formula::or(a, b)).show(&e).to_string(),
            "Y (a or b)"
        );
    }

    #[test]
    fn expansion_is_core_and_idempotent() {
        let f = Formula::iff(
            Formula::hist(Formula::var(0)),
            Formula::implies(Formula::once(Formula::var(1)), Formula::True),
        );
        let x = f.expand();
        assert!(x.is_core());
        assert_eq!(x.expand(), x);
    }
}
