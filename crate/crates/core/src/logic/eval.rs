//! Direct semantics over finite words. This is the reference the compiled
//! machines are tested against.

use super::{Atom, CondPair, Formula, ThreeVal};

/// Truth value of `f` at every position of `word`.
///
/// `Y f` is false at position 0; `f S g` at position 0 equals `g`, and at
/// `s > 0` equals `g(s) ∨ (f(s) ∧ (f S g)(s−1))`.
pub fn formula_values(f: &Formula, word: &[Atom]) -> Vec<bool> {
    use Formula::*;
    let n = word.len();
    match f {
        True => vec![true; n],
        False => vec![false; n],
        Var(i) => word.iter().map(|a| a.contains(*i)).collect(),
        Not(g) => formula_values(g, word).into_iter().map(|v| !v).collect(),
        Or(a, b) => zip_with(a, b, word, |x, y| x || y),
        And(a, b) => zip_with(a, b, word, |x, y| x && y),
        Implies(a, b) => zip_with(a, b, word, |x, y| !x || y),
        Iff(a, b) => zip_with(a, b, word, |x, y| x == y),
        Prev(g) => {
            let v = formula_values(g, word);
            (0..n).map(|s| s > 0 && v[s - 1]).collect()
        }
        Since(a, b) => {
            let (va, vb) = (formula_values(a, word), formula_values(b, word));
            let mut out = Vec::with_capacity(n);
            for s in 0..n {
                let carried = s > 0 && va[s] && out[s - 1];
                out.push(vb[s] || carried);
            }
            out
        }
        Once(g) => formula_values(g, word)
            .into_iter()
            .scan(false, |seen, v| {
                *seen |= v;
                Some(*seen)
            })
            .collect(),
        Hist(g) => formula_values(g, word)
            .into_iter()
            .scan(true, |all, v| {
                *all &= v;
                Some(*all)
            })
            .collect(),
    }
}

fn zip_with(a: &Formula, b: &Formula, word: &[Atom], op: impl Fn(bool, bool) -> bool) -> Vec<bool> {
    formula_values(a, word)
        .into_iter()
        .zip(formula_values(b, word))
        .map(|(x, y)| op(x, y))
        .collect()
}

/// `M, n ⊨ f` where `n` is the last position of `word`.
///
/// # Panics
/// If `word` is empty.
pub fn eval_formula(f: &Formula, word: &[Atom]) -> bool {
    assert!(!word.is_empty(), "formulas are evaluated on nonempty words");
    *formula_values(f, word).last().unwrap()
}

/// Value of the conditional at the last position of `word`.
pub fn eval_conditional(c: &CondPair, word: &[Atom]) -> ThreeVal {
    ThreeVal::conditional(
        eval_formula(&c.consequent, word),
        eval_formula(&c.antecedent, word),
    )
}

/// Value of the conditional on every prefix of `word`.
pub fn trace_conditional(c: &CondPair, word: &[Atom]) -> Vec<ThreeVal> {
    formula_values(&c.consequent, word)
        .into_iter()
        .zip(formula_values(&c.antecedent, word))
        .map(|(x, y)| ThreeVal::conditional(x, y))
        .collect()
}
