//! Recursive-descent parser for the formula grammar:
//!
//! ```text
//! cond   := "(" form "|" form ")"
//! form   := iff ; iff := imp ("<->" imp)* ; imp := disj ("->" disj)*
//! disj   := conj ("or" conj)* ; conj := since ("and" since)*
//! since  := unary ("S" unary)*
//! unary  := ("not"|"!"|"Y"|"once"|"hist") unary | "true" | "false" | ident | "(" form ")"
//! ```
//!
//! Every binary operator associates to the left.

use std::fmt;

use thiserror::Error;

use super::{CondPair, EventSet, Formula};

const KEYWORDS: [&str; 9] = [
    "not", "Y", "once", "hist", "true", "false", "S", "and", "or",
];

pub(crate) fn is_keyword(s: &str) -> bool {
    KEYWORDS.contains(&s)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown event `{name}` at {position}")]
    UnknownEvent { position: usize, name: String },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. } | ParseError::UnknownEvent { position, .. } => {
                *position
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    Bar,
    Not,
    Prev,
    Once,
    Hist,
    True,
    False,
    Since,
    And,
    Or,
    Implies,
    Iff,
    Ident(String),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::Bar => "`|`",
            Tok::Not => "`not`",
            Tok::Prev => "`Y`",
            Tok::Once => "`once`",
            Tok::Hist => "`hist`",
            Tok::True => "`true`",
            Tok::False => "`false`",
            Tok::Since => "`S`",
            Tok::And => "`and`",
            Tok::Or => "`or`",
            Tok::Implies => "`->`",
            Tok::Iff => "`<->`",
            Tok::Ident(name) => return write!(f, "`{name}`"),
            Tok::End => "end of input",
        };
        f.write_str(s)
    }
}

fn syntax(position: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        position,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'|' => Tok::Bar,
            b'!' => Tok::Not,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Implies
            }
            b'<' if bytes[i..].starts_with(b"<->") => {
                i += 2;
                Tok::Iff
            }
            c if c.is_ascii_alphabetic() => {
                while i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_')
                {
                    i += 1;
                }
                match &text[start..=i] {
                    "not" => Tok::Not,
                    "Y" => Tok::Prev,
                    "once" => Tok::Once,
                    "hist" => Tok::Hist,
                    "true" => Tok::True,
                    "false" => Tok::False,
                    "S" => Tok::Since,
                    "and" => Tok::And,
                    "or" => Tok::Or,
                    word => Tok::Ident(word.to_string()),
                }
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    events: &'a EventSet,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(
                self.offset(),
                format!("expected {want}, found {}", self.peek()),
            ))
        }
    }

    fn binary(
        &mut self,
        op: Tok,
        next: fn(&mut Self) -> Result<Formula, ParseError>,
        build: fn(Formula, Formula) -> Formula,
    ) -> Result<Formula, ParseError> {
        let mut lhs = next(self)?;
        while *self.peek() == op {
            self.bump();
            let rhs = next(self)?;
            lhs = build(lhs, rhs);
        }
        Ok(lhs)
    }

    fn form(&mut self) -> Result<Formula, ParseError> {
        self.binary(Tok::Iff, Self::imp, Formula::iff)
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        self.binary(Tok::Implies, Self::disj, Formula::implies)
    }

    fn disj(&mut self) -> Result<Formula, ParseError> {
        self.binary(Tok::Or, Self::conj, Formula::or)
    }

    fn conj(&mut self) -> Result<Formula, ParseError> {
        self.binary(Tok::And, Self::since, Formula::and)
    }

    fn since(&mut self) -> Result<Formula, ParseError> {
        self.binary(Tok::Since, Self::unary, Formula::since)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let at = self.offset();
        match self.bump() {
            Tok::Not => Ok(Formula::not(self.unary()?)),
            Tok::Prev => Ok(Formula::prev(self.unary()?)),
            Tok::Once => Ok(Formula::once(self.unary()?)),
            Tok::Hist => Ok(Formula::hist(self.unary()?)),
            Tok::True => Ok(Formula::True),
            Tok::False => Ok(Formula::False),
            Tok::Ident(name) => match self.events.index_of(&name) {
                Some(i) => Ok(Formula::Var(i)),
                None => Err(ParseError::UnknownEvent { position: at, name }),
            },
            Tok::LParen => {
                let f = self.form()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            other => Err(syntax(at, format!("expected a formula, found {other}"))),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::End => Ok(()),
            Tok::Bar => Err(syntax(
                self.offset(),
                "`|` is only allowed once, directly inside the outer parentheses of a conditional",
            )),
            other => Err(syntax(self.offset(), format!("unexpected {other}"))),
        }
    }
}

pub fn parse_formula(text: &str, events: &EventSet) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        events,
    };
    let f = p.form()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_conditional(text: &str, events: &EventSet) -> Result<CondPair, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        events,
    };
    p.expect(Tok::LParen)?;
    let consequent = p.form()?;
    if *p.peek() != Tok::Bar {
        return Err(syntax(
            p.offset(),
            format!(
                "expected `|` separating the conditional, found {}",
                p.peek()
            ),
        ));
    }
    p.bump();
    let antecedent = p.form()?;
    if *p.peek() == Tok::Bar {
        return Err(syntax(
            p.offset(),
            "only one `|` is allowed in a conditional",
        ));
    }
    p.expect(Tok::RParen)?;
    p.finish()?;
    Ok(CondPair::new(consequent, antecedent))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ab() -> EventSet {
        EventSet::parse("a b").unwrap()
    }

    #[test]
    fn simple_disjunction() {
        let f = parse_formula("a or not b", &ab()).unwrap();
        assert_eq!(
            f,
            Formula::or(Formula::var(0), Formula::not(Formula::var(1)))
        );
    }

    #[test]
    fn alternation_antecedent_parses() {
        let e = EventSet::parse("a").unwrap();
        let f = parse_formula(
            "hist((Y a -> not a) and (Y not a -> a) and (not Y true -> a))",
            &e,
        )
        .unwrap();
        let a = Formula::var(0);
        let expected = Formula::hist(Formula::all([
            Formula::implies(Formula::prev(a.clone()), Formula::not(a.clone())),
            Formula::implies(Formula::prev(Formula::not(a.clone())), a.clone()),
            Formula::implies(Formula::not(Formula::prev(Formula::True)), a),
        ]));
        assert_eq!(f, expected);
    }

    #[test]
    fn dangling_since_reports_end_of_input() {
        let err = parse_formula("a S", &ab()).unwrap_err();
        assert_eq!(err.position(), 3);
        assert!(err.to_string().contains("end of input"), "{err}");
    }

    #[test]
    fn precedence_and_associativity() {
        let e = ab();
        let f = parse_formula("not a S b and a or b -> a <-> b", &e).unwrap();
        let (a, b) = (Formula::var(0), Formula::var(1));
        let s = Formula::since(Formula::not(a.clone()), b.clone());
        let expected = Formula::iff(
            Formula::implies(Formula::or(Formula::and(s, a.clone()), b.clone()), a),
            b,
        );
        assert_eq!(f, expected);
        let chain = parse_formula("a S b S a", &e).unwrap();
        assert!(matches!(chain, Formula::Since(ref l, _) if matches!(**l, Formula::Since(..))));
    }

    #[test]
    fn unknown_event_is_reported_with_position() {
        let err = parse_formula("a and c", &ab()).unwrap_err();
        assert_eq!(
            err,
            ParseError::UnknownEvent {
                position: 6,
                name: "c".into()
            }
        );
    }

    #[test]
    fn conditionals() {
        let e = ab();
        let c = parse_conditional("(a | b)", &e).unwrap();
        assert_eq!(c, CondPair::new(Formula::var(0), Formula::var(1)));
        let c = parse_conditional("(a | true)", &e).unwrap();
        assert_eq!(c, CondPair::unconditional(Formula::var(0)));
        let c = parse_conditional("((a or b) | (b))", &e).unwrap();
        assert_eq!(c.antecedent, Formula::var(1));
        let err = parse_conditional("(a | b | a)", &e).unwrap_err();
        assert!(err.to_string().contains("only one"), "{err}");
        assert!(parse_conditional("(a)", &e).is_err());
        assert!(parse_conditional("(a |)", &e).is_err());
        assert!(parse_conditional("(a | b) b", &e).is_err());
        assert!(parse_formula("a | b", &e).is_err());
    }

    fn arb_formula() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            Just(Formula::True),
            Just(Formula::False),
            (0usize..3).prop_map(Formula::Var),
        ];
        leaf.prop_recursive(5, 40, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                inner.clone().prop_map(Formula::prev),
                inner.clone().prop_map(Formula::once),
                inner.clone().prop_map(Formula::hist),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::iff(a, b)),
                (inner.clone(), inner).prop_map(|(a, b)| Formula::since(a, b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(f in arb_formula(), g in arb_formula()) {
            let e = EventSet::parse("a b c").unwrap();
            let text = f.show(&e).to_string();
            prop_assert_eq!(parse_formula(&text, &e).unwrap(), f.clone());
            let pair = CondPair::new(f, g);
            prop_assert_eq!(parse_conditional(&pair.show(&e), &e).unwrap(), pair);
        }
    }
}
