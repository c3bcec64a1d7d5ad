use num_traits::{One, Zero};
use sha2::{Digest, Sha256};

use super::parse_rational;
use crate::logic::{Atom, EventSet};
use crate::{Error, Rational, Result};

/// A probability assignment on the atoms `Ω = 2^E`, exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dist {
    events: EventSet,
    probs: Vec<Rational>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidDist(msg.into())
}

fn check_unit(what: &str, p: &Rational) -> Result<()> {
    if *p < Rational::zero() || *p > Rational::one() {
        return Err(invalid(format!(
            "probability of {what} is {p}, outside [0, 1]"
        )));
    }
    Ok(())
}

impl Dist {
    /// Explicit atom probabilities; unlisted atoms get 0 and the total must be 1.
    pub fn from_atoms(
        events: &EventSet,
        entries: impl IntoIterator<Item = (Atom, Rational)>,
    ) -> Result<Self> {
        let mut probs: Vec<Option<Rational>> = vec![None; events.atom_count()];
        for (atom, p) in entries {
            check_unit(&events.show_atom(atom), &p)?;
            let slot = probs
                .get_mut(atom.index())
                .ok_or_else(|| invalid(format!("atom {} out of range", atom.0)))?;
            if slot.is_some() {
                return Err(invalid(format!(
                    "atom {} listed twice",
                    events.show_atom(atom)
                )));
            }
            *slot = Some(p);
        }
        let probs: Vec<Rational> = probs.into_iter().map(Option::unwrap_or_default).collect();
        let total: Rational = probs.iter().sum();
        if !total.is_one() {
            return Err(invalid(format!("atom probabilities sum to {total}, not 1")));
        }
        Ok(Dist {
            events: events.clone(),
            probs,
        })
    }

    /// Product measure: event `i` holds independently with probability `marginals[i]`.
    pub fn independent(events: &EventSet, marginals: &[Rational]) -> Result<Self> {
        if marginals.len() != events.len() {
            return Err(invalid(format!(
                "{} marginals for {} events",
                marginals.len(),
                events.len()
            )));
        }
        for (i, p) in marginals.iter().enumerate() {
            check_unit(events.name(i), p)?;
        }
        let probs = events
            .atoms()
            .map(|atom| {
                marginals
                    .iter()
                    .enumerate()
                    .map(|(i, p)| {
                        if atom.contains(i) {
                            p.clone()
                        } else {
                            Rational::one() - p
                        }
                    })
                    .product()
            })
            .collect();
        Ok(Dist {
            events: events.clone(),
            probs,
        })
    }

    pub fn uniform(events: &EventSet) -> Self {
        let p = Rational::new(1.into(), events.atom_count().into());
        Dist {
            events: events.clone(),
            probs: vec![p; events.atom_count()],
        }
    }

    pub fn point(events: &EventSet, atom: Atom) -> Result<Self> {
        Dist::from_atoms(events, [(atom, Rational::one())])
    }

    /// Parses the line-oriented distribution format:
    ///
    /// ```text
    /// # comment
    /// events a b
    /// mode independent      # or: mode atoms
    /// a = 1/2               # or: {a b} = 1/4
    /// b = 1/3
    /// ```
    ///
    /// When `events` is given the header may be omitted; if both are present
    /// they must name the same events, and the order of `events` is used.
    pub fn parse(text: &str, events: Option<&EventSet>) -> Result<Self> {
        let mut header: Option<EventSet> = None;
        let mut mode: Option<&str> = None;
        let mut entries: Vec<(usize, &str, &str)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = lineno + 1;
            if let Some(rest) = line.strip_prefix("events").filter(|_| !line.contains('=')) {
                if rest.starts_with(char::is_whitespace) || rest.is_empty() {
                    if header.is_some() {
                        return Err(invalid(format!("line {lineno}: events declared twice")));
                    }
                    header = Some(EventSet::parse(rest)?);
                    continue;
                }
            }
            if let Some(rest) = line.strip_prefix("mode").filter(|_| !line.contains('=')) {
                if rest.starts_with(char::is_whitespace) {
                    match rest.trim() {
                        m @ ("independent" | "atoms") => mode = Some(m),
                        other => {
                            return Err(invalid(format!("line {lineno}: unknown mode `{other}`")))
                        }
                    }
                    continue;
                }
            }
            let (lhs, rhs) = line
                .split_once('=')
                .ok_or_else(|| invalid(format!("line {lineno}: expected `name = probability`")))?;
            entries.push((lineno, lhs.trim(), rhs.trim()));
        }

        let events = match (events, header) {
            (Some(given), Some(declared)) => {
                let mut a: Vec<&String> = given.names().iter().collect();
                let mut b: Vec<&String> = declared.names().iter().collect();
                a.sort();
                b.sort();
                if a != b {
                    return Err(Error::EventMismatch(format!(
                        "declared `{given}`, distribution file has `{declared}`"
                    )));
                }
                given.clone()
            }
            (Some(given), None) => given.clone(),
            (None, Some(declared)) => declared,
            (None, None) => return Err(invalid("no events declared")),
        };

        let atoms_mode = match mode {
            Some(m) => m == "atoms",
            None => entries.iter().any(|(_, lhs, _)| lhs.starts_with('{')),
        };
        let mut parsed = Vec::with_capacity(entries.len());
        for (lineno, lhs, rhs) in entries {
            let p = parse_rational(rhs)
                .ok_or_else(|| invalid(format!("line {lineno}: bad probability `{rhs}`")))?;
            parsed.push((lineno, lhs, p));
        }

        if atoms_mode {
            let mut list = Vec::new();
            for (lineno, lhs, p) in parsed {
                if !lhs.starts_with('{') {
                    return Err(invalid(format!(
                        "line {lineno}: expected an atom like `{{a b}}`"
                    )));
                }
                let atom = events.parse_atom(lhs).map_err(|e| match e {
                    Error::UnknownEvent(_) => e,
                    _ => invalid(format!("line {lineno}: bad atom `{lhs}`")),
                })?;
                list.push((atom, p));
            }
            Dist::from_atoms(&events, list)
        } else {
            let mut marginals: Vec<Option<Rational>> = vec![None; events.len()];
            for (lineno, lhs, p) in parsed {
                let i = events
                    .index_of(lhs)
                    .ok_or_else(|| Error::UnknownEvent(lhs.to_string()))?;
                if marginals[i].replace(p).is_some() {
                    return Err(invalid(format!("line {lineno}: `{lhs}` given twice")));
                }
            }
            let marginals = marginals
                .into_iter()
                .enumerate()
                .map(|(i, p)| {
                    p.ok_or_else(|| invalid(format!("no probability for `{}`", events.name(i))))
                })
                .collect::<Result<Vec<_>>>()?;
            Dist::independent(&events, &marginals)
        }
    }

    pub fn events(&self) -> &EventSet {
        &self.events
    }

    pub fn prob(&self, atom: Atom) -> &Rational {
        &self.probs[atom.index()]
    }

    pub fn probs(&self) -> &[Rational] {
        &self.probs
    }

    /// Atoms of positive probability with their probabilities.
    pub fn support(&self) -> impl Iterator<Item = (Atom, &Rational)> {
        self.events
            .atoms()
            .zip(&self.probs)
            .filter(|(_, p)| !p.is_zero())
    }

    /// `Pr(e)` for event index `e`.
    pub fn marginal(&self, event: usize) -> Rational {
        self.support()
            .filter(|(a, _)| a.contains(event))
            .map(|(_, p)| p.clone())
            .sum()
    }

    /// Canonical atoms-mode text; equal distributions print identically.
    pub fn to_text(&self) -> String {
        let mut out = format!("events {}\nmode atoms\n", self.events);
        for (atom, p) in self.support() {
            let members = self.events.members(atom).join(" ");
            out.push_str(&format!("{{{members}}} = {p}\n"));
        }
        out
    }

    /// SHA-256 of [`Dist::to_text`], hex encoded.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.to_text().as_bytes()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, r: i64) -> Rational {
        Rational::new(p.into(), r.into())
    }

    #[test]
    fn independent_halves_are_uniform() {
        let e = EventSet::parse("a b").unwrap();
        let d = Dist::parse("events a b\nmode independent\na = 1/2\nb = 1/2\n", None).unwrap();
        assert!(d.probs().iter().all(|p| *p == q(1, 4)));
        assert_eq!(d, Dist::uniform(&e));
    }

    #[test]
    fn independent_product() {
        let d = Dist::parse("events a b\na = 1/3\nb = 1/2", None).unwrap();
        let e = d.events().clone();
        assert_eq!(*d.prob(e.atom(&["a", "b"]).unwrap()), q(1, 6));
        assert_eq!(*d.prob(e.atom(&[]).unwrap()), q(1, 3));
        assert_eq!(d.marginal(0), q(1, 3));
    }

    #[test]
    fn six_equiprobable_prisoner_atoms() {
        let text = "events AB BC AC H T\nmode atoms\n\
            {AB H} = 1/6\n{AB T} = 1/6\n{BC H} = 1/6\n{BC T} = 1/6\n{AC H} = 1/6\n{AC T} = 1/6\n";
        let d = Dist::parse(text, None).unwrap();
        assert_eq!(d.support().count(), 6);
        assert_eq!(d.marginal(0), q(1, 3));
        assert_eq!(d.marginal(3), q(1, 2));
    }

    #[test]
    fn validation_errors() {
        let short = "events a\nmode atoms\n{a} = 1/2\n{} = 1/3\n";
        assert!(matches!(
            Dist::parse(short, None),
            Err(Error::InvalidDist(_))
        ));
        let big = "events a\na = 3/2\n";
        assert!(matches!(Dist::parse(big, None), Err(Error::InvalidDist(_))));
        let unknown = "events a\nb = 1/2\n";
        assert!(matches!(
            Dist::parse(unknown, None),
            Err(Error::UnknownEvent(_))
        ));
        let missing = "events a b\na = 1/2\n";
        assert!(matches!(
            Dist::parse(missing, None),
            Err(Error::InvalidDist(_))
        ));
        assert!(matches!(
            Dist::parse("a = 1/2", None),
            Err(Error::InvalidDist(_))
        ));
        let e = EventSet::parse("a c").unwrap();
        assert!(matches!(
            Dist::parse("events a b\na = 1/2\nb = 1/2\n", Some(&e)),
            Err(Error::EventMismatch(_))
        ));
    }

    #[test]
    fn declared_order_wins_and_comments_are_ignored() {
        let e = EventSet::parse("b a").unwrap();
        let d = Dist::parse("# weights\nevents a b\na = 1 # sure\nb = 0\n", Some(&e)).unwrap();
        assert_eq!(d.events(), &e);
        assert_eq!(*d.prob(e.atom(&["a"]).unwrap()), q(1, 1));
        assert_eq!(d.to_text(), "events b a\nmode atoms\n{a} = 1\n");
        assert_eq!(d.digest().len(), 64);
    }
}
