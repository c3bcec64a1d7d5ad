use std::fmt;
use std::ops::Deref;

use crate::{Error, Result};

/// Upper bound on the number of basic events; atoms are enumerated densely.
pub const MAX_EVENTS: usize = 16;

/// The finite, ordered set of basic events. Event `i` is bit `i` of an [`Atom`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EventSet {
    names: Vec<String>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !crate::logic::parser::is_keyword(name)
}

impl EventSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out: Vec<String> = Vec::new();
        for name in names {
            let name = name.into();
            if !valid_name(&name) {
                return Err(Error::InvalidEventName(name));
            }
            if out.contains(&name) {
                return Err(Error::DuplicateEvent(name));
            }
            out.push(name);
        }
        if out.len() > MAX_EVENTS {
            return Err(Error::TooManyEvents {
                count: out.len(),
                max: MAX_EVENTS,
            });
        }
        Ok(EventSet { names: out })
    }

    /// Parses a whitespace- or comma-separated list of event names.
    pub fn parse(text: &str) -> Result<Self> {
        EventSet::new(
            text.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty()),
        )
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `|Ω| = 2^|E|`.
    pub fn atom_count(&self) -> usize {
        1 << self.names.len()
    }

    /// All atoms in bitmask order.
    pub fn atoms(&self) -> impl Iterator<Item = Atom> + Clone {
        (0..self.atom_count() as u32).map(Atom)
    }

    pub fn atom(&self, members: &[&str]) -> Result<Atom> {
        let mut bits = 0u32;
        for m in members {
            let i = self
                .index_of(m)
                .ok_or_else(|| Error::UnknownEvent(m.to_string()))?;
            bits |= 1 << i;
        }
        Ok(Atom(bits))
    }

    /// Parses an atom written as `{a, b}` or `{a b}`; `{}` is the empty atom.
    pub fn parse_atom(&self, text: &str) -> Result<Atom> {
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::InvalidEventName(text.to_string()))?;
        let names: Vec<&str> = inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .collect();
        self.atom(&names)
    }

    /// Parses a word such as `{a,b} {} {b}`.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let end = rest
                .find('}')
                .ok_or_else(|| Error::InvalidEventName(rest.to_string()))?;
            letters.push(self.parse_atom(&rest[..=end])?);
            rest = rest[end + 1..].trim_start();
        }
        Word::new(letters).ok_or_else(|| Error::InvalidEventName("empty word".to_string()))
    }

    /// Sorted names of the events true in `atom`.
    pub fn members(&self, atom: Atom) -> Vec<&str> {
        let mut v: Vec<&str> = (0..self.len())
            .filter(|&i| atom.contains(i))
            .map(|i| self.name(i))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn show_atom(&self, atom: Atom) -> String {
        format!("{{{}}}", self.members(atom).join(","))
    }
}

impl fmt::Display for EventSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names.join(" "))
    }
}

/// A complete truth assignment to the events, as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom(pub u32);

impl Atom {
    pub fn contains(self, event: usize) -> bool {
        self.0 >> event & 1 == 1
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A nonempty finite sequence of atoms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<Atom>);

impl Word {
    pub fn new(letters: Vec<Atom>) -> Option<Self> {
        if letters.is_empty() {
            None
        } else {
            Some(Word(letters))
        }
    }

    pub fn into_inner(self) -> Vec<Atom> {
        self.0
    }
}

impl Deref for Word {
    type Target = [Atom];

    fn deref(&self) -> &[Atom] {
        &self.0
    }
}
