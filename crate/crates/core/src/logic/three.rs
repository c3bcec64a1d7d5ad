use std::fmt;

use serde::{Deserialize, Serialize};

/// A truth value in `{0, 1, ⊥}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ThreeVal {
    #[serde(rename = "0")]
    False,
    #[serde(rename = "1")]
    True,
    #[serde(rename = "⊥")]
    Undefined,
}

impl ThreeVal {
    pub const ALL: [ThreeVal; 3] = [ThreeVal::False, ThreeVal::True, ThreeVal::Undefined];

    pub fn is_defined(self) -> bool {
        !matches!(self, ThreeVal::Undefined)
    }

    /// Position of the value in [`ThreeVal::ALL`].
    pub fn index(self) -> usize {
        match self {
            ThreeVal::False => 0,
            ThreeVal::True => 1,
            ThreeVal::Undefined => 2,
        }
    }

    /// The conditional connective `(x|y)` on two-valued arguments.
    pub fn conditional(consequent: bool, antecedent: bool) -> ThreeVal {
        match (consequent, antecedent) {
            (_, false) => ThreeVal::Undefined,
            (true, true) => ThreeVal::True,
            (false, true) => ThreeVal::False,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ThreeVal::False => "0",
            ThreeVal::True => "1",
            ThreeVal::Undefined => "⊥",
        }
    }
}

impl From<bool> for ThreeVal {
    fn from(b: bool) -> Self {
        if b {
            ThreeVal::True
        } else {
            ThreeVal::False
        }
    }
}

impl fmt::Display for ThreeVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}
