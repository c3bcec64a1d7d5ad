use std::fmt;

use crate::logic::ThreeVal;

/// A binary connective on `{0, 1, ⊥}` given by its full table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruthTable3 {
    /// `cells[x.index()][y.index()]`
    cells: [[ThreeVal; 3]; 3],
}

impl TruthTable3 {
    pub fn from_fn(f: impl Fn(ThreeVal, ThreeVal) -> ThreeVal) -> Self {
        let mut cells = [[ThreeVal::Undefined; 3]; 3];
        for x in ThreeVal::ALL {
            for y in ThreeVal::ALL {
                cells[x.index()][y.index()] = f(x, y);
            }
        }
        TruthTable3 { cells }
    }

    pub fn apply(&self, x: ThreeVal, y: ThreeVal) -> ThreeVal {
        self.cells[x.index()][y.index()]
    }

    /// `(x|y)`: `x` when `y = 1`, `⊥` otherwise (including `y = ⊥`).
    pub fn conditional() -> Self {
        TruthTable3::from_fn(|x, y| match (x, y) {
            (ThreeVal::Undefined, _) | (_, ThreeVal::False | ThreeVal::Undefined) => {
                ThreeVal::Undefined
            }
            (x, ThreeVal::True) => x,
        })
    }

    /// Projection on the first argument.
    pub fn first() -> Self {
        TruthTable3::from_fn(|x, _| x)
    }
}

impl fmt::Display for TruthTable3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "x\\y | 0 1 ⊥")?;
        for x in ThreeVal::ALL {
            write!(f, "{x}   |")?;
            for y in ThreeVal::ALL {
                write!(f, " {}", self.apply(x, y))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
