use num_traits::Zero;

use crate::{Error, Rational, Result};

/// Solves `A · X = B` exactly by Gauss–Jordan elimination. `b` holds one
/// right-hand side per column.
pub(crate) fn solve(
    mut a: Vec<Vec<Rational>>,
    mut b: Vec<Vec<Rational>>,
) -> Result<Vec<Vec<Rational>>> {
    let n = a.len();
    debug_assert!(a.iter().all(|r| r.len() == n) && b.len() == n);
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::Singular)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut().skip(col) {
            *v *= &inv;
        }
        for v in b[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            let (pivot_a, pivot_b) = (a[col].clone(), b[col].clone());
            for (x, p) in a[r].iter_mut().zip(&pivot_a).skip(col) {
                *x -= &factor * p;
            }
            for (x, p) in b[r].iter_mut().zip(&pivot_b) {
                *x -= &factor * p;
            }
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64) -> Rational {
        Rational::from_integer(p.into())
    }

    #[test]
    fn solves_a_small_system() {
        // x + 2y = 5, 3x + 4y = 6  =>  x = -4, y = 9/2
        let x = solve(
            vec![vec![q(1), q(2)], vec![q(3), q(4)]],
            vec![vec![q(5)], vec![q(6)]],
        )
        .unwrap();
        assert_eq!(x[0][0], q(-4));
        assert_eq!(x[1][0], Rational::new(9.into(), 2.into()));
    }

    #[test]
    fn singular_is_reported() {
        let r = solve(
            vec![vec![q(1), q(2)], vec![q(2), q(4)]],
            vec![vec![q(1)], vec![q(2)]],
        );
        assert!(matches!(r, Err(Error::Singular)));
    }
}
