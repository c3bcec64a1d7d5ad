use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::Rational;

/// Parses `p/q`, an integer, or a finite decimal such as `0.25`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let t = text.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let int: BigInt = match int.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            digits => digits.parse().ok()?,
        };
        let frac_num: BigInt = frac.parse().ok()?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let value = Rational::new(int * &scale + frac_num, scale);
        return Some(if negative { -value } else { value });
    }
    t.parse::<BigInt>().ok().map(Rational::from_integer)
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Formats with 12 significant digits.
pub fn format_f64(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-5..=12).contains(&magnitude) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}
