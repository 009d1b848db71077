//! Small helpers over exact rationals.
//!
//! Phases of diagonal symmetries live in the half-open interval [0,1) and are
//! always stored reduced; `reduce_mod_one` is the canonicalisation used
//! everywhere.

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

/// The exact rational type used throughout the library.
pub type Rat = Rational64;

/// Reduce a rational into [0, 1).
pub fn reduce_mod_one(value: Rat) -> Rat {
    let mut r = value - value.floor();
    if r < Rat::zero() {
        r += Rat::one();
    }
    if r >= Rat::one() {
        r -= Rat::one();
    }
    r
}

/// True when the value is an integer.
pub fn is_integral(value: Rat) -> bool {
    value.denom().abs() == 1
}

/// Least common multiple of the (reduced) denominators.
pub fn denominator_lcm(values: &[Rat]) -> i64 {
    values.iter().fold(1i64, |acc, v| acc.lcm(&v.denom().abs()))
}

/// Render as `p/q` (or `p` for integers); the form used in JSON output.
pub fn to_string(value: Rat) -> String {
    if is_integral(value) {
        format!("{}", value.numer())
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parse `p/q` or a bare integer.
pub fn parse(text: &str) -> Option<Rat> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let n: i64 = num.trim().parse().ok()?;
            let d: i64 = den.trim().parse().ok()?;
            if d == 0 {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => text.parse::<i64>().ok().map(Rat::from_integer),
    }
}
