//! Exact rationals used for densities, weights and normalized distances.

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Normalized exact rational with `i128` numerator and denominator.
pub type Rational = Ratio<i128>;

pub fn ratio(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

pub fn int(v: i128) -> Rational {
    Rational::from_integer(v)
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: i128 = num
        .parse()
        .map_err(|_| Error::parse(format!("bad rational numerator in {s:?}")))?;
    let den: i128 = den
        .parse()
        .map_err(|_| Error::parse(format!("bad rational denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(Error::parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical `p/q` rendering; the denominator is always written.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Rounds to the nearest integer, half-way cases to even. The flag is set on ties.
pub fn round_half_even(r: &Rational) -> (i128, bool) {
    let floor = r.floor().to_integer();
    let frac = r - Rational::from_integer(floor);
    let half = Rational::new(1, 2);
    if frac < half {
        (floor, false)
    } else if frac > half {
        (floor + 1, false)
    } else if floor % 2 == 0 {
        (floor, true)
    } else {
        (floor + 1, true)
    }
}

/// Nearest integer to `r`, half-way cases away from zero.
pub fn round_nearest(r: &Rational) -> i128 {
    r.round().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/20").unwrap(), ratio(3, 20));
        assert_eq!(parse_rational(" 6/8 ").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("2").unwrap(), int(2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&ratio(2, 16)), "1/8");
        assert_eq!(format_rational(&int(0)), "0/1");
    }

    #[test]
    fn half_even_rounding() {
        assert_eq!(round_half_even(&ratio(5, 2)), (2, true));
        assert_eq!(round_half_even(&ratio(7, 2)), (4, true));
        assert_eq!(round_half_even(&ratio(-1, 2)), (0, true));
        assert_eq!(round_half_even(&ratio(26, 10)), (3, false));
        assert_eq!(round_half_even(&ratio(24, 10)), (2, false));
    }
}
