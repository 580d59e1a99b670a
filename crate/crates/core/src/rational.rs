//! Exact rational scalars and their text form.
//!
//! Probabilities and scores are arbitrary-precision rationals throughout;
//! feasibility and realization are exact statements, so no floating point
//! appears anywhere in this crate. The canonical text form
//! is `p/q` in lowest terms with a positive denominator, printed without
//! the `/q` part when the value is an integer. Accepted input forms are
//! `p/q`, plain integers, and exact decimal literals (`"0.3"` -> `3/10`).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;

pub type Rational = num_rational::BigRational;

/// Rational from an integer pair, mostly for tests and literals.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from an unsigned integer.
pub fn from_integer(value: u64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `p/q`, an integer, or an exact decimal literal.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let trimmed = text.trim();
    let invalid = || Error::InvalidRational(text.to_string());
    if trimmed.is_empty() {
        return Err(invalid());
    }

    if let Some((numer, denom)) = trimmed.split_once('/') {
        let numer: BigInt = numer.trim().parse().map_err(|_| invalid())?;
        let denom: BigInt = denom.trim().parse().map_err(|_| invalid())?;
        if denom.is_zero() {
            return Err(invalid());
        }
        return Ok(Rational::new(numer, denom));
    }

    if let Some((whole, frac)) = trimmed.split_once('.') {
        let negative = whole.starts_with('-');
        let whole_digits = whole.strip_prefix(['-', '+']).unwrap_or(whole);
        if !whole_digits.chars().all(|c| c.is_ascii_digit())
            || frac.is_empty()
            || !frac.chars().all(|c| c.is_ascii_digit())
        {
            return Err(invalid());
        }
        let whole_part: BigInt = if whole_digits.is_empty() {
            BigInt::zero()
        } else {
            whole_digits.parse().map_err(|_| invalid())?
        };
        let frac_part: BigInt = frac.parse().map_err(|_| invalid())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let mut numer = whole_part * &scale + frac_part;
        if negative {
            numer = -numer;
        }
        return Ok(Rational::new(numer, scale));
    }

    let numer: BigInt = trimmed.parse().map_err(|_| invalid())?;
    Ok(Rational::from_integer(numer))
}

/// True when the value has denominator 1.
pub fn is_integer(value: &Rational) -> bool {
    value.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ratio_form() {
        assert_eq!(parse_rational("1/2").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-3/9").unwrap(), ratio(-1, 3));
        assert_eq!(parse_rational(" 7 / 2 ").unwrap(), ratio(7, 2));
    }

    #[test]
    fn parses_integers() {
        assert_eq!(parse_rational("3").unwrap(), ratio(3, 1));
        assert_eq!(parse_rational("-12").unwrap(), ratio(-12, 1));
        assert_eq!(parse_rational("0").unwrap(), Rational::zero());
    }

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse_rational("0.3").unwrap(), ratio(3, 10));
        assert_eq!(parse_rational("-0.25").unwrap(), ratio(-1, 4));
        assert_eq!(parse_rational("1.5").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("2.0").unwrap(), ratio(2, 1));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "abc", "1/0", "1.2.3", "1.", "0x3", "1e5", "2/", "nan"] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn displays_lowest_terms() {
        assert_eq!(ratio(6, 4).to_string(), "3/2");
        assert_eq!(ratio(4, 2).to_string(), "2");
        assert_eq!(ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(ratio(0, 5).to_string(), "0");
    }
}
