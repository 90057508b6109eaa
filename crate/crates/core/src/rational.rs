//! Exact rational helpers on top of [`num_rational::BigRational`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact conversion of a finite `f64` (every finite double is a dyadic rational).
pub fn from_f64(x: f64) -> Result<Rational> {
    Rational::from_f64(x).ok_or_else(|| Error::Input(format!("non-finite value {x}")))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `num/den` rendering, with the denominator printed even when it is 1.
pub fn to_fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `a/b`, a plain integer, or a decimal literal such as `0.25`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| Error::Input(format!("bad rational {s:?}")))?;
        let d: BigInt = d.trim().parse().map_err(|_| Error::Input(format!("bad rational {s:?}")))?;
        if d.is_zero() {
            return Err(Error::Input(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Ok(n) = s.parse::<BigInt>() {
        return Ok(Rational::from_integer(n));
    }
    // Decimal literal: read it digit-exactly rather than through f64.
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (whole, fraction) = body
        .split_once('.')
        .ok_or_else(|| Error::Input(format!("bad rational {s:?}")))?;
    if whole.is_empty() && fraction.is_empty()
        || !whole.chars().chain(fraction.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(Error::Input(format!("bad rational {s:?}")));
    }
    let digits: BigInt = format!("0{whole}{fraction}").parse().expect("digits only");
    let scale = num_traits::pow(BigInt::from(10), fraction.len());
    let r = Rational::new(digits, scale);
    Ok(if neg { -r } else { r })
}

pub fn is_non_negative(r: &Rational) -> bool {
    !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_strings_are_lowest_terms() {
        assert_eq!(to_fraction_string(&frac(-2, 132)), "-1/66");
        assert_eq!(to_fraction_string(&int(17)), "17/1");
        assert_eq!(to_fraction_string(&frac(3, -6)), "-1/2");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse("7/18").unwrap(), frac(7, 18));
        assert_eq!(parse("-4").unwrap(), int(-4));
        assert_eq!(parse("0.25").unwrap(), frac(1, 4));
        assert_eq!(parse("-.5").unwrap(), frac(-1, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse(".").is_err());
    }

    #[test]
    fn f64_conversion_is_exact() {
        assert_eq!(from_f64(0.5).unwrap(), frac(1, 2));
        assert!(from_f64(f64::NAN).is_err());
        assert_eq!(to_f64(&frac(1, 4)), 0.25);
    }
}
