//! The ground field: exact rationals on arbitrary-precision integers.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, which is exactly the invariant the rest of the engine
//! relies on. This module only adds the canonical text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den`, reduced. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical text: `"num/den"`, with the denominator omitted when it is 1.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `[-]nat[/nat]`, the canonical form written by [`format_rational`].
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = |msg: &str| Error::Syntax {
        pos: 0,
        msg: format!("{msg} in rational `{text}`"),
    };
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, d),
        None => (body, "1"),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || !digits(den) {
        return Err(bad("expected digits"));
    }
    let num: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| bad("bad denominator"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    let q = Rational::new(num, den);
    Ok(if neg { -q } else { q })
}

/// Smallest positive integer that clears every denominator in `values`.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, q| {
        let d = q.denom();
        let g = num_integer::gcd(acc.clone(), d.clone());
        (acc * d / g).abs()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text() {
        assert_eq!(format_rational(&ratio(6, -4)), "-3/2");
        assert_eq!(format_rational(&int(7)), "7");
        assert_eq!(format_rational(&int(0)), "0");
        assert_eq!(parse_rational("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("4/2").unwrap(), int(2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn lcm_of_denominators() {
        let v = [ratio(1, 4), ratio(5, 6), int(3)];
        assert_eq!(common_denominator(v.iter()), BigInt::from(12));
    }
}
