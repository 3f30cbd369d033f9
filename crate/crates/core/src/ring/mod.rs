//! Exact arithmetic: rationals, half-integer Laurent polynomials in `t`, and
//! determinants of matrices over them. No floating point is used anywhere.

mod laurent;
mod matrix;
mod poly;

pub use laurent::HalfLaurent;
pub use matrix::{RationalMatrix, RingMatrix};

use num_bigint::BigInt;
use num_traits::Zero;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Parses `"a"` or `"a/b"` with `b > 0`. Only an optional leading `-` is
/// accepted as a sign; decimals and exponents are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    fn parse_int(part: &str, whole: &str) -> Result<BigInt, String> {
        let digits = part.strip_prefix('-').unwrap_or(part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("`{whole}` is not an exact rational (expected \"a\" or \"a/b\")"));
        }
        part.parse().map_err(|_| format!("`{whole}` is not an exact rational"))
    }
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s, s)?)),
        Some((n, d)) => {
            let num = parse_int(n, s)?;
            if d.starts_with('-') {
                return Err(format!("`{s}` has a non-positive denominator"));
            }
            let den = parse_int(d, s)?;
            if den.is_zero() {
                return Err(format!("`{s}` has a zero denominator"));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Canonical string form: `"a"` for integers, `"a/b"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("-3/6").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational("12").unwrap(), int(12));
        for bad in ["1/0", "1.5", "", "-", "1/-2", "+1", "1/2/3", " 1", "1e3", "a/b"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} accepted");
        }
        assert_eq!(format_rational(&frac(4, -6)), "-2/3");
        assert_eq!(format_rational(&int(-7)), "-7");
    }
}
