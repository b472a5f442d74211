//! Exact rational scalars.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. Every matrix entry in this crate is a `Rational`.

use num::{BigInt, BigRational, One, Signed, Zero};

/// Exact fraction with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

/// `num / den` as an exact rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer `v` as a rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Exact division, failing on a zero divisor instead of panicking.
pub fn checked_div(a: &Rational, b: &Rational) -> crate::Result<Rational> {
    if b.is_zero() {
        return Err(crate::Error::DivisionByZero);
    }
    Ok(a / b)
}

/// `base^exp` for a possibly negative exponent. `0^0 = 1`; `0^-k` is an error.
pub fn pow(base: &Rational, exp: i64) -> crate::Result<Rational> {
    let mut acc = Rational::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        checked_div(&Rational::one(), &acc)
    } else {
        Ok(acc)
    }
}

/// Parses a rational literal: optional sign, decimal integer, optionally
/// followed by `/` and a positive decimal integer (`-4`, `+7`, `1/2`).
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let (sign, body) = match s.as_bytes().first() {
        Some(b'-') => (-1, &s[1..]),
        Some(b'+') => (1, &s[1..]),
        _ => (1, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) {
        return Err(format!("malformed rational literal `{s}`"));
    }
    let mut value = Rational::from_integer(num.parse::<BigInt>().map_err(|e| e.to_string())?);
    if let Some(d) = den {
        if !digits(d) {
            return Err(format!("malformed denominator in `{s}`"));
        }
        let d: BigInt = d.parse().map_err(|e: num::bigint::ParseBigIntError| e.to_string())?;
        if d.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        value /= Rational::from_integer(d);
    }
    if sign < 0 {
        value = -value;
    }
    Ok(value)
}

/// Decimal rendering with `digits` places after the point, truncated toward zero.
pub fn to_decimal(x: &Rational, digits: usize) -> String {
    let scale = num::pow(BigInt::from(10), digits);
    let scaled = (x.abs() * Rational::from_integer(scale.clone())).trunc().to_integer();
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    let sign = if x.is_negative() && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits)
    }
}

/// Converts to `f64`, for display only.
pub fn to_f64(x: &Rational) -> f64 {
    use num::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}
