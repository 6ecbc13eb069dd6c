//! Exact scalar type and the literal format used across the crate.
//!
//! Every scalar is an arbitrary-precision rational.  The accepted literal
//! grammar is `[sign] digits [ "/" digits ]` where the denominator, when
//! present, must be a positive integer written without a sign.  Examples:
//! `7`, `-3/2`, `0`, `+5/3`.

use num_bigint::BigInt;
use num_traits::Zero;

pub type Rational = num_rational::BigRational;

/// Parse a rational literal.  Rejects empty input, embedded whitespace,
/// signed or zero denominators, and anything that is not a plain fraction.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer: BigInt = num_text
        .parse()
        .map_err(|_| format!("invalid integer part {num_text:?} in rational literal"))?;
    match den_text {
        None => Ok(Rational::from(numer)),
        Some(d) => {
            if d.starts_with('+') || d.starts_with('-') {
                return Err(format!("denominator {d:?} must be an unsigned integer"));
            }
            let denom: BigInt = d
                .parse()
                .map_err(|_| format!("invalid denominator {d:?} in rational literal"))?;
            if denom.is_zero() {
                return Err("denominator must be nonzero".to_string());
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Render a rational in the same literal format that `parse_rational` accepts.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Integer shorthand.
pub fn rat(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Fraction shorthand; panics on a zero denominator.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Closest rational to `x` with denominator at most `max_denominator`,
/// found by walking the continued-fraction expansion.  Returns `None` for
/// non-finite input.
pub fn rationalize(x: f64, max_denominator: u64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let negative = x < 0.0;
    let mut frac = x.abs();
    // Convergents p/q of the continued fraction of |x|.
    let (mut p0, mut q0, mut p1, mut q1) = (BigInt::from(0), BigInt::from(1), BigInt::from(1), BigInt::from(0));
    for _ in 0..64 {
        let a = frac.floor();
        if a > 1e18 {
            break;
        }
        let ai = BigInt::from(a as i64);
        let p2 = &ai * &p1 + &p0;
        let q2 = &ai * &q1 + &q0;
        if q2 > BigInt::from(max_denominator) {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let rem = frac - a;
        if rem < 1e-13 {
            break;
        }
        frac = 1.0 / rem;
    }
    if q1.is_zero() {
        return None;
    }
    let value = Rational::new(p1, q1);
    Some(if negative { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_integers() {
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(parse_rational("-3").unwrap(), rat(-3));
        assert_eq!(parse_rational("+5").unwrap(), rat(5));
        assert_eq!(parse_rational("0").unwrap(), rat(0));
    }

    #[test]
    fn parses_fractions() {
        assert_eq!(parse_rational("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
        assert_eq!(parse_rational("0/5").unwrap(), rat(0));
    }

    #[test]
    fn rejects_malformed_literals() {
        for bad in ["", " 1", "1 ", "1/0", "3/-2", "3/+2", "1.5", "a", "1/2/3", "/2", "2/"] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn display_round_trips() {
        for text in ["7", "-3/2", "0", "22/7"] {
            let v = parse_rational(text).unwrap();
            assert_eq!(format_rational(&v), text.trim_start_matches('+'));
            assert_eq!(parse_rational(&format_rational(&v)).unwrap(), v);
        }
    }

    #[test]
    fn rationalize_recovers_simple_fractions() {
        assert_eq!(rationalize(0.5, 100).unwrap(), ratio(1, 2));
        assert_eq!(rationalize(-2.0, 100).unwrap(), rat(-2));
        assert_eq!(rationalize(1.0 / 3.0, 1000).unwrap(), ratio(1, 3));
        assert!(rationalize(f64::NAN, 10).is_none());
    }
}
