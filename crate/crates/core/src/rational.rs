//! Exact rational scalars and their `"p/q"` text form.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number used for every coefficient in the crate.
pub type Q = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid rational literal {0:?} (expected \"p\" or \"p/q\")")]
pub struct ParseRationalError(pub String);

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` (optional sign on `p`, `q` nonzero).
pub fn parse(s: &str) -> Result<Q, ParseRationalError> {
    let err = || ParseRationalError(s.to_string());
    let t = s.trim();
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| err())?;
    let q: BigInt = q.parse().map_err(|_| err())?;
    if q.is_zero() {
        return Err(err());
    }
    Ok(Q::new(p, q))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format(x: &Q) -> String {
    x.to_string()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn factorial_q(n: usize) -> Q {
    Q::from_integer(factorial(n))
}

/// `x^n` for a nonnegative exponent.
pub fn pow(x: &Q, n: usize) -> Q {
    let mut acc = Q::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

/// Lossy conversion used only for human-facing summaries.
pub fn approx_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(if x.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

/// The constant `(-1)^(k-1) (k-1)!` attached to a class of size `k` in the
/// multiple-point partition sums.
pub fn alternating_factorial(k: usize) -> Q {
    assert!(k >= 1, "alternating factorial needs k >= 1");
    let f = factorial_q(k - 1);
    if k % 2 == 1 {
        f
    } else {
        -f
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse("3").unwrap(), int(3));
        assert_eq!(parse("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse(" 1 / 3 ").unwrap(), ratio(1, 3));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert_eq!(format(&ratio(-3, 2)), "-3/2");
        assert_eq!(format(&int(7)), "7");
    }

    #[test]
    fn alternating_factorials() {
        let got: Vec<Q> = (1..=6).map(alternating_factorial).collect();
        let want: Vec<Q> = [1, -1, 2, -6, 24, -120].iter().map(|&n| int(n)).collect();
        assert_eq!(got, want);
    }
}
