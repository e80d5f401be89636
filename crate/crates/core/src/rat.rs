//! Big-rational helpers: construction shorthands and the `"p/q"` text form
//! used in reports and data files.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::Error;

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn big(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient as a big integer; zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Renders a rational as `"p"` or `"p/q"`.
pub fn render(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"`.
pub fn parse(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let mk = |t: &str| -> Result<BigInt, Error> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("bad integer {t:?}: {e}")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let den = mk(q)?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(BigRational::new(mk(p)?, den))
        }
        None => Ok(BigRational::from_integer(mk(s)?)),
    }
}

/// Approximate `f64` value of a rational (for report output only).
pub fn to_f64(r: &BigRational) -> f64 {
    let digits = 30u32;
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (r.numer() * &scale) / r.denom();
    let mut x = 0.0f64;
    for d in scaled.abs().to_string().bytes() {
        x = x * 10.0 + (d - b'0') as f64;
    }
    if scaled.is_negative() {
        x = -x;
    }
    x / 10f64.powi(digits as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_parse_roundtrip() {
        for r in [int(0), int(7), frac(-3, 4), frac(22, 7)] {
            assert_eq!(parse(&render(&r)).unwrap(), r);
        }
    }

    #[test]
    fn binomial_vanishes_past_n() {
        assert_eq!(binomial(4, 5), BigInt::zero());
        assert_eq!(binomial(6, 3), BigInt::from(20));
    }

    #[test]
    fn f64_conversion_is_close() {
        assert!((to_f64(&frac(1, 3)) - 1.0 / 3.0).abs() < 1e-12);
        assert!((to_f64(&frac(-355, 113)) + 355.0 / 113.0).abs() < 1e-9);
    }
}
