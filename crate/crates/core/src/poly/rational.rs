//! Dense univariate polynomials with exact rational coefficients.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

use crate::rat;

/// Polynomial in one variable, coefficients indexed by degree, normalized
/// (no trailing zeros).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    /// `c * x^e`.
    pub fn monomial(c: BigRational, e: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = RationalPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat::int(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> BigRational {
        self.coeffs.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigRational {
        self.eval(&rat::big(x))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat::int(i as i64))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|k| k * c).collect())
    }

    /// Multiplication by `x^e`.
    pub fn shift_up(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(coeffs)
    }

    /// Substitutes `x -> a x + b`.
    pub fn compose_linear(&self, a: &BigRational, b: &BigRational) -> Self {
        let mut acc = Self::zero();
        let lin = Self::from_coeffs(vec![b.clone(), a.clone()]);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        let mut acc = BigInt::one();
        for c in &self.coeffs {
            acc = num::integer::lcm(acc, c.denom().clone());
        }
        acc
    }

    /// Renders in the CLI text format, e.g. `24*s^3 - 4*s^2 - 94*s + 93`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = rat::render(&c.abs());
            let body = match e {
                0 => mag,
                1 if mag == "1" => var.to_string(),
                1 => format!("{mag}*{var}"),
                _ if mag == "1" => format!("{var}^{e}"),
                _ => format!("{mag}*{var}^{e}"),
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        parts.join(" ")
    }

    /// Parses the format produced by [`render`]: signed terms `c*s^e`, `c*s`,
    /// `s^e`, `s`, or `c` joined by `+`/`-`.
    pub fn parse(input: &str, var: &str) -> crate::Result<Self> {
        let cleaned: String = input.replace(' ', "");
        if cleaned.is_empty() {
            return Err(crate::Error::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<(usize, BigRational)> = Vec::new();
        let mut rest = cleaned.as_str();
        let mut sign = BigRational::one();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        while !rest.is_empty() {
            let end = rest
                .char_indices()
                .skip(1)
                .find(|(_, c)| *c == '+' || *c == '-')
                .map(|(i, _)| i)
                .unwrap_or(rest.len());
            let term = &rest[..end];
            let (coeff_str, exp) = match term.split_once(var) {
                None => (term, 0usize),
                Some((c, tail)) => {
                    let e = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .ok_or_else(|| crate::Error::Parse(format!("bad term {term:?}")))?
                            .parse::<usize>()
                            .map_err(|_| crate::Error::Parse(format!("bad exponent in {term:?}")))?
                    };
                    (c.trim_end_matches('*'), e)
                }
            };
            let coeff = if coeff_str.is_empty() {
                BigRational::one()
            } else {
                rat::parse(coeff_str)?
            };
            terms.push((exp, &sign * coeff));
            if end == rest.len() {
                break;
            }
            sign = if rest.as_bytes()[end] == b'-' {
                -BigRational::one()
            } else {
                BigRational::one()
            };
            rest = &rest[end + 1..];
        }
        let deg = terms.iter().map(|(e, _)| *e).max().unwrap_or(0);
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        for (e, c) in terms {
            coeffs[e] += c;
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: Self) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        RationalPoly::from_coeffs(coeffs)
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: Self) -> RationalPoly {
        self + &(-rhs)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: Self) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPoly::from_coeffs(coeffs)
    }
}

/// The polynomial `binom(2s, u)` in the variable `s` (exact at every
/// non-negative integer, including `2s < u` where it vanishes).
pub fn binom_2s(u: u64) -> RationalPoly {
    let mut acc = RationalPoly::one();
    let two_s = RationalPoly::from_ints(&[0, 2]);
    for j in 0..u {
        let factor = &two_s - &RationalPoly::constant(rat::int(j as i64));
        acc = &acc * &factor;
    }
    acc.scale(&BigRational::new(BigInt::one(), rat::factorial(u)))
}

/// The polynomial `binom(s, m)` in the variable `s`.
pub fn binom_s(m: u64) -> RationalPoly {
    let mut acc = RationalPoly::one();
    let s = RationalPoly::x();
    for j in 0..m {
        let factor = &s - &RationalPoly::constant(rat::int(j as i64));
        acc = &acc * &factor;
    }
    acc.scale(&BigRational::new(BigInt::one(), rat::factorial(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(coeffs: Vec<i64>) -> RationalPoly {
        RationalPoly::from_ints(&coeffs)
    }

    #[test]
    fn arithmetic_basics() {
        let p = poly(vec![1, 2]); // 1 + 2x
        let q = poly(vec![-1, 1]); // -1 + x
        assert_eq!(&p * &q, poly(vec![-1, -1, 2]));
        assert_eq!(&p + &q, poly(vec![0, 3]));
        assert_eq!(p.derivative(), poly(vec![2]));
        assert_eq!(p.eval(&rat::int(3)), rat::int(7));
    }

    #[test]
    fn binom_polys_match_integer_binomials() {
        for u in 0..=9u64 {
            let p = binom_2s(u);
            for s in 0..=8i64 {
                assert_eq!(
                    p.eval(&rat::int(s)),
                    rat::big(&rat::binomial(2 * s as u64, u)),
                    "binom(2*{s}, {u})"
                );
            }
            let q = binom_s(u);
            for s in 0..=8i64 {
                assert_eq!(q.eval(&rat::int(s)), rat::big(&rat::binomial(s as u64, u)));
            }
        }
    }

    #[test]
    fn render_parse_roundtrip() {
        let p = RationalPoly::parse("24*s^3 - 4*s^2 - 94*s + 93", "s").unwrap();
        assert_eq!(p, poly(vec![93, -94, -4, 24]));
        assert_eq!(p.render("s"), "24*s^3 - 4*s^2 - 94*s + 93");
        let q = RationalPoly::parse("-1", "s").unwrap();
        assert_eq!(q, poly(vec![-1]));
        let r = RationalPoly::parse("s^2 - 3/2*s", "s").unwrap();
        assert_eq!(r.coeff(1), rat::frac(-3, 2));
    }

    proptest! {
        #[test]
        fn ring_axioms(a in proptest::collection::vec(-9i64..10, 0..5),
                       b in proptest::collection::vec(-9i64..10, 0..5),
                       c in proptest::collection::vec(-9i64..10, 0..5)) {
            let (a, b, c) = (poly(a), poly(b), poly(c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }
    }
}
