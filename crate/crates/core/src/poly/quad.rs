//! Exact scalar arithmetic in `Q(sqrt(d))` for a fixed non-negative integer
//! `d`: values `a + b sqrt(d)` with rational `a`, `b` and exact sign
//! decisions. Used to evaluate coefficient inequalities at a concrete even
//! `q`, where `r = 1/sqrt(q-1)`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExt {
    pub a: BigRational,
    pub b: BigRational,
    pub d: u64,
}

impl QuadExt {
    pub fn rational(a: BigRational, d: u64) -> Self {
        QuadExt {
            a,
            b: BigRational::zero(),
            d,
        }
    }

    pub fn zero(d: u64) -> Self {
        Self::rational(BigRational::zero(), d)
    }

    pub fn one(d: u64) -> Self {
        Self::rational(BigRational::one(), d)
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_d(d: u64) -> Self {
        QuadExt {
            a: BigRational::zero(),
            b: BigRational::one(),
            d,
        }
    }

    /// `r^e` for `r = 1/sqrt(d)`: rational for even `e`, a pure multiple of
    /// `sqrt(d)` for odd `e`.
    pub fn r_power(d: u64, e: u64) -> Self {
        let dq = rat::int(d as i64);
        let half_pow = |k: u64| -> BigRational {
            let mut acc = BigRational::one();
            for _ in 0..k {
                acc = acc / &dq;
            }
            acc
        };
        if e % 2 == 0 {
            Self::rational(half_pow(e / 2), d)
        } else {
            QuadExt {
                a: BigRational::zero(),
                b: half_pow(e / 2 + 1),
                d,
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QuadExt {
            a: &self.a * c,
            b: &self.b * c,
            d: self.d,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign: -1, 0 or 1.
    pub fn sign(&self) -> i32 {
        let d = rat::int(self.d as i64);
        let sa = if self.a.is_zero() {
            0
        } else if self.a.is_positive() {
            1
        } else {
            -1
        };
        let sb = if self.b.is_zero() {
            0
        } else if self.b.is_positive() {
            1
        } else {
            -1
        };
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            // sqrt(d) >= 0; if d = 0 the b-part vanishes.
            if self.d == 0 {
                return sa;
            }
            return sb;
        }
        // Opposite signs: compare a^2 with b^2 d.
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * d;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn is_nonneg(&self) -> bool {
        self.sign() >= 0
    }

    /// Multiplicative inverse (value must be nonzero).
    pub fn inverse(&self) -> Self {
        // 1/(a + b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d)
        let d = rat::int(self.d as i64);
        let norm = &self.a * &self.a - &self.b * &self.b * d;
        assert!(!norm.is_zero(), "inverse of zero or degenerate element");
        QuadExt {
            a: &self.a / &norm,
            b: -&self.b / &norm,
            d: self.d,
        }
    }

    /// Approximate value for reports.
    pub fn to_f64(&self) -> f64 {
        rat::to_f64(&self.a) + rat::to_f64(&self.b) * (self.d as f64).sqrt()
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one(self.d);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn from_int(n: i64, d: u64) -> Self {
        Self::rational(rat::int(n), d)
    }

    pub fn from_big(n: &BigInt, d: u64) -> Self {
        Self::rational(rat::big(n), d)
    }
}

impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: Self) -> QuadExt {
        assert_eq!(self.d, rhs.d, "mixed radicands");
        QuadExt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            d: self.d,
        }
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: Self) -> QuadExt {
        self + &(-rhs)
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -&self.a,
            b: -&self.b,
            d: self.d,
        }
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: Self) -> QuadExt {
        assert_eq!(self.d, rhs.d, "mixed radicands");
        let d = rat::int(self.d as i64);
        QuadExt {
            a: &self.a * &rhs.a + &self.b * &rhs.b * d,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            d: self.d,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_decisions() {
        // 2 - sqrt(3) > 0, 1 - sqrt(3) < 0, 3 - sqrt(9) = 0.
        let x = QuadExt {
            a: rat::int(2),
            b: rat::int(-1),
            d: 3,
        };
        assert_eq!(x.sign(), 1);
        let y = QuadExt {
            a: rat::int(1),
            b: rat::int(-1),
            d: 3,
        };
        assert_eq!(y.sign(), -1);
        let z = QuadExt {
            a: rat::int(3),
            b: rat::int(-1),
            d: 9,
        };
        assert_eq!(z.sign(), 0);
    }

    #[test]
    fn r_powers() {
        // r = 1/sqrt(3): r^2 = 1/3, r^3 = sqrt(3)/9.
        let r2 = QuadExt::r_power(3, 2);
        assert_eq!(r2.a, rat::frac(1, 3));
        let r3 = QuadExt::r_power(3, 3);
        assert!(r3.a.is_zero());
        assert_eq!(r3.b, rat::frac(1, 9));
        // Consistency: r^3 = (r)^3.
        let r = QuadExt::r_power(3, 1);
        assert_eq!(r.pow(3), r3);
        // Inverse of r is sqrt(3).
        assert_eq!(r.inverse(), QuadExt::sqrt_d(3));
    }
}
