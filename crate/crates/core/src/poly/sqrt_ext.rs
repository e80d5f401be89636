//! The quadratic extension of the rational polynomial ring by `t` with
//! `t^2 = 2s - 1`, used to decide inequalities that mix even and odd powers
//! of `r = 1/sqrt(2s-1)` symbolically in `s`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

use super::positivity::{root_bound, verify_nonneg_from, Verdict};
use super::rational::RationalPoly;
use crate::rat;
use crate::{Error, Result};

/// Element `P(s) + Q(s) t` with `t^2 = 2s - 1`; the reduction is applied by
/// construction in every product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtExtPoly {
    pub p: RationalPoly,
    pub q: RationalPoly,
}

impl SqrtExtPoly {
    pub fn zero() -> Self {
        SqrtExtPoly {
            p: RationalPoly::zero(),
            q: RationalPoly::zero(),
        }
    }

    pub fn from_poly(p: RationalPoly) -> Self {
        SqrtExtPoly {
            p,
            q: RationalPoly::zero(),
        }
    }

    pub fn t() -> Self {
        SqrtExtPoly {
            p: RationalPoly::zero(),
            q: RationalPoly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        SqrtExtPoly {
            p: self.p.scale(c),
            q: self.q.scale(c),
        }
    }

    /// Renders as `P ; Q`.
    pub fn render(&self, var: &str) -> String {
        format!("{} ; {}", self.p.render(var), self.q.render(var))
    }
}

impl Add for &SqrtExtPoly {
    type Output = SqrtExtPoly;
    fn add(self, rhs: Self) -> SqrtExtPoly {
        SqrtExtPoly {
            p: &self.p + &rhs.p,
            q: &self.q + &rhs.q,
        }
    }
}

impl Sub for &SqrtExtPoly {
    type Output = SqrtExtPoly;
    fn sub(self, rhs: Self) -> SqrtExtPoly {
        SqrtExtPoly {
            p: &self.p - &rhs.p,
            q: &self.q - &rhs.q,
        }
    }
}

impl Neg for &SqrtExtPoly {
    type Output = SqrtExtPoly;
    fn neg(self) -> SqrtExtPoly {
        SqrtExtPoly {
            p: -&self.p,
            q: -&self.q,
        }
    }
}

impl Mul for &SqrtExtPoly {
    type Output = SqrtExtPoly;
    fn mul(self, rhs: Self) -> SqrtExtPoly {
        // (p1 + q1 t)(p2 + q2 t) = p1 p2 + q1 q2 (2s-1) + (p1 q2 + p2 q1) t
        let tsq = RationalPoly::from_ints(&[-1, 2]);
        SqrtExtPoly {
            p: &(&self.p * &rhs.p) + &(&(&self.q * &rhs.q) * &tsq),
            q: &(&self.p * &rhs.q) + &(&self.q * &rhs.p),
        }
    }
}

/// Decides `P(s) + Q(s) sqrt(2s-1) >= 0` for every integer `s >= s_min >= 1`.
pub fn ext_verify_nonneg(e: &SqrtExtPoly, s_min: &BigInt) -> Result<Verdict> {
    ext_verify_nonneg_with(&e.p, &e.q, &RationalPoly::from_ints(&[-1, 2]), s_min)
}

/// Decides `P(s) + Q(s) sqrt(W(s)) >= 0` for every integer `s >= s_min`,
/// where W is nonnegative on that range.
///
/// Sign analysis: with `R = P^2 - Q^2 W` the value is nonnegative iff
/// `Q >= 0 and (P >= 0 or R <= 0)` or `Q < 0 and P >= 0 and R >= 0`. The
/// sign patterns stabilize beyond the nonnegativity thresholds of P, Q and
/// R; the finite prefix is evaluated exactly.
pub fn ext_verify_nonneg_with(
    p: &RationalPoly,
    q: &RationalPoly,
    w: &RationalPoly,
    s_min: &BigInt,
) -> Result<Verdict> {
    if *s_min < BigInt::from(1) {
        return Err(Error::OutOfRange("extension check needs s_min >= 1".into()));
    }
    let e = SqrtExtPoly {
        p: p.clone(),
        q: q.clone(),
    };
    if e.is_zero() {
        return Ok(Verdict::Holds);
    }
    if e.q.is_zero() {
        return Ok(verify_nonneg_from(&e.p, s_min));
    }
    let tsq = w.clone();
    let r = &(&e.p * &e.p) - &(&(&e.q * &e.q) * &tsq);

    // Beyond this point P, Q and R all keep the sign of their leading
    // coefficient: past each polynomial's own nonnegativity threshold (of
    // itself or its negation, by leading sign).
    let stab = |x: &RationalPoly| -> BigInt {
        if x.is_zero() {
            return BigInt::zero();
        }
        let pos = if x.leading().is_positive() {
            x.clone()
        } else {
            -x
        };
        super::positivity::positivity_threshold(&pos)
            .map(|(s0, _)| s0)
            .unwrap_or_else(|_| root_bound(x))
    };
    let mut stable = stab(&e.q);
    stable = stable.max(stab(&e.p));
    stable = stable.max(stab(&r));
    stable = stable.max(s_min.clone()) + 1;

    let nonneg_at = |s: &BigInt| -> bool {
        let pv = e.p.eval_int(s);
        let qv = e.q.eval_int(s);
        let wv = tsq.eval_int(s);
        debug_assert!(!wv.is_negative(), "radicand must be nonnegative");
        if !qv.is_negative() {
            if !pv.is_negative() {
                true
            } else {
                // need Q^2 W >= P^2
                let rv = &pv * &pv - &qv * &qv * &wv;
                !rv.is_positive()
            }
        } else if pv.is_negative() {
            false
        } else {
            let rv = &pv * &pv - &qv * &qv * &wv;
            !rv.is_negative()
        }
    };

    // Finite prefix.
    let mut s = s_min.clone();
    while s <= stable {
        if !nonneg_at(&s) {
            return Ok(Verdict::Fails { witness: s });
        }
        s += 1;
    }
    // Tail by eventual signs.
    let q_pos = e.q.leading().is_positive();
    let p_pos = !e.p.is_zero() && e.p.leading().is_positive();
    let p_zero = e.p.is_zero();
    let r_pos = !r.is_zero() && r.leading().is_positive();
    let tail_ok = if q_pos {
        p_pos || p_zero || !r_pos
    } else {
        (p_pos || p_zero) && r_pos
    };
    if tail_ok {
        Ok(Verdict::Holds)
    } else {
        // Locate the least violating integer in the tail.
        let mut s = stable + 1;
        loop {
            if !nonneg_at(&s) {
                return Ok(Verdict::Fails { witness: s });
            }
            s += 1;
        }
    }
}

/// A finite sum of `coefficient(s) * r^exponent` terms with
/// `r = 1/sqrt(2s-1)`; the building block of the symbolic inequalities.
#[derive(Debug, Clone, Default)]
pub struct RTerms {
    pub terms: Vec<(RationalPoly, u64)>,
}

impl RTerms {
    pub fn new() -> Self {
        RTerms { terms: Vec::new() }
    }

    pub fn push(&mut self, coeff: RationalPoly, rpow: u64) {
        if !coeff.is_zero() {
            self.terms.push((coeff, rpow));
        }
    }

    pub fn push_const(&mut self, coeff: BigRational, rpow: u64) {
        self.push(RationalPoly::constant(coeff), rpow);
    }

    pub fn add(&mut self, other: &RTerms) {
        self.terms.extend(other.terms.iter().cloned());
    }

    pub fn scale(&self, c: &BigRational) -> RTerms {
        RTerms {
            terms: self
                .terms
                .iter()
                .map(|(p, e)| (p.scale(c), *e))
                .collect(),
        }
    }

    pub fn mul_poly(&self, p: &RationalPoly) -> RTerms {
        RTerms {
            terms: self.terms.iter().map(|(c, e)| (c * p, *e)).collect(),
        }
    }

    pub fn negate(&self) -> RTerms {
        RTerms {
            terms: self.terms.iter().map(|(c, e)| (-c, *e)).collect(),
        }
    }

    pub fn mul(&self, other: &RTerms) -> RTerms {
        let mut out = RTerms::new();
        for (c1, e1) in &self.terms {
            for (c2, e2) in &other.terms {
                out.push(c1 * c2, e1 + e2);
            }
        }
        out
    }

    /// `(1 - b r)^e` expanded into r-terms.
    pub fn one_minus_br_pow(b: u64, e: u64) -> RTerms {
        let mut acc = RTerms::new();
        acc.push_const(BigRational::one(), 0);
        let mut base = RTerms::new();
        base.push_const(BigRational::one(), 0);
        base.push_const(-rat::int(b as i64), 1);
        for _ in 0..e {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Clears `r` into the `t`-extension: returns `(E, A)` with
    /// `sum_i c_i(s) r^(e_i) * (2s-1)^A = E(s, t)` and `A` the recorded
    /// positive multiplier exponent.
    pub fn clear(&self) -> (SqrtExtPoly, u64) {
        let a = self
            .terms
            .iter()
            .map(|(_, e)| (e + 1) / 2)
            .max()
            .unwrap_or(0);
        let tsq = RationalPoly::from_ints(&[-1, 2]);
        let mut acc = SqrtExtPoly::zero();
        for (c, e) in &self.terms {
            let half = e / 2;
            let mut piece = c.clone();
            let pow = if e % 2 == 0 { a - half } else { a - half - 1 };
            for _ in 0..pow {
                piece = &piece * &tsq;
            }
            let term = if e % 2 == 0 {
                SqrtExtPoly::from_poly(piece)
            } else {
                SqrtExtPoly {
                    p: RationalPoly::zero(),
                    q: piece,
                }
            };
            acc = &acc + &term;
        }
        (acc, a)
    }

    /// Substitute a concrete even `q = 2s`, evaluating in `Q(sqrt(q-1))`.
    pub fn eval_at_q(&self, q: u64) -> super::quad::QuadExt {
        use super::quad::QuadExt;
        let s = rat::frac(q as i64, 2);
        let d = q - 1;
        let mut acc = QuadExt::rational(BigRational::zero(), d);
        for (c, e) in &self.terms {
            let coeff = c.eval(&s);
            acc = &acc + &QuadExt::r_power(d, *e).scale(&coeff);
        }
        acc
    }
}

/// Substitutes `r^e` terms by the `t`-extension with the denominator cleared:
/// `r^(2a) -> (2s-1)^(-a)`, `r^(2a+1) -> t (2s-1)^(-a-1)`, all multiplied by
/// the recorded `(2s-1)^A`.
pub fn substitute_r(terms: &[(BigRational, u64)]) -> (SqrtExtPoly, u64) {
    let mut rt = RTerms::new();
    for (c, e) in terms {
        rt.push_const(c.clone(), *e);
    }
    rt.clear()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relation() {
        let t = SqrtExtPoly::t();
        let tsq = &t * &t;
        assert_eq!(tsq.p, RationalPoly::from_ints(&[-1, 2]));
        assert!(tsq.q.is_zero());
        // 2s - 1 - t^2 is identically zero.
        let z = &SqrtExtPoly::from_poly(RationalPoly::from_ints(&[-1, 2])) - &tsq;
        assert!(z.is_zero());
        assert!(ext_verify_nonneg(&z, &BigInt::from(1)).unwrap().holds());
    }

    #[test]
    fn t_minus_one_nonneg() {
        let e = &SqrtExtPoly::t() - &SqrtExtPoly::from_poly(RationalPoly::one());
        assert!(ext_verify_nonneg(&e, &BigInt::from(1)).unwrap().holds());
    }

    #[test]
    fn detects_violations_with_least_witness() {
        // 7 - 2t < 0 once 2 sqrt(2s-1) > 7, i.e. s >= 7.
        let e = SqrtExtPoly {
            p: RationalPoly::from_ints(&[7]),
            q: RationalPoly::from_ints(&[-2]),
        };
        assert_eq!(
            ext_verify_nonneg(&e, &BigInt::from(1)).unwrap(),
            Verdict::Fails {
                witness: BigInt::from(7)
            }
        );
        // t - 3 is negative at s in {1..4}, nonneg from 5.
        let e = &SqrtExtPoly::t() - &SqrtExtPoly::from_poly(RationalPoly::from_ints(&[3]));
        assert_eq!(
            ext_verify_nonneg(&e, &BigInt::from(1)).unwrap(),
            Verdict::Fails {
                witness: BigInt::from(1)
            }
        );
        assert!(ext_verify_nonneg(&e, &BigInt::from(5)).unwrap().holds());
    }

    #[test]
    fn substitute_r_examples() {
        // r^2 -> (2s-1)^(-1): cleared numerator 1 with A = 1.
        let (e, a) = substitute_r(&[(rat::int(1), 2)]);
        assert_eq!(a, 1);
        assert_eq!(e.p, RationalPoly::one());
        // r^3 -> t (2s-1)^(-2): numerator t with A = 2.
        let (e, a) = substitute_r(&[(rat::int(1), 3)]);
        assert_eq!(a, 2);
        assert!(e.p.is_zero());
        assert_eq!(e.q, RationalPoly::one());
        // Mixed: r^2 + r^3 with A = 2 gives (2s-1) + t.
        let (e, a) = substitute_r(&[(rat::int(1), 2), (rat::int(1), 3)]);
        assert_eq!(a, 2);
        assert_eq!(e.p, RationalPoly::from_ints(&[-1, 2]));
        assert_eq!(e.q, RationalPoly::one());
    }

    #[test]
    fn ext_check_agrees_with_sampling() {
        // (s - 10) t - s + 40 >= 0? Sample vs decision over s in 2..60.
        let e = SqrtExtPoly {
            p: RationalPoly::from_ints(&[40, -1]),
            q: RationalPoly::from_ints(&[-10, 1]),
        };
        for smin in 2..12i64 {
            let verdict = ext_verify_nonneg(&e, &BigInt::from(smin)).unwrap();
            let mut brute_witness = None;
            for s in smin..200 {
                let t = (2.0 * s as f64 - 1.0).sqrt();
                let v = (s as f64 - 10.0) * t - s as f64 + 40.0;
                if v < -1e-9 {
                    brute_witness = Some(s);
                    break;
                }
            }
            match (&verdict, brute_witness) {
                (Verdict::Holds, None) => {}
                (Verdict::Fails { witness }, Some(b)) => assert_eq!(*witness, BigInt::from(b)),
                other => panic!("mismatch at smin={smin}: {other:?}"),
            }
        }
    }
}
