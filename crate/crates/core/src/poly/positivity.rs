//! Exact decision of polynomial nonnegativity over integer arguments.
//!
//! The core procedure finds the least integer threshold `s0` such that
//! `P(s) >= 0` for every integer `s >= s0` when the leading coefficient is
//! positive: a root bound caps the search, all derivatives being nonnegative
//! at a point pins the polynomial above that point, and a downward scan
//! finds the exact threshold.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use super::rational::RationalPoly;

use crate::{Error, Result};

/// Audit record of a threshold computation.
#[derive(Debug, Clone)]
pub struct PositivityAudit {
    /// Root bound: every real root has absolute value <= this.
    pub cauchy_bound: BigInt,
    /// Point with all derivatives (orders `0..=d-1`) nonnegative.
    pub all_derivatives_nonneg_at: BigInt,
    /// Downward-scan evaluations `(s, P(s))` from the point above.
    pub scan: Vec<(BigInt, BigRational)>,
}

/// Root bound `max_i |c_i / c_d| + 1` over all lower coefficients (the
/// constant term included), rounded up to an integer.
pub fn root_bound(p: &RationalPoly) -> BigInt {
    let d = p.degree();
    let lead = p.leading();
    let mut best = BigRational::zero();
    for i in 0..d {
        let q = (p.coeff(i) / &lead).abs();
        if q > best {
            best = q;
        }
    }
    let b = best + BigRational::one();
    b.ceil().to_integer()
}

/// Integer-cleared polynomial (positive multiple of the original): same
/// signs everywhere, much faster to evaluate.
struct IntPoly(Vec<BigInt>);

impl IntPoly {
    fn from_rational(p: &RationalPoly) -> Self {
        let lcm = p.denominator_lcm();
        IntPoly(
            p.coeffs()
                .iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect(),
        )
    }

    fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn derivative(&self) -> Self {
        IntPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }
}

fn all_derivs_nonneg(derivs: &[IntPoly], v: &BigInt) -> bool {
    derivs.iter().all(|d| !d.eval(v).is_negative())
}

/// Least integer `s0 >= 0` with `P(s) >= 0` for all integers `s >= s0`.
/// Requires a positive leading coefficient.
pub fn positivity_threshold(p: &RationalPoly) -> Result<(BigInt, PositivityAudit)> {
    if p.is_zero() || !p.leading().is_positive() {
        return Err(Error::NegativeLeadingCoeff);
    }
    let d = p.degree();
    // Derivatives of order 0..=d-1 (order d is a positive constant).
    let cleared = IntPoly::from_rational(p);
    let mut derivs = vec![cleared];
    for _ in 1..d.max(1) {
        let next = derivs.last().unwrap().derivative();
        derivs.push(next);
    }
    let u = root_bound(p).max(BigInt::zero());

    // The predicate "all derivatives of order <= d-1 are >= 0 at v" is
    // upward closed in v (the order-d derivative is a positive constant, so
    // each lower derivative stays nonnegative once it is). Find the least
    // such point by doubling up from 0 and then bisecting; the root bound
    // caps the search, and beyond it the polynomial is positive anyway.
    let w = {
        let mut hi = BigInt::one();
        let mut found = all_derivs_nonneg(&derivs, &BigInt::zero());
        let mut lo = BigInt::zero();
        if found {
            BigInt::zero()
        } else {
            loop {
                if hi >= u {
                    hi = u.clone();
                    found = all_derivs_nonneg(&derivs, &hi);
                    break;
                }
                if all_derivs_nonneg(&derivs, &hi) {
                    found = true;
                    break;
                }
                lo = hi.clone();
                hi *= 2;
            }
            if !found {
                u.clone()
            } else {
                let mut lo = lo;
                let mut hi = hi;
                while lo < hi {
                    let mid = (&lo + &hi) / 2;
                    if all_derivs_nonneg(&derivs, &mid) {
                        hi = mid;
                    } else {
                        lo = mid + 1;
                    }
                }
                lo
            }
        }
    };

    // Downward scan: P(s) >= 0 holds for s >= w; extend the run below w.
    // Scan values are recorded for the audit at the original scale.
    let lcm = p.denominator_lcm();
    let mut scan = Vec::new();
    let mut s0 = w.clone();
    let mut v = &w - 1;
    while v >= BigInt::zero() {
        let val = derivs[0].eval(&v);
        let ok = !val.is_negative();
        scan.push((v.clone(), BigRational::new(val, lcm.clone())));
        if !ok {
            break;
        }
        s0 = v.clone();
        v -= 1;
    }
    Ok((
        s0,
        PositivityAudit {
            cauchy_bound: u,
            all_derivatives_nonneg_at: w,
            scan,
        },
    ))
}

/// Outcome of a nonnegativity check over integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// Least violating integer argument.
    Fails { witness: BigInt },
    /// The (sufficient) procedure could not decide.
    Inconclusive,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

/// Decides whether `P(s) >= 0` for every integer `s >= s_min` (exact; always
/// conclusive for rational polynomials).
pub fn verify_nonneg_from(p: &RationalPoly, s_min: &BigInt) -> Verdict {
    if p.is_zero() {
        return Verdict::Holds;
    }
    if p.degree() == 0 {
        return if p.leading().is_negative() {
            Verdict::Fails {
                witness: s_min.clone(),
            }
        } else {
            Verdict::Holds
        };
    }
    let cleared = IntPoly::from_rational(p);
    if p.leading().is_negative() {
        // Eventually negative: walk up from the root bound.
        let mut s = root_bound(p).max(s_min.clone());
        loop {
            if cleared.eval(&s).is_negative() {
                // Find the least violator at or after s_min.
                let mut v = s_min.clone();
                while !cleared.eval(&v).is_negative() {
                    v += 1;
                }
                return Verdict::Fails { witness: v };
            }
            s += 1;
        }
    }
    let (s0, _) = positivity_threshold(p).expect("positive leading checked");
    if s0 <= *s_min {
        return Verdict::Holds;
    }
    let mut v = s_min.clone();
    while v < s0 {
        if cleared.eval(&v).is_negative() {
            return Verdict::Fails { witness: v };
        }
        v += 1;
    }
    Verdict::Holds
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: Vec<i64>) -> RationalPoly {
        RationalPoly::from_ints(&coeffs)
    }

    #[test]
    fn linear_threshold() {
        let p = poly(vec![-3, 1]); // s - 3
        let (s0, audit) = positivity_threshold(&p).unwrap();
        assert_eq!(s0, BigInt::from(3));
        assert_eq!(audit.cauchy_bound, BigInt::from(4));
    }

    #[test]
    fn quadratic_threshold() {
        // (s-2)(s-5) = s^2 - 7s + 10: nonneg run must start at 5.
        let p = poly(vec![10, -7, 1]);
        let (s0, audit) = positivity_threshold(&p).unwrap();
        assert_eq!(s0, BigInt::from(5));
        // Both 3 and 4 evaluate negative; the scan stops at the first.
        assert!(audit.scan.iter().any(|(s, v)| *s == BigInt::from(4) && v.is_negative()));
    }

    #[test]
    fn threshold_is_least() {
        for coeffs in [vec![10, -7, 1], vec![0, 0, 1], vec![6, 5, 1], vec![-20, 1, 0, 1]] {
            let p = poly(coeffs);
            let (s0, _) = positivity_threshold(&p).unwrap();
            // Minimality certificate: s0 = 0 or P(s0 - 1) < 0.
            assert!(
                s0.is_zero() || p.eval_int(&(&s0 - 1)).is_negative(),
                "{p:?} s0={s0}"
            );
            // Soundness on a window beyond the root bound.
            let hi = root_bound(&p) + 5;
            let mut v = s0.clone();
            while v <= hi {
                assert!(!p.eval_int(&v).is_negative());
                v += 1;
            }
        }
    }

    #[test]
    fn needs_all_lower_derivatives() {
        // s(s-9)(s-11) has value 0 and slope 99 at 0, but dips to -10 at 10:
        // checking derivative orders only up to d-2 would wrongly stop at 0.
        let p = &(&poly(vec![0, 1]) * &poly(vec![-9, 1])) * &poly(vec![-11, 1]);
        assert!(!p.eval_int(&BigInt::zero()).is_negative());
        assert!(!p.derivative().eval_int(&BigInt::zero()).is_negative());
        assert!(p.eval_int(&BigInt::from(10)).is_negative());
        let (s0, _) = positivity_threshold(&p).unwrap();
        assert_eq!(s0, BigInt::from(11));
    }

    #[test]
    fn derivative_fact_soundness_window() {
        // Whenever all derivatives of order <= d-1 are nonnegative at v,
        // direct evaluation confirms P >= 0 on [v, v+100].
        let polys = [
            poly(vec![10, -7, 1]),
            poly(vec![0, 99, -20, 1]),
            poly(vec![3, -1, -5, 0, 2]),
        ];
        for p in &polys {
            let d = p.degree();
            let mut derivs = vec![IntPoly::from_rational(p)];
            for _ in 1..d {
                derivs.push(derivs.last().unwrap().derivative());
            }
            for v in 0..30i64 {
                let vb = BigInt::from(v);
                if all_derivs_nonneg(&derivs, &vb) {
                    for dx in 0..=100i64 {
                        assert!(!p.eval_int(&BigInt::from(v + dx)).is_negative());
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn verify_from_examples() {
        // s^2 - 3s >= 0 from 3.
        assert!(verify_nonneg_from(&poly(vec![0, -3, 1]), &BigInt::from(3)).holds());
        // Constant -1 fails with the witness at s_min.
        assert_eq!(
            verify_nonneg_from(&poly(vec![-1]), &BigInt::from(4)),
            Verdict::Fails {
                witness: BigInt::from(4)
            }
        );
        // Eventually negative leading coefficient.
        assert_eq!(
            verify_nonneg_from(&poly(vec![100, -1]), &BigInt::from(0)),
            Verdict::Fails {
                witness: BigInt::from(101)
            }
        );
        // Holds only past an astronomically small fraction of the range.
        let p = poly(vec![-1000000, 1]);
        assert!(verify_nonneg_from(&p, &BigInt::from(10).pow(30)).holds());
    }
}
