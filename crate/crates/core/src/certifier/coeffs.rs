//! Left-coefficient builders: the closed-form contributions of each sum
//! family (pair sums, triple sums, regular geometric-series estimates, and
//! the finite pathological sums), both symbolically in `s = q/2` and
//! numerically at a concrete even `q` in `Q(sqrt(q-1))`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;


use crate::combinatorics::{is_admissible, multiset_orderings};
use crate::groups::GroupSpec;
use crate::poly::{QuadExt, RTerms, RationalPoly};
use crate::rat::{self, factorial};
use crate::sums::certificate::AlphaTerm;
use crate::sums::epsilon;
use crate::{Error, Result};

/// Sphere-size upper bound `N(l) <= A B^(l-1)` as a big integer (exact for
/// free groups, the stated majorant otherwise); `N(0) = 1`.
pub fn sphere_bound(group: &GroupSpec, l: u64) -> BigInt {
    if l == 0 {
        return BigInt::one();
    }
    let (a, b) = group.sphere_bound_params();
    BigInt::from(a) * BigInt::from(b).pow((l - 1) as u32)
}

/// Pair-sum coefficient for the singleton profile `(k)`: `r^(2k)`.
pub fn pair_coefficient(k: u64) -> RTerms {
    let mut t = RTerms::new();
    t.push_const(BigRational::one(), 2 * k);
    t
}

/// Triple-sum coefficient of `alpha_{k1} alpha_{k2}` (m = 2 profiles),
/// independent of `s`: the exact finite sum of the pair pieces.
pub fn triple_pair_coefficient(group: &GroupSpec, k1: u64, k2: u64) -> Result<RTerms> {
    let mut t = RTerms::new();
    for piece in crate::sums::s3::triple_coefficients(group, k1, k2)? {
        t.push_const(piece.pair_coef, piece.rpow);
    }
    Ok(t)
}

/// Triple-sum coefficient of `alpha_0 alpha_k` for the singleton profile
/// `(k)`: the family tables.
pub fn triple_unit_coefficient(group: &GroupSpec, k: u64) -> Result<RTerms> {
    let mut t = RTerms::new();
    match group {
        GroupSpec::Free { n } => {
            let n = *n as i64;
            match k {
                0 => {}
                1 => {}
                2 => {
                    t.push_const(rat::frac(3, 2), 4);
                    t.push_const(rat::int(n - 1), 6);
                }
                3 => {
                    t.push_const(rat::int(3), 6);
                    t.push_const(rat::int(3 * (n - 1)), 8);
                }
                4 => {
                    t.push_const(rat::frac(9, 2), 8);
                    t.push_const(rat::int(6 * (n - 1)), 10);
                    t.push_const(rat::int((n - 1) * (2 * n - 1)), 12);
                }
                _ => {
                    return Err(Error::OutOfRange(
                        "closed form for large k handled by the tail route".into(),
                    ))
                }
            }
        }
        GroupSpec::TriangularLocal { .. } => match k {
            0 | 1 => {}
            2 => {
                t.push_const(rat::frac(3, 2), 4);
                t.push_const(rat::frac(1, 2), 6);
            }
            3 => {
                t.push_const(rat::int(3), 6);
                t.push_const(rat::frac(3, 2), 8);
            }
            _ => {
                return Err(Error::OutOfRange(
                    "closed form for large k handled by the tail route".into(),
                ))
            }
        },
        GroupSpec::Cyclic { .. } => match k {
            0 | 1 => {}
            2 => t.push_const(rat::frac(3, 2), 4),
            _ => t.push_const(rat::int(3 * (k as i64 + 1)), 2 * k),
        },
    }
    Ok(t)
}

/// The polynomial-in-s weights `binom(2s, u) * u! (s-m)! / (j! s!)` arising
/// when the geometric-series estimates are combined with their binomial
/// weights; all three are genuine polynomials.
pub fn gamma_weight_poly(m: u64, which: GammaKind) -> RationalPoly {
    let odd_prod = |count: u64| -> RationalPoly {
        let mut acc = RationalPoly::one();
        for j in 0..count {
            acc = &acc
                * &RationalPoly::from_coeffs(vec![rat::int(-(2 * j as i64) - 1), rat::int(2)]);
        }
        acc
    };
    match which {
        GammaKind::Even => {
            // binom(2s,2m) (2m)! (s-m)!/(m! s!) = 2^m/m! * prod_{j<m}(2s-2j-1)
            odd_prod(m).scale(&BigRational::new(
                BigInt::from(2u32).pow(m as u32),
                factorial(m),
            ))
        }
        GammaKind::OddLow => {
            // binom(2s,2m-1)(2m-1)!(s-m)!/((m-1)! s!) = 2^m/(m-1)! prod_{j<m-1}
            odd_prod(m - 1).scale(&BigRational::new(
                BigInt::from(2u32).pow(m as u32),
                factorial(m - 1),
            ))
        }
        GammaKind::OddHigh => {
            // binom(2s,2m+1)(2m+1)!(s-m)!/((m+1)! s!)
            //   = 2^(m+1)(s-m)/(m+1)! prod_{j<m}
            let lin = RationalPoly::from_coeffs(vec![rat::int(-(m as i64)), rat::int(1)]);
            (&odd_prod(m) * &lin).scale(&BigRational::new(
                BigInt::from(2u32).pow(m as u32 + 1),
                factorial(m + 1),
            ))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaKind {
    /// Contribution of the even sum `u = 2m`.
    Even,
    /// `u = 2m - 1` (requires m >= 3).
    OddLow,
    /// `u = 2m + 1`.
    OddHigh,
}

impl GammaKind {
    pub fn series_power(&self, m: u64) -> u64 {
        match self {
            GammaKind::Even => m - 1,
            GammaKind::OddLow => m - 2,
            GammaKind::OddHigh => m,
        }
    }
}

/// The regular-route inequality for profiles with `m` nonzero parts and
/// total `K`, normalized by the ordering count and cleared of the geometric
/// series: returns `RHS - LHS` as r-terms, to be checked nonnegative for
/// integer `s >= s_min`. Uses the series majorant `a r/(1 - b r)`.
pub fn gamma_regular_margin(group: &GroupSpec, m: u64, total_k: u64) -> RTerms {
    let (a, b) = group.growth_series_params();
    let kinds: Vec<GammaKind> = if m >= 3 {
        vec![GammaKind::OddLow, GammaKind::Even, GammaKind::OddHigh]
    } else {
        vec![GammaKind::Even, GammaKind::OddHigh]
    };
    let max_pow = m;
    let mut margin = RTerms::one_minus_br_pow(b, max_pow);
    for kind in kinds {
        let j = kind.series_power(m);
        let poly = gamma_weight_poly(m, kind);
        let mut term = RTerms::new();
        term.push_const(
            rat::big(&BigInt::from(a).pow(j as u32)),
            total_k + 1 + j,
        );
        let term = term
            .mul(&RTerms::one_minus_br_pow(b, max_pow - j))
            .mul_poly(&poly);
        margin.add(&term.negate());
    }
    margin
}

/// Numeric evaluation of one regular-route coefficient (per unit of the
/// ordering count) at a concrete even q.
pub fn gamma_value(group: &GroupSpec, q: u64, m: u64, kind: GammaKind, total_k: u64) -> QuadExt {
    let d = q - 1;
    let s = q / 2;
    let (a, b) = group.growth_series_params();
    let r = QuadExt::r_power(d, 1);
    let one = QuadExt::one(d);
    let denom = &one - &QuadExt::r_power(d, 1).scale(&rat::int(b as i64));
    let series = &r.scale(&rat::int(a as i64)) * &denom.inverse();
    let j = kind.series_power(m);
    let (fac_num, fac_den) = match kind {
        GammaKind::Even => (factorial(2 * m) * factorial(s - m), factorial(m) * factorial(s)),
        GammaKind::OddLow => (
            factorial(2 * m - 1) * factorial(s - m),
            factorial(m - 1) * factorial(s),
        ),
        GammaKind::OddHigh => (
            factorial(2 * m + 1) * factorial(s - m),
            factorial(m + 1) * factorial(s),
        ),
    };
    let scalar = BigRational::new(fac_num, fac_den);
    (&series.pow(j) * &QuadExt::r_power(d, total_k + 1)).scale(&scalar)
}

/// Lambda-route coefficients for the rank-2 free group (4 <= q <= 10), per
/// unit of the ordering count.
pub fn lambda_value_f2(q: u64, m: u64, kind: GammaKind, total_k: u64) -> Result<QuadExt> {
    if !(4..=10).contains(&q) || q % 2 != 0 {
        return Err(Error::OutOfRange("lambda route needs even q in 4..=10".into()));
    }
    let d = q - 1;
    let s = q / 2;
    if m > s {
        return Ok(QuadExt::zero(d));
    }
    let fac = |num: BigInt, den: BigInt| BigRational::new(num, den);
    match q {
        10 => {
            // r = 1/3: constants 2^(m-2), 2^(m-4), 2^(m-2) times 3^(-K).
            let pow3 = QuadExt::rational(
                BigRational::new(BigInt::one(), BigInt::from(3u32).pow(total_k as u32)),
                d,
            );
            let (num, den, two_pow) = match kind {
                GammaKind::Even => (
                    factorial(2 * m) * factorial(s - m),
                    factorial(s),
                    rat::frac(2i64.pow(m as u32), 4),
                ),
                GammaKind::OddLow => (
                    factorial(2 * m - 1) * factorial(s - m),
                    factorial(s),
                    rat::frac(2i64.pow(m as u32), 16),
                ),
                GammaKind::OddHigh => (
                    factorial(2 * m + 1) * factorial(s - m),
                    factorial(s),
                    rat::frac(2i64.pow(m as u32), 4),
                ),
            };
            Ok(pow3.scale(&(fac(num, den) * two_pow)))
        }
        6 | 8 => {
            // 1/3 < r < 1/sqrt(3): (3r^2)^K/(1-r) (4r/(3r-1))^(m-1+shift).
            let one = QuadExt::one(d);
            let r = QuadExt::r_power(d, 1);
            let r2 = QuadExt::r_power(d, 2);
            let three_r2_k = r2.scale(&rat::int(3)).pow(total_k);
            let inv_1mr = (&one - &r).inverse();
            let ratio = &r.scale(&rat::int(4)) * &(&r.scale(&rat::int(3)) - &one).inverse();
            let (num, den, pow, half) = match kind {
                GammaKind::Even => (
                    factorial(2 * m) * factorial(s - m),
                    factorial(s),
                    m - 1,
                    false,
                ),
                GammaKind::OddLow => (
                    factorial(2 * m - 1) * factorial(s - m),
                    factorial(s),
                    m - 2,
                    true,
                ),
                GammaKind::OddHigh => (
                    factorial(2 * m + 1) * factorial(s - m),
                    factorial(s),
                    m,
                    true,
                ),
            };
            let mut v = &(&three_r2_k * &inv_1mr) * &ratio.pow(pow);
            v = v.scale(&fac(num, den));
            if half {
                v = v.scale(&rat::frac(1, 2));
            }
            Ok(v)
        }
        4 => {
            // r = 1/sqrt(3), s = m = 2, even contribution only:
            // 16 K 3^((1-K)/2) / (sqrt(3) - 1) = 16 K r^(K-1) / (sqrt(3)-1).
            match kind {
                GammaKind::Even if m == 2 => {
                    let one = QuadExt::one(d);
                    let denom = (&QuadExt::sqrt_d(d) - &one).inverse();
                    Ok((&QuadExt::r_power(d, total_k - 1) * &denom)
                        .scale(&rat::int(16 * total_k as i64)))
                }
                GammaKind::OddHigh => Ok(QuadExt::zero(d)), // binom(4,5) = 0
                _ => Err(Error::OutOfRange(
                    "lambda route at q = 4 only covers the even sum at m = 2".into(),
                )),
            }
        }
        _ => unreachable!(),
    }
}

/// Triangular lambda-route coefficient at q = 4 (s = m = 2), per ordering
/// count: `36 sqrt(3)/((2-sqrt(3))(sqrt(3)-1)) (2/3)^K`.
pub fn lambda_value_triangular_q4(total_k: u64) -> QuadExt {
    let d = 3;
    let one = QuadExt::one(d);
    let s3 = QuadExt::sqrt_d(d);
    let factor = &(&(&QuadExt::from_int(2, d) - &s3).inverse() * &(&s3 - &one).inverse())
        * &s3.scale(&rat::int(36));
    let mut pow = BigRational::one();
    for _ in 0..total_k {
        pow *= rat::frac(2, 3);
    }
    factor.scale(&pow)
}

/// One pathological profile set: the even-length profiles compatible with
/// the nonzero parts of `k` in consecutive pairs. `exclude` lists profiles
/// that are bounded elsewhere and skipped here.
pub fn pathological_profiles_even(
    group: &GroupSpec,
    k: &[u64],
    exclude: &[Vec<u64>],
) -> Vec<Vec<u64>> {
    a_set(group, k, k.len(), false, exclude)
}

/// Odd-case profile sets: tuples of length `2 pairs` whose last entry is 0
/// and whose nonzero prefix is admissible; `pairs = m` serves `u = 2m - 1`,
/// `pairs = m + 1` serves `u = 2m + 1`.
pub fn pathological_profiles_odd(
    group: &GroupSpec,
    k: &[u64],
    pairs: usize,
    exclude: &[Vec<u64>],
) -> Vec<Vec<u64>> {
    a_set(group, k, pairs, true, exclude)
}

fn a_set(
    group: &GroupSpec,
    k: &[u64],
    pairs: usize,
    odd: bool,
    exclude: &[Vec<u64>],
) -> Vec<Vec<u64>> {
    let m = k.len();
    debug_assert!(pairs == m || (odd && pairs == m + 1));
    let k1 = k.first().copied().unwrap_or(1);
    let cap_global = (k.iter().sum::<u64>() + 2 * pairs as u64 * k1).max(2);
    let max_len = group.max_length().unwrap_or(u64::MAX);
    let exceptional: Vec<Vec<u64>> = exclude.to_vec();

    let mut out = Vec::new();
    let mut current: Vec<u64> = Vec::with_capacity(2 * pairs);
    fn rec(
        group: &GroupSpec,
        k: &[u64],
        pairs: usize,
        odd: bool,
        cap_global: u64,
        max_len: u64,
        exceptional: &[Vec<u64>],
        j: usize,
        current: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if j == pairs {
            finish(group, odd, exceptional, current, out);
            return;
        }
        let prev_lo = current.last().copied().unwrap_or(cap_global);
        let push_pair = |hi: u64,
                         lo: u64,
                         current: &mut Vec<u64>,
                         out: &mut Vec<u64>| {
            let _ = out;
            current.push(hi);
            current.push(lo);
        };
        let _ = push_pair;
        if j < k.len() {
            let kj = k[j];
            if kj > prev_lo {
                return;
            }
            // Free partner either above or below the pinned value.
            let mut seen = std::collections::BTreeSet::new();
            let hi_cap = prev_lo.min(max_len);
            let is_last_forced_zero = odd && j == pairs - 1;
            if is_last_forced_zero {
                // Pair (k_j, 0).
                current.push(kj);
                current.push(0);
                rec(group, k, pairs, odd, cap_global, max_len, exceptional, j + 1, current, out);
                current.truncate(current.len() - 2);
                return;
            }
            for f in 1..=hi_cap {
                let (hi, lo) = if f >= kj { (f, kj) } else { (kj, f) };
                if hi > prev_lo || !seen.insert((hi, lo)) {
                    continue;
                }
                current.push(hi);
                current.push(lo);
                rec(group, k, pairs, odd, cap_global, max_len, exceptional, j + 1, current, out);
                current.truncate(current.len() - 2);
            }
        } else {
            // Unconstrained trailing pair (x, 0) in the extended odd case.
            debug_assert!(odd && j == pairs - 1);
            let hi_cap = prev_lo.min(max_len);
            for x in 1..=hi_cap {
                current.push(x);
                current.push(0);
                rec(group, k, pairs, odd, cap_global, max_len, exceptional, j + 1, current, out);
                current.truncate(current.len() - 2);
            }
        }
    }
    fn finish(
        group: &GroupSpec,
        odd: bool,
        exceptional: &[Vec<u64>],
        current: &[u64],
        out: &mut Vec<Vec<u64>>,
    ) {
        let body: Vec<u64> = if odd {
            debug_assert_eq!(current.last(), Some(&0));
            current[..current.len() - 1].to_vec()
        } else {
            current.to_vec()
        };
        if body.windows(2).any(|p| p[0] < p[1]) {
            return;
        }
        if !is_admissible(group, &body) {
            return;
        }
        if exceptional.iter().any(|e| e[..] == body[..]) {
            return;
        }
        out.push(current.to_vec());
    }
    rec(
        group,
        k,
        pairs,
        odd,
        cap_global,
        max_len,
        &exceptional,
        0,
        &mut current,
        &mut out,
    );
    out.sort();
    out.dedup();
    out
}

/// Count of equal pairs `l_{2j-1} = l_{2j}`.
fn equal_pairs(l: &[u64]) -> u32 {
    l.chunks(2).filter(|c| c[0] == c[1]).count() as u32
}

/// Product of the sphere bounds over the odd positions `2j-1` for
/// `j = from..=to` (1-based pairs).
fn n_product(group: &GroupSpec, l: &[u64], from: usize, to: usize) -> BigInt {
    let mut acc = BigInt::one();
    for j in from..=to {
        acc *= sphere_bound(group, l[2 * j - 2]);
    }
    acc
}

/// Pathological coefficient of one even profile (u = 2m), per unit of the
/// ordering count of k.
pub fn delta_even(group: &GroupSpec, l: &[u64]) -> (BigRational, u64) {
    let m = l.len() / 2;
    let p = equal_pairs(l);
    let mut c = rat::big(&(multiset_orderings(l) * n_product(group, l, 2, m)));
    c *= pow2(p as i64 - m as i64);
    (c, l.iter().sum())
}

/// Pathological coefficient of one odd profile serving `u = 2m - 1` (tuple
/// length `2m` with trailing zero).
pub fn delta_odd_low(group: &GroupSpec, l: &[u64]) -> (BigRational, u64) {
    let m = l.len() / 2;
    let p = equal_pairs(l);
    let mut c = rat::big(&(multiset_orderings(l) * n_product(group, l, 2, m - 1)));
    c *= pow2(p as i64 - m as i64);
    c /= rat::int(2 * m as i64);
    (c, l.iter().sum())
}

/// Pathological coefficient of one odd profile serving `u = 2m + 1` (tuple
/// length `2m + 2` with trailing zero).
pub fn delta_odd_high(group: &GroupSpec, l: &[u64]) -> (BigRational, u64) {
    let mp1 = l.len() / 2;
    let m = mp1 - 1;
    let p = equal_pairs(l);
    let mut c = rat::big(&(multiset_orderings(l) * n_product(group, l, 2, mp1)));
    c *= pow2(p as i64 - m as i64);
    c /= rat::int(4 * (m as i64 + 1));
    (c, l.iter().sum())
}

fn pow2(e: i64) -> BigRational {
    if e >= 0 {
        rat::big(&BigInt::from(2u32).pow(e as u32))
    } else {
        BigRational::new(BigInt::one(), BigInt::from(2u32).pow((-e) as u32))
    }
}

/// Contributions of the exceptional-case bounds: one record per bound term
/// with the source profile, the sum index `u`, the target profile and the
/// coefficient.
pub struct EpsilonContribution {
    pub source: Vec<u64>,
    pub u: u64,
    pub target: Vec<u64>,
    pub terms: RTerms,
}

pub fn epsilon_contributions(group: &GroupSpec) -> Result<Vec<EpsilonContribution>> {
    let mut out = Vec::new();
    let cases = match group {
        GroupSpec::Free { n } if *n >= 3 => {
            // General-rank pathological profiles use the parametrized bounds;
            // collected separately by the caller.
            let _ = n;
            Vec::new()
        }
        _ => epsilon::routing_cases(group)?,
    };
    for case in cases {
        let u = case.lengths.len() as u64;
        for term in &case.bound {
            let target = alpha_target(term);
            let mut terms = RTerms::new();
            terms.push_const(term.coef()?, term.rpow);
            out.push(EpsilonContribution {
                source: case.lengths.clone(),
                u,
                target,
                terms,
            });
        }
    }
    Ok(out)
}

/// The profile an alpha-term contributes to: its non-unit factors with
/// multiplicity, sorted non-increasing.
pub fn alpha_target(term: &AlphaTerm) -> Vec<u64> {
    let mut t = Vec::new();
    for &(k, e) in &term.alpha {
        if k > 0 {
            for _ in 0..e {
                t.push(k);
            }
        }
    }
    t.sort_unstable_by(|a, b| b.cmp(a));
    t
}

/// Ordering count of the padded profile as a polynomial in `s`:
/// `binom(s, m) * M(core)`.
pub fn right_side_poly(k: &[u64]) -> RationalPoly {
    crate::poly::binom_s(k.len() as u64).scale(&rat::big(&multiset_orderings(k)))
}

/// Ordering count of the padded profile at a concrete `s`.
pub fn right_side_value(k: &[u64], s: u64) -> BigRational {
    rat::big(&(rat::binomial(s, k.len() as u64) * multiset_orderings(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::binom_2s;

    #[test]
    fn gamma_weight_polys_match_factorials() {
        for m in 2..=6u64 {
            for (kind, u) in [
                (GammaKind::Even, 2 * m),
                (GammaKind::OddLow, 2 * m - 1),
                (GammaKind::OddHigh, 2 * m + 1),
            ] {
                if kind == GammaKind::OddLow && m < 3 {
                    continue;
                }
                let poly = gamma_weight_poly(m, kind);
                let b = binom_2s(u);
                for s in m..=(m + 6) {
                    let expect = b.eval(&rat::int(s as i64))
                        * BigRational::new(
                            factorial(u) * factorial(s - m),
                            match kind {
                                GammaKind::Even => factorial(m),
                                GammaKind::OddLow => factorial(m - 1),
                                GammaKind::OddHigh => factorial(m + 1),
                            } * factorial(s),
                        );
                    assert_eq!(poly.eval(&rat::int(s as i64)), expect, "m={m} u={u} s={s}");
                }
            }
        }
    }

    #[test]
    fn delta_formulas_reproduce_all_ones_profiles() {
        // For k = (1,..,1) in the rank-2 free group the three finite sums
        // take the known closed shapes.
        let f2 = GroupSpec::free(2).unwrap();
        for m in 2..=5usize {
            let k = vec![1u64; m];
            let even = pathological_profiles_even(&f2, &k, &[]);
            let expect: Vec<Vec<u64>> = (0..)
                .map(|i| 2 * i + 1)
                .take_while(|&l| l <= 2 * m as u64 - 1)
                .map(|l| {
                    let mut v = vec![l];
                    v.extend(std::iter::repeat(1).take(2 * m - 1));
                    v.sort_unstable_by(|a, b| b.cmp(a));
                    v
                })
                .collect();
            let mut expect = expect;
            expect.sort();
            assert_eq!(even, expect, "m={m}");
            for l in &even {
                let (c, rpow) = delta_even(&f2, l);
                let ell = l[0].max(1);
                if *l == vec![1u64; 2 * m] {
                    assert_eq!(c, rat::big(&BigInt::from(4u32).pow(m as u32 - 1)));
                    assert_eq!(rpow, 2 * m as u64);
                } else {
                    assert_eq!(
                        c,
                        rat::int(m as i64) * rat::big(&BigInt::from(4u32).pow(m as u32 - 1))
                    );
                    assert_eq!(rpow, 2 * m as u64 - 1 + ell);
                }
            }
        }
    }

    #[test]
    fn delta_odd_profiles_for_all_ones() {
        let f2 = GroupSpec::free(2).unwrap();
        let k = vec![1u64; 3];
        // u = 2m - 1 = 5: profiles (l,1,1,1,1,0), l in {2,4}.
        let low = pathological_profiles_odd(&f2, &k, 3, &[]);
        assert_eq!(low, vec![vec![2, 1, 1, 1, 1, 0], vec![4, 1, 1, 1, 1, 0]]);
        for l in &low {
            let (c, rpow) = delta_odd_low(&f2, l);
            assert_eq!(c, rat::int(5));
            assert_eq!(rpow, 4 + l[0]);
        }
        // u = 2m + 1 = 7: profiles (l,1,1,1,1,1,1,0), l in {2,4,6}.
        let high = pathological_profiles_odd(&f2, &k, 4, &[]);
        assert_eq!(
            high,
            vec![
                vec![2, 1, 1, 1, 1, 1, 1, 0],
                vec![4, 1, 1, 1, 1, 1, 1, 0],
                vec![6, 1, 1, 1, 1, 1, 1, 0]
            ]
        );
        for l in &high {
            let (c, rpow) = delta_odd_high(&f2, l);
            assert_eq!(c, rat::int(112));
            assert_eq!(rpow, 6 + l[0]);
        }
    }

    #[test]
    fn exceptional_exclusion() {
        let f2 = GroupSpec::free(2).unwrap();
        let with = pathological_profiles_even(&f2, &[1, 1], &[]);
        assert_eq!(with, vec![vec![1, 1, 1, 1], vec![3, 1, 1, 1]]);
        let without = pathological_profiles_even(&f2, &[1, 1], &crate::sums::epsilon::exceptional_profiles(&f2));
        assert!(without.is_empty());
        // (2,1): only (4,2,1,1) survives the exclusion.
        let without = pathological_profiles_even(&f2, &[2, 1], &crate::sums::epsilon::exceptional_profiles(&f2));
        assert_eq!(without, vec![vec![4, 2, 1, 1]]);
    }

    #[test]
    fn cyclic_profile_sets_depend_on_order() {
        let z6 = GroupSpec::cyclic(6).unwrap();
        let set = pathological_profiles_even(&z6, &[1, 1], &[]);
        assert_eq!(set, vec![vec![1, 1, 1, 1], vec![3, 1, 1, 1]]);
        let z8 = GroupSpec::cyclic(8).unwrap();
        let odd = pathological_profiles_odd(&z8, &[1, 1], 3, &[]);
        assert_eq!(odd, vec![vec![2, 1, 1, 1, 1, 0], vec![4, 1, 1, 1, 1, 0]]);
        let z6_odd = pathological_profiles_odd(&z6, &[1, 1], 3, &[]);
        assert_eq!(z6_odd, vec![vec![2, 1, 1, 1, 1, 0]]);
    }

    #[test]
    fn triple_unit_tables() {
        let f2 = GroupSpec::free(2).unwrap();
        let t = triple_unit_coefficient(&f2, 2).unwrap();
        assert_eq!(t.terms.len(), 2);
        let z9 = GroupSpec::cyclic(9).unwrap();
        let t = triple_unit_coefficient(&z9, 4).unwrap();
        assert_eq!(t.terms[0].1, 8);
        assert_eq!(t.terms[0].0.coeff(0), rat::int(15));
    }
}
