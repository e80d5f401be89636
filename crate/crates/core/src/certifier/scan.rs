//! The pathological scan: for every profile below the critical threshold,
//! assemble the finite left coefficient from the stated closed forms and
//! test it against the ordering count, exactly, for every admissible `s`.
//! Profiles that fail with the generic coefficients are super-pathological;
//! re-testing with the exceptional-set refinement closes all but the one
//! hand-patched case.

use num::bigint::BigInt;

use super::coeffs::{
    delta_even, delta_odd_high, delta_odd_low, epsilon_contributions,
    pathological_profiles_even, pathological_profiles_odd, right_side_poly,
};
use super::critical::critical_for;
use crate::combinatorics::multiset_orderings;
use crate::groups::GroupSpec;
use crate::poly::{binom_2s, ext_verify_nonneg, RTerms, Verdict};
use crate::rat;
use crate::{Error, Result};

/// How the left coefficient of a pathological profile is assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MarginMode {
    /// The generic scan: stated pair-coefficient tables (with the geometric
    /// tail for triangular groups) and the full finite sums.
    GenericScan,
    /// Refined: exact finite pair sums; exceptional profiles on the family's
    /// route assignment are replaced by their proved bounds, the rest keep
    /// the finite-sum route.
    Patched,
}

/// The family's fixed splitting choice: which exceptional profiles take the
/// proved square-completion bound instead of the generic finite sum. One
/// global assignment keeps the per-profile accounting consistent across all
/// tested profiles.
pub fn epsilon_routed_profiles(group: &GroupSpec) -> Vec<Vec<u64>> {
    crate::sums::epsilon::exceptional_profiles(group)
}

/// Pair coefficient of the triple sums for a two-part profile, together
/// with the power of the positive factor `(1 - r^2)` that clears its
/// denominator. The generic scan uses the closed tables; refined modes use
/// the exact finite sums.
fn triple_pair_part(
    group: &GroupSpec,
    k1: u64,
    k2: u64,
    mode: MarginMode,
) -> Result<(RTerms, u64)> {
    let mut t = RTerms::new();
    let m_pair = rat::big(&multiset_orderings(&[k1, k2]));
    if mode != MarginMode::GenericScan {
        // Exact finite pair sums for every family.
        for piece in crate::sums::s3::triple_coefficients(group, k1, k2)? {
            t.push_const(piece.pair_coef, piece.rpow);
        }
        return Ok((t, 0));
    }
    match group {
        GroupSpec::Free { .. } => {
            for mp in 0..=k2 / 2 {
                t.push_const(rat::frac(3, 2) * &m_pair, 2 * (k1 + k2 - mp));
            }
            Ok((t, 0))
        }
        GroupSpec::TriangularLocal { .. } => {
            // Geometric tail: every occurring exponent is >= k1 + k2 + 2.
            t.push_const(rat::frac(3, 2) * &m_pair, k1 + k2 + 2);
            Ok((t, 1))
        }
        GroupSpec::Cyclic { n } => {
            let n = *n as u64;
            match (k1, k2) {
                (1, 1) => t.push_const(rat::frac(3, 2), 4),
                (2, 1) => t.push_const(rat::int(3), 6),
                (3, 1) => t.push_const(rat::int(3), 8),
                (2, 2) if n == 6 => t.push_const(rat::frac(1, 4), 6),
                (2, 2) if n == 7 => t.push_const(rat::frac(3, 4), 7),
                (2, 2) => t.push_const(rat::frac(3, 2), 8),
                _ => t.push_const(rat::frac(3, 2) * &m_pair, k1 + k2 + 2),
            }
            Ok((t, 0))
        }
    }
}

/// Left coefficient of a pathological profile (without the triple-sum
/// denominator): `(triple pair part, its denominator power, delta parts plus
/// exceptional refinements)`.
fn left_parts_with_routes(
    group: &GroupSpec,
    k: &[u64],
    mode: MarginMode,
    routed: &[Vec<u64>],
) -> Result<(RTerms, u64, RTerms)> {
    let m = k.len();
    let routed: Vec<Vec<u64>> = if mode == MarginMode::Patched {
        routed.to_vec()
    } else {
        Vec::new()
    };
    let mut pair_part = RTerms::new();
    let mut denom_pow = 0u64;
    let mut rest = RTerms::new();

    if m == 2 {
        let (pair, dp) = triple_pair_part(group, k[0], k[1], mode)?;
        denom_pow = dp;
        pair_part.add(&pair.mul_poly(&binom_2s(3)));
    } else {
        let mut sum = RTerms::new();
        for l in pathological_profiles_odd(group, k, m, &routed) {
            let (c, rpow) = delta_odd_low(group, &l);
            sum.push_const(c, rpow);
        }
        rest.add(&sum.mul_poly(&binom_2s(2 * m as u64 - 1)));
    }

    let mut even_sum = RTerms::new();
    for l in pathological_profiles_even(group, k, &routed) {
        let (c, rpow) = delta_even(group, &l);
        even_sum.push_const(c, rpow);
    }
    rest.add(&even_sum.mul_poly(&binom_2s(2 * m as u64)));

    let mut high_sum = RTerms::new();
    for l in pathological_profiles_odd(group, k, m + 1, &routed) {
        let (c, rpow) = delta_odd_high(group, &l);
        high_sum.push_const(c, rpow);
    }
    rest.add(&high_sum.mul_poly(&binom_2s(2 * m as u64 + 1)));

    if mode == MarginMode::Patched {
        for contrib in epsilon_contributions(group)? {
            if contrib.target[..] == k[..] && routed.iter().any(|l| l[..] == contrib.source[..]) {
                rest.add(&contrib.terms.mul_poly(&binom_2s(contrib.u)));
            }
        }
    }
    Ok((pair_part, denom_pow, rest))
}

/// Assembled right-minus-left margin for a pathological profile, multiplied
/// by the positive clearing factor `(1 - r^2)^e` where the family's pair
/// coefficient carries a denominator. Nonnegative margin = the profile
/// passes.
pub fn pathological_margin(group: &GroupSpec, k: &[u64], mode: MarginMode) -> Result<RTerms> {
    pathological_margin_with_routes(group, k, mode, &epsilon_routed_profiles(group))
}

/// Margin under an explicit route assignment (exposed for assignment
/// analysis; `pathological_margin` applies the family default).
pub fn pathological_margin_with_routes(
    group: &GroupSpec,
    k: &[u64],
    mode: MarginMode,
    routed: &[Vec<u64>],
) -> Result<RTerms> {
    if k.len() < 2 {
        return Err(Error::OutOfRange("pathological profiles have m >= 2".into()));
    }
    let (pair_part, denom_pow, rest) = left_parts_with_routes(group, k, mode, routed)?;
    let mut margin = RTerms::new();
    if denom_pow == 0 {
        margin.push(right_side_poly(k), 0);
        margin.add(&pair_part.negate());
        margin.add(&rest.negate());
        return Ok(margin);
    }
    let mut clearing = RTerms::new();
    clearing.push_const(rat::int(1), 0);
    for _ in 0..denom_pow {
        let mut f = RTerms::new();
        f.push_const(rat::int(1), 0);
        f.push_const(rat::int(-1), 2);
        clearing = clearing.mul(&f);
    }
    margin.add(&clearing.mul_poly(&right_side_poly(k)));
    margin.add(&pair_part.negate());
    margin.add(&rest.mul(&clearing).negate());
    Ok(margin)
}

/// Decides a margin's nonnegativity over admissible `s` for the family.
pub fn margin_verdict(group: &GroupSpec, margin: &RTerms, s_min: u64) -> Result<Verdict> {
    if let GroupSpec::Cyclic { n } = group {
        if n % 2 == 1 {
            // q <= n for odd orders: finite exact evaluation.
            let s_max = (*n as u64) / 2;
            for s in s_min..=s_max {
                if margin.eval_at_q(2 * s).sign() < 0 {
                    return Ok(Verdict::Fails {
                        witness: BigInt::from(s),
                    });
                }
            }
            return Ok(Verdict::Holds);
        }
    }
    let (ext, _) = margin.clear();
    ext_verify_nonneg(&ext, &BigInt::from(s_min))
}

/// Refined verdict for a super-pathological profile under the family's
/// route assignment.
pub fn refined_verdict(group: &GroupSpec, profile: &[u64], s_min: u64) -> Result<Verdict> {
    let margin = pathological_margin(group, profile, MarginMode::Patched)?;
    margin_verdict(group, &margin, s_min)
}

/// All profiles below the critical threshold for one part count.
pub fn pathological_profiles(group: &GroupSpec, m: u64) -> Result<Vec<Vec<u64>>> {
    let critical = critical_for(group)?;
    let mu = critical.value(m);
    let cap = m + mu; // profiles have total < cap
    let max_entry = group.max_length().unwrap_or(cap);
    let mut out = Vec::new();
    fn rec(
        m: u64,
        remaining_total: u64,
        max_entry: u64,
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if cur.len() as u64 == m {
            out.push(cur.clone());
            return;
        }
        let slots_left = m - cur.len() as u64;
        let hi = cur.last().copied().unwrap_or(max_entry).min(max_entry);
        for v in 1..=hi {
            if v + (slots_left - 1) > remaining_total {
                break;
            }
            cur.push(v);
            rec(m, remaining_total - v, max_entry, cur, out);
            cur.pop();
        }
    }
    if cap > m {
        rec(m, cap - 1, max_entry, &mut Vec::new(), &mut out);
    }
    out.sort_by_key(|k| (k.iter().sum::<u64>(), k.clone()));
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct ProfileVerdict {
    pub profile: Vec<u64>,
    pub generic: Verdict,
    pub patched: Option<Verdict>,
}

#[derive(Debug, Clone)]
pub struct ScanOutcome {
    pub group: GroupSpec,
    pub verdicts: Vec<ProfileVerdict>,
    /// Profiles failing with the generic pathological coefficients.
    pub super_pathological: Vec<Vec<u64>>,
}

/// Runs the full finite scan for the family: every profile below the
/// critical threshold, for every part count below the hand-proved tail.
/// Profiles are checked in parallel; the outcome order is canonical.
pub fn pathological_scan(group: &GroupSpec) -> Result<ScanOutcome> {
    use rayon::prelude::*;
    let critical = critical_for(group)?;
    let mut work: Vec<(u64, Vec<u64>)> = Vec::new();
    for m in 2..critical.tail_start() {
        for profile in pathological_profiles(group, m)? {
            work.push((m, profile));
        }
    }
    let verdicts: Vec<ProfileVerdict> = work
        .into_par_iter()
        .map(|(m, profile)| {
            let s_min = m.max(2);
            let margin = pathological_margin(group, &profile, MarginMode::GenericScan)?;
            let generic = margin_verdict(group, &margin, s_min)?;
            let patched = if generic.holds() {
                None
            } else {
                Some(refined_verdict(group, &profile, s_min)?)
            };
            Ok(ProfileVerdict {
                profile,
                generic,
                patched,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let super_pathological = verdicts
        .iter()
        .filter(|v| !v.generic.holds())
        .map(|v| v.profile.clone())
        .collect();
    Ok(ScanOutcome {
        group: *group,
        verdicts,
        super_pathological,
    })
}
