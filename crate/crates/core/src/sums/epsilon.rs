//! Data tables for the exceptional-profile estimates: for each family, the
//! finitely many length profiles that need bespoke square completions, with
//! their proved bounds in sphere-weight variables.

use num::rational::BigRational;

use super::certificate::{AlphaTerm, BoundExpr};
use crate::groups::GroupSpec;
use crate::rat::{self, factorial};
use crate::{Error, Result};

/// Split rule used to generate the stored certificate for a case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitRule {
    /// Even monomials split into equal halves; odd monomials spread uniformly
    /// over all balanced bipartitions whose squares land in the bound.
    EvenAndUniform,
    /// The unit pairs with the length-2 variable; the two letters of that
    /// variable's word pair with each other; the remaining length-1 letters
    /// (even per variable) split in half.
    UnitPairByWord,
    /// Unit-septuple rule: unit opposite the length-2 slot with square scale
    /// 1/2 and majority-based assignment of the six length-1 letters.
    UnitOppositeHalf,
    /// Tuple-level rule: the unit, the first largest slot and the last slot
    /// (in stable sorted order) form one half.
    UnitSortedLast,
    /// Like `EvenAndUniform` but odd monomials use the scaled two-square
    /// bound with the fixed scale `num/den` (shifting mass onto the left
    /// square).
    ScaledUniform { num: i64, den: i64 },
    /// Quadruples with one long slot and three short letters: the repeated
    /// short letter pairs with itself, keeping the cross-square free.
    MajorityPair,
}

/// One exceptional case: profile, bound and certificate generation rule.
#[derive(Debug, Clone)]
pub struct EpsilonCase {
    pub id: String,
    pub lengths: Vec<u64>,
    pub with_unit: bool,
    pub bound: BoundExpr,
    pub rule: SplitRule,
}

fn term(coef: BigRational, rpow: u64, alpha: Vec<(u64, u32)>) -> AlphaTerm {
    AlphaTerm::new(coef, rpow, alpha)
}

/// The 14 exceptional bounds for the rank-2 free group.
pub fn f2_cases() -> Vec<EpsilonCase> {
    use SplitRule::*;
    let c = |id: &str, lengths: Vec<u64>, with_unit: bool, bound: BoundExpr, rule: SplitRule| {
        EpsilonCase {
            id: id.into(),
            lengths,
            with_unit,
            bound,
            rule,
        }
    };
    vec![
        c("eps-f2-1", vec![1, 1, 1, 1], false,
          vec![term(rat::int(2), 4, vec![(1, 2)])], EvenAndUniform),
        c("eps-f2-2", vec![3, 1, 1, 1], false,
          vec![term(rat::int(9), 6, vec![(1, 2)]), term(rat::int(1), 6, vec![(1, 1), (3, 1)])],
          MajorityPair),
        c("eps-f2-3", vec![2, 2, 1, 1], false,
          vec![term(rat::int(13), 6, vec![(1, 1), (2, 1)])], EvenAndUniform),
        c("eps-f2-4", vec![3, 2, 2, 1], false,
          vec![term(rat::int(72), 8, vec![(1, 1), (3, 1)]), term(rat::int(24), 8, vec![(2, 2)])],
          EvenAndUniform),
        c("eps-f2-5", vec![5, 2, 2, 1], false,
          vec![term(rat::int(72), 10, vec![(1, 1), (5, 1)]), term(rat::int(24), 10, vec![(2, 2)])],
          EvenAndUniform),
        c("eps-f2-6", vec![5, 3, 3, 1], false,
          vec![term(rat::int(216), 12, vec![(1, 1), (5, 1)]), term(rat::int(24), 12, vec![(3, 2)])],
          EvenAndUniform),
        c("eps-f2-7", vec![4, 3, 2, 1], false,
          vec![term(rat::int(144), 10, vec![(1, 1), (4, 1)]), term(rat::int(48), 10, vec![(2, 1), (3, 1)])],
          EvenAndUniform),
        c("eps-f2-8", vec![2, 2, 2, 2], false,
          vec![term(rat::int(12), 8, vec![(2, 2)])], EvenAndUniform),
        c("eps-f2-9", vec![2, 1, 1, 1, 1], true,
          vec![term(rat::frac(15, 2), 6, vec![(0, 1), (1, 1), (2, 1)]),
               term(rat::frac(65, 12), 6, vec![(1, 3)])],
          UnitPairByWord),
        c("eps-f2-10", vec![3, 2, 1, 1, 1], true,
          vec![term(rat::int(160), 8, vec![(0, 1), (2, 1), (3, 1)]),
               term(rat::int(120), 8, vec![(1, 3)])],
          EvenAndUniform),
        c("eps-f2-11", vec![2, 2, 2, 1, 1], true,
          vec![term(rat::int(240), 8, vec![(0, 1), (1, 1), (2, 1)]),
               term(rat::int(20), 8, vec![(1, 1), (2, 2)])],
          EvenAndUniform),
        c("eps-f2-12", vec![1; 6], false,
          vec![term(rat::int(4), 6, vec![(1, 3)])], EvenAndUniform),
        c("eps-f2-13", vec![2, 1, 1, 1, 1, 1, 1], true,
          vec![term(rat::frac(735, 16), 8, vec![(0, 1), (1, 3)]),
               term(rat::frac(525, 32), 8, vec![(1, 3), (2, 1)])],
          UnitOppositeHalf),
        c("eps-f2-14", vec![1; 8], false,
          vec![term(rat::frac(29, 3), 8, vec![(1, 4)])], EvenAndUniform),
    ]
}

/// The 4 exceptional bounds for the triangular local model.
pub fn triangular_cases() -> Vec<EpsilonCase> {
    use SplitRule::*;
    vec![
        EpsilonCase {
            id: "eps-tri-i".into(),
            lengths: vec![1, 1, 1, 1],
            with_unit: false,
            bound: vec![term(rat::int(2), 4, vec![(1, 2)])],
            rule: EvenAndUniform,
        },
        EpsilonCase {
            id: "eps-tri-ii".into(),
            lengths: vec![3, 1, 1, 1],
            with_unit: false,
            bound: vec![
                term(rat::int(3), 6, vec![(1, 2)]),
                term(rat::int(1), 6, vec![(1, 1), (3, 1)]),
            ],
            rule: EvenAndUniform,
        },
        EpsilonCase {
            id: "eps-tri-iii".into(),
            lengths: vec![2, 1, 1, 1, 1],
            with_unit: true,
            bound: vec![
                term(rat::frac(45, 2), 6, vec![(0, 1), (1, 1), (2, 1)]),
                term(rat::frac(15, 2), 6, vec![(1, 3)]),
            ],
            rule: UnitSortedLast,
        },
        EpsilonCase {
            id: "eps-tri-iv".into(),
            lengths: vec![1; 6],
            with_unit: false,
            bound: vec![term(rat::int(5), 6, vec![(1, 3)])],
            rule: EvenAndUniform,
        },
    ]
}

/// Exceptional bounds for the cyclic group of order `n >= 6`.
pub fn cyclic_cases(n: u32) -> Result<Vec<EpsilonCase>> {
    use SplitRule::*;
    if n < 6 {
        return Err(Error::OutOfRange("cyclic cases need n >= 6".into()));
    }
    let three_one_coef = if n == 6 { rat::int(2) } else { rat::int(1) };
    Ok(vec![
        EpsilonCase {
            id: format!("eps-z{n}-i"),
            lengths: vec![1, 1, 1, 1],
            with_unit: false,
            bound: vec![term(rat::frac(3, 2), 4, vec![(1, 2)])],
            rule: EvenAndUniform,
        },
        EpsilonCase {
            id: format!("eps-z{n}-ii"),
            lengths: vec![3, 1, 1, 1],
            with_unit: false,
            bound: vec![
                term(rat::int(1), 6, vec![(1, 2)]),
                term(three_one_coef, 6, vec![(1, 1), (3, 1)]),
            ],
            rule: EvenAndUniform,
        },
    ])
}

/// General-rank exceptional bounds (`eps'`): the all-ones even profile and
/// the `(2,1,..,1)` odd profile, with Catalan-type constants.
pub fn general_rank_cases(n: u32, m: u64) -> Result<Vec<EpsilonCase>> {
    use SplitRule::*;
    if n < 2 || m < 2 {
        return Err(Error::OutOfRange("needs n >= 2 and m >= 2".into()));
    }
    let catalan = rat::big(&crate::combinatorics::catalan(m));
    // 3 (2m+1)! / (2 (m-1)! (m+2)!) and half of it times n(2n-1).
    let base = BigRational::new(
        num::BigInt::from(3) * factorial(2 * m + 1),
        num::BigInt::from(2) * factorial(m - 1) * factorial(m + 2),
    );
    let with_growth = &base * rat::frac((n as i64) * (2 * n as i64 - 1), 2);
    let ones = vec![1u64; 2 * m as usize];
    let eps1 = EpsilonCase {
        id: format!("eps-gen-f{n}-m{m}-even"),
        lengths: ones.clone(),
        with_unit: false,
        bound: vec![term(catalan, 2 * m, vec![(1, m as u32)])],
        rule: EvenAndUniform,
    };
    let eps2 = EpsilonCase {
        id: format!("eps-gen-f{n}-m{m}-odd"),
        lengths: {
            let mut l = vec![2u64];
            l.extend(std::iter::repeat(1).take(2 * m as usize));
            l
        },
        with_unit: true,
        bound: vec![
            term(base, 2 * m + 2, vec![(0, 1), (1, m as u32 - 1), (2, 1)]),
            term(with_growth, 2 * m + 2, vec![(1, m as u32 + 1)]),
        ],
        rule: UnitPairByWord,
    };
    Ok(vec![eps1, eps2])
}

/// Sharper replacement bound for the quintuple profile `(3,2,1,1,1)` in the
/// rank-2 free group, used by the pathological routing: the scaled
/// completion trades the coarse all-ones constant down to 56 at the cost of
/// a larger mixed constant, which the mixed test can absorb.
pub fn f2_refined_quintuple() -> EpsilonCase {
    EpsilonCase {
        id: "eps-f2-10r".into(),
        lengths: vec![3, 2, 1, 1, 1],
        with_unit: true,
        bound: vec![
            term(rat::int(200), 8, vec![(0, 1), (2, 1), (3, 1)]),
            term(rat::int(56), 8, vec![(1, 3)]),
        ],
        rule: SplitRule::ScaledUniform { num: 5, den: 4 },
    }
}

/// The cases used by the pathological routing (the published list with the
/// refined quintuple bound swapped in for the rank-2 free group).
pub fn routing_cases(group: &GroupSpec) -> Result<Vec<EpsilonCase>> {
    let mut cases = cases_for(group)?;
    if matches!(group, GroupSpec::Free { n: 2 }) {
        for case in &mut cases {
            if case.lengths == [3, 2, 1, 1, 1] {
                *case = f2_refined_quintuple();
            }
        }
    }
    Ok(cases)
}

/// Exceptional profile sets `B_u` per family (profiles excluded from the
/// generic pathological sums and covered by the bounds above instead).
pub fn exceptional_profiles(group: &GroupSpec) -> Vec<Vec<u64>> {
    match group {
        GroupSpec::Free { n: 2 } => f2_cases().into_iter().map(|c| c.lengths).collect(),
        GroupSpec::Free { .. } => Vec::new(),
        GroupSpec::TriangularLocal { .. } => {
            triangular_cases().into_iter().map(|c| c.lengths).collect()
        }
        GroupSpec::Cyclic { n } => cyclic_cases(*n)
            .map(|cs| cs.into_iter().map(|c| c.lengths).collect())
            .unwrap_or_default(),
    }
}

/// All cases for a family (used by the certificate suite).
pub fn cases_for(group: &GroupSpec) -> Result<Vec<EpsilonCase>> {
    match group {
        GroupSpec::Free { n: 2 } => Ok(f2_cases()),
        GroupSpec::TriangularLocal { .. } => Ok(triangular_cases()),
        GroupSpec::Cyclic { n } => cyclic_cases(*n),
        GroupSpec::Free { .. } => Err(Error::OutOfRange(
            "general-rank cases are parametrized; use general_rank_cases".into(),
        )),
    }
}
