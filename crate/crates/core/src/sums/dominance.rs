//! Statistical backstop for certificates: evaluate both sides of a claimed
//! domination at seeded random nonnegative rational points and report any
//! violation exactly.

use num::rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};

use super::certificate::{expand_bound, BoundExpr};
use super::symbolic::{SymbolicSum, VarId};
use crate::groups::GroupSpec;
use crate::rat;
use crate::Result;

#[derive(Debug, Clone)]
pub struct DominanceViolation {
    pub assignment: Vec<(String, String)>,
    pub r: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone)]
pub struct DominanceReport {
    pub trials: u64,
    pub violations: u64,
    pub first_violations: Vec<DominanceViolation>,
}

impl DominanceReport {
    pub fn ok(&self) -> bool {
        self.violations == 0
    }
}

/// Evaluates `lhs <= bound` at `trials` random points with nonnegative
/// rational coordinates and `r` in `(0, 1]`.
pub fn random_dominance_test(
    group: &GroupSpec,
    lhs: &SymbolicSum,
    bound: &BoundExpr,
    trials: u64,
    seed: u64,
) -> Result<DominanceReport> {
    let bound_exp = expand_bound(group, bound)?;
    let mut vars: BTreeSet<VarId> = BTreeSet::new();
    for m in lhs.terms.keys().chain(bound_exp.terms.keys()) {
        for &(v, _) in &m.vars {
            vars.insert(v);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0;
    let mut first = Vec::new();
    for _ in 0..trials {
        let mut assign: BTreeMap<VarId, BigRational> = BTreeMap::new();
        for &v in &vars {
            assign.insert(v, rat::frac(rng.gen_range(0..=16), 8));
        }
        let r = rat::frac(rng.gen_range(1..=16), 16);
        let l = lhs.eval(&assign, &r);
        let b = bound_exp.eval(&assign, &r);
        if l > b {
            violations += 1;
            if first.len() < 5 {
                first.push(DominanceViolation {
                    assignment: assign
                        .iter()
                        .map(|(v, x)| (v.render(), rat::render(x)))
                        .collect(),
                    r: rat::render(&r),
                    lhs: rat::render(&l),
                    rhs: rat::render(&b),
                });
            }
        }
    }
    Ok(DominanceReport {
        trials,
        violations,
        first_violations: first,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sums::certificate::AlphaTerm;
    use crate::sums::expand::expand_sum;

    #[test]
    fn equal_sides_never_violate() {
        let f2 = GroupSpec::free(2).unwrap();
        let lhs = expand_sum(&f2, &[1, 1, 1, 1], false).unwrap();
        let bound = vec![AlphaTerm::new(rat::int(2), 4, vec![(1, 2)])];
        let rep = random_dominance_test(&f2, &lhs, &bound, 2000, 7).unwrap();
        assert!(rep.ok());
    }

    #[test]
    fn halved_bound_is_caught() {
        let f2 = GroupSpec::free(2).unwrap();
        let lhs = expand_sum(&f2, &[1, 1, 1, 1], false).unwrap();
        let bound = vec![AlphaTerm::new(rat::int(1), 4, vec![(1, 2)])];
        let rep = random_dominance_test(&f2, &lhs, &bound, 2000, 7).unwrap();
        assert!(!rep.ok());
        assert!(!rep.first_violations.is_empty());
    }
}
