//! Exact expansion of the length-profile sums: all tuples `(g_1 .. g_u)` of
//! non-identity elements with prescribed length multiset and product equal to
//! the identity, aggregated into collapsed-variable monomials.

use num::rational::BigRational;
use num::One;
use rayon::prelude::*;
use std::collections::BTreeMap;

use super::symbolic::{Monomial, SymbolicSum, VarId};
use crate::groups::{invert, length, multiply, sphere, GroupSpec, Sphere, Word};
use crate::{Error, Result};

const TUPLE_BUDGET: u128 = 100_000_000;

/// Sphere cache for the distinct lengths of a profile.
pub struct Spheres {
    pub group: GroupSpec,
    by_len: BTreeMap<u64, Sphere>,
}

impl Spheres {
    pub fn for_lengths(group: &GroupSpec, lengths: &[u64]) -> Result<Self> {
        let mut by_len = BTreeMap::new();
        for &l in lengths {
            if !by_len.contains_key(&l) {
                by_len.insert(l, sphere(group, l)?);
            }
        }
        Ok(Spheres {
            group: *group,
            by_len,
        })
    }

    pub fn get(&self, l: u64) -> &Sphere {
        &self.by_len[&l]
    }

    /// Variable id of a word (1-based index among the collapsed pairs).
    pub fn var_of(&self, w: &Word) -> VarId {
        let l = length(&self.group, w);
        let s = self.get(l);
        VarId::new(l, s.var_of_word[w] as u32 + 1)
    }
}

/// Distinct orderings of a length multiset.
pub fn distinct_orderings(lengths: &[u64]) -> Vec<Vec<u64>> {
    let mut sorted = lengths.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    fn rec(remaining: &mut Vec<u64>, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining.is_empty() {
            out.push(cur.clone());
            return;
        }
        let mut last: Option<u64> = None;
        for i in 0..remaining.len() {
            let v = remaining[i];
            if last == Some(v) {
                continue;
            }
            last = Some(v);
            remaining.remove(i);
            cur.push(v);
            rec(remaining, cur, out);
            cur.pop();
            remaining.insert(i, v);
        }
    }
    rec(&mut sorted, &mut Vec::new(), &mut out);
    out
}

fn check_preconditions(group: &GroupSpec, lengths: &[u64]) -> Result<()> {
    if lengths.len() < 2 {
        return Err(Error::OutOfRange("profiles need at least two entries".into()));
    }
    if lengths.iter().any(|&l| l == 0) {
        return Err(Error::OutOfRange("profile entries must be >= 1".into()));
    }
    let total: u64 = lengths.iter().sum();
    if let GroupSpec::TriangularLocal { loop_bound } = group {
        if total >= *loop_bound as u64 {
            return Err(Error::LocalModelExceeded {
                total,
                bound: *loop_bound as u64,
            });
        }
    }
    let mut budget: u128 = 1;
    for &l in lengths {
        let n = group.sphere_size(l)?;
        let n: u128 = n.to_string().parse().unwrap_or(u128::MAX);
        budget = budget.saturating_mul(n.max(1));
        if budget > TUPLE_BUDGET {
            return Err(Error::BudgetExceeded(budget));
        }
    }
    Ok(())
}

/// Enumerates all identity-product tuples for one fixed length ordering `d`,
/// starting from a fixed word in the first free slot. The callback receives
/// the slot variables in tuple order.
fn enumerate_fixed_first(
    spheres: &Spheres,
    d: &[u64],
    solve_pos: usize,
    first_free: usize,
    first_word: &Word,
    visit: &mut impl FnMut(&[VarId]),
) {
    let group = &spheres.group;
    let u = d.len();
    let mut slots: Vec<Option<Word>> = vec![None; u];
    slots[first_free] = Some(first_word.clone());

    fn rec(
        spheres: &Spheres,
        d: &[u64],
        solve_pos: usize,
        slots: &mut Vec<Option<Word>>,
        pos: usize,
        visit: &mut impl FnMut(&[VarId]),
    ) {
        let group = &spheres.group;
        let u = d.len();
        if pos == u {
            // Product of the filled slots around the solve position.
            let mut left = group.identity();
            for s in slots[..solve_pos].iter() {
                left = multiply(group, &left, s.as_ref().unwrap()).unwrap();
            }
            let mut right = group.identity();
            for s in slots[solve_pos + 1..].iter() {
                right = multiply(group, &right, s.as_ref().unwrap()).unwrap();
            }
            let solved = multiply(group, &invert(group, &left), &invert(group, &right)).unwrap();
            if length(group, &solved) != d[solve_pos] {
                return;
            }
            let mut vars: Vec<VarId> = Vec::with_capacity(u);
            for (i, s) in slots.iter().enumerate() {
                if i == solve_pos {
                    vars.push(spheres.var_of(&solved));
                } else {
                    vars.push(spheres.var_of(s.as_ref().unwrap()));
                }
            }
            visit(&vars);
            return;
        }
        if slots[pos].is_some() || pos == solve_pos {
            rec(spheres, d, solve_pos, slots, pos + 1, visit);
            return;
        }
        let words: Vec<Word> = spheres.get(d[pos]).words.clone();
        for w in words {
            slots[pos] = Some(w);
            rec(spheres, d, solve_pos, slots, pos + 1, visit);
        }
        slots[pos] = None;
    }
    let _ = group;
    rec(spheres, d, solve_pos, &mut slots, 0, visit);
}

fn solve_position(group: &GroupSpec, d: &[u64]) -> usize {
    // Solve the slot with the largest sphere to cut the enumeration cost.
    let mut best = 0usize;
    let mut best_n = num::BigInt::from(-1);
    for (i, &l) in d.iter().enumerate() {
        let n = group.sphere_size(l).unwrap_or_else(|_| num::BigInt::from(0));
        if n > best_n {
            best_n = n;
            best = i;
        }
    }
    best
}

/// Exact expansion of the profile sum: the sum over all orderings of
/// `lengths` and all identity-product tuples of non-identity elements with
/// those lengths, each contributing the product of its collapsed variables
/// at `r^(sum of lengths)`. With `with_unit` the whole sum is multiplied by
/// the unit coefficient (used by odd-length estimates).
pub fn expand_sum(group: &GroupSpec, lengths: &[u64], with_unit: bool) -> Result<SymbolicSum> {
    check_preconditions(group, lengths)?;
    let spheres = Spheres::for_lengths(group, lengths)?;
    let rpow: u64 = lengths.iter().sum();
    let orderings = distinct_orderings(lengths);

    let partials: Vec<SymbolicSum> = orderings
        .par_iter()
        .flat_map(|d| {
            let solve_pos = solve_position(group, d);
            let first_free = (0..d.len()).find(|&i| i != solve_pos).unwrap();
            let words = spheres.get(d[first_free]).words.clone();
            words
                .into_par_iter()
                .map(|w| {
                    let mut local = SymbolicSum::new();
                    enumerate_fixed_first(&spheres, d, solve_pos, first_free, &w, &mut |vars| {
                        local.add_term(Monomial::from_slots(vars, rpow), BigRational::one());
                    });
                    local
                })
                .collect::<Vec<_>>()
        })
        .collect();

    let mut out = SymbolicSum::new();
    for p in partials {
        out.add(&p);
    }
    if with_unit {
        out = out.times_unit();
    }
    Ok(out)
}

/// Sequential tuple visitor used by certificate generation: the callback
/// receives the slot variables (unit slot first when `with_unit`) and the
/// length ordering of the tuple.
pub fn visit_tuples(
    group: &GroupSpec,
    lengths: &[u64],
    with_unit: bool,
    visit: &mut impl FnMut(&[VarId], &[u64]),
) -> Result<()> {
    check_preconditions(group, lengths)?;
    let spheres = Spheres::for_lengths(group, lengths)?;
    for d in distinct_orderings(lengths) {
        let solve_pos = solve_position(group, &d);
        let first_free = (0..d.len()).find(|&i| i != solve_pos).unwrap();
        let words = spheres.get(d[first_free]).words.clone();
        for w in &words {
            enumerate_fixed_first(&spheres, &d, solve_pos, first_free, w, &mut |vars| {
                if with_unit {
                    let mut all = vec![VarId::unit()];
                    all.extend_from_slice(vars);
                    visit(&all, &d);
                } else {
                    visit(vars, &d);
                }
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn var(len: u64, idx: u32) -> VarId {
        VarId::new(len, idx)
    }

    #[test]
    fn quadruple_of_ones_f2() {
        // 6 (a1(1)^4 + a1(2)^4) + 16 a1(1)^2 a1(2)^2, all at r^4.
        let f2 = GroupSpec::free(2).unwrap();
        let s = expand_sum(&f2, &[1, 1, 1, 1], false).unwrap();
        assert_eq!(s.terms.len(), 3);
        assert_eq!(
            s.terms[&Monomial::new(vec![(var(1, 1), 4)], 4)],
            rat::int(6)
        );
        assert_eq!(
            s.terms[&Monomial::new(vec![(var(1, 2), 4)], 4)],
            rat::int(6)
        );
        assert_eq!(
            s.terms[&Monomial::new(vec![(var(1, 1), 2), (var(1, 2), 2)], 4)],
            rat::int(16)
        );
    }

    #[test]
    fn odd_total_is_empty_in_free_groups() {
        let f2 = GroupSpec::free(2).unwrap();
        let s = expand_sum(&f2, &[1, 1, 1], false).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn sextuple_of_ones_f2() {
        // 20 (a^6 + b^6) + 96 (a^4 b^2 + a^2 b^4) at r^6.
        let f2 = GroupSpec::free(2).unwrap();
        let s = expand_sum(&f2, &[1; 6], false).unwrap();
        assert_eq!(
            s.terms[&Monomial::new(vec![(var(1, 1), 6)], 6)],
            rat::int(20)
        );
        assert_eq!(
            s.terms[&Monomial::new(vec![(var(1, 1), 4), (var(1, 2), 2)], 6)],
            rat::int(96)
        );
    }

    #[test]
    fn profile_order_is_irrelevant_and_grading_holds() {
        let f2 = GroupSpec::free(2).unwrap();
        let a = expand_sum(&f2, &[3, 1, 1, 1], false).unwrap();
        let b = expand_sum(&f2, &[1, 3, 1, 1], false).unwrap();
        assert_eq!(a, b);
        for (m, _) in &a.terms {
            assert_eq!(m.degree(), 4);
            assert_eq!(m.rpow, 6);
        }
        // with_unit bumps the degree by one unit variable.
        let c = expand_sum(&f2, &[2, 1, 1, 1, 1], true).unwrap();
        for (m, _) in &c.terms {
            assert_eq!(m.degree(), 6);
            assert!(m.vars.iter().any(|&(v, _)| v == VarId::unit()));
        }
    }

    #[test]
    fn cyclic_wrap_contributions() {
        // Z5, profile (2,2,1): products g^2 g^2 g^1 can wrap to 5 = 0 mod 5.
        let z5 = GroupSpec::cyclic(5).unwrap();
        let s = expand_sum(&z5, &[2, 2, 1], false).unwrap();
        assert!(!s.is_empty());
        for (m, _) in &s.terms {
            assert_eq!(m.rpow, 5);
        }
        // Z6 with profile (1,1,1): only 3 = 3 wraps would need residue 6 | 3;
        // impossible, so empty.
        let z6 = GroupSpec::cyclic(6).unwrap();
        assert!(expand_sum(&z6, &[1, 1, 1], false).unwrap().is_empty());
        // Z3: 1+1+1 = 3 wraps.
        let z3 = GroupSpec::cyclic(3).unwrap();
        assert!(!expand_sum(&z3, &[1, 1, 1], false).unwrap().is_empty());
    }

    #[test]
    fn budget_guard_trips() {
        let f2 = GroupSpec::free(2).unwrap();
        assert!(matches!(
            expand_sum(&f2, &[12, 12, 12], false),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn triangular_guard_trips() {
        let tri = GroupSpec::triangular_local(16).unwrap();
        assert!(matches!(
            expand_sum(&tri, &[8, 8], false),
            Err(Error::LocalModelExceeded { .. })
        ));
    }

    #[test]
    fn pair_profile_counts_squares() {
        // Profile (k, k): tuples are (g, g^-1), one per element: coefficient
        // 2 on each collapsed pair variable squared (1 on self-inverse).
        let f2 = GroupSpec::free(2).unwrap();
        let s = expand_sum(&f2, &[2, 2], false).unwrap();
        let mass = s.mass();
        assert_eq!(mass, rat::int(12)); // N_2 tuples
        for (m, c) in &s.terms {
            assert_eq!(m.degree(), 2);
            assert_eq!(c, &rat::int(2));
        }
    }
}
