//! Length-tuple combinatorics: ordering multiplicities, partition profiles,
//! admissible length profiles per family, Catalan counts and identity-product
//! ordering counts.

use num::bigint::BigInt;
use num::{One, Zero};
use std::collections::{BTreeMap, HashSet};

use crate::groups::{multiply, GroupSpec, Word};
use crate::rat::{binomial, factorial};
use crate::{Error, Result};

/// A non-increasing tuple of lengths, stored unpadded with an explicit
/// padded length (trailing zeros are implicit).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LengthTuple {
    entries: Vec<u64>,
    padded_len: u64,
}

impl LengthTuple {
    /// Builds a tuple; trailing zeros in `entries` are folded into the
    /// padding.
    pub fn new(mut entries: Vec<u64>, padded_len: u64) -> Result<Self> {
        if entries.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::OutOfRange("entries must be non-increasing".into()));
        }
        while entries.last() == Some(&0) {
            entries.pop();
        }
        if (entries.len() as u64) > padded_len {
            return Err(Error::OutOfRange(
                "padded length shorter than the nonzero part".into(),
            ));
        }
        Ok(LengthTuple {
            entries,
            padded_len,
        })
    }

    /// Tuple without padding (padded length = number of entries).
    pub fn unpadded(entries: Vec<u64>) -> Result<Self> {
        let len = entries.len() as u64;
        Self::new(entries, len)
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn padded_len(&self) -> u64 {
        self.padded_len
    }

    /// Number of nonzero entries (the index `m` with `k_m != 0 = k_{m+1}`).
    pub fn nonzero_len(&self) -> u64 {
        self.entries.len() as u64
    }

    /// Sum of the entries.
    pub fn total(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// Number of distinct orderings of the padded tuple.
    pub fn multiplicity(&self) -> BigInt {
        let mut padded: Vec<u64> = self.entries.clone();
        padded.resize(self.padded_len as usize, 0);
        multiset_orderings(&padded)
    }
}

/// Number of distinct orderings of an arbitrary value multiset:
/// `u! / prod(block!)` over blocks of equal values.
pub fn multiset_orderings(values: &[u64]) -> BigInt {
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for &v in values {
        *counts.entry(v).or_insert(0) += 1;
    }
    let mut acc = factorial(values.len() as u64);
    for (_, c) in counts {
        acc /= factorial(c);
    }
    acc
}

/// Profile `j` where `j[i-1]` counts the blocks of equal entries of size `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionProfile(pub Vec<u64>);

impl PartitionProfile {
    /// Total tuple length recovered from the profile.
    pub fn tuple_len(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &j)| (i as u64 + 1) * j)
            .sum()
    }
}

/// Partition profile of a value sequence (equal values form one block).
pub fn partition_profile(values: &[u64]) -> PartitionProfile {
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for &v in values {
        *counts.entry(v).or_insert(0) += 1;
    }
    let mut j = vec![0u64; values.len()];
    for (_, c) in counts {
        j[c as usize - 1] += 1;
    }
    PartitionProfile(j)
}

/// Multiplicity via the profile formula `u! * prod 1/(i!)^(j_i)`.
pub fn multiplicity_from_profile(u: u64, profile: &PartitionProfile) -> BigInt {
    let mut acc = factorial(u);
    for (i, &j) in profile.0.iter().enumerate() {
        for _ in 0..j {
            acc /= factorial(i as u64 + 1);
        }
    }
    acc
}

/// m-th Catalan number `(2m)! / (m! (m+1)!)`.
pub fn catalan(m: u64) -> BigInt {
    factorial(2 * m) / (factorial(m) * factorial(m + 1))
}

/// Number of non-crossing pair partitions of `2(m+1)` points in which the
/// first two points are not paired together: `C(m+1) - C(m)`, which also
/// equals `3 (2m)! / ((m-1)! (m+2)!)`.
pub fn tilde_catalan(m_plus_1: u64) -> Result<BigInt> {
    if m_plus_1 < 2 {
        return Err(Error::OutOfRange("needs m + 1 >= 2".into()));
    }
    let m = m_plus_1 - 1;
    let diff = catalan(m + 1) - catalan(m);
    let closed = BigInt::from(3u32) * factorial(2 * m) / (factorial(m - 1) * factorial(m + 2));
    debug_assert_eq!(diff, closed);
    Ok(diff)
}

/// Whether signs `e_j = +-1` exist with `n | sum e_j l_j` (reachable-residue
/// dynamic program over `Z_n`).
pub fn signed_divisibility(n: u64, entries: &[u64]) -> bool {
    let mut reach: HashSet<u64> = HashSet::new();
    reach.insert(0);
    for &l in entries {
        let l = l % n;
        let mut next = HashSet::with_capacity(reach.len() * 2);
        for &r in &reach {
            next.insert((r + l) % n);
            next.insert((r + n - l) % n);
        }
        reach = next;
    }
    reach.contains(&0)
}

/// Admissibility of a length profile for the family: entries non-increasing
/// and >= 1, the largest entry dominated by the sum of the others, plus the
/// family refinement (even total for free/triangular; entry cap and sign
/// divisibility for cyclic).
pub fn is_admissible(group: &GroupSpec, entries: &[u64]) -> bool {
    if entries.len() < 2 {
        return false;
    }
    if entries.windows(2).any(|p| p[0] < p[1]) {
        return false;
    }
    if entries.iter().any(|&l| l == 0) {
        return false;
    }
    let total: u64 = entries.iter().sum();
    if entries[0] > total - entries[0] {
        return false;
    }
    if group.even_total_only() && total % 2 != 0 {
        return false;
    }
    if let GroupSpec::Cyclic { n } = group {
        let n = *n as u64;
        if entries.iter().any(|&l| 2 * l > n) {
            return false;
        }
        if !signed_divisibility(n, entries) {
            return false;
        }
    }
    true
}

/// All admissible u-profiles with total <= `cap`, ordered by (total, entries).
/// Enumerations for smaller caps are prefixes of those for larger caps.
pub fn admissible_tuples(group: &GroupSpec, u: u64, cap: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(u as usize);
    fn rec(
        group: &GroupSpec,
        u: u64,
        cap: u64,
        max_entry: u64,
        current: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if current.len() as u64 == u {
            if is_admissible(group, current) {
                out.push(current.clone());
            }
            return;
        }
        let used: u64 = current.iter().sum();
        let remaining = (u - current.len() as u64).max(1);
        for l in 1..=max_entry {
            // Leave room for the remaining entries (each >= 1 but <= l).
            if used + l + (remaining - 1) > cap {
                break;
            }
            current.push(l);
            rec(group, u, cap, l, current, out);
            current.pop();
        }
    }
    let max_first = group.max_length().unwrap_or(cap).min(cap);
    rec(group, u, cap, max_first, &mut current, &mut out);
    out.sort_by_key(|t| (t.iter().sum::<u64>(), t.clone()));
    out
}

/// Exact count of orderings of an inverse-closed letter multiset whose
/// product is the identity.
///
/// Without `prefix`, the multiset contains `pair_counts[i]` copies of the
/// generator `c_{i+1}` and as many of its inverse. With `prefix = (k, l)` the
/// product starts with the fixed two-letter word `c_k c_l` and the multiset
/// additionally contains one extra inverse of each of `c_k` and `c_l`.
pub fn count_identity_orderings(
    group: &GroupSpec,
    pair_counts: &[u64],
    prefix: Option<(u32, u32)>,
) -> Result<BigInt> {
    let n = match group {
        GroupSpec::Free { n } => *n,
        _ => {
            return Err(Error::OutOfRange(
                "identity-ordering counts are defined for free groups".into(),
            ))
        }
    };
    if pair_counts.len() as u32 > n {
        return Err(Error::OutOfRange("more generators than the group has".into()));
    }
    // letter -> remaining count
    let mut counts: BTreeMap<i16, u64> = BTreeMap::new();
    for (i, &j) in pair_counts.iter().enumerate() {
        if j > 0 {
            let g = (i + 1) as i16;
            counts.insert(g, j);
            counts.insert(-g, j);
        }
    }
    let mut start = group.identity();
    if let Some((k, l)) = prefix {
        if k == 0 || l == 0 || k > n || l > n {
            return Err(Error::OutOfRange("prefix generator out of range".into()));
        }
        start = multiply(
            group,
            &Word::Letters(vec![k as i16]),
            &Word::Letters(vec![l as i16]),
        )?;
        *counts.entry(-(k as i16)).or_insert(0) += 1;
        *counts.entry(-(l as i16)).or_insert(0) += 1;
    }
    let total: u64 = counts.values().sum();
    if total > 12 {
        return Err(Error::BudgetExceeded(total as u128));
    }
    fn rec(
        group: &GroupSpec,
        counts: &mut BTreeMap<i16, u64>,
        acc: &Word,
        remaining: u64,
    ) -> BigInt {
        if remaining == 0 {
            return if *acc == group.identity() {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        let letters: Vec<i16> = counts
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(&l, _)| l)
            .collect();
        let mut total = BigInt::zero();
        for l in letters {
            // Prune: a reduced word longer than the remaining letters cannot
            // cancel back to the identity.
            let next = multiply(group, acc, &Word::Letters(vec![l])).unwrap();
            let len = match &next {
                Word::Letters(ls) => ls.len() as u64,
                _ => 0,
            };
            if len > remaining - 1 {
                continue;
            }
            *counts.get_mut(&l).unwrap() -= 1;
            total += rec(group, counts, &next, remaining - 1);
            *counts.get_mut(&l).unwrap() += 1;
        }
        total
    }
    Ok(rec(group, &mut counts.clone(), &start, total))
}

/// Largest normalized identity-ordering count over all generator profiles of
/// mass m: `max_j A(j) / multinomial(m; j)` (generators drawn from the first
/// `n_gens`).
pub fn max_normalized_identity_count(group: &GroupSpec, n_gens: u32, m: u64) -> Result<BigInt> {
    let mut best = BigInt::zero();
    for j in compositions(m, n_gens as u64) {
        let count = count_identity_orderings(group, &j, None)?;
        let multi = multinomial(m, &j);
        // A(j)/multinomial is an integer for these counts; compare exactly.
        let normalized = &count / &multi;
        debug_assert_eq!(&normalized * &multi, count);
        if normalized > best {
            best = normalized;
        }
    }
    Ok(best)
}

/// All ways to write `m` as an ordered sum of `parts` non-negative integers.
pub fn compositions(m: u64, parts: u64) -> Vec<Vec<u64>> {
    if parts == 0 {
        return if m == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=m {
        for mut rest in compositions(m - first, parts - 1) {
            let mut v = vec![first];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

pub fn multinomial(m: u64, parts: &[u64]) -> BigInt {
    debug_assert_eq!(parts.iter().sum::<u64>(), m);
    let mut acc = factorial(m);
    for &p in parts {
        acc /= factorial(p);
    }
    acc
}

/// `binom(2m, m) * M(k_1..k_m)` equals the ordering count of the tuple
/// extended by m extra entries of a fresh value.
pub fn extended_multiplicity(entries: &[u64]) -> BigInt {
    let m = entries.len() as u64;
    binomial(2 * m, m) * multiset_orderings(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force ordering count: all index permutations, distinct value
    /// sequences collected in a set.
    fn brute_orderings(values: &[u64]) -> BigInt {
        fn perms(values: &[u64], cur: &mut Vec<u64>, used: &mut Vec<bool>, out: &mut HashSet<Vec<u64>>) {
            if cur.len() == values.len() {
                out.insert(cur.clone());
                return;
            }
            for i in 0..values.len() {
                if !used[i] {
                    used[i] = true;
                    cur.push(values[i]);
                    perms(values, cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = HashSet::new();
        perms(values, &mut Vec::new(), &mut vec![false; values.len()], &mut out);
        BigInt::from(out.len())
    }

    #[test]
    fn multiplicity_examples() {
        let t = LengthTuple::unpadded(vec![1, 1]).unwrap();
        assert_eq!(t.multiplicity(), BigInt::one());
        let t = LengthTuple::unpadded(vec![2, 1, 1]).unwrap();
        assert_eq!(t.multiplicity(), BigInt::from(3));
        let t = LengthTuple::unpadded(vec![4, 3, 2, 1]).unwrap();
        assert_eq!(t.multiplicity(), BigInt::from(24));
        // One nonzero entry among s slots.
        let t = LengthTuple::new(vec![3], 7).unwrap();
        assert_eq!(t.multiplicity(), BigInt::from(7));
        // Empty tuple.
        let t = LengthTuple::new(vec![], 0).unwrap();
        assert_eq!(t.multiplicity(), BigInt::one());
    }

    #[test]
    fn multiplicity_matches_brute_force() {
        // All non-increasing tuples with up to 7 entries valued in 0..=4.
        fn gen(len: usize, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if cur.len() == len {
                out.push(cur.clone());
                return;
            }
            let hi = cur.last().copied().unwrap_or(max);
            for v in 0..=hi {
                cur.push(v);
                gen(len, max, cur, out);
                cur.pop();
            }
        }
        for len in 1..=7usize {
            let mut tuples = Vec::new();
            gen(len, 4, &mut Vec::new(), &mut tuples);
            for t in tuples {
                let mut sorted = t.clone();
                sorted.sort_unstable_by(|a, b| b.cmp(a));
                assert_eq!(
                    multiset_orderings(&sorted),
                    brute_orderings(&sorted),
                    "tuple {sorted:?}"
                );
                // Profile formula agrees.
                let profile = partition_profile(&sorted);
                assert_eq!(
                    multiplicity_from_profile(sorted.len() as u64, &profile),
                    multiset_orderings(&sorted)
                );
            }
        }
    }

    #[test]
    fn profile_examples() {
        assert_eq!(partition_profile(&[2, 1, 1]).0, vec![1, 1, 0]);
        assert_eq!(partition_profile(&[5, 5, 5]).0, vec![0, 0, 1]);
        assert_eq!(partition_profile(&[]).0, Vec::<u64>::new());
        assert_eq!(partition_profile(&[2, 1, 1]).tuple_len(), 3);
    }

    #[test]
    fn extended_multiplicity_identity() {
        // Orderings of (k_1..k_m, m fresh values) = binom(2m, m) M(k_1..k_m).
        fn gen(len: usize, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if cur.len() == len {
                out.push(cur.clone());
                return;
            }
            let hi = cur.last().copied().unwrap_or(max);
            for v in 1..=hi {
                cur.push(v);
                gen(len, max, cur, out);
                cur.pop();
            }
        }
        for m in 1..=5usize {
            let mut tuples = Vec::new();
            gen(m, 3, &mut Vec::new(), &mut tuples);
            for t in tuples {
                // Extend with the fresh value 1000 (distinct from entries).
                let mut ext = t.clone();
                ext.extend(std::iter::repeat(1000).take(m));
                ext.sort_unstable_by(|a, b| b.cmp(a));
                assert_eq!(multiset_orderings(&ext), extended_multiplicity(&t));
            }
        }
    }

    #[test]
    fn admissibility_examples() {
        let f2 = GroupSpec::free(2).unwrap();
        assert!(is_admissible(&f2, &[2, 1, 1]));
        assert!(!is_admissible(&f2, &[1, 1, 1])); // odd total
        assert!(!is_admissible(&f2, &[5, 1, 1, 1])); // dominated-entry rule
        let z6 = GroupSpec::cyclic(6).unwrap();
        assert!(is_admissible(&z6, &[3, 2, 1])); // 6 | 3+2+1
        assert!(!is_admissible(&z6, &[4, 2, 1])); // entry above n/2
        assert!(is_admissible(&z6, &[2, 1, 1])); // 2-1-1 = 0
        assert!(!is_admissible(&z6, &[2, 2, 1])); // all sign sums odd
    }

    #[test]
    fn admissible_enumeration_is_cap_monotone() {
        let f2 = GroupSpec::free(2).unwrap();
        let small = admissible_tuples(&f2, 4, 8);
        let large = admissible_tuples(&f2, 4, 12);
        assert_eq!(&large[..small.len()], &small[..]);
        assert!(small.contains(&vec![1, 1, 1, 1]));
        assert!(small.contains(&vec![3, 1, 1, 1]));
        let z6 = GroupSpec::cyclic(6).unwrap();
        let tuples = admissible_tuples(&z6, 3, 9);
        assert_eq!(tuples, vec![vec![2, 1, 1], vec![2, 2, 2], vec![3, 2, 1]]);
    }

    /// Non-crossing pair partitions of 1..2m, counted directly.
    fn brute_non_crossing(m: u64) -> BigInt {
        fn rec(points: &[u64]) -> BigInt {
            if points.is_empty() {
                return BigInt::one();
            }
            let first = points[0];
            let mut acc = BigInt::zero();
            for (i, &p) in points.iter().enumerate().skip(1) {
                let _ = p;
                if i % 2 == 1 {
                    let inner = &points[1..i];
                    let outer = &points[i + 1..];
                    acc += rec(inner) * rec(outer);
                }
                let _ = first;
            }
            acc
        }
        let pts: Vec<u64> = (1..=2 * m).collect();
        rec(&pts)
    }

    #[test]
    fn catalan_counts_non_crossing_pairings() {
        assert_eq!(catalan(1), BigInt::one());
        assert_eq!(catalan(3), BigInt::from(5));
        for m in 1..=6 {
            assert_eq!(catalan(m), brute_non_crossing(m));
        }
        assert_eq!(tilde_catalan(3).unwrap(), BigInt::from(3));
        for m in 2..=6 {
            assert_eq!(tilde_catalan(m).unwrap(), catalan(m) - catalan(m - 1));
        }
    }

    #[test]
    fn identity_ordering_counts() {
        let f2 = GroupSpec::free(2).unwrap();
        // One inverse pair: (c, c^-1) and (c^-1, c).
        assert_eq!(
            count_identity_orderings(&f2, &[1], None).unwrap(),
            BigInt::from(2)
        );
        // Two distinct pairs: normalized count hits 2^2 C(2) = 8.
        let a = count_identity_orderings(&f2, &[1, 1], None).unwrap();
        assert_eq!(a, BigInt::from(16));
        assert_eq!(
            max_normalized_identity_count(&f2, 2, 2).unwrap(),
            BigInt::from(8)
        );
        // Three distinct pairs in F3: equality 2^3 C(3) = 40.
        let f3 = GroupSpec::free(3).unwrap();
        let a = count_identity_orderings(&f3, &[1, 1, 1], None).unwrap();
        assert_eq!(a, BigInt::from(40) * multinomial(3, &[1, 1, 1]));
        assert_eq!(
            max_normalized_identity_count(&f3, 3, 3).unwrap(),
            BigInt::from(40)
        );
    }

    #[test]
    fn signed_divisibility_dp() {
        assert!(signed_divisibility(6, &[3, 2, 1]));
        assert!(signed_divisibility(6, &[2, 1, 1]));
        assert!(!signed_divisibility(6, &[2, 2, 1]));
        assert!(signed_divisibility(5, &[2, 2, 1]));
    }
}
