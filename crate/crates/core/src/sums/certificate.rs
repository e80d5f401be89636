//! Square-completion certificates: per-monomial convex combinations of
//! balanced slot bipartitions, each applied through the scaled two-square
//! bound `x y <= (t x^2 + y^2/t) / 2`, checked against a bound expressed in
//! sphere-weight variables.

use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use super::expand::Spheres;
use super::symbolic::{Monomial, SymbolicSum, VarId};
use crate::groups::GroupSpec;
use crate::rat;
use crate::{Error, Result};

/// One product term of a bound: `coef * r^rpow * prod_k alpha_k^e`.
/// Length 0 stands for `alpha_0` (the squared unit coefficient).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaTerm {
    pub coef: String,
    pub rpow: u64,
    pub alpha: Vec<(u64, u32)>,
}

impl AlphaTerm {
    pub fn new(coef: BigRational, rpow: u64, alpha: Vec<(u64, u32)>) -> Self {
        AlphaTerm {
            coef: rat::render(&coef),
            rpow,
            alpha,
        }
    }

    pub fn coef(&self) -> Result<BigRational> {
        rat::parse(&self.coef)
    }
}

/// A bound as a sum of alpha terms.
pub type BoundExpr = Vec<AlphaTerm>;

/// Expands `alpha_k` into squared collapsed variables with the pairing
/// multiplicity (2 per inverse pair, 1 per self-inverse element).
pub fn alpha_expansion(spheres: &Spheres, k: u64) -> SymbolicSum {
    let mut out = SymbolicSum::new();
    if k == 0 {
        out.add_term(
            Monomial::new(vec![(VarId::unit(), 2)], 0),
            BigRational::one(),
        );
        return out;
    }
    let s = spheres.get(k);
    for (vi, &(_, mult)) in s.variables.iter().enumerate() {
        out.add_term(
            Monomial::new(vec![(VarId::new(k, vi as u32 + 1), 2)], 0),
            rat::int(mult as i64),
        );
    }
    out
}

fn times(a: &SymbolicSum, b: &SymbolicSum) -> SymbolicSum {
    let mut out = SymbolicSum::new();
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let mut vars = ma.vars.clone();
            vars.extend(mb.vars.iter().cloned());
            out.add_term(Monomial::new(vars, ma.rpow + mb.rpow), ca * cb);
        }
    }
    out
}

/// Expands a bound into collapsed variables.
pub fn expand_bound(group: &GroupSpec, bound: &BoundExpr) -> Result<SymbolicSum> {
    let mut lengths: Vec<u64> = bound
        .iter()
        .flat_map(|t| t.alpha.iter().map(|&(k, _)| k))
        .filter(|&k| k > 0)
        .collect();
    lengths.sort_unstable();
    lengths.dedup();
    let spheres = Spheres::for_lengths(group, &lengths)?;
    let mut out = SymbolicSum::new();
    for term in bound {
        let mut acc = SymbolicSum::new();
        acc.add_term(Monomial::new(vec![], term.rpow), term.coef()?);
        for &(k, e) in &term.alpha {
            let base = alpha_expansion(&spheres, k);
            for _ in 0..e {
                acc = times(&acc, &base);
            }
        }
        out.add(&acc);
    }
    Ok(out)
}

/// Expansion of a single bound term (used to attribute budgets per term).
pub fn expand_bound_term(group: &GroupSpec, term: &AlphaTerm) -> Result<SymbolicSum> {
    expand_bound(group, &vec![term.clone()])
}

/// One split of a monomial: weight, square scale and the left half of the
/// slot multiset. The right half is the complement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertEntry {
    pub weight: String,
    pub scale: String,
    pub left: Vec<(String, u32)>,
}

impl CertEntry {
    pub fn new(weight: BigRational, scale: BigRational, left: Vec<(VarId, u32)>) -> Self {
        CertEntry {
            weight: rat::render(&weight),
            scale: rat::render(&scale),
            left: left.iter().map(|(v, e)| (v.render(), *e)).collect(),
        }
    }

    pub fn left_vars(&self) -> Result<Vec<(VarId, u32)>> {
        self.left
            .iter()
            .map(|(s, e)| Ok((VarId::parse(s)?, *e)))
            .collect()
    }
}

/// Certificate: per lhs monomial, the list of weighted scaled bipartitions.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct SquareCertificate {
    /// Keyed by canonical monomial rendering.
    pub entries: BTreeMap<String, Vec<CertEntry>>,
}

pub fn monomial_key(m: &Monomial) -> String {
    let vars: Vec<String> = m
        .vars
        .iter()
        .map(|(v, e)| format!("{}^{}", v.render(), e))
        .collect();
    format!("r^{} {}", m.rpow, vars.join(" "))
}

/// Result of a certificate check.
#[derive(Debug, Clone)]
pub struct CertCheck {
    pub ok: bool,
    /// Bound expansion minus certificate consumption; nonnegative iff ok.
    pub residual: SymbolicSum,
}

/// Applies the certificate to every lhs monomial and verifies that the
/// consumed squares stay below the expanded bound coefficientwise.
pub fn check_certificate(
    group: &GroupSpec,
    lhs: &SymbolicSum,
    bound: &BoundExpr,
    cert: &SquareCertificate,
) -> Result<CertCheck> {
    let mut residual = expand_bound(group, bound)?;
    let half = rat::frac(1, 2);
    for (m, c) in &lhs.terms {
        if c.is_negative() {
            return Err(Error::MalformedCertificate(
                "lhs has a negative coefficient".into(),
            ));
        }
        let deg = m.degree();
        if deg % 2 != 0 {
            return Err(Error::MalformedCertificate(format!(
                "odd-degree monomial {}",
                monomial_key(m)
            )));
        }
        let entries = cert
            .entries
            .get(&monomial_key(m))
            .ok_or_else(|| {
                Error::MalformedCertificate(format!("no entry for {}", monomial_key(m)))
            })?;
        let mut weight_sum = BigRational::zero();
        for e in entries {
            let w = rat::parse(&e.weight)?;
            let t = rat::parse(&e.scale)?;
            if !w.is_positive() || !t.is_positive() {
                return Err(Error::MalformedCertificate(
                    "weights and scales must be positive".into(),
                ));
            }
            weight_sum += &w;
            let left = e.left_vars()?;
            let left_deg: u64 = left.iter().map(|&(_, k)| k as u64).sum();
            if left_deg * 2 != deg {
                return Err(Error::MalformedCertificate(format!(
                    "unbalanced bipartition on {}",
                    monomial_key(m)
                )));
            }
            let right = m.minus(&left).ok_or_else(|| {
                Error::MalformedCertificate(format!(
                    "left side is not a sub-multiset of {}",
                    monomial_key(m)
                ))
            })?;
            // x y <= (t x^2 + y^2 / t)/2 applied with mass c w.
            let sq = |half_vars: &[(VarId, u32)]| {
                Monomial::new(
                    half_vars.iter().map(|&(v, k)| (v, 2 * k)).collect(),
                    m.rpow,
                )
            };
            residual.add_term(sq(&left), -(c * &w * &t * &half));
            residual.add_term(sq(&right), -(c * &w * &half / &t));
        }
        if weight_sum != BigRational::one() {
            return Err(Error::MalformedCertificate(format!(
                "weights sum to {} on {}",
                weight_sum,
                monomial_key(m)
            )));
        }
    }
    let ok = residual.is_nonneg();
    Ok(CertCheck { ok, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sums::expand::expand_sum;

    #[test]
    fn identity_certificate_on_even_square() {
        // lhs: quadruples of length-1 letters in F2; bound 2 r^4 alpha_1^2.
        let f2 = GroupSpec::free(2).unwrap();
        let lhs = expand_sum(&f2, &[1, 1, 1, 1], false).unwrap();
        let bound = vec![AlphaTerm::new(rat::int(2), 4, vec![(1, 2)])];
        let mut cert = SquareCertificate::default();
        for (m, _) in &lhs.terms {
            // Halve every exponent.
            let left: Vec<(VarId, u32)> = m.vars.iter().map(|&(v, e)| (v, e / 2)).collect();
            cert.entries.insert(
                monomial_key(m),
                vec![CertEntry::new(BigRational::one(), BigRational::one(), left)],
            );
        }
        let check = check_certificate(&f2, &lhs, &bound, &cert).unwrap();
        assert!(check.ok);
        // Residual 2 a^4 + 2 b^4 as in the hand computation.
        let a4 = Monomial::new(vec![(VarId::new(1, 1), 4)], 4);
        assert_eq!(check.residual.terms[&a4], rat::int(2));
        let cross = Monomial::new(vec![(VarId::new(1, 1), 2), (VarId::new(1, 2), 2)], 4);
        assert!(!check.residual.terms.contains_key(&cross));
    }

    #[test]
    fn zero_lhs_passes_any_nonneg_bound() {
        let f2 = GroupSpec::free(2).unwrap();
        let lhs = SymbolicSum::new();
        let bound = vec![AlphaTerm::new(rat::int(1), 2, vec![(1, 1)])];
        let check = check_certificate(&f2, &lhs, &bound, &SquareCertificate::default()).unwrap();
        assert!(check.ok);
    }

    #[test]
    fn malformed_certificates_are_rejected() {
        let f2 = GroupSpec::free(2).unwrap();
        let lhs = expand_sum(&f2, &[1, 1, 1, 1], false).unwrap();
        let bound = vec![AlphaTerm::new(rat::int(2), 4, vec![(1, 2)])];
        // Unbalanced split.
        let mut cert = SquareCertificate::default();
        for (m, _) in &lhs.terms {
            cert.entries.insert(
                monomial_key(m),
                vec![CertEntry::new(
                    BigRational::one(),
                    BigRational::one(),
                    vec![(m.vars[0].0, 1)],
                )],
            );
        }
        // Some monomials have degree 4 with left degree 1: unbalanced.
        assert!(matches!(
            check_certificate(&f2, &lhs, &bound, &cert),
            Err(Error::MalformedCertificate(_))
        ));
        // Weights not summing to one.
        let mut cert = SquareCertificate::default();
        for (m, _) in &lhs.terms {
            let left: Vec<(VarId, u32)> = m.vars.iter().map(|&(v, e)| (v, e / 2)).collect();
            cert.entries.insert(
                monomial_key(m),
                vec![CertEntry::new(rat::frac(1, 2), BigRational::one(), left)],
            );
        }
        assert!(matches!(
            check_certificate(&f2, &lhs, &bound, &cert),
            Err(Error::MalformedCertificate(_))
        ));
    }

    #[test]
    fn alpha_multiplicities_respect_self_inverse_elements() {
        // Triangular radius 3: 6 palindromes (mult 1) + 3 pairs (mult 2).
        let tri = GroupSpec::triangular_local(16).unwrap();
        let spheres = Spheres::for_lengths(&tri, &[3]).unwrap();
        let alpha = alpha_expansion(&spheres, 3);
        let mass = alpha.mass();
        assert_eq!(mass, rat::int(12)); // sums multiplicities = N_3
        let ones = alpha.terms.values().filter(|c| **c == rat::int(1)).count();
        let twos = alpha.terms.values().filter(|c| **c == rat::int(2)).count();
        assert_eq!((ones, twos), (6, 3));
    }
}
