//! Exact multivariate sums in collapsed Fourier-coefficient variables.
//!
//! A variable `a_k(i)` stands for the common coefficient of the i-th inverse
//! pair (or self-inverse element) on the sphere of radius k; `a_0(1)` is the
//! unit coefficient. Monomials carry an explicit power of the decay
//! parameter `r`.

use num::rational::BigRational;
use num::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::rat;
use crate::{Error, Result};

/// Collapsed variable identifier: sphere radius and 1-based pair index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    pub len: u64,
    pub idx: u32,
}

impl VarId {
    pub fn new(len: u64, idx: u32) -> Self {
        VarId { len, idx }
    }

    /// The unit coefficient `a_0`.
    pub fn unit() -> Self {
        VarId { len: 0, idx: 1 }
    }

    pub fn render(&self) -> String {
        format!("{}:{}", self.len, self.idx)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (l, i) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("bad variable id {s:?}")))?;
        Ok(VarId {
            len: l
                .parse()
                .map_err(|_| Error::Parse(format!("bad length in {s:?}")))?,
            idx: i
                .parse()
                .map_err(|_| Error::Parse(format!("bad index in {s:?}")))?,
        })
    }
}

/// Sorted multiset of variables with positive exponents plus an r-power.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub vars: Vec<(VarId, u32)>,
    pub rpow: u64,
}

impl Monomial {
    pub fn new(mut vars: Vec<(VarId, u32)>, rpow: u64) -> Self {
        vars.retain(|&(_, e)| e > 0);
        vars.sort();
        // merge duplicates
        let mut merged: Vec<(VarId, u32)> = Vec::with_capacity(vars.len());
        for (v, e) in vars {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { vars: merged, rpow }
    }

    /// From an unsorted slot list (each slot one variable occurrence).
    pub fn from_slots(slots: &[VarId], rpow: u64) -> Self {
        Monomial::new(slots.iter().map(|&v| (v, 1)).collect(), rpow)
    }

    /// Total degree in the a-variables.
    pub fn degree(&self) -> u64 {
        self.vars.iter().map(|&(_, e)| e as u64).sum()
    }

    /// Expanded slot list (variables with multiplicity).
    pub fn slots(&self) -> Vec<VarId> {
        let mut out = Vec::with_capacity(self.degree() as usize);
        for &(v, e) in &self.vars {
            for _ in 0..e {
                out.push(v);
            }
        }
        out
    }

    /// Squares a half-monomial: doubles every exponent, keeps the r-power.
    pub fn squared_from_slots(slots: &[VarId], rpow: u64) -> Self {
        Monomial::new(slots.iter().map(|&v| (v, 2)).collect(), rpow)
    }

    /// Removes `sub` (a sub-multiset) returning the complement, if possible.
    pub fn minus(&self, sub: &[(VarId, u32)]) -> Option<Vec<(VarId, u32)>> {
        let mut rest: BTreeMap<VarId, u32> = self.vars.iter().cloned().collect();
        for &(v, e) in sub {
            let slot = rest.get_mut(&v)?;
            if *slot < e {
                return None;
            }
            *slot -= e;
            if *slot == 0 {
                rest.remove(&v);
            }
        }
        Some(rest.into_iter().collect())
    }
}

/// Exact sum of monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolicSum {
    pub terms: BTreeMap<Monomial, BigRational>,
}

impl SymbolicSum {
    pub fn new() -> Self {
        SymbolicSum {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            // keep the map free of zeros
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&mut self, other: &SymbolicSum) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub(&mut self, other: &SymbolicSum) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }

    pub fn scale(&self, c: &BigRational) -> SymbolicSum {
        let mut out = SymbolicSum::new();
        for (m, k) in &self.terms {
            out.add_term(m.clone(), k * c);
        }
        out
    }

    /// Multiplies every monomial by the unit variable `a_0`.
    pub fn times_unit(&self) -> SymbolicSum {
        let mut out = SymbolicSum::new();
        for (m, c) in &self.terms {
            let mut vars = m.vars.clone();
            vars.push((VarId::unit(), 1));
            out.add_term(Monomial::new(vars, m.rpow), c.clone());
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonneg(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Sum of all coefficients (value at every variable = 1, r = 1).
    pub fn mass(&self) -> BigRational {
        self.terms.values().sum()
    }

    /// Evaluates at a variable assignment and a value of `r`.
    pub fn eval(&self, assign: &BTreeMap<VarId, BigRational>, r: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for &(var, e) in &m.vars {
                let x = assign.get(&var).cloned().unwrap_or_else(BigRational::zero);
                for _ in 0..e {
                    v *= &x;
                }
            }
            for _ in 0..m.rpow {
                v *= r;
            }
            acc += v;
        }
        acc
    }

    /// Canonical JSON: monomials in map order, coefficients as strings.
    pub fn to_canonical_json(&self) -> String {
        let mut out = String::from("[");
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                out.push(',');
            }
            first = false;
            out.push_str("{\"vars\":[");
            for (i, (v, e)) in m.vars.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(out, "[\"{}\",{}]", v.render(), e);
            }
            let _ = write!(out, "],\"rpow\":{},\"coef\":\"{}\"}}", m.rpow, rat::render(c));
        }
        out.push(']');
        out
    }

    pub fn from_canonical_json(s: &str) -> Result<Self> {
        let val: serde_json::Value =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let arr = val
            .as_array()
            .ok_or_else(|| Error::Parse("expected array".into()))?;
        let mut out = SymbolicSum::new();
        for item in arr {
            let vars = item["vars"]
                .as_array()
                .ok_or_else(|| Error::Parse("missing vars".into()))?
                .iter()
                .map(|pair| {
                    let id = VarId::parse(
                        pair[0]
                            .as_str()
                            .ok_or_else(|| Error::Parse("bad var".into()))?,
                    )?;
                    let e = pair[1]
                        .as_u64()
                        .ok_or_else(|| Error::Parse("bad exponent".into()))?
                        as u32;
                    Ok((id, e))
                })
                .collect::<Result<Vec<_>>>()?;
            let rpow = item["rpow"]
                .as_u64()
                .ok_or_else(|| Error::Parse("missing rpow".into()))?;
            let coef = rat::parse(
                item["coef"]
                    .as_str()
                    .ok_or_else(|| Error::Parse("missing coef".into()))?,
            )?;
            out.add_term(Monomial::new(vars, rpow), coef);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_json_roundtrip() {
        let mut s = SymbolicSum::new();
        s.add_term(
            Monomial::new(vec![(VarId::new(1, 1), 4)], 4),
            rat::int(6),
        );
        s.add_term(
            Monomial::new(vec![(VarId::new(1, 1), 2), (VarId::new(1, 2), 2)], 4),
            rat::int(16),
        );
        let json = s.to_canonical_json();
        assert!(json.contains("\"1:1\""));
        assert_eq!(SymbolicSum::from_canonical_json(&json).unwrap(), s);
    }

    #[test]
    fn monomial_normalization() {
        let a = Monomial::new(vec![(VarId::new(1, 2), 1), (VarId::new(1, 1), 1), (VarId::new(1, 2), 1)], 2);
        let b = Monomial::from_slots(&[VarId::new(1, 1), VarId::new(1, 2), VarId::new(1, 2)], 2);
        assert_eq!(a, b);
        assert_eq!(a.degree(), 3);
        assert_eq!(a.minus(&[(VarId::new(1, 2), 2)]).unwrap(), vec![(VarId::new(1, 1), 1)]);
        assert!(a.minus(&[(VarId::new(1, 2), 3)]).is_none());
    }
}
