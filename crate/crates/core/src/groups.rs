//! Group families, reduced-word arithmetic and sphere enumeration.
//!
//! Three families are supported: free groups on n generators, triangular
//! groups handled through their local free-product model (three involutive
//! generators, reliable strictly below the smallest loop), and finite cyclic
//! groups. Words are immutable values; every operation is pure.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

use crate::rat;
use crate::{Error, Result};

/// A group family together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GroupSpec {
    /// Free group on `n >= 2` generators with the word length.
    Free { n: u32 },
    /// Triangular group with three involutive generators, modelled as
    /// Z2 * Z2 * Z2 below the loop bound `L = 2 min(alpha, beta, gamma)`.
    #[serde(rename = "triangular_local")]
    TriangularLocal {
        #[serde(rename = "L")]
        loop_bound: u32,
    },
    /// Finite cyclic group of order `n >= 2` with the word length.
    Cyclic { n: u32 },
}

impl GroupSpec {
    pub fn free(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange("free group needs n >= 2".into()));
        }
        Ok(GroupSpec::Free { n })
    }

    pub fn triangular_local(loop_bound: u32) -> Result<Self> {
        if loop_bound < 16 || loop_bound % 2 != 0 {
            return Err(Error::OutOfRange(
                "triangular local model needs an even loop bound L >= 16".into(),
            ));
        }
        Ok(GroupSpec::TriangularLocal { loop_bound })
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange("cyclic group needs n >= 2".into()));
        }
        Ok(GroupSpec::Cyclic { n })
    }

    /// Spectral gap of the word length; 1 for every supported family.
    pub fn spectral_gap(&self) -> BigRational {
        rat::int(1)
    }

    /// Exponential growth ratio used in reports.
    pub fn growth_ratio(&self) -> BigRational {
        match self {
            GroupSpec::Free { n } => rat::int(2 * *n as i64 - 1),
            GroupSpec::TriangularLocal { .. } => rat::int(2),
            GroupSpec::Cyclic { .. } => rat::int(1),
        }
    }

    /// Growth constant `C` with `#{g : |g| <= R} <= C rho^R`.
    pub fn growth_const(&self) -> BigRational {
        match self {
            GroupSpec::Free { n } => rat::frac(*n as i64, *n as i64 - 1),
            GroupSpec::TriangularLocal { .. } => rat::int(3),
            GroupSpec::Cyclic { n } => rat::int(*n as i64),
        }
    }

    /// Critical index: `q(G, psi) = 1 + 1/R^2` for the radius of convergence
    /// `R` of the length series.
    pub fn critical_index(&self) -> u64 {
        match self {
            GroupSpec::Free { n } => {
                let n = *n as u64;
                4 * n * n - 4 * n + 2
            }
            GroupSpec::TriangularLocal { .. } => 5,
            GroupSpec::Cyclic { .. } => 2,
        }
    }

    /// Geometric-series majorant of the length series: `G(r) <= a r / (1 - b r)`,
    /// returned as the pair `(a, b)`. Exact for free groups.
    pub fn growth_series_params(&self) -> (u64, u64) {
        match self {
            GroupSpec::Free { n } => (2 * *n as u64, 2 * *n as u64 - 1),
            GroupSpec::TriangularLocal { .. } => (3, 2),
            GroupSpec::Cyclic { .. } => (2, 1),
        }
    }

    /// Whether admissible length profiles must have even total (true when
    /// every loop has even length).
    pub fn even_total_only(&self) -> bool {
        matches!(self, GroupSpec::Free { .. } | GroupSpec::TriangularLocal { .. })
    }

    /// Largest occurring length, when finite.
    pub fn max_length(&self) -> Option<u64> {
        match self {
            GroupSpec::Cyclic { n } => Some(*n as u64 / 2),
            _ => None,
        }
    }

    /// Identity element.
    pub fn identity(&self) -> Word {
        match self {
            GroupSpec::Cyclic { .. } => Word::Residue(0),
            _ => Word::Letters(Vec::new()),
        }
    }

    /// Number of elements of length `k` (closed form). For the triangular
    /// local model this requires `k < L/2`.
    pub fn sphere_size(&self, k: u64) -> Result<BigInt> {
        if k == 0 {
            return Ok(BigInt::one());
        }
        match self {
            GroupSpec::Free { n } => {
                let n = *n as u64;
                Ok(BigInt::from(2 * n) * BigInt::from(2 * n - 1).pow((k - 1) as u32))
            }
            GroupSpec::TriangularLocal { loop_bound } => {
                if 2 * k >= *loop_bound as u64 {
                    return Err(Error::LocalModelExceeded {
                        total: k,
                        bound: *loop_bound as u64,
                    });
                }
                Ok(BigInt::from(3u32) * BigInt::from(2u32).pow((k - 1) as u32))
            }
            GroupSpec::Cyclic { n } => {
                let n = *n as u64;
                Ok(if 2 * k < n {
                    BigInt::from(2u32)
                } else if 2 * k == n {
                    BigInt::one()
                } else {
                    BigInt::from(0u32)
                })
            }
        }
    }

    /// Upper bound on sphere sizes valid for all `k >= 1`, as `(a, b)` with
    /// `N_k <= a * b^(k-1)`. For free groups this is exact.
    pub fn sphere_bound_params(&self) -> (u64, u64) {
        match self {
            GroupSpec::Free { n } => (2 * *n as u64, 2 * *n as u64 - 1),
            GroupSpec::TriangularLocal { .. } => (3, 2),
            GroupSpec::Cyclic { .. } => (2, 1),
        }
    }
}

/// A reduced group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Word {
    /// Letter sequence; positive values are generators (1-based), negative
    /// values their inverses. Triangular generators are involutions and only
    /// appear with positive sign.
    Letters(Vec<i16>),
    /// Residue in `0..n` for a cyclic group.
    Residue(u32),
}

impl Word {
    pub fn letters(ls: Vec<i16>) -> Self {
        Word::Letters(ls)
    }

    pub fn as_letters(&self) -> Option<&[i16]> {
        match self {
            Word::Letters(ls) => Some(ls),
            Word::Residue(_) => None,
        }
    }
}

/// Checks that a word is reduced and its letters are valid for the group.
pub fn validate(group: &GroupSpec, w: &Word) -> Result<()> {
    match (group, w) {
        (GroupSpec::Free { n }, Word::Letters(ls)) => {
            for &l in ls {
                if l == 0 || l.unsigned_abs() as u32 > *n {
                    return Err(Error::InvalidWord(format!("letter {l} out of range")));
                }
            }
            for pair in ls.windows(2) {
                if pair[0] == -pair[1] {
                    return Err(Error::InvalidWord("adjacent inverse pair".into()));
                }
            }
            Ok(())
        }
        (GroupSpec::TriangularLocal { .. }, Word::Letters(ls)) => {
            for &l in ls {
                if !(1..=3).contains(&l) {
                    return Err(Error::InvalidWord(format!("letter {l} out of range")));
                }
            }
            for pair in ls.windows(2) {
                if pair[0] == pair[1] {
                    return Err(Error::InvalidWord("adjacent equal involution".into()));
                }
            }
            Ok(())
        }
        (GroupSpec::Cyclic { n }, Word::Residue(r)) => {
            if r >= n {
                return Err(Error::InvalidWord(format!("residue {r} out of range")));
            }
            Ok(())
        }
        _ => Err(Error::InvalidWord("word kind does not match group".into())),
    }
}

/// Word length.
pub fn length(group: &GroupSpec, w: &Word) -> u64 {
    match (group, w) {
        (GroupSpec::Cyclic { n }, Word::Residue(r)) => {
            let n = *n as u64;
            let r = *r as u64;
            r.min(n - r)
        }
        (_, Word::Letters(ls)) => ls.len() as u64,
        _ => 0,
    }
}

/// Inverse element.
pub fn invert(group: &GroupSpec, w: &Word) -> Word {
    match (group, w) {
        (GroupSpec::Free { .. }, Word::Letters(ls)) => {
            Word::Letters(ls.iter().rev().map(|l| -l).collect())
        }
        (GroupSpec::TriangularLocal { .. }, Word::Letters(ls)) => {
            Word::Letters(ls.iter().rev().copied().collect())
        }
        (GroupSpec::Cyclic { n }, Word::Residue(r)) => {
            Word::Residue(if *r == 0 { 0 } else { n - r })
        }
        _ => w.clone(),
    }
}

/// Reduced product. For the triangular local model the combined length must
/// stay below the loop bound, otherwise the free-product reduction may be
/// unsound and `LocalModelExceeded` is returned.
pub fn multiply(group: &GroupSpec, w1: &Word, w2: &Word) -> Result<Word> {
    match (group, w1, w2) {
        (GroupSpec::Free { .. }, Word::Letters(a), Word::Letters(b)) => {
            let mut out = a.clone();
            for &l in b {
                if out.last().copied() == Some(-l) {
                    out.pop();
                } else {
                    out.push(l);
                }
            }
            Ok(Word::Letters(out))
        }
        (GroupSpec::TriangularLocal { loop_bound }, Word::Letters(a), Word::Letters(b)) => {
            let total = (a.len() + b.len()) as u64;
            if total >= *loop_bound as u64 {
                return Err(Error::LocalModelExceeded {
                    total,
                    bound: *loop_bound as u64,
                });
            }
            let mut out = a.clone();
            for &l in b {
                if out.last().copied() == Some(l) {
                    out.pop();
                } else {
                    out.push(l);
                }
            }
            Ok(Word::Letters(out))
        }
        (GroupSpec::Cyclic { n }, Word::Residue(a), Word::Residue(b)) => {
            Ok(Word::Residue((a + b) % n))
        }
        _ => Err(Error::InvalidWord("word kind does not match group".into())),
    }
}

/// Lexicographic key with generators ordered before inverses.
fn letter_key(group: &GroupSpec, l: i16) -> u32 {
    let n = match group {
        GroupSpec::Free { n } => *n,
        _ => 3,
    };
    if l > 0 {
        l as u32
    } else {
        n + (-l) as u32
    }
}

fn word_key(group: &GroupSpec, w: &Word) -> Vec<u32> {
    match w {
        Word::Letters(ls) => ls.iter().map(|&l| letter_key(group, l)).collect(),
        Word::Residue(r) => vec![*r],
    }
}

fn self_inverse(group: &GroupSpec, w: &Word) -> bool {
    invert(group, w) == *w
}

/// Enumerates the sphere of radius `k` in canonical order: representatives
/// (the lexicographically smaller element of each inverse pair, generators
/// before inverses) in lexicographic order, followed by the inverses of the
/// non-self-inverse representatives in matching order. For free groups the
/// second half is exactly the elementwise inverse of the first half.
pub fn enumerate_sphere(group: &GroupSpec, k: u64) -> Result<Vec<Word>> {
    if k == 0 {
        return Ok(vec![group.identity()]);
    }
    let mut all: Vec<Word> = Vec::new();
    match group {
        GroupSpec::Free { n } => {
            let letters: Vec<i16> = (1..=*n as i16).chain((1..=*n as i16).map(|l| -l)).collect();
            let mut stack: Vec<Vec<i16>> = vec![Vec::new()];
            for _ in 0..k {
                let mut next = Vec::new();
                for w in &stack {
                    for &l in &letters {
                        if w.last().copied() != Some(-l) {
                            let mut v = w.clone();
                            v.push(l);
                            next.push(v);
                        }
                    }
                }
                stack = next;
            }
            all.extend(stack.into_iter().map(Word::Letters));
        }
        GroupSpec::TriangularLocal { loop_bound } => {
            if 2 * k >= *loop_bound as u64 {
                return Err(Error::LocalModelExceeded {
                    total: k,
                    bound: *loop_bound as u64,
                });
            }
            let mut stack: Vec<Vec<i16>> = vec![Vec::new()];
            for _ in 0..k {
                let mut next = Vec::new();
                for w in &stack {
                    for l in 1..=3i16 {
                        if w.last().copied() != Some(l) {
                            let mut v = w.clone();
                            v.push(l);
                            next.push(v);
                        }
                    }
                }
                stack = next;
            }
            all.extend(stack.into_iter().map(Word::Letters));
        }
        GroupSpec::Cyclic { n } => {
            let n64 = *n as u64;
            if 2 * k < n64 {
                all.push(Word::Residue(k as u32));
                all.push(Word::Residue(*n - k as u32));
            } else if 2 * k == n64 {
                all.push(Word::Residue(k as u32));
            }
        }
    }
    // Reorder: representatives first, then inverses of the paired ones.
    let mut reps: Vec<Word> = Vec::new();
    for w in &all {
        let inv = invert(group, w);
        if word_key(group, w) <= word_key(group, &inv) {
            reps.push(w.clone());
        }
    }
    reps.sort_by_key(|w| word_key(group, w));
    let mut out = reps.clone();
    for w in &reps {
        if !self_inverse(group, w) {
            out.push(invert(group, w));
        }
    }
    Ok(out)
}

/// A sphere with its collapsed-variable structure: one variable per inverse
/// pair (multiplicity 2) or self-inverse element (multiplicity 1).
#[derive(Debug, Clone)]
pub struct Sphere {
    pub radius: u64,
    pub words: Vec<Word>,
    /// `(representative index into words, multiplicity)` per variable.
    pub variables: Vec<(usize, u8)>,
    /// Word -> variable index (both elements of a pair map to the same one).
    pub var_of_word: HashMap<Word, usize>,
}

/// Builds the collapsed-variable view of a sphere.
pub fn sphere(group: &GroupSpec, k: u64) -> Result<Sphere> {
    let words = enumerate_sphere(group, k)?;
    let mut variables = Vec::new();
    let mut var_of_word = HashMap::new();
    for (i, w) in words.iter().enumerate() {
        let inv = invert(group, w);
        if word_key(group, w) <= word_key(group, &inv) {
            let idx = variables.len();
            variables.push((i, if inv == *w { 1 } else { 2 }));
            var_of_word.insert(w.clone(), idx);
            if inv != *w {
                var_of_word.insert(inv, idx);
            }
        }
    }
    Ok(Sphere {
        radius: k,
        words,
        variables,
        var_of_word,
    })
}

/// Weighted length on the free group with countably many generators:
/// `psi(w) = sum_k (2 m_k + 1) * (total exponent mass on generator k)`.
/// `word` is reduced syllable form: pairs `(generator index 1-based, exponent)`.
pub fn weighted_length(weights: &[u64], word: &[(u32, i64)]) -> Result<u64> {
    check_weights(weights)?;
    let mut total = 0u64;
    for &(g, s) in word {
        if g == 0 || g as usize > weights.len() {
            return Err(Error::OutOfRange(format!("generator {g} has no weight")));
        }
        if s == 0 {
            return Err(Error::InvalidWord("zero exponent syllable".into()));
        }
        total += (2 * weights[g as usize - 1] + 1) * s.unsigned_abs();
    }
    Ok(total)
}

/// Embedding of the infinitely generated free group into the rank-2 free
/// group: generator `c_j` maps to `b^(-m_j) a b^(m_j)`.
pub fn embed_jm(weights: &[u64], word: &[(u32, i64)]) -> Result<Word> {
    check_weights(weights)?;
    let f2 = GroupSpec::free(2)?;
    let mut acc = f2.identity();
    for &(g, s) in word {
        if g == 0 || g as usize > weights.len() {
            return Err(Error::OutOfRange(format!("generator {g} has no weight")));
        }
        let m = weights[g as usize - 1] as usize;
        let mut ls: Vec<i16> = Vec::with_capacity(2 * m + s.unsigned_abs() as usize);
        ls.extend(std::iter::repeat(-2i16).take(m));
        let a = if s > 0 { 1i16 } else { -1i16 };
        ls.extend(std::iter::repeat(a).take(s.unsigned_abs() as usize));
        ls.extend(std::iter::repeat(2i16).take(m));
        acc = multiply(&f2, &acc, &Word::Letters(ls))?;
    }
    Ok(acc)
}

fn check_weights(weights: &[u64]) -> Result<()> {
    if weights.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::NonIncreasingWeights);
    }
    Ok(())
}

/// Renders a word in the text form used by the CLI: letters `a..z` for
/// generators, `A..Z` for inverses, `e` for the identity; cyclic elements as
/// their residue.
pub fn render_word(w: &Word) -> String {
    match w {
        Word::Residue(r) => r.to_string(),
        Word::Letters(ls) if ls.is_empty() => "e".into(),
        Word::Letters(ls) => {
            let mut s = String::new();
            for &l in ls {
                let c = if l > 0 {
                    (b'a' + (l - 1) as u8) as char
                } else {
                    (b'A' + (-l - 1) as u8) as char
                };
                s.push(c);
            }
            s
        }
    }
}

/// Parses the text form produced by [`render_word`].
pub fn parse_word(group: &GroupSpec, s: &str) -> Result<Word> {
    let s = s.trim();
    if let GroupSpec::Cyclic { n } = group {
        let r: i64 = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad residue {s:?}")))?;
        let n = *n as i64;
        return Ok(Word::Residue(r.rem_euclid(n) as u32));
    }
    if s == "e" {
        return Ok(group.identity());
    }
    let mut acc = group.identity();
    for ch in s.chars().filter(|c| !c.is_whitespace()) {
        let l = if ch.is_ascii_lowercase() {
            (ch as u8 - b'a') as i16 + 1
        } else if ch.is_ascii_uppercase() {
            -((ch as u8 - b'A') as i16 + 1)
        } else {
            return Err(Error::Parse(format!("bad letter {ch:?}")));
        };
        acc = multiply(group, &acc, &Word::Letters(vec![l]))?;
    }
    validate(group, &acc)?;
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn random_word(group: &GroupSpec, max_len: u64, rng: &mut impl Rng) -> Word {
        match group {
            GroupSpec::Cyclic { n } => Word::Residue(rng.gen_range(0..*n)),
            _ => {
                let len = rng.gen_range(0..=max_len);
                let mut w = group.identity();
                let letters: Vec<i16> = match group {
                    GroupSpec::Free { n } => {
                        (1..=*n as i16).chain((1..=*n as i16).map(|l| -l)).collect()
                    }
                    _ => vec![1, 2, 3],
                };
                for _ in 0..len {
                    let l = letters[rng.gen_range(0..letters.len())];
                    w = multiply(group, &w, &Word::Letters(vec![l])).unwrap();
                }
                w
            }
        }
    }

    #[test]
    fn inverse_cancellation_free() {
        let g = GroupSpec::free(2).unwrap();
        let a = Word::Letters(vec![1]);
        let ai = Word::Letters(vec![-1]);
        assert_eq!(multiply(&g, &a, &ai).unwrap(), g.identity());
    }

    #[test]
    fn involution_squares_to_identity() {
        let g = GroupSpec::triangular_local(16).unwrap();
        let a = Word::Letters(vec![1]);
        assert_eq!(multiply(&g, &a, &a).unwrap(), g.identity());
    }

    #[test]
    fn cyclic_residue_arithmetic() {
        let g = GroupSpec::cyclic(6).unwrap();
        let p = multiply(&g, &Word::Residue(3), &Word::Residue(4)).unwrap();
        assert_eq!(p, Word::Residue(1));
        assert_eq!(length(&g, &p), 1);
    }

    #[test]
    fn associativity_and_identity_random() {
        let groups = [
            GroupSpec::free(2).unwrap(),
            GroupSpec::free(3).unwrap(),
            GroupSpec::triangular_local(64).unwrap(),
            GroupSpec::cyclic(12).unwrap(),
        ];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for g in &groups {
            for _ in 0..10_000 {
                let (x, y, z) = (
                    random_word(g, 6, &mut rng),
                    random_word(g, 6, &mut rng),
                    random_word(g, 6, &mut rng),
                );
                let xy_z = multiply(g, &multiply(g, &x, &y).unwrap(), &z).unwrap();
                let x_yz = multiply(g, &x, &multiply(g, &y, &z).unwrap()).unwrap();
                assert_eq!(xy_z, x_yz);
                assert_eq!(multiply(g, &x, &g.identity()).unwrap(), x);
                assert_eq!(multiply(g, &g.identity(), &x).unwrap(), x);
            }
        }
    }

    #[test]
    fn product_length_parity_and_bound() {
        let groups = [GroupSpec::free(2).unwrap(), GroupSpec::triangular_local(64).unwrap()];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for g in &groups {
            for _ in 0..5_000 {
                let x = random_word(g, 8, &mut rng);
                let y = random_word(g, 8, &mut rng);
                let p = multiply(g, &x, &y).unwrap();
                let (lx, ly, lp) = (length(g, &x), length(g, &y), length(g, &p));
                assert!(lp <= lx + ly);
                assert_eq!((lx + ly - lp) % 2, 0);
            }
        }
    }

    #[test]
    fn invert_is_involution_and_preserves_length() {
        let groups = [
            GroupSpec::free(3).unwrap(),
            GroupSpec::triangular_local(32).unwrap(),
            GroupSpec::cyclic(9).unwrap(),
        ];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for g in &groups {
            for _ in 0..2_000 {
                let x = random_word(g, 8, &mut rng);
                assert_eq!(invert(g, &invert(g, &x)), x);
                assert_eq!(length(g, &invert(g, &x)), length(g, &x));
            }
        }
    }

    #[test]
    fn sphere_sizes_match_enumeration() {
        let f3 = GroupSpec::free(3).unwrap();
        assert_eq!(f3.sphere_size(2).unwrap(), BigInt::from(30));
        for k in 0..=3 {
            let count = enumerate_sphere(&f3, k).unwrap().len();
            assert_eq!(BigInt::from(count), f3.sphere_size(k).unwrap());
        }
        let tri = GroupSpec::triangular_local(16).unwrap();
        assert_eq!(tri.sphere_size(3).unwrap(), BigInt::from(12));
        for k in 0..=5 {
            let count = enumerate_sphere(&tri, k).unwrap().len();
            assert_eq!(BigInt::from(count), tri.sphere_size(k).unwrap());
        }
        let z7 = GroupSpec::cyclic(7).unwrap();
        assert_eq!(z7.sphere_size(3).unwrap(), BigInt::from(2));
        let z8 = GroupSpec::cyclic(8).unwrap();
        assert_eq!(z8.sphere_size(4).unwrap(), BigInt::from(1));
    }

    #[test]
    fn sphere_order_and_pairing() {
        let f2 = GroupSpec::free(2).unwrap();
        let s1 = enumerate_sphere(&f2, 1).unwrap();
        assert_eq!(
            s1,
            vec![
                Word::Letters(vec![1]),
                Word::Letters(vec![2]),
                Word::Letters(vec![-1]),
                Word::Letters(vec![-2]),
            ]
        );
        for k in 1..=4 {
            let s = enumerate_sphere(&f2, k).unwrap();
            let half = s.len() / 2;
            for i in 0..half {
                assert_eq!(invert(&f2, &s[i]), s[half + i]);
            }
        }
        // Triangular spheres of even radius pair up the same way; odd radii
        // contain self-inverse palindromes which stay in the first block.
        let tri = GroupSpec::triangular_local(16).unwrap();
        let s2 = enumerate_sphere(&tri, 2).unwrap();
        let half = s2.len() / 2;
        for i in 0..half {
            assert_eq!(invert(&tri, &s2[i]), s2[half + i]);
        }
        let s3 = sphere(&tri, 3).unwrap();
        let pal = s3
            .variables
            .iter()
            .filter(|(i, m)| *m == 1 && self_inverse(&tri, &s3.words[*i]))
            .count();
        assert_eq!(pal, 6);
        assert_eq!(s3.words.len(), 12);
    }

    #[test]
    fn local_model_guards() {
        let tri = GroupSpec::triangular_local(16).unwrap();
        let long = Word::Letters((0..10).map(|i| if i % 2 == 0 { 1 } else { 2 }).collect());
        assert!(matches!(
            multiply(&tri, &long, &long),
            Err(Error::LocalModelExceeded { .. })
        ));
        assert!(enumerate_sphere(&tri, 8).is_err());
    }

    #[test]
    fn weighted_length_and_embedding() {
        // Weight zero on the first generator reproduces the plain length.
        assert_eq!(weighted_length(&[0, 1, 2], &[(1, 1)]).unwrap(), 1);
        assert_eq!(embed_jm(&[0, 1, 2], &[(1, 1)]).unwrap(), Word::Letters(vec![1]));
        // c2^2 with weights (1,2): psi = 5*2 = 10, image b^-2 a^2 b^2 has length 6.
        assert_eq!(weighted_length(&[1, 2], &[(2, 2)]).unwrap(), 10);
        let img = embed_jm(&[1, 2], &[(2, 2)]).unwrap();
        assert_eq!(img, Word::Letters(vec![-2, -2, 1, 1, 2, 2]));
        let f2 = GroupSpec::free(2).unwrap();
        assert_eq!(length(&f2, &img), 6);
        // Identity maps to identity.
        assert_eq!(weighted_length(&[1, 2], &[]).unwrap(), 0);
        assert_eq!(embed_jm(&[1, 2], &[]).unwrap(), f2.identity());
        // Decreasing weights are rejected.
        assert!(matches!(
            weighted_length(&[2, 1], &[(1, 1)]),
            Err(Error::NonIncreasingWeights)
        ));
    }

    #[test]
    fn embedding_injective_on_small_weighted_ball() {
        // Exhaustive over reduced words in c1, c2, c3 with weights (1,2,3)
        // and weighted length <= 12.
        let weights = [1u64, 2, 3];
        let mut words: Vec<Vec<(u32, i64)>> = vec![vec![]];
        let mut frontier: Vec<Vec<(u32, i64)>> = vec![vec![]];
        loop {
            let mut next = Vec::new();
            for w in &frontier {
                for g in 1..=3u32 {
                    if w.last().map(|&(lg, _)| lg) == Some(g) {
                        continue;
                    }
                    for s in [-4i64, -3, -2, -1, 1, 2, 3, 4] {
                        let mut v = w.clone();
                        v.push((g, s));
                        if weighted_length(&weights, &v).unwrap() <= 12 {
                            next.push(v);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            words.extend(next.iter().cloned());
            frontier = next;
        }
        let mut seen = std::collections::HashSet::new();
        let f2 = GroupSpec::free(2).unwrap();
        for w in &words {
            let img = embed_jm(&weights, w).unwrap();
            assert!(
                length(&f2, &img) <= weighted_length(&weights, w).unwrap(),
                "embedding must not increase the weighted length"
            );
            assert!(seen.insert(img), "collision for {w:?}");
        }
        assert!(words.len() >= 55);
    }

    #[test]
    fn word_text_roundtrip() {
        let f2 = GroupSpec::free(2).unwrap();
        let w = parse_word(&f2, "a B").unwrap();
        assert_eq!(w, Word::Letters(vec![1, -2]));
        assert_eq!(render_word(&w), "aB");
        let z12 = GroupSpec::cyclic(12).unwrap();
        assert_eq!(parse_word(&z12, "7").unwrap(), Word::Residue(7));
        let spec: GroupSpec = serde_json::from_str(r#"{"family":"free","n":2}"#).unwrap();
        assert_eq!(spec, f2);
        let spec: GroupSpec =
            serde_json::from_str(r#"{"family":"triangular_local","L":16}"#).unwrap();
        assert_eq!(spec, GroupSpec::triangular_local(16).unwrap());
    }
}
