//! Permutations of `{1, …, n}` in one-line notation.
//!
//! Indexing is 1-based throughout: the permutation written `132` sends
//! 1 ↦ 1, 2 ↦ 3, 3 ↦ 2. Composition follows the function convention
//! `(p·q)(i) = p(q(i))`, so `compose(132, 312) = 213`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Inversions `(a, b)` with `a < b` and `p(a) > p(b)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InversionSet(BTreeSet<(usize, usize)>);

impl InversionSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.0.contains(&(a, b))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }

    pub fn difference<'a>(&'a self, other: &'a InversionSet) -> impl Iterator<Item = (usize, usize)> + 'a {
        self.0.difference(&other.0).copied()
    }

    pub fn intersection<'a>(&'a self, other: &'a InversionSet) -> impl Iterator<Item = (usize, usize)> + 'a {
        self.0.intersection(&other.0).copied()
    }
}

impl FromIterator<(usize, usize)> for InversionSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        InversionSet(iter.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect())
    }
}

impl Permutation {
    /// Builds a permutation from its 1-based one-line images.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..{n}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "degree must be at least 1");
        Permutation { images: (1..=n).collect() }
    }

    /// The longest element `n, n-1, …, 1`.
    pub fn longest(n: usize) -> Self {
        assert!(n >= 1, "degree must be at least 1");
        Permutation { images: (1..=n).rev().collect() }
    }

    /// The cycle `t_{a,b}` for `a <= b`: sends `a ↦ b` and `k ↦ k-1` for `a < k <= b`.
    pub fn cycle(a: usize, b: usize, n: usize) -> Result<Self> {
        check_cycle_range(a, b, n)?;
        let images = (1..=n)
            .map(|k| match k {
                k if k < a || k > b => k,
                k if k == a => b,
                k => k - 1,
            })
            .collect();
        Ok(Permutation { images })
    }

    /// The inverse cycle `t_{b,a}` for `a <= b`: sends `b ↦ a` and `k ↦ k+1` for `a <= k < b`.
    pub fn cycle_inv(b: usize, a: usize, n: usize) -> Result<Self> {
        check_cycle_range(a, b, n)?;
        let images = (1..=n)
            .map(|k| match k {
                k if k < a || k > b => k,
                k if k == b => a,
                k => k + 1,
            })
            .collect();
        Ok(Permutation { images })
    }

    /// The adjacent transposition `(a a+1)`.
    pub fn transposition(a: usize, n: usize) -> Result<Self> {
        Self::cycle(a, a + 1, n)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `p(i)` for `1 <= i <= n`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `(self·other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&i| self.images[i - 1]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn inversion_set(&self) -> InversionSet {
        let n = self.degree();
        InversionSet(
            (1..=n)
                .tuple_combinations()
                .filter(|&(a, b)| self.apply(a) > self.apply(b))
                .collect(),
        )
    }

    pub fn length(&self) -> usize {
        let n = self.degree();
        (1..=n).tuple_combinations().filter(|&(a, b)| self.apply(a) > self.apply(b)).count()
    }

    /// Positions `1 <= i < n` with `p(i) > p(i+1)`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        (1..self.degree()).filter(|&i| self.apply(i) > self.apply(i + 1)).collect()
    }

    /// Whether the permutation fixes `1..=k` pointwise, i.e. lies in `S_1^k × S_{n-k}`.
    pub fn fixes_prefix(&self, k: usize) -> bool {
        self.images.iter().take(k).enumerate().all(|(i, &v)| v == i + 1)
    }

    /// The factors `(k_j, j)` for `j = n, …, 1` with `self = t_{k_n,n} · … · t_{k_1,1}`,
    /// each `t_{k_j,j}` an inverse cycle with `j <= k_j`.
    pub fn decompose(&self) -> Vec<(usize, usize)> {
        let n = self.degree();
        let mut rest = self.clone();
        let mut factors = Vec::with_capacity(n);
        for j in 1..=n {
            let k = rest.inverse().apply(j);
            factors.push((k, j));
            // rest ← rest · t_{j,k}; afterwards rest fixes 1..=j
            let cycle = Permutation::cycle(j, k, n).expect("j <= k <= n by construction");
            rest = rest.compose_unchecked(&cycle);
        }
        debug_assert!(rest.is_identity());
        factors.reverse();
        factors
    }

    /// Inverse of [`Permutation::decompose`]: multiplies `t_{k,j}` left to right.
    pub fn from_decomposition(factors: &[(usize, usize)], n: usize) -> Result<Permutation> {
        factors.iter().try_fold(Permutation::identity(n), |acc, &(k, j)| {
            Ok(acc.compose_unchecked(&Permutation::cycle_inv(k, j, n)?))
        })
    }

    /// The decomposition as text, e.g. `t[3,3]·t[3,2]·t[2,1]` for `312`.
    pub fn decomposition_text(&self) -> String {
        self.decompose().iter().map(|(k, j)| format!("t[{k},{j}]")).join("·")
    }

    /// All of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        assert!(n >= 1, "degree must be at least 1");
        (1..=n).permutations(n).map(|images| Permutation { images })
    }

    /// `S_1^k × S_{n-k}` (permutations fixing `1..=k`), lexicographic order.
    pub fn fixing_prefix(n: usize, k: usize) -> impl Iterator<Item = Permutation> {
        assert!(k <= n && n >= 1);
        (k + 1..=n).permutations(n - k).map(move |tail| {
            let mut images: Vec<usize> = (1..=k).collect();
            images.extend(tail);
            Permutation { images }
        })
    }

    /// One-line text: a digit string for `n <= 9`, comma-separated otherwise.
    pub fn one_line(&self) -> String {
        if self.degree() <= 9 {
            self.images.iter().map(|v| v.to_string()).collect()
        } else {
            self.images.iter().join(",")
        }
    }
}

fn check_cycle_range(a: usize, b: usize, n: usize) -> Result<()> {
    if a == 0 || a > b || b > n {
        return Err(Error::OutOfRange(format!("cycle needs 1 <= a <= b <= n, got a={a}, b={b}, n={n}")));
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_line())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.one_line())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let images = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad digit {c:?}"))))
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(images)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.images.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Permutation::new(images).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn compose_matches_worked_examples() {
        assert_eq!(p("132").compose(&p("312")).unwrap(), p("213"));
        assert_eq!(p("132").compose(&p("231")).unwrap(), p("321"));
        let g = p("2413");
        assert_eq!(Permutation::identity(4).compose(&g).unwrap(), g);
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        assert_eq!(
            p("12").compose(&p("123")),
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("312").inverse(), p("231"));
        assert_eq!(p("321").inverse(), p("321"));
        assert!(Permutation::identity(5).inverse().is_identity());
    }

    #[test]
    fn inversions_and_length() {
        assert_eq!(p("231").inversion_set(), [(1, 3), (2, 3)].into_iter().collect());
        assert!(Permutation::identity(4).inversion_set().is_empty());
        assert_eq!(p("132").length(), 1);
        assert_eq!(p("312").length(), 2);
        assert_eq!(Permutation::identity(3).length(), 0);
        for n in 1..=6 {
            assert_eq!(Permutation::longest(n).length(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn cycle_inversion_sets() {
        let n = 6;
        for a in 1..=n {
            for b in a..=n {
                let t = Permutation::cycle(a, b, n).unwrap();
                let expected: InversionSet = (a + 1..=b).map(|j| (a, j)).collect();
                assert_eq!(t.inversion_set(), expected);
                let ti = Permutation::cycle_inv(b, a, n).unwrap();
                let expected: InversionSet = (a..b).map(|i| (i, b)).collect();
                assert_eq!(ti.inversion_set(), expected);
            }
        }
    }

    #[test]
    fn descents() {
        assert!(Permutation::identity(3).descent_set().is_empty());
        assert_eq!(p("213").descent_set(), BTreeSet::from([1]));
        assert_eq!(p("321").descent_set(), BTreeSet::from([1, 2]));
    }

    #[test]
    fn cycles() {
        assert_eq!(Permutation::cycle(1, 3, 3).unwrap(), p("312"));
        assert_eq!(Permutation::cycle(2, 3, 3).unwrap(), p("132"));
        assert!(Permutation::cycle(2, 2, 4).unwrap().is_identity());
        assert_eq!(Permutation::cycle_inv(2, 1, 3).unwrap(), p("213"));
        assert_eq!(Permutation::cycle_inv(3, 1, 3).unwrap(), p("231"));
        assert!(Permutation::cycle_inv(3, 3, 3).unwrap().is_identity());
        assert!(Permutation::cycle(3, 2, 3).is_err());
        assert!(Permutation::cycle(0, 2, 3).is_err());
        assert!(Permutation::cycle_inv(4, 1, 3).is_err());
    }

    #[test]
    fn decompositions_of_s3() {
        assert_eq!(p("312").decompose(), vec![(3, 3), (3, 2), (2, 1)]);
        assert_eq!(p("321").decompose(), vec![(3, 3), (3, 2), (3, 1)]);
        assert_eq!(Permutation::identity(4).decompose(), vec![(4, 4), (3, 3), (2, 2), (1, 1)]);
        assert_eq!(p("132").decomposition_text(), "t[3,3]·t[3,2]·t[1,1]");
    }

    #[test]
    fn degree_one() {
        let id = Permutation::identity(1);
        assert_eq!(Permutation::longest(1), id);
        assert_eq!(id.decompose(), vec![(1, 1)]);
        assert_eq!(Permutation::all(1).count(), 1);
        assert_eq!(id.to_string(), "1");
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all: Vec<_> = Permutation::all(3).map(|g| g.to_string()).collect();
        assert_eq!(all, ["123", "132", "213", "231", "312", "321"]);
        let sub: Vec<_> = Permutation::fixing_prefix(4, 2).map(|g| g.to_string()).collect();
        assert_eq!(sub, ["1234", "1243"]);
        assert_eq!(Permutation::fixing_prefix(5, 0).count(), 120);
    }

    #[test]
    fn text_forms() {
        assert_eq!(p("1,3,2"), p("132"));
        assert_eq!(p("(132)"), p("132"));
        let big = Permutation::longest(10);
        assert_eq!(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
        assert!("122".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert_eq!(serde_json::to_string(&p("132")).unwrap(), "[1,3,2]");
        assert_eq!(serde_json::from_str::<Permutation>("[2,1]").unwrap(), p("21"));
        assert!(serde_json::from_str::<Permutation>("[2,2]").is_err());
    }
}
