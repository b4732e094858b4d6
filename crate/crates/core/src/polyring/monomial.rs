use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutations::Permutation;

/// An off-diagonal variable `X[a,b]`, `a != b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Variable {
    row: usize,
    col: usize,
}

impl Variable {
    pub fn new(row: usize, col: usize) -> Result<Self> {
        if row == 0 || col == 0 {
            return Err(Error::OutOfRange(format!("X[{row},{col}]: indices are 1-based")));
        }
        if row == col {
            return Err(Error::DiagonalVariable(row));
        }
        Ok(Variable { row, col })
    }

    pub fn row(&self) -> usize {
        self.row
    }

    pub fn col(&self) -> usize {
        self.col
    }

    /// `g.X[a,b] = X[g(a),g(b)]`.
    pub fn act(&self, g: &Permutation) -> Variable {
        Variable { row: g.apply(self.row), col: g.apply(self.col) }
    }

    /// All off-diagonal variables of degree `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Variable> {
        (1..=n).flat_map(move |row| (1..=n).filter(move |&col| col != row).map(move |col| Variable { row, col }))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X[{},{}]", self.row, self.col)
    }
}

impl FromStr for Variable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix("X[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected X[a,b], got {s:?}")))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| Error::Parse(format!("expected X[a,b], got {s:?}")))?;
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad index {t:?}")));
        Variable::new(parse(a)?, parse(b)?)
    }
}

/// A product of variables with positive exponents; the empty product is `1`.
///
/// Factors are kept sorted by variable. Monomials are ordered by total degree
/// first and lexicographically after that, which is the term order used for
/// printing polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Self {
        Monomial { factors: vec![(v, 1)] }
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        factors.into_iter().fold(Monomial::one(), |acc, (v, e)| {
            acc.mul(&Monomial { factors: if e == 0 { vec![] } else { vec![(v, e)] } })
        })
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.factors
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn factors(&self) -> &[(Variable, u32)] {
        &self.factors
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (a, ea) = self.factors[i];
            let (b, eb) = other.factors[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    factors.push((a, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    factors.push((b, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    factors.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        factors.extend_from_slice(&self.factors[i..]);
        factors.extend_from_slice(&other.factors[j..]);
        Monomial { factors }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut factors = Vec::with_capacity(self.factors.len());
        let mut j = 0;
        for &(v, e) in &self.factors {
            let mut e = e;
            if j < other.factors.len() && other.factors[j].0 == v {
                let d = other.factors[j].1;
                if d > e {
                    return None;
                }
                e -= d;
                j += 1;
            } else if j < other.factors.len() && other.factors[j].0 < v {
                return None;
            }
            if e > 0 {
                factors.push((v, e));
            }
        }
        if j < other.factors.len() {
            return None;
        }
        Some(Monomial { factors })
    }

    /// Renames every variable by `g`.
    pub fn act(&self, g: &Permutation) -> Monomial {
        let mut factors: Vec<_> = self.factors.iter().map(|&(v, e)| (v.act(g), e)).collect();
        factors.sort_unstable_by_key(|f| f.0);
        Monomial { factors }
    }

    /// Largest index appearing in any variable.
    pub fn max_index(&self) -> usize {
        self.factors.iter().map(|(v, _)| v.row.max(v.col)).max().unwrap_or(0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.factors.cmp(&other.factors))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        s.split('*').try_fold(Monomial::one(), |acc, factor| {
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => {
                    let e = e.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent {e:?}")))?;
                    if e == 0 {
                        return Err(Error::Parse("zero exponent".into()));
                    }
                    (v, e)
                }
                None => (factor, 1),
            };
            Ok(acc.mul(&Monomial { factors: vec![(var.parse()?, exp)] }))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(a: usize, b: usize) -> Monomial {
        Monomial::var(Variable::new(a, b).unwrap())
    }

    #[test]
    fn diagonal_rejected() {
        assert_eq!(Variable::new(2, 2), Err(Error::DiagonalVariable(2)));
        assert!("X[3,3]".parse::<Variable>().is_err());
    }

    #[test]
    fn multiplication_merges_exponents() {
        let m = x(2, 3).mul(&x(1, 2)).mul(&x(2, 3));
        assert_eq!(m.to_string(), "X[1,2]*X[2,3]^2");
        assert_eq!(m.degree(), 3);
        assert_eq!(m.exponent(Variable::new(2, 3).unwrap()), 2);
    }

    #[test]
    fn division() {
        let m = x(1, 2).mul(&x(2, 3)).mul(&x(2, 3));
        assert_eq!(m.div(&x(2, 3)), Some(x(1, 2).mul(&x(2, 3))));
        assert_eq!(m.div(&x(3, 2)), None);
        assert_eq!(x(1, 2).div(&x(1, 2).mul(&x(1, 2))), None);
        assert_eq!(m.div(&Monomial::one()), Some(m.clone()));
    }

    #[test]
    fn action_renames() {
        let g: Permutation = "132".parse().unwrap();
        assert_eq!(x(1, 3).mul(&x(2, 3)).act(&g), x(1, 2).mul(&x(3, 2)));
    }

    #[test]
    fn text_round_trip() {
        for s in ["1", "X[1,2]", "X[1,2]^2*X[2,3]", "X[2,1]*X[3,1]^4"] {
            assert_eq!(s.parse::<Monomial>().unwrap().to_string(), s);
        }
        assert_eq!("X[2,3]*X[1,2]".parse::<Monomial>().unwrap().to_string(), "X[1,2]*X[2,3]");
        assert!("X[1,2]^0".parse::<Monomial>().is_err());
        assert!("Y[1,2]".parse::<Monomial>().is_err());
    }

    #[test]
    fn graded_order() {
        assert!(Monomial::one() < x(3, 2));
        assert!(x(3, 2) < x(1, 2).mul(&x(2, 1)));
        assert!(x(1, 2) < x(1, 3));
    }
}
