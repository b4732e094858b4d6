use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutations::Permutation;
use crate::polyring::{x_of_perm, Monomial, Polynomial};
use crate::scalar::Coefficient;

/// An element `Σ p_g·g` of the twisted group algebra `R_n ⋊ Z[S_n]`.
///
/// Multiplication twists the right coefficient by the left permutation:
/// `(p·g)(q·h) = (p·(g.q))·gh`.
#[derive(Clone, PartialEq, Eq)]
pub struct TwistedElement<C> {
    n: usize,
    terms: BTreeMap<Permutation, Polynomial<C>>,
}

impl<C: Coefficient> TwistedElement<C> {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "degree must be at least 1");
        TwistedElement { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(Polynomial::one(), n)
    }

    /// `p·id`.
    pub fn scalar(p: Polynomial<C>, n: usize) -> Self {
        Self::term(p, Permutation::identity(n))
    }

    /// `p·g`.
    pub fn term(p: Polynomial<C>, g: Permutation) -> Self {
        let n = g.degree();
        let mut terms = BTreeMap::new();
        if !p.is_zero() {
            terms.insert(g, p);
        }
        TwistedElement { n, terms }
    }

    /// The untwisted basis element `1·g`.
    pub fn basis(g: Permutation) -> Self {
        Self::term(Polynomial::one(), g)
    }

    /// `g* = X_g·g`.
    pub fn star(g: &Permutation) -> Self {
        Self::term(Polynomial::monomial(x_of_perm(g)), g.clone())
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, Polynomial<C>)>) -> Result<Self> {
        let mut out = Self::zero(n);
        for (g, p) in terms {
            if g.degree() != n {
                return Err(Error::DegreeMismatch { left: n, right: g.degree() });
            }
            out.add_term(g, p);
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Polynomial<C>)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Permutation> {
        self.terms.keys()
    }

    pub fn coefficient(&self, g: &Permutation) -> Polynomial<C> {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, g: Permutation, p: Polynomial<C>) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(p);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &p;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (g, p) in &other.terms {
            out.add_term(g.clone(), p.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// The twisted product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = Self::zero(self.n);
        for (g1, p1) in &self.terms {
            for (g2, p2) in &other.terms {
                let coefficient = p1 * &p2.act(g1);
                out.add_term(g1.compose_unchecked(g2), coefficient);
            }
        }
        Ok(out)
    }

    /// `p·self` (coefficient multiplied from the left, no twist).
    pub fn scale_left(&self, p: &Polynomial<C>) -> Self {
        let mut out = Self::zero(self.n);
        for (g, q) in &self.terms {
            out.add_term(g.clone(), p * q);
        }
        out
    }

    /// `id - self`.
    pub fn one_minus(&self) -> Self {
        &Self::identity(self.n) - self
    }

    /// Coordinates in the starred basis: `c_g` with `self = Σ c_g·g*`.
    ///
    /// Fails if some coefficient is not divisible by `X_g`.
    pub fn starred_coefficients(&self) -> Result<BTreeMap<Permutation, Polynomial<C>>> {
        self.terms
            .iter()
            .map(|(g, p)| {
                p.div_monomial(&x_of_perm(g))
                    .map(|c| (g.clone(), c))
                    .ok_or_else(|| Error::NotStarred { perm: g.to_string() })
            })
            .collect()
    }

    /// Whether the element is `m·id` for a monomial `m`, returning it.
    pub fn as_scalar_monomial(&self) -> Option<&Monomial> {
        match self.terms.iter().next() {
            Some((g, p)) if self.terms.len() == 1 && g.is_identity() => p.as_monomial(),
            _ => None,
        }
    }

    /// Conjugates every term by `c`: `c·(p·g)·c⁻¹ = (c.p)·cgc⁻¹`.
    pub fn conjugate_by(&self, c: &Permutation) -> Result<Self> {
        if c.degree() != self.n {
            return Err(Error::DegreeMismatch { left: self.n, right: c.degree() });
        }
        let ci = c.inverse();
        let mut out = Self::zero(self.n);
        for (g, p) in &self.terms {
            out.add_term(c.compose_unchecked(g).compose_unchecked(&ci), p.act(c));
        }
        Ok(out)
    }

    pub fn to_record(&self) -> ElementRecord<C> {
        ElementRecord {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(g, p)| TermRecord { permutation: g.clone(), polynomial: p.clone() })
                .collect(),
        }
    }

    pub fn from_record(record: ElementRecord<C>) -> Result<Self> {
        Self::from_terms(record.n, record.terms.into_iter().map(|t| (t.permutation, t.polynomial)))
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $try:ident) => {
        impl<C: Coefficient> $tr<&TwistedElement<C>> for &TwistedElement<C> {
            type Output = TwistedElement<C>;
            fn $f(self, rhs: &TwistedElement<C>) -> TwistedElement<C> {
                self.$try(rhs).expect("operands of equal degree")
            }
        }
        impl<C: Coefficient> $tr<TwistedElement<C>> for TwistedElement<C> {
            type Output = TwistedElement<C>;
            fn $f(self, rhs: TwistedElement<C>) -> TwistedElement<C> {
                (&self).$f(&rhs)
            }
        }
        impl<C: Coefficient> $tr<&TwistedElement<C>> for TwistedElement<C> {
            type Output = TwistedElement<C>;
            fn $f(self, rhs: &TwistedElement<C>) -> TwistedElement<C> {
                (&self).$f(rhs)
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<C: Coefficient> Neg for &TwistedElement<C> {
    type Output = TwistedElement<C>;

    fn neg(self) -> TwistedElement<C> {
        TwistedElement { n: self.n, terms: self.terms.iter().map(|(g, p)| (g.clone(), -p)).collect() }
    }
}

/// The twisted product as a free function.
pub fn tw_multiply<C: Coefficient>(a: &TwistedElement<C>, b: &TwistedElement<C>) -> Result<TwistedElement<C>> {
    a.try_mul(b)
}

impl<C: Coefficient> fmt::Display for TwistedElement<C> {
    /// `X[2,3]·(132) + (1 - X[1,2]*X[2,1])·(123)`; the zero element prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, p)) in self.terms.iter().enumerate() {
            let text = p.to_string();
            let (negative, body) = match (p.len(), text.strip_prefix('-')) {
                (1, Some(rest)) => (true, rest.to_string()),
                (1, None) => (false, text),
                _ => (false, format!("({text})")),
            };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{body}·({g})")?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for TwistedElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwistedElement[n={}]({self})", self.n)
    }
}

/// JSON shape of an element: terms sorted by permutation in lexicographic order.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "C: Coefficient")]
pub struct ElementRecord<C> {
    pub n: usize,
    pub terms: Vec<TermRecord<C>>,
}

#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "C: Coefficient")]
pub struct TermRecord<C> {
    pub permutation: Permutation,
    pub polynomial: Polynomial<C>,
}

impl<C: Coefficient> fmt::Debug for ElementRecord<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ElementRecord").field("n", &self.n).field("terms", &self.terms).finish()
    }
}

impl<C: Coefficient> fmt::Debug for TermRecord<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.permutation, self.polynomial)
    }
}

impl<C: Coefficient> Serialize for TwistedElement<C> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_record().serialize(serializer)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for TwistedElement<C> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let record = ElementRecord::deserialize(deserializer)?;
        TwistedElement::from_record(record).map_err(serde::de::Error::custom)
    }
}
