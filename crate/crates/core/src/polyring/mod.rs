//! The commutative ring `R_n` of polynomials in the off-diagonal variables
//! `X[a,b]`, the permutation action on it, and the distinguished monomials
//! attached to permutations.

mod monomial;
mod polynomial;

pub use monomial::{Monomial, Variable};
pub use polynomial::Polynomial;

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::permutations::Permutation;
use crate::scalar::Coefficient;

/// `g.p`: substitutes `X[g(a),g(b)]` for every `X[a,b]`.
pub fn act<C: Coefficient>(g: &Permutation, p: &Polynomial<C>) -> Polynomial<C> {
    p.act(g)
}

fn var(a: usize, b: usize) -> Monomial {
    Monomial::var(Variable::new(a, b).expect("off-diagonal by construction"))
}

/// `X_g`: the product of `X[a,b]` over the inversions `(a,b)` of `g⁻¹`.
pub fn x_of_perm(g: &Permutation) -> Monomial {
    Monomial::from_factors(
        g.inverse()
            .inversion_set()
            .iter()
            .map(|(a, b)| (Variable::new(a, b).expect("a < b"), 1)),
    )
}

/// The symmetric pair `X[a,b]·X[b,a]`.
pub fn x_pair(a: usize, b: usize) -> Result<Monomial> {
    if a == b {
        return Err(Error::DiagonalVariable(a));
    }
    Ok(Monomial::var(Variable::new(a, b)?).mul(&Monomial::var(Variable::new(b, a)?)))
}

/// Product of [`x_pair`] over all pairs `a < b` drawn from `indices`.
pub fn x_set(indices: &BTreeSet<usize>) -> Monomial {
    indices
        .iter()
        .tuple_combinations()
        .fold(Monomial::one(), |acc, (&a, &b)| acc.mul(&var(a, b)).mul(&var(b, a)))
}

/// `x_set` of the contiguous range `from..=to` (empty or singleton gives `1`).
pub fn x_range(from: usize, to: usize) -> Monomial {
    x_set(&(from..=to).collect())
}

/// The factor `X(g1,g2)` with `g1*·g2* = X(g1,g2)·(g1g2)*`.
///
/// Computed from the set difference `I(g1⁻¹) \ I((g1g2)⁻¹)`; the equivalent
/// form over `I(g1) ∩ I(g2⁻¹)` is evaluated too and the two must agree.
pub fn twist_factor(g1: &Permutation, g2: &Permutation) -> Result<Monomial> {
    let product = g1.compose(g2)?;
    let first = twist_factor_by_difference(g1, &product);
    let second = twist_factor_by_intersection(g1, g2);
    assert_eq!(first, second, "the two forms of the twist factor disagree for ({g1}, {g2})");
    Ok(first)
}

pub(crate) fn twist_factor_by_difference(g1: &Permutation, product: &Permutation) -> Monomial {
    let left = g1.inverse().inversion_set();
    let whole = product.inverse().inversion_set();
    left.difference(&whole)
        .fold(Monomial::one(), |acc, (a, b)| acc.mul(&var(a, b)).mul(&var(b, a)))
}

pub(crate) fn twist_factor_by_intersection(g1: &Permutation, g2: &Permutation) -> Monomial {
    let i1 = g1.inversion_set();
    let i2 = g2.inverse().inversion_set();
    i1.intersection(&i2).fold(Monomial::one(), |acc, (a, b)| {
        let (ga, gb) = (g1.apply(a), g1.apply(b));
        acc.mul(&var(ga, gb)).mul(&var(gb, ga))
    })
}
