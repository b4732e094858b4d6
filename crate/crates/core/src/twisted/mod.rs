//! The twisted group algebra `A(S_n) = R_n ⋊ Z[S_n]` and its canonical elements.

mod canonical;
mod chain;
mod element;
mod factorize;

pub use canonical::{
    alpha_star, beta_star, beta_star_partial, cycle_inv_star, cycle_star, delta_cap, delta_cap_factors,
    delta_factor, delta_star, delta_star_operator_form, epsilon_star, epsilon_star_fixing_last, gamma_factor,
    gamma_star, omega, shift_conjugate, star, transposition_star_square,
};
pub use chain::{alpha_inverse_chain, ChainFactor, ChainRecord, DeltaInverse, FactorChain, FactorForm, FactorRecord};
pub use element::{tw_multiply, ElementRecord, TermRecord, TwistedElement};
pub use factorize::{AlphaFactorization, ColumnFactor, ColumnFactorization};

use crate::error::Result;
use crate::permutations::Permutation;
use crate::polyring::{twist_factor, x_of_perm, Monomial};
use crate::scalar::Coefficient;

/// Computes `g1*·g2*` and the twist factor `X(g1,g2)`, asserting
/// `g1*·g2* = X(g1,g2)·(g1g2)*`.
pub fn star_multiply_check<C: Coefficient>(
    g1: &Permutation,
    g2: &Permutation,
) -> Result<(TwistedElement<C>, Monomial)> {
    let factor = twist_factor(g1, g2)?;
    let product = tw_multiply(&star::<C>(g1), &star::<C>(g2))?;
    let expected = star::<C>(&g1.compose(g2)?).scale_left(&factor.clone().into());
    assert_eq!(product, expected, "g1*·g2* != X(g1,g2)·(g1g2)* for ({g1}, {g2})");
    Ok((product, factor))
}
