//! Exact arithmetic in the twisted group algebra `A(S_n) = R_n ⋊ Z[S_n]`.
//!
//! Elements are finite sums `Σ p_g·g` with `p_g` polynomials in the
//! off-diagonal variables `X[a,b]`; the product twists the right coefficient
//! by the left permutation, `(p·g)(q·h) = (p·(g.q))·gh`. On top of that the
//! crate builds the starred basis `g* = X_g·g`, the column factorization of
//! `α*_n = Σ g*`, the inverse chain of `α*_n`, exhaustive verifiers for the
//! identities relating them, and left-multiplication matrices that can be
//! specialized to exact rationals or complex floats.
//!
//! The numeric layers are generic: polynomial coefficients over any
//! [`Coefficient`] ring, matrices and specializations over any [`Scalar`]
//! field. The aliases below fix the usual choices.

pub mod error;
pub mod permutations;
pub mod polyring;
pub mod representation;
pub mod scalar;
pub mod twisted;
pub mod verifier;

pub use error::{Error, Result};
pub use permutations::{InversionSet, Permutation};
pub use polyring::{Monomial, Polynomial, Variable};
pub use representation::{left_mult_matrix, verify_alpha_inverse_numeric, AlgebraMatrix, Basis, Specialization};
pub use scalar::{Coefficient, Scalar};
pub use twisted::{alpha_inverse_chain, tw_multiply, AlphaFactorization, FactorChain, TwistedElement};
pub use verifier::{verify, verify_all, Identity, SuiteReport, VerificationReport, VerifierConfig};

pub use num_bigint::BigInt;
pub use num_complex::Complex64;
pub use num_rational::BigRational;

/// Polynomials with arbitrary-precision integer coefficients.
pub type Poly = Polynomial<BigInt>;
/// Twisted algebra elements over `Z[X_ab]`.
pub type Element = TwistedElement<BigInt>;
pub type Chain = FactorChain<BigInt>;

pub type SymbolicMatrix = AlgebraMatrix<Poly>;
pub type RationalMatrix = AlgebraMatrix<BigRational>;
pub type ComplexMatrix = AlgebraMatrix<Complex64>;
pub type F64Matrix = AlgebraMatrix<f64>;
pub type F32Matrix = AlgebraMatrix<f32>;

pub type RationalSpecialization = Specialization<BigRational>;
pub type ComplexSpecialization = Specialization<Complex64>;
pub type F64Specialization = Specialization<f64>;
