//! Exhaustive checks of the algebra's identities with structured verdicts.
//!
//! Each identity enumerates its instances in lexicographic order, checks them
//! in parallel and reports the first failing instance. Degrees are bounded by
//! a [`VerifierConfig`]; asking for more is an error rather than a long run.

mod identities;
mod report;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

pub use report::{Counterexample, ReportRecord, VerificationReport};

use crate::error::{Error, Result};

/// How expensive an identity is as `n` grows; each class has its own limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cost {
    /// Permutation combinatorics or products of single terms.
    Permutations,
    /// Sums over all of `S_n` or a large subgroup.
    Algebra,
    /// All pairs of `S_n`.
    Pairs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    StarProduct,
    TwistFactorForms,
    LengthAdditive,
    SquareRule,
    Braid,
    GTimesCycle,
    Commutation,
    LongestCommutation,
    Decomposition,
    AlphaFactorization,
    BetaRecursion,
    BetaGammaDelta,
    ShiftConjugation,
    EpsilonRecursion,
    DeltaInverse,
    DescentFormula,
}

impl Identity {
    pub const ALL: [Identity; 16] = [
        Identity::StarProduct,
        Identity::TwistFactorForms,
        Identity::LengthAdditive,
        Identity::SquareRule,
        Identity::Braid,
        Identity::GTimesCycle,
        Identity::Commutation,
        Identity::LongestCommutation,
        Identity::Decomposition,
        Identity::AlphaFactorization,
        Identity::BetaRecursion,
        Identity::BetaGammaDelta,
        Identity::ShiftConjugation,
        Identity::EpsilonRecursion,
        Identity::DeltaInverse,
        Identity::DescentFormula,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::StarProduct => "star-product",
            Identity::TwistFactorForms => "twist-factor-forms",
            Identity::LengthAdditive => "length-additive",
            Identity::SquareRule => "square-rule",
            Identity::Braid => "braid",
            Identity::GTimesCycle => "g-times-cycle",
            Identity::Commutation => "commutation",
            Identity::LongestCommutation => "longest-commutation",
            Identity::Decomposition => "decomposition",
            Identity::AlphaFactorization => "alpha-factorization",
            Identity::BetaRecursion => "beta-recursion",
            Identity::BetaGammaDelta => "beta-gamma-delta",
            Identity::ShiftConjugation => "shift-conjugation",
            Identity::EpsilonRecursion => "epsilon-recursion",
            Identity::DeltaInverse => "delta-inverse",
            Identity::DescentFormula => "descent-formula",
        }
    }

    /// One-line statement of what is checked.
    pub fn statement(self) -> &'static str {
        match self {
            Identity::StarProduct => "g1*·g2* = X(g1,g2)·(g1g2)* for all pairs",
            Identity::TwistFactorForms => "X(g1,g2) over I(g1⁻¹)∖I((g1g2)⁻¹) equals the form over I(g1)∩I(g2⁻¹)",
            Identity::LengthAdditive => "X(g1,g2) = 1 exactly when l(g1g2) = l(g1) + l(g2), and then g1*·g2* = (g1g2)*",
            Identity::SquareRule => "(t_a*)² = X_{a,a+1}·id",
            Identity::Braid => "t_a*·t_{a+1}*·t_a* = t_{a+1}*·t_a*·t_{a+1}* and t_a*·t_b* = t_b*·t_a* for |a-b| >= 2",
            Identity::GTimesCycle => "g*·t*_{b,a} = (Π X_{g(a),g(j)})·(g·t_{b,a})*, and g*·t*_{k,j} = (g·t_{k,j})* when g preserves 1..j",
            Identity::Commutation => "t*_{m,k}·t*_{p,k} = (t_k*)²·t*_{p,k+1}·t*_{m-1,k} for k < m < p",
            Identity::LongestCommutation => "(g·w)*·w* = w*·(w·g)* = (Π_{g⁻¹(a)<g⁻¹(b)} X_{a,b})·g*",
            Identity::Decomposition => "g = t_{k_n,n}···t_{k_1,1} and g* = t*_{k_n,n}···t*_{k_1,1}",
            Identity::AlphaFactorization => "α*_n = β*_1·β*_2···β*_n",
            Identity::BetaRecursion => "β*_p·(id - t*_{p,k}) = (id - (t_k*)²·t*_{p,k+1})·β*_{p-1} for k < p",
            Identity::BetaGammaDelta => "β*·γ* = δ* for every column",
            Identity::ShiftConjugation => "t_{1,n}·t*_{b+1,a+1}·t_{n,1} = t*_{b,a} and t_{1,n}·X_{a+1,a+2}·t_{n,1} = X_{a,a+1}",
            Identity::EpsilonRecursion => "ε*·(id - X_{k,k+1}·t*_{n,k+1}) = (id - X_{k,…,n})·ε*', ε*' the g(n) = n part, equal to t_{1,n}·ε*_{k+1}·t_{n,1}",
            Identity::DeltaInverse => "ε*·δ* = Δ·id, and δ*·Δ⁻¹·ε* = id with denominators cleared",
            Identity::DescentFormula => "Des(t_{n,k+1}·g⁻¹) = (Des(g⁻¹) ∖ {g(n)}) ∪ {g(n)-1} within k+1..n-1",
        }
    }

    pub fn cost(self) -> Cost {
        match self {
            Identity::StarProduct
            | Identity::TwistFactorForms
            | Identity::LengthAdditive
            | Identity::GTimesCycle
            | Identity::LongestCommutation => Cost::Pairs,
            Identity::SquareRule | Identity::Braid | Identity::Decomposition | Identity::DescentFormula => {
                Cost::Permutations
            }
            Identity::Commutation
            | Identity::AlphaFactorization
            | Identity::BetaRecursion
            | Identity::BetaGammaDelta
            | Identity::ShiftConjugation
            | Identity::EpsilonRecursion
            | Identity::DeltaInverse => Cost::Algebra,
        }
    }

    /// Smallest degree with at least one instance.
    pub fn min_degree(self) -> usize {
        match self {
            Identity::Braid | Identity::Commutation => 3,
            Identity::SquareRule
            | Identity::GTimesCycle
            | Identity::BetaRecursion
            | Identity::BetaGammaDelta
            | Identity::ShiftConjugation
            | Identity::EpsilonRecursion
            | Identity::DeltaInverse => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Upper bounds on `n` per [`Cost`] class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifierConfig {
    pub permutation_limit: usize,
    pub algebra_limit: usize,
    pub pair_limit: usize,
}

impl Default for VerifierConfig {
    fn default() -> Self {
        VerifierConfig { permutation_limit: 6, algebra_limit: 5, pair_limit: 4 }
    }
}

impl VerifierConfig {
    /// The same limit for every class.
    pub fn uniform(limit: usize) -> Self {
        VerifierConfig { permutation_limit: limit, algebra_limit: limit, pair_limit: limit }
    }

    pub fn limit(&self, identity: Identity) -> usize {
        match identity.cost() {
            Cost::Permutations => self.permutation_limit,
            Cost::Algebra => self.algebra_limit,
            Cost::Pairs => self.pair_limit,
        }
    }

    fn admit(&self, identity: Identity, n: usize) -> Result<()> {
        if n < identity.min_degree() {
            return Err(Error::DegreeTooSmall { identity: identity.name().into(), min: identity.min_degree() });
        }
        let limit = self.limit(identity);
        if n > limit {
            return Err(Error::LimitExceeded { identity: identity.name().into(), n, limit });
        }
        Ok(())
    }
}

/// Runs one identity at degree `n`.
pub fn verify(identity: Identity, n: usize, config: &VerifierConfig) -> Result<VerificationReport> {
    config.admit(identity, n)?;
    Ok(identities::run(identity, n))
}

/// Results of a suite run; identities outside their degree range are listed in `skipped`.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub n: usize,
    pub reports: Vec<VerificationReport>,
    pub skipped: Vec<(Identity, String)>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }
}

/// Runs `selection` (or every identity) at degree `n`.
///
/// An explicit selection must fit the limits; without one, identities out of
/// range are skipped and listed.
pub fn verify_all(n: usize, selection: Option<&[Identity]>, config: &VerifierConfig) -> Result<SuiteReport> {
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    match selection {
        Some(ids) => {
            for &id in ids {
                reports.push(verify(id, n, config)?);
            }
        }
        None => {
            for id in Identity::ALL {
                match verify(id, n, config) {
                    Ok(r) => reports.push(r),
                    Err(e) => skipped.push((id, e.to_string())),
                }
            }
        }
    }
    Ok(SuiteReport { n, reports, skipped })
}

macro_rules! shortcuts {
    ($($f:ident => $id:ident),* $(,)?) => {
        $(
            #[doc = concat!("[`verify`] with [`Identity::", stringify!($id), "`] and default limits.")]
            pub fn $f(n: usize) -> Result<VerificationReport> {
                verify(Identity::$id, n, &VerifierConfig::default())
            }
        )*
    };
}

shortcuts! {
    verify_star_product => StarProduct,
    verify_twist_factor_forms => TwistFactorForms,
    verify_length_additive => LengthAdditive,
    verify_square_rule => SquareRule,
    verify_braid => Braid,
    verify_g_times_cycle => GTimesCycle,
    verify_commutation => Commutation,
    verify_longest_commutation => LongestCommutation,
    verify_decomposition => Decomposition,
    verify_alpha_factorization => AlphaFactorization,
    verify_beta_recursion => BetaRecursion,
    verify_beta_gamma_delta => BetaGammaDelta,
    verify_shift_conjugation => ShiftConjugation,
    verify_epsilon_recursion => EpsilonRecursion,
    verify_delta_inverse => DeltaInverse,
    verify_descent_formula => DescentFormula,
}

/// Checks every instance in parallel and keeps the first failure in input order.
pub(crate) fn run_instances<I, F>(
    identity: &str,
    n: usize,
    parameters: &[(&str, String)],
    instances: Vec<I>,
    check: F,
) -> VerificationReport
where
    I: Sync,
    F: Fn(&I) -> Option<Counterexample> + Sync,
{
    let start = Instant::now();
    let failures: Vec<Option<Counterexample>> = instances.par_iter().map(&check).collect();
    let counterexample = failures.into_iter().flatten().next();
    VerificationReport {
        identity: identity.to_string(),
        n,
        parameters: parameters.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        passed: counterexample.is_none(),
        checked: instances.len(),
        counterexample,
        elapsed: start.elapsed(),
    }
}
