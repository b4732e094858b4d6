use std::time::Instant;

use num_bigint::BigInt;

use super::matrix::{specialized_matrix, AlgebraMatrix, Basis};
use super::specialization::Specialization;
use crate::error::{Error, Result};
use crate::permutations::Permutation;
use crate::polyring::Polynomial;
use crate::scalar::Scalar;
use crate::twisted::{
    alpha_inverse_chain, alpha_star, beta_star, delta_cap_factors, ColumnFactorization, DeltaInverse, FactorForm,
};
use crate::verifier::{Counterexample, VerificationReport};

type P = Polynomial<BigInt>;

/// Whether every factor `1 - X_{k,…,j}` of `Δ` for column `k` is nonzero at `s`.
pub fn regularity_check<S: Scalar>(s: &Specialization<S>, n: usize, k: usize) -> Result<bool> {
    Ok(delta_cap_factors::<BigInt>(n, k)?.iter().all(|f| !s.evaluate(f).is_zero()))
}

/// [`regularity_check`] for every column `1 <= k <= n-1`.
pub fn regularity_check_all<S: Scalar>(s: &Specialization<S>, n: usize) -> Result<bool> {
    for k in 1..n {
        if !regularity_check(s, n, k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether every image `h.(1 - X_{k,…,j})`, `h ∈ S_n`, is nonzero at `s`.
///
/// The matrix of `Δ·id` is diagonal with entries `h⁻¹.Δ`, so this is what
/// inverting it needs.
pub fn orbit_regularity_check<S: Scalar>(s: &Specialization<S>, n: usize) -> Result<bool> {
    for k in 1..n {
        for f in delta_cap_factors::<BigInt>(n, k)? {
            if Permutation::all(n).any(|h| s.evaluate(&f.act(&h)).is_zero()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Samples seeded specializations until one passes [`orbit_regularity_check`].
pub fn regular_specialization<S: Scalar>(
    n: usize,
    seed: u64,
    sample: impl Fn(usize, u64) -> Specialization<S>,
) -> Result<Specialization<S>> {
    const RETRIES: u64 = 16;
    for attempt in 0..RETRIES {
        let s = sample(n, seed.wrapping_add(attempt));
        if orbit_regularity_check(&s, n)? {
            return Ok(s);
        }
    }
    Err(Error::Singular(format!("no regular specialization after {RETRIES} samples")))
}

/// Specialized matrix of `(Δ_k·id)⁻¹`: the diagonal `1/(h⁻¹.Δ_k)`.
fn inverse_scalar_matrix<S: Scalar>(p: &P, s: &Specialization<S>, basis: Basis) -> Result<AlgebraMatrix<S>> {
    let n = s.degree();
    let diagonal = Permutation::all(n)
        .map(|h| {
            let value = s.evaluate(&p.act(&h.inverse()));
            if value.is_zero() {
                Err(Error::Singular(format!("{p} vanishes after acting by {}", h.inverse())))
            } else {
                Ok(S::one() / value)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    AlgebraMatrix::diagonal(n, basis, diagonal)
}

/// Product of the closed-form inverse chain of `α*_n`, specialized at `s`.
pub fn alpha_inverse_chain_matrix<S: Scalar>(n: usize, s: &Specialization<S>) -> Result<AlgebraMatrix<S>> {
    if n == 1 {
        return Ok(AlgebraMatrix::identity(1, Basis::Starred));
    }
    let chain = alpha_inverse_chain::<BigInt>(n, DeltaInverse::ClosedForm)?;
    let mut out = AlgebraMatrix::identity(n, Basis::Starred);
    for factor in chain.factors() {
        let m = specialized_matrix(&factor.element, Basis::Starred, s)?;
        let m = match &factor.form {
            FactorForm::Plain => m,
            FactorForm::Inverted => m.inverse()?,
            FactorForm::ScalarDenominator(d) => inverse_scalar_matrix(d, s, Basis::Starred)?.try_mul(&m)?,
        };
        out = out.try_mul(&m)?;
    }
    Ok(out)
}

fn deviation_report(
    identity: &str,
    n: usize,
    tolerance: f64,
    start: Instant,
    checks: Vec<(&str, f64, bool)>,
    mut parameters: Vec<(String, String)>,
) -> VerificationReport {
    let counterexample = checks.iter().find(|(_, _, ok)| !ok).map(|(what, dev, _)| Counterexample {
        inputs: what.to_string(),
        lhs: format!("max-abs deviation {dev:e}"),
        rhs: format!("tolerance {tolerance:e}"),
    });
    for (what, dev, _) in &checks {
        parameters.push((format!("deviation {what}"), format!("{dev:e}")));
    }
    VerificationReport {
        identity: identity.to_string(),
        n,
        parameters: parameters.into_iter().collect(),
        passed: counterexample.is_none(),
        checked: checks.len(),
        counterexample,
        elapsed: start.elapsed(),
    }
}

/// Specializes `α*_n` and its closed-form inverse chain at `s` and checks
/// `chain·M = M·chain = I`, and `chain` against the direct inverse of `M`.
///
/// Exact scalars compare exactly; inexact ones within `tolerance`.
pub fn verify_alpha_inverse_numeric<S: Scalar>(
    n: usize,
    s: &Specialization<S>,
    tolerance: f64,
) -> Result<VerificationReport> {
    let start = Instant::now();
    if s.degree() != n {
        return Err(Error::DegreeMismatch { left: n, right: s.degree() });
    }
    if !regularity_check_all(s, n)? || !orbit_regularity_check(s, n)? {
        return Err(Error::Singular("a factor of some Delta vanishes at the specialization".into()));
    }
    let m = specialized_matrix(&alpha_star::<BigInt>(n), Basis::Starred, s)?;
    let chain = alpha_inverse_chain_matrix(n, s)?;
    let id = AlgebraMatrix::identity(n, Basis::Starred);
    let oracle = m.inverse()?;
    let mut checks = Vec::new();
    for (what, lhs, rhs) in [
        ("chain·M vs I", chain.try_mul(&m)?, &id),
        ("M·chain vs I", m.try_mul(&chain)?, &id),
        ("chain vs M^-1", chain.clone(), &oracle),
    ] {
        checks.push((what, lhs.max_deviation(rhs)?, lhs.approx_eq(rhs, tolerance)?));
    }
    let parameters = vec![
        ("exact".to_string(), S::EXACT.to_string()),
        ("tolerance".to_string(), if S::EXACT { "0".into() } else { format!("{tolerance:e}") }),
    ];
    Ok(deviation_report("alpha-inverse-numeric", n, tolerance, start, checks, parameters))
}

/// Checks the column factorization of `α*_n` as specialized matrices: every
/// `β*` equals its `δ*` factors times the inverted `γ*` factors, and `α*_n`
/// is the ordered product of the `β*`.
pub fn verify_factorization_numeric<S: Scalar>(
    n: usize,
    s: &Specialization<S>,
    tolerance: f64,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut checks = Vec::new();
    let mut labels = Vec::new();
    let mut product = AlgebraMatrix::identity(n, Basis::Starred);
    for k in (1..=n).rev() {
        let beta = specialized_matrix(&beta_star::<BigInt>(n, k)?, Basis::Starred, s)?;
        product = product.try_mul(&beta)?;
        if k == n {
            continue;
        }
        let column = ColumnFactorization::new(n, k);
        let mut factored = AlgebraMatrix::identity(n, Basis::Starred);
        for f in &column.factors {
            let m = specialized_matrix(&f.element::<BigInt>(n)?, Basis::Starred, s)?;
            let m = if f.is_inverse() { m.inverse()? } else { m };
            factored = factored.try_mul(&m)?;
        }
        labels.push(format!("beta*_{}", column.index));
        checks.push((factored.max_deviation(&beta)?, factored.approx_eq(&beta, tolerance)?));
    }
    let alpha = specialized_matrix(&alpha_star::<BigInt>(n), Basis::Starred, s)?;
    labels.push("alpha*_n vs beta product".into());
    checks.push((alpha.max_deviation(&product)?, alpha.approx_eq(&product, tolerance)?));
    let checks = labels.iter().zip(checks).map(|(l, (d, ok))| (l.as_str(), d, ok)).collect();
    Ok(deviation_report("factorization-numeric", n, tolerance, start, checks, Vec::new()))
}
