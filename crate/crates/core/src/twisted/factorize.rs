//! Structured factorization of `α*_n` into `β*` columns, each written as
//! `δ*` factors followed by inverted `γ*` factors.

use std::fmt;

use serde::Serialize;

use super::canonical::{delta_factor, gamma_factor};
use super::chain::{alpha_inverse_chain, DeltaInverse, FactorChain};
use super::element::TwistedElement;
use crate::error::Result;
use crate::scalar::Coefficient;

/// One factor in the expanded form of a `β*` column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ColumnFactor {
    /// `id - (t_k*)²·t*_{m,k+1}`; for `m = k+1` this is `id - (t_k*)²`.
    Delta { k: usize, m: usize },
    /// `(id - t*_{m,k})⁻¹`.
    GammaInverse { m: usize, k: usize },
}

impl ColumnFactor {
    /// The element the factor stands for (before inversion).
    pub fn element<C: Coefficient>(&self, n: usize) -> Result<TwistedElement<C>> {
        match *self {
            ColumnFactor::Delta { k, m } => delta_factor(m, k, n),
            ColumnFactor::GammaInverse { m, k } => gamma_factor(m, k, n),
        }
    }

    pub fn is_inverse(&self) -> bool {
        matches!(self, ColumnFactor::GammaInverse { .. })
    }
}

impl fmt::Display for ColumnFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ColumnFactor::Delta { k, m } if m == k + 1 => write!(f, "(id - (t{k}*)^2)"),
            ColumnFactor::Delta { k, m } => write!(f, "(id - (t{k}*)^2·t*[{m},{}])", k + 1),
            ColumnFactor::GammaInverse { m, k } => write!(f, "(id - t*[{m},{k}])^-1"),
        }
    }
}

/// `β*_{n-k+1} = δ*_{n-k+1}·(γ*_{n-k+1})⁻¹` with both sides expanded into factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColumnFactorization {
    /// The subscript `n-k+1`.
    pub index: usize,
    pub k: usize,
    pub factors: Vec<ColumnFactor>,
}

impl ColumnFactorization {
    pub fn new(n: usize, k: usize) -> Self {
        let mut factors: Vec<ColumnFactor> = (k + 1..=n).rev().map(|m| ColumnFactor::Delta { k, m }).collect();
        // (γ*)⁻¹ reverses the order of the γ* factors
        factors.extend((k + 1..=n).map(|m| ColumnFactor::GammaInverse { m, k }));
        ColumnFactorization { index: n - k + 1, k, factors }
    }

    pub fn delta_factors(&self) -> impl Iterator<Item = &ColumnFactor> {
        self.factors.iter().filter(|f| !f.is_inverse())
    }

    pub fn gamma_inverse_factors(&self) -> impl Iterator<Item = &ColumnFactor> {
        self.factors.iter().filter(|f| f.is_inverse())
    }
}

impl fmt::Display for ColumnFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "beta*_{} = ", self.index)?;
        if self.factors.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" · "))
    }
}

/// `α*_n = β*_1·β*_2···β*_n` together with the inverse chain.
#[derive(Clone)]
pub struct AlphaFactorization<C> {
    pub n: usize,
    /// Columns `β*_2, …, β*_n` (`k = n-1` down to `1`); `β*_1 = id` is omitted.
    pub columns: Vec<ColumnFactorization>,
    /// `None` for `n = 1`, where `α*_1 = id`.
    pub inverse_chain: Option<FactorChain<C>>,
}

impl<C: Coefficient> AlphaFactorization<C> {
    pub fn new(n: usize) -> Result<Self> {
        let columns = (1..n).rev().map(|k| ColumnFactorization::new(n, k)).collect();
        let inverse_chain = if n >= 2 { Some(alpha_inverse_chain(n, DeltaInverse::ClosedForm)?) } else { None };
        Ok(AlphaFactorization { n, columns, inverse_chain })
    }
}

impl<C: Coefficient> fmt::Debug for AlphaFactorization<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlphaFactorization")
            .field("n", &self.n)
            .field("columns", &self.columns)
            .field("inverse_chain", &self.inverse_chain)
            .finish()
    }
}

impl<C: Coefficient> fmt::Display for AlphaFactorization<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        let betas: Vec<String> = (1..=n).map(|j| format!("beta*_{j}")).collect();
        writeln!(f, "alpha*_{n} = {}", betas.join(" · "))?;
        writeln!(f, "beta*_1 = id")?;
        for column in &self.columns {
            writeln!(f, "{column}")?;
        }
        match &self.inverse_chain {
            None => writeln!(f, "(alpha*_{n})^-1 = id"),
            Some(chain) => {
                let labels: Vec<String> = (2..=n)
                    .rev()
                    .flat_map(|j| [format!("gamma*_{j}"), format!("(delta*_{j})^-1")])
                    .collect();
                writeln!(f, "(alpha*_{n})^-1 = {}", labels.join(" · "))?;
                for factor in chain.factors() {
                    match &factor.form {
                        super::chain::FactorForm::ScalarDenominator(d) => {
                            writeln!(f, "  {} = ({d})^-1 · [{}]", factor.label, factor.element)?
                        }
                        _ => writeln!(f, "  {} = {}", factor.label, factor.element)?,
                    }
                }
                Ok(())
            }
        }
    }
}
