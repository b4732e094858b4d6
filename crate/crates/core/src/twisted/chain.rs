use std::fmt;

use serde::{Deserialize, Serialize};

use super::canonical::{delta_cap, delta_star, epsilon_star, gamma_star};
use super::element::{ElementRecord, TwistedElement};
use crate::error::{Error, Result};
use crate::polyring::Polynomial;
use crate::scalar::Coefficient;

/// How a chain factor enters the product.
#[derive(Clone, PartialEq)]
pub enum FactorForm<C> {
    /// The element itself.
    Plain,
    /// The inverse of the element, never expanded symbolically.
    Inverted,
    /// `denominator⁻¹·element` where the denominator is a scalar polynomial.
    ScalarDenominator(Polynomial<C>),
}

#[derive(Clone, PartialEq)]
pub struct ChainFactor<C> {
    pub label: String,
    pub element: TwistedElement<C>,
    pub form: FactorForm<C>,
}

impl<C: Coefficient> ChainFactor<C> {
    pub fn inverted(&self) -> bool {
        !matches!(self.form, FactorForm::Plain)
    }
}

/// An ordered, nonempty product whose factors may be inverses.
#[derive(Clone, PartialEq)]
pub struct FactorChain<C> {
    n: usize,
    factors: Vec<ChainFactor<C>>,
}

/// How the `δ*` inverses are represented in [`alpha_inverse_chain`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaInverse {
    /// `(δ*)⁻¹` kept as an inverted factor.
    Symbolic,
    /// `(δ*)⁻¹ = Δ⁻¹·ε*`.
    ClosedForm,
}

impl<C: Coefficient> FactorChain<C> {
    pub fn new(n: usize, factors: Vec<ChainFactor<C>>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::OutOfRange("a factor chain needs at least one factor".into()));
        }
        if let Some(f) = factors.iter().find(|f| f.element.degree() != n) {
            return Err(Error::DegreeMismatch { left: n, right: f.element.degree() });
        }
        Ok(FactorChain { n, factors })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[ChainFactor<C>] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn to_record(&self) -> ChainRecord<C> {
        ChainRecord {
            n: self.n,
            factors: self
                .factors
                .iter()
                .map(|f| FactorRecord {
                    label: f.label.clone(),
                    inverted: f.inverted(),
                    form: match f.form {
                        FactorForm::Plain => "plain",
                        FactorForm::Inverted => "inverse",
                        FactorForm::ScalarDenominator(_) => "scalar_denominator",
                    }
                    .to_string(),
                    denominator: match &f.form {
                        FactorForm::ScalarDenominator(d) => Some(d.clone()),
                        _ => None,
                    },
                    element: f.element.to_record(),
                })
                .collect(),
        }
    }
}

/// The chain `γ*_n·(δ*_n)⁻¹·γ*_{n-1}·(δ*_{n-1})⁻¹···γ*_2·(δ*_2)⁻¹` for `(α*_n)⁻¹`.
///
/// The factor for column `k` carries subscript `n-k+1`, so the chain starts at `k = 1`.
pub fn alpha_inverse_chain<C: Coefficient>(n: usize, delta: DeltaInverse) -> Result<FactorChain<C>> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("the inverse chain needs n >= 2, got {n}")));
    }
    let mut factors = Vec::with_capacity(2 * (n - 1));
    for k in 1..n {
        let j = n - k + 1;
        factors.push(ChainFactor { label: format!("gamma*_{j}"), element: gamma_star(n, k)?, form: FactorForm::Plain });
        factors.push(match delta {
            DeltaInverse::Symbolic => ChainFactor {
                label: format!("(delta*_{j})^-1"),
                element: delta_star(n, k)?,
                form: FactorForm::Inverted,
            },
            DeltaInverse::ClosedForm => ChainFactor {
                label: format!("(Delta_{{{j},{n}}})^-1·epsilon*_{{{j},{n}}}"),
                element: epsilon_star(n, k)?,
                form: FactorForm::ScalarDenominator(delta_cap(n, k)?),
            },
        });
    }
    FactorChain::new(n, factors)
}

#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "C: Coefficient")]
pub struct ChainRecord<C> {
    pub n: usize,
    pub factors: Vec<FactorRecord<C>>,
}

#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "C: Coefficient")]
pub struct FactorRecord<C> {
    pub label: String,
    pub inverted: bool,
    pub form: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub denominator: Option<Polynomial<C>>,
    pub element: ElementRecord<C>,
}

impl<C: Coefficient> fmt::Debug for FactorForm<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorForm::Plain => f.write_str("Plain"),
            FactorForm::Inverted => f.write_str("Inverted"),
            FactorForm::ScalarDenominator(d) => write!(f, "ScalarDenominator({d})"),
        }
    }
}

impl<C: Coefficient> fmt::Debug for ChainFactor<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ChainFactor")
            .field("label", &self.label)
            .field("element", &self.element)
            .field("form", &self.form)
            .finish()
    }
}

impl<C: Coefficient> fmt::Debug for FactorChain<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FactorChain").field("n", &self.n).field("factors", &self.factors).finish()
    }
}

impl<C: Coefficient> fmt::Debug for ChainRecord<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ChainRecord").field("n", &self.n).field("factors", &self.factors).finish()
    }
}

impl<C: Coefficient> fmt::Debug for FactorRecord<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FactorRecord")
            .field("label", &self.label)
            .field("form", &self.form)
            .field("denominator", &self.denominator)
            .field("element", &self.element)
            .finish()
    }
}
