use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::specialization::Specialization;
use crate::error::{Error, Result};
use crate::permutations::Permutation;
use crate::polyring::{twist_factor_by_difference, Polynomial};
use crate::scalar::{Coefficient, Scalar};
use crate::twisted::TwistedElement;

/// Which basis of the algebra indexes rows and columns.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// `g`.
    Natural,
    /// `g* = X_g·g`.
    #[default]
    Starred,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Natural => "natural",
            Basis::Starred => "starred",
        })
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "natural" => Ok(Basis::Natural),
            "starred" => Ok(Basis::Starred),
            _ => Err(Error::Parse(format!("unknown basis {s:?} (natural or starred)"))),
        }
    }
}

/// Dense square matrix indexed by `S_n` in lexicographic order.
///
/// The algebra is treated as a right module over the coefficient ring: a
/// coordinate vector `v` stands for `Σ_h b_h·v_h`, and column `h` of the
/// matrix of `e` holds the coordinates of `e·b_h`. With that convention
/// products of elements go to products of matrices, and evaluating the
/// entries at a specialization keeps this.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraMatrix<T> {
    n: usize,
    basis: Basis,
    basis_order: Vec<Permutation>,
    entries: Vec<Vec<T>>,
}

impl<T> AlgebraMatrix<T> {
    pub fn degree(&self) -> usize {
        self.n
    }

    /// `n!`.
    pub fn order(&self) -> usize {
        self.basis_order.len()
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn basis_order(&self) -> &[Permutation] {
        &self.basis_order
    }

    pub fn entries(&self) -> &[Vec<T>] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row][col]
    }

    pub fn map<U: Send>(&self, f: impl Fn(&T) -> U + Sync) -> AlgebraMatrix<U>
    where
        T: Sync,
    {
        AlgebraMatrix {
            n: self.n,
            basis: self.basis,
            basis_order: self.basis_order.clone(),
            entries: self.entries.par_iter().map(|row| row.iter().map(&f).collect()).collect(),
        }
    }

    fn same_shape<U>(&self, other: &AlgebraMatrix<U>) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch { left: self.n, right: other.n });
        }
        if self.basis != other.basis {
            return Err(Error::Parse(format!("basis mismatch: {} vs {}", self.basis, other.basis)));
        }
        Ok(())
    }
}

impl<T> AlgebraMatrix<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T> + Send + Sync,
{
    pub fn from_entries(n: usize, basis: Basis, entries: Vec<Vec<T>>) -> Result<Self> {
        let basis_order: Vec<Permutation> = Permutation::all(n).collect();
        let size = basis_order.len();
        if entries.len() != size || entries.iter().any(|r| r.len() != size) {
            return Err(Error::OutOfRange(format!("expected a {size}×{size} matrix")));
        }
        Ok(AlgebraMatrix { n, basis, basis_order, entries })
    }

    pub fn zero(n: usize, basis: Basis) -> Self {
        let basis_order: Vec<Permutation> = Permutation::all(n).collect();
        let size = basis_order.len();
        AlgebraMatrix { n, basis, basis_order, entries: vec![vec![T::zero(); size]; size] }
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(n: usize, basis: Basis, diagonal: Vec<T>) -> Result<Self> {
        let mut m = Self::zero(n, basis);
        if diagonal.len() != m.order() {
            return Err(Error::OutOfRange(format!("expected {} diagonal entries", m.order())));
        }
        for (i, d) in diagonal.into_iter().enumerate() {
            m.entries[i][i] = d;
        }
        Ok(m)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let size = self.order();
        let entries = (0..size)
            .into_par_iter()
            .map(|i| {
                (0..size)
                    .map(|j| {
                        (0..size).fold(T::zero(), |acc, l| {
                            let a = &self.entries[i][l];
                            if a.is_zero() {
                                acc
                            } else {
                                acc + a.clone() * other.entries[l][j].clone()
                            }
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(AlgebraMatrix { n: self.n, basis: self.basis, basis_order: self.basis_order.clone(), entries })
    }

    /// Number of nonzero entries in each column.
    pub fn column_support(&self) -> Vec<usize> {
        (0..self.order()).map(|j| self.entries.iter().filter(|r| !r[j].is_zero()).count()).collect()
    }
}

impl<T> AlgebraMatrix<T>
where
    T: Clone + Zero + num_traits::One + Add<Output = T> + Mul<Output = T> + Send + Sync,
{
    pub fn identity(n: usize, basis: Basis) -> Self {
        let size = (1..=n).product();
        Self::diagonal(n, basis, vec![T::one(); size]).expect("n! entries")
    }
}

impl<S: Scalar> AlgebraMatrix<S> {
    /// Largest entrywise magnitude of `self - other`.
    pub fn max_deviation(&self, other: &Self) -> Result<f64> {
        self.same_shape(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .flat_map(|(r, s)| r.iter().zip(s).map(|(a, b)| (a.clone() - b.clone()).magnitude()))
            .fold(0.0, f64::max))
    }

    /// Whether every entry agrees exactly (exact scalars) or within `tolerance`.
    pub fn approx_eq(&self, other: &Self, tolerance: f64) -> Result<bool> {
        self.same_shape(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(r, s)| r.iter().zip(s).all(|(a, b)| crate::scalar::close(a, b, tolerance))))
    }

    /// Gauss-Jordan inverse with largest-magnitude pivoting.
    pub fn inverse(&self) -> Result<Self> {
        let size = self.order();
        let mut a = self.entries.clone();
        let mut inv = Self::identity(self.n, self.basis).entries;
        for col in 0..size {
            let pivot = (col..size)
                .filter(|&r| !a[r][col].is_zero())
                .max_by(|&r, &s| a[r][col].magnitude().total_cmp(&a[s][col].magnitude()))
                .ok_or_else(|| Error::Singular(format!("no pivot in column {col}")))?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for j in 0..size {
                a[col][j] = a[col][j].clone() / p.clone();
                inv[col][j] = inv[col][j].clone() / p.clone();
            }
            let (pivot_a, pivot_inv) = (a[col].clone(), inv[col].clone());
            a.par_iter_mut().zip(inv.par_iter_mut()).enumerate().for_each(|(r, (row, irow))| {
                if r == col || row[col].is_zero() {
                    return;
                }
                let factor = row[col].clone();
                for j in 0..size {
                    row[j] = row[j].clone() - factor.clone() * pivot_a[j].clone();
                    irow[j] = irow[j].clone() - factor.clone() * pivot_inv[j].clone();
                }
            });
        }
        Ok(AlgebraMatrix { n: self.n, basis: self.basis, basis_order: self.basis_order.clone(), entries: inv })
    }
}

/// Matrix of left multiplication by `e` in the chosen basis.
///
/// Starred basis: `g*·h* = X(g,h)·(gh)*`, and moving a scalar past `(gh)*`
/// applies `(gh)⁻¹`, so entry `(gh, h)` is `(gh)⁻¹.(c_g·X(g,h))` where
/// `e = Σ c_g·g*`. This needs every coefficient of `e` divisible by `X_g`.
/// Natural basis: entry `(gh, h)` is `(gh)⁻¹.p_g` where `e = Σ p_g·g`.
pub fn left_mult_matrix<C: Coefficient>(
    e: &TwistedElement<C>,
    basis: Basis,
) -> Result<AlgebraMatrix<Polynomial<C>>> {
    let n = e.degree();
    let order: Vec<Permutation> = Permutation::all(n).collect();
    let position: HashMap<&Permutation, usize> = order.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let coefficients: Vec<(Permutation, Polynomial<C>)> = match basis {
        Basis::Starred => e.starred_coefficients()?.into_iter().collect(),
        Basis::Natural => e.terms().map(|(g, p)| (g.clone(), p.clone())).collect(),
    };
    let columns: Vec<Vec<(usize, Polynomial<C>)>> = order
        .par_iter()
        .map(|h| {
            coefficients
                .iter()
                .map(|(g, c)| {
                    let gh = g.compose_unchecked(h);
                    let scalar = match basis {
                        Basis::Starred => c.mul_monomial(&twist_factor_by_difference(g, &gh)),
                        Basis::Natural => c.clone(),
                    };
                    (position[&gh], scalar.act(&gh.inverse()))
                })
                .collect()
        })
        .collect();
    let size = order.len();
    let mut entries = vec![vec![Polynomial::zero(); size]; size];
    for (j, column) in columns.into_iter().enumerate() {
        for (i, p) in column {
            entries[i][j] = &entries[i][j] + &p;
        }
    }
    Ok(AlgebraMatrix { n, basis, basis_order: order, entries })
}

/// Evaluates every entry at `s`.
pub fn specialize_matrix<C: Coefficient, S: Scalar>(
    m: &AlgebraMatrix<Polynomial<C>>,
    s: &Specialization<S>,
) -> Result<AlgebraMatrix<S>> {
    if m.degree() != s.degree() {
        return Err(Error::DegreeMismatch { left: m.degree(), right: s.degree() });
    }
    Ok(m.map(|p| s.evaluate(p)))
}

/// `left_mult_matrix` followed by `specialize_matrix`.
pub fn specialized_matrix<C: Coefficient, S: Scalar>(
    e: &TwistedElement<C>,
    basis: Basis,
    s: &Specialization<S>,
) -> Result<AlgebraMatrix<S>> {
    specialize_matrix(&left_mult_matrix(e, basis)?, s)
}

/// Evaluates every coefficient of `e` at `s`, as a map over the support.
pub fn specialize_element<C: Coefficient, S: Scalar>(
    e: &TwistedElement<C>,
    s: &Specialization<S>,
) -> Result<std::collections::BTreeMap<Permutation, S>> {
    if e.degree() != s.degree() {
        return Err(Error::DegreeMismatch { left: e.degree(), right: s.degree() });
    }
    Ok(e.terms().map(|(g, p)| (g.clone(), s.evaluate(p))).collect())
}
