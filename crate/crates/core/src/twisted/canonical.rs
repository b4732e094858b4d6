//! Canonical elements of the twisted algebra built from starred permutations.
//!
//! Indices follow the column convention: `beta_star(n, k)` is the sum of the
//! starred inverse cycles `t*_{m,k}` for `k <= m <= n`, and likewise for the
//! other families. Ordered products run from the highest index down, so
//! `gamma_star(3, 1) = (id - t*_{3,1})·(id - t*_{2,1})`.

use super::element::TwistedElement;
use crate::error::{Error, Result};
use crate::permutations::Permutation;
use crate::polyring::{x_pair, x_range, Monomial, Polynomial, Variable};
use crate::scalar::Coefficient;

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::OutOfRange(what()))
    }
}

fn product<C: Coefficient>(n: usize, factors: impl IntoIterator<Item = TwistedElement<C>>) -> TwistedElement<C> {
    factors.into_iter().fold(TwistedElement::identity(n), |acc, f| &acc * &f)
}

fn var(a: usize, b: usize) -> Monomial {
    Monomial::var(Variable::new(a, b).expect("off-diagonal"))
}

/// `g* = X_g·g`.
pub fn star<C: Coefficient>(g: &Permutation) -> TwistedElement<C> {
    TwistedElement::star(g)
}

/// `t*_{a,b} = (Π_{a<=i<b} X[i,b])·t_{a,b}` for `a <= b`.
pub fn cycle_star<C: Coefficient>(a: usize, b: usize, n: usize) -> Result<TwistedElement<C>> {
    let t = Permutation::cycle(a, b, n)?;
    let coefficient = (a..b).fold(Monomial::one(), |acc, i| acc.mul(&var(i, b)));
    Ok(TwistedElement::term(coefficient.into(), t))
}

/// `t*_{b,a} = (Π_{a<j<=b} X[a,j])·t_{b,a}` for `a <= b`.
pub fn cycle_inv_star<C: Coefficient>(b: usize, a: usize, n: usize) -> Result<TwistedElement<C>> {
    let t = Permutation::cycle_inv(b, a, n)?;
    let coefficient = (a + 1..=b).fold(Monomial::one(), |acc, j| acc.mul(&var(a, j)));
    Ok(TwistedElement::term(coefficient.into(), t))
}

/// `(t_a*)² = X[a,a+1]·X[a+1,a]·id`.
pub fn transposition_star_square<C: Coefficient>(a: usize, n: usize) -> Result<TwistedElement<C>> {
    require(a >= 1 && a < n, || format!("need 1 <= a <= n-1, got a={a}, n={n}"))?;
    Ok(TwistedElement::scalar(x_pair(a, a + 1)?.into(), n))
}

/// `Σ_{g ∈ S_n} g*`.
pub fn alpha_star<C: Coefficient>(n: usize) -> TwistedElement<C> {
    TwistedElement::from_terms(n, Permutation::all(n).map(|g| (g.clone(), super::x_of_perm(&g).into())))
        .expect("degrees agree")
}

/// `Σ_{k<=m<=p} t*_{m,k}`; `p = n` gives [`beta_star`].
pub fn beta_star_partial<C: Coefficient>(n: usize, k: usize, p: usize) -> Result<TwistedElement<C>> {
    require(k >= 1 && k <= p && p <= n, || format!("need 1 <= k <= p <= n, got k={k}, p={p}, n={n}"))?;
    (k..=p).try_fold(TwistedElement::zero(n), |acc, m| Ok(&acc + &cycle_inv_star(m, k, n)?))
}

/// `Σ_{k<=m<=n} t*_{m,k}` for `1 <= k <= n`.
pub fn beta_star<C: Coefficient>(n: usize, k: usize) -> Result<TwistedElement<C>> {
    require(k >= 1 && k <= n, || format!("need 1 <= k <= n, got k={k}, n={n}"))?;
    beta_star_partial(n, k, n)
}

/// `id - t*_{m,k}`, one factor of [`gamma_star`].
pub fn gamma_factor<C: Coefficient>(m: usize, k: usize, n: usize) -> Result<TwistedElement<C>> {
    require(k >= 1 && k < m && m <= n, || format!("need 1 <= k < m <= n, got k={k}, m={m}, n={n}"))?;
    Ok(cycle_inv_star(m, k, n)?.one_minus())
}

/// `(id - t*_{n,k})·(id - t*_{n-1,k})···(id - t*_{k+1,k})` for `1 <= k <= n-1`.
pub fn gamma_star<C: Coefficient>(n: usize, k: usize) -> Result<TwistedElement<C>> {
    require(k >= 1 && k < n, || format!("need 1 <= k <= n-1, got k={k}, n={n}"))?;
    let factors = (k + 1..=n).rev().map(|m| gamma_factor(m, k, n)).collect::<Result<Vec<_>>>()?;
    Ok(product(n, factors))
}

/// `id - X_{k,k+1}·t*_{m,k+1}`, one factor of [`delta_star`].
pub fn delta_factor<C: Coefficient>(m: usize, k: usize, n: usize) -> Result<TwistedElement<C>> {
    require(k >= 1 && k < m && m <= n, || format!("need 1 <= k < m <= n, got k={k}, m={m}, n={n}"))?;
    let pair: Polynomial<C> = x_pair(k, k + 1)?.into();
    Ok(cycle_inv_star(m, k + 1, n)?.scale_left(&pair).one_minus())
}

/// `Π_{m=n}^{k+1} (id - X_{k,k+1}·t*_{m,k+1})` for `1 <= k <= n-1`.
pub fn delta_star<C: Coefficient>(n: usize, k: usize) -> Result<TwistedElement<C>> {
    require(k >= 1 && k < n, || format!("need 1 <= k <= n-1, got k={k}, n={n}"))?;
    let factors = (k + 1..=n).rev().map(|m| delta_factor(m, k, n)).collect::<Result<Vec<_>>>()?;
    Ok(product(n, factors))
}

/// [`delta_star`] written with the operator `(t_k*)²` instead of the scalar `X_{k,k+1}`.
pub fn delta_star_operator_form<C: Coefficient>(n: usize, k: usize) -> Result<TwistedElement<C>> {
    require(k >= 1 && k < n, || format!("need 1 <= k <= n-1, got k={k}, n={n}"))?;
    let t = cycle_star::<C>(k, k + 1, n)?;
    let square = &t * &t;
    let factors = (k + 1..=n)
        .rev()
        .map(|m| Ok((&square * &cycle_inv_star(m, k + 1, n)?).one_minus()))
        .collect::<Result<Vec<_>>>()?;
    Ok(product(n, factors))
}

/// `Π_{i ∈ Des(g⁻¹)} X_{k,k+1,…,i}` for `g` fixing `1..=k`.
pub fn omega(n: usize, k: usize, g: &Permutation) -> Result<Monomial> {
    if g.degree() != n {
        return Err(Error::DegreeMismatch { left: n, right: g.degree() });
    }
    if !g.fixes_prefix(k) {
        return Err(Error::OutsideSubgroup { perm: g.to_string(), k });
    }
    let mut out = Monomial::one();
    for i in g.inverse().descent_set() {
        // g⁻¹ fixes 1..=k, so it cannot descend at or before k
        assert!(i > k, "descent {i} of {g}⁻¹ at or below k = {k}");
        out = out.mul(&x_range(k, i));
    }
    Ok(out)
}

/// `Σ_{g ∈ S_1^k × S_{n-k}} ω(g)·g*` for `1 <= k <= n-1`.
pub fn epsilon_star<C: Coefficient>(n: usize, k: usize) -> Result<TwistedElement<C>> {
    require(k >= 1 && k < n, || format!("need 1 <= k <= n-1, got k={k}, n={n}"))?;
    epsilon_sum(n, k, |_| true)
}

/// The part of [`epsilon_star`] supported on permutations with `g(n) = n`.
pub fn epsilon_star_fixing_last<C: Coefficient>(n: usize, k: usize) -> Result<TwistedElement<C>> {
    require(k >= 1 && k < n, || format!("need 1 <= k <= n-1, got k={k}, n={n}"))?;
    epsilon_sum(n, k, |g| g.apply(n) == n)
}

fn epsilon_sum<C: Coefficient>(n: usize, k: usize, keep: impl Fn(&Permutation) -> bool) -> Result<TwistedElement<C>> {
    let mut terms = Vec::new();
    for g in Permutation::fixing_prefix(n, k).filter(|g| keep(g)) {
        let coefficient = omega(n, k, &g)?.mul(&super::x_of_perm(&g));
        terms.push((g, coefficient.into()));
    }
    TwistedElement::from_terms(n, terms)
}

/// The scalar `Π_{j=k+1}^{n} (1 - X_{k,…,j})` for `1 <= k <= n-1`.
pub fn delta_cap<C: Coefficient>(n: usize, k: usize) -> Result<Polynomial<C>> {
    Ok(delta_cap_factors(n, k)?.iter().fold(Polynomial::one(), |acc, f| &acc * f))
}

/// The factors `1 - X_{k,…,j}`, `j = k+1..=n`, of [`delta_cap`].
pub fn delta_cap_factors<C: Coefficient>(n: usize, k: usize) -> Result<Vec<Polynomial<C>>> {
    require(k >= 1 && k < n, || format!("need 1 <= k <= n-1, got k={k}, n={n}"))?;
    Ok((k + 1..=n)
        .map(|j| &Polynomial::one() - &Polynomial::monomial(x_range(k, j)))
        .collect())
}

/// `t_{1,n}·e·t_{n,1}` with both cycles entering untwisted; shifts every index down by one.
pub fn shift_conjugate<C: Coefficient>(e: &TwistedElement<C>) -> TwistedElement<C> {
    let n = e.degree();
    let c = Permutation::cycle(1, n, n).expect("1 <= n");
    e.conjugate_by(&c).expect("same degree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type E = TwistedElement<BigInt>;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> Polynomial<BigInt> {
        s.parse().unwrap()
    }

    fn pair(a: usize, b: usize) -> Polynomial<BigInt> {
        x_pair(a, b).unwrap().into()
    }

    #[test]
    fn starred_cycles_match_star_of_cycle() {
        for n in 1..=5 {
            for a in 1..=n {
                for b in a..=n {
                    assert_eq!(cycle_star::<BigInt>(a, b, n).unwrap(), star(&Permutation::cycle(a, b, n).unwrap()));
                    assert_eq!(
                        cycle_inv_star::<BigInt>(b, a, n).unwrap(),
                        star(&Permutation::cycle_inv(b, a, n).unwrap())
                    );
                }
            }
        }
    }

    #[test]
    fn starred_cycle_examples() {
        let t = cycle_inv_star::<BigInt>(2, 1, 3).unwrap();
        assert_eq!(t, E::term(poly("X[1,2]"), perm("213")));
        assert_eq!(cycle_star::<BigInt>(2, 2, 4).unwrap(), E::identity(4));
        for a in 1..4 {
            let ta = Permutation::transposition(a, 4).unwrap();
            assert_eq!(
                cycle_star::<BigInt>(a, a + 1, 4).unwrap(),
                E::term(Polynomial::var(Variable::new(a, a + 1).unwrap()), ta)
            );
        }
    }

    #[test]
    fn transposition_square() {
        assert_eq!(transposition_star_square::<BigInt>(1, 2).unwrap(), E::scalar(poly("X[1,2]*X[2,1]"), 2));
        for n in 2..=5 {
            for a in 1..n {
                let t = cycle_star::<BigInt>(a, a + 1, n).unwrap();
                let sq = transposition_star_square::<BigInt>(a, n).unwrap();
                assert_eq!(&t * &t, sq);
                assert_eq!(sq.support().collect::<Vec<_>>(), vec![&Permutation::identity(n)]);
            }
        }
        assert!(transposition_star_square::<BigInt>(3, 3).is_err());
    }

    #[test]
    fn alpha_small() {
        assert_eq!(alpha_star::<BigInt>(1), E::identity(1));
        let a2 = alpha_star::<BigInt>(2);
        assert_eq!(a2, &E::identity(2) + &E::term(poly("X[1,2]"), perm("21")));
        let a3 = alpha_star::<BigInt>(3);
        assert_eq!(a3.len(), 6);
        for g in Permutation::all(3) {
            assert_eq!(a3.coefficient(&g), crate::polyring::x_of_perm(&g).into());
        }
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta_star::<BigInt>(3, 3).unwrap(), E::identity(3));
        let t32 = cycle_inv_star::<BigInt>(3, 2, 3).unwrap();
        assert_eq!(beta_star::<BigInt>(3, 2).unwrap(), &t32 + &E::identity(3));
        let t31 = cycle_inv_star::<BigInt>(3, 1, 3).unwrap();
        let t21 = cycle_inv_star::<BigInt>(2, 1, 3).unwrap();
        assert_eq!(beta_star::<BigInt>(3, 1).unwrap(), &(&t31 + &t21) + &E::identity(3));
        assert!(beta_star::<BigInt>(3, 4).is_err());
        assert!(beta_star::<BigInt>(3, 0).is_err());
    }

    #[test]
    fn gamma_examples() {
        let t21 = cycle_inv_star::<BigInt>(2, 1, 2).unwrap();
        assert_eq!(gamma_star::<BigInt>(2, 1).unwrap(), t21.one_minus());
        let g31 = gamma_factor::<BigInt>(3, 1, 3).unwrap();
        let g21 = gamma_factor::<BigInt>(2, 1, 3).unwrap();
        assert_eq!(gamma_star::<BigInt>(3, 1).unwrap(), &g31 * &g21);
        assert_eq!(gamma_star::<BigInt>(4, 3).unwrap(), gamma_factor(4, 3, 4).unwrap());
        assert!(gamma_star::<BigInt>(3, 3).is_err());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_star::<BigInt>(2, 1).unwrap(), E::scalar(&Polynomial::one() - &pair(1, 2), 2));
        assert_eq!(delta_star::<BigInt>(3, 2).unwrap(), E::scalar(&Polynomial::one() - &pair(2, 3), 3));
        let first = cycle_inv_star::<BigInt>(3, 2, 3).unwrap().scale_left(&pair(1, 2)).one_minus();
        let second = E::scalar(&Polynomial::one() - &pair(1, 2), 3);
        assert_eq!(delta_star::<BigInt>(3, 1).unwrap(), &first * &second);
    }

    #[test]
    fn delta_scalar_and_operator_forms_agree() {
        for n in 2..=5 {
            for k in 1..n {
                assert_eq!(delta_star::<BigInt>(n, k).unwrap(), delta_star_operator_form(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(4, 2, &Permutation::identity(4)).unwrap(), Monomial::one());
        assert_eq!(omega(3, 1, &perm("132")).unwrap(), x_pair(1, 2).unwrap());
        assert_eq!(omega(4, 2, &perm("1243")).unwrap(), x_range(2, 3));
        assert!(matches!(omega(3, 1, &perm("213")), Err(Error::OutsideSubgroup { .. })));
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon_star::<BigInt>(2, 1).unwrap(), E::identity(2));
        // S_1^2 × S_1 is trivial
        assert_eq!(epsilon_star::<BigInt>(3, 2).unwrap(), E::identity(3));
        let e31 = epsilon_star::<BigInt>(3, 1).unwrap();
        assert_eq!(e31, &E::identity(3) + &E::term(poly("X[1,2]*X[2,1]*X[2,3]"), perm("132")));
        for n in 2..=5 {
            for k in 1..n {
                let support: Vec<_> = epsilon_star::<BigInt>(n, k).unwrap().support().cloned().collect();
                let expected: Vec<_> = Permutation::fixing_prefix(n, k).collect();
                assert_eq!(support, expected);
            }
        }
    }

    #[test]
    fn epsilon_is_left_inverse_up_to_delta_cap() {
        for n in 2..=5 {
            for k in 1..n {
                let lhs = &epsilon_star::<BigInt>(n, k).unwrap() * &delta_star(n, k).unwrap();
                assert_eq!(lhs, E::scalar(delta_cap(n, k).unwrap(), n), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn delta_cap_examples() {
        assert_eq!(delta_cap::<BigInt>(2, 1).unwrap(), poly("1 - X[1,2]*X[2,1]"));
        assert_eq!(delta_cap::<BigInt>(3, 2).unwrap(), poly("1 - X[2,3]*X[3,2]"));
        let expected = &(&Polynomial::one() - &pair(1, 2)) * &(&Polynomial::one() - &x_range(1, 3).into());
        assert_eq!(delta_cap::<BigInt>(3, 1).unwrap(), expected);
        assert!(delta_cap::<BigInt>(3, 3).is_err());
    }

    #[test]
    fn shift_conjugation() {
        let n = 5;
        for a in 1..n {
            for b in a..n {
                let shifted = shift_conjugate(&cycle_inv_star::<BigInt>(b + 1, a + 1, n).unwrap());
                assert_eq!(shifted, cycle_inv_star(b, a, n).unwrap());
            }
        }
        for a in 1..n - 1 {
            assert_eq!(shift_conjugate(&E::scalar(pair(a + 1, a + 2), n)), E::scalar(pair(a, a + 1), n));
        }
        assert_eq!(shift_conjugate(&E::identity(n)), E::identity(n));
        // explicit untwisted products agree with the direct conjugation
        let e = alpha_star::<BigInt>(3);
        let c = E::basis(Permutation::cycle(1, 3, 3).unwrap());
        let ci = E::basis(Permutation::cycle_inv(3, 1, 3).unwrap());
        assert_eq!(shift_conjugate(&e), &(&c * &e) * &ci);
    }
}
