use std::collections::BTreeSet;
use std::fmt::Display;

use itertools::{iproduct, Itertools};
use num_bigint::BigInt;

use super::{run_instances, Counterexample, Identity, VerificationReport};
use crate::permutations::Permutation;
use crate::polyring::{
    twist_factor_by_difference, twist_factor_by_intersection, x_pair, x_range, Monomial, Polynomial,
};
use crate::twisted::{
    alpha_star, beta_star, beta_star_partial, cycle_inv_star, cycle_star, delta_cap, delta_star, epsilon_star,
    epsilon_star_fixing_last, gamma_star, shift_conjugate, star, TwistedElement,
};

type E = TwistedElement<BigInt>;
type P = Polynomial<BigInt>;

fn compare<T: PartialEq + Display>(lhs: &T, rhs: &T, inputs: impl FnOnce() -> String) -> Option<Counterexample> {
    (lhs != rhs).then(|| Counterexample { inputs: inputs(), lhs: lhs.to_string(), rhs: rhs.to_string() })
}

fn product(n: usize, factors: impl IntoIterator<Item = E>) -> E {
    factors.into_iter().fold(E::identity(n), |acc, f| &acc * &f)
}

fn pairs(n: usize) -> Vec<(Permutation, Permutation)> {
    let all: Vec<Permutation> = Permutation::all(n).collect();
    iproduct!(all.iter().cloned(), all.iter().cloned()).collect()
}

fn t(a: usize, n: usize) -> E {
    cycle_star(a, a + 1, n).expect("1 <= a < n")
}

fn t_inv(b: usize, a: usize, n: usize) -> E {
    cycle_inv_star(b, a, n).expect("a <= b <= n")
}

fn pair_scalar(a: usize, b: usize, n: usize) -> E {
    E::scalar(x_pair(a, b).expect("a != b").into(), n)
}

pub(super) fn run(identity: Identity, n: usize) -> VerificationReport {
    let name = identity.name();
    match identity {
        Identity::StarProduct => run_instances(name, n, &[], pairs(n), |(g1, g2)| {
            let g = g1.compose_unchecked(g2);
            let lhs: E = &star(g1) * &star(g2);
            let rhs = star(&g).scale_left(&twist_factor_by_difference(g1, &g).into());
            compare(&lhs, &rhs, || format!("g1 = {g1}, g2 = {g2}"))
        }),
        Identity::TwistFactorForms => run_instances(name, n, &[], pairs(n), |(g1, g2)| {
            let lhs = twist_factor_by_difference(g1, &g1.compose_unchecked(g2));
            let rhs = twist_factor_by_intersection(g1, g2);
            compare(&lhs, &rhs, || format!("g1 = {g1}, g2 = {g2}"))
        }),
        Identity::LengthAdditive => run_instances(name, n, &[], pairs(n), |(g1, g2)| {
            let g = g1.compose_unchecked(g2);
            let factor = twist_factor_by_difference(g1, &g);
            let additive = g.length() == g1.length() + g2.length();
            let inputs = || format!("g1 = {g1}, g2 = {g2}");
            if factor.is_one() != additive {
                return Some(Counterexample {
                    inputs: inputs(),
                    lhs: format!("X(g1,g2) = {factor}"),
                    rhs: format!("l(g1) + l(g2) = {}, l(g1g2) = {}", g1.length() + g2.length(), g.length()),
                });
            }
            if additive {
                return compare(&(&star::<BigInt>(g1) * &star(g2)), &star(&g), inputs);
            }
            None
        }),
        Identity::SquareRule => run_instances(name, n, &[], (1..n).collect(), |&a| {
            let lhs = &t(a, n) * &t(a, n);
            compare(&lhs, &pair_scalar(a, a + 1, n), || format!("a = {a}"))
        }),
        Identity::Braid => {
            let instances: Vec<(usize, usize)> = (1..n - 1)
                .map(|a| (a, a + 1))
                .chain(iproduct!(1..n, 1..n).filter(|(a, b)| a + 2 <= *b))
                .collect();
            run_instances(name, n, &[], instances, |&(a, b)| {
                if b == a + 1 {
                    let lhs = product(n, [t(a, n), t(b, n), t(a, n)]);
                    let rhs = product(n, [t(b, n), t(a, n), t(b, n)]);
                    compare(&lhs, &rhs, || format!("a = {a} (three-term braid)"))
                } else {
                    let lhs = &t(a, n) * &t(b, n);
                    let rhs = &t(b, n) * &t(a, n);
                    compare(&lhs, &rhs, || format!("a = {a}, b = {b} (distant commutation)"))
                }
            })
        }
        Identity::GTimesCycle => g_times_cycle(name, n),
        Identity::Commutation => {
            let instances: Vec<(usize, usize, usize)> =
                (1..=n).flat_map(|k| (k + 1..=n).flat_map(move |m| (m + 1..=n).map(move |p| (k, m, p)))).collect();
            run_instances(name, n, &[("domain", "1 <= k < m < p <= n".into())], instances, |&(k, m, p)| {
                let lhs = &t_inv(m, k, n) * &t_inv(p, k, n);
                let rhs = product(n, [t(k, n), t(k, n), t_inv(p, k + 1, n), t_inv(m - 1, k, n)]);
                compare(&lhs, &rhs, || format!("k = {k}, m = {m}, p = {p}"))
            })
        }
        Identity::LongestCommutation => {
            let w = Permutation::longest(n);
            run_instances(name, n, &[], Permutation::all(n).collect(), |g| {
                let inputs = || format!("g = {g}");
                let lhs: E = &star(&g.compose_unchecked(&w)) * &star(&w);
                let middle: E = &star(&w) * &star(&w.compose_unchecked(g));
                if let Some(c) = compare(&lhs, &middle, inputs) {
                    return Some(c);
                }
                let gi = g.inverse();
                let coefficient = iproduct!(1..=n, 1..=n)
                    .filter(|(a, b)| a < b && gi.apply(*a) < gi.apply(*b))
                    .fold(Monomial::one(), |acc, (a, b)| acc.mul(&x_pair(a, b).expect("a < b")));
                compare(&middle, &star(g).scale_left(&coefficient.into()), inputs)
            })
        }
        Identity::Decomposition => run_instances(name, n, &[], Permutation::all(n).collect(), |g| {
            let factors = g.decompose();
            let inputs = || format!("g = {g}");
            let order: Vec<usize> = factors.iter().map(|&(_, j)| j).collect();
            let in_range = factors.iter().all(|&(k, j)| j <= k && k <= n);
            if !in_range || order != (1..=n).rev().collect::<Vec<_>>() {
                return Some(Counterexample {
                    inputs: inputs(),
                    lhs: g.decomposition_text(),
                    rhs: "factors t[k_j,j] for j = n..1 with j <= k_j <= n".into(),
                });
            }
            let rebuilt = Permutation::from_decomposition(&factors, n).expect("valid factors");
            if let Some(c) = compare(&rebuilt, g, inputs) {
                return Some(c);
            }
            let starred = product(n, factors.iter().map(|&(k, j)| t_inv(k, j, n)));
            compare(&starred, &star(g), inputs)
        }),
        Identity::AlphaFactorization => run_instances(name, n, &[], vec![n], |&n| {
            let lhs = alpha_star::<BigInt>(n);
            let rhs = product(n, (1..=n).rev().map(|k| beta_star(n, k).expect("1 <= k <= n")));
            compare(&lhs, &rhs, || format!("n = {n}"))
        }),
        Identity::BetaRecursion => {
            let instances: Vec<(usize, usize)> = (1..n).flat_map(|k| (k + 1..=n).map(move |p| (k, p))).collect();
            run_instances(name, n, &[], instances, |&(k, p)| {
                let beta = |q| beta_star_partial::<BigInt>(n, k, q).expect("k <= q <= n");
                let lhs = &beta(p) * &t_inv(p, k, n).one_minus();
                let square = &t(k, n) * &t(k, n);
                let rhs = &(&square * &t_inv(p, k + 1, n)).one_minus() * &beta(p - 1);
                compare(&lhs, &rhs, || format!("k = {k}, p = {p}"))
            })
        }
        Identity::BetaGammaDelta => run_instances(name, n, &[], (1..n).collect(), |&k| {
            let lhs = &beta_star::<BigInt>(n, k).expect("k < n") * &gamma_star(n, k).expect("k < n");
            compare(&lhs, &delta_star(n, k).expect("k < n"), || format!("k = {k}"))
        }),
        Identity::ShiftConjugation => {
            let cycles = (1..n).flat_map(|a| (a..n).map(move |b| (a, Some(b))));
            let pairs = (1..n.saturating_sub(1)).map(|a| (a, None));
            let instances: Vec<(usize, Option<usize>)> = cycles.chain(pairs).collect();
            let domain = "1 <= a <= b <= n-1 for cycles, 1 <= a <= n-2 for pair monomials".to_string();
            run_instances(name, n, &[("domain", domain)], instances, |&(a, b)| match b {
                Some(b) => {
                    let lhs = shift_conjugate(&t_inv(b + 1, a + 1, n));
                    compare(&lhs, &t_inv(b, a, n), || format!("a = {a}, b = {b}"))
                }
                None => {
                    let lhs = shift_conjugate(&pair_scalar(a + 1, a + 2, n));
                    compare(&lhs, &pair_scalar(a, a + 1, n), || format!("a = {a} (pair monomial)"))
                }
            })
        }
        Identity::EpsilonRecursion => run_instances(name, n, &[], (1..n).collect(), |&k| {
            let inputs = || format!("k = {k}");
            let epsilon = epsilon_star::<BigInt>(n, k).expect("k < n");
            let restricted = epsilon_star_fixing_last::<BigInt>(n, k).expect("k < n");
            let shifted = if k + 1 < n { shift_conjugate(&epsilon_star(n, k + 1).expect("k+1 < n")) } else { E::identity(n) };
            if let Some(c) = compare(&restricted, &shifted, inputs) {
                return Some(c);
            }
            let factor = t_inv(n, k + 1, n).scale_left(&x_pair(k, k + 1).expect("k < n").into()).one_minus();
            let lhs = &epsilon * &factor;
            let scalar = &P::one() - &P::monomial(x_range(k, n));
            compare(&lhs, &restricted.scale_left(&scalar), inputs)
        }),
        Identity::DeltaInverse => {
            let note = "delta*·(Delta)^-1·epsilon* = id checked as N·id with N the product of the distinct Delta images";
            run_instances(name, n, &[("right_inverse", note.into())], (1..n).collect(), |&k| {
                let inputs = || format!("k = {k}");
                let delta = delta_star::<BigInt>(n, k).expect("k < n");
                let epsilon = epsilon_star::<BigInt>(n, k).expect("k < n");
                let cap = delta_cap::<BigInt>(n, k).expect("k < n");
                if let Some(c) = compare(&(&epsilon * &delta), &E::scalar(cap.clone(), n), inputs) {
                    return Some(c);
                }
                let (cleared, norm) = cleared_right_factor(&delta, &cap);
                compare(&(&cleared * &epsilon), &E::scalar(norm, n), inputs)
            })
        }
        Identity::DescentFormula => {
            let instances: Vec<(usize, Permutation)> =
                (0..n).flat_map(|k| Permutation::fixing_prefix(n, k).map(move |g| (k, g))).collect();
            run_instances(name, n, &[("range", "descents compared within k+1..n-1".into())], instances, |(k, g)| {
                let (lhs, rhs) = descent_sides(*k, g, true);
                compare(&fmt_set(&lhs), &fmt_set(&rhs), || format!("k = {k}, g = {g}"))
            })
        }
    }
}

fn g_times_cycle(name: &str, n: usize) -> VerificationReport {
    // (g, a, b, general): general formula for a < b, or the preserved-block case j = a <= k = b
    let mut instances = Vec::new();
    for g in Permutation::all(n) {
        for (a, b) in iproduct!(1..=n, 1..=n).filter(|(a, b)| a < b) {
            instances.push((g.clone(), a, b, true));
        }
    }
    for j in 1..=n {
        for g in Permutation::all(n).filter(|g| (1..=j).all(|i| g.apply(i) <= j)) {
            for k in j..=n {
                instances.push((g.clone(), j, k, false));
            }
        }
    }
    run_instances(name, n, &[], instances, |(g, a, b, general)| {
        let (a, b) = (*a, *b);
        let moved = g.compose_unchecked(&Permutation::cycle_inv(b, a, n).expect("a <= b"));
        let lhs: E = &star(g) * &t_inv(b, a, n);
        if *general {
            let coefficient = (a + 1..=b)
                .filter(|&j| g.apply(a) > g.apply(j))
                .fold(Monomial::one(), |acc, j| acc.mul(&x_pair(g.apply(a), g.apply(j)).expect("distinct")));
            compare(&lhs, &star(&moved).scale_left(&coefficient.into()), || format!("g = {g}, a = {a}, b = {b}"))
        } else {
            compare(&lhs, &star(&moved), || format!("g = {g}, j = {a}, k = {b} (g preserves 1..j)"))
        }
    })
}

/// `(N/(g.Δ))`-scaled terms of `δ*` and `N`, the product of the distinct images `g.Δ`
/// over the support of `δ*`; `cleared·ε* = N·id` is `δ*·Δ⁻¹·ε* = id` times `N`.
fn cleared_right_factor(delta: &E, cap: &P) -> (E, P) {
    let images: Vec<P> = delta.support().map(|g| cap.act(g)).unique().collect();
    let norm = images.iter().fold(P::one(), |acc, p| &acc * p);
    let terms = delta.terms().map(|(g, c)| {
        let own = cap.act(g);
        let others = images.iter().filter(|p| **p != own).fold(P::one(), |acc, p| &acc * p);
        (g.clone(), c * &others)
    });
    (E::from_terms(delta.degree(), terms).expect("same degree"), norm)
}

/// Both sides of the descent formula for `g` fixing `1..=k`, optionally cut to `k+1..n-1`.
pub(crate) fn descent_sides(k: usize, g: &Permutation, restrict: bool) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let n = g.degree();
    let gi = g.inverse();
    let cycle = Permutation::cycle_inv(n, k + 1, n).expect("k < n");
    let lhs = cycle.compose_unchecked(&gi).descent_set();
    let last = g.apply(n);
    let mut rhs = gi.descent_set();
    rhs.remove(&last);
    rhs.insert(last - 1);
    if restrict {
        rhs.retain(|&i| i > k && i < n);
    }
    (lhs, rhs)
}

struct SetText(String);

impl PartialEq for SetText {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl Display for SetText {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn fmt_set(s: &BTreeSet<usize>) -> SetText {
    SetText(format!("{{{}}}", s.iter().join(",")))
}
