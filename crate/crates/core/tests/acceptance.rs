//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any failed.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use twisted_sn::polyring::twist_factor;
use twisted_sn::representation::regular_specialization;
use twisted_sn::twisted::{alpha_star, delta_cap, delta_star, epsilon_star, star};
use twisted_sn::{
    verify, verify_alpha_inverse_numeric, AlphaFactorization, BigInt, Element, Identity, Permutation, Specialization,
    VerifierConfig,
};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { passed: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { passed: false, detail: detail.into() }
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

/// Runs `identity` over `degrees`; fails on the first red report.
fn exhaustive(identity: Identity, degrees: impl IntoIterator<Item = usize>) -> std::result::Result<Vec<usize>, String> {
    let config = VerifierConfig::default();
    let mut counts = Vec::new();
    for n in degrees {
        let report = verify(identity, n, &config).map_err(|e| format!("{identity} n={n}: {e}"))?;
        if !report.passed {
            return Err(report.to_string());
        }
        counts.push(report.checked);
    }
    Ok(counts)
}

fn within(limit: Duration, start: Instant, outcome: Outcome) -> Outcome {
    let elapsed = start.elapsed();
    if outcome.passed && elapsed > limit {
        return fail(format!("{} but took {elapsed:.1?} (limit {limit:?})", outcome.detail));
    }
    Outcome { detail: format!("{} in {elapsed:.1?}", outcome.detail), ..outcome }
}

fn all_of(parts: Vec<(Identity, std::ops::RangeInclusive<usize>)>) -> Outcome {
    let mut summary = Vec::new();
    for (id, range) in parts {
        let lo = (*range.start()).max(id.min_degree());
        match exhaustive(id, lo..=*range.end()) {
            Ok(counts) => summary.push(format!("{id} n={lo}..={} ({} checks)", range.end(), counts.iter().sum::<usize>())),
            Err(e) => return fail(e),
        }
    }
    pass(summary.join(", "))
}

fn star_product() -> Outcome {
    let start = Instant::now();
    let outcome = match exhaustive(Identity::StarProduct, 2..=4) {
        Ok(counts) if counts == [4, 36, 576] => pass("all pairs at n=2,3,4 (4+36+576 products)"),
        Ok(counts) => fail(format!("unexpected pair counts {counts:?}")),
        Err(e) => fail(e),
    };
    within(Duration::from_secs(10), start, outcome)
}

fn twist_factor_forms() -> Outcome {
    match exhaustive(Identity::TwistFactorForms, 2..=4) {
        Ok(counts) => pass(format!("difference and intersection forms agree on {} pairs", counts.iter().sum::<usize>())),
        Err(e) => fail(e),
    }
}

fn worked_products() -> Outcome {
    let mut expected: Vec<(String, String, &str)> = Vec::new();
    let mut check = |g1: &str, g2: &str, product: &str, factor: &str, starred: &str| {
        let (g1, g2) = (perm(g1), perm(g2));
        let p: Element = &star(&g1) * &star(&g2);
        expected.push((p.to_string(), product.to_string(), "product"));
        expected.push((twist_factor(&g1, &g2).unwrap().to_string(), factor.to_string(), "factor"));
        let g = g1.compose(&g2).unwrap();
        expected.push((star::<BigInt>(&g).to_string(), starred.to_string(), "starred product"));
    };
    check("132", "312", "X[1,2]*X[2,3]*X[3,2]·(213)", "X[2,3]*X[3,2]", "X[1,2]·(213)");
    check("132", "231", "X[1,2]*X[1,3]*X[2,3]·(321)", "1", "X[1,2]*X[1,3]*X[2,3]·(321)");
    expected.push((star::<BigInt>(&perm("132")).to_string(), "X[2,3]·(132)".into(), "star 132"));
    expected.push((star::<BigInt>(&perm("312")).to_string(), "X[1,3]*X[2,3]·(312)".into(), "star 312"));
    match expected.iter().find(|(got, want, _)| got != want) {
        None => pass(format!("{} strings match byte for byte", expected.len())),
        Some((got, want, what)) => fail(format!("{what}: got {got:?}, want {want:?}")),
    }
}

fn corollaries() -> Outcome {
    all_of(vec![
        (Identity::Braid, 3..=6),
        (Identity::GTimesCycle, 2..=4),
        (Identity::Commutation, 3..=5),
        (Identity::LongestCommutation, 2..=4),
    ])
}

fn decomposition() -> Outcome {
    if let Err(e) = exhaustive(Identity::Decomposition, 1..=6) {
        return fail(e);
    }
    let s3 = [
        ("123", "t[3,3]·t[2,2]·t[1,1]"),
        ("132", "t[3,3]·t[3,2]·t[1,1]"),
        ("312", "t[3,3]·t[3,2]·t[2,1]"),
        ("321", "t[3,3]·t[3,2]·t[3,1]"),
        ("231", "t[3,3]·t[2,2]·t[3,1]"),
        ("213", "t[3,3]·t[2,2]·t[2,1]"),
    ];
    for (g, want) in s3 {
        let got = perm(g).decomposition_text();
        if got != want {
            return fail(format!("{g}: got {got}, want {want}"));
        }
    }
    pass("round trip for n<=6; six S_3 decompositions verbatim")
}

fn alpha_factorization() -> Outcome {
    let start = Instant::now();
    let support = alpha_star::<BigInt>(5).len();
    let outcome = if support != 120 {
        fail(format!("alpha*_5 has {support} terms"))
    } else {
        match exhaustive(Identity::AlphaFactorization, 2..=5) {
            Ok(_) => pass("sum of g* equals ordered beta* product for n=2..5 (120 terms at n=5)"),
            Err(e) => fail(e),
        }
    };
    within(Duration::from_secs(60), start, outcome)
}

fn column_factors() -> Outcome {
    all_of(vec![(Identity::BetaGammaDelta, 2..=5), (Identity::BetaRecursion, 1..=5)])
}

fn shift_conjugation() -> Outcome {
    all_of(vec![(Identity::ShiftConjugation, 2..=5)])
}

/// The literal two-sided statement, next to the forms the library verifies.
fn closed_inverse() -> Outcome {
    let library = all_of(vec![
        (Identity::EpsilonRecursion, 2..=4),
        (Identity::DeltaInverse, 2..=4),
        (Identity::DescentFormula, 1..=5),
    ]);
    if !library.passed {
        return library;
    }
    let mut broken = Vec::new();
    let mut checked = 0;
    for n in 2..=4 {
        for k in 1..n {
            let delta = delta_star::<BigInt>(n, k).unwrap();
            let epsilon = epsilon_star::<BigInt>(n, k).unwrap();
            let cap = Element::scalar(delta_cap::<BigInt>(n, k).unwrap(), n);
            checked += 1;
            if &delta * &epsilon != cap {
                broken.push(format!("(n={n},k={k})"));
            }
        }
    }
    if broken.is_empty() {
        pass(format!("{}; delta*·epsilon* = Delta·id for {checked} cases", library.detail))
    } else {
        fail(format!(
            "{}; but delta*·epsilon* != Delta·id at {} of {checked} cases: {}",
            library.detail,
            broken.len(),
            broken.join(" ")
        ))
    }
}

fn numeric_inverse() -> Outcome {
    let mut lines = Vec::new();
    let start = Instant::now();
    let runs: Vec<(usize, bool, u64)> = vec![(3, true, 1), (3, true, 2), (4, true, 3), (4, false, 4), (4, false, 5)];
    for (n, exact, seed) in runs {
        let report = if exact {
            regular_specialization(n, seed, Specialization::random_rational)
                .and_then(|s| verify_alpha_inverse_numeric(n, &s, 0.0))
        } else {
            regular_specialization(n, seed, Specialization::random_complex)
                .and_then(|s| verify_alpha_inverse_numeric(n, &s, 1e-9))
        };
        match report {
            Ok(r) if r.passed => {
                let worst = r
                    .parameters
                    .iter()
                    .filter(|(k, _)| k.starts_with("deviation"))
                    .map(|(_, v)| v.clone())
                    .collect::<Vec<_>>()
                    .join("/");
                lines.push(format!("n={n} {} [{worst}]", if exact { "exact" } else { "complex" }));
            }
            Ok(r) => return fail(r.to_string()),
            Err(e) => return fail(format!("n={n} seed={seed}: {e}")),
        }
    }
    within(Duration::from_secs(30), start, pass(lines.join(", ")))
}

fn factor_lists() -> Outcome {
    let expected: BTreeMap<usize, Vec<&str>> = BTreeMap::from([
        (2, vec!["beta*_2 = (id - (t1*)^2) · (id - t*[2,1])^-1"]),
        (
            3,
            vec![
                "beta*_2 = (id - (t2*)^2) · (id - t*[3,2])^-1",
                "beta*_3 = (id - (t1*)^2·t*[3,2]) · (id - (t1*)^2) · (id - t*[2,1])^-1 · (id - t*[3,1])^-1",
            ],
        ),
        (
            4,
            vec![
                "beta*_2 = (id - (t3*)^2) · (id - t*[4,3])^-1",
                "beta*_3 = (id - (t2*)^2·t*[4,3]) · (id - (t2*)^2) · (id - t*[3,2])^-1 · (id - t*[4,2])^-1",
                "beta*_4 = (id - (t1*)^2·t*[4,2]) · (id - (t1*)^2·t*[3,2]) · (id - (t1*)^2) · (id - t*[2,1])^-1 · (id - t*[3,1])^-1 · (id - t*[4,1])^-1",
            ],
        ),
    ]);
    for (n, lines) in &expected {
        let text = match AlphaFactorization::<BigInt>::new(*n) {
            Ok(f) => f.to_string(),
            Err(e) => return fail(format!("n={n}: {e}")),
        };
        let got: Vec<&str> = text.lines().filter(|l| l.starts_with("beta*_") && !l.starts_with("beta*_1 ")).collect();
        if got != *lines {
            return fail(format!("n={n}: got {got:?}"));
        }
    }
    pass("beta* factor lists for n=2,3,4 match in count, order and content")
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("star product, exhaustive", star_product),
        ("twist factor forms agree", twist_factor_forms),
        ("worked products", worked_products),
        ("braid, cycle, commutation rules", corollaries),
        ("cycle decomposition", decomposition),
        ("alpha* factorization", alpha_factorization),
        ("beta*·gamma* = delta* and beta recursion", column_factors),
        ("shift conjugation", shift_conjugation),
        ("closed-form inverse data", closed_inverse),
        ("numeric inverse chain", numeric_inverse),
        ("factor lists", factor_lists),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        let tag = if outcome.passed { "PASS" } else { "FAIL" };
        println!("{tag} [{}] {name}: {}", i + 1, outcome.detail);
        failed += usize::from(!outcome.passed);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
