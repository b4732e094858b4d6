use proptest::prelude::*;
use twisted_sn::representation::{specialize_element, specialized_matrix};
use twisted_sn::twisted::{alpha_star, beta_star, gamma_star, star, ElementRecord};
use twisted_sn::{
    left_mult_matrix, verify_all, Basis, BigInt, Element, F64Specialization, Permutation,
    RationalSpecialization, TwistedElement, VerifierConfig,
};

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn starred_element(n: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec((permutation(n), -3i64..=3), 1..5).prop_map(move |terms| {
        terms.into_iter().fold(Element::zero(n), |acc, (g, c)| {
            let term = star::<BigInt>(&g).scale_left(&twisted_sn::Poly::constant(BigInt::from(c)));
            &acc + &term
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn starred_products_stay_starred(a in starred_element(4), b in starred_element(4)) {
        let p = &a * &b;
        prop_assert!(p.starred_coefficients().is_ok());
    }

    #[test]
    fn multiplication_is_associative(a in starred_element(3), b in starred_element(3), c in starred_element(3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn matrices_multiply_like_elements(a in starred_element(3), b in starred_element(3), seed in 0u64..1000) {
        let s = RationalSpecialization::random_rational(3, seed);
        for basis in [Basis::Starred, Basis::Natural] {
            let ma = specialized_matrix(&a, basis, &s).unwrap();
            let mb = specialized_matrix(&b, basis, &s).unwrap();
            let mab = specialized_matrix(&(&a * &b), basis, &s).unwrap();
            prop_assert_eq!(ma.try_mul(&mb).unwrap(), mab);
        }
    }

    #[test]
    fn records_round_trip(a in starred_element(4)) {
        let json = serde_json::to_string(&a.to_record()).unwrap();
        let record: ElementRecord<BigInt> = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(TwistedElement::from_record(record).unwrap(), a);
    }
}

#[test]
fn whole_suite_at_three() {
    let suite = verify_all(3, None, &VerifierConfig::default()).unwrap();
    assert!(suite.passed(), "{:?}", suite.reports.iter().filter(|r| !r.passed).collect::<Vec<_>>());
    assert!(suite.skipped.is_empty());
}

#[test]
fn alpha_matrix_has_full_columns() {
    let m = left_mult_matrix(&alpha_star::<BigInt>(3), Basis::Starred).unwrap();
    assert_eq!(m.order(), 6);
    assert!(m.column_support().iter().all(|&c| c == 6));
}

#[test]
fn column_product_in_float_and_exact() {
    let n = 4;
    let e = &beta_star::<BigInt>(n, 2).unwrap() * &gamma_star::<BigInt>(n, 2).unwrap();
    let exact = RationalSpecialization::random_rational(n, 9);
    let float: F64Specialization = exact.map(twisted_sn::Scalar::from_rational);
    let a = specialize_element(&e, &exact).unwrap();
    let b = specialize_element(&e, &float).unwrap();
    for ((g, x), (h, y)) in a.iter().zip(b.iter()) {
        assert_eq!(g, h);
        let x: f64 = twisted_sn::Scalar::from_rational(x);
        assert!((x - y).abs() < 1e-12);
    }
}

#[test]
fn exact_inverse_of_starred_transposition() {
    // id + t1* is invertible whenever X12*X21 != 1
    let n = 2;
    let e = &Element::identity(n) + &star::<BigInt>(&"21".parse().unwrap());
    let s = RationalSpecialization::random_rational(n, 4);
    let m = specialized_matrix(&e, Basis::Starred, &s).unwrap();
    let inv = m.inverse().unwrap();
    assert_eq!(m.try_mul(&inv).unwrap(), twisted_sn::RationalMatrix::identity(n, Basis::Starred));
}
