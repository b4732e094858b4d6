//! Left-multiplication matrices of algebra elements, specialization of the
//! variables to scalars, and numeric checks of the inverse of `α*_n`.

mod export;
mod matrix;
mod numeric;
mod specialization;

pub use export::{matrix_to_csv, matrix_to_json, matrix_to_text};
pub use matrix::{left_mult_matrix, specialize_element, specialize_matrix, specialized_matrix, AlgebraMatrix, Basis};
pub use numeric::{
    alpha_inverse_chain_matrix, orbit_regularity_check, regular_specialization, regularity_check,
    regularity_check_all, verify_alpha_inverse_numeric, verify_factorization_numeric,
};
pub use specialization::Specialization;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutations::Permutation;
    use crate::polyring::Polynomial;
    use crate::twisted::{alpha_star, beta_star, cycle_star, epsilon_star, gamma_star, star, TwistedElement};
    use num_bigint::BigInt;
    use num_complex::Complex64;
    use num_rational::BigRational;
    use num_traits::Zero;

    type E = TwistedElement<BigInt>;
    type P = Polynomial<BigInt>;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn identity_and_star_matrices() {
        for basis in [Basis::Starred, Basis::Natural] {
            let m = left_mult_matrix(&E::identity(3), basis).unwrap();
            assert_eq!(m, AlgebraMatrix::<P>::identity(3, basis));
            assert_eq!(m.order(), 6);
        }
        let m = left_mult_matrix(&star::<BigInt>(&perm("213")), Basis::Starred).unwrap();
        assert_eq!(m.column_support(), vec![1; 6]);
        assert!(left_mult_matrix(&E::basis(perm("21")), Basis::Starred).is_err());
    }

    #[test]
    fn symbolic_homomorphism() {
        let elements = [alpha_star::<BigInt>(3), gamma_star(3, 1).unwrap(), epsilon_star(3, 1).unwrap()];
        for basis in [Basis::Starred, Basis::Natural] {
            for a in &elements {
                for b in &elements {
                    let lhs = left_mult_matrix(&(a * b), basis).unwrap();
                    let rhs = left_mult_matrix(a, basis).unwrap().try_mul(&left_mult_matrix(b, basis).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn numeric_homomorphism_at_four() {
        let s = Specialization::random_rational(4, 11);
        let a = cycle_star::<BigInt>(1, 3, 4).unwrap().one_minus();
        let b = beta_star::<BigInt>(4, 2).unwrap();
        let lhs = specialized_matrix(&(&a * &b), Basis::Starred, &s).unwrap();
        let rhs = specialized_matrix(&a, Basis::Starred, &s)
            .unwrap()
            .try_mul(&specialized_matrix(&b, Basis::Starred, &s).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn element_specialization() {
        let s = Specialization::<BigRational>::zero(2).with(1, 2, q(1, 2)).unwrap().with(2, 1, q(1, 3)).unwrap();
        let values = specialize_element(&alpha_star::<BigInt>(2), &s).unwrap();
        assert_eq!(values[&perm("12")], q(1, 1));
        assert_eq!(values[&perm("21")], q(1, 2));
        let id = specialize_element(&E::identity(3), &Specialization::random_rational(3, 0)).unwrap();
        assert_eq!(id.len(), 1);
    }

    #[test]
    fn regularity() {
        let zero = Specialization::<BigRational>::zero(4);
        assert!(regularity_check_all(&zero, 4).unwrap());
        let bad = Specialization::<BigRational>::zero(3).with(1, 2, q(2, 1)).unwrap().with(2, 1, q(1, 2)).unwrap();
        assert!(!regularity_check(&bad, 3, 1).unwrap());
        assert!(regularity_check(&bad, 3, 2).unwrap());
        // X[2,3]·X[3,2] = 1 is only hit by the images of Delta under S_3
        let moved = Specialization::<BigRational>::zero(3).with(2, 3, q(2, 1)).unwrap().with(3, 2, q(1, 2)).unwrap();
        assert!(!regularity_check(&moved, 3, 2).unwrap());
        let outside = Specialization::<BigRational>::zero(3).with(1, 3, q(2, 1)).unwrap().with(3, 1, q(1, 2)).unwrap();
        assert!(regularity_check_all(&outside, 3).unwrap());
        assert!(!orbit_regularity_check(&outside, 3).unwrap());
        assert!(regularity_check_all(&Specialization::random_rational(4, 3), 4).unwrap());
    }

    #[test]
    fn two_by_two_inverse_is_exact() {
        let s = Specialization::<BigRational>::zero(2).with(1, 2, q(1, 2)).unwrap().with(2, 1, q(1, 3)).unwrap();
        let r = verify_alpha_inverse_numeric(2, &s, 0.0).unwrap();
        assert!(r.passed, "{r}");
        let chain = alpha_inverse_chain_matrix(2, &s).unwrap();
        // M = [[1, 1/6], [1, 1]]
        assert_eq!(*chain.get(0, 0), q(6, 5));
        assert_eq!(*chain.get(1, 0), -q(6, 5));
    }

    #[test]
    fn three_exact_and_four_complex() {
        let s = regular_specialization(3, 5, Specialization::random_rational).unwrap();
        assert!(verify_alpha_inverse_numeric(3, &s, 0.0).unwrap().passed);
        let c = regular_specialization(4, 5, Specialization::<Complex64>::random_complex).unwrap();
        let r = verify_alpha_inverse_numeric(4, &c, 1e-9).unwrap();
        assert!(r.passed, "{r}");
    }

    #[test]
    fn singular_specialization_is_refused() {
        let bad = Specialization::<BigRational>::zero(2).with(1, 2, q(1, 1)).unwrap().with(2, 1, q(1, 1)).unwrap();
        assert!(verify_alpha_inverse_numeric(2, &bad, 0.0).is_err());
    }

    #[test]
    fn column_factorizations_hold_numerically() {
        for n in 2..=4 {
            let s = Specialization::random_rational(n, 2);
            let r = verify_factorization_numeric(n, &s, 0.0).unwrap();
            assert!(r.passed, "{r}");
            assert_eq!(r.checked, n);
        }
    }

    #[test]
    fn gauss_inverse_round_trip() {
        let s = Specialization::random_rational(3, 9);
        let m = specialized_matrix(&gamma_star::<BigInt>(3, 1).unwrap(), Basis::Natural, &s).unwrap();
        let product = m.try_mul(&m.inverse().unwrap()).unwrap();
        assert_eq!(product, AlgebraMatrix::identity(3, Basis::Natural));
        let z = AlgebraMatrix::<BigRational>::zero(2, Basis::Starred);
        assert!(z.inverse().is_err());
        assert!(BigRational::zero().is_zero());
    }

    #[test]
    fn exports() {
        let m = left_mult_matrix(&alpha_star::<BigInt>(2), Basis::Starred).unwrap();
        let js = matrix_to_json(&m, None);
        assert_eq!(js["basis"], "starred");
        assert_eq!(js["basis_order"], serde_json::json!(["12", "21"]));
        assert_eq!(js["entries"][0][1], "X[1,2]*X[2,1]");
        assert_eq!(js["entries"][1][0], "1");
        let s = Specialization::<BigRational>::zero(2).with(1, 2, q(1, 2)).unwrap();
        let csv = matrix_to_csv(&specialize_matrix(&m, &s).unwrap(), Some(&s.to_json()));
        assert_eq!(
            csv,
            "# n=2\n# basis=starred\n# basis_order=12 21\n# specialization={\"1,2\":\"1/2\",\"2,1\":\"0\"}\nrow,12,21\n12,1,0\n21,1,1\n"
        );
    }
}
