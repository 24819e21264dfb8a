//! Randomized property tests for the scalar foundation and the tensor
//! machinery.

use proptest::prelude::*;
use ybfuse::exact::{rat, Polynomial, Rational, RationalFunction};
use ybfuse::linalg::{embed_pair, ExactMatrix, TensorContext};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(small_rational(), 0..=max_deg + 1).prop_map(Polynomial::from_coeffs)
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    small_poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalization_is_idempotent(n in small_poly(4), d in nonzero_poly(4)) {
        let f = RationalFunction::new(n, d).unwrap();
        let again = RationalFunction::new(f.numerator().clone(), f.denominator().clone()).unwrap();
        prop_assert_eq!(f, again);
    }

    #[test]
    fn common_factors_cancel(p in small_poly(3), q in nonzero_poly(3), r in nonzero_poly(2)) {
        let direct = RationalFunction::new(p.clone(), q.clone()).unwrap();
        let inflated = RationalFunction::new(p.mul(&r), q.mul(&r)).unwrap();
        prop_assert_eq!(direct, inflated);
    }

    #[test]
    fn evaluation_is_multiplicative(
        f_num in small_poly(3), f_den in nonzero_poly(3),
        g_num in small_poly(3), g_den in nonzero_poly(3),
        x in small_rational(),
    ) {
        let f = RationalFunction::new(f_num, f_den).unwrap();
        let g = RationalFunction::new(g_num, g_den).unwrap();
        let prod = f.mul(&g);
        // compare only when no side hits a pole
        if let (Ok(fx), Ok(gx), Ok(px)) = (f.eval_at(&x), g.eval_at(&x), prod.eval_at(&x)) {
            prop_assert_eq!(px, fx * gx);
        }
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(4), b in nonzero_poly(4)) {
        let g = ybfuse::exact::poly_gcd(&a, &b);
        prop_assert!(!g.is_zero());
        let (_, ra) = a.div_rem(&g);
        let (_, rb) = b.div_rem(&g);
        prop_assert!(ra.is_zero());
        prop_assert!(rb.is_zero());
    }
}

fn small_matrix(n: usize) -> impl Strategy<Value = ExactMatrix<Rational>> {
    prop::collection::vec(small_rational(), n * n)
        .prop_map(move |v| ExactMatrix::from_fn(n, n, |r, c| v[r * n + c].clone()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn kron_associativity(a in small_matrix(2), b in small_matrix(2), c in small_matrix(2)) {
        prop_assert_eq!(a.kron(&b.kron(&c)), a.kron(&b).kron(&c));
    }

    #[test]
    fn disjoint_embeddings_commute(op1 in small_matrix(4), op2 in small_matrix(4)) {
        let ctx = TensorContext::new(4, 2);
        let a = embed_pair(&ctx, &op1, 1, 2).unwrap();
        let b = embed_pair(&ctx, &op2, 3, 4).unwrap();
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        let a = embed_pair(&ctx, &op1, 1, 4).unwrap();
        let b = embed_pair(&ctx, &op2, 3, 2).unwrap();
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }
}
