use num::{One, Signed, Zero};
use proptest::prelude::*;

use zmx::cli::{describe, emit_report, parse_matrix, to_json, to_plain, ReportFormat};
use zmx::construct::{bdsw_matrix, from_cyclic_params, CyclicParams};
use zmx::cyclic::{
    cyclic_det, cyclic_inverse, cyclic_products, is_bdsw, is_full, is_inverse_cyclic, is_inverse_cyclic_product_form,
};
use zmx::graph::{digraph_of, is_irreducible, maybee_inverse};
use zmx::matcore::{
    complementary_minor_check, det, inverse, principal_minor, principal_submatrix, rat, IndexSet, Rational,
};
use zmx::zclass::{z_decompose, Classifier};
use zmx::Matrix;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, prop_oneof![3 => Just(1i64), 1 => 2i64..=3]).prop_map(|(p, q)| rat(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn matrix(lo: usize, hi: usize) -> impl Strategy<Value = Matrix> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(rational(), n * n).prop_map(move |v| Matrix::from_fn(n, |i, j| v[i * n + j].clone()))
    })
}

fn nonsingular(lo: usize, hi: usize) -> impl Strategy<Value = Matrix> {
    matrix(lo, hi).prop_filter("nonsingular", |a| !det(a).is_zero())
}

fn cyclic_params(lo: usize, hi: usize, zeros: bool) -> impl Strategy<Value = CyclicParams> {
    (lo..=hi).prop_flat_map(move |n| {
        let off = if zeros { rational().boxed() } else { nonzero_rational().boxed() };
        (proptest::collection::vec(nonzero_rational(), n), proptest::collection::vec(off.clone(), n - 1), off).prop_map(
            move |(d, s, c)| {
                let c = if n == 1 { Rational::zero() } else { c };
                CyclicParams::new(d, s, c).expect("nonzero diagonal")
            },
        )
    })
}

fn bdsw(lo: usize, hi: usize) -> impl Strategy<Value = Matrix> {
    (lo..=hi).prop_flat_map(|n| {
        (
            proptest::collection::vec(nonzero_rational(), n),
            proptest::collection::vec(nonzero_rational(), n - 1),
            nonzero_rational(),
        )
            .prop_map(|(d, s, c)| bdsw_matrix(&d, &s, &c).expect("valid parameters"))
    })
}

fn mask_set(n: usize, mask: u64) -> IndexSet {
    IndexSet::from_mask(n, mask % ((1 << n) - 1) + 1).expect("nonempty")
}

/// Laplace expansion along the first row; independent of elimination.
fn cofactor_det(a: &Matrix) -> Rational {
    let n = a.order();
    if n == 1 {
        return a[(0, 0)].clone();
    }
    (0..n)
        .filter(|&j| !a[(0, j)].is_zero())
        .map(|j| {
            let minor = Matrix::from_fn(n - 1, |r, c| a[(r + 1, if c < j { c } else { c + 1 })].clone());
            let term = &a[(0, j)] * cofactor_det(&minor);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn bareiss_matches_cofactor_expansion(a in matrix(1, 5)) {
        prop_assert_eq!(det(&a), cofactor_det(&a));
    }

    #[test]
    fn det_is_multiplicative(a in matrix(3, 3), b in matrix(3, 3)) {
        prop_assert_eq!(det(&(&a * &b)), det(&a) * det(&b));
    }

    #[test]
    fn inverse_is_two_sided_and_involutive(a in nonsingular(1, 6)) {
        let b = inverse(&a).unwrap();
        prop_assert!((&a * &b).is_identity());
        prop_assert!((&b * &a).is_identity());
        prop_assert_eq!(det(&a) * det(&b), Rational::one());
        prop_assert_eq!(inverse(&b).unwrap(), a);
    }

    #[test]
    fn complementary_minor_identity(a in nonsingular(2, 5), m1 in any::<u64>(), m2 in any::<u64>()) {
        let n = a.order();
        let alpha = mask_set(n, m1);
        let beta = mask_set(n, m2);
        prop_assume!(alpha.len() == beta.len() && alpha.len() < n);
        prop_assert!(complementary_minor_check(&a, &alpha, &beta).unwrap());
    }

    #[test]
    fn path_sum_inverse_matches_elimination(a in nonsingular(1, 4)) {
        prop_assert_eq!(maybee_inverse(&a).unwrap(), inverse(&a).unwrap());
    }

    #[test]
    fn inversion_preserves_irreducibility(a in nonsingular(1, 6)) {
        let b = inverse(&a).unwrap();
        prop_assert_eq!(is_irreducible(&digraph_of(&a)), is_irreducible(&digraph_of(&b)));
    }

    #[test]
    fn cyclic_parameters_round_trip(p in cyclic_params(1, 7, true)) {
        let a = from_cyclic_params(&p);
        prop_assert!(is_inverse_cyclic(&a));
        prop_assert_eq!(CyclicParams::from_matrix(&a).unwrap(), p);
    }

    #[test]
    fn cyclic_determinant_formula(p in cyclic_params(1, 7, true)) {
        let a = from_cyclic_params(&p);
        let d = det(&a);
        prop_assert_eq!(cyclic_det(&a).unwrap(), d.clone());
        let cp = cyclic_products(&a);
        prop_assert_eq!(cp.d == cp.c, d.is_zero());
    }

    #[test]
    fn principal_submatrices_inherit_the_cyclic_property(p in cyclic_params(2, 7, true), m in any::<u64>()) {
        let a = from_cyclic_params(&p);
        let s = mask_set(a.order(), m);
        prop_assert!(is_inverse_cyclic(&principal_submatrix(&a, &s).unwrap()));
    }

    #[test]
    fn product_form_agrees_on_full_matrices(a in matrix(2, 6)) {
        prop_assume!(is_full(&a));
        prop_assert_eq!(is_inverse_cyclic(&a), is_inverse_cyclic_product_form(&a));
    }

    #[test]
    fn product_form_agrees_on_generated_matrices(p in cyclic_params(2, 6, false)) {
        let a = from_cyclic_params(&p);
        prop_assert!(is_inverse_cyclic_product_form(&a));
    }

    #[test]
    fn diagonal_products_are_constant(p in cyclic_params(1, 7, true)) {
        let a = from_cyclic_params(&p);
        let cp = cyclic_products(&a);
        prop_assume!(cp.d != cp.c);
        let b = cyclic_inverse(&a).unwrap();
        prop_assert_eq!(&b, &inverse(&a).unwrap());
        let k = &cp.d / cp.d_minus_c();
        for i in 0..a.order() {
            prop_assert_eq!(&a[(i, i)] * &b[(i, i)], k.clone());
        }
    }

    #[test]
    fn full_cyclic_inverse_is_bdsw(p in cyclic_params(2, 7, false)) {
        let a = from_cyclic_params(&p);
        let cp = cyclic_products(&a);
        prop_assume!(cp.d != cp.c);
        prop_assert!(is_full(&a));
        prop_assert!(is_bdsw(&inverse(&a).unwrap()));
    }

    #[test]
    fn bdsw_proper_principal_submatrices_are_nonsingular(b in bdsw(2, 7), m in any::<u64>()) {
        let n = b.order();
        let s = mask_set(n, m);
        prop_assume!(s.len() < n);
        prop_assert!(!principal_minor(&b, &s).unwrap().is_zero());
    }

    #[test]
    fn nonsingular_bdsw_inverse_is_full_and_cyclic(b in bdsw(2, 7)) {
        prop_assume!(!det(&b).is_zero());
        let a = inverse(&b).unwrap();
        prop_assert!(is_full(&a));
        prop_assert!(is_inverse_cyclic(&a));
    }

    #[test]
    fn plain_and_json_round_trip(a in matrix(1, 6)) {
        prop_assert_eq!(parse_matrix(&to_plain(&a)).unwrap(), a.clone());
        prop_assert_eq!(parse_matrix(&to_json(&a)).unwrap(), a);
    }

    #[test]
    fn reports_are_byte_stable(a in matrix(1, 5)) {
        let c = Classifier::default();
        for format in [ReportFormat::Text, ReportFormat::Json] {
            let (r1, i1) = describe(&a, &c).unwrap();
            let (r2, i2) = describe(&a.clone(), &c).unwrap();
            prop_assert_eq!(emit_report(&r1, &i1, format), emit_report(&r2, &i2, format));
        }
    }

    #[test]
    fn z_representation_reconstructs(a in matrix(1, 5), slack in 0i64..4) {
        let z = a.map(|v| if v.is_positive() { -v.clone() } else { v.clone() });
        let z = Matrix::from_fn(z.order(), |i, j| if i == j { a[(i, j)].clone() } else { z[(i, j)].clone() });
        let t = z.diagonal().max().unwrap().clone() + Rational::from_integer(slack.into());
        let rep = z_decompose(&z, &t).unwrap();
        prop_assert!(rep.b.is_nonnegative());
        prop_assert_eq!(rep.reconstruct(), z);
    }

    #[test]
    fn taxonomy_is_consistent(a in matrix(2, 6)) {
        let z = Matrix::from_fn(a.order(), |i, j| {
            if i == j { a[(i, j)].clone() } else { -a[(i, j)].abs() }
        });
        let c = Classifier::default();
        let r = c.classify(&z).unwrap();
        let n = z.order();
        let s = r.l_index.unwrap();
        prop_assert!(s <= n);
        prop_assert_eq!(r.is_m, s == n);
        prop_assert!(!r.is_nonsingular_m || r.is_m);
        prop_assert!(!r.is_n || r.is_n0);
        prop_assert!(!r.is_n0 || s == n - 1);
        prop_assert!(!r.is_f0 || s == n - 2);
        prop_assert_eq!(c.l_index(&z).unwrap(), s);
    }
}

#[test]
fn taxonomy_on_named_matrices() {
    let c = Classifier::default();
    assert!(c.is_m(&Matrix::from_ints(&[[1, -1], [-1, 1]])).unwrap());
    assert!(!c.is_m(&Matrix::from_ints(&[[0, -1], [-1, 0]])).unwrap());
    assert_eq!(c.l_index(&Matrix::identity(5)).unwrap(), 5);
}
