use num_traits::Zero;
use proptest::prelude::*;

use kummer_hessian::correspondence::{branch_to_mu, mu_to_branch, BranchTriple, Normalization};
use kummer_hessian::cyclic::CyclicOrder;
use kummer_hessian::hessian::{hessian_closed_form, hessian_in_p4, PentahedralData};
use kummer_hessian::invariant::{alpha_of, cubic_condition, is_kummer_hessian};
use kummer_hessian::kummer::{incidence, TropeLabel, TwoTorsionLabel};
use kummer_hessian::matrix::Matrix;
use kummer_hessian::poly::VarTable;
use kummer_hessian::scalar::{int, rational};
use kummer_hessian::{Poly, Rational};

fn table() -> VarTable {
    VarTable::new(["x", "y", "z"]).unwrap()
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rational(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), small_rational()), 0..6)
        .prop_map(|terms| Poly::from_terms(&table(), terms))
}

fn mu() -> impl Strategy<Value = PentahedralData> {
    prop::array::uniform5(nonzero_rational()).prop_map(|m| PentahedralData::new(m).unwrap())
}

fn perm5() -> impl Strategy<Value = [usize; 5]> {
    Just([0usize, 1, 2, 3, 4]).prop_shuffle()
}

fn triple(variant: Normalization) -> impl Strategy<Value = BranchTriple> {
    (nonzero_rational(), nonzero_rational(), nonzero_rational())
        .prop_filter_map("admissible", move |(a, b, e)| BranchTriple::new(a, b, e, variant).ok())
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(), b in poly(), v in poly()) {
        let s = |p: &Poly| p.substitute("y", &v).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }

    #[test]
    fn evaluation_matches_substitution(a in poly(), pt in prop::array::uniform3(small_rational())) {
        let mut p = a.clone();
        for (i, v) in pt.iter().enumerate() {
            p = p.eval_at(i, v);
        }
        prop_assert_eq!(p.constant_value().unwrap_or_else(Rational::zero), a.eval(&pt));
    }

    #[test]
    fn display_parse_round_trip(a in poly()) {
        let text = a.to_string();
        prop_assert_eq!(Poly::parse(&table(), &text).unwrap(), a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn determinant_is_multiplicative(
        a in prop::collection::vec(small_rational(), 9),
        b in prop::collection::vec(small_rational(), 9),
    ) {
        let m = |v: &[Rational]| Matrix::from_rows(v.chunks(3).map(<[Rational]>::to_vec).collect()).unwrap();
        let (ma, mb) = (m(&a), m(&b));
        let prod = ma.checked_mul(&mb).unwrap();
        prop_assert_eq!(prod.determinant().unwrap(), ma.determinant().unwrap() * mb.determinant().unwrap());
    }

    #[test]
    fn condition_is_homogeneous_and_symmetric(d in mu(), perm in perm5()) {
        let f = cubic_condition(&d);
        let t = int(7);
        prop_assert_eq!(cubic_condition(&d.scaled(&t).unwrap()), &f * int(343));
        prop_assert_eq!(cubic_condition(&d.permuted(&perm)), f);
    }

    #[test]
    fn kummer_test_is_scale_invariant(d in mu(), t in nonzero_rational()) {
        prop_assert_eq!(is_kummer_hessian(&d), is_kummer_hessian(&d.scaled(&t).unwrap()));
    }

    #[test]
    fn hessian_relabels_with_mu(d in mu(), perm in perm5()) {
        // relabelling the coefficients and the coordinates together fixes H
        let h = hessian_in_p4(&d.as_polys());
        let permuted = hessian_in_p4(&d.permuted(&perm).as_polys());
        let mut full: Vec<usize> = (0..h.vars().len()).collect();
        full[..5].copy_from_slice(&perm);
        prop_assert_eq!(h.permute_vars(&full), permuted);
        prop_assert_eq!(hessian_closed_form(&d).total_degree(), Some(4));
    }

    #[test]
    fn alpha_symmetries(d in mu()) {
        if let Ok(a) = alpha_of(&d) {
            prop_assert_eq!(alpha_of(&d.permuted(&[0, 2, 1, 3, 4])).unwrap(), a.clone());
            prop_assert_eq!(alpha_of(&d.permuted(&[0, 1, 2, 4, 3])).unwrap(), a);
        }
    }

    #[test]
    fn minus_one_correspondence_round_trips(t in triple(Normalization::DMinusOne)) {
        let d = branch_to_mu(&t).unwrap();
        prop_assert!(is_kummer_hessian(&d));
        prop_assert_eq!(mu_to_branch(&d, Normalization::DMinusOne).unwrap(), t);
    }

    #[test]
    fn plus_one_image_on_locus(t in triple(Normalization::DPlusOne)) {
        prop_assert!(is_kummer_hessian(&branch_to_mu(&t).unwrap()));
    }

    #[test]
    fn two_torsion_translation_preserves_incidence_counts(p in 0usize..16, q in 0usize..16) {
        let pts = TwoTorsionLabel::all();
        let (p, q) = (pts[p], pts[q]);
        let on = |x: TwoTorsionLabel| TropeLabel::all().into_iter().filter(|&t| incidence(x, t)).count();
        prop_assert_eq!(on(p + q), 6);
        prop_assert_eq!(p + q + q, p);
    }

    #[test]
    fn residual_squares_to_reverse(i in 0usize..24) {
        let c = CyclicOrder::all()[i];
        prop_assert_eq!(c.residual().residual(), c.reverse());
        prop_assert_eq!(c.reverse().reverse(), c);
    }
}
