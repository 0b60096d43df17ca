use proptest::prelude::*;

use surfchar::mcg::SignCharacter;
use surfchar::trace::{evaluate_expression, rational, Multicurve, TraceExpression};
use surfchar::valuation::Lamination;
use surfchar::{GroupWord, Letter, Surface};

fn word(genus: usize, max: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec(0..4 * genus as u8, 0..=max).prop_map(|codes| GroupWord::new(codes.into_iter().map(Letter::from_code).collect()))
}

fn nontrivial(s: &Surface, w: &GroupWord) -> bool {
    !s.is_trivial(w)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_a_word_invariant(w in word(2, 10), k in 0usize..8) {
        let s = Surface::new(2).unwrap();
        let r = s.relator().rotate(k);
        let mid = w.len() / 2;
        let mut letters = w.letters()[..mid].to_vec();
        letters.extend_from_slice(r.letters());
        letters.extend_from_slice(&w.letters()[mid..]);
        let padded = GroupWord::new(letters);
        prop_assert!(s.words_equal(&w, &padded));
        prop_assert!(s.is_trivial(&w.concat(&w.inverse())));
    }

    #[test]
    fn classes_ignore_rotation_and_inversion(w in word(2, 8), k in 0usize..8) {
        let s = Surface::new(2).unwrap();
        prop_assume!(nontrivial(&s, &w));
        let c = s.canonical_class(&w).unwrap();
        prop_assert_eq!(&s.canonical_class(&w.rotate(k % w.len())).unwrap(), &c);
        prop_assert_eq!(&s.canonical_class(&w.inverse()).unwrap(), &c);
    }

    #[test]
    fn intersection_is_symmetric(x in word(2, 5), y in word(2, 5)) {
        let s = Surface::new(2).unwrap();
        prop_assume!(nontrivial(&s, &x) && nontrivial(&s, &y));
        let (x, y) = (s.canonical_class(&x).unwrap(), s.canonical_class(&y).unwrap());
        prop_assert_eq!(s.intersection_number(&x, &y).unwrap(), s.intersection_number(&y, &x).unwrap());
    }

    #[test]
    fn expansion_matches_evaluation(w in word(2, 8), seed in 0u64..1000) {
        let s = Surface::new(2).unwrap();
        let f = s.expand_trace(&w).unwrap();
        let rho = s.random_representation(seed).unwrap();
        let d = (evaluate_expression(&rho, &f) - rho.evaluate_trace(&w)).norm();
        prop_assert!(d < 1e-8, "{} {}", w, d);
    }

    #[test]
    fn multiplication_is_commutative(x in word(2, 4), y in word(2, 4)) {
        let s = Surface::new(2).unwrap();
        let (f, g) = (s.expand_trace(&x).unwrap(), s.expand_trace(&y).unwrap());
        prop_assert_eq!(s.multiply_expressions(&f, &g).unwrap(), s.multiply_expressions(&g, &f).unwrap());
    }

    #[test]
    fn sign_action_is_an_involutive_character(bits in prop::collection::vec(any::<bool>(), 4), x in word(2, 4), y in word(2, 4)) {
        let s = Surface::new(2).unwrap();
        let a = SignCharacter::new(bits);
        let (f, g) = (s.expand_trace(&x).unwrap(), s.expand_trace(&y).unwrap());
        prop_assert_eq!(&a.act(&s, &a.act(&s, &f)), &f);
        let lhs = a.act(&s, &s.multiply_expressions(&f, &g).unwrap());
        let rhs = s.multiply_expressions(&a.act(&s, &f), &a.act(&s, &g)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn twists_are_invertible_on_classes(which in 0usize..5, w in word(2, 6)) {
        let s = Surface::new(2).unwrap();
        prop_assume!(nontrivial(&s, &w));
        let c = s.canonical_class(&w).unwrap();
        let t = s.twist_generator(which).unwrap();
        let img = t.apply_to_class(&s, &c).unwrap();
        prop_assert_eq!(t.inverse().apply_to_class(&s, &img).unwrap(), c);
    }

    #[test]
    fn valuation_scales_with_weights(w in word(2, 6), k in 1i64..6) {
        let s = Surface::new(2).unwrap();
        let l = Lamination::parse_inline(&s, "1 a1; 1/2 a2 b2 A2 B2").unwrap();
        let f = s.expand_trace(&w).unwrap();
        let scaled = l.scale(&rational(k));
        let v = s.valuate(&l, &f).unwrap();
        let expected = match v {
            surfchar::valuation::ValuationValue::Finite(x) => surfchar::valuation::ValuationValue::Finite(x * rational(k)),
            b => b,
        };
        prop_assert_eq!(s.valuate(&scaled, &f).unwrap(), expected);
    }

    #[test]
    fn multiplicativity_on_basis(x in word(2, 5), y in word(2, 5), which in 0usize..4) {
        let s = Surface::new(2).unwrap();
        let laminations = ["1 a1", "1 b1; 2 a2", "1/2 a1 b1 A1 B1", "1 a1 b1; 1/3 b2"];
        let l = Lamination::parse_inline(&s, laminations[which]).unwrap();
        let f = TraceExpression::basis(first_basis(&s, &x));
        let g = TraceExpression::basis(first_basis(&s, &y));
        prop_assert!(s.multiplicativity_check(&l, &f, &g).unwrap().holds());
    }
}

fn first_basis(s: &Surface, w: &GroupWord) -> Multicurve {
    s.expand_trace(w).unwrap().terms().next().map(|(m, _)| m.clone()).unwrap_or_else(Multicurve::empty)
}
