//! Hand-checked values through the public API.

use surfchar::mcg::SignCharacter;
use surfchar::trace::{evaluate_expression, rational, Multicurve, TraceExpression};
use surfchar::valuation::{Classification, Lamination, ValuationValue};
use surfchar::{Error, Surface};

fn s2() -> Surface {
    Surface::new(2).unwrap()
}

#[test]
fn word_problem() {
    let s = s2();
    assert!(s.is_trivial(&s.parse_word("a1 b1 A1 B1 a2 b2 A2 B2").unwrap()));
    assert!(s.is_trivial(&s.parse_word("b2 a2 B2 A2 b1 a1 B1 A1").unwrap()));
    assert!(!s.is_trivial(&s.parse_word("a1 b1 A1 B1").unwrap()));
    assert!(s.words_equal(&s.parse_word("a1 b1 A1").unwrap(), &s.parse_word("b2 a2 B2 A2 b1").unwrap()));
    assert!(matches!(Surface::new(1), Err(Error::GenusTooSmall(1))));
}

#[test]
fn curve_classes() {
    let s = s2();
    assert_eq!(s.parse_class("b1 a1").unwrap(), s.parse_class("A1 B1").unwrap());
    assert_eq!(s.parse_class("a1 a1").unwrap().power(), 2);
    assert!(matches!(s.parse_class("a1 A1"), Err(Error::TrivialClass)));
}

#[test]
fn intersection_numbers() {
    let s = s2();
    let i = |x: &str, y: &str| s.intersection_number(&s.parse_class(x).unwrap(), &s.parse_class(y).unwrap()).unwrap();
    assert_eq!(i("a1", "b1"), 1);
    assert_eq!(i("a1", "a2"), 0);
    assert_eq!(i("a1", "a1"), 0);
    assert_eq!(i("a1 a1", "b1"), 2);
    assert_eq!(i("a1 a1", "b1 b1 b1"), 6);
    assert_eq!(i("a1 b1 A1 B1", "a1"), 0);
    assert_eq!(i("a1 b1 A1 B1", "a2"), 0);
    let si = |x: &str| s.self_intersection(&s.parse_class(x).unwrap()).unwrap().count;
    assert_eq!(si("a1"), 0);
    assert_eq!(si("a1 a1"), 1);
    assert_eq!(si("a1 a1 a1"), 2);
    assert_eq!(si("a1 b1 A1 B1"), 0);
    assert_eq!(si("a1 a2"), 0);
}

#[test]
fn trace_identities() {
    let s = s2();
    let e = |w: &str| s.expand_trace(&s.parse_word(w).unwrap()).unwrap();
    let m = |t: &str| Multicurve::parse(&s, t).unwrap();
    assert_eq!(e(""), TraceExpression::scalar(rational(2)));
    let mut sq = TraceExpression::basis(m("a1^2"));
    sq.add_term(Multicurve::empty(), rational(-2));
    assert_eq!(e("a1 a1"), sq);
    // t_{a b} + t_{a B} = t_a t_b
    let sum = e("a1 b1").add(&e("a1 B1"));
    assert_eq!(sum, s.multiply_expressions(&e("a1"), &e("b1")).unwrap());
    let rho = s.random_representation(11).unwrap();
    for w in ["a1 b1 a1 b1 b2", "a1 a2 b1 b2 A2", "a1 a1 a1 b2 b2"] {
        let f = e(w);
        let d = evaluate_expression(&rho, &f) - rho.evaluate_trace(&s.parse_word(w).unwrap());
        assert!(d.norm() < 1e-8, "{w}");
    }
}

#[test]
fn valuations() {
    let s = s2();
    let l = Lamination::parse_inline(&s, "1 a1; 1/2 a2").unwrap();
    let f = s.expand_trace(&s.parse_word("b1 b2").unwrap()).unwrap();
    assert_eq!(s.valuate(&l, &f).unwrap(), ValuationValue::Finite("3/2".parse().unwrap()));
    assert_eq!(s.valuate(&l, &TraceExpression::zero()).unwrap(), ValuationValue::Bottom);
    assert_eq!(s.valuate(&l, &TraceExpression::unit()).unwrap(), ValuationValue::zero());
    let half_sep = Lamination::parse_inline(&s, "1/2 a1 b1 A1 B1").unwrap();
    assert_eq!(s.classify_discrete(&half_sep).unwrap(), Classification::Discrete);
    let l = Lamination::parse_inline(&s, "1/2 a1; 1/2 a2").unwrap();
    assert!(matches!(s.classify_discrete(&l).unwrap(), Classification::NotDiscrete(Some(_))));
    assert!(matches!(Lamination::parse_inline(&s, "1 a1; 1 b1"), Err(Error::NotDisjoint(..))));
}

#[test]
fn complement() {
    let s = s2();
    let r = s.complement_report(&s.parse_class("a1").unwrap(), &s.parse_class("b1").unwrap()).unwrap();
    assert_eq!((r.crossing_count, r.euler_total, r.face_count), (1, -1, 0));
    let r = s.complement_report(&s.parse_class("a1 b1 A1 B1").unwrap(), &s.parse_class("a1").unwrap()).unwrap();
    assert_eq!((r.crossing_count, r.euler_total), (0, -2));
}

#[test]
fn mapping_classes() {
    let s = s2();
    let t = s.twist_generator(0).unwrap();
    let b1 = s.parse_class("b1").unwrap();
    let img = t.apply_to_class(&s, &b1).unwrap();
    assert_eq!(img, s.parse_class("b1 a1").unwrap());
    let back = t.inverse().apply_to_class(&s, &img).unwrap();
    assert_eq!(back, b1);
    let a1 = s.parse_class("a1").unwrap();
    let tb = s.twist_generator(1).unwrap();
    assert_eq!(tb.apply_to_class(&s, &a1).unwrap(), s.parse_class("a1 B1").unwrap());
    assert_eq!(s.intersection_number(&a1, &s.parse_class("b1 a1").unwrap()).unwrap(), 1);
    let a = SignCharacter::parse(&s, "0010").unwrap();
    let f = TraceExpression::basis(Multicurve::parse(&s, "a2^1").unwrap());
    assert_eq!(a.act(&s, &f), f.scale(&rational(-1)));
}
