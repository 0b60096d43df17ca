use super::*;
use crate::trace::evaluate::evaluate_expression;
use crate::trace::expression::rational;

fn s2() -> Surface {
    Surface::new(2).unwrap()
}

fn word(s: &Surface, w: &str) -> GroupWord {
    s.parse_word(w).unwrap()
}

fn basis(s: &Surface, m: &str) -> TraceExpression {
    TraceExpression::basis(Multicurve::parse(s, m).unwrap())
}

#[test]
fn twist_convention() {
    let s = s2();
    let t = s.twist_generator(0).unwrap();
    assert_eq!(t.apply_to_word(&s, &word(&s, "b1")).unwrap(), s.normalize_word(&word(&s, "b1a1")).unwrap());
    assert_eq!(t.apply_to_word(&s, &word(&s, "a1")).unwrap(), word(&s, "a1"));
    for g in ["a2", "b2"] {
        assert_eq!(t.apply_to_word(&s, &word(&s, g)).unwrap(), word(&s, g));
    }
}

#[test]
fn bad_index() {
    let s = s2();
    assert!(matches!(s.twist_generator(5), Err(Error::BadIndex { index: 5, count: 5 })));
}

#[test]
fn humphries_chain() {
    for g in [2, 3] {
        let s = Surface::new(g).unwrap();
        let curves: Vec<CurveClass> = (0..humphries_count(g)).map(|i| s.humphries_curve(i).unwrap()).collect();
        // consecutive curves of the chain a1, b1, c1, ..., b_g meet once, others are disjoint
        let chain = &curves[..2 * g];
        for i in 0..chain.len() {
            for j in i + 1..chain.len() {
                let want = u64::from(j == i + 1);
                assert_eq!(s.intersection_number(&chain[i], &chain[j]).unwrap(), want, "{} {}", chain[i], chain[j]);
            }
        }
        let last = &curves[2 * g];
        for (i, c) in chain.iter().enumerate() {
            assert_eq!(s.intersection_number(last, c).unwrap(), u64::from(i == 3), "{last} {c}");
        }
    }
}

#[test]
fn relator_and_inverse_checks() {
    for g in [2, 3] {
        let s = Surface::new(g).unwrap();
        for i in 0..humphries_count(g) {
            let t = s.twist_generator(i).unwrap();
            assert!(matches!(t.relator_image(&s), RelatorImage::Conjugate(_)), "genus {g} twist {i}");
            assert!(matches!(t.inverse().relator_image(&s), RelatorImage::Conjugate(_)));
            assert!(t.inverts(&s));
        }
    }
}

#[test]
fn validating_constructor_rejects_non_automorphisms() {
    let s = s2();
    let g = |w: &str| word(&s, w);
    let id = MappingClass::identity(2);
    let bad = vec![g("a1"), g("a1"), g("a2"), g("b2")];
    assert!(MappingClass::new(&s, bad, id.images().to_vec()).is_err());
    let t = s.twist_generator(0).unwrap();
    assert!(MappingClass::new(&s, t.images().to_vec(), id.images().to_vec()).is_err());
    assert!(MappingClass::new(&s, t.images().to_vec(), t.inverse().images().to_vec()).is_ok());
}

#[test]
fn serialization_round_trip() {
    let s = s2();
    let t = s.twist_generator(2).unwrap();
    let text = t.serialize();
    assert_eq!(text.lines().count(), 4);
    let back = MappingClass::parse(&s, &text, &t.inverse().serialize()).unwrap();
    assert_eq!(back, t);
    assert!(MappingClass::parse(&s, "a1\ta1\n", "").is_err());
}

#[test]
fn composition() {
    let s = s2();
    let t = s.twist_generator(1).unwrap();
    let id = t.compose(&t.inverse());
    for x in s.generators() {
        let x = GroupWord::new(vec![x]);
        assert!(s.words_equal(&id.substitute(&x), &x));
    }
    // braid relation between twists along curves meeting once
    let a = s.twist_generator(0).unwrap();
    let lhs = a.compose(&t).compose(&a);
    let rhs = t.compose(&a).compose(&t);
    for c in s.enumerate_simple_classes(3).unwrap().iter() {
        assert_eq!(lhs.apply_to_class(&s, c).unwrap(), rhs.apply_to_class(&s, c).unwrap());
    }
}

#[test]
fn expression_action() {
    let s = s2();
    let f = basis(&s, "b1^1").add(&basis(&s, "a1^1,a2^1").scale(&rational(3)));
    assert_eq!(MappingClass::identity(2).apply_to_expression(&s, &f).unwrap(), f);
    let t = s.twist_generator(0).unwrap();
    assert_eq!(t.apply_to_expression(&s, &basis(&s, "b1^1")).unwrap(), basis(&s, "b1a1^1"));
}

#[test]
fn intersections_are_invariant() {
    let s = s2();
    let universe = s.enumerate_classes(2).unwrap();
    for i in 0..humphries_count(2) {
        let t = s.twist_generator(i).unwrap();
        let images: Vec<CurveClass> = universe.iter().map(|c| t.apply_to_class(&s, c).unwrap()).collect();
        for (x, fx) in universe.iter().zip(&images) {
            assert_eq!(s.is_simple(x).unwrap(), s.is_simple(fx).unwrap());
            for (y, fy) in universe.iter().zip(&images) {
                assert_eq!(
                    s.intersection_number(x, y).unwrap(),
                    s.intersection_number(fx, fy).unwrap(),
                    "twist {i}: {x} {y}"
                );
            }
        }
    }
}

#[test]
fn sign_action() {
    let s = s2();
    let a = SignCharacter::parse(&s, "1000").unwrap();
    assert_eq!(a.act(&s, &basis(&s, "a1^1")), basis(&s, "a1^1").scale(&rational(-1)));
    assert_eq!(a.act(&s, &basis(&s, "b1^1")), basis(&s, "b1^1"));
    assert_eq!(a.act(&s, &basis(&s, "a1^2")), basis(&s, "a1^2"));
    let f = basis(&s, "a1^1,a2^1").add(&basis(&s, "a1b1^1")).add(&TraceExpression::unit());
    for c in SignCharacter::all(2) {
        assert_eq!(c.act(&s, &c.act(&s, &f)), f);
    }
    assert_eq!(SignCharacter::zero(2).act(&s, &f), f);
    assert_eq!(SignCharacter::all(2).len(), 16);
    assert!(SignCharacter::parse(&s, "10").is_err());
    assert!(SignCharacter::parse(&s, "10x0").is_err());
    assert_eq!(a.to_string(), "1000");
}

#[test]
fn sign_character_respects_products() {
    let s = s2();
    let a = SignCharacter::parse(&s, "1000").unwrap();
    let (x, y) = (basis(&s, "a1^1"), basis(&s, "b1^1"));
    let lhs = a.act(&s, &s.multiply_expressions(&x, &y).unwrap());
    let rhs = s.multiply_expressions(&a.act(&s, &x), &a.act(&s, &y)).unwrap();
    assert_eq!(lhs, rhs);
    assert_eq!(lhs, s.multiply_expressions(&x, &y).unwrap().scale(&rational(-1)));
}

#[test]
fn automorphism_checks() {
    let s = s2();
    assert!(s.verify_algebra_automorphism(&Action::Identity, 10, 1).unwrap().holds());
    let t = s.twist_generator(0).unwrap();
    let r = s.verify_algebra_automorphism(&Action::Twist(t), 50, 7).unwrap();
    assert!(r.holds(), "{r}");
    assert_eq!(r.checked, 50);
    let a = SignCharacter::parse(&s, "0110").unwrap();
    assert!(s.verify_algebra_automorphism(&Action::Sign(a), 20, 3).unwrap().holds());
}

#[test]
fn semidirect_relation() {
    let s = s2();
    let t = s.twist_generator(0).unwrap();
    let b = SignCharacter::parse(&s, "0100").unwrap();
    let r = s.semidirect_check(&t, &b, 2).unwrap();
    assert!(r.holds(), "{r}");
    // b1 -> b1a1, so the dual of a1 pulls back to the duals of a1 and b1
    assert_eq!(b.pull_back(&s, &t).to_string(), "0100");
    assert_eq!(SignCharacter::parse(&s, "1000").unwrap().pull_back(&s, &t).to_string(), "1100");
    assert!(s.semidirect_check(&t, &SignCharacter::zero(2), 2).unwrap().holds());
    assert!(s.semidirect_check(&MappingClass::identity(2), &b, 2).unwrap().holds());
}

#[test]
fn central_twist_matches_sign_action() {
    let s = s2();
    let rho = s.random_representation(5).unwrap();
    let f = basis(&s, "a1b1^1").add(&basis(&s, "a1^1,a2^2")).add(&basis(&s, "b1^1"));
    for a in SignCharacter::all(2) {
        let twisted = rho.central_twist(a.bits());
        let lhs = evaluate_expression(&twisted, &f);
        let rhs = evaluate_expression(&rho, &a.act(&s, &f));
        assert!((lhs - rhs).norm() < 1e-8, "{a}: {lhs} {rhs}");
    }
}
