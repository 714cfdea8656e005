//! Property tests for polynomial arithmetic and Gröbner bases over small
//! random inputs.

use kaehler_core::groebner::IdealHandle;
use kaehler_core::{parse_polynomial, Field, Monomial, Polynomial, Ring, DEFAULT_PRIME};
use proptest::prelude::*;

fn ring(field: Field) -> Ring {
    Ring::projective(field, 2)
}

/// Up to four terms of degree <= 3 in `X0, X1, X2`.
fn poly_strategy(field: Field) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0u16..=3, 0u16..=3, 0u16..=3), -5i64..=5), 0..=4).prop_map(move |terms| {
        let r = ring(field);
        let terms = terms
            .into_iter()
            .map(|((a, b, c), k)| (Monomial::from_exponents([a, b, c]), field.from_i64(k)))
            .collect();
        Polynomial::from_terms(r, terms)
    })
}

fn any_field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::prime(DEFAULT_PRIME).unwrap())]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn display_parses_back(f in poly_strategy(Field::Rational)) {
        let text = f.to_string();
        prop_assert_eq!(parse_polynomial(ring(Field::Rational), &text).unwrap(), f);
    }

    #[test]
    fn ring_axioms((a, b, c) in any_field().prop_flat_map(|k| (poly_strategy(k), poly_strategy(k), poly_strategy(k)))) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&(&a - &b) + &b) == a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly_strategy(Field::Rational), b in poly_strategy(Field::Rational), p in prop::array::uniform3(-4i64..=4)) {
        let pt: Vec<_> = p.iter().map(|&v| Field::Rational.from_i64(v)).collect();
        let lhs = (&a * &b).evaluate(&pt).unwrap();
        let rhs = &a.evaluate(&pt).unwrap() * &b.evaluate(&pt).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn groebner_basis_reduces_its_ideal(gens in prop::collection::vec(poly_strategy(Field::Rational), 1..=3), m in poly_strategy(Field::Rational)) {
        let r = ring(Field::Rational);
        let ideal = IdealHandle::new(r, gens.clone()).unwrap();
        for g in &gens {
            prop_assert!(ideal.contains(g));
            prop_assert!(ideal.normal_form(&(g * &m)).is_zero());
        }
        let nf = ideal.normal_form(&m);
        prop_assert!(ideal.contains(&(&m - &nf)));
        prop_assert_eq!(ideal.normal_form(&nf), nf);
    }
}
